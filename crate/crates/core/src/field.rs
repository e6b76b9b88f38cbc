//! Coefficient fields for module computations.
//!
//! Everything downstream of the Hecke algebra is exact. The default field is
//! the rationals; a small prime field is available for spot checks.

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use num_traits::{One, Zero};

/// Exact rationals with 128-bit numerator and denominator.
pub type Q = num_rational::Ratio<i128>;

pub trait Field:
    Clone
    + PartialEq
    + Eq
    + Hash
    + fmt::Debug
    + fmt::Display
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
    + 'static
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn inv(&self) -> Option<Self>;
    fn from_i64(v: i64) -> Self;
    /// Image of a rational number, if its denominator is invertible.
    fn from_q(q: &Q) -> Option<Self>;

    fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            base = base.clone() * base;
            e >>= 1;
        }
        acc
    }

    /// Integer power; negative exponents invert. Panics on `0^-k`.
    fn powi(&self, e: i64) -> Self {
        if e >= 0 {
            self.pow(e as u64)
        } else {
            self.inv().expect("negative power of zero").pow(e.unsigned_abs())
        }
    }
}

impl Field for Q {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn from_i64(v: i64) -> Self {
        Q::from_integer(v as i128)
    }
    fn from_q(q: &Q) -> Option<Self> {
        Some(*q)
    }
}

/// Prime field `Z/P`. `P` must be prime and below 2^31.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Fp<const P: u64>(u64);

impl<const P: u64> Fp<P> {
    pub fn new(v: i128) -> Self {
        Fp(v.rem_euclid(P as i128) as u64)
    }
    pub fn value(self) -> u64 {
        self.0
    }
}

impl<const P: u64> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Add for Fp<P> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Fp((self.0 + o.0) % P)
    }
}
impl<const P: u64> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Fp((self.0 + P - o.0) % P)
    }
}
impl<const P: u64> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Fp(self.0 * o.0 % P)
    }
}
impl<const P: u64> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Fp((P - self.0) % P)
    }
}

impl<const P: u64> Field for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn one() -> Self {
        Fp(1 % P)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn inv(&self) -> Option<Self> {
        if self.0 == 0 {
            return None;
        }
        // Fermat.
        Some(Field::pow(self, P - 2))
    }
    fn from_i64(v: i64) -> Self {
        Fp::new(v as i128)
    }
    fn from_q(q: &Q) -> Option<Self> {
        let den = Fp::<P>::new(*q.denom());
        den.inv().map(|d| Fp::<P>::new(*q.numer()) * d)
    }
}

/// Formats a rational as `p` or `p/q`.
pub fn fmt_q(q: &Q) -> String {
    if q.is_integer() {
        format!("{}", q.numer())
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses `p`, `-p` or `p/q`.
pub fn parse_q(s: &str) -> Option<Q> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: i128 = n.trim().parse().ok()?;
            let d: i128 = d.trim().parse().ok()?;
            if d == 0 {
                None
            } else {
                Some(Q::new(n, d))
            }
        }
        None => s.parse::<i128>().ok().map(Q::from_integer),
    }
}

/// Floor of a rational.
pub fn floor_q(q: &Q) -> i128 {
    q.numer().div_floor(q.denom())
}
