//! Laurent polynomials in `v` with integer coefficients, `q = v²`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i32, i64>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(0, c)
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    /// `c v^e`.
    pub fn monomial(e: i32, c: i64) -> Self {
        let mut terms = BTreeMap::new();
        if c != 0 {
            terms.insert(e, c);
        }
        LaurentPoly { terms }
    }

    pub fn v() -> Self {
        Self::monomial(1, 1)
    }

    pub fn q() -> Self {
        Self::monomial(2, 1)
    }

    /// `v^e`, for any integer `e`.
    pub fn v_pow(e: i32) -> Self {
        Self::monomial(e, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: i32) -> i64 {
        self.terms.get(&e).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, i64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn min_degree(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    fn add_term(&mut self, e: i32, c: i64) {
        if c == 0 {
            return;
        }
        let slot = self.terms.entry(e).or_insert(0);
        *slot += c;
        if *slot == 0 {
            self.terms.remove(&e);
        }
    }

    /// Multiplication by `v^e`.
    pub fn shift(&self, e: i32) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(&k, &c)| (k + e, c)).collect(),
        }
    }

    /// The value at `q = 0`; fails unless every exponent is a nonnegative
    /// even integer.
    pub fn at_q_zero(&self) -> Result<i64> {
        match self.terms.keys().find(|&&e| e < 0 || e % 2 != 0) {
            Some(e) => Err(Error::Violation(format!("term v^{e} in {self} has no value at q = 0"))),
            None => Ok(self.coeff(0)),
        }
    }

    /// Whether only even powers of `v` occur.
    pub fn is_polynomial_in_q(&self) -> bool {
        self.terms.keys().all(|e| e % 2 == 0)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, &c) in &rhs.terms {
            out.add_term(e, c);
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, &c)| (e, -c)).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&a, &c) in &self.terms {
            for (&b, &d) in &rhs.terms {
                out.add_term(a + b, c * d);
            }
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let in_q = self.is_polynomial_in_q();
        let (var, div) = if in_q { ("q", 2) } else { ("v", 1) };
        for (i, (&e, &c)) in self.terms.iter().rev().enumerate() {
            let e = e / div;
            let sign = if c < 0 { "-" } else { "+" };
            if i == 0 {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let a = c.unsigned_abs();
            match e {
                0 => write!(f, "{a}")?,
                _ => {
                    if a != 1 {
                        write!(f, "{a}*")?;
                    }
                    if e == 1 {
                        write!(f, "{var}")?;
                    } else {
                        write!(f, "{var}^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let q = LaurentPoly::q();
        let one = LaurentPoly::one();
        let a = &q - &one;
        let b = &q + &one;
        assert_eq!(&a * &b, &(&q * &q) - &one);
        assert_eq!(format!("{}", &a * &b), "q^2 - 1");
        assert!((&a - &a).is_zero());
        assert_eq!(format!("{}", LaurentPoly::v_pow(-1)), "v^-1");
    }

    #[test]
    fn specialization() {
        let p = &LaurentPoly::q() + &LaurentPoly::constant(-3);
        assert_eq!(p.at_q_zero().unwrap(), -3);
        assert!(LaurentPoly::v_pow(-2).at_q_zero().is_err());
        assert!(LaurentPoly::v().at_q_zero().is_err());
        assert_eq!(LaurentPoly::v_pow(-2).shift(2), LaurentPoly::one());
    }
}
