//! The generic Iwahori-Hecke algebra of an extended affine Weyl group, with
//! coefficients in `Z[v, v^{-1}]`, and its specialization at `q = 0`.
//!
//! An element is a finite sum `Σ c_w T_w`. The coefficient type selects the
//! algebra: [`LaurentPoly`] for the generic algebra, `i64` for the 0-Hecke
//! algebra.

use std::collections::BTreeMap;
use std::fmt::Debug;
use std::sync::Arc;

use serde::Serialize;

use crate::affine::{AffineElement, AffineWeyl};
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::nodeset::NodeSet;

/// Coefficient ring of a Hecke algebra.
pub trait Coeff: Clone + PartialEq + Debug + std::fmt::Display {
    const MODE: &'static str;
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(c: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    /// `(a, b)` with `T_s² = a T_s + b`.
    fn quadratic() -> (Self, Self);
    /// `c` with `ι(T_s) = -T_s + c`.
    fn iota_constant() -> Self;
}

impl Coeff for i64 {
    const MODE: &'static str = "zero";
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn from_i64(c: i64) -> Self {
        c
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn quadratic() -> (Self, Self) {
        (-1, 0)
    }
    fn iota_constant() -> Self {
        -1
    }
}

impl Coeff for LaurentPoly {
    const MODE: &'static str = "generic";
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn one() -> Self {
        LaurentPoly::one()
    }
    fn from_i64(c: i64) -> Self {
        LaurentPoly::constant(c)
    }
    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn quadratic() -> (Self, Self) {
        (&LaurentPoly::q() - &LaurentPoly::one(), LaurentPoly::q())
    }
    fn iota_constant() -> Self {
        &LaurentPoly::q() - &LaurentPoly::one()
    }
}

/// A finite linear combination of basis elements `T_w`.
#[derive(Clone, Debug, PartialEq)]
pub struct HeckeElement<C: Coeff> {
    terms: BTreeMap<AffineElement, C>,
}

pub type GenericElement = HeckeElement<LaurentPoly>;
pub type ZeroElement = HeckeElement<i64>;

impl<C: Coeff> Default for HeckeElement<C> {
    fn default() -> Self {
        HeckeElement { terms: BTreeMap::new() }
    }
}

impl<C: Coeff> HeckeElement<C> {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `T_e`.
    pub fn basis(e: &AffineElement) -> Self {
        Self::term(e, C::one())
    }

    pub fn term(e: &AffineElement, c: C) -> Self {
        let mut out = Self::zero();
        out.add_term(e, c);
        out
    }

    pub fn scalar(c: C, g: &AffineWeyl) -> Self {
        Self::term(&g.identity(), c)
    }

    pub fn add_term(&mut self, e: &AffineElement, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(e) {
            Some(slot) => {
                *slot = slot.add(&c);
                if slot.is_zero() {
                    self.terms.remove(e);
                }
            }
            None => {
                self.terms.insert(e.clone(), c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: &AffineElement) -> C {
        self.terms.get(e).cloned().unwrap_or_else(C::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&AffineElement, &C)> {
        self.terms.iter()
    }

    /// The unique term, if there is exactly one.
    pub fn single(&self) -> Option<(&AffineElement, &C)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(e, c.clone());
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&C::from_i64(-1))
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero();
        for (e, d) in &self.terms {
            out.add_term(e, d.mul(c));
        }
        out
    }

    /// Rewrites keys through `f` (e.g. a parabolic embedding).
    pub fn map_keys(&self, f: impl Fn(&AffineElement) -> AffineElement) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            out.add_term(&f(e), c.clone());
        }
        out
    }
}

impl GenericElement {
    /// Specialization at `q = 0`; fails on a coefficient with a negative or
    /// half-integral power of `q`.
    pub fn at_q_zero(&self) -> Result<ZeroElement> {
        let mut out = ZeroElement::zero();
        for (e, c) in &self.terms {
            out.add_term(e, c.at_q_zero()?);
        }
        Ok(out)
    }
}

/// One `{element, coefficient}` record of the JSON term list.
#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct TermRecord {
    pub element: String,
    pub coefficient: String,
}

/// Hecke algebra of `W_J` (or of `W̃` when `J = F₀`).
#[derive(Clone)]
pub struct HeckeAlgebra {
    g: Arc<AffineWeyl>,
}

impl HeckeAlgebra {
    pub fn new(g: Arc<AffineWeyl>) -> Self {
        HeckeAlgebra { g }
    }

    pub fn group(&self) -> &AffineWeyl {
        &self.g
    }

    pub fn one<C: Coeff>(&self) -> HeckeElement<C> {
        HeckeElement::basis(&self.g.identity())
    }

    pub fn t<C: Coeff>(&self, e: &AffineElement) -> HeckeElement<C> {
        HeckeElement::basis(e)
    }

    /// `a · T_s`.
    pub fn mul_simple_right<C: Coeff>(&self, a: &HeckeElement<C>, s: usize) -> HeckeElement<C> {
        let g = &*self.g;
        let (qa, qb) = C::quadratic();
        let mut out = HeckeElement::zero();
        for (x, c) in a.terms() {
            let xs = g.mul(x, g.s(s));
            if g.length(&xs) > g.length(x) {
                out.add_term(&xs, c.clone());
            } else {
                out.add_term(x, c.mul(&qa));
                out.add_term(&xs, c.mul(&qb));
            }
        }
        out
    }

    /// `T_s · a`.
    pub fn mul_simple_left<C: Coeff>(&self, s: usize, a: &HeckeElement<C>) -> HeckeElement<C> {
        let g = &*self.g;
        let (qa, qb) = C::quadratic();
        let mut out = HeckeElement::zero();
        for (x, c) in a.terms() {
            let sx = g.mul(g.s(s), x);
            if g.length(&sx) > g.length(x) {
                out.add_term(&sx, c.clone());
            } else {
                out.add_term(x, c.mul(&qa));
                out.add_term(&sx, c.mul(&qb));
            }
        }
        out
    }

    fn mul_omega_right<C: Coeff>(&self, a: &HeckeElement<C>, tau: &AffineElement) -> HeckeElement<C> {
        a.map_keys(|x| self.g.mul(x, tau))
    }

    /// `a · T_y`, expanding `T_y` along its reduced word.
    pub fn mul_basis_right<C: Coeff>(&self, a: &HeckeElement<C>, y: &AffineElement) -> HeckeElement<C> {
        let (word, tau) = self.g.reduced_word(y);
        let mut out = a.clone();
        for s in word {
            out = self.mul_simple_right(&out, s);
        }
        self.mul_omega_right(&out, &tau)
    }

    pub fn mul<C: Coeff>(&self, a: &HeckeElement<C>, b: &HeckeElement<C>) -> HeckeElement<C> {
        let mut out = HeckeElement::zero();
        for (y, c) in b.terms() {
            out = out.add(&self.mul_basis_right(a, y).scale(c));
        }
        out
    }

    /// `T_x T_y` in the 0-Hecke algebra, which is `0` or `±T_z`.
    pub fn mul_monomial(&self, x: &AffineElement, y: &AffineElement) -> Option<(AffineElement, i64)> {
        let p = self.mul_basis_right(&ZeroElement::basis(x), y);
        assert!(p.len() <= 1, "0-Hecke product of basis elements is not monomial");
        p.single().map(|(e, &c)| (e.clone(), c))
    }

    pub fn pow<C: Coeff>(&self, a: &HeckeElement<C>, n: u64) -> HeckeElement<C> {
        let mut out = self.one();
        for _ in 0..n {
            out = self.mul(&out, a);
        }
        out
    }

    /// `T_e^n` in the 0-Hecke algebra.
    pub fn t_power(&self, e: &AffineElement, n: u64) -> ZeroElement {
        let mut out = self.one();
        for _ in 0..n {
            out = self.mul_basis_right(&out, e);
        }
        out
    }

    /// `ι(T_s) = -T_s + c`.
    fn iota_simple<C: Coeff>(&self, s: usize) -> HeckeElement<C> {
        let mut out = HeckeElement::term(self.g.s(s), C::from_i64(-1));
        out.add_term(&self.g.identity(), C::iota_constant());
        out
    }

    /// `ιT_e = (-q)^{ℓ(e)} T_{e^{-1}}^{-1}`, as a product of `ι(T_s)` along a
    /// reduced word.
    pub fn iota_basis<C: Coeff>(&self, e: &AffineElement) -> HeckeElement<C> {
        let (word, tau) = self.g.reduced_word(e);
        let mut out: HeckeElement<C> = self.one();
        for s in word {
            out = self.mul(&out, &self.iota_simple(s));
        }
        self.mul_omega_right(&out, &tau)
    }

    pub fn iota<C: Coeff>(&self, a: &HeckeElement<C>) -> HeckeElement<C> {
        let mut out = HeckeElement::zero();
        for (e, c) in a.terms() {
            out = out.add(&self.iota_basis::<C>(e).scale(c));
        }
        out
    }

    /// `T_e^{-1}`, via `T_s^{-1} = q^{-1} T_s + (q^{-1} - 1)`.
    pub fn t_inverse(&self, e: &AffineElement) -> GenericElement {
        let g = &*self.g;
        let (word, tau) = g.reduced_word(e);
        let qinv = LaurentPoly::v_pow(-2);
        let c = &qinv - &LaurentPoly::one();
        let mut out = GenericElement::basis(&g.inverse(&tau));
        for &s in word.iter().rev() {
            let ts = self.mul_simple_right(&out, s).scale(&qinv);
            out = ts.add(&out.scale(&c));
        }
        out
    }

    /// `E_e` in the generic algebra and at `q = 0`, computed for two
    /// decompositions `λ = μ₁ - μ₂` which must agree.
    pub fn e_basis(&self, e: &AffineElement) -> Result<(GenericElement, ZeroElement)> {
        self.e_basis_checked(e, 2)
    }

    /// `E_e`, computed from `choices` successive multiples of the deep
    /// vector and required to agree across them.
    pub fn e_basis_checked(&self, e: &AffineElement, choices: i64) -> Result<(GenericElement, ZeroElement)> {
        let g = &*self.g;
        if !g.is_full() {
            return Err(Error::Violation("E-basis requires the full group".into()));
        }
        let rd = g.datum();
        let weyl = rd.weyl();
        // e = t^{λ'} w = w t^λ with λ = w^{-1} λ'.
        let lambda = weyl.act(weyl.inverse(e.w), &e.t);
        let deep = rd.deep_vector(NodeSet::EMPTY);
        let need = (0..rd.semisimple_rank())
            .map(|i| {
                let p = rd.root(i).pair(&lambda);
                let d = rd.root(i).pair(&deep);
                if p >= 0 { 0 } else { (-p + d - 1) / d }
            })
            .max()
            .unwrap_or(0);
        let mut results = Vec::new();
        for k in need..need + choices.max(1) {
            let mu2: Vec<i64> = deep.iter().map(|x| x * k).collect();
            let mu1: Vec<i64> = lambda.iter().zip(&mu2).map(|(a, b)| a + b).collect();
            debug_assert!(rd.is_dominant(&mu1) && rd.is_dominant(&mu2));
            let t1 = g.translation(&mu1);
            let t2 = g.translation(&mu2);
            let w_mu1 = g.mul(&g.finite(e.w), &t1);
            let exp = g.length(&t2) as i64 - g.length(&t1) as i64 - i64::from(weyl.length(e.w))
                + g.length(e) as i64;
            let prod = self.mul(&GenericElement::basis(&w_mu1), &self.t_inverse(&t2));
            results.push(prod.scale(&LaurentPoly::v_pow(exp as i32)));
        }
        if results.iter().any(|r| r != &results[0]) {
            return Err(Error::Violation(format!(
                "E-basis element of {} depends on the decomposition of λ",
                g.display(e)
            )));
        }
        let generic = results.swap_remove(0);
        let zero = generic.at_q_zero().map_err(|err| {
            Error::Violation(format!("E-basis element of {} is not integral: {err}", g.display(e)))
        })?;
        Ok((generic, zero))
    }

    /// Relabels a `W_J`-element into the full algebra; every term must be
    /// `J`-positive.
    pub fn parabolic_embed<C: Coeff>(sys: &AffineWeyl, a: &HeckeElement<C>) -> Result<HeckeElement<C>> {
        for (e, _) in a.terms() {
            if !sys.is_j_positive(e)? {
                return Err(Error::NotJPositive(sys.display(e)));
            }
        }
        Ok(a.clone())
    }

    pub fn records<C: Coeff>(&self, a: &HeckeElement<C>) -> Vec<TermRecord> {
        a.terms()
            .map(|(e, c)| TermRecord {
                element: self.g.display(e),
                coefficient: c.to_string(),
            })
            .collect()
    }

    pub fn display<C: Coeff>(&self, a: &HeckeElement<C>) -> String {
        if a.is_zero() {
            return "0".into();
        }
        a.terms()
            .map(|(e, c)| format!("({c})*T[{}]", self.g.display(e)))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::context::Context;

    fn alg(name: &str) -> (Context, HeckeAlgebra) {
        let c = Context::load(name).unwrap();
        let h = HeckeAlgebra::new(c.group_arc().clone());
        (c, h)
    }

    #[test]
    fn quadratic_relations() {
        let (c, h) = alg("A2-ad");
        let g = c.group();
        let s = g.s(0);
        let z = h.mul(&ZeroElement::basis(s), &ZeroElement::basis(s));
        assert_eq!(z, ZeroElement::term(s, -1));
        let t = h.mul(&GenericElement::basis(s), &GenericElement::basis(s));
        let mut expect = GenericElement::term(s, &LaurentPoly::q() - &LaurentPoly::one());
        expect.add_term(&g.identity(), LaurentPoly::q());
        assert_eq!(t, expect);
    }

    #[test]
    fn braid_relations() {
        for name in ["A2-ad", "C2", "G2", "A1xA1"] {
            let (c, h) = alg(name);
            let g = c.group();
            let n = g.num_simple();
            for a in 0..n {
                for b in 0..a {
                    let pair = NodeSet::EMPTY.with(a).with(b);
                    if !g.is_finite_type(pair) {
                        continue;
                    }
                    let m = g.parabolic(pair).len() / 2;
                    let alt = |x: usize, y: usize| {
                        let mut out: GenericElement = h.one();
                        for i in 0..m {
                            out = h.mul_simple_right(&out, if i % 2 == 0 { x } else { y });
                        }
                        out
                    };
                    assert_eq!(alt(a, b), alt(b, a), "{name} {a} {b}");
                }
            }
        }
    }

    #[test]
    fn iota_on_simple_and_omega() {
        let (c, h) = alg("A2-sc");
        let g = c.group();
        let s = g.s(1);
        let mut expect = ZeroElement::term(s, -1);
        expect.add_term(&g.identity(), -1);
        assert_eq!(h.iota_basis::<i64>(s), expect);
        let tau = &g.omega().generators[0];
        assert_eq!(h.iota_basis::<i64>(tau), ZeroElement::basis(tau));
    }

    #[test]
    fn iota_matches_definition_and_is_involutive() {
        let (c, h) = alg("C2");
        let g = c.group();
        for level in g.enumerate(4).unwrap() {
            for e in level {
                let iota: GenericElement = h.iota_basis(&e);
                let l = g.length(&e) as i32;
                let sign = if l % 2 == 0 { 1 } else { -1 };
                let def = h.t_inverse(&g.inverse(&e)).scale(&LaurentPoly::monomial(2 * l, sign));
                assert_eq!(iota, def);
                assert_eq!(h.iota(&iota), GenericElement::basis(&e));
                let z: ZeroElement = h.iota_basis(&e);
                assert_eq!(iota.at_q_zero().unwrap(), z);
                assert_eq!(h.iota(&z), ZeroElement::basis(&e));
            }
        }
    }

    #[test]
    fn inverse_round_trip() {
        let (c, h) = alg("A2-sc");
        let g = c.group();
        for level in g.enumerate(4).unwrap() {
            for e in level {
                let p = h.mul(&h.t_inverse(&e), &GenericElement::basis(&e));
                assert_eq!(p, h.one());
            }
        }
    }

    #[test]
    fn e_basis_simple_cases() {
        let (c, h) = alg("A2-ad");
        let g = c.group();
        let lam = c.datum().deep_vector(NodeSet::EMPTY);
        let t = g.translation(&lam);
        assert_eq!(h.e_basis(&t).unwrap().1, ZeroElement::basis(&t));
        for w in c.datum().weyl().elements() {
            let e = g.finite(w);
            assert_eq!(h.e_basis(&e).unwrap().1, ZeroElement::basis(&e));
        }
    }

    #[test]
    fn zero_products_are_monomial() {
        let (c, h) = alg("A2-sc");
        let g = c.group();
        let elems: Vec<_> = g.enumerate(3).unwrap().into_iter().flatten().collect();
        for x in &elems {
            for y in &elems {
                if let Some((_, c)) = h.mul_monomial(x, y) {
                    assert!(c == 1 || c == -1);
                }
            }
        }
    }

    #[test]
    fn parabolic_embedding_requires_positivity() {
        let c = Context::load("A2-ad").unwrap();
        let j = NodeSet::single(0);
        let sys = c.system(j);
        let u = sys.s(0).clone();
        let a = ZeroElement::basis(&u);
        assert_eq!(HeckeAlgebra::parabolic_embed(&sys, &a).unwrap(), a);
        let bad = sys.translation(&[-1, 0]);
        assert!(sys.in_group(&bad));
        assert!(matches!(
            HeckeAlgebra::parabolic_embed(&sys, &ZeroElement::basis(&bad)),
            Err(Error::NotJPositive(_))
        ));
    }

    #[test]
    fn e_basis_of_antidominant_translation() {
        for name in ["A1-sc", "A2-ad", "C2"] {
            let (c, h) = alg(name);
            let g = c.group();
            let lam = c.datum().deep_vector(NodeSet::EMPTY);
            for k in 1..3 {
                let neg: Vec<i64> = lam.iter().map(|x| -k * x).collect();
                let t = g.translation(&neg);
                let (_, e) = h.e_basis(&t).unwrap();
                let sign = if g.length(&t) % 2 == 0 { 1 } else { -1 };
                assert_eq!(e, h.iota_basis::<i64>(&t).scale(&sign), "{name}");
            }
        }
    }

    #[test]
    fn e_basis_is_triangular() {
        let (c, h) = alg("A2-sc");
        let g = c.group();
        for level in g.enumerate(3).unwrap() {
            for e in level {
                let (_, z) = h.e_basis(&e).unwrap();
                assert_eq!(z.coeff(&e).abs(), 1, "{}", g.display(&e));
                for (x, _) in z.terms() {
                    assert!(g.length(x) <= g.length(&e));
                }
            }
        }
    }
}
