//! The cocenter of the 0-Hecke algebra in the basis of cyclic-shift classes
//! of minimal length elements.

use std::collections::BTreeMap;
use std::fmt;

use crate::affine::AffineElement;
use crate::conjugacy::CyclicShiftClass;
use crate::context::Context;
use crate::error::Result;
use crate::hecke::{HeckeAlgebra, ZeroElement};

/// A finite integer combination of classes, keyed by canonical representative.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct CocenterElement {
    terms: BTreeMap<AffineElement, i64>,
}

impl CocenterElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn class(rep: &AffineElement) -> Self {
        let mut out = Self::zero();
        out.add(rep, 1);
        out
    }

    pub fn add(&mut self, rep: &AffineElement, c: i64) {
        if c == 0 {
            return;
        }
        let slot = self.terms.entry(rep.clone()).or_insert(0);
        *slot += c;
        if *slot == 0 {
            self.terms.remove(rep);
        }
    }

    pub fn plus(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (r, &c) in &o.terms {
            out.add(r, c);
        }
        out
    }

    pub fn scale(&self, k: i64) -> Self {
        let mut out = Self::zero();
        for (r, &c) in &self.terms {
            out.add(r, c * k);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, rep: &AffineElement) -> i64 {
        self.terms.get(rep).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&AffineElement, i64)> {
        self.terms.iter().map(|(r, &c)| (r, c))
    }
}

impl fmt::Debug for CocenterElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

/// Result of [`Context::commutator_check`].
#[derive(Clone, Debug, Default)]
pub struct CommutatorReport {
    pub checked: usize,
    pub violations: Vec<String>,
}

impl Context {
    /// `ψ(T_e) = (-1)^{ℓ(e) - ℓ(Σ_e)} [Σ_e]`.
    pub fn project_basis(&self, e: &AffineElement) -> Result<CocenterElement> {
        let (id, sign) = self.sigma(e)?;
        let mut out = CocenterElement::zero();
        out.add(&self.class(id).rep, i64::from(sign));
        Ok(out)
    }

    pub fn project(&self, a: &ZeroElement) -> Result<CocenterElement> {
        let mut out = CocenterElement::zero();
        for (e, &c) in a.terms() {
            out = out.plus(&self.project_basis(e)?.scale(c));
        }
        Ok(out)
    }

    /// `ψ([T_w, T_x]) = 0` for `ℓ(w) ≤ L` and `x` a simple reflection or an
    /// `Ω` generator.
    pub fn commutator_check(&self, max_len: u32) -> Result<CommutatorReport> {
        let g = self.group();
        let h = HeckeAlgebra::new(self.group_arc().clone());
        let mut xs: Vec<AffineElement> = g.simple().iter().map(|s| s.element.clone()).collect();
        xs.extend(g.omega().generators.iter().cloned());
        let mut report = CommutatorReport::default();
        for level in g.enumerate(max_len)? {
            for w in level {
                let tw = ZeroElement::basis(&w);
                for x in &xs {
                    let tx = ZeroElement::basis(x);
                    let comm = h.mul(&tw, &tx).sub(&h.mul(&tx, &tw));
                    report.checked += 1;
                    let img = self.project(&comm)?;
                    if !img.is_zero() {
                        report.violations.push(format!(
                            "[T_{}, T_{}] projects to {:?}",
                            g.display(&w),
                            g.display(x),
                            img
                        ));
                    }
                }
            }
        }
        Ok(report)
    }

    /// Whether the class indexes a non-rigid basis element: `J_{ν̄} ≠ F₀`.
    pub fn is_non_rigid(&self, class: &CyclicShiftClass) -> bool {
        self.datum().j_of_vector(&class.newton) != self.datum().all_simple()
    }

    /// `ψ(ιT_m)` for a representative `m`.
    pub fn project_iota(&self, m: &AffineElement) -> Result<CocenterElement> {
        let h = HeckeAlgebra::new(self.group_arc().clone());
        self.project(&h.iota_basis::<i64>(m))
    }

    /// Spanning vectors `ψ(T_m)`, `ψ(ιT_m)` of the non-supersingular part,
    /// over non-rigid classes of length at most `L`.
    pub fn nss_spanning_set(&self, max_len: u32) -> Result<Vec<CocenterElement>> {
        let mut out = Vec::new();
        for c in self.enumerate_classes(max_len)? {
            if self.is_non_rigid(&c) {
                out.push(CocenterElement::class(&c.rep));
                out.push(self.project_iota(&c.rep)?);
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn projection_signs() {
        let c = Context::load("A2-ad").unwrap();
        let g = c.group();
        let h = HeckeAlgebra::new(c.group_arc().clone());
        let s = g.s(0);
        let sq = h.mul(&ZeroElement::basis(s), &ZeroElement::basis(s));
        assert_eq!(c.project(&sq).unwrap(), CocenterElement::class(s).scale(-1));
        let e = g.mul(&g.mul(g.s(0), g.s(1)), g.s(0));
        let img = c.project_basis(&e).unwrap();
        // T_{sws} T_s T_s = -T_{sw}: the class of the Coxeter element, sign -1.
        let cox = c.class_of(&g.mul(g.s(1), g.s(0))).unwrap();
        assert_eq!(img, CocenterElement::class(&cox.rep).scale(-1));
    }

    #[test]
    fn commutators_vanish() {
        for name in ["A1-sc", "A2-ad", "C2"] {
            let c = Context::load(name).unwrap();
            let r = c.commutator_check(4).unwrap();
            assert!(r.violations.is_empty(), "{name}: {:?}", r.violations);
            assert!(r.checked > 0);
        }
    }

    #[test]
    fn rigidity_of_classes() {
        let c = Context::load("A2-sc").unwrap();
        let g = c.group();
        let id = c.class_of(&g.identity()).unwrap();
        assert!(!c.is_non_rigid(&id));
        let lam = c.datum().deep_vector(crate::nodeset::NodeSet::EMPTY);
        let t = c.class_of(&g.translation(&lam)).unwrap();
        assert!(c.is_non_rigid(&t));
        let span = c.nss_spanning_set(g.length(&g.translation(&lam))).unwrap();
        assert!(span.contains(&CocenterElement::class(&t.rep)));
    }
}
