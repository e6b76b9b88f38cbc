//! The extended affine Weyl group `W = X ⋊ W_0` and its parabolic pieces
//! `W_J = X ⋊ W_J`.
//!
//! An [`AffineWeyl`] is attached to a subset `J` of the simple roots and
//! carries the Coxeter data of `W_J`: simple affine reflections `J_aff`,
//! the length function `ℓ_J` and the length-zero subgroup `Ω_J`. The full
//! group is the case `J = F_0`.

use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::field::{floor_q, Q};
use crate::lattice::AbelianQuotient;
use crate::linalg::Matrix;
use crate::nodeset::NodeSet;
use crate::rootdatum::{LeviData, RootDatum, WIdx};

pub type Vector = SmallVec<[i64; 4]>;

/// The element `t^λ w`. The derived order compares `λ` and then the
/// shortlex position of the canonical word of `w`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct AffineElement {
    pub t: Vector,
    pub w: WIdx,
}

impl AffineElement {
    pub fn new(t: &[i64], w: WIdx) -> Self {
        AffineElement {
            t: Vector::from_slice(t),
            w,
        }
    }

    pub fn translation(t: &[i64]) -> Self {
        Self::new(t, 0)
    }

    pub fn is_translation(&self) -> bool {
        self.w == 0
    }
}

/// A simple affine reflection.
#[derive(Clone, Debug)]
pub struct SimpleReflection {
    pub name: String,
    pub element: AffineElement,
    /// Index of the simple root for finite nodes.
    pub finite: Option<usize>,
    /// Index of the component of `J` the node belongs to.
    pub component: usize,
}

/// `Ω_J ≅ X / Z R_J`, with length-zero lifts of the generators.
#[derive(Clone, Debug)]
pub struct OmegaGroup {
    pub quotient: AbelianQuotient,
    pub generators: Vec<AffineElement>,
    pub inverses: Vec<AffineElement>,
    /// Conjugation action of each generator on the simple reflections.
    pub perms: Vec<Vec<usize>>,
}

impl OmegaGroup {
    pub fn is_finite(&self) -> bool {
        self.quotient.is_finite()
    }

    pub fn ngens(&self) -> usize {
        self.generators.len()
    }
}

#[derive(Clone, Debug)]
pub struct AffineWeyl {
    rd: Arc<RootDatum>,
    levi: LeviData,
    simple: Vec<SimpleReflection>,
    omega: OmegaGroup,
    interior: Vec<Q>,
    full: bool,
}

impl AffineWeyl {
    pub fn full(rd: Arc<RootDatum>) -> Self {
        let j = rd.all_simple();
        Self::new(rd, j)
    }

    pub fn new(rd: Arc<RootDatum>, j: NodeSet) -> Self {
        let levi = rd.levi(j);
        let weyl = rd.weyl();
        let mut simple = Vec::new();
        for i in j.iter() {
            let comp = levi.components.iter().position(|c| c.contains(i)).unwrap();
            simple.push(SimpleReflection {
                name: format!("s{}", i + 1),
                element: AffineElement::new(&vec![0; rd.rank()], weyl.simple(i)),
                finite: Some(i),
                component: comp,
            });
        }
        let ncomp = levi.components.len();
        for (k, comp) in levi.components.iter().enumerate() {
            let beta = levi
                .positive_roots
                .iter()
                .copied()
                .filter(|&r| {
                    let c = &rd.root(r).coeffs;
                    c.iter().enumerate().all(|(i, &x)| x == 0 || comp.contains(i))
                })
                .max_by_key(|&r| rd.root(r).co_coeffs.iter().sum::<i64>())
                .unwrap();
            let name = if ncomp == 1 { "s0".to_string() } else { format!("s0_{}", k + 1) };
            simple.push(SimpleReflection {
                name,
                element: AffineElement::new(&rd.root(beta).vector, rd.reflection(beta)),
                finite: None,
                component: k,
            });
        }

        // Interior point of C_J: small distinct values on the simple coroots of J.
        let max_height = levi
            .positive_roots
            .iter()
            .map(|&r| rd.root(r).co_coeffs.iter().sum::<i64>())
            .max()
            .unwrap_or(1);
        let js = j.indices();
        let interior = if js.is_empty() {
            vec![Q::from_integer(0); rd.rank()]
        } else {
            let rows: Vec<Vec<Q>> = js
                .iter()
                .map(|&i| rd.root(i).functional.iter().map(|&x| Q::from_integer(x as i128)).collect())
                .collect();
            let rhs: Vec<Q> = (0..js.len())
                .map(|k| Q::new(1, (max_height as i128 + 1) * (k as i128 + 2)))
                .collect();
            Matrix::from_rows(rows).solve(&rhs).expect("simple coroots independent")
        };

        let relations: Vec<Vec<i64>> = j.iter().map(|i| rd.simple_roots()[i].clone()).collect();
        let quotient = AbelianQuotient::new(rd.rank(), &relations);
        let mut g = AffineWeyl {
            full: j == rd.all_simple(),
            rd,
            levi,
            simple,
            omega: OmegaGroup {
                quotient: quotient.clone(),
                generators: Vec::new(),
                inverses: Vec::new(),
                perms: Vec::new(),
            },
            interior,
        };
        let n = quotient.ngens();
        for k in 0..n {
            let c: Vec<i64> = (0..n).map(|i| i64::from(i == k)).collect();
            let tau = g.omega_lift(&c);
            let inv = g.inverse(&tau);
            let perm = g.conjugation_perm(&tau);
            g.omega.generators.push(tau);
            g.omega.inverses.push(inv);
            g.omega.perms.push(perm);
        }
        g
    }

    pub fn datum(&self) -> &RootDatum {
        &self.rd
    }

    pub fn datum_arc(&self) -> &Arc<RootDatum> {
        &self.rd
    }

    pub fn j(&self) -> NodeSet {
        self.levi.j
    }

    pub fn levi(&self) -> &LeviData {
        &self.levi
    }

    pub fn is_full(&self) -> bool {
        self.full
    }

    pub fn simple(&self) -> &[SimpleReflection] {
        &self.simple
    }

    pub fn num_simple(&self) -> usize {
        self.simple.len()
    }

    pub fn all_nodes(&self) -> NodeSet {
        NodeSet::full(self.simple.len())
    }

    pub fn s(&self, i: usize) -> &AffineElement {
        &self.simple[i].element
    }

    pub fn node_index(&self, name: &str) -> Option<usize> {
        self.simple.iter().position(|s| s.name == name)
    }

    pub fn node_names(&self, k: NodeSet) -> Vec<&str> {
        k.iter().map(|i| self.simple[i].name.as_str()).collect()
    }

    pub fn omega(&self) -> &OmegaGroup {
        &self.omega
    }

    pub fn identity(&self) -> AffineElement {
        AffineElement::new(&vec![0; self.rd.rank()], 0)
    }

    pub fn translation(&self, l: &[i64]) -> AffineElement {
        AffineElement::new(l, 0)
    }

    pub fn finite(&self, w: WIdx) -> AffineElement {
        AffineElement::new(&vec![0; self.rd.rank()], w)
    }

    pub fn mul(&self, a: &AffineElement, b: &AffineElement) -> AffineElement {
        let weyl = self.rd.weyl();
        let wm = weyl.matrix(a.w);
        let mut t = a.t.clone();
        for (i, row) in wm.iter().enumerate() {
            t[i] += row.iter().zip(&b.t).map(|(x, y)| x * y).sum::<i64>();
        }
        AffineElement {
            t,
            w: weyl.mul(a.w, b.w),
        }
    }

    pub fn inverse(&self, a: &AffineElement) -> AffineElement {
        let weyl = self.rd.weyl();
        let wi = weyl.inverse(a.w);
        let t: Vector = weyl.act(wi, &a.t).into_iter().map(|x| -x).collect();
        AffineElement { t, w: wi }
    }

    pub fn pow(&self, a: &AffineElement, n: u64) -> AffineElement {
        let mut acc = self.identity();
        let mut base = a.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// `a b a^{-1}`.
    pub fn conj(&self, a: &AffineElement, b: &AffineElement) -> AffineElement {
        self.mul(&self.mul(a, b), &self.inverse(a))
    }

    /// `s b s` for a simple reflection index.
    pub fn conj_simple(&self, s: usize, b: &AffineElement) -> AffineElement {
        let e = self.s(s);
        self.mul(&self.mul(e, b), e)
    }

    pub fn in_group(&self, e: &AffineElement) -> bool {
        self.full || self.levi.weyl.binary_search(&e.w).is_ok()
    }

    /// `ℓ_J` via the length formula.
    pub fn length(&self, e: &AffineElement) -> u32 {
        debug_assert!(self.in_group(e), "element outside W_J");
        let weyl = self.rd.weyl();
        let wi = weyl.inverse(e.w);
        let mut total = 0i64;
        for &r in &self.levi.positive_roots {
            let root = self.rd.root(r);
            let p = root.pair(&e.t);
            let d = i64::from(!self.rd.is_positive(weyl.root_image(wi, r)));
            total += (p - d).abs();
        }
        total as u32
    }

    /// `ℓ_J` by counting hyperplanes separating `C_J` and `e C_J`.
    pub fn length_hyperplanes(&self, e: &AffineElement) -> u32 {
        let weyl = self.rd.weyl();
        let image: Vec<Q> = weyl
            .act_q(e.w, &self.interior)
            .into_iter()
            .zip(&e.t)
            .map(|(x, &l)| x + Q::from_integer(l as i128))
            .collect();
        let mut total = 0;
        for &r in &self.levi.positive_roots {
            let root = self.rd.root(r);
            let a = root.pair_q(&self.interior);
            let b = root.pair_q(&image);
            assert!(!a.is_integer() && !b.is_integer());
            total += (floor_q(&b) - floor_q(&a)).unsigned_abs() as u32;
        }
        total
    }

    /// `e = s_{i_1} ... s_{i_k} τ` with `k = ℓ_J(e)`, chosen left-greedily.
    pub fn reduced_word(&self, e: &AffineElement) -> (Vec<usize>, AffineElement) {
        let mut cur = e.clone();
        let mut len = self.length(&cur);
        let mut word = Vec::with_capacity(len as usize);
        'outer: while len > 0 {
            for s in 0..self.simple.len() {
                let next = self.mul(self.s(s), &cur);
                let l = self.length(&next);
                if l < len {
                    word.push(s);
                    cur = next;
                    len = l;
                    continue 'outer;
                }
            }
            unreachable!("an element of positive length has a left descent");
        }
        (word, cur)
    }

    pub fn from_word(&self, word: &[usize], tau: &AffineElement) -> AffineElement {
        let x = word.iter().fold(self.identity(), |acc, &s| self.mul(&acc, self.s(s)));
        self.mul(&x, tau)
    }

    /// Permutation of simple reflections induced by conjugation with a
    /// length-zero element.
    pub fn conjugation_perm(&self, tau: &AffineElement) -> Vec<usize> {
        let inv = self.inverse(tau);
        (0..self.simple.len())
            .map(|s| {
                let c = self.mul(&self.mul(tau, self.s(s)), &inv);
                self.simple
                    .iter()
                    .position(|x| x.element == c)
                    .expect("Ω normalizes the simple reflections")
            })
            .collect()
    }

    pub fn conj_nodes(&self, tau: &AffineElement, k: NodeSet) -> NodeSet {
        let p = self.conjugation_perm(tau);
        k.map(|i| p[i])
    }

    /// The set of simple reflections in a reduced expression, closed under
    /// conjugation by the length-zero part.
    pub fn support(&self, e: &AffineElement) -> NodeSet {
        let (word, tau) = self.reduced_word(e);
        let mut supp = NodeSet::from_indices(word);
        let p = self.conjugation_perm(&tau);
        loop {
            let next = supp.union(supp.map(|i| p[i]));
            if next == supp {
                return supp;
            }
            supp = next;
        }
    }

    /// Coordinates in `Ω_J` of the coset `W_{J,aff} e`.
    pub fn omega_coords(&self, e: &AffineElement) -> Vec<i64> {
        self.omega.quotient.coords(&e.t)
    }

    /// The length-zero element with the given `Ω_J` coordinates.
    pub fn omega_lift(&self, c: &[i64]) -> AffineElement {
        let g = self.omega.quotient.lift(c);
        let mut e = self.translation(&g);
        let mut len = self.length(&e);
        'outer: while len > 0 {
            for s in 0..self.simple.len() {
                let next = self.mul(&e, self.s(s));
                let l = self.length(&next);
                if l < len {
                    e = next;
                    len = l;
                    continue 'outer;
                }
            }
            unreachable!("an element of positive length has a right descent");
        }
        e
    }

    /// The length-zero part `τ` in `e = x τ`.
    pub fn omega_part(&self, e: &AffineElement) -> AffineElement {
        self.omega_lift(&self.omega_coords(e))
    }

    /// All elements of `Ω_J`, if finite.
    pub fn omega_elements(&self) -> Result<Vec<AffineElement>> {
        let elems = self
            .omega
            .quotient
            .elements()
            .ok_or_else(|| Error::InfiniteOmega(self.rd.name().to_string()))?;
        Ok(elems.iter().map(|c| self.omega_lift(c)).collect())
    }

    /// Whether `K` generates a finite parabolic subgroup: it must omit a
    /// node of every affine component.
    pub fn is_finite_type(&self, k: NodeSet) -> bool {
        (0..self.levi.components.len()).all(|c| {
            self.simple
                .iter()
                .enumerate()
                .any(|(i, s)| s.component == c && !k.contains(i))
        })
    }

    /// Elements of the finite parabolic subgroup `W_K`.
    pub fn parabolic(&self, k: NodeSet) -> Vec<AffineElement> {
        assert!(self.is_finite_type(k), "W_K is infinite");
        let mut seen = HashSet::new();
        let id = self.identity();
        seen.insert(id.clone());
        let mut out = vec![id];
        let mut i = 0;
        while i < out.len() {
            for s in k.iter() {
                let n = self.mul(&out[i], self.s(s));
                if seen.insert(n.clone()) {
                    out.push(n);
                }
            }
            i += 1;
        }
        out.sort_by(|a, b| self.length(a).cmp(&self.length(b)).then_with(|| a.cmp(b)));
        out
    }

    /// The longest element `w_K` of a finite `W_K`.
    pub fn longest(&self, k: NodeSet) -> AffineElement {
        assert!(self.is_finite_type(k), "W_K is infinite");
        let mut e = self.identity();
        let mut len = 0;
        'outer: loop {
            for s in k.iter() {
                let n = self.mul(&e, self.s(s));
                let l = self.length(&n);
                if l > len {
                    e = n;
                    len = l;
                    continue 'outer;
                }
            }
            return e;
        }
    }

    /// Demazure (0-Hecke monoid) product.
    pub fn demazure(&self, a: &AffineElement, b: &AffineElement) -> AffineElement {
        let (word, tau) = self.reduced_word(b);
        let mut e = a.clone();
        let mut len = self.length(&e);
        for s in word {
            let n = self.mul(&e, self.s(s));
            let l = self.length(&n);
            if l > len {
                e = n;
                len = l;
            }
        }
        self.mul(&e, &tau)
    }

    /// All elements of `W_J` of length at most `max_len`, grouped by length
    /// and sorted within each group.
    pub fn enumerate(&self, max_len: u32) -> Result<Vec<Vec<AffineElement>>> {
        let mut levels = vec![self.omega_elements()?];
        levels[0].sort();
        let mut seen: HashSet<AffineElement> = levels[0].iter().cloned().collect();
        for l in 1..=max_len {
            let mut next = Vec::new();
            for e in &levels[l as usize - 1] {
                for s in 0..self.simple.len() {
                    let n = self.mul(self.s(s), e);
                    if !seen.contains(&n) && self.length(&n) == l {
                        seen.insert(n.clone());
                        next.push(n);
                    }
                }
            }
            next.sort();
            levels.push(next);
        }
        Ok(levels)
    }

    /// The order of the finite part, `n_0` with `e^{n_0}` a translation.
    pub fn translation_order(&self, e: &AffineElement) -> u64 {
        let weyl = self.rd.weyl();
        let mut w = e.w;
        let mut n = 1;
        while w != 0 {
            w = weyl.mul(w, e.w);
            n += 1;
        }
        n
    }

    /// Newton point `ν_e = λ / n_0` where `e^{n_0} = t^λ`.
    pub fn newton_point(&self, e: &AffineElement) -> Vec<Q> {
        let n = self.translation_order(e);
        let p = self.pow(e, n);
        p.t.iter().map(|&x| Q::new(x as i128, n as i128)).collect()
    }

    /// The dominant Newton point `ν̄_e`.
    pub fn newton_dominant(&self, e: &AffineElement) -> Vec<Q> {
        self.rd.dominant_rep(&self.newton_point(e)).0
    }

    /// `ℓ(e) = <ν̄_e, 2ρ^∨>`.
    pub fn is_straight(&self, e: &AffineElement) -> bool {
        let nu = self.newton_dominant(e);
        Q::from_integer(self.length(e) as i128) == self.rd.pair_two_rho(&nu)
    }

    /// `e = d ũ` with `d ∈ W_0^J` and `ũ ∈ W_J` (translation part kept).
    pub fn coset_decompose(&self, e: &AffineElement, j: NodeSet) -> (WIdx, AffineElement) {
        let weyl = self.rd.weyl();
        let mut d = e.w;
        'outer: loop {
            for i in j.iter() {
                let n = weyl.mul_simple(d, i);
                if weyl.length(n) < weyl.length(d) {
                    d = n;
                    continue 'outer;
                }
            }
            break;
        }
        let dinv = weyl.inverse(d);
        let u = AffineElement {
            t: weyl.act(dinv, &e.t).into_iter().collect(),
            w: weyl.mul(dinv, e.w),
        };
        (d, u)
    }

    /// `e ∈ t^λ W_J` with `<λ, α^∨> ≥ 0` for every `α ∈ R^+ \ R_J`.
    pub fn is_j_positive(&self, e: &AffineElement) -> Result<bool> {
        if !self.in_group(e) {
            return Err(Error::NotInParabolic(self.display(e)));
        }
        let in_j = &self.levi.positive_roots;
        Ok((0..self.rd.num_positive())
            .filter(|r| in_j.binary_search(r).is_err())
            .all(|r| self.rd.root(r).pair(&e.t) >= 0))
    }

    /// Text form `t[λ]*s_i*...` using the canonical word of the finite part.
    pub fn display(&self, e: &AffineElement) -> String {
        let mut parts = Vec::new();
        if e.t.iter().any(|&x| x != 0) {
            let v: Vec<String> = e.t.iter().map(|x| x.to_string()).collect();
            parts.push(format!("t[{}]", v.join(",")));
        }
        for &i in self.rd.weyl().word(e.w) {
            parts.push(format!("s{}", i + 1));
        }
        if parts.is_empty() {
            "e".to_string()
        } else {
            parts.join("*")
        }
    }

    /// Reduced expression `s_{i_1}*...*s_{i_k}` followed by the `Ω_J` part.
    pub fn display_word(&self, e: &AffineElement) -> String {
        let (word, tau) = self.reduced_word(e);
        let mut parts: Vec<String> = word.iter().map(|&s| self.simple[s].name.clone()).collect();
        if tau != self.identity() {
            parts.push(format!("[{}]", self.display(&tau)));
        }
        if parts.is_empty() {
            "e".to_string()
        } else {
            parts.join("*")
        }
    }

    pub fn format_vector(v: &[Q]) -> String {
        let parts: Vec<String> = v.iter().map(crate::field::fmt_q).collect();
        format!("({})", parts.join(","))
    }

    /// DOT graph of the ball of radius `radius` around `e` in the Cayley
    /// graph for right multiplication by simple reflections.
    pub fn cayley_dot(&self, e: &AffineElement, radius: u32) -> String {
        let mut nodes = vec![e.clone()];
        let mut seen: HashSet<AffineElement> = nodes.iter().cloned().collect();
        let mut edges = Vec::new();
        let mut frontier = vec![e.clone()];
        for _ in 0..radius {
            let mut next = Vec::new();
            for x in &frontier {
                for s in 0..self.simple.len() {
                    let y = self.mul(x, self.s(s));
                    if self.length(&y) > self.length(x) {
                        edges.push((x.clone(), y.clone(), s));
                    }
                    if seen.insert(y.clone()) {
                        nodes.push(y.clone());
                        next.push(y);
                    }
                }
            }
            frontier = next;
        }
        let mut out = String::from("digraph cayley {\n");
        for n in &nodes {
            out += &format!("  \"{}\" [label=\"{}\\nl={}\"];\n", self.display(n), self.display(n), self.length(n));
        }
        for (a, b, s) in &edges {
            if seen.contains(b) {
                out += &format!(
                    "  \"{}\" -> \"{}\" [label=\"{}\"];\n",
                    self.display(a),
                    self.display(b),
                    self.simple[*s].name
                );
            }
        }
        out.push_str("}\n");
        out
    }
}

impl fmt::Display for SimpleReflection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdatum::CATALOG;

    fn group(name: &str) -> AffineWeyl {
        AffineWeyl::full(Arc::new(RootDatum::builtin(name).unwrap()))
    }

    #[test]
    fn simple_reflections_have_length_one() {
        for name in CATALOG {
            let g = group(name);
            for (i, s) in g.simple().iter().enumerate() {
                assert_eq!(g.length(&s.element), 1, "{name} {}", s.name);
                assert_eq!(g.length_hyperplanes(&s.element), 1, "{name} {}", s.name);
                assert_eq!(g.mul(g.s(i), g.s(i)), g.identity());
            }
        }
    }

    #[test]
    fn omega_shapes() {
        let expect = [("A1-sc", Some(2)), ("A1-ad", Some(1)), ("A2-sc", Some(3)), ("A2-ad", Some(1)), ("C2", Some(2)), ("G2", Some(1)), ("GL2", None)];
        for (name, order) in expect {
            let g = group(name);
            assert_eq!(g.omega().quotient.order(), order, "{name}");
            for (k, tau) in g.omega().generators.iter().enumerate() {
                assert_eq!(g.length(tau), 0);
                assert_eq!(g.mul(tau, &g.omega().inverses[k]), g.identity());
                let mut p = g.omega().perms[k].clone();
                p.sort();
                assert_eq!(p, (0..g.num_simple()).collect::<Vec<_>>());
            }
        }
    }

    #[test]
    fn empty_j_has_all_translations_length_zero() {
        let rd = Arc::new(RootDatum::builtin("A2-ad").unwrap());
        let g = AffineWeyl::new(rd, NodeSet::EMPTY);
        assert_eq!(g.num_simple(), 0);
        assert_eq!(g.omega().quotient.free_rank(), 2);
        assert_eq!(g.length(&g.translation(&[3, -5])), 0);
    }

    #[test]
    fn multiplication_laws() {
        let g = group("C2");
        let a = AffineElement::new(&[1, -2], 3);
        let b = AffineElement::new(&[0, 4], 5);
        let c = AffineElement::new(&[-1, 1], 7);
        assert_eq!(g.mul(&g.mul(&a, &b), &c), g.mul(&a, &g.mul(&b, &c)));
        assert_eq!(g.mul(&a, &g.inverse(&a)), g.identity());
        assert_eq!(g.mul(&g.translation(&[1, 2]), &g.translation(&[3, 4])), g.translation(&[4, 6]));
        let s = g.finite(g.datum().weyl().simple(0));
        let lam = [2, 1];
        let lhs = g.mul(&s, &g.translation(&lam));
        let img = g.datum().weyl().act(s.w, &lam);
        assert_eq!(lhs, g.mul(&g.translation(&img), &s));
    }

    #[test]
    fn dominant_translation_length() {
        for name in CATALOG {
            let g = group(name);
            let rd = g.datum();
            let lam = rd.deep_vector(NodeSet::EMPTY);
            let q: Vec<Q> = lam.iter().map(|&x| Q::from_integer(x as i128)).collect();
            let e = g.translation(&lam);
            assert_eq!(Q::from_integer(g.length(&e) as i128), rd.pair_two_rho(&q));
            assert!(g.is_straight(&e));
        }
    }

    #[test]
    fn reduced_words_round_trip() {
        let g = group("A2-sc");
        for level in g.enumerate(5).unwrap() {
            for e in level {
                let (w, tau) = g.reduced_word(&e);
                assert_eq!(w.len() as u32, g.length(&e));
                assert_eq!(g.length(&tau), 0);
                assert_eq!(g.from_word(&w, &tau), e);
            }
        }
    }

    #[test]
    fn support_closes_under_omega() {
        let g = group("A2-sc");
        let tau = g.omega().generators[0].clone();
        let s0 = g.node_index("s0").unwrap();
        let e = g.mul(g.s(s0), &tau);
        let supp = g.support(&e);
        assert_eq!(supp, g.all_nodes());
        assert_eq!(g.support(&g.identity()), NodeSet::EMPTY);
        assert_eq!(g.support(g.s(1)), NodeSet::single(1));
    }

    #[test]
    fn finite_type_and_longest() {
        let g = group("A2-ad");
        assert!(!g.is_finite_type(g.all_nodes()));
        for k in g.all_nodes().subsets() {
            if k.len() < 3 {
                assert!(g.is_finite_type(k));
                let wk = g.longest(k);
                let par = g.parabolic(k);
                let maxlen = par.iter().map(|x| g.length(x)).max().unwrap();
                assert_eq!(g.length(&wk), maxlen);
                // Demazure powers stabilize at w_K.
                for x in &par {
                    let mut p = x.clone();
                    for _ in 0..6 {
                        p = g.demazure(&p, x);
                    }
                    if k.iter().all(|s| g.support(x).contains(s)) {
                        assert_eq!(p, wk);
                    }
                }
            }
        }
    }

    #[test]
    fn coset_decomposition_round_trip() {
        let g = group("G2");
        for j in g.datum().all_simple().subsets() {
            for level in g.enumerate(4).unwrap() {
                for e in level {
                    let (d, u) = g.coset_decompose(&e, j);
                    assert!(g.datum().min_coset_reps(j).contains(&d));
                    assert!(g.datum().levi(j).weyl.contains(&u.w));
                    assert_eq!(g.mul(&g.finite(d), &u), e);
                }
            }
        }
    }

    #[test]
    fn j_positivity() {
        let rd = Arc::new(RootDatum::builtin("A2-ad").unwrap());
        let g = AffineWeyl::new(rd.clone(), NodeSet::EMPTY);
        assert!(g.is_j_positive(&g.translation(&[1, 1])).unwrap());
        assert!(!g.is_j_positive(&g.translation(&[-1, -1])).unwrap());
        assert!(g.is_j_positive(&AffineElement::new(&[0, 0], 1)).is_err());
        let f = AffineWeyl::full(rd);
        assert!(f.is_j_positive(&f.translation(&[-1, -1])).unwrap());
    }

    #[test]
    fn newton_points() {
        let g = group("A2-ad");
        assert_eq!(g.newton_point(&g.translation(&[1, 0])), vec![Q::from_integer(1), Q::from_integer(0)]);
        assert_eq!(g.newton_point(g.s(0)), vec![Q::from_integer(0); 2]);
        assert!(!g.is_straight(g.s(0)));
    }
}
