//! Cyclic shifts, cyclic-shift classes of minimal length elements, the
//! class `Σ_w` attached to an arbitrary element, Newton points and
//! standard pairs.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::sync::Arc;

use crate::affine::{AffineElement, AffineWeyl};
use crate::context::Context;
use crate::error::{Error, Result};
use crate::field::Q;
use crate::nodeset::NodeSet;

/// Outcome of conjugating by a simple reflection.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StepKind {
    LengthPreserved,
    LengthDropped,
    NotAStep,
}

/// One move in a reduction path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Step {
    /// Conjugation by the simple reflection with this index.
    Simple(usize, StepKind),
    /// Conjugation by the `Ω` generator with this index (or its inverse).
    Omega(usize, bool),
}

/// A cyclic-shift class of minimal length elements.
#[derive(Clone, Debug)]
pub struct CyclicShiftClass {
    pub id: usize,
    /// The smallest member in the canonical order.
    pub rep: AffineElement,
    /// All members, sorted.
    pub members: Vec<AffineElement>,
    pub length: u32,
    /// Dominant Newton point.
    pub newton: Vec<Q>,
    pub straight: bool,
}

impl CyclicShiftClass {
    pub fn contains(&self, e: &AffineElement) -> bool {
        self.members.binary_search(e).is_ok()
    }
}

/// `(x, Γ)` with `J = J_{ν_x}`; `Γ` indexes simple reflections of `W_J`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StandardPair {
    pub x: AffineElement,
    pub gamma: NodeSet,
    pub j: NodeSet,
}

/// A standard representative `w y` of a class and its standard pair.
#[derive(Clone, Debug)]
pub struct StandardData {
    /// The member of the class equal to `w y`.
    pub member: AffineElement,
    pub w: AffineElement,
    pub y: AffineElement,
    /// `K = ∪ y^i supp(w) y^{-i}`, as simple reflections of the full group.
    pub k: NodeSet,
    /// The finite Weyl element `z` with `x = z y z^{-1}`.
    pub z: u32,
    pub pair: StandardPair,
}

impl Context {
    fn require_finite_omega(&self) -> Result<()> {
        if self.group().omega().is_finite() {
            Ok(())
        } else {
            Err(Error::InfiniteOmega(self.datum().name().to_string()))
        }
    }

    /// `e → s e s`, classified.
    pub fn cyclic_shift_step(&self, e: &AffineElement, s: usize) -> (AffineElement, StepKind) {
        let g = self.group();
        let n = g.conj_simple(s, e);
        let (a, b) = (g.length(e), g.length(&n));
        let kind = if b == a {
            StepKind::LengthPreserved
        } else if b < a {
            StepKind::LengthDropped
        } else {
            StepKind::NotAStep
        };
        (n, kind)
    }

    fn omega_neighbors(&self, e: &AffineElement) -> Vec<(AffineElement, Step)> {
        let g = self.group();
        let om = g.omega();
        let mut out = Vec::new();
        for k in 0..om.ngens() {
            let a = g.mul(&g.mul(&om.generators[k], e), &om.inverses[k]);
            out.push((a, Step::Omega(k, false)));
            let b = g.mul(&g.mul(&om.inverses[k], e), &om.generators[k]);
            out.push((b, Step::Omega(k, true)));
        }
        out
    }

    /// Explores the equal-length plateau of `e` (simple-reflection steps, and
    /// `Ω`-conjugation when `with_omega`). Stops at the first strict drop
    /// when `stop_at_drop`. Returns the visited elements, BFS parents and
    /// the first drop `(u, s)` found.
    #[allow(clippy::type_complexity)]
    fn plateau(
        &self,
        e: &AffineElement,
        with_omega: bool,
        stop_at_drop: bool,
    ) -> Result<(Vec<AffineElement>, HashMap<AffineElement, (AffineElement, Step)>, Vec<(AffineElement, usize)>)> {
        let g = self.group();
        let len = g.length(e);
        let mut seen: HashSet<AffineElement> = HashSet::new();
        let mut parents = HashMap::new();
        let mut order = vec![e.clone()];
        seen.insert(e.clone());
        let mut drops = Vec::new();
        let mut i = 0;
        while i < order.len() {
            let u = order[i].clone();
            i += 1;
            let mut next: Vec<(AffineElement, Step)> = Vec::new();
            for s in 0..g.num_simple() {
                let n = g.conj_simple(s, &u);
                let l = g.length(&n);
                if l < len {
                    drops.push((u.clone(), s));
                    if stop_at_drop {
                        return Ok((order, parents, drops));
                    }
                } else if l == len {
                    next.push((n, Step::Simple(s, StepKind::LengthPreserved)));
                }
            }
            if with_omega {
                next.extend(self.omega_neighbors(&u));
            }
            for (n, step) in next {
                if seen.insert(n.clone()) {
                    if seen.len() > self.budget {
                        return Err(Error::Budget(format!(
                            "plateau of {} exceeds {} nodes",
                            g.display(e),
                            self.budget
                        )));
                    }
                    parents.insert(n.clone(), (u.clone(), step));
                    order.push(n);
                }
            }
        }
        Ok((order, parents, drops))
    }

    /// Whether `e` has minimal length in its conjugacy class.
    pub fn is_minimal(&self, e: &AffineElement) -> Result<bool> {
        let (_, _, drops) = self.plateau(e, false, true)?;
        Ok(drops.is_empty())
    }

    /// Reduces `e` by cyclic shifts to a minimal length element, recording
    /// the path.
    pub fn reduce_to_minimal(&self, e: &AffineElement) -> Result<(AffineElement, Vec<(Step, AffineElement)>)> {
        let g = self.group();
        let mut cur = e.clone();
        let mut path = Vec::new();
        loop {
            let (_, parents, drops) = self.plateau(&cur, false, true)?;
            let Some((u, s)) = drops.into_iter().next() else {
                return Ok((cur, path));
            };
            let mut back = Vec::new();
            let mut node = u.clone();
            while let Some((p, step)) = parents.get(&node) {
                back.push((step.clone(), node.clone()));
                node = p.clone();
            }
            back.reverse();
            path.extend(back);
            let next = g.conj_simple(s, &u);
            path.push((Step::Simple(s, StepKind::LengthDropped), next.clone()));
            cur = next;
        }
    }

    fn register_class(&self, members: Vec<AffineElement>) -> usize {
        let g = self.group();
        let mut members = members;
        members.sort();
        members.dedup();
        {
            let reg = self.registry.read().unwrap();
            if let Some(&id) = reg.index.get(&members[0]) {
                return id;
            }
        }
        let rep = members[0].clone();
        let length = g.length(&rep);
        let newton = g.newton_dominant(&rep);
        let straight = g.is_straight(&rep);
        let mut reg = self.registry.write().unwrap();
        if let Some(&id) = reg.index.get(&rep) {
            return id;
        }
        let id = reg.classes.len();
        for m in &members {
            reg.index.insert(m.clone(), id);
        }
        reg.classes.push(Arc::new(CyclicShiftClass {
            id,
            rep,
            members,
            length,
            newton,
            straight,
        }));
        id
    }

    pub fn class(&self, id: usize) -> Arc<CyclicShiftClass> {
        self.registry.read().unwrap().classes[id].clone()
    }

    /// `(Σ_e, (-1)^{ℓ(e) - ℓ(Σ_e)})`, via the cyclic-shift recursion.
    pub fn sigma(&self, e: &AffineElement) -> Result<(usize, i8)> {
        self.require_finite_omega()?;
        if let Some(&r) = self.registry.read().unwrap().sigma.get(e) {
            return Ok(r);
        }
        let g = self.group();
        let (visited, _, drops) = self.plateau(e, true, true)?;
        let id = match drops.first() {
            Some((u, s)) => self.sigma(&g.mul(g.s(*s), u))?.0,
            None => self.register_class(visited.clone()),
        };
        let len = g.length(e);
        let sign = if (len - self.class(id).length).is_multiple_of(2) { 1 } else { -1 };
        let mut reg = self.registry.write().unwrap();
        for v in visited {
            reg.sigma.insert(v, (id, sign));
        }
        Ok((id, sign))
    }

    /// The class of a minimal length element.
    pub fn class_of(&self, m: &AffineElement) -> Result<Arc<CyclicShiftClass>> {
        let (id, _) = self.sigma(m)?;
        let c = self.class(id);
        if !c.contains(m) {
            return Err(Error::Violation(format!(
                "{} is not of minimal length",
                self.group().display(m)
            )));
        }
        Ok(c)
    }

    /// Every `(Σ, sign)` reachable by some choice of plateau walk and drop.
    pub fn sigma_all_choices(&self, e: &AffineElement) -> Result<BTreeSet<(usize, i8)>> {
        self.require_finite_omega()?;
        let mut memo = HashMap::new();
        self.sigma_all_rec(e, &mut memo)
    }

    fn sigma_all_rec(
        &self,
        e: &AffineElement,
        memo: &mut HashMap<AffineElement, BTreeSet<(usize, i8)>>,
    ) -> Result<BTreeSet<(usize, i8)>> {
        if let Some(r) = memo.get(e) {
            return Ok(r.clone());
        }
        let g = self.group();
        let len = g.length(e);
        let (visited, _, drops) = self.plateau(e, false, false)?;
        let mut out = BTreeSet::new();
        if drops.is_empty() {
            let id = self.class_of(e)?.id;
            out.insert((id, 1));
        } else {
            for (u, s) in drops {
                for next in [g.mul(g.s(s), &u), g.mul(&u, g.s(s))] {
                    for (id, _) in self.sigma_all_rec(&next, memo)? {
                        let sign = if (len - self.class(id).length).is_multiple_of(2) { 1 } else { -1 };
                        out.insert((id, sign));
                    }
                }
            }
        }
        for v in visited {
            memo.insert(v, out.clone());
        }
        Ok(out)
    }

    /// All classes of length at most `max_len`, sorted by length and
    /// representative.
    pub fn enumerate_classes(&self, max_len: u32) -> Result<Vec<Arc<CyclicShiftClass>>> {
        self.require_finite_omega()?;
        let mut ids = BTreeSet::new();
        for level in self.group().enumerate(max_len)? {
            for e in level {
                let (id, sign) = self.sigma(&e)?;
                if sign == 1 && self.class(id).length == self.group().length(&e) {
                    ids.insert(id);
                }
            }
        }
        let mut out: Vec<_> = ids.into_iter().map(|i| self.class(i)).collect();
        out.sort_by(|a, b| (a.length, &a.rep).cmp(&(b.length, &b.rep)));
        Ok(out)
    }

    /// All products of subwords of a reduced expression of `e`: the Bruhat
    /// interval below `e`.
    pub fn bruhat_interval(&self, e: &AffineElement) -> HashSet<AffineElement> {
        let g = self.group();
        let (word, tau) = g.reduced_word(e);
        let mut set: HashSet<AffineElement> = HashSet::new();
        set.insert(g.identity());
        for s in word {
            let ext: Vec<AffineElement> = set.iter().map(|x| g.mul(x, g.s(s))).collect();
            set.extend(ext);
        }
        set.into_iter().map(|x| g.mul(&x, &tau)).collect()
    }

    /// `Σ ⪯ e`: some member of `Σ` lies below `e` in the Bruhat order.
    pub fn precedes(&self, class: &CyclicShiftClass, e: &AffineElement) -> bool {
        if class.length > self.group().length(e) {
            return false;
        }
        let interval = self.bruhat_interval(e);
        class.members.iter().any(|m| interval.contains(m))
    }

    /// `Σ_e` as the unique maximal class below `e`, by exhaustive search.
    pub fn sigma_bruteforce(&self, e: &AffineElement) -> Result<usize> {
        let g = self.group();
        let classes = self.enumerate_classes(g.length(e))?;
        let interval = self.bruhat_interval(e);
        let below: Vec<&Arc<CyclicShiftClass>> = classes
            .iter()
            .filter(|c| c.members.iter().any(|m| interval.contains(m)))
            .collect();
        let maximal: Vec<usize> = below
            .iter()
            .filter(|c| {
                below
                    .iter()
                    .all(|d| c.members.iter().any(|m| self.precedes(d, m)))
            })
            .map(|c| c.id)
            .collect();
        match maximal.as_slice() {
            [id] => Ok(*id),
            _ => Err(Error::Violation(format!(
                "no unique maximal class below {}",
                g.display(e)
            ))),
        }
    }

    /// Dominant Newton point of any element.
    pub fn newton_point(&self, e: &AffineElement) -> Vec<Q> {
        self.group().newton_dominant(e)
    }

    /// `(w, y, K)` with `w y` a member of the class, `W_K` finite, `y`
    /// straight, `y ∈ ^K W^K`, `y K y^{-1} = K` and `w ∈ W_K`; `K` shrunk to
    /// `∪ y^i supp(w) y^{-i}`.
    pub fn standard_representative(&self, class: &CyclicShiftClass) -> Result<(AffineElement, AffineElement, AffineElement, NodeSet)> {
        let g = self.group();
        let subsets: Vec<NodeSet> = g
            .all_nodes()
            .subsets()
            .into_iter()
            .filter(|k| g.is_finite_type(*k))
            .collect();
        for z in &class.members {
            for &k in &subsets {
                let y = min_in_left_coset(g, k, z);
                if !g.is_straight(&y) {
                    continue;
                }
                let ly = g.length(&y);
                if k.iter().any(|s| g.length(&g.mul(g.s(s), &y)) < ly || g.length(&g.mul(&y, g.s(s))) < ly) {
                    continue;
                }
                let Some(perm) = conj_perm_on(g, &y, k) else {
                    continue;
                };
                let w = g.mul(z, &g.inverse(&y));
                let mut kk = g.support(&w);
                loop {
                    let next = kk.union(kk.map(|i| perm[i]));
                    if next == kk {
                        break;
                    }
                    kk = next;
                }
                return Ok((z.clone(), w, y, kk));
            }
        }
        Err(Error::Violation(format!(
            "no standard representative for class of {}",
            g.display(&class.rep)
        )))
    }

    /// Standard representative and standard pair of a class (cached).
    pub fn standard_data(&self, class: &CyclicShiftClass) -> Result<Arc<StandardData>> {
        if let Some(d) = self.registry.read().unwrap().standard.get(&class.id) {
            return Ok(d.clone());
        }
        let (member, w, y, k) = self.standard_representative(class)?;
        let data = Arc::new(self.standard_pair_from(member, w, y, k)?);
        self.registry.write().unwrap().standard.insert(class.id, data.clone());
        Ok(data)
    }

    pub fn standard_pair(&self, class: &CyclicShiftClass) -> Result<StandardPair> {
        Ok(self.standard_data(class)?.pair.clone())
    }

    fn standard_pair_from(&self, member: AffineElement, w: AffineElement, y: AffineElement, k: NodeSet) -> Result<StandardData> {
        let g = self.group();
        let rd = self.datum();
        let nu = g.newton_point(&y);
        let (nubar, z) = rd.dominant_rep(&nu);
        let j = rd.j_of_vector(&nubar);
        let zelem = g.finite(z);
        let x = g.conj(&zelem, &y);
        let sys = self.system(j);
        let mut gamma = NodeSet::EMPTY;
        for s in k.iter() {
            let c = g.conj(&zelem, g.s(s));
            let idx = sys.simple().iter().position(|t| t.element == c).ok_or_else(|| {
                Error::Violation(format!("z K z^-1 is not contained in J_aff for {}", g.display(&member)))
            })?;
            gamma = gamma.with(idx);
        }
        let pair = StandardPair { x, gamma, j };
        self.check_standard_pair(&pair)?;
        Ok(StandardData {
            member,
            w,
            y,
            k,
            z,
            pair,
        })
    }

    /// Asserts the defining properties of a standard pair.
    pub fn check_standard_pair(&self, p: &StandardPair) -> Result<()> {
        let g = self.group();
        let sys = self.system(p.j);
        let nu = g.newton_point(&p.x);
        let fail = |m: &str| Err(Error::Violation(format!("standard pair ({}, {:?}): {m}", g.display(&p.x), p.gamma)));
        if !self.datum().is_dominant_q(&nu) {
            return fail("ν_x is not dominant");
        }
        if self.datum().j_of_vector(&nu) != p.j {
            return fail("J differs from J_{ν_x}");
        }
        if !sys.is_finite_type(p.gamma) {
            return fail("W_Γ is infinite");
        }
        if !sys.in_group(&p.x) {
            return fail("x is not in W_J");
        }
        if sys.conj_nodes(&sys.omega_part(&p.x), p.gamma) != p.gamma || !gamma_stable(&sys, &p.x, p.gamma) {
            return fail("x Γ x^-1 != Γ");
        }
        Ok(())
    }

    /// `x = x'` and `Γ' = ω Γ ω^{-1}` for some `ω ∈ Ω_J`.
    pub fn pairs_equivalent(&self, p: &StandardPair, q: &StandardPair) -> bool {
        if p.j != q.j || p.x != q.x {
            return false;
        }
        self.omega_orbit(p.j, p.gamma).contains(&q.gamma)
    }

    /// Orbit of a subset of `J_aff` under conjugation by `Ω_J`.
    pub fn omega_orbit(&self, j: NodeSet, gamma: NodeSet) -> BTreeSet<NodeSet> {
        let sys = self.system(j);
        let om = sys.omega();
        let mut orbit = BTreeSet::new();
        orbit.insert(gamma);
        let mut queue = VecDeque::from([gamma]);
        while let Some(c) = queue.pop_front() {
            for p in &om.perms {
                let n = c.map(|i| p[i]);
                if orbit.insert(n) {
                    queue.push_back(n);
                }
            }
        }
        orbit
    }

    /// DOT graph of a class: equal-length cyclic shifts and `Ω` moves.
    pub fn class_dot(&self, class: &CyclicShiftClass) -> String {
        let g = self.group();
        let mut out = String::from("graph cyclic_shift {\n");
        for m in &class.members {
            out += &format!("  \"{}\";\n", g.display(m));
        }
        let mut edges = BTreeSet::new();
        for m in &class.members {
            for s in 0..g.num_simple() {
                let n = g.conj_simple(s, m);
                if n != *m && class.contains(&n) {
                    let (a, b) = if *m < n { (m.clone(), n) } else { (n, m.clone()) };
                    edges.insert((g.display(&a), g.display(&b), g.simple()[s].name.clone(), false));
                }
            }
            for (n, step) in self.omega_neighbors(m) {
                if let Step::Omega(k, false) = step {
                    if n != *m {
                        let (a, b) = if *m < n { (m.clone(), n) } else { (n, m.clone()) };
                        edges.insert((g.display(&a), g.display(&b), format!("o{}", k + 1), true));
                    }
                }
            }
        }
        for (a, b, label, dashed) in edges {
            let style = if dashed { ", style=dashed" } else { "" };
            out += &format!("  \"{a}\" -- \"{b}\" [label=\"{label}\"{style}];\n");
        }
        out.push_str("}\n");
        out
    }
}

/// The minimal length element of `W_K z`.
fn min_in_left_coset(g: &AffineWeyl, k: NodeSet, z: &AffineElement) -> AffineElement {
    let mut y = z.clone();
    let mut len = g.length(&y);
    'outer: loop {
        for s in k.iter() {
            let n = g.mul(g.s(s), &y);
            let l = g.length(&n);
            if l < len {
                y = n;
                len = l;
                continue 'outer;
            }
        }
        return y;
    }
}

/// The permutation `s ↦ y s y^{-1}` of `K`, if it maps `K` onto itself.
fn conj_perm_on(g: &AffineWeyl, y: &AffineElement, k: NodeSet) -> Option<Vec<usize>> {
    let inv = g.inverse(y);
    let mut perm: Vec<usize> = (0..g.num_simple()).collect();
    for s in k.iter() {
        let c = g.mul(&g.mul(y, g.s(s)), &inv);
        let idx = g.simple().iter().position(|t| t.element == c)?;
        if !k.contains(idx) {
            return None;
        }
        perm[s] = idx;
    }
    Some(perm)
}

fn gamma_stable(sys: &AffineWeyl, x: &AffineElement, gamma: NodeSet) -> bool {
    conj_perm_on(sys, x, gamma).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(name: &str) -> Context {
        Context::load(name).unwrap()
    }

    #[test]
    fn identity_and_omega_classes() {
        let c = ctx("A2-sc");
        let classes = c.enumerate_classes(0).unwrap();
        // Ω ≅ Z/3 is abelian: every element is its own conjugation orbit.
        assert_eq!(classes.len(), 3);
        for cl in &classes {
            assert_eq!(cl.members.len(), 1);
        }
        let id = c.class_of(&c.group().identity()).unwrap();
        assert_eq!(id.members, vec![c.group().identity()]);
    }

    #[test]
    fn simple_reflections_form_classes() {
        let c = ctx("A2-ad");
        let g = c.group();
        for i in 0..3 {
            let cl = c.class_of(g.s(i)).unwrap();
            assert_eq!(cl.members, vec![g.s(i).clone()]);
        }
        // Ω ≅ Z/3 permutes the three simple reflections.
        let c = ctx("A2-sc");
        let g = c.group();
        let cl = c.class_of(g.s(0)).unwrap();
        assert!(cl.contains(g.s(1)));
        assert!(cl.contains(g.s(2)));
        let data = c.standard_data(&cl).unwrap();
        assert!(data.y == g.identity());
        assert_eq!(data.pair.j, c.datum().all_simple());
    }

    #[test]
    fn step_classification() {
        let c = ctx("A2-ad");
        let g = c.group();
        let (_, k) = c.cyclic_shift_step(&g.identity(), 0);
        assert_eq!(k, StepKind::LengthPreserved);
        let (_, k) = c.cyclic_shift_step(g.s(1), 0);
        assert_eq!(k, StepKind::NotAStep);
        let e = g.mul(&g.mul(g.s(0), g.s(1)), g.s(0));
        let (_, k) = c.cyclic_shift_step(&e, 0);
        assert_eq!(k, StepKind::LengthDropped);
    }

    #[test]
    fn reduction_paths_end_minimal() {
        let c = ctx("A2-ad");
        let g = c.group();
        for level in g.enumerate(5).unwrap() {
            for e in level {
                let (m, path) = c.reduce_to_minimal(&e).unwrap();
                assert!(c.is_minimal(&m).unwrap());
                let mut cur = e.clone();
                for (step, next) in &path {
                    if let Step::Simple(s, _) = step {
                        assert_eq!(g.conj_simple(*s, &cur), *next);
                    }
                    cur = next.clone();
                }
                assert_eq!(cur, m);
            }
        }
    }

    #[test]
    fn classes_are_closed_and_disjoint() {
        for name in ["A1-sc", "A2-ad", "C2"] {
            let c = ctx(name);
            let g = c.group();
            let classes = c.enumerate_classes(4).unwrap();
            let mut all = HashSet::new();
            for cl in &classes {
                for m in &cl.members {
                    assert!(all.insert(m.clone()));
                    assert_eq!(g.length(m), cl.length);
                    assert_eq!(c.newton_point(m), cl.newton);
                    for s in 0..g.num_simple() {
                        let n = g.conj_simple(s, m);
                        if g.length(&n) == cl.length {
                            assert!(cl.contains(&n));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn a1_classes_short() {
        let c = ctx("A1-ad");
        let classes = c.enumerate_classes(1).unwrap();
        assert_eq!(classes.iter().filter(|k| k.length == 0).count(), 1);
        assert_eq!(classes.iter().filter(|k| k.length == 1).count(), 2);
        let c = ctx("A1-sc");
        let classes = c.enumerate_classes(1).unwrap();
        // τ swaps s1 and s0; t[1] and t[-1] are s1-conjugate.
        assert_eq!(classes.iter().filter(|k| k.length == 0).count(), 2);
        assert_eq!(classes.iter().filter(|k| k.length == 1).count(), 2);
    }

    #[test]
    fn standard_pairs_exist() {
        for name in ["A1-sc", "A1-ad", "A2-sc", "A2-ad", "C2", "G2"] {
            let c = ctx(name);
            let g = c.group();
            for cl in c.enumerate_classes(4).unwrap() {
                let d = c.standard_data(&cl).unwrap();
                assert!(cl.contains(&d.member));
                assert_eq!(g.mul(&d.w, &d.y), d.member);
                assert!(g.is_straight(&d.y));
                let sys = c.system(d.pair.j);
                assert_eq!(sys.length(&d.pair.x), 0, "{name} {}", g.display(&cl.rep));
            }
        }
    }

    #[test]
    fn pair_equivalence_basics() {
        let c = ctx("A2-sc");
        let cl = c.class_of(c.group().s(0)).unwrap();
        let p = c.standard_pair(&cl).unwrap();
        assert!(c.pairs_equivalent(&p, &p));
        let sys = c.system(p.j);
        let tau = &sys.omega().generators[0];
        let q = StandardPair {
            gamma: sys.conj_nodes(tau, p.gamma),
            ..p.clone()
        };
        assert!(c.pairs_equivalent(&p, &q));
        let r = StandardPair {
            x: c.group().translation(&[1, 1]),
            ..p.clone()
        };
        assert!(!c.pairs_equivalent(&p, &r));
    }

    #[test]
    fn precedes_basics() {
        let c = ctx("A2-ad");
        let g = c.group();
        let id = c.class_of(&g.identity()).unwrap();
        for level in g.enumerate(3).unwrap() {
            for e in level {
                assert!(c.precedes(&id, &e));
            }
        }
        let refl = c.class_of(g.s(0)).unwrap();
        assert!(!c.precedes(&refl, &g.identity()));
    }

    #[test]
    fn infinite_omega_refuses_enumeration() {
        let c = ctx("GL2");
        assert!(matches!(c.enumerate_classes(1), Err(Error::InfiniteOmega(_))));
    }

    #[test]
    fn sigma_agrees_with_bruteforce() {
        for name in ["A1-sc", "A2-ad", "C2"] {
            let c = ctx(name);
            let g = c.group();
            for level in g.enumerate(4).unwrap() {
                for e in level {
                    let (id, sign) = c.sigma(&e).unwrap();
                    assert_eq!(c.sigma_bruteforce(&e).unwrap(), id, "{name} {}", g.display(&e));
                    let all = c.sigma_all_choices(&e).unwrap();
                    assert_eq!(all.into_iter().collect::<Vec<_>>(), vec![(id, sign)]);
                }
            }
        }
    }
}
