//! Pairs `(J, Γ)`, the stabilizers `Ω_J(Γ)`, their cosets and characters.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::affine::{AffineElement, AffineWeyl};
use crate::context::Context;
use crate::error::{Error, Result};
use crate::field::{fmt_q, Field, Q};
use crate::lattice::{lattice_basis, solve_integer, AbelianQuotient};
use crate::nodeset::NodeSet;

/// `(J, Γ)` with `Γ ⊆ J_aff` of finite type, together with `Ω_J(Γ)` and a
/// choice of representatives of `Ω_J / Ω_J(Γ)`.
#[derive(Clone)]
pub struct ParahoricDatum {
    pub j: NodeSet,
    pub gamma: NodeSet,
    sys: Arc<AffineWeyl>,
    /// Period of each `Ω_J` coordinate for the conjugation action on `J_aff`.
    periods: Vec<i64>,
    /// Basis (in `Ω_J` coordinates) of the lattice of stabilizing coordinates.
    stab_basis: Vec<Vec<i64>>,
    /// `Ω_J(Γ)` as an abstract group, in coordinates of `stab_basis`.
    pub stabilizer: AbelianQuotient,
    /// Coset representatives, in `Ω_J` coordinates; the first is `0`.
    cosets: Vec<Vec<i64>>,
    /// `τ_i Γ τ_i^{-1}` for the `i`-th representative.
    orbit: Vec<NodeSet>,
}

impl fmt::Debug for ParahoricDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}, {:?})", self.j, self.gamma)
    }
}

fn perm_pow(p: &[usize], e: i64, period: i64) -> Vec<usize> {
    let e = e.rem_euclid(period);
    let mut out: Vec<usize> = (0..p.len()).collect();
    for _ in 0..e {
        out = out.iter().map(|&i| p[i]).collect();
    }
    out
}

fn perm_order(p: &[usize]) -> i64 {
    let id: Vec<usize> = (0..p.len()).collect();
    let mut cur = p.to_vec();
    let mut k = 1;
    while cur != id {
        cur = cur.iter().map(|&i| p[i]).collect();
        k += 1;
    }
    k
}

impl ParahoricDatum {
    pub fn new(ctx: &Context, j: NodeSet, gamma: NodeSet) -> Result<Self> {
        if !j.is_subset(ctx.datum().all_simple()) {
            return Err(Error::InvalidParahoric(format!("J = {j:?} is not a set of simple roots")));
        }
        let sys = ctx.system(j);
        if !gamma.is_subset(sys.all_nodes()) {
            return Err(Error::InvalidParahoric(format!("Γ = {gamma:?} is not contained in J_aff")));
        }
        if !sys.is_finite_type(gamma) {
            return Err(Error::InvalidParahoric(format!("W_Γ is infinite for Γ = {gamma:?}")));
        }
        let om = sys.omega();
        let q = &om.quotient;
        let periods: Vec<i64> = q
            .invariants
            .iter()
            .zip(&om.perms)
            .map(|(&d, p)| if d == 0 { perm_order(p) } else { d })
            .collect();
        let n = periods.len();
        let mut box_elems = vec![Vec::new()];
        for &p in &periods {
            box_elems = box_elems
                .into_iter()
                .flat_map(|v: Vec<i64>| {
                    (0..p).map(move |k| {
                        let mut w = v.clone();
                        w.push(k);
                        w
                    })
                })
                .collect();
        }
        let mut stab_gens: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|k| if k == i { periods[i] } else { 0 }).collect())
            .collect();
        let mut cosets = Vec::new();
        let mut orbit = Vec::new();
        let act = |c: &[i64], k: NodeSet| -> NodeSet {
            let mut out = k;
            for (i, &e) in c.iter().enumerate() {
                let p = perm_pow(&om.perms[i], e, periods[i]);
                out = out.map(|x| p[x]);
            }
            out
        };
        for c in &box_elems {
            let image = act(c, gamma);
            if image == gamma {
                stab_gens.push(c.clone());
            }
            if !orbit.contains(&image) {
                orbit.push(image);
                cosets.push(c.clone());
            }
        }
        let stab_basis = if n == 0 { Vec::new() } else { lattice_basis(n, &stab_gens) };
        let relations: Vec<Vec<i64>> = q
            .invariants
            .iter()
            .enumerate()
            .filter(|(_, &d)| d != 0)
            .map(|(i, &d)| {
                let v: Vec<i64> = (0..n).map(|k| if k == i { d } else { 0 }).collect();
                solve_integer(&stab_basis, &v).expect("relations lie in the stabilizer")
            })
            .collect();
        let stabilizer = AbelianQuotient::new(stab_basis.len(), &relations);
        Ok(ParahoricDatum {
            j,
            gamma,
            sys,
            periods,
            stab_basis,
            stabilizer,
            cosets,
            orbit,
        })
    }

    pub fn system(&self) -> &Arc<AffineWeyl> {
        &self.sys
    }

    /// `[Ω_J : Ω_J(Γ)]`.
    pub fn index(&self) -> usize {
        self.cosets.len()
    }

    pub fn orbit(&self) -> &[NodeSet] {
        &self.orbit
    }

    /// `τ K τ^{-1}` for `τ` with the given `Ω_J` coordinates.
    pub fn act(&self, c: &[i64], k: NodeSet) -> NodeSet {
        let om = self.sys.omega();
        let mut out = k;
        for (i, &e) in c.iter().enumerate() {
            let p = perm_pow(&om.perms[i], e, self.periods[i]);
            out = out.map(|x| p[x]);
        }
        out
    }

    pub fn coset_rep(&self, i: usize) -> AffineElement {
        self.sys.omega_lift(&self.cosets[i])
    }

    pub fn coset_coords(&self, i: usize) -> &[i64] {
        &self.cosets[i]
    }

    /// The coset of `Ω_J(Γ)` containing the element with coordinates `c`.
    pub fn coset_of(&self, c: &[i64]) -> usize {
        let image = self.act(c, self.gamma);
        self.orbit.iter().position(|&o| o == image).expect("orbit is complete")
    }

    pub fn stabilizes(&self, c: &[i64]) -> bool {
        self.act(c, self.gamma) == self.gamma
    }

    /// Whether `x ∈ Ω_J(Γ)`; `x` must lie in `W̃_J`.
    pub fn contains(&self, x: &AffineElement) -> bool {
        self.sys.in_group(x) && self.sys.length(x) == 0 && self.stabilizes(&self.sys.omega_coords(x))
    }

    /// Coordinates of an element of `Ω_J(Γ)` (given by `Ω_J` coordinates) in
    /// the abstract group `stabilizer`.
    pub fn stabilizer_coords(&self, c: &[i64]) -> Result<Vec<i64>> {
        if self.stab_basis.is_empty() {
            return Ok(Vec::new());
        }
        let a = solve_integer(&self.stab_basis, c)
            .ok_or_else(|| Error::Violation(format!("{c:?} does not stabilize {:?}", self.gamma)))?;
        Ok(self.stabilizer.coords(&a))
    }

    /// Generators of `Ω_J(Γ)`, as length-zero elements of `W̃_J`.
    pub fn stabilizer_generators(&self) -> Vec<AffineElement> {
        let n = self.periods.len();
        self.stabilizer
            .generators
            .iter()
            .map(|g| {
                let mut c = vec![0i64; n];
                for (k, b) in g.iter().zip(&self.stab_basis) {
                    for i in 0..n {
                        c[i] += k * b[i];
                    }
                }
                self.sys.omega_lift(&self.sys.omega().quotient.normalize(&c))
            })
            .collect()
    }

    /// The `∼`-canonical `Γ`: least element of the `Ω_J`-orbit.
    pub fn canonical_gamma(&self) -> NodeSet {
        *self.orbit.iter().min_by_key(|k| k.sort_key()).unwrap()
    }

    pub fn gamma_names(&self) -> Vec<&str> {
        self.sys.node_names(self.gamma)
    }
}

/// `(J, Γ) ∼ (J', Γ')`.
pub fn equivalent(ctx: &Context, a: (NodeSet, NodeSet), b: (NodeSet, NodeSet)) -> bool {
    a.0 == b.0 && ctx.omega_orbit(a.0, a.1).contains(&b.1)
}

/// `(J, Γ) < (J', Γ')`: `J ⊊ J'`, or `J = J'` and `Γ ⊋ τ Γ' τ^{-1}`.
pub fn precedes(ctx: &Context, a: (NodeSet, NodeSet), b: (NodeSet, NodeSet)) -> bool {
    if a.0 != b.0 {
        return a.0.is_subset(b.0);
    }
    ctx.omega_orbit(b.0, b.1)
        .iter()
        .any(|&g| g.is_subset(a.1) && g != a.1)
}

/// `∼`-canonical form of a pair.
pub fn canonical_pair(ctx: &Context, j: NodeSet, gamma: NodeSet) -> (NodeSet, NodeSet) {
    let g = ctx
        .omega_orbit(j, gamma)
        .into_iter()
        .min_by_key(|k| k.sort_key())
        .unwrap();
    (j, g)
}

/// All pairs `(J, Γ)` up to `∼`, ordered by `J` and then `Γ`.
pub fn all_pairs(ctx: &Context) -> Vec<(NodeSet, NodeSet)> {
    let mut out = BTreeSet::new();
    for j in ctx.datum().all_simple().subsets() {
        let sys = ctx.system(j);
        for gamma in sys.all_nodes().subsets() {
            if sys.is_finite_type(gamma) {
                let c = canonical_pair(ctx, j, gamma);
                out.insert(((c.0.sort_key(), c.1.sort_key()), c));
            }
        }
    }
    out.into_iter().map(|(_, c)| c).collect()
}

/// A character of `Ω_J(Γ)`: one nonzero value per generator of the
/// stabilizer (torsion generators first).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Character {
    pub values: Vec<Q>,
}

impl fmt::Debug for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.values.iter().map(fmt_q).collect();
        write!(f, "[{}]", v.join(","))
    }
}

impl Character {
    pub fn trivial(pd: &ParahoricDatum) -> Self {
        Character {
            values: vec![Q::from_integer(1); pd.stabilizer.ngens()],
        }
    }

    pub fn new(pd: &ParahoricDatum, values: Vec<Q>) -> Result<Self> {
        let c = Character { values };
        c.validate(pd)?;
        Ok(c)
    }

    pub fn validate(&self, pd: &ParahoricDatum) -> Result<()> {
        let inv = &pd.stabilizer.invariants;
        if self.values.len() != inv.len() {
            return Err(Error::InvalidCharacter(format!(
                "expected {} values, got {}",
                inv.len(),
                self.values.len()
            )));
        }
        for (v, &d) in self.values.iter().zip(inv) {
            if Field::is_zero(v) {
                return Err(Error::InvalidCharacter("zero value".into()));
            }
            if d != 0 && Field::pow(v, d as u64) != Q::from_integer(1) {
                return Err(Error::InvalidCharacter(format!(
                    "value {} on a generator of order {d}",
                    fmt_q(v)
                )));
            }
        }
        Ok(())
    }

    /// Every character with the given values on free generators and all
    /// rational roots of unity on torsion generators.
    pub fn catalog(pd: &ParahoricDatum, free_values: &[Q]) -> Vec<Self> {
        let mut out = vec![Vec::new()];
        for &d in &pd.stabilizer.invariants {
            let choices: Vec<Q> = if d == 0 {
                free_values.to_vec()
            } else if d % 2 == 0 {
                vec![Q::from_integer(1), Q::from_integer(-1)]
            } else {
                vec![Q::from_integer(1)]
            };
            out = out
                .into_iter()
                .flat_map(|v: Vec<Q>| {
                    choices.iter().map(move |c| {
                        let mut w = v.clone();
                        w.push(*c);
                        w
                    })
                })
                .collect();
        }
        out.into_iter().map(|values| Character { values }).collect()
    }

    /// `χ` at the element of `Ω_J(Γ)` with `Ω_J` coordinates `c`.
    pub fn eval(&self, pd: &ParahoricDatum, c: &[i64]) -> Result<Q> {
        let sc = pd.stabilizer_coords(c)?;
        Ok(self
            .values
            .iter()
            .zip(sc)
            .fold(Q::from_integer(1), |acc, (v, k)| acc * Field::powi(v, k)))
    }

    pub fn eval_in<F: Field>(&self, pd: &ParahoricDatum, c: &[i64]) -> Result<F> {
        let q = self.eval(pd, c)?;
        F::from_q(&q).ok_or_else(|| Error::InvalidCharacter(format!("{} is not defined in the field", fmt_q(&q))))
    }
}
