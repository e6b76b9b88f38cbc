//! Characters on the cocenter basis: the closed formula, trace vectors,
//! decomposition in the `π`-basis, rigidity and supersingularity.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::affine::AffineElement;
use crate::cocenter::CocenterElement;
use crate::conjugacy::CyclicShiftClass;
use crate::context::Context;
use crate::error::{Error, Result};
use crate::field::{Field, Q};
use crate::hecke::{HeckeAlgebra, ZeroElement};
use crate::linalg::Matrix;
use crate::nodeset::NodeSet;

use super::module::{induce, FDModule};
use super::parahoric::{canonical_pair, precedes, Character, ParahoricDatum};

/// Value of the closed character formula.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FormulaValue {
    Value(Q),
    /// `∅ ≠ J ⊊ J_{ν_x}`: no closed form.
    NotCovered,
}

/// Which case of the closed formula applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FormulaCase {
    NotContained,
    NotInStabilizer,
    Stabilized,
    NotCovered,
}

/// `Tr(T_w, π_{J,Γ,χ})` for `w` in `class`, by the closed formula.
pub fn char_formula(
    ctx: &Context,
    class: &CyclicShiftClass,
    pd: &ParahoricDatum,
    chi: &Character,
) -> Result<(FormulaCase, FormulaValue)> {
    let data = ctx.standard_data(class)?;
    let p = &data.pair;
    if !pd.j.is_subset(p.j) {
        return Ok((FormulaCase::NotContained, FormulaValue::Value(Q::from_integer(0))));
    }
    if pd.j != p.j {
        return Ok((FormulaCase::NotCovered, FormulaValue::NotCovered));
    }
    if !pd.contains(&p.x) {
        return Ok((FormulaCase::NotInStabilizer, FormulaValue::Value(Q::from_integer(0))));
    }
    let g = ctx.group();
    let sys = pd.system();
    let xc = sys.omega_coords(&p.x);
    let count = (0..pd.index())
        .filter(|&i| {
            let neg: Vec<i64> = pd.coset_coords(i).iter().map(|v| -v).collect();
            pd.act(&neg, p.gamma).is_subset(pd.gamma)
        })
        .count();
    let sign = if (i64::from(class.length) - i64::from(g.length(&p.x))) % 2 == 0 { 1 } else { -1 };
    let v = chi.eval(pd, &xc)? * Q::from_integer(sign * count as i128);
    Ok((FormulaCase::Stabilized, FormulaValue::Value(v)))
}

/// Traces of `T_{rep}` over a list of classes.
pub fn char_vector<F: Field>(m: &FDModule<F>, classes: &[Arc<CyclicShiftClass>]) -> Vec<F> {
    classes.iter().map(|c| m.trace(&c.rep)).collect()
}

/// `Tr(h, M)` for a cocenter element, given the character vector.
pub fn cocenter_trace<F: Field>(
    h: &CocenterElement,
    classes: &[Arc<CyclicShiftClass>],
    chars: &[F],
) -> Result<F> {
    let mut out = F::zero();
    for (rep, c) in h.terms() {
        let i = classes
            .iter()
            .position(|k| &k.rep == rep)
            .ok_or_else(|| Error::Violation("class beyond the length bound".into()))?;
        out = out + chars[i].clone() * F::from_i64(c);
    }
    Ok(out)
}

/// One basis module `π_{J,Γ,χ}` with its character vector.
pub struct Candidate {
    pub pd: ParahoricDatum,
    pub chi: Character,
    pub pair: (NodeSet, NodeSet),
    pub chars: Vec<Q>,
}

impl Candidate {
    pub fn build(ctx: &Context, pd: ParahoricDatum, chi: Character, classes: &[Arc<CyclicShiftClass>]) -> Result<Self> {
        let m = induce::<Q>(ctx, &pd, &chi)?;
        let chars = char_vector(&m, classes);
        let pair = canonical_pair(ctx, pd.j, pd.gamma);
        Ok(Candidate { pd, chi, pair, chars })
    }

    pub fn label(&self) -> String {
        format!("({:?}, {:?}, {:?})", self.pd.j, self.pd.gamma, self.chi)
    }
}

/// Canonical `(J_{ν_x}, Γ)` of a class's standard pair.
pub fn class_pair(ctx: &Context, class: &CyclicShiftClass) -> Result<(NodeSet, NodeSet)> {
    let p = ctx.standard_pair(class)?;
    Ok(canonical_pair(ctx, p.j, p.gamma))
}

/// Integer coefficients of a virtual character in the basis of
/// candidate characters, found by peeling off minimal pairs.
pub fn decompose(
    ctx: &Context,
    target: &[Q],
    classes: &[Arc<CyclicShiftClass>],
    candidates: &[Candidate],
) -> Result<Vec<i64>> {
    let pairs = classes
        .iter()
        .map(|c| class_pair(ctx, c))
        .collect::<Result<Vec<_>>>()?;
    let mut residual = target.to_vec();
    let mut coeffs = vec![0i64; candidates.len()];
    let zero = Q::from_integer(0);
    loop {
        let support: Vec<usize> = (0..classes.len()).filter(|&i| residual[i] != zero).collect();
        if support.is_empty() {
            return Ok(coeffs);
        }
        let mut aleph: Vec<(NodeSet, NodeSet)> = support.iter().map(|&i| pairs[i]).collect();
        aleph.sort_by_key(|p| (p.0.sort_key(), p.1.sort_key()));
        aleph.dedup();
        let minimal: Vec<(NodeSet, NodeSet)> = aleph
            .iter()
            .copied()
            .filter(|&p| !aleph.iter().any(|&q| q != p && precedes(ctx, q, p)))
            .collect();
        let mut progress = false;
        for p in minimal {
            let rows: Vec<usize> = (0..classes.len()).filter(|&i| pairs[i] == p).collect();
            let cols: Vec<usize> = (0..candidates.len()).filter(|&k| candidates[k].pair == p).collect();
            let fail = |why: &str, residual: &[Q]| {
                let i = rows.iter().copied().find(|&i| residual[i] != zero).unwrap_or(rows[0]);
                Err(Error::Decomposition(format!(
                    "{why} for pair {:?}; smallest offending class {} (length {})",
                    p,
                    ctx.group().display(&classes[i].rep),
                    classes[i].length
                )))
            };
            if cols.is_empty() {
                return fail("no candidate", &residual);
            }
            let a = Matrix::from_rows(
                rows.iter()
                    .map(|&i| cols.iter().map(|&k| candidates[k].chars[i]).collect())
                    .collect(),
            );
            if a.rank() < cols.len() {
                return fail("candidates not separated at this bound", &residual);
            }
            let b: Vec<Q> = rows.iter().map(|&i| residual[i]).collect();
            let Some(x) = a.solve(&b) else {
                return fail("no solution", &residual);
            };
            for (&k, v) in cols.iter().zip(&x) {
                if !v.is_integer() {
                    return fail("non-integral multiplicity", &residual);
                }
                let c = *v.numer() as i64;
                if c != 0 {
                    progress = true;
                    coeffs[k] += c;
                    for i in 0..classes.len() {
                        residual[i] -= candidates[k].chars[i] * Q::from_integer(c as i128);
                    }
                }
            }
        }
        if !progress {
            let i = support[0];
            return Err(Error::Decomposition(format!(
                "residual does not decrease; smallest offending class {}",
                ctx.group().display(&classes[i].rep)
            )));
        }
    }
}

/// Traces vanish on every non-rigid class in the list.
pub fn is_rigid<F: Field>(ctx: &Context, classes: &[Arc<CyclicShiftClass>], chars: &[F]) -> bool {
    classes
        .iter()
        .zip(chars)
        .all(|(c, v)| !ctx.is_non_rigid(c) || v.is_zero())
}

/// Outcome of a bounded check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    /// The window to check was empty.
    Vacuous,
}

/// `E_w` at `q = 0`, computed on demand and cached.
pub struct EBasisTable {
    h: HeckeAlgebra,
    choices: i64,
    cache: Mutex<HashMap<AffineElement, ZeroElement>>,
}

impl EBasisTable {
    pub fn new(ctx: &Context, choices: i64) -> Self {
        EBasisTable { h: HeckeAlgebra::new(ctx.group_arc().clone()), choices, cache: Mutex::new(HashMap::new()) }
    }

    pub fn get(&self, w: &AffineElement) -> Result<ZeroElement> {
        if let Some(e) = self.cache.lock().unwrap().get(w) {
            return Ok(e.clone());
        }
        let e = self.h.e_basis_checked(w, self.choices)?.1;
        self.cache.lock().unwrap().insert(w.clone(), e.clone());
        Ok(e)
    }
}

/// `E_w M = 0` for every listed `w` with `lower < ℓ(w) ≤ max_len`.
pub fn e_vanishing<F: Field>(
    m: &FDModule<F>,
    elements: &[AffineElement],
    table: &EBasisTable,
    lower: u32,
    max_len: u32,
) -> Result<Verdict> {
    let g = m.group();
    let mut any = false;
    for w in elements {
        let l = g.length(w);
        if l <= lower || l > max_len {
            continue;
        }
        any = true;
        let mut acc = Matrix::zeros(m.dim(), m.dim());
        for (z, &c) in table.get(w)?.terms() {
            acc = &acc + &m.action_matrix(z).scale(&F::from_i64(c));
        }
        if !acc.is_zero() {
            return Ok(Verdict::Fail);
        }
    }
    Ok(if any { Verdict::Pass } else { Verdict::Vacuous })
}

/// The three supersingularity criteria for one module.
#[derive(Clone, Debug)]
pub struct SupersingularEvidence {
    /// `E_w M = 0` for long `w`.
    pub e_vanishing: Verdict,
    /// Traces vanish on the non-supersingular part of the cocenter.
    pub nss_traces_vanish: bool,
    /// All multiplicities sit on `(F₀, Γ)` with `Γ` and `S_aff \ Γ` of
    /// finite type; `None` if the decomposition failed.
    pub in_supersingular_span: Option<bool>,
}

impl SupersingularEvidence {
    /// The verdict, or an error if evaluated criteria disagree.
    pub fn verdict(&self) -> Result<bool> {
        let mut votes = vec![self.nss_traces_vanish];
        if let Some(b) = self.in_supersingular_span {
            votes.push(b);
        }
        match self.e_vanishing {
            Verdict::Pass => votes.push(true),
            Verdict::Fail => votes.push(false),
            Verdict::Vacuous => {}
        }
        if votes.iter().all(|&v| v == votes[0]) {
            Ok(votes[0])
        } else {
            Err(Error::Violation(format!("supersingularity criteria disagree: {self:?}")))
        }
    }
}

/// Whether `(F₀, Γ)` and `(F₀, S_aff \ Γ)` both lie in `ℵ`.
pub fn is_supersingular_pair(ctx: &Context, pair: (NodeSet, NodeSet)) -> bool {
    let g = ctx.group();
    pair.0 == ctx.datum().all_simple()
        && g.is_finite_type(pair.1)
        && g.is_finite_type(g.all_nodes().difference(pair.1))
}

/// `2 max(#W_Γ, #W_{S_aff \ Γ})` when both are finite.
pub fn supersingular_bound(ctx: &Context, gamma: NodeSet) -> Option<u32> {
    let g = ctx.group();
    let rest = g.all_nodes().difference(gamma);
    if g.is_finite_type(gamma) && g.is_finite_type(rest) {
        Some(2 * g.parabolic(gamma).len().max(g.parabolic(rest).len()) as u32)
    } else {
        None
    }
}

/// Evaluates all three supersingularity criteria.
#[allow(clippy::too_many_arguments)]
pub fn supersingular_evidence(
    ctx: &Context,
    m: &FDModule<Q>,
    chars: &[Q],
    classes: &[Arc<CyclicShiftClass>],
    nss: &[CocenterElement],
    candidates: &[Candidate],
    elements: &[AffineElement],
    table: &EBasisTable,
    e_lower: u32,
    max_len: u32,
) -> Result<SupersingularEvidence> {
    let mut nss_traces_vanish = true;
    for h in nss {
        if !cocenter_trace(h, classes, chars)?.is_zero() {
            nss_traces_vanish = false;
        }
    }
    let in_supersingular_span = decompose(ctx, chars, classes, candidates).ok().map(|coeffs| {
        coeffs
            .iter()
            .zip(candidates)
            .all(|(&c, k)| c == 0 || is_supersingular_pair(ctx, k.pair))
    });
    Ok(SupersingularEvidence {
        e_vanishing: e_vanishing(m, elements, table, e_lower, max_len)?,
        nss_traces_vanish,
        in_supersingular_span,
    })
}

/// Character vectors keyed by class representative, for lookups.
pub fn char_map(classes: &[Arc<CyclicShiftClass>], chars: &[Q]) -> HashMap<AffineElement, Q> {
    classes.iter().map(|c| c.rep.clone()).zip(chars.iter().copied()).collect()
}
