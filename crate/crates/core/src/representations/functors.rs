//! `M ↦ M_J = ∩ T_{t^λ} M` and `M_J ↦ M_{J,Γ} = T^J_{w_Γ} M_J`.

use crate::affine::AffineElement;
use crate::context::Context;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{restrict, Matrix};
use crate::nodeset::NodeSet;

use super::module::FDModule;

/// `M_J` as a module over the 0-Hecke algebra of `W̃_J`, with the basis of
/// the stable image used to express it.
pub struct LeviRestriction<F: Field> {
    pub module: FDModule<F>,
    /// Basis of `M_J ⊆ M`, as columns.
    pub basis: Vec<Vec<F>>,
}

fn stable_image<F: Field>(a: &Matrix<F>) -> Vec<Vec<F>> {
    a.pow(a.rows().max(1) as u64).column_space()
}

fn same_span<F: Field>(a: &[Vec<F>], b: &[Vec<F>], n: usize) -> bool {
    if a.len() != b.len() {
        return false;
    }
    if a.is_empty() {
        return true;
    }
    let mut all = a.to_vec();
    all.extend(b.iter().cloned());
    Matrix::from_columns(n, &all).rank() == a.len()
}

/// The `J`-positive element `u t^λ` for a multiple `λ` of the deep vector
/// of `J`, and that `λ`.
fn positive_shift(ctx: &Context, j: NodeSet, u: &AffineElement) -> (AffineElement, Vec<i64>) {
    let rd = ctx.datum();
    let g = ctx.group();
    let deep = rd.deep_vector(j);
    let sys = ctx.system(j);
    let mut k = 1;
    loop {
        let lam: Vec<i64> = deep.iter().map(|v| v * k).collect();
        let shifted = g.mul(u, &g.translation(&lam));
        if sys.is_j_positive(&shifted).unwrap_or(false) {
            return (shifted, lam);
        }
        k *= 2;
    }
}

/// `M_J` of a module over the full 0-Hecke algebra.
pub fn m_j<F: Field>(ctx: &Context, m: &FDModule<F>, j: NodeSet) -> Result<LeviRestriction<F>> {
    let g = ctx.group();
    let rd = ctx.datum();
    let n = m.dim();
    let deep = rd.deep_vector(j);
    let mu = g.translation(&deep);
    let basis = stable_image(&m.action_matrix(&mu));
    let mu2: Vec<i64> = deep.iter().map(|v| 3 * v).collect();
    let other = stable_image(&m.action_matrix(&g.translation(&mu2)));
    if !same_span(&basis, &other, n) {
        return Err(Error::Violation(format!("M_J depends on the choice of λ for J = {j:?}")));
    }
    let sys = ctx.system(j);
    let restricted = |u: &AffineElement| -> Result<Matrix<F>> {
        if basis.is_empty() {
            return Ok(Matrix::zeros(0, 0));
        }
        let (shifted, lam) = positive_shift(ctx, j, u);
        let a = restrict(&m.action_matrix(&shifted), &basis)
            .ok_or_else(|| Error::Violation("M_J is not stable".into()))?;
        let t = restrict(&m.action_matrix(&g.translation(&lam)), &basis)
            .ok_or_else(|| Error::Violation("M_J is not stable".into()))?;
        let tinv = t
            .inverse()
            .ok_or_else(|| Error::Violation("T_{t^λ} is not invertible on M_J".into()))?;
        Ok(&a * &tinv)
    };
    let simple = (0..sys.num_simple())
        .map(|s| restricted(sys.s(s)))
        .collect::<Result<Vec<_>>>()?;
    let om = sys.omega();
    let omega = om.generators.iter().map(&restricted).collect::<Result<Vec<_>>>()?;
    let omega_inv = om.inverses.iter().map(&restricted).collect::<Result<Vec<_>>>()?;
    let module = FDModule::new(
        sys.clone(),
        basis.len(),
        simple,
        omega,
        omega_inv,
        format!("({})_{j:?}", m.label),
    )?;
    Ok(LeviRestriction { module, basis })
}

/// `M_{J,Γ}` with its `Ω_J(Γ)` action: the image of `T^J_{w_Γ}` on `M_J`.
pub struct GammaPart<'a, F: Field> {
    pub levi: &'a FDModule<F>,
    pub basis: Vec<Vec<F>>,
}

impl<'a, F: Field> GammaPart<'a, F> {
    pub fn new(levi: &'a FDModule<F>, gamma: NodeSet) -> Self {
        let sys = levi.group();
        let w = sys.longest(gamma);
        let basis = if levi.dim() == 0 {
            Vec::new()
        } else {
            levi.action_matrix(&w).column_space()
        };
        GammaPart { levi, basis }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// `Tr(T^J_x, M_{J,Γ})` for `x ∈ Ω_J(Γ)`.
    pub fn trace(&self, x: &AffineElement) -> Result<F> {
        if self.basis.is_empty() {
            return Ok(F::zero());
        }
        let a = restrict(&self.levi.action_matrix(x), &self.basis)
            .ok_or_else(|| Error::Violation("M_{J,Γ} is not stable under Ω_J(Γ)".into()))?;
        Ok(a.trace())
    }
}
