//! Finite-dimensional modules given by generator matrices, and the induced
//! modules `π_{J,Γ,χ}`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::affine::{AffineElement, AffineWeyl};
use crate::context::Context;
use crate::error::{Error, Result};
use crate::field::{Field, Q};
use crate::hecke::HeckeAlgebra;
use crate::linalg::Matrix;
use crate::nodeset::NodeSet;

use super::parahoric::{Character, ParahoricDatum};

/// A module over the 0-Hecke algebra of `g`, given by the matrices of
/// `T_s` for the simple reflections and of `T_τ^{±1}` for the `Ω`
/// generators.
pub struct FDModule<F: Field> {
    g: Arc<AffineWeyl>,
    dim: usize,
    simple: Vec<Matrix<F>>,
    omega: Vec<Matrix<F>>,
    omega_inv: Vec<Matrix<F>>,
    pub label: String,
    cache: Mutex<HashMap<AffineElement, Matrix<F>>>,
}

impl<F: Field> Clone for FDModule<F> {
    fn clone(&self) -> Self {
        FDModule {
            g: self.g.clone(),
            dim: self.dim,
            simple: self.simple.clone(),
            omega: self.omega.clone(),
            omega_inv: self.omega_inv.clone(),
            label: self.label.clone(),
            cache: Mutex::new(HashMap::new()),
        }
    }
}

impl<F: Field> std::fmt::Debug for FDModule<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FDModule({}, dim {})", self.label, self.dim)
    }
}

impl<F: Field> FDModule<F> {
    /// Builds a module and checks the defining relations.
    pub fn new(
        g: Arc<AffineWeyl>,
        dim: usize,
        simple: Vec<Matrix<F>>,
        omega: Vec<Matrix<F>>,
        omega_inv: Vec<Matrix<F>>,
        label: String,
    ) -> Result<Self> {
        let m = FDModule {
            g,
            dim,
            simple,
            omega,
            omega_inv,
            label,
            cache: Mutex::new(HashMap::new()),
        };
        m.check_relations()?;
        Ok(m)
    }

    pub fn group(&self) -> &Arc<AffineWeyl> {
        &self.g
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn simple_matrix(&self, s: usize) -> &Matrix<F> {
        &self.simple[s]
    }

    pub fn omega_matrix(&self, k: usize) -> &Matrix<F> {
        &self.omega[k]
    }

    /// Quadratic and braid relations, `Ω`-compatibility, and the relations
    /// of `Ω` itself.
    pub fn check_relations(&self) -> Result<()> {
        let g = &*self.g;
        let n = g.num_simple();
        let id = Matrix::identity(self.dim);
        let fail = |m: String| Err(Error::Violation(format!("{}: {m}", self.label)));
        for s in 0..n {
            let a = &self.simple[s];
            if (a * a) != -a {
                return fail(format!("T_{}^2 != -T_{}", g.simple()[s].name, g.simple()[s].name));
            }
        }
        for a in 0..n {
            for b in 0..a {
                let pair = NodeSet::EMPTY.with(a).with(b);
                if !g.is_finite_type(pair) {
                    continue;
                }
                let m = g.parabolic(pair).len() / 2;
                let alt = |x: usize, y: usize| {
                    (0..m).fold(id.clone(), |acc, i| &acc * &self.simple[if i % 2 == 0 { x } else { y }])
                };
                if alt(a, b) != alt(b, a) {
                    return fail(format!("braid relation for {} {}", g.simple()[a].name, g.simple()[b].name));
                }
            }
        }
        let om = g.omega();
        for k in 0..om.ngens() {
            if &self.omega[k] * &self.omega_inv[k] != id {
                return fail(format!("T_τ{} is not inverted", k + 1));
            }
            for s in 0..n {
                let lhs = &(&self.omega[k] * &self.simple[s]) * &self.omega_inv[k];
                if lhs != self.simple[om.perms[k][s]] {
                    return fail(format!("Ω-compatibility for τ{} and {}", k + 1, g.simple()[s].name));
                }
            }
            for l in 0..k {
                if &self.omega[k] * &self.omega[l] != &self.omega[l] * &self.omega[k] {
                    return fail("Ω generators do not commute".into());
                }
            }
            let d = om.quotient.invariants[k];
            if d != 0 && self.omega[k].pow(d as u64) != id {
                return fail(format!("T_τ{}^{d} != 1", k + 1));
            }
        }
        Ok(())
    }

    fn omega_part_matrix(&self, tau: &AffineElement) -> Matrix<F> {
        let c = self.g.omega_coords(tau);
        let mut out = Matrix::identity(self.dim);
        for (k, &e) in c.iter().enumerate() {
            let m = if e >= 0 { &self.omega[k] } else { &self.omega_inv[k] };
            out = &out * &m.pow(e.unsigned_abs());
        }
        out
    }

    /// Matrix of `T_e`, along the canonical reduced word.
    pub fn action_matrix(&self, e: &AffineElement) -> Matrix<F> {
        if let Some(m) = self.cache.lock().unwrap().get(e) {
            return m.clone();
        }
        let (word, tau) = self.g.reduced_word(e);
        let m = self.word_matrix(&word, &tau);
        self.cache.lock().unwrap().insert(e.clone(), m.clone());
        m
    }

    /// Matrix of `T_{s_1} ⋯ T_{s_k} T_τ`.
    pub fn word_matrix(&self, word: &[usize], tau: &AffineElement) -> Matrix<F> {
        let mut out = Matrix::identity(self.dim);
        for &s in word {
            out = &out * &self.simple[s];
        }
        &out * &self.omega_part_matrix(tau)
    }

    pub fn trace(&self, e: &AffineElement) -> F {
        self.action_matrix(e).trace()
    }

    /// Matrix of `ιT_e`.
    pub fn iota_matrix(&self, e: &AffineElement) -> Matrix<F> {
        let (word, tau) = self.g.reduced_word(e);
        let id = Matrix::identity(self.dim);
        let mut out = id.clone();
        for s in word {
            out = &out * &(&-&self.simple[s] - &id);
        }
        &out * &self.omega_part_matrix(&tau)
    }

    /// The pullback through `ι`.
    pub fn iota_twist(&self) -> Result<Self> {
        let id = Matrix::identity(self.dim);
        FDModule::new(
            self.g.clone(),
            self.dim,
            self.simple.iter().map(|a| &-a - &id).collect(),
            self.omega.clone(),
            self.omega_inv.clone(),
            format!("ι*{}", self.label),
        )
    }

    /// Direct sum.
    pub fn direct_sum(&self, o: &Self) -> Result<Self> {
        let blk = |a: &Matrix<F>, b: &Matrix<F>| {
            let n = a.rows() + b.rows();
            let mut m = Matrix::zeros(n, n);
            for r in 0..a.rows() {
                for c in 0..a.cols() {
                    m[(r, c)] = a[(r, c)].clone();
                }
            }
            for r in 0..b.rows() {
                for c in 0..b.cols() {
                    m[(a.rows() + r, a.cols() + c)] = b[(r, c)].clone();
                }
            }
            m
        };
        let zip = |x: &[Matrix<F>], y: &[Matrix<F>]| x.iter().zip(y).map(|(a, b)| blk(a, b)).collect();
        FDModule::new(
            self.g.clone(),
            self.dim + o.dim,
            zip(&self.simple, &o.simple),
            zip(&self.omega, &o.omega),
            zip(&self.omega_inv, &o.omega_inv),
            format!("{} ⊕ {}", self.label, o.label),
        )
    }
}

/// The `H̃_{J,0}`-module `M = H̃_{J,0} ⊗_{H̃_{J,0}(Γ)} χ`, with basis
/// `T_τ ⊗ v` over coset representatives `τ`.
pub struct CosetModule<'a> {
    pub pd: &'a ParahoricDatum,
    pub chi: &'a Character,
}

impl CosetModule<'_> {
    pub fn dim(&self) -> usize {
        self.pd.index()
    }

    /// `χ` extended to `H̃_{J,0}(Γ)` at `T_b`, `b ∈ (W_J)_aff`.
    pub fn chi_aff(&self, b: &AffineElement) -> i64 {
        let sys = self.pd.system();
        if sys.support(b).is_subset(self.pd.gamma) {
            if sys.length(b).is_multiple_of(2) { 1 } else { -1 }
        } else {
            0
        }
    }

    /// Matrix of `T^J_u` for `u ∈ W̃_J`.
    pub fn matrix<F: Field>(&self, u: &AffineElement) -> Result<Matrix<F>> {
        let sys = self.pd.system();
        let pd = self.pd;
        let sigma = sys.omega_part(u);
        let a = sys.mul(u, &sys.inverse(&sigma));
        let cs = sys.omega_coords(&sigma);
        let supp = sys.support(&a);
        let sign = if sys.length(&a).is_multiple_of(2) { F::one() } else { -F::one() };
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            let ci = pd.coset_coords(i);
            let prod: Vec<i64> = cs.iter().zip(ci).map(|(x, y)| x + y).collect();
            let j = pd.coset_of(&prod);
            let omega: Vec<i64> = prod.iter().zip(pd.coset_coords(j)).map(|(x, y)| x - y).collect();
            let val: F = self.chi.eval_in(pd, &omega)?;
            // T_a acts on T_τ ⊗ v through τ^{-1} a τ
            let neg: Vec<i64> = pd.coset_coords(j).iter().map(|x| -x).collect();
            if pd.act(&neg, supp).is_subset(pd.gamma) {
                m[(j, i)] = val * sign.clone();
            }
        }
        Ok(m)
    }

    /// `M` as a module over the 0-Hecke algebra of `W̃_J`.
    pub fn module<F: Field>(&self) -> Result<FDModule<F>> {
        let sys = self.pd.system().clone();
        let om = sys.omega();
        let simple = (0..sys.num_simple())
            .map(|s| self.matrix(sys.s(s)))
            .collect::<Result<Vec<_>>>()?;
        let omega = om.generators.iter().map(|t| self.matrix(t)).collect::<Result<Vec<_>>>()?;
        let omega_inv = om.inverses.iter().map(|t| self.matrix(t)).collect::<Result<Vec<_>>>()?;
        FDModule::new(sys, self.dim(), simple, omega, omega_inv, format!("M{:?}", self.pd))
    }
}

/// Largest deep-shift multiplier tried, relative to the starting one.
const SHIFT_CAP: i64 = 1 << 10;

/// `π_{J,Γ,χ}` with basis `T_d ⊗ m_i`, `d ∈ W_0^J`.
pub fn induce<F: Field>(ctx: &Context, pd: &ParahoricDatum, chi: &Character) -> Result<FDModule<F>> {
    chi.validate(pd)?;
    let g = ctx.group_arc().clone();
    let h = HeckeAlgebra::new(g.clone());
    let rd = ctx.datum();
    let weyl = rd.weyl();
    let cm = CosetModule { pd, chi };
    let m = cm.dim();
    let reps = rd.min_coset_reps(pd.j);
    let nd = reps.len();
    let dim = nd * m;
    let deep = rd.deep_vector(pd.j);
    let sys = pd.system();

    let generator = |x: &AffineElement| -> Result<Matrix<F>> {
        let mut out = Matrix::zeros(dim, dim);
        for (di, &d) in reps.iter().enumerate() {
            let b0 = 1 + rd.roots().iter().map(|r| r.pair(&x.t).abs()).max().unwrap_or(0);
            let mut k = b0;
            let (d2, block, eps) = loop {
                let lam: Vec<i64> = deep.iter().map(|v| v * k).collect();
                let t = g.translation(&lam);
                let dt = g.mul(&g.finite(d), &t);
                debug_assert_eq!(g.length(&dt), weyl.length(d) + g.length(&t));
                let (z, eps) = h.mul_monomial(x, &dt).expect("0-Hecke products are monomial");
                let (dd, u) = g.coset_decompose(&z, pd.j);
                if g.length(&z) == weyl.length(dd) + g.length(&u) && sys.is_j_positive(&u)? {
                    let neg: Vec<i64> = lam.iter().map(|v| -v).collect();
                    let blk = &cm.matrix::<F>(&u)? * &cm.matrix::<F>(&sys.translation(&neg))?;
                    break (dd, blk, eps);
                }
                k *= 2;
                if k > SHIFT_CAP * b0 {
                    return Err(Error::Violation(format!(
                        "deep shift failed for {} on coset {} in {:?}",
                        g.display(x),
                        g.display(&g.finite(d)),
                        pd
                    )));
                }
            };
            let d2i = reps.iter().position(|&r| r == d2).expect("coset representative");
            let sign = F::from_i64(eps);
            for r in 0..m {
                for c in 0..m {
                    out[(d2i * m + r, di * m + c)] = block[(r, c)].clone() * sign.clone();
                }
            }
        }
        Ok(out)
    };

    let simple = (0..g.num_simple()).map(|s| generator(g.s(s))).collect::<Result<Vec<_>>>()?;
    let om = g.omega();
    let omega = om.generators.iter().map(&generator).collect::<Result<Vec<_>>>()?;
    let omega_inv = om.inverses.iter().map(&generator).collect::<Result<Vec<_>>>()?;
    FDModule::new(
        g.clone(),
        dim,
        simple,
        omega,
        omega_inv,
        format!("π({:?},{:?},{:?})", pd.j, pd.gamma, chi),
    )
}

/// `π_{J,Γ,χ}` over the rationals.
pub fn induce_q(ctx: &Context, pd: &ParahoricDatum, chi: &Character) -> Result<FDModule<Q>> {
    induce(ctx, pd, chi)
}
