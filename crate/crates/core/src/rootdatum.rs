//! Based root data, their root systems and finite Weyl groups.
//!
//! Roots live in `X`, coroots in `Y`; both are `Z^n` and the pairing
//! `<x, y> = x^T P y` is given by an integer matrix `P` with `det P = ±1`.

use std::collections::{HashMap, VecDeque};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Field, Q};
use crate::lattice::{determinant, IntMatrix};
use crate::linalg::Matrix;
use crate::nodeset::NodeSet;

/// Index of an element of the finite Weyl group. Indices follow the
/// shortlex order of canonical reduced words; `0` is the identity.
pub type WIdx = u32;

const MAX_ROOTS: usize = 4096;
const TABLE_LIMIT: usize = 2048;

/// Declarative description of a based root datum (the JSON schema).
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "camelCase")]
pub struct RootDatumSpec {
    pub name: String,
    pub x_rank: usize,
    pub pairing: Vec<Vec<i64>>,
    pub simple_roots: Vec<Vec<i64>>,
    pub simple_coroots: Vec<Vec<i64>>,
}

impl RootDatumSpec {
    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("spec serializes")
    }
}

/// A root together with its coroot.
#[derive(Clone, Debug)]
pub struct Root {
    /// The root as a vector of `X`.
    pub vector: Vec<i64>,
    /// The coroot as a vector of `Y`.
    pub coroot: Vec<i64>,
    /// `P * coroot`, so that `<x, coroot> = x . functional`.
    pub functional: Vec<i64>,
    /// Coordinates in the simple roots.
    pub coeffs: Vec<i64>,
    /// Coordinates of the coroot in the simple coroots.
    pub co_coeffs: Vec<i64>,
}

impl Root {
    pub fn height(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.coeffs.iter().all(|&c| c >= 0)
    }

    pub fn pair(&self, x: &[i64]) -> i64 {
        x.iter().zip(&self.functional).map(|(a, b)| a * b).sum()
    }

    pub fn pair_q(&self, x: &[Q]) -> Q {
        x.iter()
            .zip(&self.functional)
            .fold(Q::from_integer(0), |acc, (a, &b)| acc + *a * Q::from_integer(b as i128))
    }
}

#[derive(Clone, Debug)]
struct WeylData {
    perm: Vec<u16>,
    matrix: IntMatrix,
    word: Vec<u8>,
    length: u32,
    inverse: WIdx,
}

/// The finite Weyl group `W_0`, fully enumerated.
#[derive(Clone, Debug)]
pub struct FiniteWeylGroup {
    elems: Vec<WeylData>,
    index: HashMap<Vec<u16>, WIdx>,
    right_simple: Vec<Vec<WIdx>>,
    left_simple: Vec<Vec<WIdx>>,
    table: Option<Vec<WIdx>>,
    longest: WIdx,
}

impl FiniteWeylGroup {
    pub fn order(&self) -> usize {
        self.elems.len()
    }

    pub fn identity(&self) -> WIdx {
        0
    }

    pub fn length(&self, w: WIdx) -> u32 {
        self.elems[w as usize].length
    }

    /// Canonical (shortlex-minimal) reduced word, as simple-root indices.
    pub fn word(&self, w: WIdx) -> &[u8] {
        &self.elems[w as usize].word
    }

    /// Matrix of the action on `X`.
    pub fn matrix(&self, w: WIdx) -> &IntMatrix {
        &self.elems[w as usize].matrix
    }

    /// Permutation of root indices.
    pub fn perm(&self, w: WIdx) -> &[u16] {
        &self.elems[w as usize].perm
    }

    pub fn root_image(&self, w: WIdx, r: usize) -> usize {
        self.elems[w as usize].perm[r] as usize
    }

    pub fn inverse(&self, w: WIdx) -> WIdx {
        self.elems[w as usize].inverse
    }

    pub fn longest(&self) -> WIdx {
        self.longest
    }

    pub fn simple(&self, i: usize) -> WIdx {
        self.right_simple[0][i]
    }

    pub fn mul(&self, a: WIdx, b: WIdx) -> WIdx {
        if let Some(t) = &self.table {
            return t[a as usize * self.elems.len() + b as usize];
        }
        let pa = &self.elems[a as usize].perm;
        let pb = &self.elems[b as usize].perm;
        let p: Vec<u16> = pb.iter().map(|&r| pa[r as usize]).collect();
        self.index[&p]
    }

    /// `w * s_i`.
    pub fn mul_simple(&self, w: WIdx, i: usize) -> WIdx {
        self.right_simple[w as usize][i]
    }

    /// `s_i * w`.
    pub fn simple_mul(&self, i: usize, w: WIdx) -> WIdx {
        self.left_simple[i][w as usize]
    }

    pub fn from_word(&self, word: &[usize]) -> WIdx {
        word.iter().fold(0, |w, &i| self.mul_simple(w, i))
    }

    pub fn lookup_perm(&self, perm: &[u16]) -> Option<WIdx> {
        self.index.get(perm).copied()
    }

    pub fn act(&self, w: WIdx, x: &[i64]) -> Vec<i64> {
        crate::lattice::mat_vec(self.matrix(w), x)
    }

    pub fn act_q(&self, w: WIdx, x: &[Q]) -> Vec<Q> {
        self.matrix(w)
            .iter()
            .map(|row| {
                row.iter()
                    .zip(x)
                    .fold(Q::from_integer(0), |acc, (&a, b)| acc + Q::from_integer(a as i128) * *b)
            })
            .collect()
    }

    pub fn elements(&self) -> impl Iterator<Item = WIdx> {
        0..self.elems.len() as WIdx
    }
}

/// Data attached to a subset `J` of the simple roots.
#[derive(Clone, Debug)]
pub struct LeviData {
    pub j: NodeSet,
    /// Indices of all roots in `R_J`.
    pub roots: Vec<usize>,
    /// Indices of the positive roots in `R_J`.
    pub positive_roots: Vec<usize>,
    /// Elements of `W_J`, in increasing index order.
    pub weyl: Vec<WIdx>,
    /// Connected components of the Dynkin diagram on `J`.
    pub components: Vec<NodeSet>,
    /// Half the sum of the positive coroots of `R_J`, in `Y_Q`.
    pub rho_check: Vec<Q>,
}

/// A validated based root datum with derived root system and Weyl group.
#[derive(Clone, Debug)]
pub struct RootDatum {
    name: String,
    rank: usize,
    pairing: IntMatrix,
    simple_roots: Vec<Vec<i64>>,
    simple_coroots: Vec<Vec<i64>>,
    cartan: IntMatrix,
    roots: Vec<Root>,
    n_pos: usize,
    negation: Vec<usize>,
    components: Vec<NodeSet>,
    reflections: Vec<WIdx>,
    weyl: FiniteWeylGroup,
}

/// Names of the built-in catalog.
pub const CATALOG: &[&str] = &["A1-sc", "A1-ad", "A1xA1", "A2-sc", "A2-ad", "C2", "G2", "GL2"];

fn catalog_source(name: &str) -> Option<&'static str> {
    Some(match name {
        "A1-sc" => include_str!("../data/A1-sc.json"),
        "A1-ad" => include_str!("../data/A1-ad.json"),
        "A1xA1" => include_str!("../data/A1xA1.json"),
        "A2-sc" => include_str!("../data/A2-sc.json"),
        "A2-ad" => include_str!("../data/A2-ad.json"),
        "C2" => include_str!("../data/C2.json"),
        "G2" => include_str!("../data/G2.json"),
        "GL2" => include_str!("../data/GL2.json"),
        _ => return None,
    })
}

impl RootDatum {
    /// Looks up a built-in datum by name.
    pub fn builtin(name: &str) -> Result<Self> {
        let src = catalog_source(name).ok_or_else(|| Error::UnknownDatum(name.to_string()))?;
        Self::build(&RootDatumSpec::from_json(src)?)
    }

    /// A built-in name, or else a path to a JSON file.
    pub fn load(name_or_path: &str) -> Result<Self> {
        if catalog_source(name_or_path).is_some() {
            return Self::builtin(name_or_path);
        }
        let p = Path::new(name_or_path);
        if !p.exists() {
            return Err(Error::UnknownDatum(name_or_path.to_string()));
        }
        let src = std::fs::read_to_string(p)?;
        Self::build(&RootDatumSpec::from_json(&src)?)
    }

    pub fn build(spec: &RootDatumSpec) -> Result<Self> {
        let n = spec.x_rank;
        let bad = |m: String| Err(Error::InvalidDatum(m));
        if n == 0 {
            return bad("xRank must be positive".into());
        }
        if spec.pairing.len() != n || spec.pairing.iter().any(|r| r.len() != n) {
            return bad(format!("pairing must be {n}x{n}"));
        }
        let det = determinant(&spec.pairing);
        if det.abs() != 1 {
            return Err(Error::ImperfectPairing(det));
        }
        let r = spec.simple_roots.len();
        if spec.simple_coroots.len() != r {
            return bad("simple roots and coroots differ in number".into());
        }
        if r > 32 {
            return bad("too many simple roots".into());
        }
        if spec.simple_roots.iter().chain(&spec.simple_coroots).any(|v| v.len() != n) {
            return bad(format!("root vectors must have length {n}"));
        }
        let pair = |x: &[i64], y: &[i64]| -> i64 {
            (0..n)
                .map(|i| (0..n).map(|j| x[i] * spec.pairing[i][j] * y[j]).sum::<i64>())
                .sum()
        };
        let cartan: IntMatrix = (0..r)
            .map(|i| (0..r).map(|j| pair(&spec.simple_roots[i], &spec.simple_coroots[j])).collect())
            .collect();
        for i in 0..r {
            if cartan[i][i] != 2 {
                return bad(format!("<alpha_{0}, alpha_{0}^vee> = {1} != 2", i + 1, cartan[i][i]));
            }
            for j in 0..r {
                if i != j && (cartan[i][j] > 0 || (cartan[i][j] == 0) != (cartan[j][i] == 0)) {
                    return Err(Error::NotFiniteType(format!(
                        "invalid off-diagonal Cartan entries at ({}, {})",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        let qrank = |vs: &[Vec<i64>]| {
            let rows: Vec<Vec<Q>> = vs
                .iter()
                .map(|v| v.iter().map(|&x| Q::from_integer(x as i128)).collect())
                .collect();
            if rows.is_empty() {
                0
            } else {
                Matrix::from_rows(rows).rank()
            }
        };
        if qrank(&spec.simple_roots) != r || qrank(&spec.simple_coroots) != r {
            return bad("simple roots or coroots are linearly dependent".into());
        }

        // Orbit closure in simple-root / simple-coroot coordinates.
        let mut found: HashMap<Vec<i64>, Vec<i64>> = HashMap::new();
        let mut queue = VecDeque::new();
        for i in 0..r {
            let e: Vec<i64> = (0..r).map(|k| i64::from(k == i)).collect();
            found.insert(e.clone(), e.clone());
            queue.push_back((e.clone(), e));
        }
        while let Some((c, d)) = queue.pop_front() {
            for i in 0..r {
                let a_ci: i64 = (0..r).map(|j| c[j] * cartan[j][i]).sum();
                let b_id: i64 = (0..r).map(|j| d[j] * cartan[i][j]).sum();
                let mut c2 = c.clone();
                c2[i] -= a_ci;
                let mut d2 = d.clone();
                d2[i] -= b_id;
                match found.get(&c2) {
                    Some(prev) if *prev != d2 => {
                        return bad("coroot assignment is inconsistent".into());
                    }
                    Some(_) => {}
                    None => {
                        if found.len() >= MAX_ROOTS {
                            return Err(Error::NotFiniteType("root orbit does not close".into()));
                        }
                        found.insert(c2.clone(), d2.clone());
                        queue.push_back((c2, d2));
                    }
                }
            }
        }
        let mut pos: Vec<(Vec<i64>, Vec<i64>)> = Vec::new();
        for (c, d) in &found {
            let nonneg = c.iter().all(|&x| x >= 0);
            let nonpos = c.iter().all(|&x| x <= 0);
            if !nonneg && !nonpos {
                return Err(Error::NotFiniteType("root with mixed signs".into()));
            }
            if nonneg {
                pos.push((c.clone(), d.clone()));
            }
        }
        pos.sort_by(|a, b| {
            let ha: i64 = a.0.iter().sum();
            let hb: i64 = b.0.iter().sum();
            ha.cmp(&hb).then_with(|| b.0.cmp(&a.0))
        });
        let n_pos = pos.len();
        if found.len() != 2 * n_pos {
            return Err(Error::NotFiniteType("R is not R+ and -R+".into()));
        }
        let make_root = |c: &[i64], d: &[i64]| -> Root {
            let vector: Vec<i64> = (0..n)
                .map(|k| (0..r).map(|i| c[i] * spec.simple_roots[i][k]).sum())
                .collect();
            let coroot: Vec<i64> = (0..n)
                .map(|k| (0..r).map(|i| d[i] * spec.simple_coroots[i][k]).sum())
                .collect();
            let functional: Vec<i64> = (0..n)
                .map(|i| (0..n).map(|j| spec.pairing[i][j] * coroot[j]).sum())
                .collect();
            Root {
                vector,
                coroot,
                functional,
                coeffs: c.to_vec(),
                co_coeffs: d.to_vec(),
            }
        };
        let mut roots: Vec<Root> = pos.iter().map(|(c, d)| make_root(c, d)).collect();
        for (c, d) in &pos {
            let nc: Vec<i64> = c.iter().map(|x| -x).collect();
            let nd: Vec<i64> = d.iter().map(|x| -x).collect();
            roots.push(make_root(&nc, &nd));
        }
        for rt in &roots {
            if rt.pair(&rt.vector) != 2 {
                return bad("<alpha, alpha^vee> != 2 for a derived root".into());
            }
        }
        let negation: Vec<usize> = (0..2 * n_pos)
            .map(|i| if i < n_pos { i + n_pos } else { i - n_pos })
            .collect();
        let coeff_index: HashMap<Vec<i64>, usize> = roots
            .iter()
            .enumerate()
            .map(|(i, rt)| (rt.coeffs.clone(), i))
            .collect();

        // s_beta acting on root indices.
        let reflect_perm = |beta: &Root| -> Vec<u16> {
            roots
                .iter()
                .map(|rt| {
                    let k: i64 = (0..r)
                        .map(|i| (0..r).map(|j| rt.coeffs[i] * cartan[i][j] * beta.co_coeffs[j]).sum::<i64>())
                        .sum();
                    let c: Vec<i64> = rt.coeffs.iter().zip(&beta.coeffs).map(|(a, b)| a - k * b).collect();
                    coeff_index[&c] as u16
                })
                .collect()
        };
        let reflect_matrix = |beta: &Root| -> IntMatrix {
            (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| i64::from(i == j) - beta.vector[i] * beta.functional[j])
                        .collect()
                })
                .collect()
        };

        let gens: Vec<(Vec<u16>, IntMatrix)> = (0..r)
            .map(|i| (reflect_perm(&roots[i]), reflect_matrix(&roots[i])))
            .collect();
        let weyl = enumerate_weyl(&gens, n_pos, n)?;
        let reflections = roots[..n_pos]
            .iter()
            .map(|rt| weyl.lookup_perm(&reflect_perm(rt)).expect("reflection in W0"))
            .collect();

        let components = dynkin_components(&cartan, NodeSet::full(r));
        Ok(RootDatum {
            name: spec.name.clone(),
            rank: n,
            pairing: spec.pairing.clone(),
            simple_roots: spec.simple_roots.clone(),
            simple_coroots: spec.simple_coroots.clone(),
            cartan,
            roots,
            n_pos,
            negation,
            components,
            reflections,
            weyl,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Rank of `X` (and of `Y`).
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn semisimple_rank(&self) -> usize {
        self.simple_roots.len()
    }

    pub fn pairing(&self) -> &IntMatrix {
        &self.pairing
    }

    pub fn simple_roots(&self) -> &[Vec<i64>] {
        &self.simple_roots
    }

    pub fn simple_coroots(&self) -> &[Vec<i64>] {
        &self.simple_coroots
    }

    pub fn cartan(&self) -> &IntMatrix {
        &self.cartan
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn root(&self, i: usize) -> &Root {
        &self.roots[i]
    }

    pub fn num_positive(&self) -> usize {
        self.n_pos
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.roots[..self.n_pos]
    }

    pub fn is_positive(&self, r: usize) -> bool {
        r < self.n_pos
    }

    pub fn negate(&self, r: usize) -> usize {
        self.negation[r]
    }

    pub fn all_simple(&self) -> NodeSet {
        NodeSet::full(self.semisimple_rank())
    }

    pub fn components(&self) -> &[NodeSet] {
        &self.components
    }

    pub fn weyl(&self) -> &FiniteWeylGroup {
        &self.weyl
    }

    /// Reflection `s_alpha` for a positive root index.
    pub fn reflection(&self, r: usize) -> WIdx {
        let r = if r < self.n_pos { r } else { self.negation[r] };
        self.reflections[r]
    }

    /// `<x, alpha_i^vee>` for each simple coroot.
    pub fn simple_pairings_q(&self, v: &[Q]) -> Vec<Q> {
        (0..self.semisimple_rank()).map(|i| self.roots[i].pair_q(v)).collect()
    }

    /// `<x, 2 rho^vee>`.
    pub fn pair_two_rho(&self, v: &[Q]) -> Q {
        self.positive_roots()
            .iter()
            .fold(Q::from_integer(0), |acc, rt| acc + rt.pair_q(v))
    }

    /// `rho^vee`, half the sum of positive coroots.
    pub fn rho_check(&self) -> Vec<Q> {
        rho_of(self, (0..self.n_pos).collect::<Vec<_>>().as_slice())
    }

    /// `J_v`: simple roots orthogonal to `v`.
    pub fn j_of_vector(&self, v: &[Q]) -> NodeSet {
        NodeSet::from_indices(
            self.simple_pairings_q(v)
                .iter()
                .enumerate()
                .filter(|(_, p)| Field::is_zero(*p))
                .map(|(i, _)| i),
        )
    }

    pub fn is_dominant_q(&self, v: &[Q]) -> bool {
        self.simple_pairings_q(v).iter().all(|p| *p >= Q::from_integer(0))
    }

    pub fn is_dominant(&self, v: &[i64]) -> bool {
        (0..self.semisimple_rank()).all(|i| self.roots[i].pair(v) >= 0)
    }

    /// The dominant element of the `W_0`-orbit of `v`, and the
    /// minimal-length `z` with `z(v)` dominant.
    pub fn dominant_rep(&self, v: &[Q]) -> (Vec<Q>, WIdx) {
        for w in self.weyl.elements() {
            let img = self.weyl.act_q(w, v);
            if self.is_dominant_q(&img) {
                return (img, w);
            }
        }
        unreachable!("every W0-orbit meets the dominant chamber")
    }

    /// `lambda` is dominant with `J_lambda = J`.
    pub fn in_x_plus_j(&self, lambda: &[i64], j: NodeSet) -> bool {
        let q: Vec<Q> = lambda.iter().map(|&x| Q::from_integer(x as i128)).collect();
        self.is_dominant(lambda) && self.j_of_vector(&q) == j
    }

    /// A vector `lambda` in `X` with `<lambda, alpha_i^vee> = 0` for `i` in `J`
    /// and `> 0` otherwise.
    pub fn deep_vector(&self, j: NodeSet) -> Vec<i64> {
        let r = self.semisimple_rank();
        let n = self.rank;
        let rows: Vec<Vec<Q>> = (0..r)
            .map(|i| self.roots[i].functional.iter().map(|&x| Q::from_integer(x as i128)).collect())
            .collect();
        let target: Vec<Q> = (0..r)
            .map(|i| Q::from_integer(i128::from(!j.contains(i))))
            .collect();
        let m = if r == 0 { Matrix::zeros(0, n) } else { Matrix::from_rows(rows) };
        let sol = if r == 0 {
            vec![Q::from_integer(0); n]
        } else {
            m.solve(&target).expect("simple coroots are independent")
        };
        let den = sol.iter().fold(1i128, |acc, q| num_integer::lcm(acc, *q.denom()));
        sol.iter().map(|q| (q.numer() * (den / q.denom())) as i64).collect()
    }

    pub fn levi(&self, j: NodeSet) -> LeviData {
        let roots: Vec<usize> = (0..self.roots.len())
            .filter(|&i| {
                self.roots[i]
                    .coeffs
                    .iter()
                    .enumerate()
                    .all(|(k, &c)| c == 0 || j.contains(k))
            })
            .collect();
        let positive_roots: Vec<usize> = roots.iter().copied().filter(|&i| i < self.n_pos).collect();
        let mut weyl = vec![0];
        let mut seen = vec![false; self.weyl.order()];
        seen[0] = true;
        let mut k = 0;
        while k < weyl.len() {
            let w = weyl[k];
            for i in j.iter() {
                let u = self.weyl.mul_simple(w, i);
                if !seen[u as usize] {
                    seen[u as usize] = true;
                    weyl.push(u);
                }
            }
            k += 1;
        }
        weyl.sort_unstable();
        LeviData {
            j,
            components: dynkin_components(&self.cartan, j),
            rho_check: rho_of(self, &positive_roots),
            roots,
            positive_roots,
            weyl,
        }
    }

    /// Minimal length representatives of `W_0 / W_J`.
    pub fn min_coset_reps(&self, j: NodeSet) -> Vec<WIdx> {
        self.weyl
            .elements()
            .filter(|&w| j.iter().all(|i| self.weyl.length(self.weyl.mul_simple(w, i)) > self.weyl.length(w)))
            .collect()
    }

    /// Minimal length representatives of `W_J \ W_0`.
    pub fn min_left_coset_reps(&self, j: NodeSet) -> Vec<WIdx> {
        self.weyl
            .elements()
            .filter(|&w| j.iter().all(|i| self.weyl.length(self.weyl.simple_mul(i, w)) > self.weyl.length(w)))
            .collect()
    }

    pub fn spec(&self) -> RootDatumSpec {
        RootDatumSpec {
            name: self.name.clone(),
            x_rank: self.rank,
            pairing: self.pairing.clone(),
            simple_roots: self.simple_roots.clone(),
            simple_coroots: self.simple_coroots.clone(),
        }
    }
}

fn rho_of(rd: &RootDatum, pos: &[usize]) -> Vec<Q> {
    let n = rd.rank();
    let mut acc = vec![Q::from_integer(0); n];
    for &r in pos {
        for k in 0..n {
            acc[k] += Q::from_integer(rd.roots[r].coroot[k] as i128);
        }
    }
    acc.into_iter().map(|x| x / Q::from_integer(2)).collect()
}

fn dynkin_components(cartan: &IntMatrix, j: NodeSet) -> Vec<NodeSet> {
    let mut comps = Vec::new();
    let mut left = j;
    while let Some(start) = left.iter().next() {
        let mut comp = NodeSet::single(start);
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            for k in left.iter() {
                if !comp.contains(k) && cartan[i][k] != 0 {
                    comp = comp.with(k);
                    stack.push(k);
                }
            }
        }
        left = left.difference(comp);
        comps.push(comp);
    }
    comps
}

fn enumerate_weyl(gens: &[(Vec<u16>, IntMatrix)], n_pos: usize, n: usize) -> Result<FiniteWeylGroup> {
    let nroots = 2 * n_pos;
    let ident_perm: Vec<u16> = (0..nroots as u16).collect();
    let ident_mat = crate::lattice::identity(n);
    let mut elems = vec![WeylData {
        perm: ident_perm.clone(),
        matrix: ident_mat,
        word: Vec::new(),
        length: 0,
        inverse: 0,
    }];
    let mut index: HashMap<Vec<u16>, WIdx> = HashMap::new();
    index.insert(ident_perm, 0);
    let mut right_simple: Vec<Vec<WIdx>> = Vec::new();
    let mut k = 0;
    while k < elems.len() {
        let mut row = Vec::with_capacity(gens.len());
        for (i, (gp, gm)) in gens.iter().enumerate() {
            let pw = &elems[k].perm;
            let p: Vec<u16> = gp.iter().map(|&r| pw[r as usize]).collect();
            let idx = match index.get(&p) {
                Some(&x) => x,
                None => {
                    if elems.len() >= 1 << 20 {
                        return Err(Error::NotFiniteType("Weyl group too large".into()));
                    }
                    let mut word = elems[k].word.clone();
                    word.push(i as u8);
                    let length = p[..n_pos].iter().filter(|&&r| r as usize >= n_pos).count() as u32;
                    let matrix = crate::lattice::mat_mul(&elems[k].matrix, gm);
                    let id = elems.len() as WIdx;
                    index.insert(p.clone(), id);
                    elems.push(WeylData {
                        perm: p,
                        matrix,
                        word,
                        length,
                        inverse: 0,
                    });
                    id
                }
            };
            row.push(idx);
        }
        right_simple.push(row);
        k += 1;
    }
    for i in 0..elems.len() {
        let p = &elems[i].perm;
        let mut inv = vec![0u16; p.len()];
        for (a, &b) in p.iter().enumerate() {
            inv[b as usize] = a as u16;
        }
        elems[i].inverse = index[&inv];
    }
    let left_simple: Vec<Vec<WIdx>> = (0..gens.len())
        .map(|i| {
            (0..elems.len())
                .map(|w| {
                    // s_i w = (w^{-1} s_i)^{-1}
                    let winv = elems[w].inverse as usize;
                    elems[right_simple[winv][i] as usize].inverse
                })
                .collect()
        })
        .collect();
    let longest = (0..elems.len()).max_by_key(|&i| elems[i].length).unwrap_or(0) as WIdx;
    let mut g = FiniteWeylGroup {
        elems,
        index,
        right_simple,
        left_simple,
        table: None,
        longest,
    };
    let order = g.elems.len();
    if order <= TABLE_LIMIT {
        let mut t = Vec::with_capacity(order * order);
        for a in 0..order as WIdx {
            for b in 0..order as WIdx {
                t.push(g.mul(a, b));
            }
        }
        g.table = Some(t);
    }
    Ok(g)
}
