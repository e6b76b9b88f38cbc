//! Integer lattices: Smith normal form and finitely generated abelian groups.

use crate::field::Q;
use crate::linalg::Matrix;

/// Row-major integer matrix.
pub type IntMatrix = Vec<Vec<i64>>;

/// `u * a * v = diag` with `u`, `v` unimodular. `u_inv` is the inverse of `u`.
#[derive(Clone, Debug)]
pub struct Smith {
    pub diag: Vec<i64>,
    pub u: IntMatrix,
    pub u_inv: IntMatrix,
    pub v: IntMatrix,
    pub rank: usize,
}

pub fn identity(n: usize) -> IntMatrix {
    (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect()
}

pub fn mat_vec(m: &IntMatrix, v: &[i64]) -> Vec<i64> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}

pub fn mat_mul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let n = a.len();
    let k = b.len();
    let m = b.first().map_or(0, |r| r.len());
    let mut out = vec![vec![0; m]; n];
    for i in 0..n {
        for (l, brow) in b.iter().enumerate().take(k) {
            let x = a[i][l];
            if x == 0 {
                continue;
            }
            for j in 0..m {
                out[i][j] += x * brow[j];
            }
        }
    }
    out
}

/// Determinant of a small square integer matrix (Bareiss).
pub fn determinant(m: &IntMatrix) -> i64 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut a: Vec<Vec<i128>> = m
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            let Some(p) = (k + 1..n).find(|&i| a[i][k] != 0) else {
                return 0;
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    (sign * a[n - 1][n - 1]) as i64
}

/// Smith normal form of an `rows x cols` matrix.
pub fn smith(a: &IntMatrix, rows: usize, cols: usize) -> Smith {
    let mut d: IntMatrix = if rows == 0 {
        Vec::new()
    } else {
        a.clone()
    };
    let mut u = identity(rows);
    let mut u_inv = identity(rows);
    let mut v = identity(cols);

    let swap_rows = |d: &mut IntMatrix, u: &mut IntMatrix, u_inv: &mut IntMatrix, i: usize, j: usize| {
        d.swap(i, j);
        u.swap(i, j);
        for row in u_inv.iter_mut() {
            row.swap(i, j);
        }
    };
    // row_i += k * row_j
    let add_row = |d: &mut IntMatrix, u: &mut IntMatrix, u_inv: &mut IntMatrix, i: usize, j: usize, k: i64| {
        for c in 0..d[i].len() {
            d[i][c] += k * d[j][c];
        }
        for c in 0..u[i].len() {
            u[i][c] += k * u[j][c];
        }
        // u_inv <- u_inv * (I - k E_ij): col_j -= k col_i
        for row in u_inv.iter_mut() {
            row[j] -= k * row[i];
        }
    };
    let swap_cols = |d: &mut IntMatrix, v: &mut IntMatrix, i: usize, j: usize| {
        for row in d.iter_mut() {
            row.swap(i, j);
        }
        for row in v.iter_mut() {
            row.swap(i, j);
        }
    };
    // col_i += k * col_j
    let add_col = |d: &mut IntMatrix, v: &mut IntMatrix, i: usize, j: usize, k: i64| {
        for row in d.iter_mut() {
            row[i] += k * row[j];
        }
        for row in v.iter_mut() {
            row[i] += k * row[j];
        }
    };

    let mut t = 0;
    while t < rows.min(cols) {
        // smallest nonzero entry in the trailing block
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if d[i][j] != 0 && best.is_none_or(|(bi, bj)| d[i][j].abs() < d[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        swap_rows(&mut d, &mut u, &mut u_inv, t, pi);
        swap_cols(&mut d, &mut v, t, pj);
        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                if d[i][t] != 0 {
                    let q = d[i][t].div_euclid(d[t][t]);
                    add_row(&mut d, &mut u, &mut u_inv, i, t, -q);
                    if d[i][t] != 0 {
                        swap_rows(&mut d, &mut u, &mut u_inv, t, i);
                        dirty = true;
                    }
                }
            }
            for j in t + 1..cols {
                if d[t][j] != 0 {
                    let q = d[t][j].div_euclid(d[t][t]);
                    add_col(&mut d, &mut v, j, t, -q);
                    if d[t][j] != 0 {
                        swap_cols(&mut d, &mut v, t, j);
                        dirty = true;
                    }
                }
            }
            if dirty {
                continue;
            }
            // divisibility of the trailing block
            let mut bad = None;
            'outer: for i in t + 1..rows {
                for j in t + 1..cols {
                    if d[i][j] % d[t][t] != 0 {
                        bad = Some(i);
                        break 'outer;
                    }
                }
            }
            match bad {
                Some(i) => add_row(&mut d, &mut u, &mut u_inv, t, i, 1),
                None => break,
            }
        }
        if d[t][t] < 0 {
            for c in 0..cols {
                d[t][c] = -d[t][c];
            }
            for c in 0..rows {
                u[t][c] = -u[t][c];
            }
            for row in u_inv.iter_mut() {
                row[t] = -row[t];
            }
        }
        t += 1;
    }
    let diag: Vec<i64> = (0..rows.min(cols)).map(|i| d[i][i]).collect();
    let rank = diag.iter().filter(|&&x| x != 0).count();
    Smith {
        diag,
        u,
        u_inv,
        v,
        rank,
    }
}

/// A finitely generated abelian group `Z^n / L` presented by coordinate
/// functionals: `coords(x)` gives the normal-form coordinates of `x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianQuotient {
    /// Order of each nontrivial cyclic factor; `0` marks a free factor.
    pub invariants: Vec<i64>,
    /// One row of `u` per factor.
    pub functionals: Vec<Vec<i64>>,
    /// Representative in `Z^n` of each generator.
    pub generators: Vec<Vec<i64>>,
    /// The ambient rank `n`.
    pub dim: usize,
}

impl AbelianQuotient {
    /// The quotient of `Z^n` by the span of `relations`.
    pub fn new(n: usize, relations: &[Vec<i64>]) -> Self {
        let m = relations.len();
        let a: IntMatrix = (0..n)
            .map(|i| relations.iter().map(|r| r[i]).collect())
            .collect();
        let s = smith(&a, n, m);
        let mut invariants = Vec::new();
        let mut functionals = Vec::new();
        let mut generators: Vec<Vec<i64>> = Vec::new();
        for i in 0..n {
            let d = if i < s.diag.len() { s.diag[i] } else { 0 };
            if d == 1 {
                continue;
            }
            invariants.push(d);
            functionals.push(s.u[i].clone());
            generators.push((0..n).map(|r| s.u_inv[r][i]).collect());
        }
        // torsion factors first, in increasing order, then free ones
        let mut order: Vec<usize> = (0..invariants.len()).collect();
        order.sort_by_key(|&i| (invariants[i] == 0, invariants[i]));
        AbelianQuotient {
            invariants: order.iter().map(|&i| invariants[i]).collect(),
            functionals: order.iter().map(|&i| functionals[i].clone()).collect(),
            generators: order.iter().map(|&i| generators[i].clone()).collect(),
            dim: n,
        }
    }

    pub fn ngens(&self) -> usize {
        self.invariants.len()
    }

    pub fn free_rank(&self) -> usize {
        self.invariants.iter().filter(|&&d| d == 0).count()
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank() == 0
    }

    /// Order of the group, if finite.
    pub fn order(&self) -> Option<u64> {
        if self.is_finite() {
            Some(self.invariants.iter().map(|&d| d as u64).product())
        } else {
            None
        }
    }

    /// Normal-form coordinates of a lattice vector.
    pub fn coords(&self, x: &[i64]) -> Vec<i64> {
        self.functionals
            .iter()
            .zip(&self.invariants)
            .map(|(f, &d)| {
                let c: i64 = f.iter().zip(x).map(|(a, b)| a * b).sum();
                reduce(c, d)
            })
            .collect()
    }

    pub fn normalize(&self, c: &[i64]) -> Vec<i64> {
        c.iter()
            .zip(&self.invariants)
            .map(|(&x, &d)| reduce(x, d))
            .collect()
    }

    /// Lattice vector representing the coordinates `c`.
    pub fn lift(&self, c: &[i64]) -> Vec<i64> {
        let n = self.dim;
        let mut out = vec![0; n];
        for (k, g) in c.iter().zip(&self.generators) {
            for i in 0..n {
                out[i] += k * g[i];
            }
        }
        out
    }

    /// All elements, in lexicographic coordinate order. `None` if infinite.
    pub fn elements(&self) -> Option<Vec<Vec<i64>>> {
        if !self.is_finite() {
            return None;
        }
        let mut out = vec![Vec::new()];
        for &d in &self.invariants {
            out = out
                .into_iter()
                .flat_map(|p| {
                    (0..d).map(move |k| {
                        let mut q = p.clone();
                        q.push(k);
                        q
                    })
                })
                .collect();
        }
        Some(out)
    }
}

fn reduce(x: i64, d: i64) -> i64 {
    if d == 0 {
        x
    } else {
        x.rem_euclid(d)
    }
}

/// Basis of the sublattice of `Z^n` spanned by `gens`.
pub fn lattice_basis(n: usize, gens: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let a: IntMatrix = (0..n).map(|i| gens.iter().map(|g| g[i]).collect()).collect();
    let s = smith(&a, n, gens.len());
    (0..s.rank)
        .map(|i| (0..n).map(|r| s.u_inv[r][i] * s.diag[i]).collect())
        .collect()
}

/// Integer solution `y` of `basis * y = x` (basis as columns), if any.
pub fn solve_integer(basis: &[Vec<i64>], x: &[i64]) -> Option<Vec<i64>> {
    let n = x.len();
    let cols: Vec<Vec<Q>> = basis
        .iter()
        .map(|b| b.iter().map(|&v| Q::from_integer(v as i128)).collect())
        .collect();
    let m = Matrix::from_columns(n, &cols);
    let rhs: Vec<Q> = x.iter().map(|&v| Q::from_integer(v as i128)).collect();
    let y = m.solve(&rhs)?;
    let check: Vec<Q> = m.mul_vec(&y);
    if check != rhs {
        return None;
    }
    y.iter()
        .map(|q| q.is_integer().then(|| *q.numer() as i64))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_smith(a: &IntMatrix) {
        let rows = a.len();
        let cols = a[0].len();
        let s = smith(a, rows, cols);
        let d = mat_mul(&mat_mul(&s.u, a), &s.v);
        for i in 0..rows {
            for j in 0..cols {
                if i == j {
                    assert_eq!(d[i][j], s.diag[i]);
                } else {
                    assert_eq!(d[i][j], 0, "{a:?} -> {d:?}");
                }
            }
        }
        assert_eq!(mat_mul(&s.u, &s.u_inv), identity(rows));
        for w in s.diag.windows(2) {
            if w[1] != 0 {
                assert_eq!(w[1] % w[0], 0);
            }
        }
    }

    #[test]
    fn smith_examples() {
        check_smith(&vec![vec![2, -1], vec![-1, 2]]);
        check_smith(&vec![vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
        check_smith(&vec![vec![1], vec![-1]]);
        check_smith(&vec![vec![0, 0], vec![0, 6], vec![4, 0]]);
    }

    #[test]
    fn weight_lattice_mod_roots() {
        // A2 roots in the weight basis
        let q = AbelianQuotient::new(2, &[vec![2, -1], vec![-1, 2]]);
        assert_eq!(q.invariants, vec![3]);
        assert_eq!(q.order(), Some(3));
        assert_eq!(q.coords(&[2, -1]), vec![0]);
        assert_ne!(q.coords(&[1, 0]), vec![0]);
        // GL2-style: Z^2 / Z(1,-1) is free of rank one
        let g = AbelianQuotient::new(2, &[vec![1, -1]]);
        assert_eq!(g.invariants, vec![0]);
        assert!(!g.is_finite());
        // empty relation set
        let f = AbelianQuotient::new(2, &[]);
        assert_eq!(f.invariants, vec![0, 0]);
    }

    #[test]
    fn lift_then_coords_roundtrip() {
        let q = AbelianQuotient::new(2, &[vec![2, 0], vec![0, 2]]);
        for c in q.elements().unwrap() {
            assert_eq!(q.coords(&q.lift(&c)), c);
        }
    }

    #[test]
    fn determinant_small() {
        assert_eq!(determinant(&vec![vec![2, -1], vec![-1, 2]]), 3);
        assert_eq!(determinant(&vec![vec![0, 1], vec![1, 0]]), -1);
        assert_eq!(determinant(&vec![vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 10]]), -3);
    }

    #[test]
    fn integer_solutions() {
        let basis = vec![vec![2, 0], vec![0, 3]];
        assert_eq!(solve_integer(&basis, &[4, 3]), Some(vec![2, 1]));
        assert_eq!(solve_integer(&basis, &[1, 0]), None);
        let lb = lattice_basis(2, &[vec![2, 0], vec![0, 2], vec![1, 1]]);
        assert_eq!(lb.len(), 2);
        assert!(solve_integer(&lb, &[1, 1]).is_some());
        assert!(solve_integer(&lb, &[1, 0]).is_none());
    }
}
