//! Exact matrix rank over the rationals.
//!
//! [`rank`] runs fraction-free (Bareiss) elimination in `i128` with checked
//! arithmetic and restarts in arbitrary precision if any step overflows.
//! [`minor_rank_oracle`] is an independent cross-check that shares no code
//! with the elimination path.

use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::graph::SelfLoopGraph;

/// Dense square integer matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    dim: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(dim: usize) -> Self {
        Self { dim, data: vec![0; dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = 1;
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let dim = rows.len();
        if let Some(r) = rows.iter().find(|r| r.len() != dim) {
            return Err(Error::InvalidParameter(format!(
                "matrix is not square: row of length {} in {dim}x{dim}",
                r.len()
            )));
        }
        Ok(Self { dim, data: rows.concat() })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        self.data.chunks(self.dim.max(1)).take(self.dim).map(|r| r.to_vec()).collect()
    }

    pub fn trace(&self) -> i64 {
        (0..self.dim).map(|i| self[(i, i)]).sum()
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.dim).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    /// Symmetric with every entry in {0, 1}: the shape of a self-loop graph's adjacency matrix.
    pub fn is_graph_matrix(&self) -> bool {
        self.is_symmetric() && self.data.iter().all(|&x| x == 0 || x == 1)
    }

    /// Rows and columns `idx`, in the given order.
    pub fn submatrix(&self, idx: &[usize]) -> Self {
        let k = idx.len();
        let mut m = Self::zeros(k);
        for (a, &i) in idx.iter().enumerate() {
            for (b, &j) in idx.iter().enumerate() {
                m[(a, b)] = self[(i, j)];
            }
        }
        m
    }

    /// `P A Pᵀ` where row `i` moves to `perm[i]`.
    pub fn permute_symmetric(&self, perm: &[usize]) -> Self {
        let mut m = Self::zeros(self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                m[(perm[i], perm[j])] = self[(i, j)];
            }
        }
        m
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = i64;
    fn index(&self, (i, j): (usize, usize)) -> &i64 {
        &self.data[i * self.dim + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut i64 {
        &mut self.data[i * self.dim + j]
    }
}

/// Rank over ℚ. The 0×0 matrix has rank 0.
pub fn rank(m: &IntMatrix) -> usize {
    let rows: Vec<Vec<i128>> = m.to_rows().into_iter().map(|r| r.into_iter().map(i128::from).collect()).collect();
    match bareiss_i128(rows, m.dim) {
        Some(r) => r,
        None => {
            let rows = m.to_rows().into_iter().map(|r| r.into_iter().map(BigInt::from).collect()).collect();
            bareiss_big(rows, m.dim)
        }
    }
}

pub fn rank_graph(g: &SelfLoopGraph) -> usize {
    rank(&g.adjacency_matrix())
}

// Column-order pivoting: the first row at or below `r` with a nonzero entry
// in column `c`. After each step, every entry below the pivot row equals a
// minor of the original matrix, so the division by the previous pivot is exact.
fn bareiss_i128(mut a: Vec<Vec<i128>>, n: usize) -> Option<usize> {
    let mut r = 0;
    let mut prev: i128 = 1;
    for c in 0..n {
        if r == n {
            break;
        }
        let Some(p) = (r..n).find(|&i| a[i][c] != 0) else { continue };
        a.swap(r, p);
        let pivot = a[r][c];
        let (top, rest) = a.split_at_mut(r + 1);
        let pivot_row = &top[r];
        for row in rest {
            let factor = row[c];
            for (x, &y) in row[c + 1..].iter_mut().zip(&pivot_row[c + 1..]) {
                *x = pivot.checked_mul(*x)?.checked_sub(factor.checked_mul(y)?)? / prev;
            }
            row[c] = 0;
        }
        prev = pivot;
        r += 1;
    }
    Some(r)
}

fn bareiss_big(mut a: Vec<Vec<BigInt>>, n: usize) -> usize {
    let mut r = 0;
    let mut prev = BigInt::from(1);
    for c in 0..n {
        if r == n {
            break;
        }
        let Some(p) = (r..n).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        let pivot = a[r][c].clone();
        let (top, rest) = a.split_at_mut(r + 1);
        let pivot_row = &top[r];
        for row in rest {
            let factor = row[c].clone();
            for (x, y) in row[c + 1..].iter_mut().zip(&pivot_row[c + 1..]) {
                *x = (&pivot * &*x - &factor * y) / &prev;
            }
            row[c] = BigInt::zero();
        }
        prev = pivot;
        r += 1;
    }
    r
}

/// Forces the arbitrary-precision path; exposed for testing the fallback.
#[doc(hidden)]
pub fn rank_bigint(m: &IntMatrix) -> usize {
    let rows = m.to_rows().into_iter().map(|r| r.into_iter().map(BigInt::from).collect()).collect();
    bareiss_big(rows, m.dim)
}

pub const ORACLE_MAX_DIM: usize = 8;

/// Largest `k` with a nonzero `k×k` minor, by enumerating every row and
/// column subset and expanding determinants by cofactors.
pub fn minor_rank_oracle(m: &IntMatrix) -> Result<usize> {
    let n = m.dim;
    if n > ORACLE_MAX_DIM {
        return Err(Error::DimensionTooLarge { dim: n, max: ORACLE_MAX_DIM });
    }
    for k in (1..=n).rev() {
        let subsets = k_subsets(n, k);
        for rows in &subsets {
            for cols in &subsets {
                if cofactor_det(m, rows, cols) != 0 {
                    return Ok(k);
                }
            }
        }
    }
    Ok(0)
}

fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|s| s.count_ones() as usize == k)
        .map(|s| (0..n).filter(|&i| s >> i & 1 == 1).collect())
        .collect()
}

/// Laplace expansion along the first listed row.
fn cofactor_det(m: &IntMatrix, rows: &[usize], cols: &[usize]) -> i128 {
    match rows.len() {
        0 => 1,
        1 => m[(rows[0], cols[0])] as i128,
        _ => {
            let (r, rest) = (rows[0], &rows[1..]);
            let mut det = 0i128;
            let mut minor_cols = Vec::with_capacity(cols.len() - 1);
            for (k, &c) in cols.iter().enumerate() {
                let entry = m[(r, c)] as i128;
                if entry == 0 {
                    continue;
                }
                minor_cols.clear();
                minor_cols.extend(cols.iter().enumerate().filter(|&(t, _)| t != k).map(|(_, &x)| x));
                let sub = cofactor_det(m, rest, &minor_cols);
                let term = entry * sub;
                det += if k % 2 == 0 { term } else { -term };
            }
            det
        }
    }
}
