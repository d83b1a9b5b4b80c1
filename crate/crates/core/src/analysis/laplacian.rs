use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Result, TGraphError};
use crate::graph::TGraph;
use crate::Limits;

/// Degree matrix minus adjacency matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaplacianMatrix {
    order: usize,
    entries: Vec<i64>,
}

impl LaplacianMatrix {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.order + j]
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.entries[i * self.order..(i + 1) * self.order]
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        (0..self.order).map(|i| self.row(i).to_vec()).collect()
    }

    /// Zero matrix of the given order (the Laplacian of an edgeless graph).
    pub fn zero(order: usize) -> Self {
        LaplacianMatrix {
            order,
            entries: vec![0; order * order],
        }
    }
}

pub fn laplacian(g: &TGraph) -> Result<LaplacianMatrix> {
    laplacian_with_cap(g, Limits::default().spectral_cap)
}

pub fn laplacian_with_cap(g: &TGraph, cap: usize) -> Result<LaplacianMatrix> {
    let n = g.order();
    if n > cap {
        return Err(TGraphError::size("Laplacian order", n as u64, cap as u64));
    }
    let mut entries = vec![0i64; n * n];
    for v in 0..n {
        entries[v * n + v] = g.degree(v) as i64;
    }
    for &(u, v) in g.edges() {
        entries[u * n + v] = -1;
        entries[v * n + u] = -1;
    }
    Ok(LaplacianMatrix { order: n, entries })
}

/// How a nullity was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NullityMethod {
    /// Fraction-free elimination over the integers.
    Exact,
    /// Rank modulo both [`RANK_PRIMES`]. Modular rank never exceeds the
    /// rational rank, so this nullity is an upper bound; it is trusted only
    /// after agreeing with an independent component count.
    Modular,
}

/// Primes above 2^30 used for modular rank: 2^30 + 3 and 2^31 - 1.
pub const RANK_PRIMES: [u64; 2] = [1_073_741_827, 2_147_483_647];

/// Multiplicity of the eigenvalue 0, i.e. `order - rank` over the rationals.
pub fn laplacian_nullity(l: &LaplacianMatrix) -> (usize, NullityMethod) {
    laplacian_nullity_with(l, Limits::default().exact_rank_cap)
}

pub(crate) fn laplacian_nullity_with(
    l: &LaplacianMatrix,
    exact_cap: usize,
) -> (usize, NullityMethod) {
    if l.order <= exact_cap {
        (l.order - rank_bareiss(&l.to_rows()), NullityMethod::Exact)
    } else {
        (l.order - modular_rank(l), NullityMethod::Modular)
    }
}

fn modular_rank(l: &LaplacianMatrix) -> usize {
    let rows = l.to_rows();
    RANK_PRIMES
        .iter()
        .map(|&p| rank_mod_p(&rows, p))
        .max()
        .unwrap_or(0)
}

/// Nullity checked against a component count `k`. Every component's
/// indicator vector lies in the kernel, so `rank <= order - k`; modular rank
/// never exceeds the rational rank. A modular rank of exactly `order - k`
/// therefore proves the nullity is `k`. Otherwise the exact route decides,
/// when the order allows it.
pub(crate) fn checked_nullity(
    l: &LaplacianMatrix,
    k: usize,
    exact_cap: usize,
) -> (usize, NullityMethod) {
    let nullity = l.order - modular_rank(l);
    if nullity == k || l.order > exact_cap {
        (nullity, NullityMethod::Modular)
    } else {
        (l.order - rank_bareiss(&l.to_rows()), NullityMethod::Exact)
    }
}

/// Rank of an integer matrix by Bareiss fraction-free elimination with
/// big-integer arithmetic. Exact for any input.
pub fn rank_bareiss(rows: &[Vec<i64>]) -> usize {
    let n_rows = rows.len();
    if n_rows == 0 {
        return 0;
    }
    let n_cols = rows[0].len();
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let mut prev = BigInt::one();
    let mut rank = 0;
    for col in 0..n_cols {
        if rank == n_rows {
            break;
        }
        let Some(pivot) = (rank..n_rows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        let (head, tail) = m.split_at_mut(rank + 1);
        let pivot_row = &head[rank];
        let p = &pivot_row[col];
        for row in tail.iter_mut() {
            let factor = std::mem::take(&mut row[col]);
            for j in col + 1..n_cols {
                // row[j] <- (p * row[j] - factor * pivot_row[j]) / prev
                if factor.is_zero() {
                    if row[j].is_zero() {
                        continue;
                    }
                    let mut v = p * &row[j];
                    if !prev.is_one() {
                        v /= &prev;
                    }
                    row[j] = v;
                } else {
                    let mut v = p * &row[j];
                    if !pivot_row[j].is_zero() {
                        v -= &factor * &pivot_row[j];
                    }
                    if !prev.is_one() {
                        debug_assert!((&v % &prev).is_zero());
                        v /= &prev;
                    }
                    row[j] = v;
                }
            }
        }
        prev = m[rank][col].clone();
        rank += 1;
    }
    rank
}

/// Rank over GF(p) by plain Gaussian elimination.
pub fn rank_mod_p(rows: &[Vec<i64>], p: u64) -> usize {
    let n_rows = rows.len();
    if n_rows == 0 {
        return 0;
    }
    let n_cols = rows[0].len();
    let reduce = |x: i64| -> u64 { x.rem_euclid(p as i64) as u64 };
    let mut m: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| reduce(x)).collect())
        .collect();
    let mut rank = 0;
    for col in 0..n_cols {
        if rank == n_rows {
            break;
        }
        let Some(pivot) = (rank..n_rows).find(|&i| m[i][col] != 0) else {
            continue;
        };
        m.swap(rank, pivot);
        let inv = pow_mod(m[rank][col], p - 2, p);
        for x in &mut m[rank][col..] {
            *x = *x * inv % p;
        }
        let (head, tail) = m.split_at_mut(rank + 1);
        let pivot_row = &head[rank];
        for row in tail.iter_mut() {
            let factor = row[col];
            if factor == 0 {
                continue;
            }
            for j in col..n_cols {
                if pivot_row[j] != 0 {
                    row[j] = (row[j] + p - factor * pivot_row[j] % p) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}
