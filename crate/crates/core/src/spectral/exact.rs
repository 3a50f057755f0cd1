//! Betti numbers without floating point: rational Gaussian elimination for
//! small complexes, sparse elimination over prime fields for larger ones.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::complex::Complex;
use crate::error::{Error, Result};

/// Size limit of the dense rational oracle.
pub const EXACT_LIMIT: usize = 2000;

/// Primes used by [`betti_modular`].
pub const PRIMES: [u64; 2] = [2_147_483_647, 2_147_483_629];

/// Coboundary from dimension `k` to `k + 1`: one sparse row per
/// `(k+1)`-simplex, columns indexed within the `k`-simplices.
fn coboundary_rows(c: &Complex, k: usize) -> Vec<Vec<(usize, i64)>> {
    let base = c.offsets()[k];
    c.simplices_of_dim(k + 1)
        .iter()
        .map(|x| {
            let mut row: Vec<(usize, i64)> = (0..x.len())
                .filter_map(|j| {
                    let y = x.face(j)?;
                    let col = c.index_of(&y).expect("complex is closed") - base;
                    Some((col, if j % 2 == 0 { 1 } else { -1 }))
                })
                .collect();
            row.sort_unstable();
            row
        })
        .collect()
}

fn betti_from_ranks(c: &Complex, rank: impl Fn(Vec<Vec<(usize, i64)>>, usize) -> usize) -> Vec<usize> {
    let Some(q) = c.dim() else { return Vec::new() };
    let sizes: Vec<usize> = (0..=q).map(|k| c.simplices_of_dim(k).len()).collect();
    // ranks[k] = rank of d: C_k -> C_{k+1}
    let ranks: Vec<usize> = (0..=q)
        .map(|k| if k < q { rank(coboundary_rows(c, k), sizes[k]) } else { 0 })
        .collect();
    (0..=q)
        .map(|k| sizes[k] - ranks[k] - if k > 0 { ranks[k - 1] } else { 0 })
        .collect()
}

/// Betti numbers from exact rational ranks of the coboundary maps.
pub fn betti_exact(c: &Complex) -> Result<Vec<usize>> {
    if c.len() > EXACT_LIMIT {
        return Err(Error::TooLarge { size: c.len(), limit: EXACT_LIMIT });
    }
    Ok(betti_from_ranks(c, rational_rank))
}

fn rational_rank(rows: Vec<Vec<(usize, i64)>>, cols: usize) -> usize {
    let mut m: Vec<Vec<BigRational>> = rows
        .into_iter()
        .map(|r| {
            let mut dense = vec![BigRational::zero(); cols];
            for (j, v) in r {
                dense[j] = BigRational::from_integer(BigInt::from(v));
            }
            dense
        })
        .collect();
    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..m.len()).find(|&i| !m[i][col].is_zero()) else { continue };
        m.swap(rank, p);
        let inv = BigRational::one() / &m[rank][col];
        for j in col..cols {
            m[rank][j] = &m[rank][j] * &inv;
        }
        let pivot = m[rank].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == rank || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for j in col..cols {
                if !pivot[j].is_zero() {
                    row[j] = &row[j] - &factor * &pivot[j];
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Betti numbers over `F_p`, taking the largest value over [`PRIMES`].
/// Agrees with the rational answer unless both primes divide a torsion order.
pub fn betti_modular(c: &Complex) -> Vec<usize> {
    PRIMES
        .iter()
        .map(|&p| betti_from_ranks(c, |rows, _| modular_rank(rows, p)))
        .reduce(|a, b| a.iter().zip(&b).map(|(x, y)| *x.max(y)).collect())
        .unwrap_or_default()
}

fn inverse_mod(a: u64, p: u64) -> u64 {
    let (mut result, mut base, mut e) = (1u64, a % p, p - 2);
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    result
}

/// Rank of a sparse integer matrix modulo `p` by pivoting on leading columns.
pub(crate) fn modular_rank(rows: Vec<Vec<(usize, i64)>>, p: u64) -> usize {
    let mut pivots: HashMap<usize, Vec<(usize, u64)>> = HashMap::new();
    for row in rows {
        let mut row: Vec<(usize, u64)> = row
            .into_iter()
            .map(|(j, v)| (j, v.rem_euclid(p as i64) as u64))
            .filter(|&(_, v)| v != 0)
            .collect();
        while let Some(&(lead, coef)) = row.first() {
            match pivots.get(&lead) {
                Some(pivot) => row = axpy(&row, pivot, p - coef, p),
                None => {
                    let inv = inverse_mod(coef, p);
                    let normalized = row.iter().map(|&(j, v)| (j, v * inv % p)).collect();
                    pivots.insert(lead, normalized);
                    break;
                }
            }
        }
    }
    pivots.len()
}

/// `a + s·b` for sorted sparse vectors modulo `p`.
fn axpy(a: &[(usize, u64)], b: &[(usize, u64)], s: u64, p: u64) -> Vec<(usize, u64)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j == b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i == a.len() || (j < b.len() && b[j].0 < a[i].0);
        let (col, v) = if take_a {
            i += 1;
            a[i - 1]
        } else if take_b {
            j += 1;
            (b[j - 1].0, b[j - 1].1 * s % p)
        } else {
            i += 1;
            j += 1;
            (a[i - 1].0, (a[i - 1].1 + b[j - 1].1 * s) % p)
        };
        if v != 0 {
            out.push((col, v));
        }
    }
    out
}
