//! Exact matrix rank over GF(2), GF(p) and the rationals.
//!
//! Matrices arrive as sparse columns of `(row, ±1)` entries, which is what a
//! simplicial boundary map looks like.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Sparse integer column: `(row, coefficient)` pairs.
pub type SparseColumn = Vec<(usize, i64)>;

/// Rank over GF(2), with rows packed into 64-bit words.
pub fn rank_gf2(nrows: usize, columns: &[SparseColumn]) -> usize {
    let words = columns.len().div_ceil(64);
    let mut rows = vec![vec![0u64; words]; nrows];
    for (c, col) in columns.iter().enumerate() {
        for &(r, v) in col {
            if v.rem_euclid(2) == 1 {
                rows[r][c / 64] ^= 1 << (c % 64);
            }
        }
    }
    let mut rank = 0;
    for c in 0..columns.len() {
        let (w, b) = (c / 64, 1u64 << (c % 64));
        let Some(p) = (rank..nrows).find(|&r| rows[r][w] & b != 0) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for row in rows.iter_mut().skip(rank + 1) {
            if row[w] & b != 0 {
                for (x, y) in row.iter_mut().zip(&pivot).skip(w) {
                    *x ^= y;
                }
            }
        }
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    rank
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

/// Rank over GF(p) for a prime `p < 2^31`.
pub fn rank_mod_p(nrows: usize, columns: &[SparseColumn], p: u64) -> usize {
    let ncols = columns.len();
    let mut a = vec![vec![0u64; ncols]; nrows];
    for (c, col) in columns.iter().enumerate() {
        for &(r, v) in col {
            a[r][c] = (a[r][c] + v.rem_euclid(p as i64) as u64) % p;
        }
    }
    let mut rank = 0;
    for c in 0..ncols {
        let Some(piv) = (rank..nrows).find(|&r| a[r][c] != 0) else {
            continue;
        };
        a.swap(rank, piv);
        let inv = pow_mod(a[rank][c], p - 2, p);
        for x in a[rank][c..].iter_mut() {
            *x = *x * inv % p;
        }
        let pivot = a[rank].clone();
        for row in a.iter_mut().skip(rank + 1) {
            let f = row[c];
            if f != 0 {
                for (x, &y) in row[c..].iter_mut().zip(&pivot[c..]) {
                    *x = (*x + p - f * y % p) % p;
                }
            }
        }
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    rank
}

/// Rank over the rationals by Bareiss fraction-free elimination.
///
/// Every division by the previous pivot is exact, so entries stay integral
/// and no fractions are ever formed.
pub fn rank_bareiss(nrows: usize, columns: &[SparseColumn]) -> usize {
    let ncols = columns.len();
    let mut a = vec![vec![BigInt::zero(); ncols]; nrows];
    for (c, col) in columns.iter().enumerate() {
        for &(r, v) in col {
            a[r][c] += BigInt::from(v);
        }
    }
    rank_bareiss_dense(a)
}

pub fn rank_bareiss_dense(mut a: Vec<Vec<BigInt>>) -> usize {
    let nrows = a.len();
    let ncols = a.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut rank = 0;
    for c in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(piv) = (rank..nrows).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        a.swap(rank, piv);
        let (top, rest) = a.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        for row in rest.iter_mut() {
            let f = row[c].clone();
            for j in c + 1..ncols {
                let v = &pivot_row[c] * &row[j] - &f * &pivot_row[j];
                row[j] = v / &prev;
            }
            row[c] = BigInt::zero();
        }
        prev = top[rank][c].clone();
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn dense_to_columns(m: &[Vec<i64>]) -> (usize, Vec<SparseColumn>) {
        let nrows = m.len();
        let ncols = m.first().map_or(0, Vec::len);
        let cols = (0..ncols)
            .map(|c| {
                (0..nrows)
                    .filter(|&r| m[r][c] != 0)
                    .map(|r| (r, m[r][c]))
                    .collect()
            })
            .collect();
        (nrows, cols)
    }

    /// Gauss–Jordan over Q with explicit fractions (numerator, denominator).
    fn rank_fractions(m: &[Vec<i64>]) -> usize {
        use num_integer::Integer;
        let mut a: Vec<Vec<(BigInt, BigInt)>> = m
            .iter()
            .map(|r| r.iter().map(|&v| (BigInt::from(v), BigInt::one())).collect())
            .collect();
        let nrows = a.len();
        let ncols = a.first().map_or(0, Vec::len);
        let norm = |(n, d): (BigInt, BigInt)| {
            let g = n.gcd(&d);
            if g.is_zero() {
                (n, d)
            } else {
                (n / &g, d / &g)
            }
        };
        let mut rank = 0;
        for c in 0..ncols {
            let Some(p) = (rank..nrows).find(|&r| !a[r][c].0.is_zero()) else {
                continue;
            };
            a.swap(rank, p);
            let (pn, pd) = a[rank][c].clone();
            for r in rank + 1..nrows {
                let (fn_, fd) = a[r][c].clone();
                if fn_.is_zero() {
                    continue;
                }
                // row_r -= (f / pivot) * row_rank
                let (top, bottom) = a.split_at_mut(r);
                for (x, y) in bottom[0][c..ncols].iter_mut().zip(&top[rank][c..ncols]) {
                    let (xn, xd) = x.clone();
                    let (yn, yd) = y;
                    let tn = &fn_ * &pd * yn;
                    let td = &fd * &pn * yd;
                    *x = norm((xn * &td - tn * &xd, xd * td));
                }
            }
            rank += 1;
        }
        rank
    }

    #[test]
    fn small_ranks() {
        let m = vec![vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 1]];
        let (r, cols) = dense_to_columns(&m);
        assert_eq!(rank_gf2(r, &cols), 2);
        assert_eq!(rank_mod_p(r, &cols, 3), 3);
        assert_eq!(rank_bareiss(r, &cols), 3);
        assert_eq!(rank_gf2(0, &[]), 0);
        assert_eq!(rank_bareiss(2, &[]), 0);
    }

    #[test]
    fn wide_gf2_matrix() {
        // 1 x 130 all-ones row, then identity-ish rows crossing word boundaries
        let mut cols: Vec<SparseColumn> = (0..130).map(|_| vec![(0, 1)]).collect();
        cols[64].push((1, 1));
        cols[129].push((2, 1));
        assert_eq!(rank_gf2(3, &cols), 3);
    }

    proptest! {
        #[test]
        fn bareiss_matches_fraction_elimination(
            m in prop::collection::vec(prop::collection::vec(-3i64..=3, 5), 1..6)
        ) {
            let (r, cols) = dense_to_columns(&m);
            prop_assert_eq!(rank_bareiss(r, &cols), rank_fractions(&m));
        }

        #[test]
        fn modular_rank_never_exceeds_rational(
            m in prop::collection::vec(prop::collection::vec(-2i64..=2, 6), 1..6)
        ) {
            let (r, cols) = dense_to_columns(&m);
            let q = rank_bareiss(r, &cols);
            prop_assert!(rank_gf2(r, &cols) <= q);
            prop_assert!(rank_mod_p(r, &cols, 3) <= q);
            prop_assert_eq!(rank_mod_p(r, &cols, 1_000_000_007), q);
        }
    }
}
