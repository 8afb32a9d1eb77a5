//! Exact rank of sparse integer matrices, over the rationals or a prime field.
//!
//! Boundary matrices of the strand complexes have entries in {-1, 0, 1} and are
//! small after collapsing, so a straightforward sparse Gaussian elimination
//! with exact arithmetic is all that is needed. Pivot rows are chosen by
//! minimal fill to keep intermediate entries short.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::betti::FieldSpec;

/// Sparse row: sorted `(column, coefficient)` pairs with nonzero coefficients.
pub type SparseRow = Vec<(u32, i64)>;

pub fn rank(field: FieldSpec, rows: &[SparseRow]) -> usize {
    match field {
        FieldSpec::Rationals => rank_rational(rows),
        FieldSpec::Prime(p) => rank_mod_p(rows, p as u64),
    }
}

fn rank_rational(rows: &[SparseRow]) -> usize {
    let mut work: Vec<Vec<(u32, BigRational)>> = rows
        .iter()
        .filter(|r| !r.is_empty())
        .map(|r| {
            r.iter()
                .map(|&(c, v)| (c, BigRational::from(BigInt::from(v))))
                .collect()
        })
        .collect();
    let mut rank = 0;
    while !work.is_empty() {
        // Shortest row as pivot; cheapest fill and smallest numbers.
        let (best, _) = work
            .iter()
            .enumerate()
            .min_by_key(|(_, r)| r.len())
            .expect("nonempty");
        let pivot_row = work.swap_remove(best);
        let (pcol, pval) = pivot_row[0].clone();
        rank += 1;
        let mut next: Vec<Vec<(u32, BigRational)>> = Vec::with_capacity(work.len());
        for row in work {
            let coeff = row
                .iter()
                .find(|&&(c, _)| c == pcol)
                .map(|(_, v)| v.clone());
            let reduced = match coeff {
                None => row,
                Some(cv) => {
                    let factor = cv / &pval;
                    axpy(&row, &pivot_row, &factor)
                }
            };
            if !reduced.is_empty() {
                next.push(reduced);
            }
        }
        work = next;
    }
    rank
}

/// `row - factor * pivot`, merging sorted sparse rows.
fn axpy(
    row: &[(u32, BigRational)],
    pivot: &[(u32, BigRational)],
    factor: &BigRational,
) -> Vec<(u32, BigRational)> {
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut a, mut b) = (0, 0);
    while a < row.len() || b < pivot.len() {
        let take_a = b >= pivot.len() || (a < row.len() && row[a].0 < pivot[b].0);
        let take_b = a >= row.len() || (b < pivot.len() && pivot[b].0 < row[a].0);
        if take_a {
            out.push(row[a].clone());
            a += 1;
        } else if take_b {
            let v = -(factor * &pivot[b].1);
            if !v.is_zero() {
                out.push((pivot[b].0, v));
            }
            b += 1;
        } else {
            let v = &row[a].1 - factor * &pivot[b].1;
            if !v.is_zero() {
                out.push((row[a].0, v));
            }
            a += 1;
            b += 1;
        }
    }
    out
}

fn rank_mod_p(rows: &[SparseRow], p: u64) -> usize {
    let reduce = |v: i64| -> u64 {
        let m = v.rem_euclid(p as i64);
        m as u64
    };
    let mut work: Vec<Vec<(u32, u64)>> = rows
        .iter()
        .map(|r| {
            r.iter()
                .map(|&(c, v)| (c, reduce(v)))
                .filter(|&(_, v)| v != 0)
                .collect::<Vec<_>>()
        })
        .filter(|r: &Vec<(u32, u64)>| !r.is_empty())
        .collect();
    let mut rank = 0;
    while !work.is_empty() {
        let (best, _) = work
            .iter()
            .enumerate()
            .min_by_key(|(_, r)| r.len())
            .expect("nonempty");
        let pivot_row = work.swap_remove(best);
        let (pcol, pval) = pivot_row[0];
        let pinv = mod_inverse(pval, p);
        rank += 1;
        let mut next = Vec::with_capacity(work.len());
        for row in work {
            let coeff = row.iter().find(|&&(c, _)| c == pcol).map(|&(_, v)| v);
            let reduced = match coeff {
                None => row,
                Some(cv) => {
                    let factor = mulmod(cv, pinv, p);
                    axpy_mod(&row, &pivot_row, factor, p)
                }
            };
            if !reduced.is_empty() {
                next.push(reduced);
            }
        }
        work = next;
    }
    rank
}

fn axpy_mod(row: &[(u32, u64)], pivot: &[(u32, u64)], factor: u64, p: u64) -> Vec<(u32, u64)> {
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut a, mut b) = (0, 0);
    while a < row.len() || b < pivot.len() {
        let take_a = b >= pivot.len() || (a < row.len() && row[a].0 < pivot[b].0);
        let take_b = a >= row.len() || (b < pivot.len() && pivot[b].0 < row[a].0);
        if take_a {
            out.push(row[a]);
            a += 1;
        } else if take_b {
            let v = (p - mulmod(factor, pivot[b].1, p)) % p;
            if v != 0 {
                out.push((pivot[b].0, v));
            }
            b += 1;
        } else {
            let v = (row[a].1 + p - mulmod(factor, pivot[b].1, p)) % p;
            if v != 0 {
                out.push((row[a].0, v));
            }
            a += 1;
            b += 1;
        }
    }
    out
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // Fermat; p is prime.
    let mut result = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = mulmod(result, base, p);
        }
        base = mulmod(base, base, p);
        e >>= 1;
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;

    fn both(rows: &[SparseRow]) -> (usize, usize) {
        (
            rank(FieldSpec::Rationals, rows),
            rank(FieldSpec::Prime(32003), rows),
        )
    }

    #[test]
    fn rank_of_identity_like() {
        let rows: Vec<SparseRow> = vec![vec![(0, 1)], vec![(1, -1)], vec![(2, 1)]];
        assert_eq!(both(&rows), (3, 3));
    }

    #[test]
    fn dependent_rows_detected() {
        // r2 = r0 + r1
        let rows: Vec<SparseRow> = vec![
            vec![(0, 1), (1, 1)],
            vec![(1, 1), (2, 1)],
            vec![(0, 1), (1, 2), (2, 1)],
        ];
        assert_eq!(both(&rows), (2, 2));
    }

    #[test]
    fn characteristic_matters() {
        // [[1,1],[1,-1]] has rank 2 over Q, rank 1 over F_2.
        let rows: Vec<SparseRow> = vec![vec![(0, 1), (1, 1)], vec![(0, 1), (1, -1)]];
        assert_eq!(rank(FieldSpec::Rationals, &rows), 2);
        assert_eq!(rank(FieldSpec::Prime(2), &rows), 1);
    }

    #[test]
    fn empty_and_zero_rows() {
        let rows: Vec<SparseRow> = vec![vec![], vec![]];
        assert_eq!(both(&rows), (0, 0));
        assert_eq!(both(&[]), (0, 0));
    }

    #[test]
    fn random_integer_matrices_agree_with_f32003() {
        // Dense brute-force over a large prime should agree with rationals for
        // entries this small (minors cannot hit the prime).
        let mut state = 1u64;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((state >> 33) % 5) as i64 - 2
        };
        for _ in 0..20 {
            let rows: Vec<SparseRow> = (0..5)
                .map(|_| {
                    (0..6)
                        .filter_map(|c| {
                            let v = next();
                            (v != 0).then_some((c as u32, v))
                        })
                        .collect()
                })
                .collect();
            let (rq, rp) = both(&rows);
            assert_eq!(rq, rp);
        }
    }
}
