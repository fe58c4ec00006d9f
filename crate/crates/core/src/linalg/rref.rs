//! Dense reduced row echelon form.
//!
//! Two independent routes: plain Gauss–Jordan elimination over any field, and
//! a fraction-free (Bareiss) route for rationals that clears denominators,
//! eliminates over the integers with exact divisions, and only returns to
//! rationals for the final back substitution.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::field::{Field, Rational};

/// Gauss–Jordan elimination. Leaves exactly the nonzero RREF rows in `rows`.
pub fn gauss_jordan<F: Field>(rows: &mut Vec<Vec<F>>, cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv().expect("nonzero pivot");
        for x in rows[r].iter_mut().skip(c) {
            *x = x.mul_ref(&inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row).skip(c) {
                x.sub_mul_assign(&factor, y);
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

/// Fraction-free RREF over the rationals.
pub fn bareiss_rref(rows: &mut Vec<Vec<Rational>>, cols: usize) -> Vec<usize> {
    let mut ints: Vec<Vec<BigInt>> = rows.iter().map(|row| clear_denominators(row)).collect();
    let pivots = bareiss_forward(&mut ints, cols);
    let rank = pivots.len();
    ints.truncate(rank);

    // Back substitution on the echelon form, one normalised row at a time.
    let mut out: Vec<Vec<Rational>> = Vec::with_capacity(rank);
    for (r, row) in ints.into_iter().enumerate().rev() {
        let c = pivots[r];
        let p = row[c].clone();
        let mut qrow: Vec<Rational> = row.into_iter().map(|x| Rational::new(x, p.clone())).collect();
        for (later, &lc) in out.iter().rev().zip(pivots[r + 1..].iter()) {
            if qrow[lc].is_zero() {
                continue;
            }
            let factor = qrow[lc].clone();
            for (x, y) in qrow.iter_mut().zip(later.iter()).skip(lc) {
                x.sub_mul_assign(&factor, y);
            }
        }
        out.push(qrow);
    }
    out.reverse();
    *rows = out;
    pivots
}

fn clear_denominators(row: &[Rational]) -> Vec<BigInt> {
    let lcm = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect()
}

/// Bareiss elimination to row echelon form; every division is exact because
/// each intermediate entry is a minor of the original matrix.
fn bareiss_forward(a: &mut [Vec<BigInt>], cols: usize) -> Vec<usize> {
    let n = a.len();
    let mut prev = BigInt::one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == n {
            break;
        }
        let Some(p) = (r..n).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let (head, tail) = a.split_at_mut(r + 1);
        let pivot_row = &head[r];
        for row in tail.iter_mut() {
            let lead = row[c].clone();
            for j in c + 1..cols {
                let v = &pivot_row[c] * &row[j] - &lead * &pivot_row[j];
                debug_assert!((&v % &prev).is_zero(), "inexact Bareiss division");
                row[j] = v / &prev;
            }
            row[c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    pivots
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::rational;

    fn qm(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter().map(|r| r.iter().map(|&x| Rational::from_i64(x)).collect()).collect()
    }

    #[test]
    fn rank_one_two_by_two() {
        let mut m = qm(&[&[2, 4], &[1, 2]]);
        let piv = bareiss_rref(&mut m, 2);
        assert_eq!(piv, vec![0]);
        assert_eq!(m, qm(&[&[1, 2]]));
    }

    #[test]
    fn routes_agree_with_fractions() {
        let rows = vec![
            vec![rational(1, 2), rational(2, 3), rational(0, 1), rational(5, 7)],
            vec![rational(-3, 4), rational(1, 1), rational(2, 5), rational(0, 1)],
            vec![rational(-1, 4), rational(5, 3), rational(2, 5), rational(5, 7)],
        ];
        let mut a = rows.clone();
        let mut b = rows;
        let pa = bareiss_rref(&mut a, 4);
        let pb = gauss_jordan(&mut b, 4);
        assert_eq!(pa, pb);
        assert_eq!(a, b);
        assert_eq!(pa.len(), 2);
    }
}
