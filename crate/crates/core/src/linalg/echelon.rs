use std::collections::BTreeMap;

use super::sparse::SparseVec;
use crate::field::Field;

/// Incremental sparse Gaussian elimination.
///
/// Rows are pushed one at a time and reduced against the pivots seen so far;
/// stored rows are normalised (pivot entry 1) but only semi-reduced until
/// [`EchelonBuilder::finish`] back-substitutes into the unique RREF.
#[derive(Debug, Clone)]
pub struct EchelonBuilder<F> {
    cols: usize,
    rows: BTreeMap<usize, SparseVec<F>>,
}

impl<F: Field> EchelonBuilder<F> {
    pub fn new(cols: usize) -> Self {
        EchelonBuilder { cols, rows: BTreeMap::new() }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.cols
    }

    pub fn has_pivot(&self, c: usize) -> bool {
        self.rows.contains_key(&c)
    }

    /// Residual of `v` after eliminating every current pivot column.
    pub fn reduce(&self, v: &SparseVec<F>) -> SparseVec<F> {
        if self.rows.is_empty() || v.is_zero() {
            return v.clone();
        }
        let mut work: BTreeMap<usize, F> = v.iter().cloned().collect();
        let mut kept = Vec::new();
        while let Some((i, c)) = work.pop_first() {
            if c.is_zero() {
                continue;
            }
            match self.rows.get(&i) {
                Some(row) => {
                    for (j, x) in row.iter().skip(1) {
                        let slot = work.entry(*j).or_insert_with(F::zero);
                        slot.sub_mul_assign(&c, x);
                    }
                }
                None => kept.push((i, c)),
            }
        }
        SparseVec::from_pairs(kept)
    }

    /// Adds a row; returns the new pivot column if the rank grew.
    pub fn push(&mut self, v: &SparseVec<F>) -> Option<usize> {
        debug_assert!(v.max_index().is_none_or(|m| m < self.cols), "row exceeds column count");
        let r = self.reduce(v);
        let (p, lead) = r.leading()?.clone();
        let row = if lead.is_one() { r } else { r.scale(&lead.inv().expect("nonzero lead")) };
        self.rows.insert(p, row);
        Some(p)
    }

    pub fn push_dense(&mut self, v: &[F]) -> Option<usize> {
        self.push(&SparseVec::from_dense(v))
    }

    pub fn contains(&self, v: &SparseVec<F>) -> bool {
        self.reduce(v).is_zero()
    }

    /// Fully reduced rows ordered by pivot column.
    pub fn finish(self) -> Vec<SparseVec<F>> {
        let mut done: BTreeMap<usize, SparseVec<F>> = BTreeMap::new();
        for (p, row) in self.rows.into_iter().rev() {
            let needs = row.iter().skip(1).any(|(j, _)| done.contains_key(j));
            let row = if needs {
                let mut work: BTreeMap<usize, F> = BTreeMap::new();
                for (j, c) in row.iter() {
                    match done.get(j) {
                        Some(other) if *j != p => {
                            for (k, x) in other.iter() {
                                if k == j {
                                    continue;
                                }
                                let slot = work.entry(*k).or_insert_with(F::zero);
                                slot.sub_mul_assign(c, x);
                            }
                        }
                        _ => {
                            let slot = work.entry(*j).or_insert_with(F::zero);
                            *slot = std::mem::replace(slot, F::zero()) + c.clone();
                        }
                    }
                }
                SparseVec::from_map(work)
            } else {
                row
            };
            done.insert(p, row);
        }
        done.into_values().collect()
    }

    /// Basis of the solution space of the homogeneous system, one vector per
    /// free column, in increasing free-column order.
    pub fn nullspace(self) -> Vec<SparseVec<F>> {
        let cols = self.cols;
        nullspace_from_rref(&self.finish(), cols)
    }
}

/// Kernel basis read off RREF rows: the free column gets 1 and each pivot
/// column gets minus the row entry.
pub fn nullspace_from_rref<F: Field>(rows: &[SparseVec<F>], cols: usize) -> Vec<SparseVec<F>> {
    let mut pivot_of = vec![None; cols];
    for (r, row) in rows.iter().enumerate() {
        let (p, _) = row.leading().expect("rref rows are nonzero");
        pivot_of[*p] = Some(r);
    }
    let mut by_free: BTreeMap<usize, Vec<(usize, F)>> = BTreeMap::new();
    for f in (0..cols).filter(|&f| pivot_of[f].is_none()) {
        by_free.insert(f, vec![(f, F::one())]);
    }
    for row in rows {
        let p = row.leading().expect("rref rows are nonzero").0;
        for (j, c) in row.iter().skip(1) {
            if let Some(v) = by_free.get_mut(j) {
                v.push((p, -c.clone()));
            }
        }
    }
    by_free.into_values().map(SparseVec::from_pairs).collect()
}

/// Solves `A x = b` given as augmented rows with the right-hand side in
/// column `cols`. Returns a particular solution with free variables set to
/// zero, or `None` when inconsistent.
pub fn solve_affine<F: Field>(rows: &[SparseVec<F>], cols: usize) -> Option<SparseVec<F>> {
    let mut b = EchelonBuilder::new(cols + 1);
    for r in rows {
        b.push(r);
    }
    if b.has_pivot(cols) {
        return None;
    }
    let rref = b.finish();
    Some(SparseVec::from_pairs(rref.iter().filter_map(|row| {
        let p = row.leading()?.0;
        let rhs = row.get(cols);
        (!rhs.is_zero()).then_some((p, rhs))
    })))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, Rational};
    use crate::linalg::Matrix;
    use num_traits::Zero;

    fn q(n: i64) -> Rational {
        Rational::from_i64(n)
    }

    #[test]
    fn finish_matches_dense_rref() {
        let dense = vec![
            vec![q(0), q(2), q(1), q(3), q(0)],
            vec![q(1), q(1), q(0), q(1), q(2)],
            vec![q(1), q(3), q(1), q(4), q(2)],
            vec![q(2), q(0), q(-1), q(5), q(1)],
        ];
        let mut b = EchelonBuilder::new(5);
        for r in &dense {
            b.push_dense(r);
        }
        let sparse: Vec<Vec<Rational>> = b.finish().iter().map(|r| r.to_dense(5)).collect();
        let m = Matrix::from_rows(dense, 5).unwrap().rref();
        let want: Vec<Vec<Rational>> = m.matrix.to_rows().into_iter().take(m.rank).collect();
        assert_eq!(sparse, want);
    }

    #[test]
    fn nullspace_vectors_annihilate() {
        type F5 = Fp<5>;
        let rows: Vec<Vec<F5>> = vec![
            [1, 2, 0, 4].iter().map(|&x| F5::from_i64(x)).collect(),
            [0, 1, 1, 1].iter().map(|&x| F5::from_i64(x)).collect(),
        ];
        let mut b = EchelonBuilder::new(4);
        for r in &rows {
            b.push_dense(r);
        }
        let ns = b.nullspace();
        assert_eq!(ns.len(), 2);
        for v in &ns {
            for r in &rows {
                assert!(v.dot_dense(r).is_zero());
            }
        }
    }

    #[test]
    fn affine_consistency() {
        // x + y = 1, x - y = 3  ->  x = 2, y = -1
        let rows = vec![
            SparseVec::from_dense(&[q(1), q(1), q(1)]),
            SparseVec::from_dense(&[q(1), q(-1), q(3)]),
        ];
        let x = solve_affine(&rows, 2).unwrap();
        assert_eq!(x.to_dense(2), vec![q(2), q(-1)]);
        // x + y = 1, 2x + 2y = 3 has no solution.
        let bad = vec![
            SparseVec::from_dense(&[q(1), q(1), q(1)]),
            SparseVec::from_dense(&[q(2), q(2), q(3)]),
        ];
        assert!(solve_affine(&bad, 2).is_none());
    }
}
