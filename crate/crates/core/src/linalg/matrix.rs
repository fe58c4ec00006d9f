use std::fmt;

use num_traits::Zero;

use super::{LinalgError, Subspace};
use crate::field::Field;

/// Dense row-major matrix over a single field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

/// Result of [`Matrix::rref`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref<F> {
    pub matrix: Matrix<F>,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![F::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, F::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<F>>, cols: usize) -> Result<Self, LinalgError> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for row in rows {
            if row.len() != cols {
                return Err(LinalgError::DimensionMismatch { expected: cols, found: row.len() });
            }
            data.extend(row);
        }
        Ok(Matrix { rows: n, cols, data })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows = rows.iter().map(|r| r.iter().map(|&x| F::from_i64(x)).collect()).collect();
        Self::from_rows(rows, cols).expect("ragged integer matrix")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<F> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<F>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn as_slice(&self) -> &[F] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = self.get(i, j);
                    if i == j {
                        x.is_one()
                    } else {
                        x.is_zero()
                    }
                })
            })
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Result<Self, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::DimensionMismatch { expected: self.cols, found: other.rows });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let neg = -a.clone();
                        out.data[i * other.cols + j].sub_mul_assign(&neg, b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[F]) -> Result<Vec<F>, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::DimensionMismatch { expected: self.cols, found: v.len() });
        }
        Ok((0..self.rows)
            .map(|i| {
                let mut acc = F::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc.sub_mul_assign(&-a.clone(), b);
                    }
                }
                acc
            })
            .collect())
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Self) -> Result<Self, LinalgError> {
        if self.cols != other.cols {
            return Err(LinalgError::DimensionMismatch { expected: self.cols, found: other.cols });
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(Matrix { rows: self.rows + other.rows, cols: self.cols, data })
    }

    /// The unique reduced row echelon form, padded back to the original shape
    /// with zero rows.
    pub fn rref(&self) -> Rref<F> {
        let mut rows = self.to_rows();
        let pivots = F::row_reduce(&mut rows, self.cols);
        let rank = pivots.len();
        rows.resize(self.rows, vec![F::zero(); self.cols]);
        let matrix = Matrix::from_rows(rows, self.cols).expect("row length preserved");
        Rref { matrix, pivots, rank }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// All `v` with `self * v = 0`, as a canonical subspace.
    pub fn nullspace(&self) -> Subspace<F> {
        let rref = self.rref();
        let mut free = vec![true; self.cols];
        for &p in &rref.pivots {
            free[p] = false;
        }
        let vectors: Vec<Vec<F>> = (0..self.cols)
            .filter(|&f| free[f])
            .map(|f| {
                let mut v = vec![F::zero(); self.cols];
                v[f] = F::one();
                for (r, &p) in rref.pivots.iter().enumerate() {
                    v[p] = -rref.matrix.get(r, f).clone();
                }
                v
            })
            .collect();
        Subspace::from_dense_rows(self.cols, &vectors).expect("vectors sized to column count")
    }

    /// Row space as a canonical subspace of `F^cols`.
    pub fn row_space(&self) -> Subspace<F> {
        Subspace::from_dense_rows(self.cols, &self.to_rows()).expect("rows sized to column count")
    }
}

impl<F: fmt::Debug> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.data[i * self.cols..(i + 1) * self.cols].iter().map(|x| format!("{x:?}")).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, Rational};

    type Q = Rational;
    type F3 = Fp<3>;

    #[test]
    fn rref_identity_and_zero() {
        let id = Matrix::<Q>::identity(3);
        let r = id.rref();
        assert_eq!(r.matrix, id);
        assert_eq!(r.pivots, vec![0, 1, 2]);
        assert_eq!(r.rank, 3);

        let z = Matrix::<Q>::zeros(2, 4);
        let r = z.rref();
        assert_eq!(r.matrix, z);
        assert!(r.pivots.is_empty());
        assert_eq!(r.rank, 0);
    }

    #[test]
    fn rref_rank_one() {
        let m = Matrix::<Q>::from_i64(&[&[2, 4], &[1, 2]]);
        let r = m.rref();
        assert_eq!(r.matrix, Matrix::from_i64(&[&[1, 2], &[0, 0]]));
        assert_eq!(r.rank, 1);
    }

    #[test]
    fn nullspace_trivial_cases() {
        assert_eq!(Matrix::<Q>::identity(4).nullspace().dim(), 0);
        let full = Matrix::<Q>::zeros(2, 5).nullspace();
        assert_eq!(full.dim(), 5);
        assert_eq!(full, Subspace::full(5));
    }

    #[test]
    fn nullspace_over_f3_exhaustive() {
        let m = Matrix::<F3>::from_i64(&[&[1, 1, 0]]);
        let ns = m.nullspace();
        assert_eq!(ns.dim(), 2);
        for v in ns.basis_dense() {
            assert!(m.mul_vec(&v).unwrap().iter().all(|x| x.is_zero()));
        }
        // Exhaustive oracle over all 27 vectors of F_3^3.
        let mut count = 0;
        for a in F3::elements() {
            for b in F3::elements() {
                for c in F3::elements() {
                    let v = vec![a, b, c];
                    let in_kernel = m.mul_vec(&v).unwrap()[0].is_zero();
                    assert_eq!(in_kernel, ns.contains(&v));
                    count += in_kernel as usize;
                }
            }
        }
        assert_eq!(count, 9);
    }

    #[test]
    fn mul_dimension_mismatch() {
        let a = Matrix::<Q>::zeros(2, 3);
        assert!(matches!(a.mul(&a), Err(LinalgError::DimensionMismatch { .. })));
    }
}
