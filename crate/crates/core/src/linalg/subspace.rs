use super::echelon::{nullspace_from_rref, EchelonBuilder};
use super::sparse::SparseVec;
use super::{LinalgError, Matrix};
use crate::field::Field;

/// Subspace of `F^n` stored as its unique RREF basis, so equal subspaces are
/// structurally equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace<F> {
    ambient: usize,
    rows: Vec<SparseVec<F>>,
}

impl<F: Field> Subspace<F> {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, rows: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace { ambient, rows: (0..ambient).map(SparseVec::unit).collect() }
    }

    pub fn from_sparse<'a>(
        ambient: usize,
        vectors: impl IntoIterator<Item = &'a SparseVec<F>>,
    ) -> Result<Self, LinalgError> {
        let mut b = EchelonBuilder::new(ambient);
        for v in vectors {
            if let Some(m) = v.max_index() {
                if m >= ambient {
                    return Err(LinalgError::DimensionMismatch { expected: ambient, found: m + 1 });
                }
            }
            if !b.is_full() {
                b.push(v);
            }
        }
        Ok(Self::from_builder(b))
    }

    pub fn from_dense_rows(ambient: usize, vectors: &[Vec<F>]) -> Result<Self, LinalgError> {
        if let Some(v) = vectors.iter().find(|v| v.len() != ambient) {
            return Err(LinalgError::DimensionMismatch { expected: ambient, found: v.len() });
        }
        let sparse: Vec<SparseVec<F>> = vectors.iter().map(|v| SparseVec::from_dense(v)).collect();
        Self::from_sparse(ambient, &sparse)
    }

    pub fn from_builder(b: EchelonBuilder<F>) -> Self {
        let ambient = b.cols();
        Subspace { ambient, rows: b.finish() }
    }

    /// Kernel of the row system collected in `b`.
    pub fn kernel_of(b: EchelonBuilder<F>) -> Self {
        let ambient = b.cols();
        let rows = b.finish();
        Subspace::from_rref_unchecked(ambient, nullspace_from_rref(&rows, ambient))
    }

    fn from_rref_unchecked(ambient: usize, vectors: Vec<SparseVec<F>>) -> Self {
        // Kernel vectors read off an RREF have a unit at distinct free columns;
        // re-reduce to put them in canonical form.
        Self::from_sparse(ambient, &vectors).expect("in range")
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ambient
    }

    pub fn basis(&self) -> &[SparseVec<F>] {
        &self.rows
    }

    pub fn basis_dense(&self) -> Vec<Vec<F>> {
        self.rows.iter().map(|r| r.to_dense(self.ambient)).collect()
    }

    pub fn basis_matrix(&self) -> Matrix<F> {
        Matrix::from_rows(self.basis_dense(), self.ambient).expect("rows sized to ambient")
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.leading().expect("nonzero row").0).collect()
    }

    /// Residual of `v` after clearing the pivot coordinates.
    pub fn reduce(&self, v: &SparseVec<F>) -> SparseVec<F> {
        let mut out = v.clone();
        for row in &self.rows {
            let p = row.leading().expect("nonzero row").0;
            let c = out.get(p);
            if !c.is_zero() {
                out = out.add_scaled(row, &-c);
            }
        }
        out
    }

    pub fn contains_sparse(&self, v: &SparseVec<F>) -> bool {
        self.reduce(v).is_zero()
    }

    pub fn contains(&self, v: &[F]) -> bool {
        v.len() == self.ambient && self.contains_sparse(&SparseVec::from_dense(v))
    }

    /// Coordinates of `v` in the canonical basis, if `v` lies in the space.
    pub fn coordinates(&self, v: &SparseVec<F>) -> Option<Vec<F>> {
        if !self.contains_sparse(v) {
            return None;
        }
        Some(self.rows.iter().map(|r| v.get(r.leading().expect("nonzero row").0)).collect())
    }

    pub fn combination(&self, coeffs: &[F]) -> SparseVec<F> {
        let mut out = SparseVec::zero();
        for (row, c) in self.rows.iter().zip(coeffs) {
            out = out.add_scaled(row, c);
        }
        out
    }

    fn check_ambient(&self, other: &Self) -> Result<(), LinalgError> {
        if self.ambient != other.ambient {
            return Err(LinalgError::DimensionMismatch { expected: self.ambient, found: other.ambient });
        }
        Ok(())
    }

    pub fn sum(&self, other: &Self) -> Result<Self, LinalgError> {
        self.check_ambient(other)?;
        Self::from_sparse(self.ambient, self.rows.iter().chain(&other.rows))
    }

    /// Orthogonal complement under the standard dot product.
    pub fn annihilator(&self) -> Self {
        Self::from_rref_unchecked(self.ambient, nullspace_from_rref(&self.rows, self.ambient))
    }

    pub fn intersect(&self, other: &Self) -> Result<Self, LinalgError> {
        self.check_ambient(other)?;
        Ok(self.annihilator().sum(&other.annihilator())?.annihilator())
    }

    pub fn is_subspace_of(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.rows.iter().all(|r| other.contains_sparse(r))
    }

    /// Image under a linear map given on sparse vectors.
    pub fn map(&self, target: usize, f: impl Fn(&SparseVec<F>) -> SparseVec<F>) -> Result<Self, LinalgError> {
        let images: Vec<SparseVec<F>> = self.rows.iter().map(f).collect();
        Self::from_sparse(target, &images)
    }

    pub fn quotient_with_section(&self) -> LinearQuotient<F> {
        LinearQuotient::new(self.clone())
    }
}

/// `F^n / sub`, with coordinates on the non-pivot columns of `sub`.
///
/// The projection sends `v` to the non-pivot coordinates of its residual
/// modulo `sub`; the section sends quotient coordinate `k` to the unit vector
/// of the `k`-th non-pivot column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearQuotient<F> {
    sub: Subspace<F>,
    complement: Vec<usize>,
    slot: Vec<Option<usize>>,
}

impl<F: Field> LinearQuotient<F> {
    pub fn new(sub: Subspace<F>) -> Self {
        let n = sub.ambient();
        let mut is_pivot = vec![false; n];
        for p in sub.pivots() {
            is_pivot[p] = true;
        }
        let complement: Vec<usize> = (0..n).filter(|&c| !is_pivot[c]).collect();
        let mut slot = vec![None; n];
        for (k, &c) in complement.iter().enumerate() {
            slot[c] = Some(k);
        }
        LinearQuotient { sub, complement, slot }
    }

    /// Checks `sub` lies in `ambient` before building the quotient.
    pub fn checked(ambient: usize, sub: Subspace<F>) -> Result<Self, LinalgError> {
        if sub.ambient() != ambient {
            return Err(LinalgError::NotContained);
        }
        Ok(Self::new(sub))
    }

    pub fn ambient(&self) -> usize {
        self.sub.ambient()
    }

    pub fn dim(&self) -> usize {
        self.complement.len()
    }

    pub fn kernel(&self) -> &Subspace<F> {
        &self.sub
    }

    /// Ambient coordinates chosen as quotient representatives.
    pub fn complement(&self) -> &[usize] {
        &self.complement
    }

    pub fn project(&self, v: &SparseVec<F>) -> SparseVec<F> {
        let r = self.sub.reduce(v);
        r.remap(|i| self.slot[i])
    }

    pub fn lift(&self, v: &SparseVec<F>) -> SparseVec<F> {
        v.remap(|k| Some(self.complement[k]))
    }

    pub fn projection_matrix(&self) -> Matrix<F> {
        let n = self.ambient();
        let mut m = Matrix::zeros(self.dim(), n);
        for j in 0..n {
            for (k, c) in self.project(&SparseVec::unit(j)).iter() {
                m.set(*k, j, c.clone());
            }
        }
        m
    }

    pub fn section_matrix(&self) -> Matrix<F> {
        let mut m = Matrix::zeros(self.ambient(), self.dim());
        for (k, &c) in self.complement.iter().enumerate() {
            m.set(c, k, F::one());
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;

    fn q(n: i64) -> Rational {
        Rational::from_i64(n)
    }

    fn span(rows: &[&[i64]]) -> Subspace<Rational> {
        let n = rows[0].len();
        let v: Vec<Vec<Rational>> = rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect();
        Subspace::from_dense_rows(n, &v).unwrap()
    }

    #[test]
    fn canonical_under_different_spanning_sets() {
        let a = span(&[&[1, 2, 0, 1], &[0, 1, 1, 0]]);
        let b = span(&[&[1, 3, 1, 1], &[2, 3, -1, 2], &[1, 2, 0, 1]]);
        assert_eq!(a, b);
    }

    #[test]
    fn sum_and_intersect_trivial() {
        let s = span(&[&[1, 2, 0, 1], &[0, 1, 1, 0]]);
        assert_eq!(s.sum(&Subspace::zero(4)).unwrap(), s);
        assert_eq!(s.intersect(&s).unwrap(), s);
    }

    #[test]
    fn quotient_of_first_axis() {
        let sub = span(&[&[1, 0, 0]]);
        let quo = sub.quotient_with_section();
        assert_eq!(quo.dim(), 2);
        let ps = quo.projection_matrix().mul(&quo.section_matrix()).unwrap();
        assert!(ps.is_identity());
        assert!(quo.project(&SparseVec::unit(0)).is_zero());
    }

    #[test]
    fn quotient_extremes() {
        let zero = Subspace::<Rational>::zero(3).quotient_with_section();
        assert!(zero.projection_matrix().is_identity());
        assert!(zero.section_matrix().is_identity());
        assert_eq!(Subspace::<Rational>::full(3).quotient_with_section().dim(), 0);
    }

    #[test]
    fn ambient_mismatch_is_an_error() {
        let a = Subspace::<Rational>::zero(3);
        let b = Subspace::<Rational>::zero(4);
        assert!(a.sum(&b).is_err());
        assert!(a.intersect(&b).is_err());
    }
}
