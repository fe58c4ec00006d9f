use serde_json::{json, Value};

use crate::field::Field;
use crate::linalg::{Accumulator, LinalgError, SparseVec, Subspace};

/// Linear map `L → M` stored as the images of the basis of `L`.
///
/// Its coefficient vector is the row-major flattening of the `dim M × dim L`
/// matrix: entry `(k, j)` (coefficient of `v_k` in `f(e_j)`) sits at
/// `k * dim L + j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearMap<F> {
    pub dim_m: usize,
    pub images: Vec<SparseVec<F>>,
}

impl<F: Field> LinearMap<F> {
    pub fn zero(dim_l: usize, dim_m: usize) -> Self {
        LinearMap { dim_m, images: vec![SparseVec::zero(); dim_l] }
    }

    pub fn identity(n: usize) -> Self {
        LinearMap { dim_m: n, images: (0..n).map(SparseVec::unit).collect() }
    }

    pub fn from_images(dim_m: usize, images: Vec<SparseVec<F>>) -> Self {
        LinearMap { dim_m, images }
    }

    pub fn dim_l(&self) -> usize {
        self.images.len()
    }

    pub fn apply_basis(&self, j: usize) -> &SparseVec<F> {
        &self.images[j]
    }

    pub fn apply(&self, x: &SparseVec<F>) -> SparseVec<F> {
        let mut acc = Accumulator::new();
        for (j, c) in x.iter() {
            acc.add_vec(&self.images[*j], c);
        }
        acc.finish()
    }

    pub fn coefficient_len(&self) -> usize {
        self.dim_l() * self.dim_m
    }

    pub fn to_coeffs(&self) -> SparseVec<F> {
        let n = self.dim_l();
        SparseVec::from_pairs(
            self.images.iter().enumerate().flat_map(|(j, v)| v.iter().map(move |(k, c)| (k * n + j, c.clone()))),
        )
    }

    pub fn from_coeffs(v: &SparseVec<F>, dim_l: usize, dim_m: usize) -> Self {
        let mut cols: Vec<Vec<(usize, F)>> = vec![Vec::new(); dim_l];
        for (idx, c) in v.iter() {
            cols[idx % dim_l].push((idx / dim_l, c.clone()));
        }
        LinearMap { dim_m, images: cols.into_iter().map(SparseVec::from_pairs).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.add_scaled(other, &F::one())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add_scaled(other, &-F::one())
    }

    pub fn add_scaled(&self, other: &Self, c: &F) -> Self {
        LinearMap {
            dim_m: self.dim_m,
            images: self.images.iter().zip(&other.images).map(|(a, b)| a.add_scaled(b, c)).collect(),
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        LinearMap { dim_m: self.dim_m, images: self.images.iter().map(|v| v.scale(c)).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.images.iter().all(SparseVec::is_zero)
    }

    /// Composition `self ∘ g`.
    pub fn compose(&self, g: &LinearMap<F>) -> Self {
        LinearMap { dim_m: self.dim_m, images: g.images.iter().map(|v| self.apply(v)).collect() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Symmetry {
    Skew,
    Symmetric,
}

impl Symmetry {
    pub fn as_str(self) -> &'static str {
        match self {
            Symmetry::Skew => "skew",
            Symmetry::Symmetric => "symmetric",
        }
    }
}

/// Number of independent argument pairs: `i < j` (skew) or `i ≤ j` (symmetric).
pub fn pair_count(n: usize, sym: Symmetry) -> usize {
    match sym {
        Symmetry::Skew => n * n.saturating_sub(1) / 2,
        Symmetry::Symmetric => n * (n + 1) / 2,
    }
}

/// Lexicographic position of the pair `(i, j)` (already ordered).
pub fn pair_index(n: usize, i: usize, j: usize, sym: Symmetry) -> usize {
    debug_assert!(i <= j && j < n);
    match sym {
        Symmetry::Skew => {
            debug_assert!(i < j);
            i * (2 * n - i - 1) / 2 + (j - i - 1)
        }
        Symmetry::Symmetric => i * (2 * n - i + 1) / 2 + (j - i),
    }
}

/// All ordered pairs in coefficient order.
pub fn pairs(n: usize, sym: Symmetry) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(pair_count(n, sym));
    for i in 0..n {
        let start = if sym == Symmetry::Skew { i + 1 } else { i };
        for j in start..n {
            out.push((i, j));
        }
    }
    out
}

/// Where `δ(e_a, e_b)` lives among the stored pair values, with its sign;
/// `None` when it is forced to vanish (`a = b`, skew).
pub fn pair_slot<F: Field>(n: usize, a: usize, b: usize, sym: Symmetry) -> Option<(usize, F)> {
    match sym {
        Symmetry::Skew => match a.cmp(&b) {
            std::cmp::Ordering::Less => Some((pair_index(n, a, b, sym), F::one())),
            std::cmp::Ordering::Greater => Some((pair_index(n, b, a, sym), -F::one())),
            std::cmp::Ordering::Equal => None,
        },
        Symmetry::Symmetric => Some((pair_index(n, a.min(b), a.max(b), sym), F::one())),
    }
}

/// Bilinear map `L × L → M` with structural (skew or symmetric) symmetry.
///
/// Coefficient index of `v_k` in the value at pair number `p` is `p * dim M + k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BilinearMap<F> {
    pub dim_l: usize,
    pub dim_m: usize,
    pub symmetry: Symmetry,
    pub values: Vec<SparseVec<F>>,
}

impl<F: Field> BilinearMap<F> {
    pub fn zero(dim_l: usize, dim_m: usize, symmetry: Symmetry) -> Self {
        BilinearMap { dim_l, dim_m, symmetry, values: vec![SparseVec::zero(); pair_count(dim_l, symmetry)] }
    }

    /// Builds the map from its values on ordered basis pairs.
    pub fn from_fn(
        dim_l: usize,
        dim_m: usize,
        symmetry: Symmetry,
        mut f: impl FnMut(usize, usize) -> SparseVec<F>,
    ) -> Self {
        let values = pairs(dim_l, symmetry).into_iter().map(|(i, j)| f(i, j)).collect();
        BilinearMap { dim_l, dim_m, symmetry, values }
    }

    pub fn eval_basis(&self, a: usize, b: usize) -> SparseVec<F> {
        match pair_slot::<F>(self.dim_l, a, b, self.symmetry) {
            Some((p, s)) => {
                if s.is_one() {
                    self.values[p].clone()
                } else {
                    self.values[p].neg()
                }
            }
            None => SparseVec::zero(),
        }
    }

    pub fn eval(&self, x: &SparseVec<F>, y: &SparseVec<F>) -> SparseVec<F> {
        let mut acc = Accumulator::new();
        for (a, c) in x.iter() {
            for (b, d) in y.iter() {
                if let Some((p, s)) = pair_slot::<F>(self.dim_l, *a, *b, self.symmetry) {
                    acc.add_vec(&self.values[p], &(s * c.mul_ref(d)));
                }
            }
        }
        acc.finish()
    }

    pub fn coefficient_len(&self) -> usize {
        self.values.len() * self.dim_m
    }

    pub fn to_coeffs(&self) -> SparseVec<F> {
        let d = self.dim_m;
        SparseVec::from_pairs(
            self.values.iter().enumerate().flat_map(|(p, v)| v.iter().map(move |(k, c)| (p * d + k, c.clone()))),
        )
    }

    pub fn from_coeffs(v: &SparseVec<F>, dim_l: usize, dim_m: usize, symmetry: Symmetry) -> Self {
        let mut vals: Vec<Vec<(usize, F)>> = vec![Vec::new(); pair_count(dim_l, symmetry)];
        for (idx, c) in v.iter() {
            vals[idx / dim_m].push((idx % dim_m, c.clone()));
        }
        BilinearMap { dim_l, dim_m, symmetry, values: vals.into_iter().map(SparseVec::from_pairs).collect() }
    }

    pub fn add_scaled(&self, other: &Self, c: &F) -> Self {
        BilinearMap {
            values: self.values.iter().zip(&other.values).map(|(a, b)| a.add_scaled(b, c)).collect(),
            ..self.clone()
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add_scaled(other, &-F::one())
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(SparseVec::is_zero)
    }
}

/// A solution space of linear maps, stored canonically on coefficient vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearMapSpace<F> {
    pub name: String,
    pub dim_l: usize,
    pub dim_m: usize,
    pub space: Subspace<F>,
}

impl<F: Field> LinearMapSpace<F> {
    pub fn new(name: impl Into<String>, dim_l: usize, dim_m: usize, space: Subspace<F>) -> Self {
        debug_assert_eq!(space.ambient(), dim_l * dim_m);
        LinearMapSpace { name: name.into(), dim_l, dim_m, space }
    }

    pub fn from_maps(name: impl Into<String>, dim_l: usize, dim_m: usize, maps: &[LinearMap<F>]) -> Self {
        let coeffs: Vec<SparseVec<F>> = maps.iter().map(LinearMap::to_coeffs).collect();
        let space = Subspace::from_sparse(dim_l * dim_m, &coeffs).expect("map sizes agree");
        Self::new(name, dim_l, dim_m, space)
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn basis_maps(&self) -> Vec<LinearMap<F>> {
        self.space.basis().iter().map(|v| LinearMap::from_coeffs(v, self.dim_l, self.dim_m)).collect()
    }

    pub fn contains(&self, f: &LinearMap<F>) -> bool {
        f.dim_l() == self.dim_l && f.dim_m == self.dim_m && self.space.contains_sparse(&f.to_coeffs())
    }

    pub fn sum(&self, other: &Self, name: impl Into<String>) -> Result<Self, LinalgError> {
        Ok(Self::new(name, self.dim_l, self.dim_m, self.space.sum(&other.space)?))
    }

    pub fn intersect(&self, other: &Self, name: impl Into<String>) -> Result<Self, LinalgError> {
        Ok(Self::new(name, self.dim_l, self.dim_m, self.space.intersect(&other.space)?))
    }

    pub fn is_subspace_of(&self, other: &Self) -> bool {
        self.space.is_subspace_of(&other.space)
    }

    pub fn report(&self, checks: Value) -> Value {
        space_report(&self.name, &self.space, checks)
    }
}

/// A solution space of skew or symmetric bilinear maps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BilinearMapSpace<F> {
    pub name: String,
    pub dim_l: usize,
    pub dim_m: usize,
    pub symmetry: Symmetry,
    pub space: Subspace<F>,
}

impl<F: Field> BilinearMapSpace<F> {
    pub fn new(name: impl Into<String>, dim_l: usize, dim_m: usize, symmetry: Symmetry, space: Subspace<F>) -> Self {
        debug_assert_eq!(space.ambient(), pair_count(dim_l, symmetry) * dim_m);
        BilinearMapSpace { name: name.into(), dim_l, dim_m, symmetry, space }
    }

    pub fn from_maps(
        name: impl Into<String>,
        dim_l: usize,
        dim_m: usize,
        symmetry: Symmetry,
        maps: &[BilinearMap<F>],
    ) -> Self {
        let coeffs: Vec<SparseVec<F>> = maps.iter().map(BilinearMap::to_coeffs).collect();
        let space = Subspace::from_sparse(pair_count(dim_l, symmetry) * dim_m, &coeffs).expect("map sizes agree");
        Self::new(name, dim_l, dim_m, symmetry, space)
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn basis_maps(&self) -> Vec<BilinearMap<F>> {
        self.space
            .basis()
            .iter()
            .map(|v| BilinearMap::from_coeffs(v, self.dim_l, self.dim_m, self.symmetry))
            .collect()
    }

    pub fn contains(&self, d: &BilinearMap<F>) -> bool {
        d.symmetry == self.symmetry
            && d.dim_l == self.dim_l
            && d.dim_m == self.dim_m
            && self.space.contains_sparse(&d.to_coeffs())
    }

    pub fn sum(&self, other: &Self, name: impl Into<String>) -> Result<Self, LinalgError> {
        Ok(Self::new(name, self.dim_l, self.dim_m, self.symmetry, self.space.sum(&other.space)?))
    }

    pub fn is_subspace_of(&self, other: &Self) -> bool {
        self.symmetry == other.symmetry && self.space.is_subspace_of(&other.space)
    }

    pub fn report(&self, checks: Value) -> Value {
        space_report(&self.name, &self.space, checks)
    }
}

/// `{ "space", "dim", "basis", "checks" }` with dense coefficient rows.
pub fn space_report<F: Field>(name: &str, space: &Subspace<F>, checks: Value) -> Value {
    let basis: Vec<Value> = space
        .basis_dense()
        .iter()
        .map(|row| Value::Array(row.iter().map(Field::to_json).collect()))
        .collect();
    json!({ "space": name, "dim": space.dim(), "basis": basis, "checks": checks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;

    #[test]
    fn pair_indices_are_lexicographic() {
        for sym in [Symmetry::Skew, Symmetry::Symmetric] {
            for n in 0..6 {
                let ps = pairs(n, sym);
                assert_eq!(ps.len(), pair_count(n, sym));
                for (k, (i, j)) in ps.into_iter().enumerate() {
                    assert_eq!(pair_index(n, i, j, sym), k);
                }
            }
        }
    }

    #[test]
    fn coefficient_round_trips() {
        let q = |x: i64| Rational::from_i64(x);
        let f = LinearMap::from_images(
            2,
            vec![SparseVec::from_dense(&[q(1), q(2)]), SparseVec::zero(), SparseVec::from_dense(&[q(0), q(-3)])],
        );
        assert_eq!(LinearMap::from_coeffs(&f.to_coeffs(), 3, 2), f);
        // Row-major in the matrix of f: entry (1, 2) is the coefficient of v_1 in f(e_2).
        assert_eq!(f.to_coeffs().get(3 + 2), q(-3));

        let d = BilinearMap::from_fn(3, 2, Symmetry::Skew, |i, j| SparseVec::single(0, q((i + 2 * j) as i64)));
        assert_eq!(BilinearMap::from_coeffs(&d.to_coeffs(), 3, 2, Symmetry::Skew), d);
        assert_eq!(d.eval_basis(2, 0), d.eval_basis(0, 2).neg());
        assert!(d.eval_basis(1, 1).is_zero());
    }
}
