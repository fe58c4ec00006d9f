//! Map spaces attached to an `L`-module: centroid, derivations, biderivations,
//! commuting maps, and the decompositions relating them.

mod checks;
mod solve;
mod types;

use std::collections::BTreeMap;

use serde_json::{json, Value};

pub use checks::*;
pub use solve::*;
pub use types::*;

use crate::field::Field;
use crate::lie::{json::vector_to_json, LModule};
use crate::linalg::{solve_affine, Matrix, SparseVec, Subspace};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MapError {
    #[error("map is not in the centroid")]
    NotInCentroid,
    #[error("map is not a skew-symmetric biderivation")]
    NotABiderivation,
    #[error("map is not commuting")]
    NotCommuting,
    #[error("ω is not skew-symmetric at ({i}, {j})")]
    NotSkew { i: usize, j: usize },
    #[error("ω(e_{i}, w) ≠ 0 for some w in L'")]
    OmegaNotVanishingOnDerived { i: usize },
    #[error("z0 is not annihilated by L")]
    NotCentral,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
}

/// `δ(x, y) = γ([x, y])`.
pub fn from_centroid<F: Field>(m: &LModule<F>, g: &LinearMap<F>) -> Result<BilinearMap<F>, MapError> {
    if !is_centroid(m, g) {
        return Err(MapError::NotInCentroid);
    }
    Ok(bracket_compose(m, g))
}

fn bracket_compose<F: Field>(m: &LModule<F>, g: &LinearMap<F>) -> BilinearMap<F> {
    let l = m.lie();
    BilinearMap::from_fn(l.dim(), m.dim(), Symmetry::Skew, |i, j| g.apply(l.bracket_basis(i, j)))
}

/// `δ(x, y) = ω(x, y) z0` for a skew form `ω` given by its Gram matrix.
pub fn make_trivial_biderivation<F: Field>(
    m: &LModule<F>,
    omega: &Matrix<F>,
    z0: &SparseVec<F>,
) -> Result<BilinearMap<F>, MapError> {
    let l = m.lie();
    let n = l.dim();
    if omega.rows() != n || omega.cols() != n {
        return Err(MapError::DimensionMismatch { expected: n, found: omega.rows().max(omega.cols()) });
    }
    for i in 0..n {
        for j in i..n {
            if *omega.get(i, j) != -omega.get(j, i).clone() {
                return Err(MapError::NotSkew { i, j });
            }
        }
    }
    for w in l.derived().basis() {
        for i in 0..n {
            let mut s = F::zero();
            for (j, c) in w.iter() {
                s = s + omega.get(i, *j).mul_ref(c);
            }
            if !s.is_zero() {
                return Err(MapError::OmegaNotVanishingOnDerived { i });
            }
        }
    }
    if !m.invariants().contains_sparse(z0) {
        return Err(MapError::NotCentral);
    }
    Ok(BilinearMap::from_fn(n, m.dim(), Symmetry::Skew, |i, j| z0.scale(omega.get(i, j))))
}

/// Writes `target` as a combination of `columns`, if possible. Earlier
/// columns take pivots first, so later ones are used only when needed.
pub fn solve_combination<F: Field>(columns: &[SparseVec<F>], target: &SparseVec<F>) -> Option<Vec<F>> {
    let r = columns.len();
    let mut rows: BTreeMap<usize, Vec<(usize, F)>> = BTreeMap::new();
    for (t, col) in columns.iter().enumerate() {
        for (k, c) in col.iter() {
            rows.entry(*k).or_default().push((t, c.clone()));
        }
    }
    for (k, c) in target.iter() {
        rows.entry(*k).or_default().push((r, c.clone()));
    }
    let rows: Vec<SparseVec<F>> = rows.into_values().map(SparseVec::from_pairs).collect();
    let x = solve_affine(&rows, r)?;
    Some((0..r).map(|t| x.get(t)).collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DecompositionStatus {
    /// `δ = γ([·,·])`.
    Exact,
    /// `δ = γ([·,·]) + δ₀` with `δ₀` trivial and nonzero.
    UpToTrivial,
    Undecomposable,
}

impl DecompositionStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            DecompositionStatus::Exact => "exact",
            DecompositionStatus::UpToTrivial => "up_to_trivial",
            DecompositionStatus::Undecomposable => "undecomposable",
        }
    }
}

#[derive(Debug, Clone)]
pub struct BiderivationDecomposition<F> {
    pub status: DecompositionStatus,
    pub gamma: Option<LinearMap<F>>,
    /// `δ − γ([·,·])`, the trivial part when decomposable.
    pub residual: Option<BilinearMap<F>>,
    /// Reduction of `δ` modulo the span of the centroid and trivial images.
    pub obstruction: Option<BilinearMap<F>>,
}

impl<F: Field> BiderivationDecomposition<F> {
    pub fn to_json(&self) -> Value {
        json!({
            "status": self.status.as_str(),
            "gamma": self.gamma.as_ref().map(linear_map_json),
            "residual": self.residual.as_ref().map(bilinear_map_json),
            "obstruction": self.obstruction.as_ref().map(bilinear_map_json),
        })
    }
}

pub fn linear_map_json<F: Field>(f: &LinearMap<F>) -> Value {
    Value::Array(f.images.iter().map(vector_to_json).collect())
}

pub fn bilinear_map_json<F: Field>(d: &BilinearMap<F>) -> Value {
    Value::Array(
        pairs(d.dim_l, d.symmetry)
            .into_iter()
            .zip(&d.values)
            .filter(|(_, v)| !v.is_zero())
            .map(|((i, j), v)| json!({ "i": i, "j": j, "value": vector_to_json(v) }))
            .collect(),
    )
}

/// Splits a skew biderivation as `γ([x,y]) + δ₀(x,y)` with `γ` in the centroid
/// and `δ₀` trivial. The trivial part is taken as large as possible, so `γ`
/// only carries what the trivial space cannot.
pub fn decompose_biderivation<F: Field>(
    m: &LModule<F>,
    delta: &BilinearMap<F>,
) -> Result<BiderivationDecomposition<F>, MapError> {
    let cent = centroid(m);
    decompose_biderivation_with(m, delta, &cent, &trivial_biderivations(m))
}

/// As [`decompose_biderivation`], with precomputed centroid and trivial spaces.
pub fn decompose_biderivation_with<F: Field>(
    m: &LModule<F>,
    delta: &BilinearMap<F>,
    cent: &LinearMapSpace<F>,
    trivial: &BilinearMapSpace<F>,
) -> Result<BiderivationDecomposition<F>, MapError> {
    let (n, d) = (m.lie().dim(), m.dim());
    if delta.dim_l != n || delta.dim_m != d {
        return Err(MapError::DimensionMismatch { expected: n, found: delta.dim_l });
    }
    if !is_skew_biderivation(m, delta) {
        return Err(MapError::NotABiderivation);
    }
    let gammas = cent.basis_maps();
    let triv = trivial.basis_maps();
    let mut columns: Vec<SparseVec<F>> = triv.iter().map(BilinearMap::to_coeffs).collect();
    columns.extend(gammas.iter().map(|g| bracket_compose(m, g).to_coeffs()));
    let target = delta.to_coeffs();
    let Some(x) = solve_combination(&columns, &target) else {
        let span = Subspace::from_sparse(target_len(n, d), columns.iter()).expect("coefficient lengths agree");
        let ob = BilinearMap::from_coeffs(&span.reduce(&target), n, d, Symmetry::Skew);
        return Ok(BiderivationDecomposition {
            status: DecompositionStatus::Undecomposable,
            gamma: None,
            residual: None,
            obstruction: Some(ob),
        });
    };
    let mut gamma = LinearMap::zero(n, d);
    for (g, c) in gammas.iter().zip(&x[triv.len()..]) {
        gamma = gamma.add_scaled(g, c);
    }
    let residual = delta.sub(&bracket_compose(m, &gamma));
    let status = if residual.is_zero() { DecompositionStatus::Exact } else { DecompositionStatus::UpToTrivial };
    Ok(BiderivationDecomposition { status, gamma: Some(gamma), residual: Some(residual), obstruction: None })
}

fn target_len(n: usize, d: usize) -> usize {
    pair_count(n, Symmetry::Skew) * d
}

/// A basis pair where `f([x,y]) − x·f(y)` leaves `Z_M(L)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommutingWitness<F> {
    pub x: usize,
    pub y: usize,
    /// `f([x, y])`.
    pub lhs: SparseVec<F>,
    /// `x · f(y)`.
    pub rhs: SparseVec<F>,
}

#[derive(Debug, Clone)]
pub struct CommutingDecomposition<F> {
    pub success: bool,
    pub gamma: Option<LinearMap<F>>,
    pub mu: Option<LinearMap<F>>,
    pub witnesses: Vec<CommutingWitness<F>>,
}

impl<F: Field> CommutingDecomposition<F> {
    pub fn to_json(&self, m: &LModule<F>) -> Value {
        let names = m.lie().names();
        json!({
            "success": self.success,
            "gamma": self.gamma.as_ref().map(linear_map_json),
            "mu": self.mu.as_ref().map(linear_map_json),
            "witnesses": self.witnesses.iter().map(|w| json!({
                "x": names[w.x], "y": names[w.y],
                "lhs": vector_to_json(&w.lhs), "rhs": vector_to_json(&w.rhs),
            })).collect::<Vec<_>>(),
        })
    }
}

/// Splits a commuting map as `γ + μ` with `γ` in the centroid and `μ` central.
/// On failure every basis pair obstructing the split is reported.
pub fn decompose_commuting<F: Field>(m: &LModule<F>, f: &LinearMap<F>) -> Result<CommutingDecomposition<F>, MapError> {
    decompose_commuting_with(m, f, &centroid(m), &central_maps(m))
}

pub fn decompose_commuting_with<F: Field>(
    m: &LModule<F>,
    f: &LinearMap<F>,
    cent: &LinearMapSpace<F>,
    central: &LinearMapSpace<F>,
) -> Result<CommutingDecomposition<F>, MapError> {
    let (n, d) = (m.lie().dim(), m.dim());
    if f.dim_l() != n || f.dim_m != d {
        return Err(MapError::DimensionMismatch { expected: n, found: f.dim_l() });
    }
    if !is_commuting(m, f) {
        return Err(MapError::NotCommuting);
    }
    let gammas = cent.basis_maps();
    let mus = central.basis_maps();
    let columns: Vec<SparseVec<F>> = gammas.iter().chain(&mus).map(LinearMap::to_coeffs).collect();
    if let Some(x) = solve_combination(&columns, &f.to_coeffs()) {
        let mut gamma = LinearMap::zero(n, d);
        for (g, c) in gammas.iter().zip(&x) {
            gamma = gamma.add_scaled(g, c);
        }
        let mu = f.sub(&gamma);
        return Ok(CommutingDecomposition { success: true, gamma: Some(gamma), mu: Some(mu), witnesses: Vec::new() });
    }
    let z = m.invariants();
    Ok(CommutingDecomposition { success: false, gamma: None, mu: None, witnesses: commuting_witnesses(m, f, &z) })
}

/// All ordered basis pairs with `f([x,y]) − x·f(y) ∉ z`.
pub fn commuting_witnesses<F: Field>(m: &LModule<F>, f: &LinearMap<F>, z: &Subspace<F>) -> Vec<CommutingWitness<F>> {
    let l = m.lie();
    let n = l.dim();
    let mut out = Vec::new();
    for x in 0..n {
        for y in 0..n {
            if x == y || l.is_partial(x, y) {
                continue;
            }
            let lhs = f.apply(l.bracket_basis(x, y));
            let rhs = m.act_on(x, f.apply_basis(y));
            if !z.contains_sparse(&lhs.sub(&rhs)) {
                out.push(CommutingWitness { x, y, lhs, rhs });
            }
        }
    }
    out
}
