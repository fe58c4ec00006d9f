use std::sync::Arc;

use super::{LModule, LieAlgebra, LieError};
use crate::field::Field;
use crate::linalg::{LinearQuotient, Matrix, SparseVec, Subspace};

/// `L / I` with its projection and the coordinate section.
#[derive(Debug, Clone)]
pub struct AlgebraQuotient<F> {
    pub original: Arc<LieAlgebra<F>>,
    pub quotient: Arc<LieAlgebra<F>>,
    pub map: LinearQuotient<F>,
}

/// `M / U` with its projection and the coordinate section.
#[derive(Debug, Clone)]
pub struct ModuleQuotient<F> {
    pub original: Arc<LModule<F>>,
    pub quotient: Arc<LModule<F>>,
    pub map: LinearQuotient<F>,
}

impl<F: Field> AlgebraQuotient<F> {
    pub fn project(&self, v: &SparseVec<F>) -> SparseVec<F> {
        self.map.project(v)
    }

    pub fn lift(&self, v: &SparseVec<F>) -> SparseVec<F> {
        self.map.lift(v)
    }

    pub fn projection_matrix(&self) -> Matrix<F> {
        self.map.projection_matrix()
    }

    pub fn section_matrix(&self) -> Matrix<F> {
        self.map.section_matrix()
    }

    pub fn kernel(&self) -> &Subspace<F> {
        self.map.kernel()
    }
}

impl<F: Field> ModuleQuotient<F> {
    pub fn project(&self, v: &SparseVec<F>) -> SparseVec<F> {
        self.map.project(v)
    }

    pub fn lift(&self, v: &SparseVec<F>) -> SparseVec<F> {
        self.map.lift(v)
    }

    pub fn kernel(&self) -> &Subspace<F> {
        self.map.kernel()
    }
}

/// `L / I`. Brackets are induced through the section; the projection is then
/// checked to be a homomorphism on every exact basis pair.
pub fn quotient_algebra<F: Field>(
    l: &Arc<LieAlgebra<F>>,
    ideal: &Subspace<F>,
) -> Result<AlgebraQuotient<F>, LieError> {
    if ideal.ambient() != l.dim() {
        return Err(LieError::DimensionMismatch { expected: l.dim(), found: ideal.ambient() });
    }
    if let Some((i, b)) = l.ideal_witness(ideal) {
        return Err(LieError::NotAnIdeal {
            x: l.name(i).to_string(),
            y: l.element_string(&ideal.basis()[b]),
        });
    }
    let map = ideal.quotient_with_section();
    let reps = map.complement().to_vec();
    let names = reps.iter().map(|&c| l.name(c).to_string()).collect();
    let mut br = Vec::new();
    let mut partial = Vec::new();
    for a in 0..reps.len() {
        for b in a + 1..reps.len() {
            let v = map.project(l.bracket_basis(reps[a], reps[b]));
            if !v.is_zero() {
                br.push((a, b, v));
            }
            if l.is_partial(reps[a], reps[b]) {
                partial.push((a, b));
            }
        }
    }
    let quotient = LieAlgebra::new(names, br)?.with_partial(partial);
    let q = AlgebraQuotient { original: l.clone(), quotient: Arc::new(quotient), map };
    for i in 0..l.dim() {
        for j in i + 1..l.dim() {
            if l.is_partial(i, j) {
                continue;
            }
            let lhs = q.project(l.bracket_basis(i, j));
            let rhs = q.quotient.bracket(&q.project(&SparseVec::unit(i)), &q.project(&SparseVec::unit(j)));
            if lhs != rhs {
                return Err(LieError::Internal(format!(
                    "projection is not a homomorphism on ({}, {})",
                    l.name(i),
                    l.name(j)
                )));
            }
        }
    }
    Ok(q)
}

/// `M / U` for a submodule `U`, checked for equivariance.
pub fn quotient_module<F: Field>(m: &Arc<LModule<F>>, sub: &Subspace<F>) -> Result<ModuleQuotient<F>, LieError> {
    if sub.ambient() != m.dim() {
        return Err(LieError::DimensionMismatch { expected: m.dim(), found: sub.ambient() });
    }
    let lie = m.lie().clone();
    if let Some((i, b)) = m.submodule_witness(sub) {
        return Err(LieError::NotASubmodule {
            x: lie.name(i).to_string(),
            v: format!("{:?}", sub.basis()[b].iter().collect::<Vec<_>>()),
        });
    }
    let map = sub.quotient_with_section();
    let reps = map.complement().to_vec();
    let names = reps.iter().map(|&c| m.names()[c].clone()).collect();
    let mut act = Vec::new();
    let mut partial = Vec::new();
    for i in 0..lie.dim() {
        for (a, &r) in reps.iter().enumerate() {
            let v = map.project(m.act_basis(i, r));
            if !v.is_zero() {
                act.push((i, a, v));
            }
            if m.is_partial(i, r) {
                partial.push((i, a));
            }
        }
    }
    let quotient = LModule::new(lie.clone(), names, act)?.with_partial(partial);
    let q = ModuleQuotient { original: m.clone(), quotient: Arc::new(quotient), map };
    for i in 0..lie.dim() {
        for j in 0..m.dim() {
            if m.is_partial(i, j) {
                continue;
            }
            let lhs = q.project(m.act_basis(i, j));
            let rhs = q.quotient.act_on(i, &q.project(&SparseVec::unit(j)));
            if lhs != rhs {
                return Err(LieError::Internal(format!("projection is not equivariant on ({}, {})", lie.name(i), j)));
            }
        }
    }
    Ok(q)
}
