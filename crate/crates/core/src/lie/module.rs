use std::sync::Arc;

use super::{LieAlgebra, LieError};
use crate::field::Field;
use crate::linalg::{Accumulator, EchelonBuilder, SparseVec, Subspace};

/// A finite-dimensional `L`-module given by action constants `e_i · v_j`.
///
/// As for [`LieAlgebra`], individual actions may be marked partial (only the
/// in-basis part is stored); the module-axiom check skips those.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LModule<F> {
    lie: Arc<LieAlgebra<F>>,
    names: Vec<String>,
    table: Vec<SparseVec<F>>,
    partial: Option<Vec<bool>>,
}

impl<F: Field> LModule<F> {
    pub fn new(
        lie: Arc<LieAlgebra<F>>,
        names: Vec<String>,
        action: impl IntoIterator<Item = (usize, usize, SparseVec<F>)>,
    ) -> Result<Self, LieError> {
        let (n, d) = (lie.dim(), names.len());
        let mut table = vec![SparseVec::zero(); n * d];
        let mut seen = vec![false; n * d];
        for (i, j, v) in action {
            if i >= n {
                return Err(LieError::IndexOutOfRange { index: i, dim: n });
            }
            if j >= d {
                return Err(LieError::IndexOutOfRange { index: j, dim: d });
            }
            if seen[i * d + j] {
                return Err(LieError::DuplicateBracket { i, j });
            }
            if let Some(m) = v.max_index() {
                if m >= d {
                    return Err(LieError::IndexOutOfRange { index: m, dim: d });
                }
            }
            seen[i * d + j] = true;
            table[i * d + j] = v;
        }
        Ok(LModule { lie, names, table, partial: None })
    }

    /// `M = L` with `x · y = [x, y]`.
    pub fn adjoint(lie: Arc<LieAlgebra<F>>) -> Self {
        let n = lie.dim();
        let table = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).map(|(i, j)| lie.bracket_basis(i, j).clone()).collect();
        let partial = lie.has_partial().then(|| {
            (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).map(|(i, j)| lie.is_partial(i, j)).collect()
        });
        LModule { names: lie.names().to_vec(), lie, table, partial }
    }

    /// The trivial module of dimension `d`.
    pub fn trivial(lie: Arc<LieAlgebra<F>>, d: usize) -> Self {
        let names = (1..=d).map(|i| format!("v{i}")).collect();
        Self::new(lie, names, std::iter::empty()).expect("no action")
    }

    pub fn with_partial(mut self, pairs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let d = self.dim();
        let mut mask = self.partial.take().unwrap_or_else(|| vec![false; self.lie.dim() * d]);
        for (i, j) in pairs {
            mask[i * d + j] = true;
        }
        self.partial = mask.iter().any(|&b| b).then_some(mask);
        self
    }

    pub fn lie(&self) -> &Arc<LieAlgebra<F>> {
        &self.lie
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn is_partial(&self, i: usize, j: usize) -> bool {
        self.partial.as_ref().is_some_and(|m| m[i * self.dim() + j])
    }

    pub fn has_partial(&self) -> bool {
        self.partial.is_some()
    }

    /// `e_i · v_j`.
    pub fn act_basis(&self, i: usize, j: usize) -> &SparseVec<F> {
        &self.table[i * self.dim() + j]
    }

    /// `e_i · v`.
    pub fn act_on(&self, i: usize, v: &SparseVec<F>) -> SparseVec<F> {
        let mut acc = Accumulator::new();
        for (j, b) in v.iter() {
            acc.add_vec(self.act_basis(i, *j), b);
        }
        acc.finish()
    }

    /// `x · v`.
    pub fn act(&self, x: &SparseVec<F>, v: &SparseVec<F>) -> SparseVec<F> {
        let mut acc = Accumulator::new();
        for (i, a) in x.iter() {
            for (j, b) in v.iter() {
                acc.add_vec(self.act_basis(*i, *j), &a.mul_ref(b));
            }
        }
        acc.finish()
    }

    fn chain_known(&self, i: usize, j: usize) -> bool {
        !self.is_partial(i, j)
    }

    /// Triples `(i, j, k)`, `i < j`, where `[e_i,e_j]·v_k ≠ e_i·(e_j·v_k) − e_j·(e_i·v_k)`.
    pub fn check_module(&self) -> Vec<(usize, usize, usize)> {
        let (n, d) = (self.lie.dim(), self.dim());
        let mut bad = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if self.lie.is_partial(i, j) {
                    continue;
                }
                let br = self.lie.bracket_basis(i, j);
                for k in 0..d {
                    if br.is_zero() && self.act_basis(i, k).is_zero() && self.act_basis(j, k).is_zero() {
                        continue;
                    }
                    let known = self.chain_known(i, k)
                        && self.chain_known(j, k)
                        && br.iter().all(|(l, _)| self.chain_known(*l, k))
                        && self.act_basis(j, k).iter().all(|(m, _)| self.chain_known(i, *m))
                        && self.act_basis(i, k).iter().all(|(m, _)| self.chain_known(j, *m));
                    if !known {
                        continue;
                    }
                    let mut acc = Accumulator::new();
                    for (l, c) in br.iter() {
                        acc.add_vec(self.act_basis(*l, k), c);
                    }
                    for (m, c) in self.act_basis(j, k).iter() {
                        acc.add_vec(self.act_basis(i, *m), &-c.clone());
                    }
                    for (m, c) in self.act_basis(i, k).iter() {
                        acc.add_vec(self.act_basis(j, *m), c);
                    }
                    if !acc.is_empty() {
                        bad.push((i, j, k));
                    }
                }
            }
        }
        bad
    }

    pub fn is_module_valid(&self) -> bool {
        self.check_module().is_empty()
    }

    /// `Z_M(S) = {v : s · v = 0 for all s ∈ S}`.
    pub fn centralizer(&self, s: &Subspace<F>) -> Subspace<F> {
        let d = self.dim();
        let mut b = EchelonBuilder::new(d);
        for sv in s.basis() {
            let mut rows: Vec<Vec<(usize, F)>> = vec![Vec::new(); d];
            for j in 0..d {
                let mut col = Accumulator::new();
                for (i, c) in sv.iter() {
                    col.add_vec(self.act_basis(*i, j), c);
                }
                for (k, x) in col.finish().into_entries() {
                    rows[k].push((j, x));
                }
            }
            for r in rows {
                if !r.is_empty() && !b.is_full() {
                    b.push(&SparseVec::from_pairs(r));
                }
            }
        }
        Subspace::kernel_of(b)
    }

    /// `Z_M(L)`.
    pub fn invariants(&self) -> Subspace<F> {
        self.centralizer(&self.lie.full_space())
    }

    /// `Z_M(L')`.
    pub fn centralizer_of_derived(&self) -> Subspace<F> {
        self.centralizer(&self.lie.derived())
    }

    /// `L · U ⊆ U`; on failure `(i, b)` with `e_i · U_b ∉ U`.
    pub fn submodule_witness(&self, sub: &Subspace<F>) -> Option<(usize, usize)> {
        for (bi, v) in sub.basis().iter().enumerate() {
            for i in 0..self.lie.dim() {
                if !sub.contains_sparse(&self.act_on(i, v)) {
                    return Some((i, bi));
                }
            }
        }
        None
    }

    pub fn same_structure(&self, other: &Self) -> bool {
        self.dim() == other.dim() && self.lie.same_structure(&other.lie) && self.table == other.table
    }

    /// Nonzero action entries `(i, j, e_i · v_j)`.
    pub fn actions(&self) -> impl Iterator<Item = (usize, usize, &SparseVec<F>)> + '_ {
        let (n, d) = (self.lie.dim(), self.dim());
        (0..n)
            .flat_map(move |i| (0..d).map(move |j| (i, j)))
            .map(|(i, j)| (i, j, self.act_basis(i, j)))
            .filter(|(_, _, v)| !v.is_zero())
    }
}
