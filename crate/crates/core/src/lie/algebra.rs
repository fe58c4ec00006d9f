
use super::LieError;
use crate::field::Field;
use crate::linalg::{Accumulator, EchelonBuilder, SparseVec, Subspace};

/// Finite-dimensional Lie algebra given by structure constants on a named
/// basis.
///
/// The full `n × n` bracket table is kept (antisymmetric by construction) for
/// constant-time lookup. A pair may be marked *partial*: its stored value is
/// only the part of the bracket that lands inside the tracked basis, as happens
/// for graded windows. Axiom checks skip anything that touches a partial pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieAlgebra<F> {
    names: Vec<String>,
    table: Vec<SparseVec<F>>,
    partial: Option<Vec<bool>>,
}

impl<F: Field> LieAlgebra<F> {
    /// Builds an algebra from brackets `[e_i, e_j]` with `i < j`.
    pub fn new(
        names: Vec<String>,
        brackets: impl IntoIterator<Item = (usize, usize, SparseVec<F>)>,
    ) -> Result<Self, LieError> {
        let n = names.len();
        let mut table = vec![SparseVec::zero(); n * n];
        let mut seen = vec![false; n * n];
        for (i, j, v) in brackets {
            if i >= n || j >= n {
                return Err(LieError::IndexOutOfRange { index: i.max(j), dim: n });
            }
            if i >= j {
                return Err(LieError::BadPair { i, j });
            }
            if seen[i * n + j] {
                return Err(LieError::DuplicateBracket { i, j });
            }
            if let Some(m) = v.max_index() {
                if m >= n {
                    return Err(LieError::IndexOutOfRange { index: m, dim: n });
                }
            }
            seen[i * n + j] = true;
            table[j * n + i] = v.neg();
            table[i * n + j] = v;
        }
        Ok(LieAlgebra { names, table, partial: None })
    }

    /// Convenience constructor from integer coefficient lists.
    pub fn from_int_brackets(names: &[&str], brackets: &[(usize, usize, &[(usize, i64)])]) -> Self {
        let names = names.iter().map(|s| s.to_string()).collect();
        let br = brackets.iter().map(|(i, j, c)| {
            (*i, *j, SparseVec::from_pairs(c.iter().map(|(k, x)| (*k, F::from_i64(*x)))))
        });
        Self::new(names, br).expect("well-formed catalog brackets")
    }

    pub fn abelian(n: usize) -> Self {
        let names = (1..=n).map(|i| format!("e{i}")).collect();
        Self::new(names, std::iter::empty()).expect("no brackets")
    }

    /// Marks pairs `(i, j)` whose stored bracket is only a projection.
    pub fn with_partial(mut self, pairs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let n = self.dim();
        let mut mask = self.partial.take().unwrap_or_else(|| vec![false; n * n]);
        for (i, j) in pairs {
            mask[i * n + j] = true;
            mask[j * n + i] = true;
        }
        self.partial = mask.iter().any(|&b| b).then_some(mask);
        self
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn is_partial(&self, i: usize, j: usize) -> bool {
        self.partial.as_ref().is_some_and(|m| m[i * self.dim() + j])
    }

    pub fn has_partial(&self) -> bool {
        self.partial.is_some()
    }

    pub fn partial_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if self.is_partial(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// `[e_i, e_j]`.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &SparseVec<F> {
        &self.table[i * self.dim() + j]
    }

    pub fn bracket(&self, x: &SparseVec<F>, y: &SparseVec<F>) -> SparseVec<F> {
        let mut acc = Accumulator::new();
        for (i, a) in x.iter() {
            for (j, b) in y.iter() {
                let ab = a.mul_ref(b);
                acc.add_vec(self.bracket_basis(*i, *j), &ab);
            }
        }
        acc.finish()
    }

    /// `[e_i, y]`.
    pub fn ad_basis(&self, i: usize, y: &SparseVec<F>) -> SparseVec<F> {
        let mut acc = Accumulator::new();
        for (j, b) in y.iter() {
            acc.add_vec(self.bracket_basis(i, *j), b);
        }
        acc.finish()
    }

    /// Every bracket involved in `[[e_i,e_j],e_k]` is exact.
    fn nested_known(&self, i: usize, j: usize, k: usize) -> bool {
        !self.is_partial(i, j) && self.bracket_basis(i, j).iter().all(|(l, _)| !self.is_partial(*l, k))
    }

    /// Triples `i < j < k` where the Jacobi sum is nonzero, skipping triples
    /// that involve partial brackets.
    pub fn check_jacobi(&self) -> Vec<(usize, usize, usize)> {
        let n = self.dim();
        let mut bad = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    if !(self.nested_known(i, j, k) && self.nested_known(j, k, i) && self.nested_known(k, i, j)) {
                        continue;
                    }
                    let mut acc = Accumulator::new();
                    for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
                        for (l, x) in self.bracket_basis(a, b).iter() {
                            acc.add_vec(self.bracket_basis(*l, c), x);
                        }
                    }
                    if !acc.is_empty() {
                        bad.push((i, j, k));
                    }
                }
            }
        }
        bad
    }

    pub fn is_jacobi_valid(&self) -> bool {
        self.check_jacobi().is_empty()
    }

    pub fn full_space(&self) -> Subspace<F> {
        Subspace::full(self.dim())
    }

    /// Elements annihilated by every `ad(e_i)`.
    pub fn center(&self) -> Subspace<F> {
        self.centralizer_of(&self.full_space())
    }

    /// `{z : [s, z] = 0 for s in S}`.
    pub fn centralizer_of(&self, s: &Subspace<F>) -> Subspace<F> {
        let n = self.dim();
        let mut b = EchelonBuilder::new(n);
        for sv in s.basis() {
            // Row for output coordinate k: sum_j z_j [s, e_j]_k.
            let mut rows: Vec<Vec<(usize, F)>> = vec![Vec::new(); n];
            for j in 0..n {
                let mut col = Accumulator::new();
                for (i, c) in sv.iter() {
                    col.add_vec(self.bracket_basis(*i, j), c);
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

    /// `L' = [L, L]`.
    pub fn derived(&self) -> Subspace<F> {
        let n = self.dim();
        let brackets: Vec<&SparseVec<F>> =
            (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).map(|(i, j)| self.bracket_basis(i, j)).collect();
        Subspace::from_sparse(n, brackets).expect("brackets in range")
    }

    /// `[A, B]` for subspaces.
    pub fn bracket_spaces(&self, a: &Subspace<F>, b: &Subspace<F>) -> Subspace<F> {
        let mut out = EchelonBuilder::new(self.dim());
        for x in a.basis() {
            for y in b.basis() {
                if !out.is_full() {
                    out.push(&self.bracket(x, y));
                }
            }
        }
        Subspace::from_builder(out)
    }

    pub fn lower_central_series(&self, limit: usize) -> Vec<Subspace<F>> {
        let mut series = vec![self.full_space()];
        while series.len() <= limit {
            let next = self.bracket_spaces(&self.full_space(), series.last().expect("nonempty"));
            let stop = next == *series.last().expect("nonempty");
            series.push(next);
            if stop {
                break;
            }
        }
        series
    }

    pub fn is_nilpotent(&self) -> bool {
        let lcs = self.lower_central_series(self.dim() + 1);
        lcs.last().is_some_and(|s| s.is_zero())
    }

    pub fn is_perfect(&self) -> bool {
        self.derived().is_full()
    }

    pub fn is_centerless(&self) -> bool {
        self.center().is_zero()
    }

    /// Whether `[L, I] ⊆ I`; on failure returns `(i, b)` with `[e_i, I_b] ∉ I`
    /// where `I_b` is the `b`-th canonical basis vector of `I`.
    pub fn ideal_witness(&self, ideal: &Subspace<F>) -> Option<(usize, usize)> {
        for (bi, v) in ideal.basis().iter().enumerate() {
            for i in 0..self.dim() {
                if !ideal.contains_sparse(&self.ad_basis(i, v)) {
                    return Some((i, bi));
                }
            }
        }
        None
    }

    /// Span of the given elements as a subalgebra check: `[S, S] ⊆ S`.
    pub fn is_subalgebra(&self, s: &Subspace<F>) -> bool {
        s.basis().iter().all(|x| s.basis().iter().all(|y| s.contains_sparse(&self.bracket(x, y))))
    }

    /// Structure constants of a subalgebra in the coordinates of its
    /// canonical basis.
    pub fn subalgebra(&self, s: &Subspace<F>, names: Vec<String>) -> Result<Self, LieError> {
        let d = s.dim();
        let mut br = Vec::new();
        for a in 0..d {
            for b in a + 1..d {
                let v = self.bracket(&s.basis()[a], &s.basis()[b]);
                let coords = s.coordinates(&v).ok_or(LieError::NotASubalgebra { a, b })?;
                br.push((a, b, SparseVec::from_dense(&coords)));
            }
        }
        Self::new(names, br)
    }

    /// Iterator over stored brackets `(i, j, [e_i, e_j])`, `i < j`, nonzero.
    pub fn brackets(&self) -> impl Iterator<Item = (usize, usize, &SparseVec<F>)> + '_ {
        let n = self.dim();
        (0..n)
            .flat_map(move |i| (i + 1..n).map(move |j| (i, j)))
            .map(|(i, j)| (i, j, self.bracket_basis(i, j)))
            .filter(|(_, _, v)| !v.is_zero())
    }

    /// Same basis and structure constants, ignoring names.
    pub fn same_structure(&self, other: &Self) -> bool {
        self.dim() == other.dim() && self.table == other.table
    }

    pub fn element_string(&self, v: &SparseVec<F>) -> String {
        if v.is_zero() {
            return "0".into();
        }
        let terms: Vec<String> = v
            .iter()
            .map(|(i, c)| {
                if c.is_one() {
                    self.names[*i].clone()
                } else if (-c.clone()).is_one() {
                    format!("-{}", self.names[*i])
                } else {
                    format!("({c}){}", self.names[*i])
                }
            })
            .collect();
        terms.join(" + ")
    }
}
