//! The sl2-modules `M(a, b)` on `v_{-N..N}` with `d_i · v_j = (j + a + b i) v_{i+j}`.

use std::sync::Arc;

use serde_json::{json, Value};

use super::{convert, is_integer_in_window, restricted_biderivations, SolveStats, WindowError};
use crate::field::{format_rational, Field, Rational};
use crate::lie::{LModule, LieAlgebra};
use crate::linalg::{EchelonBuilder, SparseVec, Subspace};
use crate::maps::{BilinearMap, BilinearMapSpace, Symmetry};

fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// sl2 on `d_{-1}, d_0, d_1` (indices 0, 1, 2) with `[d_i, d_j] = (j − i) d_{i+j}`.
pub fn sl2_graded<F: Field>() -> LieAlgebra<F> {
    let names = ["d-1", "d0", "d1"].iter().map(|s| s.to_string()).collect();
    let mut br = Vec::new();
    for i in -1i64..=1 {
        for j in i + 1..=1 {
            if (i + j).abs() <= 1 {
                br.push(((i + 1) as usize, (j + 1) as usize, SparseVec::single((i + j + 1) as usize, F::from_i64(j - i))));
            }
        }
    }
    LieAlgebra::new(names, br).expect("three-dimensional table")
}

#[derive(Debug, Clone)]
pub struct ModuleWindow<F> {
    pub a: Rational,
    pub b: Rational,
    pub n: usize,
    pub module: LModule<F>,
}

/// `M(a, b)` truncated to `v_{-N..N}`; actions leaving the window are partial.
pub fn window_module<F: Field>(a: Rational, b: Rational, n: usize) -> Result<ModuleWindow<F>, WindowError> {
    if n < 3 {
        return Err(WindowError::WindowTooSmall { n, min: 3 });
    }
    let lie = Arc::new(sl2_graded::<F>());
    let ni = n as i64;
    let names = (-ni..=ni).map(|j| format!("v{j}")).collect();
    let mut act = Vec::new();
    let mut partial = Vec::new();
    for i in -1i64..=1 {
        for j in -ni..=ni {
            let (x, v) = ((i + 1) as usize, (j + ni) as usize);
            if (i + j).abs() > ni {
                partial.push((x, v));
                continue;
            }
            let c = q(j) + &a + &b * q(i);
            act.push((x, v, SparseVec::single((i + j + ni) as usize, convert::<F>(&c)?)));
        }
    }
    let module = LModule::new(lie, names, act)?.with_partial(partial);
    Ok(ModuleWindow { a, b, n, module })
}

impl<F: Field> ModuleWindow<F> {
    pub fn v(&self, j: i64) -> Option<usize> {
        (j.abs() <= self.n as i64).then(|| (j + self.n as i64) as usize)
    }

    /// `v_j` with `|j| < N`: every action on them stays in the window.
    pub fn interior(&self) -> Vec<usize> {
        (1..2 * self.n).collect()
    }

    /// `Z_M(sl2)` among interior vectors.
    pub fn invariants(&self) -> Subspace<F> {
        let interior = self.interior();
        let mut b = EchelonBuilder::new(interior.len());
        for x in 0..3 {
            let mut rows: std::collections::BTreeMap<usize, Vec<(usize, F)>> = Default::default();
            for (t, &v) in interior.iter().enumerate() {
                for (o, c) in self.module.act_basis(x, v).iter() {
                    rows.entry(*o).or_default().push((t, c.clone()));
                }
            }
            for r in rows.into_values() {
                b.push(&SparseVec::from_pairs(r));
            }
        }
        let vs: Vec<SparseVec<F>> = b.nullspace().iter().map(|v| v.remap(|t| Some(interior[t]))).collect();
        Subspace::from_sparse(self.module.dim(), vs.iter()).expect("in range")
    }

    /// The expected invariants: `span{v_{-a}}` when `a` is an integer with
    /// `v_{-a}` interior and `b = 0`, else zero.
    pub fn expected_invariants(&self) -> Subspace<F> {
        let dim = self.module.dim();
        match is_integer_in_window(&self.a, self.n - 1) {
            Some(a) if self.b == q(0) => {
                Subspace::from_sparse(dim, [SparseVec::unit(self.v(-a).unwrap())].iter()).expect("in range")
            }
            _ => Subspace::zero(dim),
        }
    }

    /// Symmetric biderivations `sl2 x sl2 → M` with values among interior vectors.
    pub fn symmetric_biderivations(&self) -> (BilinearMapSpace<F>, SolveStats) {
        let interior = self.interior();
        restricted_biderivations(&self.module, &[0, 1, 2], Symmetry::Symmetric, |_, _| interior.clone())
    }

    /// `d_m, d_n ↦ coeff(m + n + k) v_{m+n+k}`; `None` when a value would
    /// leave the interior.
    fn graded_map(&self, k: i64, coeff: impl Fn(i64) -> Rational) -> Result<Option<BilinearMap<F>>, WindowError> {
        let mut values = Vec::new();
        for i in 0..3i64 {
            for j in i..3 {
                let s = i - 1 + j - 1 + k;
                if s.abs() >= self.n as i64 {
                    return Ok(None);
                }
                values.push(((i as usize, j as usize), self.v(s).unwrap(), convert::<F>(&coeff(s))?));
            }
        }
        let mut d = BilinearMap::zero(3, self.module.dim(), Symmetry::Symmetric);
        for ((i, j), t, c) in values {
            d.values[crate::maps::pair_index(3, i, j, Symmetry::Symmetric)] = SparseVec::single(t, c);
        }
        Ok(Some(d))
    }

    /// `δ_k(d_m, d_n) = v_{m+n+k}`.
    pub fn delta_k(&self, k: i64) -> Result<Option<BilinearMap<F>>, WindowError> {
        self.graded_map(k, |_| q(1))
    }

    /// `δ'_k(d_m, d_n) = (m + n + k + a) v_{m+n+k}`.
    pub fn delta_prime_k(&self, k: i64) -> Result<Option<BilinearMap<F>>, WindowError> {
        self.graded_map(k, |s| q(s) + &self.a)
    }

    pub fn summary(&self) -> Value {
        json!({
            "a": format_rational(&self.a),
            "b": format_rational(&self.b),
            "window": self.n,
            "dim": self.module.dim(),
            "module_violations": self.module.check_module().len(),
        })
    }
}
