//! Named algebras with fixed bases.
//!
//! | name | basis | nonzero brackets |
//! |---|---|---|
//! | `sl2` | e, f, h | [e,f]=h, [h,e]=2e, [h,f]=−2f |
//! | `sl2d` | d-1, d0, d1 | [d_i,d_j]=(j−i)d_{i+j} |
//! | `heisenberg` | x, y, z | [x,y]=z |
//! | `abelian<n>` | e1..en | none |
//! | `nonabelian2` | e1, e2 | [e1,e2]=e2 |
//! | `example_3_4` | a, e12, e13, e14, e24, e34 | upper triangular 4×4 matrices, `a = E11+E22` |
//! | `sl2_v2_d` | e, f, h, v1, v2, D | sl2 ⋉ C² extended by the grading derivation D |
//! | `current_sl2_<n>` | x⊗t^k, k = 1..2n | [x⊗t^i, y⊗t^j] = [x,y]⊗t^{i+j}, zero past 2n |
//! | `free_lie_quotient` | see [`crate::free_lie`] | truncated F/(I+J) |

use std::sync::Arc;

use super::LieAlgebra;
use crate::field::Field;
use crate::linalg::{Accumulator, SparseVec};

pub const CATALOG_VERSION: &str = "1";

pub fn sl2<F: Field>() -> LieAlgebra<F> {
    LieAlgebra::from_int_brackets(&["e", "f", "h"], &[(0, 1, &[(2, 1)]), (0, 2, &[(0, -2)]), (1, 2, &[(1, 2)])])
}

/// sl2 in the basis `d_{-1}, d_0, d_1` with `[d_i, d_j] = (j − i) d_{i+j}`.
pub fn sl2d<F: Field>() -> LieAlgebra<F> {
    LieAlgebra::from_int_brackets(
        &["d-1", "d0", "d1"],
        &[(0, 1, &[(0, 1)]), (0, 2, &[(1, 2)]), (1, 2, &[(2, 1)])],
    )
}

pub fn heisenberg<F: Field>() -> LieAlgebra<F> {
    LieAlgebra::from_int_brackets(&["x", "y", "z"], &[(0, 1, &[(2, 1)])])
}

pub fn abelian<F: Field>(n: usize) -> LieAlgebra<F> {
    LieAlgebra::abelian(n)
}

pub fn nonabelian2<F: Field>() -> LieAlgebra<F> {
    LieAlgebra::from_int_brackets(&["e1", "e2"], &[(0, 1, &[(1, 1)])])
}

/// Matrices
/// ```text
/// x11 x12 x13 x14
///  0  x11  0  x24
///  0   0   0  x34
///  0   0   0   0
/// ```
/// in the basis `a = E11+E22, E12, E13, E14, E24, E34`.
pub fn example_3_4<F: Field>() -> LieAlgebra<F> {
    LieAlgebra::from_int_brackets(
        &["a", "e12", "e13", "e14", "e24", "e34"],
        &[
            (0, 2, &[(2, 1)]),
            (0, 3, &[(3, 1)]),
            (0, 4, &[(4, 1)]),
            (1, 4, &[(3, 1)]),
            (2, 5, &[(3, 1)]),
        ],
    )
}

/// `(sl2 ⋉ C²) ⋊ C D` where `D` scales `C²` and kills sl2. Centerless with
/// perfect derived algebra `sl2 ⋉ C²`.
pub fn sl2_v2_d<F: Field>() -> LieAlgebra<F> {
    LieAlgebra::from_int_brackets(
        &["e", "f", "h", "v1", "v2", "D"],
        &[
            (0, 1, &[(2, 1)]),
            (0, 2, &[(0, -2)]),
            (1, 2, &[(1, 2)]),
            (0, 4, &[(3, 1)]),
            (1, 3, &[(4, 1)]),
            (2, 3, &[(3, 1)]),
            (2, 4, &[(4, -1)]),
            (3, 5, &[(3, -1)]),
            (4, 5, &[(4, -1)]),
        ],
    )
}

/// Index of `e_a ⊗ t^k` in [`current_algebra`].
pub fn current_index(dim_g: usize, a: usize, k: usize) -> usize {
    (k - 1) * dim_g + a
}

/// `g ⊗ (t F[t] / t^{2n+1} F[t])`.
pub fn current_algebra<F: Field>(g: &LieAlgebra<F>, n: usize) -> LieAlgebra<F> {
    assert!(n >= 1, "current algebra needs n >= 1");
    let d = g.dim();
    let top = 2 * n;
    let mut names = Vec::with_capacity(d * top);
    for k in 1..=top {
        for a in 0..d {
            names.push(format!("{}⊗t^{k}", g.name(a)));
        }
    }
    let mut br = Vec::new();
    for i in 1..=top {
        for j in i..=top {
            if i + j > top {
                continue;
            }
            for a in 0..d {
                for b in 0..d {
                    let (p, q) = (current_index(d, a, i), current_index(d, b, j));
                    if p >= q {
                        continue;
                    }
                    let v = g.bracket_basis(a, b).remap(|c| Some(current_index(d, c, i + j)));
                    if !v.is_zero() {
                        br.push((p, q, v));
                    }
                }
            }
        }
    }
    LieAlgebra::new(names, br).expect("current algebra brackets well-formed")
}

/// The Example g family `x⊗t^k ↦ x ⊗ Σ_{j=k}^{2n} a_{j−k+1} t^j` for coefficient
/// vector `a` of length `2n`, as a linear map in the current algebra basis.
/// Returns the images of the basis vectors.
pub fn current_shift_map<F: Field>(dim_g: usize, n: usize, a: &[F]) -> Vec<SparseVec<F>> {
    let top = 2 * n;
    assert_eq!(a.len(), top);
    let mut out = Vec::with_capacity(dim_g * top);
    for k in 1..=top {
        for x in 0..dim_g {
            let mut acc = Accumulator::new();
            for j in k..=top {
                acc.add(current_index(dim_g, x, j), &a[j - k]);
            }
            out.push(acc.finish());
        }
    }
    out
}

/// Resolves a catalog name; `abelian<n>` and `current_sl2_<n>` take a size.
pub fn by_name<F: Field>(name: &str) -> Option<LieAlgebra<F>> {
    match name {
        "sl2" => Some(sl2()),
        "sl2d" => Some(sl2d()),
        "heisenberg" => Some(heisenberg()),
        "nonabelian2" => Some(nonabelian2()),
        "example_3_4" => Some(example_3_4()),
        "sl2_v2_d" => Some(sl2_v2_d()),
        "free_lie_quotient" => Some(crate::free_lie::truncated_quotient(5)),
        _ => {
            if let Some(n) = name.strip_prefix("abelian").and_then(|s| s.parse().ok()) {
                return Some(abelian(n));
            }
            if let Some(n) = name.strip_prefix("current_sl2_").and_then(|s| s.parse().ok()) {
                if n >= 1 {
                    return Some(current_algebra(&sl2(), n));
                }
            }
            None
        }
    }
}

pub fn names() -> Vec<&'static str> {
    vec![
        "sl2",
        "sl2d",
        "heisenberg",
        "abelian<n>",
        "nonabelian2",
        "example_3_4",
        "sl2_v2_d",
        "current_sl2_<n>",
        "free_lie_quotient",
    ]
}

pub fn shared<F: Field>(l: LieAlgebra<F>) -> Arc<LieAlgebra<F>> {
    Arc::new(l)
}
