//! Direct evaluation of the defining identities on basis tuples.
//!
//! These never go through the solvers, so they double as an independent
//! route for membership.

use super::types::{BilinearMap, LinearMap, Symmetry};
use crate::field::Field;
use crate::lie::LModule;
use crate::linalg::{Accumulator, SparseVec, Subspace};

fn sum3<F: Field>(terms: [(&SparseVec<F>, i64); 3]) -> SparseVec<F> {
    let mut acc = Accumulator::new();
    for (v, s) in terms {
        acc.add_vec(v, &F::from_i64(s));
    }
    acc.finish()
}

/// `f([e_i, e_j])`.
fn bracket_then<F: Field>(m: &LModule<F>, f: &LinearMap<F>, i: usize, j: usize) -> SparseVec<F> {
    f.apply(m.lie().bracket_basis(i, j))
}

/// `γ([e_i,e_j]) = e_i·γ(e_j)` for all `i, j`.
pub fn is_centroid<F: Field>(m: &LModule<F>, g: &LinearMap<F>) -> bool {
    let n = m.lie().dim();
    (0..n).all(|i| {
        (0..n).all(|j| m.lie().is_partial(i, j) || bracket_then(m, g, i, j) == m.act_on(i, g.apply_basis(j)))
    })
}

/// `d([e_i,e_j]) = e_i·d(e_j) − e_j·d(e_i)`.
pub fn is_derivation<F: Field>(m: &LModule<F>, d: &LinearMap<F>) -> bool {
    let n = m.lie().dim();
    (0..n).all(|i| {
        (i + 1..n).all(|j| {
            m.lie().is_partial(i, j)
                || sum3([
                    (&bracket_then(m, d, i, j), 1),
                    (&m.act_on(i, d.apply_basis(j)), -1),
                    (&m.act_on(j, d.apply_basis(i)), 1),
                ])
                .is_zero()
        })
    })
}

/// Linearised commuting condition on basis pairs.
pub fn is_commuting<F: Field>(m: &LModule<F>, f: &LinearMap<F>) -> bool {
    let n = m.lie().dim();
    (0..n).all(|i| (i..n).all(|j| m.act_on(i, f.apply_basis(j)).add(&m.act_on(j, f.apply_basis(i))).is_zero()))
}

/// `x · f(x) = 0` evaluated at the given vectors, without linearisation.
pub fn commutes_at<F: Field>(m: &LModule<F>, f: &LinearMap<F>, x: &SparseVec<F>) -> bool {
    m.act(x, &f.apply(x)).is_zero()
}

/// Whether `δ([e_i,e_j], e_t) = e_i·δ(e_j,e_t) − e_j·δ(e_i,e_t)` for all basis
/// triples, and the same in the second slot.
pub fn is_biderivation<F: Field>(m: &LModule<F>, d: &BilinearMap<F>) -> bool {
    first_slot_witness(m, d).is_none() && second_slot_witness(m, d).is_none()
}

pub fn is_skew_biderivation<F: Field>(m: &LModule<F>, d: &BilinearMap<F>) -> bool {
    d.symmetry == Symmetry::Skew && is_biderivation(m, d)
}

pub fn is_symmetric_biderivation<F: Field>(m: &LModule<F>, d: &BilinearMap<F>) -> bool {
    d.symmetry == Symmetry::Symmetric && is_biderivation(m, d)
}

/// First basis triple breaking the first-slot derivation rule.
pub fn first_slot_witness<F: Field>(m: &LModule<F>, d: &BilinearMap<F>) -> Option<(usize, usize, usize)> {
    let l = m.lie();
    let n = l.dim();
    for i in 0..n {
        for j in i + 1..n {
            if l.is_partial(i, j) {
                continue;
            }
            for t in 0..n {
                let lhs = d.eval(l.bracket_basis(i, j), &SparseVec::unit(t));
                let r = sum3([
                    (&lhs, 1),
                    (&m.act_on(i, &d.eval_basis(j, t)), -1),
                    (&m.act_on(j, &d.eval_basis(i, t)), 1),
                ]);
                if !r.is_zero() {
                    return Some((i, j, t));
                }
            }
        }
    }
    None
}

/// First basis triple `(t, i, j)` breaking `δ(e_t,[e_i,e_j]) = e_i·δ(e_t,e_j) − e_j·δ(e_t,e_i)`.
pub fn second_slot_witness<F: Field>(m: &LModule<F>, d: &BilinearMap<F>) -> Option<(usize, usize, usize)> {
    let l = m.lie();
    let n = l.dim();
    for i in 0..n {
        for j in i + 1..n {
            if l.is_partial(i, j) {
                continue;
            }
            for t in 0..n {
                let lhs = d.eval(&SparseVec::unit(t), l.bracket_basis(i, j));
                let r = sum3([
                    (&lhs, 1),
                    (&m.act_on(i, &d.eval_basis(t, j)), -1),
                    (&m.act_on(j, &d.eval_basis(t, i)), 1),
                ]);
                if !r.is_zero() {
                    return Some((t, i, j));
                }
            }
        }
    }
    None
}

/// `δ(u,[x,y]) − u·δ(x,y) ∈ Z_M(L')` for all basis `u, x, y`.
pub fn verify_lemma_bl<F: Field>(m: &LModule<F>, d: &BilinearMap<F>) -> bool {
    let z = m.centralizer_of_derived();
    lemma_bl_witness(m, d, &z).is_none()
}

pub fn lemma_bl_witness<F: Field>(
    m: &LModule<F>,
    d: &BilinearMap<F>,
    z: &Subspace<F>,
) -> Option<(usize, usize, usize)> {
    let l = m.lie();
    let n = l.dim();
    for u in 0..n {
        for x in 0..n {
            for y in x + 1..n {
                if l.is_partial(x, y) {
                    continue;
                }
                let a = d.eval(&SparseVec::unit(u), l.bracket_basis(x, y));
                let b = m.act_on(u, &d.eval_basis(x, y));
                if !z.contains_sparse(&a.sub(&b)) {
                    return Some((u, x, y));
                }
            }
        }
    }
    None
}

/// `[x,y]·δ(z,w) = [w,z]·δ(x,y)` on all basis quadruples.
pub fn verify_identity_ena<F: Field>(m: &LModule<F>, d: &BilinearMap<F>) -> bool {
    let l = m.lie();
    let n = l.dim();
    let values: Vec<Vec<SparseVec<F>>> = (0..n).map(|a| (0..n).map(|b| d.eval_basis(a, b)).collect()).collect();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                for w in 0..n {
                    if l.is_partial(x, y) || l.is_partial(w, z) {
                        continue;
                    }
                    let lhs = m.act(l.bracket_basis(x, y), &values[z][w]);
                    let rhs = m.act(l.bracket_basis(w, z), &values[x][y]);
                    if lhs != rhs {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// `[x,z]·δ(y,w) + [y,w]·δ(x,z) = [x,w]·δ(y,z) + [y,z]·δ(x,w)` on all basis
/// quadruples.
pub fn verify_identity_q<F: Field>(m: &LModule<F>, d: &BilinearMap<F>) -> bool {
    let l = m.lie();
    let n = l.dim();
    let values: Vec<Vec<SparseVec<F>>> = (0..n).map(|a| (0..n).map(|b| d.eval_basis(a, b)).collect()).collect();
    let act = |a: usize, b: usize, v: &SparseVec<F>| m.act(l.bracket_basis(a, b), v);
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                for w in 0..n {
                    if [(x, z), (y, w), (x, w), (y, z)].iter().any(|&(a, b)| l.is_partial(a, b)) {
                        continue;
                    }
                    let lhs = act(x, z, &values[y][w]).add(&act(y, w, &values[x][z]));
                    let rhs = act(x, w, &values[y][z]).add(&act(y, z, &values[x][w]));
                    if lhs != rhs {
                        return false;
                    }
                }
            }
        }
    }
    true
}
