//! Constraint solvers for the map spaces.
//!
//! Every space is the kernel of a sparse linear system on the coefficient
//! vector of the unknown map. Rows are generated per basis tuple, one per
//! output coordinate; redundant rows are harmless. When the algebra carries
//! partial brackets, conditions whose left-hand side evaluates a map on a
//! partial bracket are not imposed.

use std::collections::BTreeMap;

use super::types::{pair_count, pair_slot, BilinearMap, BilinearMapSpace, LinearMap, LinearMapSpace, Symmetry};
use crate::field::Field;
use crate::lie::LModule;
use crate::linalg::{EchelonBuilder, SparseVec, Subspace};

/// Collects rows keyed by output coordinate before pushing them.
struct RowSet<F> {
    rows: BTreeMap<usize, Vec<(usize, F)>>,
}

impl<F: Field> RowSet<F> {
    fn new() -> Self {
        RowSet { rows: BTreeMap::new() }
    }

    fn add(&mut self, k: usize, var: usize, c: F) {
        if !c.is_zero() {
            self.rows.entry(k).or_default().push((var, c));
        }
    }

    fn flush(&mut self, b: &mut EchelonBuilder<F>) {
        for (_, r) in std::mem::take(&mut self.rows) {
            if b.is_full() {
                return;
            }
            let v = SparseVec::from_pairs(r);
            if !v.is_zero() {
                b.push(&v);
            }
        }
    }
}

fn linear_var(dim_l: usize, k: usize, j: usize) -> usize {
    k * dim_l + j
}

fn centroid_rows<F: Field>(m: &LModule<F>, b: &mut EchelonBuilder<F>) {
    let l = m.lie();
    let (n, d) = (l.dim(), m.dim());
    let mut rs = RowSet::new();
    for i in 0..n {
        for j in 0..n {
            if l.is_partial(i, j) {
                continue;
            }
            // γ([e_i, e_j]) − e_i · γ(e_j) = 0
            for (s, c) in l.bracket_basis(i, j).iter() {
                for k in 0..d {
                    rs.add(k, linear_var(n, k, *s), c.clone());
                }
            }
            for mm in 0..d {
                for (k, a) in m.act_basis(i, mm).iter() {
                    rs.add(*k, linear_var(n, mm, j), -a.clone());
                }
            }
            rs.flush(b);
        }
    }
}

/// `Cent(M) = {γ : γ([x,y]) = x·γ(y)}`.
pub fn centroid<F: Field>(m: &LModule<F>) -> LinearMapSpace<F> {
    let (n, d) = (m.lie().dim(), m.dim());
    let mut b = EchelonBuilder::new(n * d);
    centroid_rows(m, &mut b);
    LinearMapSpace::new("centroid", n, d, Subspace::kernel_of(b))
}

/// `Der(L, M) = {d : d([x,y]) = x·d(y) − y·d(x)}`.
pub fn derivations<F: Field>(m: &LModule<F>) -> LinearMapSpace<F> {
    let l = m.lie();
    let (n, d) = (l.dim(), m.dim());
    let mut b = EchelonBuilder::new(n * d);
    let mut rs = RowSet::new();
    for i in 0..n {
        for j in i + 1..n {
            if l.is_partial(i, j) {
                continue;
            }
            for (s, c) in l.bracket_basis(i, j).iter() {
                for k in 0..d {
                    rs.add(k, linear_var(n, k, *s), c.clone());
                }
            }
            for mm in 0..d {
                for (k, a) in m.act_basis(i, mm).iter() {
                    rs.add(*k, linear_var(n, mm, j), -a.clone());
                }
                for (k, a) in m.act_basis(j, mm).iter() {
                    rs.add(*k, linear_var(n, mm, i), a.clone());
                }
            }
            rs.flush(&mut b);
        }
    }
    LinearMapSpace::new("derivations", n, d, Subspace::kernel_of(b))
}

fn commuting_rows<F: Field>(m: &LModule<F>, b: &mut EchelonBuilder<F>) {
    let n = m.lie().dim();
    let d = m.dim();
    let mut rs = RowSet::new();
    for i in 0..n {
        for j in i..n {
            // e_i · f(e_j) + e_j · f(e_i) = 0
            for mm in 0..d {
                for (k, a) in m.act_basis(i, mm).iter() {
                    rs.add(*k, linear_var(n, mm, j), a.clone());
                }
                for (k, a) in m.act_basis(j, mm).iter() {
                    rs.add(*k, linear_var(n, mm, i), a.clone());
                }
            }
            rs.flush(b);
        }
    }
}

/// Commuting maps, through the linearised condition `x·f(y) + y·f(x) = 0`.
pub fn commuting_maps<F: Field>(m: &LModule<F>) -> LinearMapSpace<F> {
    let (n, d) = (m.lie().dim(), m.dim());
    let mut b = EchelonBuilder::new(n * d);
    commuting_rows(m, &mut b);
    LinearMapSpace::new("commuting", n, d, Subspace::kernel_of(b))
}

/// All maps `e_j ↦ z` for `z` in a basis of `target`, spanning `Hom(L, target)`.
fn maps_into<F: Field>(name: &str, dim_l: usize, dim_m: usize, target: &Subspace<F>) -> LinearMapSpace<F> {
    let mut maps = Vec::new();
    for j in 0..dim_l {
        for z in target.basis() {
            let mut f = LinearMap::zero(dim_l, dim_m);
            f.images[j] = z.clone();
            maps.push(f);
        }
    }
    LinearMapSpace::from_maps(name, dim_l, dim_m, &maps)
}

/// Maps with range in `Z_M(L)`.
pub fn central_maps<F: Field>(m: &LModule<F>) -> LinearMapSpace<F> {
    maps_into("central", m.lie().dim(), m.dim(), &m.invariants())
}

/// Commuting maps `f` with `f(L') = 0` and `f(L) ⊆ Z_M(L')`.
pub fn special_commuting_maps<F: Field>(m: &LModule<F>) -> LinearMapSpace<F> {
    let l = m.lie();
    let (n, d) = (l.dim(), m.dim());
    let mut b = EchelonBuilder::new(n * d);
    commuting_rows(m, &mut b);
    range_rows(&m.centralizer_of_derived(), n, &mut b);
    for w in l.derived().basis() {
        // f(w) = Σ_j w_j f(e_j) = 0, one row per output coordinate.
        for k in 0..d {
            let row = SparseVec::from_pairs(w.iter().map(|(j, c)| (linear_var(n, k, *j), c.clone())));
            b.push(&row);
        }
    }
    LinearMapSpace::new("special_commuting", n, d, Subspace::kernel_of(b))
}

/// Rows forcing every `f(e_j)` into `target`: annihilator functionals applied
/// column by column.
fn range_rows<F: Field>(target: &Subspace<F>, n: usize, b: &mut EchelonBuilder<F>) {
    for alpha in target.annihilator().basis() {
        for j in 0..n {
            let row = SparseVec::from_pairs(alpha.iter().map(|(k, c)| (linear_var(n, *k, j), c.clone())));
            b.push(&row);
        }
    }
}

fn bilinear_var<F: Field>(n: usize, d: usize, a: usize, b: usize, k: usize, sym: Symmetry) -> Option<(usize, F)> {
    pair_slot::<F>(n, a, b, sym).map(|(p, s)| (p * d + k, s))
}

fn biderivation_rows<F: Field>(m: &LModule<F>, sym: Symmetry, b: &mut EchelonBuilder<F>) {
    let l = m.lie();
    let (n, d) = (l.dim(), m.dim());
    let mut rs = RowSet::new();
    for i in 0..n {
        for j in i + 1..n {
            if l.is_partial(i, j) {
                continue;
            }
            for t in 0..n {
                // δ([e_i,e_j], e_t) − e_i·δ(e_j,e_t) + e_j·δ(e_i,e_t) = 0
                for (s, c) in l.bracket_basis(i, j).iter() {
                    for k in 0..d {
                        if let Some((v, sg)) = bilinear_var::<F>(n, d, *s, t, k, sym) {
                            rs.add(k, v, sg * c.clone());
                        }
                    }
                }
                for mm in 0..d {
                    if let Some((v, sg)) = bilinear_var::<F>(n, d, j, t, mm, sym) {
                        for (k, a) in m.act_basis(i, mm).iter() {
                            rs.add(*k, v, -(sg.clone() * a.clone()));
                        }
                    }
                    if let Some((v, sg)) = bilinear_var::<F>(n, d, i, t, mm, sym) {
                        for (k, a) in m.act_basis(j, mm).iter() {
                            rs.add(*k, v, sg.clone() * a.clone());
                        }
                    }
                }
                rs.flush(b);
            }
        }
    }
}

/// Skew-symmetric biderivations `L × L → M`.
pub fn skew_biderivations<F: Field>(m: &LModule<F>) -> BilinearMapSpace<F> {
    bilinear_space(m, Symmetry::Skew, "skew_biderivations")
}

/// Symmetric biderivations `L × L → M`.
pub fn symmetric_biderivations<F: Field>(m: &LModule<F>) -> BilinearMapSpace<F> {
    bilinear_space(m, Symmetry::Symmetric, "symmetric_biderivations")
}

fn bilinear_space<F: Field>(m: &LModule<F>, sym: Symmetry, name: &str) -> BilinearMapSpace<F> {
    let (n, d) = (m.lie().dim(), m.dim());
    let mut b = EchelonBuilder::new(pair_count(n, sym) * d);
    biderivation_rows(m, sym, &mut b);
    BilinearMapSpace::new(name, n, d, sym, Subspace::kernel_of(b))
}

/// Rows forcing every stored pair value into `target`.
fn bilinear_range_rows<F: Field>(target: &Subspace<F>, n: usize, d: usize, sym: Symmetry, b: &mut EchelonBuilder<F>) {
    for alpha in target.annihilator().basis() {
        for p in 0..pair_count(n, sym) {
            b.push(&SparseVec::from_pairs(alpha.iter().map(|(k, c)| (p * d + k, c.clone()))));
        }
    }
}

/// Rows forcing `δ(x, y) = 0` for `x` in `a`, `y` in `bsp`.
fn bilinear_vanish_rows<F: Field>(
    a: &Subspace<F>,
    bsp: &Subspace<F>,
    n: usize,
    d: usize,
    sym: Symmetry,
    b: &mut EchelonBuilder<F>,
) {
    for x in a.basis() {
        for y in bsp.basis() {
            let mut rs = RowSet::new();
            for (i, c) in x.iter() {
                for (j, e) in y.iter() {
                    for k in 0..d {
                        if let Some((v, sg)) = bilinear_var::<F>(n, d, *i, *j, k, sym) {
                            rs.add(k, v, sg * c.mul_ref(e));
                        }
                    }
                }
            }
            rs.flush(b);
        }
    }
}

/// Trivial biderivations: skew maps into `Z_M(L)` vanishing on `L × L'`,
/// built directly from skew forms on `L / L'` tensored with `Z_M(L)`.
pub fn trivial_biderivations<F: Field>(m: &LModule<F>) -> BilinearMapSpace<F> {
    let l = m.lie();
    let (n, d) = (l.dim(), m.dim());
    let quo = l.derived().quotient_with_section();
    let proj: Vec<SparseVec<F>> = (0..n).map(|i| quo.project(&SparseVec::unit(i))).collect();
    let z = m.invariants();
    let r = quo.dim();
    let mut maps = Vec::new();
    for a in 0..r {
        for bb in a + 1..r {
            for zv in z.basis() {
                let dm = BilinearMap::from_fn(n, d, Symmetry::Skew, |i, j| {
                    let w = proj[i].get(a) * proj[j].get(bb) - proj[i].get(bb) * proj[j].get(a);
                    zv.scale(&w)
                });
                maps.push(dm);
            }
        }
    }
    BilinearMapSpace::from_maps("trivial_biderivations", n, d, Symmetry::Skew, &maps)
}

/// The same space cut out by its defining linear conditions.
pub fn trivial_biderivations_by_constraints<F: Field>(m: &LModule<F>) -> BilinearMapSpace<F> {
    let l = m.lie();
    let (n, d) = (l.dim(), m.dim());
    let sym = Symmetry::Skew;
    let mut b = EchelonBuilder::new(pair_count(n, sym) * d);
    bilinear_range_rows(&m.invariants(), n, d, sym, &mut b);
    bilinear_vanish_rows(&l.full_space(), &l.derived(), n, d, sym, &mut b);
    BilinearMapSpace::new("trivial_biderivations", n, d, sym, Subspace::kernel_of(b))
}

/// Skew biderivations vanishing on `L' × L'` with range in `Z_M(L')`.
pub fn special_biderivations<F: Field>(m: &LModule<F>) -> BilinearMapSpace<F> {
    let l = m.lie();
    let (n, d) = (l.dim(), m.dim());
    let sym = Symmetry::Skew;
    let mut b = EchelonBuilder::new(pair_count(n, sym) * d);
    let derived = l.derived();
    bilinear_range_rows(&m.centralizer(&derived), n, d, sym, &mut b);
    bilinear_vanish_rows(&derived, &derived, n, d, sym, &mut b);
    biderivation_rows(m, sym, &mut b);
    BilinearMapSpace::new("special_biderivations", n, d, sym, Subspace::kernel_of(b))
}

/// Every linear map `L → M`.
pub fn all_linear_maps<F: Field>(dim_l: usize, dim_m: usize) -> LinearMapSpace<F> {
    LinearMapSpace::new("all", dim_l, dim_m, Subspace::full(dim_l * dim_m))
}

/// Every bilinear map of the given symmetry.
pub fn all_bilinear_maps<F: Field>(dim_l: usize, dim_m: usize, sym: Symmetry) -> BilinearMapSpace<F> {
    BilinearMapSpace::new("all", dim_l, dim_m, sym, Subspace::full(pair_count(dim_l, sym) * dim_m))
}
