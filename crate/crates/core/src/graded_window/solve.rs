//! Solvers restricted to a domain of basis indices.
//!
//! The unknown map is only defined on the domain, with values in an allowed
//! set of target indices per argument. A condition is imposed only when
//! every term of it is defined: the bracket on the left stays in the domain
//! and no action on the right hits a truncated pair. With the inner radius at
//! most `N/3` (or the degree ansatz) no condition is ever dropped for the
//! second reason; the count is reported anyway.

use std::collections::{BTreeMap, HashMap};

use serde_json::{json, Value};

use super::WindowInstance;
use crate::field::Field;
use crate::lie::LModule;
use crate::linalg::{EchelonBuilder, SparseVec, Subspace};
use crate::maps::{pair_index, pair_slot, BilinearMap, BilinearMapSpace, LinearMap, LinearMapSpace, Symmetry};
use crate::towers::{kernel_and_image, skew_with_range, BiderivationAudit};

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SolveStats {
    pub unknowns: usize,
    pub conditions: usize,
    /// Conditions skipped because a term would leave the window.
    pub skipped: usize,
}

impl SolveStats {
    pub fn to_json(&self) -> Value {
        json!({"unknowns": self.unknowns, "conditions": self.conditions, "skipped": self.skipped})
    }
}

struct Vars {
    index: HashMap<(usize, usize), usize>,
    ambient: Vec<usize>,
}

impl Vars {
    fn new() -> Self {
        Vars { index: HashMap::new(), ambient: Vec::new() }
    }

    fn add(&mut self, key: (usize, usize), ambient: usize) {
        let next = self.ambient.len();
        self.index.entry(key).or_insert_with(|| {
            self.ambient.push(ambient);
            next
        });
    }

    fn get(&self, key: (usize, usize)) -> usize {
        self.index[&key]
    }

    fn embed<F: Field>(&self, kernel: Vec<SparseVec<F>>, ambient: usize) -> Subspace<F> {
        let vs: Vec<SparseVec<F>> = kernel.iter().map(|v| v.remap(|i| Some(self.ambient[i]))).collect();
        Subspace::from_sparse(ambient, vs.iter()).expect("embedded in range")
    }
}

/// Row under construction, keyed by output coordinate.
struct Rows<F> {
    rows: BTreeMap<usize, Vec<(usize, F)>>,
}

impl<F: Field> Rows<F> {
    fn new() -> Self {
        Rows { rows: BTreeMap::new() }
    }

    fn add(&mut self, k: usize, var: usize, c: F) {
        if !c.is_zero() {
            self.rows.entry(k).or_default().push((var, c));
        }
    }

    fn flush(&mut self, b: &mut EchelonBuilder<F>) {
        for (_, r) in std::mem::take(&mut self.rows) {
            let v = SparseVec::from_pairs(r);
            if !v.is_zero() {
                b.push(&v);
            }
        }
    }
}

fn bracket_in_domain<F: Field>(m: &LModule<F>, in_domain: &[bool], i: usize, j: usize) -> bool {
    let l = m.lie();
    !l.is_partial(i, j) && l.bracket_basis(i, j).iter().all(|(s, _)| in_domain[*s])
}

fn mask(n: usize, domain: &[usize]) -> Vec<bool> {
    let mut v = vec![false; n];
    for &i in domain {
        v[i] = true;
    }
    v
}

/// Linear maps `γ` defined on `domain`, with `γ(e_j)` in `span(allowed(j))`,
/// satisfying `γ([x, y]) = x · γ(y)` wherever every term is defined.
pub fn restricted_centroid<F: Field>(
    m: &LModule<F>,
    domain: &[usize],
    allowed: impl Fn(usize) -> Vec<usize>,
) -> (LinearMapSpace<F>, SolveStats) {
    let (n, d) = (m.lie().dim(), m.dim());
    let in_domain = mask(n, domain);
    let targets: HashMap<usize, Vec<usize>> = domain.iter().map(|&j| (j, allowed(j))).collect();
    let mut vars = Vars::new();
    for &j in domain {
        for &k in &targets[&j] {
            vars.add((k, j), k * n + j);
        }
    }
    let mut stats = SolveStats { unknowns: vars.ambient.len(), ..Default::default() };
    let mut b = EchelonBuilder::new(vars.ambient.len());
    let mut rows = Rows::new();
    for &i in domain {
        'pair: for &j in domain {
            if !bracket_in_domain(m, &in_domain, i, j) {
                continue;
            }
            if targets[&j].iter().any(|&k| m.is_partial(i, k)) {
                stats.skipped += 1;
                continue 'pair;
            }
            for (s, c) in m.lie().bracket_basis(i, j).iter() {
                for &k in &targets[s] {
                    rows.add(k, vars.get((k, *s)), c.clone());
                }
            }
            for &k in &targets[&j] {
                for (t, a) in m.act_basis(i, k).iter() {
                    rows.add(*t, vars.get((k, j)), -a.clone());
                }
            }
            stats.conditions += 1;
            rows.flush(&mut b);
        }
    }
    let space = vars.embed(b.nullspace(), n * d);
    (LinearMapSpace::new("window_centroid", n, d, space), stats)
}

/// Bilinear maps defined on `domain x domain`, with the value on the pair
/// `(i, j)`, `i <= j`, in `span(allowed(i, j))`, satisfying
/// `δ([x,y], z) = x·δ(y,z) − y·δ(x,z)` wherever every term is defined. For
/// skew or symmetric maps this identity in the first slot gives the second.
pub fn restricted_biderivations<F: Field>(
    m: &LModule<F>,
    domain: &[usize],
    symmetry: Symmetry,
    allowed: impl Fn(usize, usize) -> Vec<usize>,
) -> (BilinearMapSpace<F>, SolveStats) {
    let (n, d) = (m.lie().dim(), m.dim());
    let in_domain = mask(n, domain);
    let mut targets: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
    let mut vars = Vars::new();
    for &i in domain {
        for &j in domain {
            if i > j || (i == j && symmetry == Symmetry::Skew) {
                continue;
            }
            let p = pair_index(n, i, j, symmetry);
            let t = allowed(i, j);
            for &k in &t {
                vars.add((p, k), p * d + k);
            }
            targets.insert((i, j), t);
        }
    }
    let slot = |a: usize, b: usize| -> Option<(usize, F, &Vec<usize>)> {
        let (p, s) = pair_slot::<F>(n, a, b, symmetry)?;
        Some((p, s, &targets[&(a.min(b), a.max(b))]))
    };
    let mut stats = SolveStats { unknowns: vars.ambient.len(), ..Default::default() };
    let mut b = EchelonBuilder::new(vars.ambient.len());
    let mut rows = Rows::new();
    for &x in domain {
        for &y in domain {
            if y <= x || !bracket_in_domain(m, &in_domain, x, y) {
                continue;
            }
            'triple: for &z in domain {
                let right = [(x, y, -F::one()), (y, x, F::one())];
                for (u, v, _) in &right {
                    if let Some((_, _, t)) = slot(*v, z) {
                        if t.iter().any(|&k| m.is_partial(*u, k)) {
                            stats.skipped += 1;
                            continue 'triple;
                        }
                    }
                }
                for (s, c) in m.lie().bracket_basis(x, y).iter() {
                    if let Some((p, sg, t)) = slot(*s, z) {
                        for &k in t {
                            rows.add(k, vars.get((p, k)), c.mul_ref(&sg));
                        }
                    }
                }
                for (u, v, sign) in right {
                    if let Some((p, sg, t)) = slot(v, z) {
                        let f = sign.mul_ref(&sg);
                        for &k in t {
                            for (o, a) in m.act_basis(u, k).iter() {
                                rows.add(*o, vars.get((p, k)), f.mul_ref(a));
                            }
                        }
                    }
                }
                stats.conditions += 1;
                rows.flush(&mut b);
            }
        }
    }
    let space = vars.embed(b.nullspace(), vars_ambient_len(n, d, symmetry));
    let name = match symmetry {
        Symmetry::Skew => "window_skew_biderivations",
        _ => "window_symmetric_biderivations",
    };
    (BilinearMapSpace::new(name, n, d, symmetry, space), stats)
}

fn vars_ambient_len(n: usize, d: usize, symmetry: Symmetry) -> usize {
    crate::maps::pair_count(n, symmetry) * d
}

/// Triples `(x, y, z)` in the domain where the identity is fully defined and
/// fails. Evaluated directly on the map, independently of the solver.
pub fn biderivation_defects<F: Field>(m: &LModule<F>, domain: &[usize], delta: &BilinearMap<F>) -> Vec<(usize, usize, usize)> {
    let n = m.lie().dim();
    let in_domain = mask(n, domain);
    let mut out = Vec::new();
    for &x in domain {
        for &y in domain {
            if !bracket_in_domain(m, &in_domain, x, y) {
                continue;
            }
            for &z in domain {
                let (yz, xz) = (delta.eval_basis(y, z), delta.eval_basis(x, z));
                if yz.iter().any(|(k, _)| m.is_partial(x, *k)) || xz.iter().any(|(k, _)| m.is_partial(y, *k)) {
                    continue;
                }
                let lhs = delta.eval(m.lie().bracket_basis(x, y), &SparseVec::unit(z));
                let rhs = m.act(&SparseVec::unit(x), &yz).sub(&m.act(&SparseVec::unit(y), &xz));
                if lhs != rhs {
                    out.push((x, y, z));
                }
            }
        }
    }
    out
}

/// Pairs `(x, y)` in the domain where `γ([x,y]) = x·γ(y)` is defined and fails.
pub fn centroid_defects<F: Field>(m: &LModule<F>, domain: &[usize], g: &LinearMap<F>) -> Vec<(usize, usize)> {
    let n = m.lie().dim();
    let in_domain = mask(n, domain);
    let mut out = Vec::new();
    for &x in domain {
        for &y in domain {
            if !bracket_in_domain(m, &in_domain, x, y) || g.apply_basis(y).iter().any(|(k, _)| m.is_partial(x, *k)) {
                continue;
            }
            if g.apply(m.lie().bracket_basis(x, y)) != m.act_on(x, g.apply_basis(y)) {
                out.push((x, y));
            }
        }
    }
    out
}

/// Restriction of a linear map to the domain (zero elsewhere).
pub fn restrict_linear<F: Field>(f: &LinearMap<F>, domain: &[usize]) -> LinearMap<F> {
    let n = f.dim_l();
    let inside = mask(n, domain);
    let images = (0..n).map(|j| if inside[j] { f.apply_basis(j).clone() } else { SparseVec::zero() }).collect();
    LinearMap::from_images(f.dim_m, images)
}

/// Restriction of a bilinear map to `domain x domain`.
pub fn restrict_bilinear<F: Field>(d: &BilinearMap<F>, domain: &[usize]) -> BilinearMap<F> {
    let inside = mask(d.dim_l, domain);
    BilinearMap::from_fn(d.dim_l, d.dim_m, d.symmetry, |i, j| {
        if inside[i] && inside[j] {
            d.eval_basis(i, j)
        } else {
            SparseVec::zero()
        }
    })
}

impl<F: Field> WindowInstance<F> {
    fn ansatz_targets(&self, deg: (i64, i64), ansatz: bool, radius: usize) -> Vec<usize> {
        if ansatz {
            self.indices_of_degree(deg)
        } else {
            self.indices_within(radius)
        }
    }

    /// Centroid on the inner window. With the ansatz `γ` preserves degree;
    /// without it `γ` takes values in the inner window.
    pub fn window_centroid(&self, degree_zero_ansatz: bool) -> (LinearMapSpace<F>, SolveStats) {
        let m = self.adjoint();
        let domain = self.inner_indices();
        restricted_centroid(&m, &domain, |j| self.ansatz_targets(self.degree(j), degree_zero_ansatz, self.inner))
    }

    /// Skew biderivations on the inner window. With the ansatz `δ(x, y)` has
    /// degree `deg x + deg y`; without it values range over radius `N − N'`.
    pub fn window_skew_biderivations(&self, degree_zero_ansatz: bool) -> (BilinearMapSpace<F>, SolveStats) {
        let m = self.adjoint();
        let domain = self.inner_indices();
        let r = self.n - self.inner;
        restricted_biderivations(&m, &domain, Symmetry::Skew, |i, j| {
            let (a, b) = (self.degree(i), self.degree(j));
            self.ansatz_targets((a.0 + b.0, a.1 + b.1), degree_zero_ansatz, r)
        })
    }

    /// Skew maps on the inner window with values in the span of `central`,
    /// vanishing on `(x, [y, z])` for domain brackets: the window form of the
    /// trivial biderivations.
    pub fn window_trivial_biderivations(&self, central: &[usize]) -> BilinearMapSpace<F> {
        let n = self.dim();
        let domain = self.inner_indices();
        let in_domain = mask(n, &domain);
        let l = &self.algebra;
        let mut vars = Vars::new();
        for &i in &domain {
            for &j in &domain {
                if i < j {
                    for &k in central {
                        vars.add((pair_index(n, i, j, Symmetry::Skew), k), pair_index(n, i, j, Symmetry::Skew) * n + k);
                    }
                }
            }
        }
        let mut b = EchelonBuilder::new(vars.ambient.len());
        let mut rows = Rows::new();
        for &y in &domain {
            for &z in &domain {
                if y >= z || l.is_partial(y, z) || !l.bracket_basis(y, z).iter().all(|(s, _)| in_domain[*s]) {
                    continue;
                }
                for &x in &domain {
                    for (s, c) in l.bracket_basis(y, z).iter() {
                        if let Some((p, sg)) = pair_slot::<F>(n, x, *s, Symmetry::Skew) {
                            for &k in central {
                                rows.add(k, vars.get((p, k)), c.mul_ref(&sg));
                            }
                        }
                    }
                    rows.flush(&mut b);
                }
            }
        }
        let space = vars.embed(b.nullspace(), vars_ambient_len(n, n, Symmetry::Skew));
        BilinearMapSpace::new("window_trivial_biderivations", n, n, Symmetry::Skew, space)
    }

    /// Projects a map on this window to the quotient window `q` (built from
    /// the same family with more keys removed) by dropping removed
    /// coordinates. `None` when `δ(Z, ·)` leaves `Z` on the domain.
    pub fn project_to(&self, q: &WindowInstance<F>, delta: &BilinearMap<F>) -> Option<BilinearMap<F>> {
        let to_q: Vec<Option<usize>> = self.keys.iter().map(|k| q.index_of(k)).collect();
        let domain = self.inner_indices();
        for &i in &domain {
            if to_q[i].is_some() {
                continue;
            }
            for &j in &domain {
                if delta.eval_basis(i, j).iter().any(|(k, _)| to_q[*k].is_some()) {
                    return None;
                }
            }
        }
        let from_q: Vec<usize> = q.keys.iter().map(|k| self.index_of(k).expect("quotient keys are a subset")).collect();
        Some(BilinearMap::from_fn(q.dim(), q.dim(), delta.symmetry, |a, b| {
            delta.eval_basis(from_q[a], from_q[b]).remap(|k| to_q[k])
        }))
    }

    /// First center-tower step on the window: projection of the inner skew
    /// space to the quotient by the family's known center.
    pub fn window_center_audit(&self) -> Result<BiderivationAudit, super::WindowError> {
        let q = self.central_quotient()?;
        let (skew, _) = self.window_skew_biderivations(true);
        let (skew_q, _) = q.window_skew_biderivations(true);
        let mut images = Vec::new();
        let mut images_ok = true;
        for d in skew.basis_maps() {
            match self.project_to(&q, &d) {
                Some(p) => {
                    images_ok &= skew_q.contains(&p);
                    images.push(p.to_coeffs());
                }
                None => {
                    images_ok = false;
                    images.push(SparseVec::zero());
                }
            }
        }
        let (kernel, image) = kernel_and_image(skew.space.basis(), &images, skew.space.ambient(), skew_q.space.ambient());
        let central: Vec<usize> = self.family.known_center().iter().filter_map(|k| self.index_of(k)).collect();
        let z = Subspace::from_sparse(self.dim(), central.iter().map(|&i| SparseVec::unit(i)).collect::<Vec<_>>().iter())
            .expect("unit vectors");
        let range_in_z = skew_with_range(&skew, &z);
        let trivial = self.window_trivial_biderivations(&central);
        Ok(BiderivationAudit {
            dim_source: skew.dim(),
            dim_target: skew_q.dim(),
            image_dim: image.dim(),
            kernel_dim: kernel.dim(),
            kernel_is_range_in_center: kernel == range_in_z,
            kernel_is_trivial: kernel == trivial.space,
            rank_nullity: skew.dim() == image.dim() + kernel.dim(),
            images_are_biderivations: images_ok,
        })
    }
}
