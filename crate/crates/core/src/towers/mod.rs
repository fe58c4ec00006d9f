//! Quotient towers: `L → L/Z(L) → …` for biderivations, and
//! `M → M/Z_M(L') → …` for commuting maps.

use std::sync::Arc;

use serde_json::{json, Value};

use crate::field::Field;
use crate::lie::{quotient_algebra, quotient_module, AlgebraQuotient, LModule, LieAlgebra, LieError, ModuleQuotient};
use crate::linalg::{EchelonBuilder, SparseVec, Subspace};
use crate::maps::{
    central_maps, commuting_maps, is_commuting, is_skew_biderivation, skew_biderivations, special_biderivations,
    special_commuting_maps, trivial_biderivations, BilinearMap, BilinearMapSpace, LinearMap, Symmetry,
};

pub const DEFAULT_DEPTH_LIMIT: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TowerError {
    #[error("algebra has nonzero center")]
    NotCenterless,
    #[error("map is not a skew-symmetric biderivation")]
    NotABiderivation,
    #[error("map is not commuting")]
    NotCommuting,
    #[error("δ(Z, L) leaves Z at ({z}, {j})")]
    CenterNotPreserved { z: usize, j: usize },
    #[error("projected map fails the membership test on the quotient")]
    ProjectionFailed,
    #[error(transparent)]
    Lie(#[from] LieError),
}

/// `L_(1) = L`, `L_(r+1) = L_(r) / Z(L_(r))`.
#[derive(Debug, Clone)]
pub struct CenterTower<F> {
    pub stages: Vec<Arc<LieAlgebra<F>>>,
    /// `quotients[r]` maps `stages[r]` onto `stages[r + 1]`.
    pub quotients: Vec<AlgebraQuotient<F>>,
    /// The last stage is nonzero and centerless.
    pub terminated: bool,
    pub depth_limit_hit: bool,
}

impl<F: Field> CenterTower<F> {
    pub fn dims(&self) -> Vec<usize> {
        self.stages.iter().map(|s| s.dim()).collect()
    }

    pub fn to_json(&self) -> Value {
        json!({ "stage_dims": self.dims(), "terminated": self.terminated, "depth_limit_hit": self.depth_limit_hit })
    }
}

/// Quotients by the center until a nonzero centerless stage appears. A stage
/// that stops shrinking (the zero algebra) can never get there, so the tower
/// stops early with the limit flag set.
pub fn center_tower<F: Field>(l: &Arc<LieAlgebra<F>>, depth_limit: usize) -> Result<CenterTower<F>, LieError> {
    assert!(depth_limit >= 1, "depth_limit must be at least 1");
    let mut t = CenterTower { stages: vec![l.clone()], quotients: Vec::new(), terminated: false, depth_limit_hit: false };
    loop {
        let cur = t.stages.last().unwrap().clone();
        let z = cur.center();
        if z.is_zero() && cur.dim() > 0 {
            t.terminated = true;
            return Ok(t);
        }
        if cur.dim() == 0 || t.quotients.len() >= depth_limit {
            t.depth_limit_hit = true;
            return Ok(t);
        }
        let q = quotient_algebra(&cur, &z)?;
        t.stages.push(q.quotient.clone());
        t.quotients.push(q);
    }
}

/// `δ̄(x̄, ȳ) = δ(x, y) + Z`, after checking `δ(Z, L) ⊆ Z`.
pub fn project_biderivation<F: Field>(
    delta: &BilinearMap<F>,
    q: &AlgebraQuotient<F>,
) -> Result<BilinearMap<F>, TowerError> {
    let l = &q.original;
    let z = q.kernel();
    for (zi, w) in z.basis().iter().enumerate() {
        for j in 0..l.dim() {
            if !z.contains_sparse(&delta.eval(w, &SparseVec::unit(j))) {
                return Err(TowerError::CenterNotPreserved { z: zi, j });
            }
        }
    }
    let out = project_unchecked(delta, q);
    let m = LModule::adjoint(q.quotient.clone());
    if !is_skew_biderivation(&m, &out) {
        return Err(TowerError::ProjectionFailed);
    }
    Ok(out)
}

fn project_unchecked<F: Field>(delta: &BilinearMap<F>, q: &AlgebraQuotient<F>) -> BilinearMap<F> {
    let n = q.quotient.dim();
    let lifts: Vec<SparseVec<F>> = (0..n).map(|a| q.lift(&SparseVec::unit(a))).collect();
    BilinearMap::from_fn(n, n, Symmetry::Skew, |a, b| q.project(&delta.eval(&lifts[a], &lifts[b])))
}

/// Kernel and image of the linear map sending `basis[t]` to `images[t]`.
/// Kernel vectors are returned in the ambient of `basis`.
pub fn kernel_and_image<F: Field>(
    basis: &[SparseVec<F>],
    images: &[SparseVec<F>],
    source_len: usize,
    target_len: usize,
) -> (Subspace<F>, Subspace<F>) {
    let r = basis.len();
    // Rows [image | e_t]; after elimination, rows with no image part carry
    // kernel coordinates.
    let mut b = EchelonBuilder::new(target_len + r);
    for (t, im) in images.iter().enumerate() {
        let mut pairs: Vec<(usize, F)> = im.iter().cloned().collect();
        pairs.push((target_len + t, F::one()));
        b.push(&SparseVec::from_pairs(pairs));
    }
    let rows = b.finish();
    let mut image = Vec::new();
    let mut kernel = Vec::new();
    for row in rows {
        let lead = row.leading().unwrap().0;
        if lead < target_len {
            image.push(SparseVec::from_pairs(row.iter().filter(|(k, _)| *k < target_len).cloned()));
        } else {
            let mut acc = SparseVec::zero();
            for (k, c) in row.iter() {
                acc = acc.add_scaled(&basis[k - target_len], c);
            }
            kernel.push(acc);
        }
    }
    (
        Subspace::from_sparse(source_len, kernel.iter()).expect("kernel lengths"),
        Subspace::from_sparse(target_len, image.iter()).expect("image lengths"),
    )
}

/// Space-level check of the correspondence between skew biderivations on `L`
/// and on `L / Z(L)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiderivationAudit {
    pub dim_source: usize,
    pub dim_target: usize,
    pub image_dim: usize,
    pub kernel_dim: usize,
    /// Kernel equals the skew biderivations with range in `Z`.
    pub kernel_is_range_in_center: bool,
    /// Kernel equals the trivial biderivations.
    pub kernel_is_trivial: bool,
    pub rank_nullity: bool,
    /// Every projected basis element is a skew biderivation on the quotient.
    pub images_are_biderivations: bool,
}

impl BiderivationAudit {
    pub fn passed(&self) -> bool {
        self.kernel_is_range_in_center && self.kernel_is_trivial && self.rank_nullity && self.images_are_biderivations
    }

    pub fn to_json(&self) -> Value {
        json!({
            "dim_source": self.dim_source,
            "dim_target": self.dim_target,
            "image_dim": self.image_dim,
            "kernel_dim": self.kernel_dim,
            "kernel_is_range_in_center": self.kernel_is_range_in_center,
            "kernel_is_trivial": self.kernel_is_trivial,
            "rank_nullity": self.rank_nullity,
            "images_are_biderivations": self.images_are_biderivations,
            "passed": self.passed(),
        })
    }
}

/// Audits one step `L → L/Z(L)` of the center tower.
pub fn audit_center_step<F: Field>(q: &AlgebraQuotient<F>) -> Result<BiderivationAudit, TowerError> {
    let m = LModule::adjoint(q.original.clone());
    let mq = LModule::adjoint(q.quotient.clone());
    let skew = skew_biderivations(&m);
    let skew_q = skew_biderivations(&mq);
    audit_center_step_with(q, &m, &skew, &skew_q)
}

/// As [`audit_center_step`], with the two skew spaces supplied.
pub fn audit_center_step_with<F: Field>(
    q: &AlgebraQuotient<F>,
    m: &LModule<F>,
    skew: &BilinearMapSpace<F>,
    skew_q: &BilinearMapSpace<F>,
) -> Result<BiderivationAudit, TowerError> {
    let mut images = Vec::new();
    let mut images_ok = true;
    for d in skew.basis_maps() {
        let p = project_biderivation(&d, q);
        let p = match p {
            Ok(p) => p,
            Err(TowerError::ProjectionFailed) => {
                images_ok = false;
                project_unchecked(&d, q)
            }
            Err(e) => return Err(e),
        };
        images_ok &= skew_q.contains(&p);
        images.push(p.to_coeffs());
    }
    let src_len = skew.space.ambient();
    let tgt_len = skew_q.space.ambient();
    let (kernel, image) = kernel_and_image(skew.space.basis(), &images, src_len, tgt_len);

    let range_in_z = skew_with_range(skew, q.kernel());
    let trivial = trivial_biderivations(m);
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

/// Audits the first step of the center tower of `L`. A centerless `L` is its
/// own quotient and the audit is the identity case.
pub fn tower_audit_biderivations<F: Field>(l: &Arc<LieAlgebra<F>>) -> Result<BiderivationAudit, TowerError> {
    let q = quotient_algebra(l, &l.center())?;
    audit_center_step(&q)
}

/// `δ'` on `L'`, in coordinates of the RREF basis of `L'`, together with
/// `L'` as an algebra.
pub fn restrict_biderivation_to_derived<F: Field>(
    delta: &BilinearMap<F>,
    l: &LieAlgebra<F>,
) -> Result<(Arc<LieAlgebra<F>>, BilinearMap<F>), TowerError> {
    if !l.is_centerless() {
        return Err(TowerError::NotCenterless);
    }
    let m = LModule::adjoint(Arc::new(l.clone()));
    if !is_skew_biderivation(&m, delta) {
        return Err(TowerError::NotABiderivation);
    }
    let (sub, d) = restrict_unchecked(delta, l)?;
    if !is_skew_biderivation(&LModule::adjoint(sub.clone()), &d) {
        return Err(TowerError::ProjectionFailed);
    }
    Ok((sub, d))
}

fn derived_subalgebra<F: Field>(l: &LieAlgebra<F>) -> Result<(Subspace<F>, Arc<LieAlgebra<F>>), LieError> {
    let w = l.derived();
    let names = w.basis().iter().map(|v| l.element_string(v)).collect();
    let sub = l.subalgebra(&w, names)?;
    Ok((w, Arc::new(sub)))
}

fn restrict_unchecked<F: Field>(
    delta: &BilinearMap<F>,
    l: &LieAlgebra<F>,
) -> Result<(Arc<LieAlgebra<F>>, BilinearMap<F>), TowerError> {
    let (w, sub) = derived_subalgebra(l)?;
    let basis = w.basis();
    let r = basis.len();
    let mut bad = false;
    let d = BilinearMap::from_fn(r, r, Symmetry::Skew, |a, b| {
        let v = delta.eval(&basis[a], &basis[b]);
        match w.coordinates(&v) {
            Some(c) => SparseVec::from_dense(&c),
            None => {
                bad = true;
                SparseVec::zero()
            }
        }
    });
    if bad {
        return Err(TowerError::ProjectionFailed);
    }
    Ok((sub, d))
}

/// Restriction to `L'` on the whole skew space: its kernel must consist of
/// special biderivations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RestrictionAudit {
    pub dim_source: usize,
    pub kernel_dim: usize,
    pub special_dim: usize,
    pub kernel_in_special: bool,
    pub restrictions_are_biderivations: bool,
}

impl RestrictionAudit {
    pub fn passed(&self) -> bool {
        self.kernel_in_special && self.restrictions_are_biderivations
    }
}

pub fn restriction_audit<F: Field>(l: &Arc<LieAlgebra<F>>) -> Result<RestrictionAudit, TowerError> {
    if !l.is_centerless() {
        return Err(TowerError::NotCenterless);
    }
    let m = LModule::adjoint(l.clone());
    let skew = skew_biderivations(&m);
    let special = special_biderivations(&m);
    let mut images = Vec::new();
    let mut ok = true;
    let mut tgt_len = 0;
    for d in skew.basis_maps() {
        let (sub, r) = restrict_unchecked(&d, l)?;
        ok &= is_skew_biderivation(&LModule::adjoint(sub), &r);
        tgt_len = r.coefficient_len();
        images.push(r.to_coeffs());
    }
    if images.is_empty() {
        let w = l.derived().dim();
        tgt_len = w * w.saturating_sub(1) / 2 * w;
    }
    let (kernel, _) = kernel_and_image(skew.space.basis(), &images, skew.space.ambient(), tgt_len);
    Ok(RestrictionAudit {
        dim_source: skew.dim(),
        kernel_dim: kernel.dim(),
        special_dim: special.dim(),
        kernel_in_special: kernel.is_subspace_of(&special.space),
        restrictions_are_biderivations: ok,
    })
}

/// `M_0 = M`, `M_r = M_{r−1} / Z_{M_{r−1}}(L')`.
#[derive(Debug, Clone)]
pub struct ModuleTower<F> {
    pub stages: Vec<Arc<LModule<F>>>,
    pub quotients: Vec<ModuleQuotient<F>>,
    /// `Z_{M_r}(L') = 0` at the last stage.
    pub terminated: bool,
    pub depth_limit_hit: bool,
}

impl<F: Field> ModuleTower<F> {
    pub fn dims(&self) -> Vec<usize> {
        self.stages.iter().map(|s| s.dim()).collect()
    }

    pub fn to_json(&self) -> Value {
        json!({ "stage_dims": self.dims(), "terminated": self.terminated, "depth_limit_hit": self.depth_limit_hit })
    }
}

pub fn module_tower<F: Field>(m: &Arc<LModule<F>>, depth_limit: usize) -> Result<ModuleTower<F>, LieError> {
    assert!(depth_limit >= 1, "depth_limit must be at least 1");
    let mut t = ModuleTower { stages: vec![m.clone()], quotients: Vec::new(), terminated: false, depth_limit_hit: false };
    loop {
        let cur = t.stages.last().unwrap().clone();
        let z = cur.centralizer_of_derived();
        if z.is_zero() {
            t.terminated = true;
            return Ok(t);
        }
        if t.quotients.len() >= depth_limit {
            t.depth_limit_hit = true;
            return Ok(t);
        }
        let q = quotient_module(&cur, &z)?;
        t.stages.push(q.quotient.clone());
        t.quotients.push(q);
    }
}

/// `f̃(x) = f(x) + Z_M(L')`.
pub fn project_commuting<F: Field>(f: &LinearMap<F>, q: &ModuleQuotient<F>) -> Result<LinearMap<F>, TowerError> {
    if !is_commuting(&q.original, f) {
        return Err(TowerError::NotCommuting);
    }
    let out = project_linear(f, q);
    if !is_commuting(&q.quotient, &out) {
        return Err(TowerError::ProjectionFailed);
    }
    Ok(out)
}

fn project_linear<F: Field>(f: &LinearMap<F>, q: &ModuleQuotient<F>) -> LinearMap<F> {
    LinearMap::from_images(q.quotient.dim(), f.images.iter().map(|v| q.project(v)).collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommutingAudit {
    pub dim_source: usize,
    pub dim_target: usize,
    pub image_dim: usize,
    pub kernel_dim: usize,
    /// Kernel equals special commuting + central maps.
    pub kernel_is_special_plus_central: bool,
    pub rank_nullity: bool,
    pub images_are_commuting: bool,
}

impl CommutingAudit {
    pub fn passed(&self) -> bool {
        self.kernel_is_special_plus_central && self.rank_nullity && self.images_are_commuting
    }

    pub fn to_json(&self) -> Value {
        json!({
            "dim_source": self.dim_source,
            "dim_target": self.dim_target,
            "image_dim": self.image_dim,
            "kernel_dim": self.kernel_dim,
            "kernel_is_special_plus_central": self.kernel_is_special_plus_central,
            "rank_nullity": self.rank_nullity,
            "images_are_commuting": self.images_are_commuting,
            "passed": self.passed(),
        })
    }
}

/// Audits one step `M → M / Z_M(L')` of the module tower.
pub fn audit_module_step<F: Field>(q: &ModuleQuotient<F>) -> CommutingAudit {
    let m = &q.original;
    let k = commuting_maps(m);
    let kq = commuting_maps(&q.quotient);
    let n = m.lie().dim();
    let mut images = Vec::new();
    let mut ok = true;
    for f in k.basis_maps() {
        let p = project_linear(&f, q);
        ok &= kq.contains(&p);
        images.push(p.to_coeffs());
    }
    let (kernel, image) = kernel_and_image(k.space.basis(), &images, n * m.dim(), n * q.quotient.dim());
    let sum = special_commuting_maps(m).sum(&central_maps(m), "special+central").expect("same shape");
    CommutingAudit {
        dim_source: k.dim(),
        dim_target: kq.dim(),
        image_dim: image.dim(),
        kernel_dim: kernel.dim(),
        kernel_is_special_plus_central: kernel == sum.space,
        rank_nullity: k.dim() == image.dim() + kernel.dim(),
        images_are_commuting: ok,
    }
}

/// Audits every step of the module tower.
pub fn tower_audit_commuting<F: Field>(m: &Arc<LModule<F>>, depth_limit: usize) -> Result<Vec<CommutingAudit>, LieError> {
    let t = module_tower(m, depth_limit)?;
    Ok(t.quotients.iter().map(audit_module_step).collect())
}

/// Skew biderivations with range in `target`, as a subspace of the skew space.
pub fn skew_with_range<F: Field>(skew: &BilinearMapSpace<F>, target: &Subspace<F>) -> Subspace<F> {
    let d = skew.dim_m;
    let len = skew.space.ambient();
    let mut b = EchelonBuilder::new(len);
    for alpha in target.annihilator().basis() {
        for p in 0..len / d.max(1) {
            b.push(&SparseVec::from_pairs(alpha.iter().map(|(k, c)| (p * d + k, c.clone()))));
        }
    }
    Subspace::kernel_of(b).intersect(&skew.space).expect("same ambient")
}
