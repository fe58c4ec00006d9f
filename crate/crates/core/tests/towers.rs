use std::sync::Arc;

use liebider::lie::{catalog, quotient_algebra, LModule};
use liebider::linalg::SparseVec;
use liebider::maps::*;
use liebider::towers::*;
use liebider::{Field, Q};

#[test]
fn center_towers() {
    let sl2 = Arc::new(catalog::sl2::<Q>());
    let t = center_tower(&sl2, DEFAULT_DEPTH_LIMIT).unwrap();
    assert_eq!(t.dims(), vec![3]);
    assert!(t.terminated && !t.depth_limit_hit);

    let h = Arc::new(catalog::heisenberg::<Q>());
    let t = center_tower(&h, DEFAULT_DEPTH_LIMIT).unwrap();
    assert_eq!(&t.dims()[..2], &[3, 2]);
    assert!(!t.terminated && t.depth_limit_hit);
    assert!(t.stages[1].derived().is_zero());

    let t = center_tower(&h, 1).unwrap();
    assert_eq!(t.dims(), vec![3, 2]);
    assert!(t.depth_limit_hit);

    let c = Arc::new(catalog::current_algebra(&catalog::sl2::<Q>(), 2));
    let t = center_tower(&c, DEFAULT_DEPTH_LIMIT).unwrap();
    let dims = t.dims();
    assert!(dims.windows(2).all(|w| w[1] < w[0]));
    assert!(t.depth_limit_hit);
}

#[test]
fn projection_of_central_range_is_zero() {
    let h = Arc::new(catalog::heisenberg::<Q>());
    let m = LModule::adjoint(h.clone());
    let q = quotient_algebra(&h, &h.center()).unwrap();
    for d in trivial_biderivations(&m).basis_maps() {
        assert!(project_biderivation(&d, &q).unwrap().is_zero());
    }
    let skew = skew_biderivations(&m).basis_maps();
    let sum = skew[0].add_scaled(&skew[1], &Q::from_i64(3));
    let lhs = project_biderivation(&sum, &q).unwrap();
    let rhs = project_biderivation(&skew[0], &q)
        .unwrap()
        .add_scaled(&project_biderivation(&skew[1], &q).unwrap(), &Q::from_i64(3));
    assert_eq!(lhs, rhs);
}

#[test]
fn audits_pass() {
    for name in ["sl2", "heisenberg", "current_sl2_1", "nonabelian2", "abelian2"] {
        let l = Arc::new(catalog::by_name::<Q>(name).unwrap());
        let a = tower_audit_biderivations(&l).unwrap();
        assert!(a.passed(), "{name}: {a:?}");
    }
    let sl2 = Arc::new(catalog::sl2::<Q>());
    let a = tower_audit_biderivations(&sl2).unwrap();
    assert_eq!((a.kernel_dim, a.image_dim), (0, 1));
}

#[test]
fn restriction_to_derived() {
    let sl2 = catalog::sl2::<Q>();
    let m = LModule::adjoint(Arc::new(sl2.clone()));
    let d = skew_biderivations(&m).basis_maps().remove(0);
    let (sub, r) = restrict_biderivation_to_derived(&d, &sl2).unwrap();
    assert_eq!(sub.dim(), 3);
    assert_eq!(r.values, d.values);

    let zero = BilinearMap::zero(3, 3, Symmetry::Skew);
    assert!(restrict_biderivation_to_derived(&zero, &sl2).unwrap().1.is_zero());

    let h = catalog::heisenberg::<Q>();
    assert_eq!(restrict_biderivation_to_derived(&zero, &h).unwrap_err(), TowerError::NotCenterless);

    for name in ["example_3_4", "sl2_v2_d", "sl2d", "nonabelian2"] {
        let l = Arc::new(catalog::by_name::<Q>(name).unwrap());
        let a = restriction_audit(&l).unwrap();
        assert!(a.passed(), "{name}: {a:?}");
    }
}

#[test]
fn module_towers() {
    let sl2 = Arc::new(LModule::adjoint(Arc::new(catalog::sl2::<Q>())));
    let t = module_tower(&sl2, DEFAULT_DEPTH_LIMIT).unwrap();
    assert_eq!(t.dims(), vec![3]);
    assert!(t.terminated);

    let h = Arc::new(LModule::adjoint(Arc::new(catalog::heisenberg::<Q>())));
    for a in tower_audit_commuting(&h, DEFAULT_DEPTH_LIMIT).unwrap() {
        assert!(a.passed(), "{a:?}");
    }
}

#[test]
fn current_algebra_module_tower_literal() {
    // Z_L(L') = g ⊗ span{t^3, t^4}; after one quotient L' kills everything.
    let m = Arc::new(LModule::adjoint(Arc::new(catalog::current_algebra(&catalog::sl2::<Q>(), 2))));
    let t = module_tower(&m, DEFAULT_DEPTH_LIMIT).unwrap();
    assert_eq!(t.dims(), vec![12, 6, 0]);
    assert!(t.terminated);
    for q in &t.quotients {
        for f in commuting_maps(&q.original).basis_maps() {
            project_commuting(&f, q).unwrap();
        }
    }
}

#[test]
fn project_commuting_rejects_non_commuting() {
    let m = Arc::new(LModule::adjoint(Arc::new(catalog::heisenberg::<Q>())));
    let t = module_tower(&m, DEFAULT_DEPTH_LIMIT).unwrap();
    let mut images = vec![SparseVec::zero(); 3];
    images[0] = SparseVec::unit(1);
    let f = LinearMap::from_images(3, images);
    assert_eq!(project_commuting(&f, &t.quotients[0]).unwrap_err(), TowerError::NotCommuting);
}
