use std::sync::Arc;

use liebider::lie::{catalog, LModule, LieAlgebra};
use liebider::linalg::{Matrix, SparseVec};
use liebider::maps::*;
use liebider::{Field, Q};

fn adj(l: LieAlgebra<Q>) -> LModule<Q> {
    LModule::adjoint(Arc::new(l))
}

fn ad_map(m: &LModule<Q>, i: usize) -> LinearMap<Q> {
    let n = m.lie().dim();
    LinearMap::from_images(n, (0..n).map(|j| m.lie().bracket_basis(i, j).clone()).collect())
}

fn small_catalog() -> Vec<(&'static str, LModule<Q>)> {
    ["sl2", "sl2d", "heisenberg", "abelian1", "abelian2", "abelian3", "nonabelian2", "example_3_4", "sl2_v2_d"]
        .iter()
        .map(|&n| (n, adj(catalog::by_name(n).unwrap())))
        .collect()
}

#[test]
fn sl2_spaces() {
    let m = adj(catalog::sl2());
    let c = centroid(&m);
    assert_eq!(c.dim(), 1);
    assert!(c.contains(&LinearMap::identity(3)));
    let d = derivations(&m);
    assert_eq!(d.dim(), 3);
    for i in 0..3 {
        assert!(d.contains(&ad_map(&m, i)));
    }
    assert_eq!(skew_biderivations(&m).dim(), 1);
    assert_eq!(symmetric_biderivations(&m).dim(), 0);
    assert_eq!(commuting_maps(&m), LinearMapSpace { name: "commuting".into(), ..c.clone() });
    assert_eq!(central_maps(&m).dim(), 0);
    assert_eq!(trivial_biderivations(&m).dim(), 0);
}

#[test]
fn abelian_spaces_are_everything() {
    for n in 1..=4 {
        let m = adj(catalog::abelian(n));
        assert_eq!(centroid(&m).dim(), n * n);
        assert_eq!(derivations(&m).dim(), n * n);
        assert_eq!(skew_biderivations(&m).dim(), n * n * (n - 1) / 2);
        assert_eq!(symmetric_biderivations(&m).dim(), n * n * (n + 1) / 2);
        assert_eq!(commuting_maps(&m).dim(), n * n);
    }
}

#[test]
fn heisenberg_counts() {
    let m = adj(catalog::heisenberg());
    // d(x), d(y) free; d(z) forced.
    let d = derivations(&m);
    assert_eq!(d.dim(), 6);
    for i in 0..3 {
        assert!(d.contains(&ad_map(&m, i)));
    }
    assert_eq!(central_maps(&m).dim(), 3);
    let t = trivial_biderivations(&m);
    assert_eq!(t.dim(), 1);
    assert_eq!(t.space, trivial_biderivations_by_constraints(&m).space);
}

#[test]
fn trivial_routes_agree_on_catalog() {
    for (name, m) in small_catalog() {
        let a = trivial_biderivations(&m);
        let b = trivial_biderivations_by_constraints(&m);
        assert_eq!(a.space, b.space, "{name}");
        assert!(a.is_subspace_of(&skew_biderivations(&m)), "{name}");
    }
}

#[test]
fn make_trivial_on_heisenberg() {
    let m = adj(catalog::heisenberg());
    let omega = Matrix::from_i64(&[&[0, 1, 0], &[-1, 0, 0], &[0, 0, 0]]);
    let z = SparseVec::unit(2);
    let d = make_trivial_biderivation(&m, &omega, &z).unwrap();
    assert!(trivial_biderivations(&m).contains(&d));
    assert_eq!(d.eval_basis(0, 1), z);

    let zero = make_trivial_biderivation(&m, &Matrix::zeros(3, 3), &z).unwrap();
    assert!(zero.is_zero());

    let bad = Matrix::from_i64(&[&[0, 0, 1], &[0, 0, 0], &[-1, 0, 0]]);
    assert!(matches!(make_trivial_biderivation(&m, &bad, &z), Err(MapError::OmegaNotVanishingOnDerived { .. })));
    let not_skew = Matrix::from_i64(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 0]]);
    assert!(matches!(make_trivial_biderivation(&m, &not_skew, &z), Err(MapError::NotSkew { .. })));
    assert_eq!(make_trivial_biderivation(&m, &omega, &SparseVec::unit(0)).unwrap_err(), MapError::NotCentral);
}

#[test]
fn perfect_algebra_admits_only_zero_omega() {
    let m = adj(catalog::sl2());
    let omega = Matrix::from_i64(&[&[0, 1, 0], &[-1, 0, 0], &[0, 0, 0]]);
    assert!(make_trivial_biderivation(&m, &omega, &SparseVec::zero()).is_err());
}

#[test]
fn heisenberg_trivial_generator_decomposes_to_trivial_part() {
    let m = adj(catalog::heisenberg());
    let delta = trivial_biderivations(&m).basis_maps().remove(0);
    let r = decompose_biderivation(&m, &delta).unwrap();
    assert_eq!(r.status, DecompositionStatus::UpToTrivial);
    assert!(r.gamma.unwrap().is_zero());
    assert_eq!(r.residual.unwrap(), delta);
}

#[test]
fn sl2_decomposition_is_exact() {
    let m = adj(catalog::sl2());
    for delta in skew_biderivations(&m).basis_maps() {
        let r = decompose_biderivation(&m, &delta).unwrap();
        assert_eq!(r.status, DecompositionStatus::Exact);
        assert!(r.residual.unwrap().is_zero());
    }
    let bracket = from_centroid(&m, &LinearMap::identity(3)).unwrap();
    assert!(skew_biderivations(&m).contains(&bracket));
}

#[test]
fn decompose_rejects_non_members() {
    let m = adj(catalog::sl2());
    let mut d = BilinearMap::zero(3, 3, Symmetry::Skew);
    d.values[0] = SparseVec::unit(0);
    assert!(!is_biderivation(&m, &d));
    assert_eq!(decompose_biderivation(&m, &d).unwrap_err(), MapError::NotABiderivation);
    let f = LinearMap::from_images(3, vec![SparseVec::unit(1), SparseVec::zero(), SparseVec::zero()]);
    assert!(!is_commuting(&m, &f));
    assert_eq!(decompose_commuting(&m, &f).unwrap_err(), MapError::NotCommuting);
    assert_eq!(from_centroid(&m, &f).unwrap_err(), MapError::NotInCentroid);
}

#[test]
fn from_centroid_lands_in_skew_space() {
    for (name, m) in small_catalog() {
        let skew = skew_biderivations(&m);
        for g in centroid(&m).basis_maps() {
            assert!(skew.contains(&from_centroid(&m, &g).unwrap()), "{name}");
        }
    }
}

#[test]
fn centroid_inside_commuting() {
    for (name, m) in small_catalog() {
        let c = centroid(&m);
        let k = commuting_maps(&m);
        assert!(c.is_subspace_of(&k), "{name}");
        assert!(special_commuting_maps(&m).is_subspace_of(&k), "{name}");
        for f in k.basis_maps() {
            assert!(is_commuting(&m, &f), "{name}");
            for i in 0..m.lie().dim() {
                assert!(commutes_at(&m, &f, &SparseVec::unit(i)), "{name}");
            }
        }
    }
}

#[test]
fn solver_bases_pass_direct_checks() {
    for (name, m) in small_catalog() {
        for g in centroid(&m).basis_maps() {
            assert!(is_centroid(&m, &g), "{name}");
        }
        for d in derivations(&m).basis_maps() {
            assert!(is_derivation(&m, &d), "{name}");
        }
        for d in skew_biderivations(&m).basis_maps() {
            assert!(is_skew_biderivation(&m, &d), "{name}");
            assert!(verify_lemma_bl(&m, &d), "{name}");
            assert!(verify_identity_ena(&m, &d), "{name}");
            assert!(verify_identity_q(&m, &d), "{name}");
        }
        for d in symmetric_biderivations(&m).basis_maps() {
            assert!(is_symmetric_biderivation(&m, &d), "{name}");
        }
    }
}

#[test]
fn perfect_centerless_skew_equals_centroid_image() {
    for (name, m) in small_catalog() {
        let l = m.lie();
        if !(l.is_perfect() && m.invariants().is_zero()) {
            continue;
        }
        let images: Vec<_> = centroid(&m).basis_maps().iter().map(|g| from_centroid(&m, g).unwrap()).collect();
        let img = BilinearMapSpace::from_maps("image", l.dim(), m.dim(), Symmetry::Skew, &images);
        assert_eq!(img.space, skew_biderivations(&m).space, "{name}");
    }
}

#[test]
fn commuting_equals_centroid_when_derived_centralizer_vanishes() {
    let mut seen = 0;
    for (name, m) in small_catalog() {
        if !m.centralizer_of_derived().is_zero() {
            continue;
        }
        seen += 1;
        assert_eq!(commuting_maps(&m).space, centroid(&m).space, "{name}");
    }
    assert!(seen >= 2);
}

#[test]
fn special_biderivations_vanish_for_sl2_v2_d() {
    let l = catalog::sl2_v2_d::<Q>();
    assert!(l.is_centerless());
    let d = l.derived();
    let sub = l.subalgebra(&d, (0..d.dim()).map(|i| format!("w{i}")).collect()).unwrap();
    assert!(sub.is_perfect());
    assert_eq!(special_biderivations(&adj(l)).dim(), 0);
}

#[test]
fn example_3_4_commuting_map() {
    let m = adj(catalog::example_3_4());
    assert!(m.lie().is_centerless());
    let mut images = vec![SparseVec::zero(); 6];
    images[2] = SparseVec::unit(1);
    images[4] = SparseVec::unit(5);
    let f = LinearMap::from_images(6, images);
    assert!(commuting_maps(&m).contains(&f));
    let r = decompose_commuting(&m, &f).unwrap();
    assert!(!r.success);
    let w = r.witnesses.iter().find(|w| (w.x, w.y) == (2, 4)).expect("witness at (e13, e24)");
    assert!(w.lhs.is_zero());
    assert_eq!(w.rhs, SparseVec::unit(3));
}

#[test]
fn identity_commuting_decomposes() {
    let m = adj(catalog::sl2());
    let r = decompose_commuting(&m, &LinearMap::identity(3)).unwrap();
    assert!(r.success);
    assert_eq!(r.gamma.unwrap(), LinearMap::identity(3));
    assert!(r.mu.unwrap().is_zero());
}

#[test]
fn heisenberg_commuting_maps_split() {
    let m = adj(catalog::heisenberg());
    for f in commuting_maps(&m).basis_maps() {
        let r = decompose_commuting(&m, &f).unwrap();
        assert!(r.success);
        assert!(central_maps(&m).contains(&r.mu.unwrap()));
    }
}

#[test]
fn negative_controls() {
    let m = adj(catalog::sl2());
    // Skew, but not a biderivation.
    let mut d = BilinearMap::zero(3, 3, Symmetry::Skew);
    d.values[0] = SparseVec::unit(0);
    assert!(first_slot_witness(&m, &d).is_some());
    assert!(!verify_lemma_bl(&m, &d));
    let mut g = LinearMap::identity(3);
    g.images[0] = SparseVec::unit(1);
    assert!(!is_centroid(&m, &g));
    assert!(!is_derivation(&m, &LinearMap::identity(3)));
}

#[test]
fn current_algebra_family_members() {
    let g = catalog::sl2::<Q>();
    let l = catalog::current_algebra(&g, 2);
    let m = adj(l);
    let a: Vec<Q> = [1, 2, -1, 3].iter().map(|&x| Q::from_i64(x)).collect();
    let f = LinearMap::from_images(m.dim(), catalog::current_shift_map(3, 2, &a));
    assert!(is_centroid(&m, &f));
    assert!(skew_biderivations(&m).contains(&from_centroid(&m, &f).unwrap()));
}

#[test]
fn current_algebra_commuting_is_family_plus_central() {
    let m = adj(catalog::current_algebra(&catalog::sl2::<Q>(), 2));
    let n = m.dim();
    let family: Vec<LinearMap<Q>> = (0..4)
        .map(|i| {
            let a: Vec<Q> = (0..4).map(|j| Q::from_i64((i == j) as i64)).collect();
            LinearMap::from_images(n, catalog::current_shift_map(3, 2, &a))
        })
        .collect();
    let fam = LinearMapSpace::from_maps("family", n, n, &family);
    assert_eq!(fam.dim(), 4);
    let c = centroid(&m);
    assert!(fam.is_subspace_of(&c));
    let sum = fam.sum(&central_maps(&m), "sum").unwrap();
    assert_eq!(sum.space, commuting_maps(&m).space);
}
