use std::sync::Arc;

use liebider::lie::{catalog, LModule, LieAlgebra};
use liebider::maps::*;
use liebider::oracle::*;
use liebider::F3;

fn adj<const P: u64>(l: LieAlgebra<liebider::Fp<P>>) -> LModule<liebider::Fp<P>> {
    LModule::adjoint(Arc::new(l))
}

fn small() -> Vec<(&'static str, LModule<F3>)> {
    vec![
        ("abelian2", adj(catalog::abelian(2))),
        ("nonabelian2", adj(catalog::nonabelian2())),
        ("heisenberg", adj(catalog::heisenberg())),
    ]
}

#[test]
fn skew_biderivations_match_solver_over_f3() {
    for (name, m) in small() {
        let o = enumerate_skew_biderivations(&m, EnumerationBudget::default()).unwrap();
        let s = skew_biderivations(&m);
        assert_eq!(o.space, s.space, "{name}");
        assert_eq!(o.members.len(), 3usize.pow(s.dim() as u32), "{name}");
    }
}

#[test]
fn symmetric_biderivations_match_solver_over_f3() {
    for (name, m) in small() {
        let o = enumerate_symmetric_biderivations(&m, EnumerationBudget::new(18)).unwrap();
        assert_eq!(o.space, symmetric_biderivations(&m).space, "{name}");
    }
}

#[test]
fn commuting_maps_match_solver_over_f3() {
    for (name, m) in small() {
        let o = enumerate_commuting(&m, EnumerationBudget::default()).unwrap();
        assert_eq!(o.space, commuting_maps(&m).space, "{name}");
        for v in &o.members {
            let f = LinearMap::from_coeffs(v, m.lie().dim(), m.dim());
            assert!(commuting_counterexample(&m, &f).is_none());
        }
    }
}

#[test]
fn sl2_skew_over_f5_has_five_members() {
    let m = adj::<5>(catalog::sl2());
    let o = enumerate_skew_biderivations(&m, EnumerationBudget::default()).unwrap();
    assert_eq!(o.unknowns, 9);
    assert_eq!(o.members.len(), 5);
    assert_eq!(o.space, skew_biderivations(&m).space);
}

#[test]
fn members_are_biderivations() {
    let m = adj::<3>(catalog::heisenberg());
    let o = enumerate_skew_biderivations(&m, EnumerationBudget::default()).unwrap();
    for v in &o.members {
        let d = BilinearMap::from_coeffs(v, 3, 3, Symmetry::Skew);
        assert!(is_skew_biderivation(&m, &d));
    }
}

#[test]
fn non_commuting_map_has_counterexample() {
    let m = adj::<3>(catalog::nonabelian2());
    let id = LinearMap::<F3>::identity(2);
    assert!(commuting_counterexample(&m, &id).is_none());
    let swap = LinearMap::from_images(2, vec![liebider::linalg::SparseVec::unit(1), liebider::linalg::SparseVec::unit(0)]);
    let x = commuting_counterexample(&m, &swap).expect("swap does not commute");
    assert!(!m.act(&x, &swap.apply(&x)).is_zero());
}

#[test]
fn budget_is_enforced() {
    let m = adj::<3>(catalog::heisenberg());
    let err = enumerate_symmetric_biderivations(&m, EnumerationBudget::default()).unwrap_err();
    assert_eq!(err, OracleError::BudgetExceeded { unknowns: 18, max: DEFAULT_MAX_UNKNOWNS });
    let m = adj::<7>(catalog::heisenberg());
    let err = enumerate_symmetric_biderivations(&m, EnumerationBudget::new(18)).unwrap_err();
    assert!(matches!(err, OracleError::CeilingExceeded { p: 7, unknowns: 18 }));
}

#[test]
fn result_json_is_stable() {
    let m = adj::<5>(catalog::sl2());
    let o = enumerate_skew_biderivations(&m, EnumerationBudget::default()).unwrap();
    let j = o.to_json();
    assert_eq!(j["p"], 5);
    assert_eq!(j["dim"], 1);
    assert_eq!(j, enumerate_skew_biderivations(&m, EnumerationBudget::default()).unwrap().to_json());
}
