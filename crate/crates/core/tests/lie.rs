use std::sync::Arc;

use liebider::lie::json::{algebra_from_json, algebra_to_json, module_from_json, module_to_json, parse_text};
use liebider::lie::{catalog, quotient_algebra, quotient_module, LModule, LieAlgebra, LieError};
use liebider::linalg::{SparseVec, Subspace};
use liebider::{FieldTag, F3, F5, Q};

fn span(n: usize, idx: &[usize]) -> Subspace<Q> {
    Subspace::from_sparse(n, idx.iter().map(|&i| SparseVec::unit(i)).collect::<Vec<_>>().iter()).unwrap()
}

#[test]
fn catalog_is_valid() {
    for name in ["sl2", "sl2d", "heisenberg", "abelian4", "nonabelian2", "example_3_4", "sl2_v2_d", "current_sl2_2"] {
        let l = catalog::by_name::<Q>(name).unwrap();
        assert!(l.is_jacobi_valid(), "{name}");
        let m = LModule::adjoint(Arc::new(l.clone()));
        assert!(m.is_module_valid(), "{name}");
        assert!(l.center().is_subspace_of(&m.centralizer_of_derived()), "{name}");
    }
}

#[test]
fn corrupted_sl2_breaks_jacobi() {
    let l = LieAlgebra::<Q>::from_int_brackets(
        &["e", "f", "h"],
        &[(0, 1, &[(2, 1)]), (0, 2, &[(0, -3)]), (1, 2, &[(1, 2)])],
    );
    assert!(!l.check_jacobi().is_empty());
    assert!(catalog::sl2::<Q>().check_jacobi().is_empty());
    assert!(catalog::abelian::<Q>(4).check_jacobi().is_empty());
}

#[test]
fn structural_subspaces() {
    let sl2 = catalog::sl2::<Q>();
    assert_eq!(sl2.center().dim(), 0);
    assert!(sl2.derived().is_full());
    assert!(sl2.is_perfect() && sl2.is_centerless());

    let h = catalog::heisenberg::<Q>();
    assert_eq!(h.center(), span(3, &[2]));
    assert_eq!(h.derived(), span(3, &[2]));
    assert!(!h.is_perfect() && !h.is_centerless());
    let m = LModule::adjoint(Arc::new(h));
    assert!(m.centralizer_of_derived().is_full());
    assert!(m.centralizer(&Subspace::zero(3)).is_full());

    let a = catalog::abelian::<Q>(3);
    assert!(a.center().is_full());
    assert!(a.derived().is_zero());
    assert!(!a.is_perfect() && !a.is_centerless());
}

#[test]
fn example_3_4_derived_centralizer() {
    let l = catalog::example_3_4::<Q>();
    assert_eq!(l.dim(), 6);
    assert!(l.is_centerless());
    let m = LModule::adjoint(Arc::new(l));
    // e13, e14, e24
    assert_eq!(m.centralizer_of_derived(), span(6, &[2, 3, 4]));
}

#[test]
fn quotients() {
    let h = Arc::new(catalog::heisenberg::<Q>());
    let q = quotient_algebra(&h, &h.center()).unwrap();
    assert_eq!(q.quotient.dim(), 2);
    assert!(q.quotient.derived().is_zero());
    let p = q.projection_matrix();
    let s = q.section_matrix();
    assert!(p.mul(&s).unwrap().is_identity());

    let same = quotient_algebra(&h, &Subspace::zero(3)).unwrap();
    assert!(same.quotient.same_structure(&h));

    let err = quotient_algebra(&h, &span(3, &[0])).unwrap_err();
    assert!(matches!(err, LieError::NotAnIdeal { .. }));

    let sl2 = Arc::new(catalog::sl2::<Q>());
    let m = Arc::new(LModule::adjoint(sl2.clone()));
    assert_eq!(quotient_module(&m, &Subspace::full(3)).unwrap().quotient.dim(), 0);
    assert!(quotient_module(&m, &Subspace::zero(3)).unwrap().quotient.same_structure(&m));
    assert!(matches!(quotient_module(&m, &span(3, &[2])), Err(LieError::NotASubmodule { .. })));
}

#[test]
fn derived_of_quotient_is_projected_derived() {
    let l = Arc::new(catalog::current_algebra(&catalog::sl2::<Q>(), 2));
    let q = quotient_algebra(&l, &l.center()).unwrap();
    let projected = Subspace::from_sparse(
        q.quotient.dim(),
        l.derived().basis().iter().map(|v| q.project(v)).collect::<Vec<_>>().iter(),
    )
    .unwrap();
    assert_eq!(q.quotient.derived(), projected);
}

#[test]
fn current_algebra_shape() {
    let g = catalog::sl2::<Q>();
    let l = catalog::current_algebra(&g, 1);
    assert_eq!(l.dim(), 6);
    assert!(l.is_jacobi_valid());
    // center is g ⊗ t^2
    assert_eq!(l.center(), span(6, &[3, 4, 5]));
    let l2 = catalog::current_algebra(&g, 2);
    let (e_top, f_one) = (catalog::current_index(3, 0, 4), catalog::current_index(3, 1, 1));
    assert!(l2.bracket_basis(e_top.min(f_one), e_top.max(f_one)).is_zero());
    assert!(l2.is_nilpotent());
}

#[test]
fn json_round_trip() {
    for name in ["sl2", "heisenberg", "example_3_4", "sl2_v2_d"] {
        let l = catalog::by_name::<Q>(name).unwrap();
        let back: LieAlgebra<Q> = algebra_from_json(&algebra_to_json(&l)).unwrap();
        assert!(back.same_structure(&l), "{name}");
    }
    let l = catalog::sl2::<F5>();
    let back: LieAlgebra<F5> = algebra_from_json(&algebra_to_json(&l)).unwrap();
    assert!(back.same_structure(&l));
    let m = LModule::adjoint(Arc::new(catalog::heisenberg::<Q>()));
    let back: LModule<Q> = module_from_json(&module_to_json(&m)).unwrap();
    assert!(back.same_structure(&m));
}

#[test]
fn json_errors() {
    let text = r#"{"field": {"Fp": 5}, "dim": 2, "brackets": []}"#;
    let v = parse_text(text).unwrap();
    assert_eq!(
        algebra_from_json::<F3>(&v).unwrap_err(),
        LieError::FieldMismatch { expected: FieldTag::Prime(3), found: FieldTag::Prime(5) }
    );
    assert!(matches!(parse_text("{\n  \"dim\": }"), Err(LieError::Json { line: 2, .. })));
    let two = parse_text(r#"{"field": {"Fp": 2}, "dim": 1}"#).unwrap();
    assert!(algebra_from_json::<Q>(&two).is_err());
    let bad_pair = parse_text(r#"{"field": "Q", "dim": 2, "brackets": [{"i": 1, "j": 0, "coeffs": {}}]}"#).unwrap();
    assert!(matches!(algebra_from_json::<Q>(&bad_pair), Err(LieError::BadPair { .. })));
    let dup = parse_text(
        r#"{"field": "Q", "dim": 2, "brackets": [{"i": 0, "j": 1, "coeffs": {}}, {"i": 0, "j": 1, "coeffs": {}}]}"#,
    )
    .unwrap();
    assert!(matches!(algebra_from_json::<Q>(&dup), Err(LieError::DuplicateBracket { .. })));
}
