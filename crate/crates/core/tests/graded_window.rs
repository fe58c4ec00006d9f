use liebider::field::rational;
use liebider::graded_window::*;
use liebider::linalg::{SparseVec, Subspace};
use liebider::maps::{BilinearMap, BilinearMapSpace, LinearMap, Symmetry};
use liebider::{Rational, F5, Q};

fn r(n: i64) -> Rational {
    rational(n, 1)
}

fn families() -> Vec<(Family, usize)> {
    vec![
        (Family::Wab { a: rational(1, 2), b: rational(1, 3) }, 8),
        (Family::Wab { a: r(0), b: r(-1) }, 8),
        (Family::W00, 8),
        (Family::WTilde0m1 { ii_cocycle: false }, 8),
        (Family::SchrodingerVirasoro, 8),
        (Family::Block { q: r(1) }, 4),
    ]
}

fn window(f: Family, n: usize) -> WindowInstance<Q> {
    WindowInstance::instantiate(f, n).unwrap()
}

#[test]
fn families_are_jacobi_clean_in_window() {
    for (f, _) in families() {
        for n in [6, 7] {
            let w = window(f.clone(), n);
            assert!(w.algebra.is_jacobi_valid(), "{f:?} N={n}");
            assert!(w.algebra.has_partial());
        }
    }
    let w = window(Family::Block { q: r(1) }, 4);
    assert_eq!(w.dim(), 81);
    assert!(w.algebra.is_jacobi_valid());
    assert!(matches!(
        WindowInstance::<Q>::instantiate(Family::W00, 2),
        Err(WindowError::WindowTooSmall { .. })
    ));
}

#[test]
fn ii_cocycle_breaks_jacobi() {
    let w = window(Family::WTilde0m1 { ii_cocycle: true }, 6);
    let bad = w.algebra.check_jacobi();
    assert!(!bad.is_empty());
    // (L_2, I_1, I_-3): the c3 terms add to −2·c3
    let (l2, i1, im3) = (w.index_of(&Key::new(0, 2)).unwrap(), w.index_of(&Key::new(1, 1)).unwrap(), w.index_of(&Key::new(1, -3)).unwrap());
    let (x, y, z) = (SparseVec::unit(l2), SparseVec::unit(i1), SparseVec::unit(im3));
    let l = &w.algebra;
    let s = l.bracket(&l.bracket(&x, &y), &z).add(&l.bracket(&l.bracket(&y, &z), &x)).add(&l.bracket(&l.bracket(&z, &x), &y));
    let c3 = w.index_of(&Key::new(12, 0)).unwrap();
    assert_eq!(s, SparseVec::single(c3, Q::from(r(-2))));
}

#[test]
fn central_elements_of_the_extension() {
    let w = window(Family::WTilde0m1 { ii_cocycle: false }, 6);
    for name in ["c1", "c2", "c3"] {
        let c = w.algebra.index_of(name).unwrap();
        for j in 0..w.dim() {
            assert!(w.algebra.bracket_basis(c, j).is_zero());
        }
    }
    let q = w.central_quotient().unwrap();
    assert_eq!(q.dim(), w.dim() - 3);
    let plain = window(Family::Wab { a: r(0), b: r(-1) }, 6);
    assert!(q.algebra.same_structure(&plain.algebra));
}

#[test]
fn quotient_rejects_non_central_keys() {
    let w = window(Family::W00, 6);
    assert!(matches!(w.quotient_by_keys(&[Key::new(1, 1)]), Err(WindowError::NotCentral { .. })));
    assert_eq!(w.central_quotient().unwrap().dim(), w.dim() - 1);
}

/// Scalar centroid of `W(1/2, 1/3)`.
#[test]
fn wab_centroid_and_biderivations() {
    let w = window(Family::Wab { a: rational(1, 2), b: rational(1, 3) }, 8);
    let domain = w.inner_indices();
    for ansatz in [true, false] {
        let (c, stats) = w.window_centroid(ansatz);
        assert_eq!(c.dim(), 1);
        assert_eq!(stats.skipped, 0);
        let id = restrict_linear(&LinearMap::identity(w.dim()), &domain);
        assert!(c.contains(&id));
    }
    let (s, stats) = w.window_skew_biderivations(true);
    assert_eq!((s.dim(), stats.skipped), (1, 0));
    let br = bracket_on_domain(&w, &domain);
    assert!(s.contains(&br));
    assert!(biderivation_defects(&w.adjoint(), &domain, &br).is_empty());
}

#[test]
fn w0m1_centroid_matches_gamma_ab() {
    let w = window(Family::Wab { a: r(0), b: r(-1) }, 8);
    let domain = w.inner_indices();
    let (c, _) = w.window_centroid(true);
    assert_eq!(c.dim(), 2);
    let gammas: Vec<LinearMap<Q>> =
        [(1, 0), (0, 1)].iter().map(|&(a, b)| restrict_linear(&gamma_ab(&w, &r(a), &r(b)).unwrap(), &domain)).collect();
    let expected = liebider::maps::LinearMapSpace::from_maps("gamma", w.dim(), w.dim(), &gammas);
    assert_eq!(c.space, expected.space);
    for g in &gammas {
        assert!(centroid_defects(&w.adjoint(), &domain, g).is_empty());
    }
    let (s, _) = w.window_skew_biderivations(true);
    assert_eq!(s.dim(), 2);
    let br = bracket_on_domain(&w, &domain);
    for g in [(1, 0), (0, 1)] {
        let gm = gamma_ab(&w, &r(g.0), &r(g.1)).unwrap();
        let d = BilinearMap::from_fn(w.dim(), w.dim(), Symmetry::Skew, |i, j| gm.apply(&br.eval_basis(i, j)));
        assert!(s.contains(&d), "{g:?}");
    }
}

#[test]
fn sv_quotient_centroid_is_scalar() {
    let w = window(Family::SchrodingerVirasoro, 8);
    assert!(w.algebra.index_of("M_0").is_some());
    let q = w.central_quotient().unwrap();
    assert!(q.algebra.index_of("M_0").is_none());
    let (c, _) = q.window_centroid(true);
    assert_eq!(c.dim(), 1);
    let (s, _) = q.window_skew_biderivations(true);
    assert!(s.contains(&bracket_on_domain(&q, &q.inner_indices())));
}

#[test]
fn block_bracket_is_a_window_biderivation() {
    let w = window(Family::Block { q: r(1) }, 4);
    let (s, stats) = w.window_skew_biderivations(true);
    assert_eq!(stats.skipped, 0);
    assert_eq!(s.dim(), 1);
    let br = bracket_on_domain(&w, &w.inner_indices());
    assert!(s.contains(&br));
    // L_{0,-1} is central when q = 1
    let z = w.index_of(&Key::two(0, 0, -1)).unwrap();
    assert!((0..w.dim()).all(|j| w.algebra.bracket_basis(z, j).is_zero()));
}

#[test]
fn centroid_dims_stable_under_growth() {
    for (f, n) in families() {
        let small = window(f.clone(), n).window_centroid(true).0.dim();
        let big = window(f.clone(), n + 2).window_centroid(true).0.dim();
        assert_eq!(small, big, "{f:?}");
    }
}

#[test]
fn negative_controls_are_rejected() {
    let w = window(Family::Wab { a: rational(1, 2), b: rational(1, 3) }, 8);
    let domain = w.inner_indices();
    let (c, _) = w.window_centroid(true);
    // projection onto the L part is not in the centroid
    let proj = LinearMap::from_images(
        w.dim(),
        (0..w.dim()).map(|j| if w.keys[j].tag == 0 { SparseVec::unit(j) } else { SparseVec::zero() }).collect(),
    );
    let proj = restrict_linear(&proj, &domain);
    assert!(!c.contains(&proj));
    assert!(!centroid_defects(&w.adjoint(), &domain, &proj).is_empty());
    let (s, _) = w.window_skew_biderivations(true);
    let br = bracket_on_domain(&w, &domain);
    let twisted = BilinearMap::from_fn(w.dim(), w.dim(), Symmetry::Skew, |i, j| proj.apply(&br.eval_basis(i, j)));
    assert!(!s.contains(&twisted));
    assert!(!biderivation_defects(&w.adjoint(), &domain, &twisted).is_empty());
}

#[test]
fn window_center_audit_w00() {
    let w = window(Family::W00, 8);
    let a = w.window_center_audit().unwrap();
    assert!(a.passed(), "{a:?}");
    assert_eq!((a.dim_source, a.dim_target, a.kernel_dim), (1, 1, 0));
}

#[test]
fn trivial_window_space_vanishes_on_perfect_window() {
    let w = window(Family::W00, 8);
    let z = vec![w.index_of(&Key::new(1, 0)).unwrap()];
    assert_eq!(w.window_trivial_biderivations(&z).dim(), 0);
}

/// The centroid element `γ̃` of the central extension lifts `γ_{0,b}`.
#[test]
fn central_extension_lift_exists() {
    let w = window(Family::WTilde0m1 { ii_cocycle: false }, 9);
    let g = gamma_ab(&w, &r(0), &r(1)).unwrap();
    let all: Vec<usize> = (0..w.dim()).collect();
    assert!(centroid_defects(&w.adjoint(), &all, &g).is_empty());
    let domain = w.inner_indices();
    let br = bracket_on_domain(&w, &domain);
    let h = BilinearMap::from_fn(w.dim(), w.dim(), Symmetry::Skew, |i, j| g.apply(&br.eval_basis(i, j)));
    assert!(biderivation_defects(&w.adjoint(), &domain, &h).is_empty());
    let (s, _) = w.window_skew_biderivations(true);
    assert!(s.contains(&h));
    // and it vanishes on L x I
    let (l1, i2) = (w.index_of(&Key::new(0, 1)).unwrap(), w.index_of(&Key::new(1, 2)).unwrap());
    assert!(h.eval_basis(l1, i2).is_zero());
}

#[test]
fn lift_system_results() {
    for b in [r(0), r(1), r(-2), rational(7, 3)] {
        let res = lift_obstruction_w0minus1::<Q>(&b, 6).unwrap();
        assert!(res.solvable, "b = {b}");
        assert!(res.inconsistent_at.is_none());
        // forced values are b·φ(−r) on h(L_{−r}, L_r)
        let expected = format!("h(L_-2, L_2).c2 = {}", liebider::field::format_rational(&(b.clone() * rational(-1, 2))));
        assert_eq!(res.forced.contains(&expected), b != r(0), "{:?}", res.forced);
        let with_ii = lift_obstruction_with::<Q>(&b, 6, true).unwrap();
        assert_eq!(with_ii.solvable, b == r(0), "b = {b}");
    }
    assert!(matches!(lift_obstruction_w0minus1::<Q>(&r(1), 3), Err(WindowError::WindowTooSmall { .. })));
}

#[test]
fn lift_inconsistency_is_monotone() {
    let small = lift_obstruction_with::<Q>(&r(1), 4, true).unwrap();
    let big = lift_obstruction_with::<Q>(&r(1), 6, true).unwrap();
    assert!(!big.solvable || small.solvable);
    assert!(!small.solvable);
}

#[test]
fn module_window_invariants() {
    for (a, expect) in [(r(2), Some(-2)), (r(-3), Some(3)), (r(0), Some(0)), (rational(1, 2), None), (rational(7, 3), None), (r(9), None)] {
        let m = window_module::<Q>(a.clone(), r(0), 6).unwrap();
        assert!(m.module.is_module_valid());
        let z = m.invariants();
        let expected = match expect {
            Some(j) => Subspace::from_sparse(m.module.dim(), [SparseVec::unit(m.v(j).unwrap())].iter()).unwrap(),
            None => Subspace::zero(m.module.dim()),
        };
        assert_eq!(z, expected, "a = {a}");
        assert_eq!(z, m.expected_invariants());
    }
    let m = window_module::<Q>(r(2), r(1), 6).unwrap();
    assert_eq!(m.invariants().dim(), 0);
}

fn sym_members(m: &ModuleWindow<Q>, s: &BilinearMapSpace<Q>, prime: bool) -> Vec<bool> {
    (-2..=2)
        .map(|k| {
            let d = if prime { m.delta_prime_k(k) } else { m.delta_k(k) }.unwrap().unwrap();
            s.contains(&d)
        })
        .collect()
}

#[test]
fn symmetric_biderivations_into_modules() {
    let m0 = window_module::<Q>(rational(1, 2), r(0), 6).unwrap();
    let (s0, st) = m0.symmetric_biderivations();
    assert_eq!(st.skipped, 0);
    assert!(sym_members(&m0, &s0, false).iter().all(|&x| x));
    let m1 = window_module::<Q>(rational(1, 2), r(1), 6).unwrap();
    let (s1, _) = m1.symmetric_biderivations();
    assert!(sym_members(&m1, &s1, true).iter().all(|&x| x));
    // each family is specific to its module
    assert!(sym_members(&m1, &s1, false).iter().all(|&x| !x));
    assert!(sym_members(&m0, &s0, true).iter().all(|&x| !x));
    // out-of-interior shifts are not built
    assert!(m0.delta_k(5).unwrap().is_none());
    // pinned window dims
    assert_eq!((s0.dim(), s1.dim()), (7, 7));
}

#[test]
fn prime_field_windows() {
    let w = WindowInstance::<F5>::instantiate(Family::W00, 6).unwrap();
    assert!(w.algebra.is_jacobi_valid());
    assert_eq!(w.window_centroid(true).0.dim(), 1);
    let err = WindowInstance::<F5>::instantiate(Family::Wab { a: rational(1, 5), b: r(0) }, 6).unwrap_err();
    assert!(matches!(err, WindowError::FieldConversion { .. }));
}

#[test]
fn parsing_families() {
    assert_eq!(parse_rational("7/3"), Some(rational(7, 3)));
    assert_eq!(parse_rational("-2"), Some(r(-2)));
    assert_eq!(parse_rational("1/0"), None);
    assert!(matches!(Family::parse("wab", None, Some(r(1)), None), Err(WindowError::MissingParameter("a"))));
    assert!(Family::parse("nope", None, None, None).is_err());
    let f = Family::parse("block", None, None, Some(r(1))).unwrap();
    assert_eq!(f.name(), "block");
    assert!(!Family::Wab { a: r(3), b: r(-1) }.generic_params());
    assert!(Family::Wab { a: rational(1, 2), b: r(-1) }.generic_params());
}
