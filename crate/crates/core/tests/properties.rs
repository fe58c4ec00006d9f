//! Property tests: field laws, the two elimination routes, canonical subspaces
//! and solver invariants on random Jacobi-valid algebras.

use std::sync::Arc;

use liebider::linalg::rref::{bareiss_rref, gauss_jordan};
use liebider::linalg::{Matrix, SparseVec, Subspace};
use liebider::lie::{LModule, LieAlgebra};
use liebider::maps::*;
use liebider::{Field, Fp, F7, Q};
use num_traits::{One, Zero};
use proptest::prelude::*;

fn q(v: i64) -> Q {
    Q::from_i64(v)
}

fn f7() -> impl Strategy<Value = F7> {
    (0u64..7).prop_map(Fp::new)
}

fn small_matrix(rows: usize, cols: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-3i64..=3, cols), rows)
}

fn to_q(rows: &[Vec<i64>]) -> Vec<Vec<Q>> {
    rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect()
}

/// Two-step nilpotent: `[x_i, x_j]` lands in the span of the `z`'s, so Jacobi
/// holds for any choice of coefficients.
fn two_step(x: usize, z: usize, coeffs: &[i64]) -> LieAlgebra<Q> {
    let names = (0..x).map(|i| format!("x{i}")).chain((0..z).map(|k| format!("z{k}"))).collect();
    let mut it = coeffs.iter().cycle();
    let mut br = Vec::new();
    for i in 0..x {
        for j in i + 1..x {
            let v = SparseVec::from_pairs((0..z).map(|k| (x + k, q(*it.next().unwrap()))));
            br.push((i, j, v));
        }
    }
    LieAlgebra::new(names, br).unwrap()
}

/// `t` acting on an abelian ideal `V` through the matrix `a`.
fn semidirect(a: &[Vec<i64>]) -> LieAlgebra<Q> {
    let n = a.len();
    let names = std::iter::once("t".to_string()).chain((0..n).map(|i| format!("v{i}"))).collect();
    let br = (0..n).map(|j| (0, j + 1, SparseVec::from_pairs((0..n).map(|i| (i + 1, q(a[i][j]))))));
    LieAlgebra::new(names, br).unwrap()
}

fn algebra() -> impl Strategy<Value = LieAlgebra<Q>> {
    prop_oneof![
        (2usize..=3, 1usize..=2, prop::collection::vec(-2i64..=2, 6)).prop_map(|(x, z, c)| two_step(x, z, &c)),
        (1usize..=3).prop_flat_map(|n| small_matrix(n, n)).prop_map(|a| semidirect(&a)),
    ]
}

fn adjoint(l: LieAlgebra<Q>) -> LModule<Q> {
    LModule::adjoint(Arc::new(l))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn fp_is_a_field(a in f7(), b in f7(), c in f7()) {
        prop_assert_eq!(a * (b + c), a * b + a * c);
        prop_assert_eq!((a + b) - b, a);
        prop_assert_eq!(a + (-a), F7::zero());
        if !b.is_zero() {
            prop_assert_eq!((a / b) * b, a);
            prop_assert_eq!(b.pow(6), F7::one());
            prop_assert_eq!(b.inv().unwrap() * b, F7::one());
        }
    }

    #[test]
    fn fp_from_signed_reduces(v in -1000i64..1000) {
        prop_assert_eq!(Fp::<7>::from_signed(v).value(), v.rem_euclid(7) as u64);
        prop_assert_eq!(F7::from_i64(v), Fp::<7>::from_signed(v));
    }

    #[test]
    fn rational_text_round_trips(n in -50i64..50, d in 1i64..20) {
        let x = liebider::field::rational(n, d);
        prop_assert_eq!(Q::parse(&liebider::field::format_rational(&x)).unwrap(), x.clone());
        prop_assert_eq!(Q::from_json(&x.to_json()).unwrap(), x);
    }

    #[test]
    fn bareiss_agrees_with_gauss_jordan(rows in (1usize..5, 1usize..6).prop_flat_map(|(r, c)| small_matrix(r, c))) {
        let cols = rows[0].len();
        let mut a = to_q(&rows);
        let mut b = a.clone();
        let pa = gauss_jordan(&mut a, cols);
        let pb = bareiss_rref(&mut b, cols);
        prop_assert_eq!(&pa, &pb);
        prop_assert_eq!(&a[..pa.len()], &b[..pb.len()]);
    }

    #[test]
    fn subspace_is_canonical(rows in (1usize..5, 1usize..6).prop_flat_map(|(r, c)| small_matrix(r, c)), k in -3i64..=3) {
        let cols = rows[0].len();
        let a = to_q(&rows);
        let s = Subspace::from_dense_rows(cols, &a).unwrap();
        // Reversed order, a rescaled row and an added combination span the same space.
        let mut b: Vec<Vec<Q>> = a.iter().rev().cloned().collect();
        b[0] = b[0].iter().map(|x| x * q(3)).collect();
        let extra: Vec<Q> = a[0].iter().zip(a.last().unwrap()).map(|(x, y)| x + y * q(k)).collect();
        b.push(extra);
        let t = Subspace::from_dense_rows(cols, &b).unwrap();
        prop_assert_eq!(&s, &t);
        let m = Matrix::from_rows(a.clone(), cols).unwrap();
        prop_assert_eq!(s.dim(), m.rank());
        prop_assert_eq!(m.nullspace().dim() + m.rank(), cols);
        for v in m.nullspace().basis() {
            for r in &a {
                prop_assert!(v.dot_dense(r).is_zero());
            }
        }
    }

    #[test]
    fn sparse_add_sub_round_trip(a in prop::collection::vec(-4i64..=4, 6), b in prop::collection::vec(-4i64..=4, 6)) {
        let va = SparseVec::from_dense(&a.iter().map(|&x| q(x)).collect::<Vec<_>>());
        let vb = SparseVec::from_dense(&b.iter().map(|&x| q(x)).collect::<Vec<_>>());
        prop_assert_eq!(va.add(&vb).sub(&vb), va.clone());
        prop_assert_eq!(SparseVec::from_dense(&va.to_dense(6)), va);
    }

    #[test]
    fn random_algebras_are_jacobi_valid(l in algebra()) {
        prop_assert!(l.is_jacobi_valid());
    }

    #[test]
    fn solver_bases_satisfy_definitions(l in algebra()) {
        let m = adjoint(l);
        for g in centroid(&m).basis_maps() {
            prop_assert!(is_centroid(&m, &g));
            prop_assert!(is_commuting(&m, &g));
        }
        for d in derivations(&m).basis_maps() {
            prop_assert!(is_derivation(&m, &d));
        }
        for f in commuting_maps(&m).basis_maps() {
            prop_assert!(is_commuting(&m, &f));
        }
        for d in skew_biderivations(&m).basis_maps() {
            prop_assert!(is_skew_biderivation(&m, &d));
        }
        for d in symmetric_biderivations(&m).basis_maps() {
            prop_assert!(is_symmetric_biderivation(&m, &d));
        }
    }

    #[test]
    fn space_inclusions_hold(l in algebra()) {
        let m = adjoint(l);
        prop_assert!(centroid(&m).is_subspace_of(&commuting_maps(&m)));
        prop_assert!(central_maps(&m).is_subspace_of(&commuting_maps(&m)));
        let triv = trivial_biderivations(&m);
        prop_assert!(triv.space.is_subspace_of(&skew_biderivations(&m).space));
        prop_assert_eq!(&triv.space, &trivial_biderivations_by_constraints(&m).space);
    }

    #[test]
    fn membership_agrees_with_direct_check(
        l in algebra(),
        picks in prop::collection::vec(-2i64..=2, 8),
        noise in prop::collection::vec(-1i64..=1, 4),
    ) {
        let m = adjoint(l);
        let n = m.dim();
        let space = skew_biderivations(&m);
        let mut d = BilinearMap::zero(n, n, Symmetry::Skew);
        for (b, c) in space.basis_maps().iter().zip(&picks) {
            d = d.add_scaled(b, &q(*c));
        }
        // Perturb a few coefficients; the result may or may not leave the space.
        let mut v = d.to_coeffs();
        for (k, c) in noise.iter().enumerate() {
            let idx = (k * 7 + 3) % d.coefficient_len();
            v = v.add(&SparseVec::single(idx, q(*c)));
        }
        let d = BilinearMap::from_coeffs(&v, n, n, Symmetry::Skew);
        prop_assert_eq!(space.contains(&d), is_skew_biderivation(&m, &d));

        let comm = commuting_maps(&m);
        let mut f = LinearMap::zero(n, n);
        for (b, c) in comm.basis_maps().iter().zip(&picks) {
            f = f.add_scaled(b, &q(*c));
        }
        let mut w = f.to_coeffs();
        for (k, c) in noise.iter().enumerate() {
            w = w.add(&SparseVec::single((k * 5 + 1) % f.coefficient_len(), q(*c)));
        }
        let f = LinearMap::from_coeffs(&w, n, n);
        prop_assert_eq!(comm.contains(&f), is_commuting(&m, &f));
    }
}
