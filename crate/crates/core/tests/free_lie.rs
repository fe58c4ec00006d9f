use std::sync::Arc;

use liebider::free_lie::*;
use liebider::lie::LModule;
use liebider::linalg::{SparseVec, Subspace};
use liebider::maps::*;
use liebider::Q;

#[test]
fn hall_counts_match_witt() {
    let f = FreeLie::<Q>::new(2, 2);
    assert_eq!(f.count_by_degree()[1..], [2, 1]);
    let f = FreeLie::<Q>::new(3, 2);
    assert_eq!(f.count_by_degree()[1..], [3, 3]);
    let mut f = FreeLie::<Q>::new(3, 5);
    for d in 1..=5 {
        for md in multidegrees(3, d) {
            let n = f.component(&md).len();
            assert_eq!(n, witt_dimension(&md), "{md:?}");
            assert_eq!(f.component_rank(&md), n, "{md:?}");
        }
    }
    // brute force: rank of all left-normed bracketings of {x1,x2,x3,x3,x3}
    assert_eq!(f.left_normed_rank(&[1, 1, 3]), f.component(&[1, 1, 3]).len());
    assert_eq!(f.component(&[1, 1, 3]).len(), 4);
}

#[test]
fn bracket_is_lie() {
    let mut f = FreeLie::<Q>::new(3, 4);
    let x: Vec<_> = (0..3).map(|g| f.generator(g)).collect();
    assert!(f.bracket(&x[0], &x[0]).unwrap().is_zero());
    let a = f.bracket(&x[0], &x[1]).unwrap();
    let b = f.bracket(&x[1], &x[0]).unwrap();
    assert!(a.add(&b).is_zero());
    let hall_low: Vec<usize> = (0..f.hall().len()).filter(|&i| f.hall()[i].degree <= 2).collect();
    for &i in &hall_low {
        for &j in &hall_low {
            for &k in &hall_low {
                if f.hall()[i].degree + f.hall()[j].degree + f.hall()[k].degree > 4 {
                    continue;
                }
                let (u, v, w) = (SparseVec::unit(i), SparseVec::unit(j), SparseVec::unit(k));
                let mut nested = |a: &SparseVec<Q>, b: &SparseVec<Q>, c: &SparseVec<Q>| {
                    let ab = f.bracket(a, b).unwrap();
                    f.bracket(&ab, c).unwrap()
                };
                let t = nested(&u, &v, &w).add(&nested(&v, &w, &u)).add(&nested(&w, &u, &v));
                assert!(t.is_zero());
            }
        }
    }
    assert!(matches!(f.left_normed(&[0, 1, 2, 2, 2]), Err(FreeLieError::DegreeOverflow { .. })));
}

#[test]
fn ideal_components_basic() {
    let mut ideals = IdealComponents::new(FreeLie::<Q>::new(3, 5));
    assert_eq!(ideals.component_hall(IdealKind::J, &[1, 1, 3]).dim(), 0);
    for md in [vec![0, 2, 2], vec![0, 1, 3], vec![0, 0, 1]] {
        assert!(ideals.component_hall(IdealKind::I, &md).is_zero());
    }
    // [[x1, x3], x3] and [[x1,x2],x3] + [[x1,x3],x2] are members.
    let mut f = FreeLie::<Q>::new(3, 5);
    let g1 = f.left_normed(&[0, 2, 2]).unwrap();
    let g2 = f.left_normed(&[0, 1, 2]).unwrap().add(&f.left_normed(&[0, 2, 1]).unwrap());
    assert!(ideals.in_sum(&g1));
    assert!(ideals.in_sum(&g2));
    assert!(!ideals.in_sum(&f.left_normed(&[0, 1, 2]).unwrap()));
}

#[test]
fn ideal_components_are_closed() {
    let mut ideals = IdealComponents::new(FreeLie::<Q>::new(3, 5));
    for d in 1..=4 {
        for md in multidegrees(3, d) {
            for kind in [IdealKind::I, IdealKind::J] {
                for i in 0..3 {
                    let mut up = md.clone();
                    up[i] += 1;
                    let low_hall = ideals.component_hall(kind, &md);
                    let idx = ideals.free.component(&md).to_vec();
                    for v in low_hall.basis() {
                        let x = v.remap(|k| Some(idx[k]));
                        let gi = ideals.free.generator(i);
                        let y = ideals.free.bracket(&x, &gi).unwrap();
                        let up_idx = ideals.free.component(&up).to_vec();
                        let local = y.remap(|k| up_idx.iter().position(|&h| h == k));
                        assert!(ideals.component_hall(kind, &up).contains_sparse(&local), "{kind:?} {md:?} x{i}");
                    }
                }
            }
        }
    }
}

/// The degree-(1,1,2) component of `I` already contains `[[[x1,x2],x3],x3]`,
/// shown from three explicit generator instances.
#[test]
fn hand_check_target_lies_in_i() {
    let mut f = FreeLie::<Q>::new(3, 5);
    let (x1, x2, x3) = (f.generator(0), f.generator(1), f.generator(2));
    let br = |f: &mut FreeLie<Q>, a: &SparseVec<Q>, b: &SparseVec<Q>| f.bracket(a, b).unwrap();
    let gen = |f: &mut FreeLie<Q>, u: &SparseVec<Q>, v: &SparseVec<Q>| {
        let a = br(f, &x1, u);
        let a = br(f, &a, v);
        let b = br(f, &x1, v);
        let b = br(f, &b, u);
        a.add(&b)
    };
    let g23 = gen(&mut f, &x2, &x3);
    let apb = br(&mut f, &g23, &x3);
    let g33 = gen(&mut f, &x3, &x3);
    let c2 = br(&mut f, &g33, &x2);
    let x23 = br(&mut f, &x2, &x3);
    let amc = gen(&mut f, &x3, &x23);

    let a = f.left_normed(&[0, 1, 2, 2]).unwrap();
    let members = [apb, c2, amc];
    let md = vec![1, 1, 2];
    let idx = f.component(&md).to_vec();
    let local = |v: &SparseVec<Q>| v.remap(|k| idx.iter().position(|&h| h == k));
    let span = Subspace::from_sparse(idx.len(), members.iter().map(local).collect::<Vec<_>>().iter()).unwrap();
    assert!(span.contains_sparse(&local(&a)));
    let target = f.left_normed(&[0, 1, 2, 2, 2]).unwrap();
    assert_eq!(target, br(&mut f, &a, &x3));
}

#[test]
fn jk_report_values() {
    let r = jk_report::<Q>();
    assert!(r.monomials_independent);
    assert!(r.listed_in_i);
    assert_eq!(r.j_dim, 0);
    assert_eq!(r.component_dim, 4);
    // the listed three do not exhaust I in this degree
    assert_eq!(r.i_dim, 4);
    assert!(!r.listed_span_i);
    assert!(r.target_in_i);
    assert!(!r.holds());
    assert!(!check_eq_jk());
}

fn quotient() -> (TruncatedQuotient<Q>, LModule<Q>) {
    let q = TruncatedQuotient::<Q>::new(5);
    let m = LModule::adjoint(Arc::new(q.algebra.clone()));
    (q, m)
}

#[test]
fn truncated_quotient_structure() {
    let (q, _) = quotient();
    let l = &q.algebra;
    assert!(l.is_jacobi_valid());
    assert!(l.is_nilpotent());
    assert!(q.component(&[1, 1, 3]).is_empty());
    assert_eq!(q.component(&[1, 1, 1]).len(), 1);
    // quotient brackets are free brackets followed by reduction modulo I + J
    let mut free = FreeLie::<Q>::new(3, 5);
    let mut ideals = IdealComponents::new(FreeLie::<Q>::new(3, 5));
    for a in 0..l.dim() {
        for b in a + 1..l.dim() {
            let md: Vec<usize> = q.multidegree[a].iter().zip(&q.multidegree[b]).map(|(x, y)| x + y).collect();
            if md.iter().sum::<usize>() > 5 {
                continue;
            }
            let fb = free.bracket(&SparseVec::unit(q.hall_index[a]), &SparseVec::unit(q.hall_index[b])).unwrap();
            let lifted = l.bracket_basis(a, b).remap(|k| Some(q.hall_index[k]));
            assert!(ideals.in_sum(&fb.sub(&lifted)), "{a} {b}");
        }
    }
}

#[test]
fn quotient_biderivation_and_commuting_map() {
    let (q, m) = quotient();
    let l = &q.algebra;
    let n = l.dim();
    let a = SparseVec::unit(0);
    let delta = BilinearMap::from_fn(n, n, Symmetry::Skew, |i, j| {
        l.bracket(&l.bracket(&a, &SparseVec::unit(i)), &SparseVec::unit(j))
    });
    assert!(is_skew_biderivation(&m, &delta));
    let r = decompose_biderivation(&m, &delta).unwrap();
    assert_eq!(r.status, DecompositionStatus::UpToTrivial);

    let f = LinearMap::from_images(n, (0..n).map(|j| l.bracket(&a, &SparseVec::unit(j))).collect());
    assert!(is_commuting(&m, &f));
    let r = decompose_commuting(&m, &f).unwrap();
    assert!(r.success);
    let x123 = q.component(&[1, 1, 1])[0];
    assert!(l.center().contains_sparse(&SparseVec::unit(x123)));
}
