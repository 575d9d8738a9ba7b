use super::*;
use crate::algebra::examples::{matrix_algebra, triangular, truncated};
use crate::field::FieldSpec;
use crate::linalg::vec_scale;

fn tensor_mul(h: &TaftAlgebra, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    let d = h.dim();
    let mut out = vec![Scalar::zero(); d * d];
    for (p, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
        for (q, y) in b.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
            let l = h.algebra.mul(&h.algebra.basis_vector(p / d), &h.algebra.basis_vector(q / d));
            let r = h.algebra.mul(&h.algebra.basis_vector(p % d), &h.algebra.basis_vector(q % d));
            for (u, s) in l.iter().enumerate() {
                for (w, t) in r.iter().enumerate() {
                    out[u * d + w] = &out[u * d + w] + &(&(x * y) * &(s * t));
                }
            }
        }
    }
    out
}

fn hopf_axioms(h: &TaftAlgebra) {
    let d = h.dim();
    let basis: Vec<_> = (0..d).map(|i| h.algebra.basis_vector(i)).collect();
    for x in &basis {
        for y in &basis {
            let xy = h.algebra.mul(x, y);
            assert_eq!(h.delta(&xy), tensor_mul(h, &h.delta(x), &h.delta(y)));
            assert_eq!(h.epsilon(&xy), &h.epsilon(x) * &h.epsilon(y));
        }
        // m(S ⊗ id)Δ(x) = ε(x)1 = m(id ⊗ S)Δ(x)
        let dx = h.delta(x);
        let mut left = vec![Scalar::zero(); d];
        let mut right = vec![Scalar::zero(); d];
        for (k, c) in dx.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            let (a, b) = (&basis[k / d], &basis[k % d]);
            let l = h.algebra.mul(&h.antipode.apply(a), b);
            let r = h.algebra.mul(a, &h.antipode.apply(b));
            left = crate::linalg::vec_add(&left, &vec_scale(c, &l));
            right = crate::linalg::vec_add(&right, &vec_scale(c, &r));
        }
        let unit = vec_scale(&h.epsilon(x), &basis[h.index(0, 0)]);
        assert_eq!(left, unit);
        assert_eq!(right, unit);
    }
    // (Δ ⊗ id)Δ = (id ⊗ Δ)Δ on generators
    for g in [h.index(1, 0), h.index(0, 1)] {
        let dg = h.delta(&basis[g]);
        let mut l = vec![Scalar::zero(); d * d * d];
        let mut r = vec![Scalar::zero(); d * d * d];
        for (k, c) in dg.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            let (a, b) = (k / d, k % d);
            for (t, s) in h.coproduct[a].iter().enumerate().filter(|(_, s)| !s.is_zero()) {
                let i = t * d + b;
                l[i] = &l[i] + &(c * s);
            }
            for (t, s) in h.coproduct[b].iter().enumerate().filter(|(_, s)| !s.is_zero()) {
                let i = a * d * d + t;
                r[i] = &r[i] + &(c * s);
            }
        }
        assert_eq!(l, r);
    }
}

#[test]
fn sweedler_is_a_hopf_algebra() {
    let h = taft(2, &Scalar::from(-1)).unwrap();
    assert_eq!(h.dim(), 4);
    hopf_axioms(&h);
    let (c, v) = (h.algebra.basis_vector(h.index(1, 0)), h.algebra.basis_vector(h.index(0, 1)));
    assert_eq!(h.algebra.mul(&v, &c), vec_scale(&Scalar::from(-1), &h.algebra.mul(&c, &v)));
    assert!(is_zero_vec(&h.algebra.mul(&v, &v)));
}

#[test]
fn taft_nine_over_cyclotomic_field() {
    let z = Scalar::zeta(3).unwrap();
    let h = taft(3, &z).unwrap();
    assert_eq!(h.dim(), 9);
    assert_eq!(h.algebra.field(), FieldSpec::Cyclotomic(3));
    hopf_axioms(&h);
    let (c, v) = (h.algebra.basis_vector(h.index(1, 0)), h.algebra.basis_vector(h.index(0, 1)));
    assert_eq!(h.algebra.mul(&v, &c), vec_scale(&z, &h.algebra.mul(&c, &v)));
    let c3 = h.algebra.mul(&h.algebra.mul(&c, &c), &c);
    assert_eq!(c3, h.algebra.basis_vector(h.index(0, 0)));
}

#[test]
fn taft_rejects_non_primitive_root() {
    assert!(matches!(taft(2, &Scalar::one()), Err(Error::Precondition(_))));
    assert!(matches!(taft_presentation(4, &Scalar::from(-1)), Err(Error::Precondition(_))));
}

#[test]
fn sweedler_on_dual_numbers() {
    let a = truncated(2);
    let pc = Matrix::from_ints(&[&[1, 0], &[0, -1]]);
    let pv = Matrix::from_ints(&[&[0, 1], &[0, 0]]);
    let act = taft_action(&a, pc, pv, 2, &Scalar::from(-1)).unwrap();
    assert_eq!(act.htilde().len(), 3);
}

#[test]
fn identity_grouplike_with_nonzero_skew_derivation_is_rejected() {
    let a = truncated(2);
    let pv = Matrix::from_ints(&[&[0, 1], &[0, 0]]);
    let err = taft_action(&a, Matrix::identity(2), pv, 2, &Scalar::from(-1)).unwrap_err();
    assert!(matches!(err, Error::RelationViolation { .. } | Error::AxiomViolation { .. }), "{err:?}");
}

#[test]
fn taft_nine_on_truncated_cube() {
    let z = Scalar::zeta(3).unwrap();
    let f = FieldSpec::Cyclotomic(3);
    let a = crate::algebra::StructAlgebra::from_products(f, 3, |i, j| {
        if i + j < 3 {
            vec![(i + j, Scalar::one())]
        } else {
            vec![]
        }
    })
    .unwrap();
    let mut pc = Matrix::zeros(3, 3);
    for k in 0..3 {
        pc.set(k, k, z.pow(k as u64));
    }
    // v(x) = 1, v(x^2) = (1 + ζ) x
    let mut pv = Matrix::zeros(3, 3);
    pv.set(0, 1, Scalar::one());
    pv.set(1, 2, &Scalar::one() + &z);
    let act = taft_action(&a, pc.clone(), pv.clone(), 3, &z).unwrap();
    assert_eq!(act.htilde().len(), 6);
    pv.set(1, 2, Scalar::one());
    assert!(taft_action(&a, pc, pv, 3, &z).is_err());
}

#[test]
fn transpose_is_an_anti_automorphism_of_m2() {
    let a = matrix_algebra(2);
    let t = Matrix::from_ints(&[&[1, 0, 0, 0], &[0, 0, 1, 0], &[0, 1, 0, 0], &[0, 0, 0, 1]]);
    let act = group_action(&a, &[("t".into(), t.clone(), MapKind::Anti)]).unwrap();
    let pres = group_presentation(&act);
    assert!(!pres.is_hopf);
    assert_eq!(pres.relations[0].name, "t^2 = 1");
    assert!(matches!(
        group_action(&a, &[("t".into(), t, MapKind::Auto)]),
        Err(Error::NotMultiplicative { index: 0, .. })
    ));
}

#[test]
fn gradings() {
    let ut2 = triangular(2, false);
    Grading::z2(vec![0, 1, 0]).validate(&ut2).unwrap();
    Grading::trivial(3).validate(&ut2).unwrap();
    assert!(matches!(Grading::z2(vec![1, 0, 0]).validate(&ut2), Err(Error::GradingViolation { .. })));
    assert!(matches!(Grading::z2(vec![0, 1]).validate(&ut2), Err(Error::Schema(_))));
    let act = grading_dual_action(&matrix_algebra(2), &Grading::z2(vec![0, 1, 1, 0])).unwrap();
    assert_eq!(act.htilde().len(), 2);
    let pres = Grading::z2(vec![0, 1, 1, 0]).presentation();
    assert_eq!(pres.counit.len(), 2);
}

#[test]
fn partial_semigroup_grading() {
    // e11 in component a, e12 in b, e22 in c with ab = b, bc = b, aa = a, cc = c
    let ut2 = triangular(2, false);
    let none = None;
    let g = Grading {
        support: vec!["a".into(), "b".into(), "c".into()],
        components: vec![0, 1, 2],
        product: vec![vec![Some(0), Some(1), none], vec![none, none, Some(1)], vec![none, none, Some(2)]],
    };
    let act = grading_dual_action(&ut2, &g).unwrap();
    assert_eq!(act.verify_action().unwrap(), None);
    assert!(g.presentation().counit.is_empty());
}

#[test]
fn trivial_action_spans_identity() {
    let act = trivial_action(&matrix_algebra(2));
    assert_eq!(act.htilde().len(), 1);
    assert_eq!(act.verify_hopf_module_axioms(&trivial_presentation()).unwrap(), None);
}
