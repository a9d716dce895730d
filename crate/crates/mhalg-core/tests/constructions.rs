mod common;

use common::*;
use mhalg_core::constructions::{
    check_action, crossed_product_algebroid, cyclic_group_algebra, make_fin_hopf, tensor_algebroid, ActionData, FinHopf,
};
use mhalg_core::error::Error;
use mhalg_core::field::Rational;
use mhalg_core::algebra::make_algebra;
use mhalg_core::linalg::Matrix;

fn modn(x: i64, n: usize) -> usize {
    x.rem_euclid(n as i64) as usize
}

#[test]
fn tensor_counits_and_antipode_match_group_formulas() {
    for n in [1usize, 2, 3] {
        let mb = tensor_cyclic(n);
        assert!(mb.check_regular().is_valid());
        let ap = mb.derive_antipode().unwrap();
        let split = |j: usize| ((j / n) as i64, (j % n) as i64);
        assert!(is_basis_map(&ap.eps_b.map, |j| {
            let (c, b) = split(j);
            Some(modn(b - c, n))
        }));
        assert!(is_basis_map(&ap.eps_c.map, |j| {
            let (c, b) = split(j);
            Some(modn(c - b, n))
        }));
        assert!(is_basis_map(&ap.s, |j| {
            let (c, b) = split(j);
            Some(modn(-b, n) * n + modn(-c, n))
        }));
        for e in mb.main_theorem_report(&ap) {
            assert!(e.status.is_pass(), "n={} {}: {:?}", n, e.axiom.code(), e.status);
        }
    }
}

#[test]
fn tensor_with_split_bases() {
    let b = split_algebra::<Rational>(2);
    let mb = tensor_algebroid(&b, &b, &Matrix::identity(2), &Matrix::identity(2)).unwrap();
    assert_eq!(mb.dim(), 4);
    assert!(mb.check_regular().is_valid());
    let ap = mb.derive_antipode().unwrap();
    // ε_B(p_c⊗p_b) = p_b p_c
    assert!(is_basis_map(&ap.eps_b.map, |j| (j / 2 == j % 2).then_some(j % 2)));
    assert!(is_basis_map(&ap.s, |j| Some((j % 2) * 2 + j / 2)));
}

/// `(c,h,b)(c′,h′,b′)` for the shift action of `ℤ/n` on `ℚ^n`.
fn shift_product(n: usize, x: usize, y: usize) -> Option<usize> {
    let split = |i: usize| (i / (n * n), (i / n) % n, i % n);
    let ((c, h, b), (c2, h2, b2)) = (split(x), split(y));
    let hc2 = (c2 + h) % n;
    let bh2 = (b + n - h2) % n;
    (c == hc2 && bh2 == b2).then_some((c * n + (h + h2) % n) * n + b2)
}

#[test]
fn crossed_product_matches_chb_formula() {
    let n = 2;
    let mb = crossed_shift(n);
    let dim = n * n * n;
    assert_eq!(mb.dim(), dim);
    for x in 0..dim {
        for y in 0..dim {
            let expected: Vec<(usize, Rational)> = shift_product(n, x, y).map(|k| vec![(k, q(1))]).unwrap_or_default();
            assert_eq!(mb.a.product(x, y), &expected, "({}, {})", x, y);
        }
    }
}

#[test]
fn chb_product_is_associative() {
    for n in [2usize, 3, 4] {
        let dim = n * n * n;
        for x in 0..dim {
            for y in 0..dim {
                for z in 0..dim {
                    let l = shift_product(n, x, y).and_then(|xy| shift_product(n, xy, z));
                    let r = shift_product(n, y, z).and_then(|yz| shift_product(n, x, yz));
                    assert_eq!(l, r);
                }
            }
        }
    }
    let mb = crossed_shift(2);
    for x in 0..8 {
        for y in 0..8 {
            for z in 0..8 {
                let l = mb.a.mul_sparse(mb.a.product(x, y), &[(z, q(1))]);
                let r = mb.a.mul_sparse(&[(x, q(1))], mb.a.product(y, z));
                assert_eq!(l, r);
            }
        }
    }
}

#[test]
fn crossed_counits_and_antipode_match_formulas() {
    let n = 2;
    let mb = crossed_shift(n);
    let cert = mb.check_regular();
    assert!(cert.is_valid(), "{:?}", cert.failures());
    let ap = mb.derive_antipode().unwrap();
    let split = |j: usize| (j / (n * n), (j / n) % n, j % n);
    // ε_B(chb) = (b◁h⁻¹)c and ε_C(chb) = b(h⁻¹▷c)
    assert!(is_basis_map(&ap.eps_b.map, |j| {
        let (c, h, b) = split(j);
        ((b + h) % n == c).then_some(c)
    }));
    assert!(is_basis_map(&ap.eps_c.map, |j| {
        let (c, h, b) = split(j);
        ((c + n - h) % n == b).then_some(b)
    }));
    // S(chb) = S_B(b) S_H(h) S_C(c)
    assert!(is_basis_map(&ap.s, |j| {
        let (c, h, b) = split(j);
        Some((b * n + (n - h) % n) * n + c)
    }));
    for e in mb.main_theorem_report(&ap) {
        assert!(e.status.is_pass(), "{}: {:?}", e.axiom.code(), e.status);
    }
    assert_eq!(mb.uniqueness_dims().unwrap(), [0, 0, 0]);
}

#[test]
fn crossed_with_trivial_hopf_algebra_is_the_tensor_product() {
    let b = cyclic_algebra::<Rational>(2);
    let s = Matrix::identity(2);
    let h = cyclic_group_algebra::<Rational>(1).unwrap();
    let act = ActionData::trivial(&h, 2, 2);
    let crossed = crossed_product_algebroid(&b, &b, &s, &s, &h, &act).unwrap();
    let tensor = tensor_algebroid(&b, &b, &s, &s).unwrap();
    assert_eq!(crossed.a.constants(), tensor.a.constants());
    assert_eq!(crossed.left.tl, tensor.left.tl);
    assert_eq!(crossed.left.tr, tensor.left.tr);
    assert_eq!(crossed.right.lt, tensor.right.lt);
    assert_eq!(crossed.right.rt, tensor.right.rt);
}

#[test]
fn trivial_action_of_a_group_gives_a_regular_algebroid() {
    let b = split_algebra::<Rational>(2);
    let s = Matrix::identity(2);
    let h = cyclic_group_algebra::<Rational>(2).unwrap();
    let act = ActionData::trivial(&h, 2, 2);
    let mb = crossed_product_algebroid(&b, &b, &s, &s, &h, &act).unwrap();
    assert!(mb.check_regular().is_valid());
    assert!(mb.derive_antipode().is_ok());
}

#[test]
fn action_violating_the_antipode_condition_is_rejected() {
    let b = split_algebra::<Rational>(2);
    let s = Matrix::identity(2);
    let h = cyclic_group_algebra::<Rational>(2).unwrap();
    let swap = perm_matrix(&[1, 0]);
    let act = ActionData { left: vec![Matrix::identity(2), swap], right: vec![Matrix::identity(2), Matrix::identity(2)] };
    let err = check_action(&b, &b, &s, &s, &h, &act).unwrap_err();
    assert!(matches!(err, Error::ActionInvalid { .. }), "{:?}", err);
    assert!(matches!(crossed_product_algebroid(&b, &b, &s, &s, &h, &act), Err(Error::ActionInvalid { .. })));
}

#[test]
fn action_moving_the_unit_is_rejected() {
    let b = cyclic_algebra::<Rational>(2);
    let s = Matrix::identity(2);
    let h = cyclic_group_algebra::<Rational>(2).unwrap();
    let bad = perm_matrix(&[1, 0]);
    let act = ActionData { left: vec![Matrix::identity(2), bad.clone()], right: vec![Matrix::identity(2), bad] };
    assert!(matches!(check_action(&b, &b, &s, &s, &h, &act), Err(Error::ActionInvalid { .. })));
}

#[test]
fn action_shape_mismatch() {
    let b = split_algebra::<Rational>(2);
    let s = Matrix::identity(2);
    let h = cyclic_group_algebra::<Rational>(2).unwrap();
    let act = ActionData { left: vec![Matrix::identity(2)], right: vec![Matrix::identity(2)] };
    assert!(matches!(check_action(&b, &b, &s, &s, &h, &act), Err(Error::ShapeMismatch(_))));
}

#[test]
fn degenerate_base_is_rejected() {
    let zero = make_algebra::<Rational>(vec![String::from("x")], vec![], None).unwrap();
    let s = Matrix::identity(1);
    assert!(matches!(tensor_algebroid(&zero, &zero, &s, &s), Err(Error::A1Violated(_))));
}

#[test]
fn make_fin_hopf_rejects_non_groups() {
    let labels = vec![String::from("1"), String::from("z")];
    let monoid = vec![vec![0, 1], vec![1, 1]];
    assert!(matches!(make_fin_hopf::<Rational>(labels, &monoid), Err(Error::NotAGroup(_))));
}

#[test]
fn fin_hopf_rejects_wrong_counit() {
    let h = cyclic_group_algebra::<Rational>(2).unwrap();
    let bad = Matrix::from_rows(vec![vec![q(1), q(0)]]);
    let err = FinHopf::new(h.algebra.clone(), h.comult.clone(), bad, h.antipode.clone()).unwrap_err();
    assert!(matches!(err, Error::InconsistentSystem(_) | Error::ShapeMismatch(_)), "{:?}", err);
}

#[test]
fn fin_hopf_rejects_wrong_antipode() {
    let h = cyclic_group_algebra::<Rational>(3).unwrap();
    let err = FinHopf::new(h.algebra.clone(), h.comult.clone(), h.counit.clone(), Matrix::identity(3)).unwrap_err();
    assert!(matches!(err, Error::InconsistentSystem(_)), "{:?}", err);
}

#[test]
fn cyclic_group_algebra_structure() {
    let h = cyclic_group_algebra::<Rational>(3).unwrap();
    assert_eq!(h.dim(), 3);
    for k in 0..3 {
        assert_eq!(h.delta(k), vec![(k * 3 + k, q(1))]);
        assert_eq!(h.eps(&[(k, q(1))]), q(1));
        assert_eq!(h.antipode.sparse_col(k), vec![((3 - k) % 3, q(1))]);
    }
}
