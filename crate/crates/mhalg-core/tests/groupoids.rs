mod common;

use common::*;
use mhalg_core::catalog::AxiomId;
use mhalg_core::constructions::{
    convolution_algebroid, function_algebroid, function_algebroid_of_category, inversion_matrix, FiniteCategory, FiniteGroupoid,
};
use mhalg_core::error::Error;
use mhalg_core::field::Rational;
use mhalg_core::hopf::MultiplierBialgebroid;

fn s(x: &str) -> String {
    String::from(x)
}

fn composable_count(g: &FiniteGroupoid) -> usize {
    let cat = g.category();
    let n = cat.num_arrows();
    let mut count = 0;
    for a in 0..n {
        for b in 0..n {
            if cat.arrows[a].src == cat.arrows[b].tgt {
                count += 1;
            }
        }
    }
    count
}

#[test]
fn suite_sizes() {
    let sizes: Vec<(usize, usize)> =
        groupoid_suite().iter().map(|(_, g)| (g.category().num_objects(), g.category().num_arrows())).collect();
    assert_eq!(sizes, vec![(1, 1), (1, 2), (1, 3), (2, 4), (3, 9)]);
}

#[test]
fn groupoid_inverse_is_involutive_and_reverses_arrows() {
    for (_, g) in groupoid_suite() {
        let cat = g.category();
        for a in 0..cat.num_arrows() {
            let b = g.inverse(a);
            assert_eq!(g.inverse(b), a);
            assert_eq!(cat.src(b), cat.tgt(a));
            assert_eq!(cat.tgt(b), cat.src(a));
            assert!(cat.is_unit(cat.compose(a, b).unwrap()));
        }
    }
}

#[test]
fn rejects_non_groupoid() {
    let cat = FiniteCategory::absorbing_monoid();
    let err = FiniteGroupoid::new(cat, None).unwrap_err();
    assert!(matches!(err, Error::NotAGroupoid(_)), "{:?}", err);
}

#[test]
fn rejects_broken_unit_law() {
    let arrows = vec![(s("1"), s("*"), s("*")), (s("x"), s("*"), s("*"))];
    let compose = vec![
        (s("1"), s("1"), s("1")),
        (s("1"), s("x"), s("1")),
        (s("x"), s("1"), s("x")),
        (s("x"), s("x"), s("x")),
    ];
    assert!(FiniteCategory::new(vec![s("*")], arrows, Some(compose)).is_err());
}

#[test]
fn rejects_incomplete_composition_table() {
    let arrows = vec![(s("1"), s("*"), s("*")), (s("x"), s("*"), s("*"))];
    let compose = vec![(s("1"), s("1"), s("1")), (s("1"), s("x"), s("x")), (s("x"), s("1"), s("x"))];
    assert!(FiniteCategory::new(vec![s("*")], arrows, Some(compose)).is_err());
}

#[test]
fn two_sided_targets_match_composable_pairs() {
    for (name, g) in groupoid_suite() {
        let expected = composable_count(&g);
        for mb in [function_algebroid::<Rational>(&g).unwrap(), convolution_algebroid::<Rational>(&g).unwrap()] {
            let ts = mb.two_sided();
            assert_eq!(ts.left_target().dim(), expected, "{}", name);
            assert_eq!(ts.right_target().dim(), expected, "{}", name);
        }
    }
}

#[test]
fn groupoid_algebroids_are_unital() {
    for (_, g) in groupoid_suite() {
        assert!(function_algebroid::<Rational>(&g).unwrap().unitality_report().is_unital());
        assert!(convolution_algebroid::<Rational>(&g).unwrap().unitality_report().is_unital());
    }
}

fn function_oracles(g: &FiniteGroupoid, mb: &MultiplierBialgebroid<Rational>) {
    let cat = g.category();
    let ap = mb.derive_antipode().unwrap();
    let unit_obj = |j: usize| cat.units.iter().position(|&e| e == j);
    assert!(is_basis_map(&ap.eps_b.map, |j| unit_obj(j).map(|u| cat.arrows[cat.units[u]].src)));
    assert!(is_basis_map(&ap.eps_c.map, |j| unit_obj(j).map(|u| cat.arrows[cat.units[u]].tgt)));
    let inv_oracle = |j: usize| {
        let a = &cat.arrows[j];
        (0..cat.num_arrows()).find(|&k| {
            let b = &cat.arrows[k];
            b.src == a.tgt && b.tgt == a.src && cat.compose(j, k).is_some_and(|x| cat.is_unit(x))
        })
    };
    assert!(is_basis_map(&ap.s, inv_oracle));
    assert_eq!(ap.s, inversion_matrix(g));
    assert!(ap.s.mul(&ap.s).is_identity());
    assert_eq!(ap.s_inv, ap.s);
}

#[test]
fn function_algebroid_counits_and_antipode() {
    for (_, g) in groupoid_suite() {
        function_oracles(&g, &function_algebroid(&g).unwrap());
    }
}

#[test]
fn convolution_algebroid_counits_and_antipode() {
    for (_, g) in groupoid_suite() {
        let cat = g.category();
        let mb = convolution_algebroid::<Rational>(&g).unwrap();
        let ap = mb.derive_antipode().unwrap();
        assert!(is_basis_map(&ap.eps_b.map, |j| Some(cat.arrows[j].tgt)));
        assert!(is_basis_map(&ap.eps_c.map, |j| Some(cat.arrows[j].src)));
        assert_eq!(ap.s, inversion_matrix(&g));
    }
}

#[test]
fn groupoid_algebroids_are_regular_and_pass_everything() {
    for (name, g) in groupoid_suite().into_iter().take(4) {
        for mb in [function_algebroid::<Rational>(&g).unwrap(), convolution_algebroid::<Rational>(&g).unwrap()] {
            let cert = mb.check_regular();
            assert!(cert.is_valid(), "{}: {:?}", name, cert.failures());
            for e in mb.check_all() {
                assert!(e.status.is_pass(), "{} {}: {:?}", name, e.axiom.code(), e.status);
            }
            let ap = mb.derive_antipode().unwrap();
            for e in mb.main_theorem_report(&ap) {
                assert!(e.status.is_pass(), "{} {}: {:?}", name, e.axiom.code(), e.status);
            }
            assert_eq!(mb.uniqueness_dims().unwrap(), [0, 0, 0]);
        }
    }
}

#[test]
fn monoid_is_not_hopf() {
    let cat = FiniteCategory::absorbing_monoid();
    let mb = function_algebroid_of_category::<Rational>(&cat).unwrap();
    let cert = mb.check_regular();
    assert!(!cert.is_valid());
    assert!(cert.bijective.iter().any(|b| !b));
    assert!(mb.check_axiom(AxiomId::MhBijective).is_fail());
    assert!(matches!(mb.derive_antipode(), Err(Error::NotBijective(_))));
    assert!(mb.check_axiom(AxiomId::LbCoassoc).is_pass());
    assert!(mb.check_axiom(AxiomId::RbCoassoc).is_pass());
}

#[test]
fn delta_of_unit_is_identity_and_multiplicative() {
    for (_, g) in groupoid_suite().into_iter().take(4) {
        for mb in [function_algebroid::<Rational>(&g).unwrap(), convolution_algebroid::<Rational>(&g).unwrap()] {
            let lc = mb.left.checker();
            let n = mb.dim();
            let unit: Vec<(usize, Rational)> =
                mb.a.unit().unwrap().iter().cloned().enumerate().filter(|(_, x)| !x.is_zero()).collect();
            assert!(lc.delta_of(&unit).unwrap().is_identity());
            for a in 0..n {
                for b in 0..n {
                    let da = lc.delta_of(&[(a, Rational::one())]).unwrap();
                    let db = lc.delta_of(&[(b, Rational::one())]).unwrap();
                    let dab = lc.delta_of(mb.a.product(a, b)).unwrap();
                    assert_eq!(da.mul(&db), dab);
                }
            }
        }
    }
}

#[test]
fn delta_of_reproduces_the_lift() {
    for (_, g) in groupoid_suite().into_iter().take(4) {
        let mb = convolution_algebroid::<Rational>(&g).unwrap();
        let lc = mb.left.checker();
        let qst = lc.qst();
        let n = mb.dim();
        let unit = mb.a.unit().unwrap().clone();
        for a in 0..n {
            let da = lc.delta_of(&[(a, Rational::one())]).unwrap();
            for b in 0..n {
                // Δ(a)(1⊗b) = T̃_ρ(a⊗b)
                let one_b: Vec<(usize, Rational)> =
                    unit.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i * n + b, x.clone())).collect();
                let lhs = da.mul_sparse(&qst.project(&one_b));
                let rhs = qst.project(&mb.left.tr.sparse_col(a * n + b));
                assert_eq!(lhs, rhs);
            }
        }
    }
}
