mod common;

use common::*;
use mhalg_core::catalog::{AxiomId, Status};
use mhalg_core::constructions::{convolution_algebroid, convolution_star, function_algebroid, function_star, FiniteGroupoid};
use mhalg_core::error::Error;
use mhalg_core::field::{Field, GaussianRational, Rational};
use mhalg_core::hopf::{MultiplierBialgebroid, StarStructure};
use mhalg_core::linalg::Matrix;

fn small_instances() -> Vec<(String, MultiplierBialgebroid<Rational>)> {
    let mut v = Vec::new();
    for (name, g) in groupoid_suite().into_iter().take(4) {
        v.push((format!("fn {}", name), function_algebroid(&g).unwrap()));
        v.push((format!("conv {}", name), convolution_algebroid(&g).unwrap()));
    }
    v.push((String::from("tensor Z2"), tensor_cyclic(2)));
    v.push((String::from("crossed shift"), crossed_shift(2)));
    v
}

#[test]
fn symmetry_companions_are_regular_with_transported_antipodes() {
    for (name, mb) in small_instances() {
        let ap = mb.derive_antipode().unwrap();
        for check in mb.check_symmetries(Some(&ap)) {
            assert!(check.passes(), "{} {}: {:?}", name, check.name, check);
        }
        assert!(ap.s.mul(&ap.s_inv).is_identity());
        let sym = mb.symmetries().unwrap();
        assert_eq!(sym.op_co.derive_antipode().unwrap().s, ap.s, "{}", name);
        assert_eq!(sym.co.derive_antipode().unwrap().s, ap.s_inv, "{}", name);
        assert_eq!(sym.op.derive_antipode().unwrap().s, ap.s_inv, "{}", name);
    }
}

#[test]
fn bi_opposite_swaps_the_counits() {
    for (name, mb) in small_instances() {
        let ap = mb.derive_antipode().unwrap();
        let d = mb.op_co().unwrap().derive_antipode().unwrap();
        assert_eq!(d.eps_b.map, ap.eps_c.map, "{}", name);
        assert_eq!(d.eps_c.map, ap.eps_b.map, "{}", name);
    }
}

#[test]
fn co_opposite_of_co_opposite_has_the_original_antipode() {
    let mb = crossed_shift(2);
    let ap = mb.derive_antipode().unwrap();
    let back = mb.co().unwrap().co().unwrap();
    assert_eq!(back.derive_antipode().unwrap().s, ap.s);
}

fn star_suite() -> Vec<(String, MultiplierBialgebroid<GaussianRational>, StarStructure<GaussianRational>)> {
    let mut v = Vec::new();
    for k in [2, 3] {
        let g = FiniteGroupoid::pair(k);
        v.push((format!("fn pair{}", k), function_algebroid(&g).unwrap(), function_star(&g)));
        v.push((format!("conv pair{}", k), convolution_algebroid(&g).unwrap(), convolution_star(&g)));
    }
    let g = FiniteGroupoid::cyclic(3);
    v.push((String::from("conv Z3"), convolution_algebroid(&g).unwrap(), convolution_star(&g)));
    v
}

#[test]
fn star_structures_pass() {
    for (name, mb, star) in star_suite() {
        let ap = mb.derive_antipode().unwrap();
        let entries = mb.check_star(&star, Some(&ap)).unwrap();
        assert_eq!(entries.len(), 4);
        for e in entries {
            assert!(e.status.is_pass(), "{} {}: {:?}", name, e.axiom.code(), e.status);
        }
    }
}

#[test]
fn star_without_antipode_skips_the_dependent_checks() {
    let g = FiniteGroupoid::pair(2);
    let mb = function_algebroid::<GaussianRational>(&g).unwrap();
    let entries = mb.check_star(&function_star(&g), None).unwrap();
    let skipped: Vec<AxiomId> = entries.iter().filter(|e| matches!(e.status, Status::Skipped(_))).map(|e| e.axiom).collect();
    assert_eq!(skipped, vec![AxiomId::StCounit, AxiomId::StAntipode]);
}

#[test]
fn star_swapping_objects_fails_involution() {
    let g = FiniteGroupoid::pair(2);
    let mb = function_algebroid::<GaussianRational>(&g).unwrap();
    let mut star = function_star::<GaussianRational>(&g);
    star.star_b = perm_matrix(&[1, 0]);
    let entries = mb.check_star(&star, None).unwrap();
    let inv = entries.iter().find(|e| e.axiom == AxiomId::StInvolution).unwrap();
    assert!(inv.status.is_fail());
}

#[test]
fn negated_star_is_not_anti_multiplicative() {
    let g = FiniteGroupoid::pair(2);
    let mb = convolution_algebroid::<GaussianRational>(&g).unwrap();
    let mut star = convolution_star::<GaussianRational>(&g);
    star.star_a = star.star_a.scale(&GaussianRational::from_i64(-1));
    let entries = mb.check_star(&star, None).unwrap();
    assert!(entries.iter().any(|e| e.status.is_fail()));
}

#[test]
fn star_needs_gaussian_rationals() {
    let g = FiniteGroupoid::pair(2);
    let mb = function_algebroid::<Rational>(&g).unwrap();
    let star = StarStructure { star_a: Matrix::identity(4), star_b: Matrix::identity(2), star_c: Matrix::identity(2) };
    assert!(matches!(mb.check_star(&star, None), Err(Error::FieldMismatch)));
}

#[test]
fn pentagon_follows_from_multiplicativity_and_coassociativity() {
    let mut non_vacuous = 0;
    for (name, mb) in small_instances() {
        let hyp = mb.left.checker().pentagon_hypothesis().unwrap();
        let premises = [AxiomId::LbMult, AxiomId::LbCoassoc].iter().all(|&a| mb.check_axiom(a).is_pass());
        if premises && hyp {
            non_vacuous += 1;
            assert!(mb.check_axiom(AxiomId::LbPentagon).is_pass(), "{}", name);
            assert!(mb.check_axiom(AxiomId::RbPentagon).is_pass(), "{}", name);
        }
    }
    assert!(non_vacuous > 0);
}

#[test]
fn galois_inverses_are_exact_inverses() {
    for (name, mb) in small_instances() {
        let ap = mb.derive_antipode().unwrap();
        assert!(mb.check_galois_inverses(&ap).is_pass(), "{}", name);
        let ts = mb.two_sided();
        let maps = ts.canonical().unwrap();
        for m in [&maps.t_lambda, &maps.t_rho, &maps.lambda_t, &maps.rho_t] {
            let inv = m.inverse().expect("bijective");
            assert!(inv.mul(m).is_identity());
        }
    }
}

#[test]
fn counit_and_antipode_solutions_are_unique() {
    for (name, mb) in small_instances() {
        assert_eq!(mb.left.counit_solution_dim(), 0, "{}", name);
        assert_eq!(mb.right.counit_solution_dim().unwrap(), 0, "{}", name);
        assert_eq!(mb.antipode_solution_dim(), 0, "{}", name);
        assert_eq!(mb.uniqueness_dims().unwrap(), [0, 0, 0], "{}", name);
    }
}

#[test]
fn perturbed_antipode_fails_verification() {
    let mb = convolution_algebroid::<Rational>(&FiniteGroupoid::pair(2)).unwrap();
    let ap = mb.derive_antipode().unwrap();
    let mut bad = ap.clone();
    bad.s = Matrix::identity(mb.dim());
    bad.s_inv = Matrix::identity(mb.dim());
    assert!(mb.verify_antipode(&bad).iter().any(|e| e.status.is_fail()));
    assert!(mb.verify_antipode(&ap).iter().all(|e| e.status.is_pass()));
}
