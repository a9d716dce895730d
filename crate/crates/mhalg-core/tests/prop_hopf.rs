mod common;

use std::sync::Arc;

use common::*;
use mhalg_core::algebra::{make_algebra, Algebra};
use mhalg_core::catalog::AxiomId;
use mhalg_core::constructions::{
    convolution_algebroid, crossed_product_algebroid, cyclic_group_algebra, function_algebroid, tensor_algebroid, ActionData,
    FiniteGroupoid,
};
use mhalg_core::field::Rational;
use mhalg_core::hopf::MultiplierBialgebroid;
use mhalg_core::linalg::{span_dim, Matrix};
use mhalg_core::tensor::{flip_sigma, BalancedTensorSpace};
use proptest::prelude::*;

/// Components `(k, n)` with at most nine arrows in total, and a shuffle.
fn groupoid() -> impl Strategy<Value = FiniteGroupoid> {
    let comp = prop_oneof![Just((1usize, 1usize)), Just((1, 2)), Just((1, 3)), Just((2, 1)), Just((2, 2)), Just((3, 1))];
    prop::collection::vec(comp, 1..=2)
        .prop_filter("at most nine arrows", |cs| cs.iter().map(|(k, n)| k * k * n).sum::<usize>() <= 9)
        .prop_flat_map(|cs| {
            let total: usize = cs.iter().map(|(k, n)| k * k * n).sum();
            (Just(cs), Just((0..total).collect::<Vec<usize>>()).prop_shuffle())
        })
        .prop_map(|(cs, order)| product_groupoid(&cs, &order))
}

fn unit_element(mb: &MultiplierBialgebroid<Rational>) -> Vec<Rational> {
    mb.a.unit().expect("unital").clone()
}

/// The element `ι(x)` of a unital algebra, as `ι(x)·1`.
fn embedded(images: &[mhalg_core::algebra::MultiplierPair<Rational>], x: &[Rational], unit: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); unit.len()];
    for (k, c) in x.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for (i, v) in images[k].left.mul_vec(unit).into_iter().enumerate() {
            out[i] = out[i].clone() + c.clone() * v;
        }
    }
    out
}

fn hopf_invariants(mb: &MultiplierBialgebroid<Rational>) -> Result<(), TestCaseError> {
    let cert = mb.check_regular();
    prop_assert!(cert.is_valid(), "{:?}", cert.failures());
    let ap = mb.derive_antipode().unwrap();
    for e in mb.main_theorem_report(&ap) {
        prop_assert!(e.status.is_pass(), "{}: {:?}", e.axiom.code(), e.status);
    }
    prop_assert_eq!(mb.uniqueness_dims().unwrap(), [0, 0, 0]);
    // ε_B∘S = S_C∘ε_C and ε_C∘S = S_B∘ε_B
    prop_assert_eq!(ap.eps_b.map.mul(&ap.s), mb.s_c.mul(&ap.eps_c.map));
    prop_assert_eq!(ap.eps_c.map.mul(&ap.s), mb.s_b.mul(&ap.eps_b.map));
    prop_assert!(ap.s.mul(&ap.s_inv).is_identity());
    let n = mb.dim();
    for i in 0..n {
        for j in 0..n {
            let lhs = ap.s.mul_sparse(mb.a.product(i, j));
            let rhs = mb.a.mul_sparse(&ap.s.sparse_col(j), &ap.s.sparse_col(i));
            prop_assert_eq!(lhs, rhs);
        }
    }
    let unit = unit_element(mb);
    for x in 0..mb.b().dim() {
        let e = mb.b().basis_vector(x);
        let lhs = ap.s.mul_vec(&embedded(&mb.iota_b.images, &e, &unit));
        let rhs = embedded(&mb.iota_c.images, &mb.s_b.mul_vec(&e), &unit);
        prop_assert_eq!(lhs, rhs, "S∘ι_B = ι_C∘S_B");
    }
    for y in 0..mb.c().dim() {
        let e = mb.c().basis_vector(y);
        let lhs = ap.s.mul_vec(&embedded(&mb.iota_c.images, &e, &unit));
        let rhs = embedded(&mb.iota_b.images, &mb.s_c.mul_vec(&e), &unit);
        prop_assert_eq!(lhs, rhs, "S∘ι_C = ι_B∘S_C");
    }
    Ok(())
}

fn lift_round_trip(mb: &MultiplierBialgebroid<Rational>) -> Result<(), TestCaseError> {
    let lc = mb.left.checker();
    let qst = lc.qst();
    let n = mb.dim();
    let unit = unit_element(mb);
    let deltas: Vec<Matrix<Rational>> = (0..n).map(|a| lc.delta_of(&[(a, Rational::one())]).unwrap()).collect();
    for a in 0..n {
        for b in 0..n {
            let one_b: Vec<(usize, Rational)> =
                unit.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i * n + b, x.clone())).collect();
            let a_one: Vec<(usize, Rational)> =
                unit.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (a * n + i, x.clone())).collect();
            // Δ(a)(1⊗b) = T̃_ρ(a⊗b) and Δ(b)(a⊗1) = T̃_λ(a⊗b)
            prop_assert_eq!(deltas[a].mul_sparse(&qst.project(&one_b)), qst.project(&mb.left.tr.sparse_col(a * n + b)));
            prop_assert_eq!(deltas[b].mul_sparse(&qst.project(&a_one)), qst.project(&mb.left.tl.sparse_col(a * n + b)));
        }
    }
    Ok(())
}

fn tensor_space_invariants(mb: &MultiplierBialgebroid<Rational>) -> Result<(), TestCaseError> {
    let ts = mb.two_sided();
    let spaces: Vec<Arc<BalancedTensorSpace<Rational>>> =
        vec![ts.left_target(), ts.tl_domain(), ts.tr_domain(), ts.right_target(), ts.lt_domain(), ts.rt_domain()];
    for s in &spaces {
        prop_assert_eq!(s.dim() + s.quotient.relation_rank(), s.ambient_dim());
    }
    for s in spaces {
        let there = flip_sigma(&mb.a, s.clone()).unwrap();
        let back = flip_sigma(&mb.a, there.cod.clone()).unwrap();
        prop_assert!(back.compose(&there).map.matrix.is_identity());
        let lift = there.lift.as_ref().unwrap();
        prop_assert_eq!(
            there.map.matrix.mul(&s.quotient.projection().matrix),
            there.cod.quotient.projection().matrix.mul(&lift.matrix)
        );
    }
    Ok(())
}

fn counit_image_is_the_ideal(mb: &MultiplierBialgebroid<Rational>) -> Result<(), TestCaseError> {
    let (eps, _) = mb.left.derive_counit().unwrap();
    let p = mb.b().dim();
    let image: Vec<Vec<Rational>> = (0..mb.dim()).map(|a| eps.map.col(a)).collect();
    let ideals = mb.left.checker().fullness_and_ideals();
    let r = span_dim(p, &image);
    prop_assert_eq!(span_dim(p, &ideals.i_s), r);
    prop_assert_eq!(span_dim(p, &ideals.i_t), r);
    let mut joint = image.clone();
    joint.extend(ideals.i_s.iter().cloned());
    joint.extend(ideals.i_t.iter().cloned());
    prop_assert_eq!(span_dim(p, &joint), r);
    Ok(())
}

fn groupoid_oracles(g: &FiniteGroupoid, mb: &MultiplierBialgebroid<Rational>, conv: bool) -> Result<(), TestCaseError> {
    let cat = g.category();
    let ap = mb.derive_antipode().unwrap();
    let inverse_of = |j: usize| {
        (0..cat.num_arrows()).find(|&k| cat.compose(j, k).is_some_and(|u| cat.is_unit(u)) && cat.compose(k, j).is_some_and(|u| cat.is_unit(u)))
    };
    prop_assert!(is_basis_map(&ap.s, inverse_of));
    if conv {
        prop_assert!(is_basis_map(&ap.eps_b.map, |j| Some(cat.arrows[j].tgt)));
        prop_assert!(is_basis_map(&ap.eps_c.map, |j| Some(cat.arrows[j].src)));
    } else {
        let at_unit = |j: usize| cat.is_unit(j).then(|| cat.arrows[j].src);
        prop_assert!(is_basis_map(&ap.eps_b.map, at_unit));
        prop_assert!(is_basis_map(&ap.eps_c.map, at_unit));
    }
    prop_assert_eq!(mb.two_sided().left_target().dim(), composable_pairs(g));
    prop_assert_eq!(mb.two_sided().right_target().dim(), composable_pairs(g));
    prop_assert!(mb.unitality_report().is_unital());
    Ok(())
}

/// Upper triangular 2×2 matrices with the anti-automorphism swapping the
/// diagonal idempotents.
fn triangular() -> (Algebra<Rational>, Matrix<Rational>) {
    let c = vec![(0, 0, 0, q(1)), (0, 1, 1, q(1)), (1, 2, 1, q(1)), (2, 2, 2, q(1))];
    let a = make_algebra(vec!["e11".into(), "e12".into(), "e22".into()], c, Some(vec![q(1), q(0), q(1)])).unwrap();
    (a, perm_matrix(&[2, 1, 0]))
}

fn tensor_base(k: usize) -> (Algebra<Rational>, Matrix<Rational>) {
    match k {
        0 => (cyclic_algebra(2), Matrix::identity(2)),
        1 => (cyclic_algebra(3), perm_matrix(&[0, 2, 1])),
        2 => (split_algebra(2), Matrix::identity(2)),
        3 => (split_algebra(3), Matrix::identity(3)),
        _ => triangular(),
    }
}

/// The same algebra and anti-automorphism in the basis `f_i = Σ_r p[r][i] e_r`.
fn rebase(a: &Algebra<Rational>, s: &Matrix<Rational>, p: &Matrix<Rational>) -> Option<(Algebra<Rational>, Matrix<Rational>)> {
    let pinv = p.inverse()?;
    let n = a.dim();
    let mut constants = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for (k, x) in pinv.mul_vec(&a.mul(&p.col(i), &p.col(j))).into_iter().enumerate() {
                if !x.is_zero() {
                    constants.push((i, j, k, x));
                }
            }
        }
    }
    let unit = a.unit().map(|u| pinv.mul_vec(u));
    let b = make_algebra((0..n).map(|i| format!("f{}", i)).collect(), constants, unit).unwrap();
    Some((b, pinv.mul(s).mul(p)))
}

fn tensor_input() -> impl Strategy<Value = (Algebra<Rational>, Matrix<Rational>)> {
    (0usize..5).prop_flat_map(|k| {
        let (a, s) = tensor_base(k);
        let n = a.dim();
        prop::collection::vec(-1i64..=1, n * n).prop_map(move |v| {
            let p = Matrix::from_fn(n, n, |r, c| q(v[r * n + c] + if r == c { 2 } else { 0 }));
            rebase(&a, &s, &p).unwrap_or_else(|| (a.clone(), s.clone()))
        })
    })
}

fn tensor_oracles(b: &Algebra<Rational>, s: &Matrix<Rational>, mb: &MultiplierBialgebroid<Rational>) -> Result<(), TestCaseError> {
    let ap = mb.derive_antipode().unwrap();
    let p = b.dim();
    let sinv = s.inverse().unwrap();
    for c in 0..p {
        for bb in 0..p {
            let j = c * p + bb;
            // ε_B(c⊗b) = b S_B⁻¹(c), ε_C(c⊗b) = S_C⁻¹(b) c, S(c⊗b) = S_B(b)⊗S_C(c)
            let eb = b.mul(&b.basis_vector(bb), &sinv.col(c));
            let ec = b.mul(&sinv.col(bb), &b.basis_vector(c));
            prop_assert_eq!(ap.eps_b.map.col(j), eb);
            prop_assert_eq!(ap.eps_c.map.col(j), ec);
            let (sb, sc) = (s.col(bb), s.col(c));
            let expected: Vec<Rational> = (0..p * p).map(|k| sb[k / p].clone() * sc[k % p].clone()).collect();
            prop_assert_eq!(ap.s.col(j), expected);
        }
    }
    Ok(())
}

fn crossed(k: usize, n: usize, shift: bool) -> MultiplierBialgebroid<Rational> {
    let b = split_algebra::<Rational>(k);
    let h = cyclic_group_algebra::<Rational>(n).unwrap();
    let act = if shift { shift_action(n) } else { ActionData::trivial(&h, k, k) };
    let id = Matrix::identity(k);
    crossed_product_algebroid(&b, &b, &id, &id, &h, &act).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn groupoid_function_algebroids(g in groupoid()) {
        let mb = function_algebroid::<Rational>(&g).unwrap();
        groupoid_oracles(&g, &mb, false)?;
        hopf_invariants(&mb)?;
    }

    #[test]
    fn groupoid_convolution_algebroids(g in groupoid()) {
        let mb = convolution_algebroid::<Rational>(&g).unwrap();
        groupoid_oracles(&g, &mb, true)?;
        hopf_invariants(&mb)?;
    }

    #[test]
    fn groupoid_lifts_and_spaces(g in groupoid(), conv in any::<bool>()) {
        let mb = if conv { convolution_algebroid::<Rational>(&g).unwrap() } else { function_algebroid::<Rational>(&g).unwrap() };
        lift_round_trip(&mb)?;
        tensor_space_invariants(&mb)?;
        counit_image_is_the_ideal(&mb)?;
    }

    #[test]
    fn groupoid_symmetries(g in groupoid(), conv in any::<bool>()) {
        let mb = if conv { convolution_algebroid::<Rational>(&g).unwrap() } else { function_algebroid::<Rational>(&g).unwrap() };
        let ap = mb.derive_antipode().unwrap();
        for check in mb.check_symmetries(Some(&ap)) {
            prop_assert!(check.passes(), "{:?}", check);
        }
    }

    #[test]
    fn pentagon_implication(g in groupoid(), conv in any::<bool>()) {
        let mb = if conv { convolution_algebroid::<Rational>(&g).unwrap() } else { function_algebroid::<Rational>(&g).unwrap() };
        let premises = mb.check_axiom(AxiomId::LbMult).is_pass() && mb.check_axiom(AxiomId::LbCoassoc).is_pass();
        if premises && mb.left.checker().pentagon_hypothesis().unwrap() {
            prop_assert!(mb.check_axiom(AxiomId::LbPentagon).is_pass());
            prop_assert!(mb.check_axiom(AxiomId::RbPentagon).is_pass());
        }
    }

    #[test]
    fn tensor_products((b, s) in tensor_input()) {
        let mb = tensor_algebroid(&b, &b, &s, &s).unwrap();
        tensor_oracles(&b, &s, &mb)?;
        hopf_invariants(&mb)?;
        lift_round_trip(&mb)?;
    }

    #[test]
    fn crossed_products(case in prop_oneof![Just((2usize, 2usize, true)), Just((1, 2, false)), Just((1, 3, false)), Just((2, 2, false)), Just((2, 3, false))]) {
        let (k, n, shift) = case;
        let mb = crossed(k, n, shift);
        let ap = mb.derive_antipode().unwrap();
        let sh = |h: usize| if shift { h } else { 0 };
        let split = |j: usize| (j / (n * k), (j / k) % n, j % k);
        let eb_ok = is_basis_map(&ap.eps_b.map, |j| {
            let (c, h, b) = split(j);
            ((b + sh(h)) % k == c).then_some(c)
        });
        let ec_ok = is_basis_map(&ap.eps_c.map, |j| {
            let (c, h, b) = split(j);
            ((c + k - sh(h) % k) % k == b).then_some(b)
        });
        let s_ok = is_basis_map(&ap.s, |j| {
            let (c, h, b) = split(j);
            Some((b * n + (n - h) % n) * k + c)
        });
        prop_assert!(eb_ok && ec_ok && s_ok);
        hopf_invariants(&mb)?;
    }
}
