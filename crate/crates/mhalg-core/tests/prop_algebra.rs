mod common;

use common::*;
use mhalg_core::algebra::{check_a1, make_algebra, module_from_embedding, multiplier_algebra, Algebra, DecKind, MultiplierPair};
use mhalg_core::constructions::{convolution_algebroid, function_algebroid};
use mhalg_core::error::Error;
use mhalg_core::field::Rational;
use mhalg_core::linalg::{dense_from_sparse, in_span, Matrix};
use proptest::prelude::*;

/// Upper triangular 2×2 matrices on `e11, e12, e22`.
fn triangular() -> Algebra<Rational> {
    let c = vec![(0, 0, 0, q(1)), (0, 1, 1, q(1)), (1, 2, 1, q(1)), (2, 2, 2, q(1))];
    make_algebra(vec!["e11".into(), "e12".into(), "e22".into()], c, Some(vec![q(1), q(0), q(1)])).unwrap()
}

/// `M_2(ℚ)` on `e11, e12, e21, e22`.
fn matrix_algebra() -> Algebra<Rational> {
    let idx = |i: usize, j: usize| i * 2 + j;
    let mut c = Vec::new();
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                c.push((idx(i, j), idx(j, k), idx(i, k), q(1)));
            }
        }
    }
    let labels = vec!["e11".into(), "e12".into(), "e21".into(), "e22".into()];
    make_algebra(labels, c, Some(vec![q(1), q(0), q(0), q(1)])).unwrap()
}

fn family(k: usize) -> Algebra<Rational> {
    match k {
        0 => cyclic_algebra(1),
        1 => cyclic_algebra(2),
        2 => cyclic_algebra(3),
        3 => split_algebra(2),
        4 => split_algebra(3),
        5 => triangular(),
        _ => matrix_algebra(),
    }
}

/// The same algebra in the basis `f_i = Σ_r p[r][i] e_r`.
fn rebase(a: &Algebra<Rational>, p: &Matrix<Rational>) -> Option<Algebra<Rational>> {
    let pinv = p.inverse()?;
    let n = a.dim();
    let mut constants = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let prod = a.mul(&p.col(i), &p.col(j));
            for (k, x) in pinv.mul_vec(&prod).into_iter().enumerate() {
                if !x.is_zero() {
                    constants.push((i, j, k, x));
                }
            }
        }
    }
    let unit = a.unit().map(|u| pinv.mul_vec(u));
    let labels = (0..n).map(|i| format!("f{}", i)).collect();
    Some(make_algebra(labels, constants, unit).unwrap())
}

fn algebra() -> impl Strategy<Value = Algebra<Rational>> {
    (0usize..7).prop_flat_map(|k| {
        let a = family(k);
        let n = a.dim();
        prop::collection::vec(-2i64..=2, n * n).prop_map(move |v| {
            let p = Matrix::from_fn(n, n, |r, c| q(v[r * n + c] + if r == c { 3 } else { 0 }));
            rebase(&a, &p).unwrap_or_else(|| a.clone())
        })
    })
}

fn basis(n: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    v[i] = Rational::one();
    v
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn structure_constants_are_associative(a in algebra()) {
        let n = a.dim();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let l = a.mul(&a.mul(&basis(n, i), &basis(n, j)), &basis(n, k));
                    let r = a.mul(&basis(n, i), &a.mul(&basis(n, j), &basis(n, k)));
                    prop_assert_eq!(l, r);
                }
            }
        }
    }

    #[test]
    fn unit_acts_as_identity(a in algebra()) {
        let n = a.dim();
        let u = a.find_unit().expect("unital family");
        for i in 0..n {
            prop_assert_eq!(a.mul(&u, &basis(n, i)), basis(n, i));
            prop_assert_eq!(a.mul(&basis(n, i), &u), basis(n, i));
        }
        prop_assert!(check_a1(&a).passes());
    }

    #[test]
    fn multipliers_are_compatible_pairs(a in algebra()) {
        let n = a.dim();
        let m = multiplier_algebra(&a).unwrap();
        prop_assert_eq!(m.len(), n);
        for pair in &m {
            for i in 0..n {
                for j in 0..n {
                    let lhs = a.mul(&basis(n, i), &pair.left.col(j));
                    let rhs = a.mul(&pair.right.col(i), &basis(n, j));
                    prop_assert_eq!(lhs, rhs);
                }
            }
        }
        let span: Vec<Vec<Rational>> = m.iter().map(|p| p.vectorize()).collect();
        for i in 0..n {
            prop_assert!(in_span(&span, &MultiplierPair::of_basis(&a, i).vectorize()));
        }
    }

    #[test]
    fn canonical_map_into_multipliers_is_injective(a in algebra()) {
        let n = a.dim();
        let images: Vec<Vec<Rational>> = (0..n).map(|i| MultiplierPair::of_basis(&a, i).vectorize()).collect();
        prop_assert_eq!(mhalg_core::linalg::span_dim(images[0].len(), &images), n);
    }

    #[test]
    fn opposite_reverses_products(a in algebra()) {
        let op = a.opposite();
        let n = a.dim();
        for i in 0..n {
            for j in 0..n {
                prop_assert_eq!(op.product(i, j), a.product(j, i));
            }
        }
    }

    #[test]
    fn tensor_algebra_multiplies_componentwise(a in algebra(), b in algebra()) {
        let t = a.tensor(&b);
        let (n, m) = (a.dim(), b.dim());
        prop_assume!(n * m <= 16);
        for i in 0..n * m {
            for j in 0..n * m {
                let (ai, bi, aj, bj) = (i / m, i % m, j / m, j % m);
                let x = dense_from_sparse(a.product(ai, aj), n);
                let y = dense_from_sparse(b.product(bi, bj), m);
                let expected: Vec<Rational> = (0..n * m).map(|k| x[k / m].clone() * y[k % m].clone()).collect();
                prop_assert_eq!(dense_from_sparse(t.product(i, j), n * m), expected);
            }
        }
    }

    #[test]
    fn non_associative_constants_are_rejected(i in 0usize..2, j in 0usize..2) {
        // ℚ×ℚ with one product moved to the wrong idempotent
        let mut c = vec![(0, 0, 0, q(1)), (1, 1, 1, q(1))];
        c.push((i, j, if i == j { 1 - i } else { i }, q(1)));
        let r = make_algebra::<Rational>(vec!["p".into(), "q".into()], c, None);
        prop_assert!(matches!(r, Err(Error::NotAssociative { .. })), "{:?}", r.err());
    }

    #[test]
    fn decorated_module_actions_respect_base_products(k in 1usize..=3, conv in any::<bool>()) {
        let g = mhalg_core::constructions::FiniteGroupoid::pair(k);
        let mb = if conv { convolution_algebroid::<Rational>(&g).unwrap() } else { function_algebroid::<Rational>(&g).unwrap() };
        for kind in [DecKind::LowerLeft, DecKind::LowerRight] {
            let module = module_from_embedding(&mb.iota_b, kind, "B").unwrap();
            let base = &module.base;
            for x in 0..base.dim() {
                for y in 0..base.dim() {
                    let xy = module.action_of_sparse(base.product(x, y));
                    let composed = match kind {
                        DecKind::LowerLeft => module.action[x].mul(&module.action[y]),
                        _ => module.action[y].mul(&module.action[x]),
                    };
                    prop_assert_eq!(xy, composed);
                }
            }
        }
    }
}

#[test]
fn zero_product_algebra_has_no_multiplier_algebra() {
    let a = make_algebra::<Rational>(vec!["x".into(), "y".into()], vec![], None).unwrap();
    assert!(!check_a1(&a).passes());
    assert!(matches!(multiplier_algebra(&a), Err(Error::A1Violated(_))));
}

#[test]
fn empty_algebra_is_rejected() {
    assert!(make_algebra::<Rational>(vec![], vec![], None).is_err());
}

#[test]
fn anti_decorations_need_anti_embeddings() {
    let g = mhalg_core::constructions::FiniteGroupoid::pair(2);
    let mb = function_algebroid::<Rational>(&g).unwrap();
    assert!(matches!(module_from_embedding(&mb.iota_b, DecKind::UpperRight, "B"), Err(Error::DecorationMismatch(_))));
}
