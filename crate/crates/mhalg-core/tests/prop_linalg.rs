use mhalg_core::field::{Field, GaussianRational, Rational};
use mhalg_core::linalg::{
    descend_map, image_basis, in_span, is_bijective, kernel_basis, make_quotient, solve, span_dim, LabeledSpace, LinMap, Matrix,
};
use proptest::prelude::*;

fn q(n: i64) -> Rational {
    Rational::from_integer(n)
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix<Rational>> {
    prop::collection::vec(-3i64..=3, rows * cols).prop_map(move |v| Matrix::from_fn(rows, cols, |r, c| q(v[r * cols + c])))
}

fn any_matrix() -> impl Strategy<Value = Matrix<Rational>> {
    (1usize..=5, 1usize..=5).prop_flat_map(|(r, c)| matrix(r, c))
}

fn vectors(n: usize, max: usize) -> impl Strategy<Value = Vec<Vec<Rational>>> {
    prop::collection::vec(prop::collection::vec((-2i64..=2).prop_map(q), n), 0..=max)
}

fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=9).prop_map(|(p, d)| Rational::new(p, d))
}

fn gaussian() -> impl Strategy<Value = GaussianRational> {
    (rational(), rational()).prop_map(|(re, im)| GaussianRational::new(re, im))
}

proptest! {
    #[test]
    fn rational_field_axioms(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!((a.clone() + b.clone()) + c.clone(), a.clone() + (b.clone() + c.clone()));
        prop_assert_eq!(a.clone() * (b.clone() + c.clone()), a.clone() * b.clone() + a.clone() * c.clone());
        prop_assert_eq!(a.clone() * b.clone(), b.clone() * a.clone());
        if !a.is_zero() {
            prop_assert_eq!(a.clone() * a.inv().unwrap(), Rational::one());
        }
    }

    #[test]
    fn rational_text_round_trip(a in rational()) {
        let s = a.to_fraction_string();
        let (_, d) = s.split_once('/').unwrap();
        prop_assert!(d.parse::<i64>().unwrap() > 0);
        prop_assert_eq!(s.parse::<Rational>().unwrap(), a);
    }

    #[test]
    fn gaussian_field_axioms(a in gaussian(), b in gaussian()) {
        prop_assert_eq!(a.clone() * b.clone(), b.clone() * a.clone());
        prop_assert_eq!((a.clone() * b.clone()).conj(), a.conj() * b.conj());
        prop_assert_eq!(a.conj().conj(), a.clone());
        if !a.is_zero() {
            prop_assert_eq!(a.clone() * a.inv().unwrap(), GaussianRational::one());
        }
    }

    #[test]
    fn kernel_vectors_are_independent_solutions(m in any_matrix()) {
        let k = kernel_basis(&m);
        for v in &k {
            prop_assert!(m.mul_vec(v).iter().all(|x| x.is_zero()));
        }
        prop_assert_eq!(span_dim(m.ncols(), &k), k.len());
        prop_assert_eq!(k.len() + m.rank(), m.ncols());
        prop_assert_eq!(image_basis(&m).len(), m.rank());
    }

    #[test]
    fn rank_is_transpose_invariant(m in any_matrix()) {
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn solve_finds_preimages(m in any_matrix(), x in prop::collection::vec(-3i64..=3, 5)) {
        let x: Vec<Rational> = x.into_iter().take(m.ncols()).map(q).collect();
        let b = m.mul_vec(&x);
        let y = solve(&m, &b).expect("b is in the image");
        prop_assert_eq!(m.mul_vec(&y), b);
    }

    #[test]
    fn inverse_is_two_sided(m in (1usize..=4).prop_flat_map(|n| matrix(n, n))) {
        match m.inverse() {
            Some(inv) => {
                prop_assert!(m.mul(&inv).is_identity());
                prop_assert!(inv.mul(&m).is_identity());
            }
            None => prop_assert!(m.rank() < m.nrows()),
        }
    }

    #[test]
    fn bijective_iff_trivial_kernel_and_equal_dims(m in any_matrix()) {
        let f = LinMap::new(LabeledSpace::numbered("x", m.ncols()), LabeledSpace::numbered("y", m.nrows()), m.clone());
        let expected = kernel_basis(&m).is_empty() && m.nrows() == m.ncols();
        prop_assert_eq!(is_bijective(&f), expected);
    }

    #[test]
    fn quotient_projection_and_section(
        (n, rels) in (1usize..=6).prop_flat_map(|n| (Just(n), vectors(n, 4)))
    ) {
        let qs = make_quotient(LabeledSpace::numbered("e", n), &rels);
        let p = qs.projection().matrix;
        let s = qs.section().matrix;
        prop_assert!(p.mul(&s).is_identity());
        for r in &rels {
            prop_assert!(p.mul_vec(r).iter().all(|x| x.is_zero()));
        }
        prop_assert_eq!(qs.dim(), n - span_dim(n, &rels));
        for r in &rels {
            prop_assert!(in_span(&qs.relations().iter().map(|v| mhalg_core::linalg::dense_from_sparse(v, n)).collect::<Vec<_>>(), r));
        }
    }

    #[test]
    fn descended_maps_commute_with_projections(
        (n, m, rels, extra, f) in (1usize..=5, 1usize..=5).prop_flat_map(|(n, m)| {
            (Just(n), Just(m), vectors(n, 3), vectors(m, 2), matrix(m, n))
        })
    ) {
        let dom = make_quotient(LabeledSpace::numbered("e", n), &rels);
        let mut cod_rels: Vec<Vec<Rational>> = rels.iter().map(|r| f.mul_vec(r)).collect();
        cod_rels.extend(extra);
        let cod = make_quotient(LabeledSpace::numbered("f", m), &cod_rels);
        let map = LinMap::new(LabeledSpace::numbered("e", n), LabeledSpace::numbered("f", m), f.clone());
        let g = descend_map(&map, &dom, &cod).expect("relations map into relations");
        prop_assert_eq!(g.matrix.mul(&dom.projection().matrix), cod.projection().matrix.mul(&f));
    }

    #[test]
    fn descend_rejects_maps_that_break_relations(n in 2usize..=5) {
        let mut r = vec![Rational::zero(); n];
        r[0] = q(1);
        let dom = make_quotient(LabeledSpace::numbered("e", n), &[r]);
        let cod = make_quotient::<Rational>(LabeledSpace::numbered("e", n), &[]);
        let id = LinMap::identity(LabeledSpace::numbered("e", n));
        prop_assert!(descend_map(&id, &dom, &cod).is_err());
    }

    #[test]
    fn kron_is_multiplicative(a in matrix(2, 2), b in matrix(2, 2), c in matrix(2, 2), d in matrix(2, 2)) {
        prop_assert_eq!(a.kron(&b).mul(&c.kron(&d)), a.mul(&c).kron(&b.mul(&d)));
    }
}
