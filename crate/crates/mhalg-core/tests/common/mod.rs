#![allow(dead_code)]

use mhalg_core::algebra::{make_algebra, Algebra};
use mhalg_core::constructions::{crossed_product_algebroid, cyclic_group_algebra, tensor_algebroid, ActionData, FiniteGroupoid};
use mhalg_core::field::{Field, Rational};
use mhalg_core::hopf::MultiplierBialgebroid;
use mhalg_core::linalg::Matrix;

pub fn q(n: i64) -> Rational {
    Rational::from_integer(n)
}

pub fn groupoid_suite() -> Vec<(&'static str, FiniteGroupoid)> {
    vec![
        ("one-point", FiniteGroupoid::one_point()),
        ("Z2", FiniteGroupoid::cyclic(2)),
        ("Z3", FiniteGroupoid::cyclic(3)),
        ("pair2", FiniteGroupoid::pair(2)),
        ("pair3", FiniteGroupoid::pair(3)),
    ]
}

/// `ℚ[ℤ/n]` with basis `g0, …, g(n-1)`.
pub fn cyclic_algebra<F: Field>(n: usize) -> Algebra<F> {
    let labels = (0..n).map(|k| format!("g{}", k)).collect();
    let constants = (0..n).flat_map(|a| (0..n).map(move |b| (a, b, (a + b) % n, F::one()))).collect();
    let mut unit = vec![F::zero(); n];
    unit[0] = F::one();
    make_algebra(labels, constants, Some(unit)).unwrap()
}

/// `ℚ^k` with its minimal idempotents.
pub fn split_algebra<F: Field>(k: usize) -> Algebra<F> {
    let labels = (0..k).map(|i| format!("p{}", i)).collect();
    make_algebra(labels, (0..k).map(|i| (i, i, i, F::one())).collect(), Some(vec![F::one(); k])).unwrap()
}

/// The matrix sending `e_i` to `e_{perm[i]}`.
pub fn perm_matrix<F: Field>(perm: &[usize]) -> Matrix<F> {
    let n = perm.len();
    Matrix::from_fn(n, n, |r, c| if perm[c] == r { F::one() } else { F::zero() })
}

pub fn cyclic_inverse(n: usize, g: usize) -> usize {
    (n - g) % n
}

/// `C⊗B` with `B = C = ℚ[ℤ/n]` and `S_B = S_C` the inversion.
pub fn tensor_cyclic(n: usize) -> MultiplierBialgebroid<Rational> {
    let b = cyclic_algebra::<Rational>(n);
    let inv: Vec<usize> = (0..n).map(|g| cyclic_inverse(n, g)).collect();
    let s = perm_matrix(&inv);
    tensor_algebroid(&b, &b, &s, &s).unwrap()
}

/// `ℤ/n` acting on `ℚ^n` by cyclic shifts: `g_h ▷ p_i = p_{i+h}` and
/// `p_i ◁ g_h = p_{i-h}`.
pub fn shift_action(n: usize) -> ActionData<Rational> {
    let left = (0..n).map(|h| perm_matrix(&(0..n).map(|i| (i + h) % n).collect::<Vec<_>>())).collect();
    let right = (0..n).map(|h| perm_matrix(&(0..n).map(|i| (i + n - h) % n).collect::<Vec<_>>())).collect();
    ActionData { left, right }
}

/// The crossed product `C⊗ℚ[ℤ/n]⊗B` with `B = C = ℚ^n`, identity
/// anti-isomorphisms and the shift action.
pub fn crossed_shift(n: usize) -> MultiplierBialgebroid<Rational> {
    let b = split_algebra::<Rational>(n);
    let h = cyclic_group_algebra::<Rational>(n).unwrap();
    let id = Matrix::identity(n);
    crossed_product_algebroid(&b, &b, &id, &id, &h, &shift_action(n)).unwrap()
}

/// Applies a basis permutation oracle: column `j` of `m` must be `e_{f(j)}`.
pub fn is_basis_map<F: Field>(m: &Matrix<F>, f: impl Fn(usize) -> Option<usize>) -> bool {
    (0..m.ncols()).all(|j| {
        let expected: Vec<(usize, F)> = f(j).map(|i| vec![(i, F::one())]).unwrap_or_default();
        m.sparse_col(j) == expected
    })
}

/// A disjoint union of components `pair(k) × ℤ/n`, one `(k, n)` per
/// component. Arrows are listed sorted by the keys in `order`.
pub fn product_groupoid(components: &[(usize, usize)], order: &[usize]) -> FiniteGroupoid {
    let mut objects = Vec::new();
    let mut arrows = Vec::new();
    let mut compose = Vec::new();
    for (ci, &(k, n)) in components.iter().enumerate() {
        let obj = |i: usize| format!("c{}o{}", ci, i);
        let arr = |i: usize, j: usize, g: usize| format!("c{}e{}{}g{}", ci, i, j, g);
        for i in 0..k {
            objects.push(obj(i));
        }
        for i in 0..k {
            for j in 0..k {
                for g in 0..n {
                    arrows.push((arr(i, j, g), obj(j), obj(i)));
                    for l in 0..k {
                        for h in 0..n {
                            compose.push((arr(i, j, g), arr(j, l, h), arr(i, l, (g + h) % n)));
                        }
                    }
                }
            }
        }
    }
    let mut keyed: Vec<(usize, (String, String, String))> =
        arrows.into_iter().enumerate().map(|(i, a)| (order.get(i).copied().unwrap_or(i), a)).collect();
    keyed.sort_by_key(|(key, _)| *key);
    let arrows = keyed.into_iter().map(|(_, a)| a).collect();
    FiniteGroupoid::from_tables(objects, arrows, Some(compose), None).unwrap()
}

pub fn composable_pairs(g: &FiniteGroupoid) -> usize {
    let cat = g.category();
    let n = cat.num_arrows();
    (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).filter(|&(a, b)| cat.arrows[a].src == cat.arrows[b].tgt).count()
}
