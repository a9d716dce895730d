//! The function and convolution algebroids of a finite groupoid.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::groupoid::{FiniteCategory, FiniteGroupoid};
use crate::algebra::{make_algebra, make_base_embedding, Algebra, EmbeddingKind, MultiplierPair};
use crate::error::Result;
use crate::field::Field;
use crate::hopf::{MultiplierBialgebroid, StarStructure};
use crate::linalg::Matrix;

/// Builds an `n² × n²` lift from a list of `(column, row)` unit entries.
pub(crate) fn lift_from_pairs<F: Field>(n: usize, entries: impl IntoIterator<Item = (usize, usize)>) -> Matrix<F> {
    let mut m: Matrix<F> = Matrix::zeros(n * n, n * n);
    for (col, row) in entries {
        let v = m.get(row, col).clone() + F::one();
        m.set(row, col, v);
    }
    m
}

fn objects_algebra<F: Field>(cat: &FiniteCategory) -> Result<Algebra<F>> {
    let p = cat.num_objects();
    let constants = (0..p).map(|u| (u, u, u, F::one())).collect();
    make_algebra(cat.objects.clone(), constants, Some(vec![F::one(); p]))
}

fn diagonal<F: Field>(n: usize, f: impl Fn(usize) -> bool) -> Matrix<F> {
    Matrix::from_fn(n, n, |r, c| if r == c && f(r) { F::one() } else { F::zero() })
}

/// Functions on the arrows of a finite category with pointwise product and
/// the comultiplication dual to composition. For a category that is not a
/// groupoid the result is a multiplier bialgebroid whose canonical maps fail
/// to be bijective.
pub fn function_algebroid_of_category<F: Field>(cat: &FiniteCategory) -> Result<MultiplierBialgebroid<F>> {
    let n = cat.num_arrows();
    let labels: Vec<String> = cat.arrows.iter().map(|a| a.id.clone()).collect();
    let a = make_algebra(labels, (0..n).map(|g| (g, g, g, F::one())).collect(), Some(vec![F::one(); n]))?;
    let base = objects_algebra::<F>(cat)?;
    let p = base.dim();
    let pull = |by_src: bool| -> Vec<MultiplierPair<F>> {
        (0..p)
            .map(|u| {
                let d = diagonal(n, |g| if by_src { cat.src(g) == u } else { cat.tgt(g) == u });
                MultiplierPair::new(d.clone(), d)
            })
            .collect()
    };
    let iota_b = make_base_embedding(&a, &base, pull(true), EmbeddingKind::Homomorphism)?;
    let iota_c = make_base_embedding(&a, &base, pull(false), EmbeddingKind::Homomorphism)?;
    // T̃_λ(δ_α⊗δ_β) = Σ_{αγ=β} δ_α⊗δ_γ and T̃_ρ(δ_α⊗δ_β) = Σ_{γβ=α} δ_γ⊗δ_β.
    let mut tl = Vec::new();
    let mut tr = Vec::new();
    for (g, h) in cat.composable_pairs() {
        let k = cat.compose(g, h).expect("composable");
        tl.push((g * n + k, g * n + h));
        tr.push((k * n + h, g * n + h));
    }
    let tl: Matrix<F> = lift_from_pairs(n, tl);
    let tr: Matrix<F> = lift_from_pairs(n, tr);
    MultiplierBialgebroid::certified(&a, iota_b, iota_c, Matrix::identity(p), Matrix::identity(p), tl.clone(), tr.clone(), tl, tr)
}

/// The function algebroid of a finite groupoid: `A = C(G)`, `B = s*C(G⁰)`,
/// `C = t*C(G⁰)` with `S_B` and `S_C` mapping `s*(f)` to `t*(f)` and back.
pub fn function_algebroid<F: Field>(g: &FiniteGroupoid) -> Result<MultiplierBialgebroid<F>> {
    function_algebroid_of_category(g.category())
}

/// The convolution algebroid of a finite groupoid: `δ_α * δ_β = δ_{αβ}`,
/// `B = C = C(G⁰)` embedded through the identity arrows.
///
/// The derived counits sum over fibres of the target and the source map:
/// `ε_B(f)(u) = Σ_{t(γ)=u} f(γ)` and `ε_C(f)(u) = Σ_{s(γ)=u} f(γ)`.
pub fn convolution_algebroid<F: Field>(g: &FiniteGroupoid) -> Result<MultiplierBialgebroid<F>> {
    let cat = g.category();
    let n = cat.num_arrows();
    let labels: Vec<String> = cat.arrows.iter().map(|a| a.id.clone()).collect();
    let constants = cat.composable_pairs().into_iter().map(|(x, y)| (x, y, cat.compose(x, y).expect("composable"), F::one())).collect();
    let mut unit = vec![F::zero(); n];
    for &e in &cat.units {
        unit[e] = F::one();
    }
    let a = make_algebra(labels, constants, Some(unit))?;
    let base = objects_algebra::<F>(cat)?;
    let images: Vec<MultiplierPair<F>> = cat.units.iter().map(|&e| MultiplierPair::of_basis(&a, e)).collect();
    let iota_b = make_base_embedding(&a, &base, images.clone(), EmbeddingKind::Homomorphism)?;
    let iota_c = make_base_embedding(&a, &base, images, EmbeddingKind::Homomorphism)?;
    let (mut tl, mut tr, mut lt, mut rt) = (Vec::new(), Vec::new(), Vec::new(), Vec::new());
    for x in 0..n {
        for y in 0..n {
            let col = x * n + y;
            // T̃_λ(δ_α⊗δ_β) = δ_{βα}⊗δ_β and ρT̃(δ_α⊗δ_β) = δ_α⊗δ_{βα}.
            if let Some(yx) = cat.compose(y, x) {
                tl.push((col, yx * n + y));
                rt.push((col, x * n + yx));
            }
            // T̃_ρ(δ_α⊗δ_β) = δ_α⊗δ_{αβ} and λT̃(δ_α⊗δ_β) = δ_{αβ}⊗δ_β.
            if let Some(xy) = cat.compose(x, y) {
                tr.push((col, x * n + xy));
                lt.push((col, xy * n + y));
            }
        }
    }
    let p = base.dim();
    MultiplierBialgebroid::certified(
        &a,
        iota_b,
        iota_c,
        Matrix::identity(p),
        Matrix::identity(p),
        lift_from_pairs(n, tl),
        lift_from_pairs(n, tr),
        lift_from_pairs(n, lt),
        lift_from_pairs(n, rt),
    )
}

/// Pointwise conjugation on the function algebroid.
pub fn function_star<F: Field>(g: &FiniteGroupoid) -> StarStructure<F> {
    let (n, p) = (g.category().num_arrows(), g.category().num_objects());
    StarStructure { star_a: Matrix::identity(n), star_b: Matrix::identity(p), star_c: Matrix::identity(p) }
}

/// `f*(γ) = conj f(γ⁻¹)` on the convolution algebroid.
pub fn convolution_star<F: Field>(g: &FiniteGroupoid) -> StarStructure<F> {
    let (n, p) = (g.category().num_arrows(), g.category().num_objects());
    let star_a = Matrix::from_fn(n, n, |r, c| if r == g.inverse(c) { F::one() } else { F::zero() });
    StarStructure { star_a, star_b: Matrix::identity(p), star_c: Matrix::identity(p) }
}

/// The transpose of inversion, `δ_γ ↦ δ_{γ⁻¹}`.
pub fn inversion_matrix<F: Field>(g: &FiniteGroupoid) -> Matrix<F> {
    let n = g.category().num_arrows();
    Matrix::from_fn(n, n, |r, c| if r == g.inverse(c) { F::one() } else { F::zero() })
}

