//! The tensor product `C⊗B` and the two-sided crossed product `C⊗H⊗B`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::fin_hopf::FinHopf;
use crate::algebra::{check_a1, make_algebra, make_base_embedding, Algebra, EmbeddingKind, MultiplierPair};
use crate::error::{Error, Result, Witness};
use crate::field::Field;
use crate::hopf::MultiplierBialgebroid;
use crate::linalg::{acc_finish, acc_scaled, sparse_from_dense, Matrix, SVec};

/// A left action of `H` on `C` and a right action of `H` on `B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActionData<F> {
    /// `left[h]` is the matrix of `c ↦ h▷c`.
    pub left: Vec<Matrix<F>>,
    /// `right[h]` is the matrix of `b ↦ b◁h`.
    pub right: Vec<Matrix<F>>,
}

impl<F: Field> ActionData<F> {
    /// `H` acts trivially through its counit.
    pub fn trivial(h: &FinHopf<F>, dim_b: usize, dim_c: usize) -> Self {
        let scaled = |n: usize, k: usize| Matrix::identity(n).scale(&h.eps(&[(k, F::one())]));
        ActionData { left: (0..h.dim()).map(|k| scaled(dim_c, k)).collect(), right: (0..h.dim()).map(|k| scaled(dim_b, k)).collect() }
    }

    fn left_of(&self, h: &[(usize, F)], n: usize) -> Matrix<F> {
        sum_of(&self.left, h, n)
    }

    fn right_of(&self, h: &[(usize, F)], n: usize) -> Matrix<F> {
        sum_of(&self.right, h, n)
    }
}

fn sum_of<F: Field>(ms: &[Matrix<F>], h: &[(usize, F)], n: usize) -> Matrix<F> {
    let mut m = Matrix::zeros(n, n);
    for (k, c) in h {
        m = m.add(&ms[*k].scale(c));
    }
    m
}

fn invalid(condition: &str, msg: impl Into<String>, tuple: Vec<String>) -> Error {
    Error::ActionInvalid { condition: String::from(condition), witness: Witness::new(msg, tuple) }
}

fn base_ok<F: Field>(alg: &Algebra<F>, name: &str) -> Result<Vec<F>> {
    if !check_a1(alg).passes() {
        return Err(Error::A1Violated(format!("{} is not idempotent and non-degenerate", name)));
    }
    alg.find_unit().ok_or_else(|| Error::BaseNotUnital(format!("{} has no unit", name)))
}

fn anti_iso<F: Field>(s: &Matrix<F>, from: &Algebra<F>, to: &Algebra<F>, name: &str) -> Result<()> {
    if s.nrows() != to.dim() || s.ncols() != from.dim() {
        return Err(Error::ShapeMismatch(format!("{} has the wrong shape", name)));
    }
    if s.inverse().is_none() {
        return Err(Error::NotBijective(String::from(name)));
    }
    for i in 0..from.dim() {
        for j in 0..from.dim() {
            if s.mul_sparse(from.product(i, j)) != to.mul_sparse(&s.sparse_col(j), &s.sparse_col(i)) {
                return Err(Error::AxiomFailed {
                    axiom: crate::catalog::AxiomId::MbBases,
                    witness: Witness::new(
                        format!("{} is not anti-multiplicative", name),
                        vec![String::from(from.label(i)), String::from(from.label(j))],
                    ),
                });
            }
        }
    }
    Ok(())
}

/// Coordinates of `C⊗H⊗B` with `H` possibly trivial.
struct Triple {
    pc: usize,
    ph: usize,
    pb: usize,
}

impl Triple {
    fn index(&self, c: usize, h: usize, b: usize) -> usize {
        (c * self.ph + h) * self.pb + b
    }

    fn split(&self, i: usize) -> (usize, usize, usize) {
        (i / (self.ph * self.pb), (i / self.pb) % self.ph, i % self.pb)
    }

    fn elem<F: Field>(&self, c: &[(usize, F)], h: &[(usize, F)], b: &[(usize, F)]) -> SVec<F> {
        let mut acc = BTreeMap::new();
        for (ci, cc) in c {
            for (hi, hc) in h {
                for (bi, bc) in b {
                    crate::linalg::acc_add(&mut acc, self.index(*ci, *hi, *bi), cc.clone() * hc * bc);
                }
            }
        }
        acc_finish(acc)
    }
}

/// `Σ_k x_k ⊗ y_k` as a column of `A⊗A`.
fn pair_vec<F: Field>(n: usize, x: &[(usize, F)], y: &[(usize, F)], acc: &mut BTreeMap<usize, F>, scale: &F) {
    for (i, a) in x {
        for (j, b) in y {
            crate::linalg::acc_add(acc, i * n + j, a.clone() * b * scale);
        }
    }
}

/// The tensor product algebra `A = C⊗B` with `Δ_B(c⊗b)(a⊗a′) = ca⊗ba′` and
/// `(a⊗a′)Δ_C(c⊗b) = ac⊗a′b`. Basis element `c⊗b` has index `c·dim B + b`.
pub fn tensor_algebroid<F: Field>(b: &Algebra<F>, c: &Algebra<F>, s_b: &Matrix<F>, s_c: &Matrix<F>) -> Result<MultiplierBialgebroid<F>> {
    let unit_b = base_ok(b, "B")?;
    let unit_c = base_ok(c, "C")?;
    anti_iso(s_b, b, c, "S_B")?;
    anti_iso(s_c, c, b, "S_C")?;
    let t = Triple { pc: c.dim(), ph: 1, pb: b.dim() };
    let n = t.pc * t.pb;
    let mut labels = Vec::with_capacity(n);
    let mut constants = Vec::new();
    for i in 0..n {
        let (ci, _, bi) = t.split(i);
        labels.push(format!("{}⊗{}", c.label(ci), b.label(bi)));
        for j in 0..n {
            let (cj, _, bj) = t.split(j);
            for (k, v) in t.elem(c.product(ci, cj), &[(0, F::one())], b.product(bi, bj)) {
                constants.push((i, j, k, v));
            }
        }
    }
    let unit = dense(n, &t.elem(&sparse_from_dense(&unit_c), &[(0, F::one())], &sparse_from_dense(&unit_b)));
    let a = make_algebra(labels, constants, Some(unit))?;
    let one_b = sparse_from_dense(&unit_b);
    let one_c = sparse_from_dense(&unit_c);
    let h1 = [(0, F::one())];
    let embed = |x: SVec<F>| MultiplierPair::of_element(&a, &dense(n, &x));
    let iota_b = make_base_embedding(&a, b, (0..t.pb).map(|x| embed(t.elem(&one_c, &h1, &[(x, F::one())]))).collect(), EmbeddingKind::Homomorphism)?;
    let iota_c = make_base_embedding(&a, c, (0..t.pc).map(|y| embed(t.elem(&[(y, F::one())], &h1, &one_b))).collect(), EmbeddingKind::Homomorphism)?;
    let c_part = |ci: usize| t.elem(&[(ci, F::one())], &h1, &one_b);
    let b_part = |bi: usize| t.elem(&one_c, &h1, &[(bi, F::one())]);
    let lifts = build_lifts(&a, &t, |x| vec![(c_part(t.split(x).0), b_part(t.split(x).2), F::one())]);
    MultiplierBialgebroid::certified(&a, iota_b, iota_c, s_b.clone(), s_c.clone(), lifts.0, lifts.1, lifts.2, lifts.3)
}

fn dense<F: Field>(n: usize, v: &[(usize, F)]) -> Vec<F> {
    crate::linalg::dense_from_sparse(v, n)
}

/// Builds `(T̃_λ, T̃_ρ, λT̃, ρT̃)` from a splitting `x = Σ l_k r_k` of each
/// basis element with `Δ_B(x)(a⊗a′) = Σ l_k a ⊗ r_k a′` and
/// `(a⊗a′)Δ_C(x) = Σ a l_k ⊗ a′ r_k`.
#[allow(clippy::type_complexity)]
fn build_lifts<F: Field>(
    a: &Algebra<F>,
    t: &Triple,
    legs: impl Fn(usize) -> Vec<(SVec<F>, SVec<F>, F)>,
) -> (Matrix<F>, Matrix<F>, Matrix<F>, Matrix<F>) {
    let n = t.pc * t.ph * t.pb;
    let split: Vec<Vec<(SVec<F>, SVec<F>, F)>> = (0..n).map(&legs).collect();
    let mut cols: [Vec<SVec<F>>; 4] = [Vec::new(), Vec::new(), Vec::new(), Vec::new()];
    for i in 0..n {
        let e_i = [(i, F::one())];
        for j in 0..n {
            let e_j = [(j, F::one())];
            let mut acc: [BTreeMap<usize, F>; 4] = Default::default();
            // T̃_λ(e_i⊗e_j) = Δ_B(e_j)(e_i⊗1), λT̃(e_i⊗e_j) = (e_i⊗1)Δ_C(e_j).
            for (l, r, s) in &split[j] {
                pair_vec(n, &a.mul_sparse(l, &e_i), r, &mut acc[0], s);
                pair_vec(n, &a.mul_sparse(&e_i, l), r, &mut acc[2], s);
            }
            // T̃_ρ(e_i⊗e_j) = Δ_B(e_i)(1⊗e_j), ρT̃(e_i⊗e_j) = (1⊗e_j)Δ_C(e_i).
            for (l, r, s) in &split[i] {
                pair_vec(n, l, &a.mul_sparse(r, &e_j), &mut acc[1], s);
                pair_vec(n, l, &a.mul_sparse(&e_j, r), &mut acc[3], s);
            }
            for (k, m) in acc.into_iter().enumerate() {
                cols[k].push(acc_finish(m));
            }
        }
    }
    let [a0, a1, a2, a3] = cols;
    let mk = |c: Vec<SVec<F>>| Matrix::from_sparse_cols(n * n, &c);
    (mk(a0), mk(a1), mk(a2), mk(a3))
}

/// Checks that `act` is a pair of unital module-algebra actions compatible
/// with the antipodes.
pub fn check_action<F: Field>(
    b: &Algebra<F>,
    c: &Algebra<F>,
    s_b: &Matrix<F>,
    s_c: &Matrix<F>,
    h: &FinHopf<F>,
    act: &ActionData<F>,
) -> Result<()> {
    let (pb, pc, ph) = (b.dim(), c.dim(), h.dim());
    if act.left.len() != ph || act.right.len() != ph {
        return Err(Error::ShapeMismatch(String::from("one action matrix per basis element of H is required")));
    }
    if act.left.iter().any(|m| m.nrows() != pc || m.ncols() != pc) || act.right.iter().any(|m| m.nrows() != pb || m.ncols() != pb) {
        return Err(Error::ShapeMismatch(String::from("action matrices have the wrong shape")));
    }
    let hl = |k: usize| String::from(h.algebra.label(k));
    let unit_h = sparse_from_dense(&h.unit());
    if !act.left_of(&unit_h, pc).is_identity() {
        return Err(invalid("unital", "1▷c = c fails", vec![]));
    }
    if !act.right_of(&unit_h, pb).is_identity() {
        return Err(invalid("unital", "b◁1 = b fails", vec![]));
    }
    for k in 0..ph {
        for l in 0..ph {
            let kl = h.algebra.product(k, l);
            if act.left_of(kl, pc) != act.left[k].mul(&act.left[l]) {
                return Err(invalid("module", "(hh′)▷c = h▷(h′▷c) fails", vec![hl(k), hl(l)]));
            }
            if act.right_of(kl, pb) != act.right[l].mul(&act.right[k]) {
                return Err(invalid("module", "b◁(hh′) = (b◁h)◁h′ fails", vec![hl(k), hl(l)]));
            }
        }
    }
    let unit_b = sparse_from_dense(&b.find_unit().expect("unital base"));
    let unit_c = sparse_from_dense(&c.find_unit().expect("unital base"));
    let ph2 = ph;
    for k in 0..ph {
        let d = h.delta(k);
        let eps = h.eps(&[(k, F::one())]);
        let scaled = |v: &SVec<F>| -> SVec<F> { v.iter().map(|(i, x)| (*i, x.clone() * &eps)).filter(|(_, x)| !x.is_zero()).collect() };
        if act.left[k].mul_sparse(&unit_c) != scaled(&unit_c) {
            return Err(invalid("module algebra", "h▷1 = ε(h)1 fails", vec![hl(k)]));
        }
        if act.right[k].mul_sparse(&unit_b) != scaled(&unit_b) {
            return Err(invalid("module algebra", "1◁h = ε(h)1 fails", vec![hl(k)]));
        }
        for x in 0..pc {
            for y in 0..pc {
                let lhs = act.left[k].mul_sparse(c.product(x, y));
                let mut acc = BTreeMap::new();
                for (kk, coef) in &d {
                    let prod = c.mul_sparse(&act.left[kk / ph2].sparse_col(x), &act.left[kk % ph2].sparse_col(y));
                    acc_scaled(&mut acc, &prod, coef);
                }
                if lhs != acc_finish(acc) {
                    return Err(invalid("module algebra", "h▷(cc′) = (h₁▷c)(h₂▷c′) fails", vec![hl(k), String::from(c.label(x)), String::from(c.label(y))]));
                }
            }
        }
        for x in 0..pb {
            for y in 0..pb {
                let lhs = act.right[k].mul_sparse(b.product(x, y));
                let mut acc = BTreeMap::new();
                for (kk, coef) in &d {
                    let prod = b.mul_sparse(&act.right[kk / ph2].sparse_col(x), &act.right[kk % ph2].sparse_col(y));
                    acc_scaled(&mut acc, &prod, coef);
                }
                if lhs != acc_finish(acc) {
                    return Err(invalid("module algebra", "(bb′)◁h = (b◁h₁)(b′◁h₂) fails", vec![hl(k), String::from(b.label(x)), String::from(b.label(y))]));
                }
            }
        }
        let sh = h.antipode.sparse_col(k);
        // S_B(b◁h) = S_H(h)▷S_B(b) and S_C(h▷c) = S_C(c)◁S_H(h).
        if s_b.mul(&act.right[k]) != act.left_of(&sh, pc).mul(s_b) {
            return Err(invalid("antipode", "S_B(b◁h) = S_H(h)▷S_B(b) fails", vec![hl(k)]));
        }
        if s_c.mul(&act.left[k]) != act.right_of(&sh, pb).mul(s_c) {
            return Err(invalid("antipode", "S_C(h▷c) = S_C(c)◁S_H(h) fails", vec![hl(k)]));
        }
    }
    Ok(())
}

/// The two-sided crossed product `A = C⊗H⊗B` with product
/// `(c⊗h⊗b)(c′⊗h′⊗b′) = c(h₁▷c′) ⊗ h₂h′₁ ⊗ (b◁h′₂)b′` and
/// `Δ_B(chb)(a⊗a′) = ch₁a ⊗ h₂ba′`, `(a⊗a′)Δ_C(chb) = ach₁ ⊗ a′h₂b`.
/// Basis element `c⊗h⊗b` has index `(c·dim H + h)·dim B + b`.
pub fn crossed_product_algebroid<F: Field>(
    b: &Algebra<F>,
    c: &Algebra<F>,
    s_b: &Matrix<F>,
    s_c: &Matrix<F>,
    h: &FinHopf<F>,
    act: &ActionData<F>,
) -> Result<MultiplierBialgebroid<F>> {
    let unit_b = base_ok(b, "B")?;
    let unit_c = base_ok(c, "C")?;
    anti_iso(s_b, b, c, "S_B")?;
    anti_iso(s_c, c, b, "S_C")?;
    check_action(b, c, s_b, s_c, h, act)?;
    let t = Triple { pc: c.dim(), ph: h.dim(), pb: b.dim() };
    let ph = t.ph;
    let n = t.pc * t.ph * t.pb;
    let deltas: Vec<SVec<F>> = (0..ph).map(|k| h.delta(k)).collect();
    let mut labels = Vec::with_capacity(n);
    let mut constants = Vec::new();
    for i in 0..n {
        let (ci, hi, bi) = t.split(i);
        labels.push(format!("{}⊗{}⊗{}", c.label(ci), h.algebra.label(hi), b.label(bi)));
        for j in 0..n {
            let (cj, hj, bj) = t.split(j);
            let mut acc = BTreeMap::new();
            for (k1, x1) in &deltas[hi] {
                let (h1, h2) = (k1 / ph, k1 % ph);
                let cc = c.mul_sparse(&[(ci, F::one())], &act.left[h1].sparse_col(cj));
                for (k2, x2) in &deltas[hj] {
                    let (g1, g2) = (k2 / ph, k2 % ph);
                    let hh = h.algebra.product(h2, g1);
                    let bb = b.mul_sparse(&act.right[g2].sparse_col(bi), &[(bj, F::one())]);
                    acc_scaled(&mut acc, &t.elem(&cc, hh, &bb), &(x1.clone() * x2));
                }
            }
            for (k, v) in acc_finish(acc) {
                constants.push((i, j, k, v));
            }
        }
    }
    let one_b = sparse_from_dense(&unit_b);
    let one_c = sparse_from_dense(&unit_c);
    let one_h = sparse_from_dense(&h.unit());
    let unit = dense(n, &t.elem(&one_c, &one_h, &one_b));
    let a = make_algebra(labels, constants, Some(unit))?;
    let embed = |x: SVec<F>| MultiplierPair::of_element(&a, &dense(n, &x));
    let iota_b = make_base_embedding(&a, b, (0..t.pb).map(|x| embed(t.elem(&one_c, &one_h, &[(x, F::one())]))).collect(), EmbeddingKind::Homomorphism)?;
    let iota_c = make_base_embedding(&a, c, (0..t.pc).map(|y| embed(t.elem(&[(y, F::one())], &one_h, &one_b))).collect(), EmbeddingKind::Homomorphism)?;
    // chb splits as Σ (c⊗h₁⊗1)·(1⊗h₂⊗b).
    let lifts = build_lifts(&a, &t, |x| {
        let (ci, hi, bi) = t.split(x);
        deltas[hi]
            .iter()
            .map(|(k, coef)| {
                (t.elem(&[(ci, F::one())], &[(k / ph, F::one())], &one_b), t.elem(&one_c, &[(k % ph, F::one())], &[(bi, F::one())]), coef.clone())
            })
            .collect()
    });
    MultiplierBialgebroid::certified(&a, iota_b, iota_c, s_b.clone(), s_c.clone(), lifts.0, lifts.1, lifts.2, lifts.3)
}
