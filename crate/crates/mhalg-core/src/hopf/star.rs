use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::{pair_cols, Antipode, MultiplierBialgebroid};
use crate::algebra::{Algebra, BaseEmbedding, MultiplierPair};
use crate::catalog::{AxiomId, Entry, Status};
use crate::error::{Error, Result, Witness};
use crate::field::{Field, FieldTag};
use crate::linalg::{Matrix, SVec};
use crate::tensor::BalancedTensorSpace;

/// Conjugate-linear involutions on `A`, `B` and `C`. Each matrix `M`
/// represents the map `v ↦ M·conj(v)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarStructure<F> {
    pub star_a: Matrix<F>,
    pub star_b: Matrix<F>,
    pub star_c: Matrix<F>,
}

fn conj<F: Field>(m: &Matrix<F>) -> Matrix<F> {
    m.map_entries(|x| x.conj())
}

fn conj_sparse<F: Field>(v: &[(usize, F)]) -> SVec<F> {
    v.iter().map(|(i, c)| (*i, c.conj())).collect()
}

type R = core::result::Result<(), Witness>;

fn involutive_anti<F: Field>(alg: &Algebra<F>, star: &Matrix<F>, name: &str) -> R {
    let n = alg.dim();
    if star.nrows() != n || star.ncols() != n {
        return Err(Witness::msg(format!("∗ on {} must be a {}×{} matrix", name, n, n)));
    }
    if !star.mul(&conj(star)).is_identity() {
        return Err(Witness::msg(format!("∗ is not involutive on {}", name)));
    }
    for i in 0..n {
        for j in 0..n {
            let lhs = star.mul_sparse(&conj_sparse(alg.product(i, j)));
            let rhs = alg.mul_sparse(&star.sparse_col(j), &star.sparse_col(i));
            if lhs != rhs {
                return Err(Witness::new(
                    format!("(ab)∗ = b∗a∗ fails in {}", name),
                    vec![String::from(alg.label(i)), String::from(alg.label(j))],
                ));
            }
        }
    }
    Ok(())
}

/// `T∗` with `T∗a = (a∗T)∗` and `aT∗ = (Ta∗)∗`.
fn star_multiplier<F: Field>(star: &Matrix<F>, t: &MultiplierPair<F>) -> MultiplierPair<F> {
    let cs = conj(star);
    MultiplierPair::new(star.mul(&conj(&t.right)).mul(&cs), star.mul(&conj(&t.left)).mul(&cs))
}

fn base_compatible<F: Field>(star_a: &Matrix<F>, emb: &BaseEmbedding<F>, star_base: &Matrix<F>, name: &str) -> R {
    for x in 0..emb.base.dim() {
        let lhs = emb.image_of(&star_base.col(x));
        let rhs = star_multiplier(star_a, &emb.images[x]);
        if lhs != rhs {
            return Err(Witness::new(format!("ι({}∗) = ι({})∗ fails", name, name), vec![String::from(emb.base.label(x))]));
        }
    }
    Ok(())
}

fn same<F: Field>(dom: &BalancedTensorSpace<F>, l: &Matrix<F>, r: &Matrix<F>, what: &str) -> R {
    super::same(dom, l, r, what)
}

impl<F: Field> MultiplierBialgebroid<F> {
    /// Checks a star structure: involutions, base compatibility, the
    /// antipode-type relation between `S_B`, `S_C` and `∗`, compatibility with
    /// the canonical maps and, given an antipode, with the counits and `S`.
    pub fn check_star(&self, star: &StarStructure<F>, ap: Option<&Antipode<F>>) -> Result<Vec<Entry>> {
        if F::TAG != FieldTag::QI {
            return Err(Error::FieldMismatch);
        }
        let mut v = vec![
            Entry::new(AxiomId::StInvolution, Status::from_result(self.star_involution(star))),
            Entry::new(AxiomId::StCanonical, Status::from_result(self.star_canonical(star))),
        ];
        match ap {
            Some(ap) => {
                v.push(Entry::new(AxiomId::StCounit, Status::from_result(self.star_counit(star, ap))));
                v.push(Entry::new(AxiomId::StAntipode, Status::from_result(star_antipode(star, ap))));
            }
            None => {
                v.push(Entry::new(AxiomId::StCounit, Status::Skipped(String::from("no antipode given"))));
                v.push(Entry::new(AxiomId::StAntipode, Status::Skipped(String::from("no antipode given"))));
            }
        }
        Ok(v)
    }

    fn star_involution(&self, st: &StarStructure<F>) -> R {
        involutive_anti(&self.a, &st.star_a, "A")?;
        involutive_anti(self.b(), &st.star_b, "B")?;
        involutive_anti(self.c(), &st.star_c, "C")?;
        base_compatible(&st.star_a, &self.iota_b, &st.star_b, "x")?;
        base_compatible(&st.star_a, &self.iota_c, &st.star_c, "y")?;
        let on_c = self.s_b.mul(&st.star_b).mul(&conj(&self.s_c)).mul(&conj(&st.star_c));
        if let Some((_, y)) = on_c.first_difference(&Matrix::identity(self.c().dim())) {
            return Err(Witness::new("S_B∘∗∘S_C∘∗ = ι_C fails", vec![String::from(self.c().label(y))]));
        }
        let on_b = self.s_c.mul(&st.star_c).mul(&conj(&self.s_b)).mul(&conj(&st.star_b));
        if let Some((_, x)) = on_b.first_difference(&Matrix::identity(self.b().dim())) {
            return Err(Witness::new("S_C∘∗∘S_B∘∗ = ι_B fails", vec![String::from(self.b().label(x))]));
        }
        Ok(())
    }

    /// `(∗⊗∗)∘T_λ = λT∘(∗⊗∗)` and `(∗⊗∗)∘T_ρ = ρT∘(∗⊗∗)`.
    fn star_canonical(&self, st: &StarStructure<F>) -> R {
        let ts = self.two_sided();
        let q = ts.canonical()?;
        let n = self.dim();
        let cols = pair_cols(n, Some(&st.star_a), Some(&st.star_a), false);
        let f = |v: &[(usize, F)]| crate::bialgebroid::apply_cols(&cols, &conj_sparse(v));
        let (p1, p2, p3, p4, p5, p6) =
            (ts.left_target(), ts.tl_domain(), ts.tr_domain(), ts.right_target(), ts.lt_domain(), ts.rt_domain());
        let d14 = ts.lifted_fn(&p1, &f, &p4, "∗⊗∗")?;
        let d25 = ts.lifted_fn(&p2, &f, &p5, "∗⊗∗")?;
        let d36 = ts.lifted_fn(&p3, &f, &p6, "∗⊗∗")?;
        same(&p2, &d14.mul(&conj(&q.t_lambda)), &q.lambda_t.mul(&d25), "(∗⊗∗)∘T_λ = λT∘(∗⊗∗)")?;
        same(&p3, &d14.mul(&conj(&q.t_rho)), &q.rho_t.mul(&d36), "(∗⊗∗)∘T_ρ = ρT∘(∗⊗∗)")
    }

    /// `ε_C∘∗ = ∗∘S_B∘ε_B` and `ε_B∘∗ = ∗∘S_C∘ε_C`.
    fn star_counit(&self, st: &StarStructure<F>, ap: &Antipode<F>) -> R {
        let l = ap.eps_c.map.mul(&st.star_a);
        let r = st.star_c.mul(&conj(&self.s_b.mul(&ap.eps_b.map)));
        if let Some((_, a)) = l.first_difference(&r) {
            return Err(Witness::new("ε_C∘∗ = ∗∘S_B∘ε_B fails", vec![String::from(self.a.label(a))]));
        }
        let l = ap.eps_b.map.mul(&st.star_a);
        let r = st.star_b.mul(&conj(&self.s_c.mul(&ap.eps_c.map)));
        if let Some((_, a)) = l.first_difference(&r) {
            return Err(Witness::new("ε_B∘∗ = ∗∘S_C∘ε_C fails", vec![String::from(self.a.label(a))]));
        }
        Ok(())
    }
}

/// `S∘∗∘S∘∗ = ι_A`.
fn star_antipode<F: Field>(st: &StarStructure<F>, ap: &Antipode<F>) -> R {
    let m = ap.s.mul(&st.star_a).mul(&conj(&ap.s)).mul(&conj(&st.star_a));
    match m.first_difference(&Matrix::identity(m.nrows())) {
        None => Ok(()),
        Some((_, c)) => Err(Witness::new("S∘∗∘S∘∗ = ι fails", vec![format!("e{}", c)])),
    }
}
