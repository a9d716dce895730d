use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::{invert, mult_by_values, slice_apply, MultiplierBialgebroid};
use crate::algebra::{Algebra, MultiplierPair};
use crate::bialgebroid::{CounitCandidate, DerivationTrace};
use crate::catalog::{sort_entries, AxiomId, Entry, Status};
use crate::error::{Error, Result, Witness};
use crate::field::Field;
use crate::linalg::{acc_add, acc_finish, solve_many, Echelon, Matrix, SVec};
use crate::tensor::{compare_paths, Op, Stage};

/// Intermediate maps of the antipode construction.
#[derive(Clone, Debug)]
pub struct AntipodeTrace<F> {
    pub counit_b: DerivationTrace<F>,
    pub counit_c: DerivationTrace<F>,
    /// `S_ρ = m∘(S_Cε_C⊗ι)∘T_ρ⁻¹` on `_B A ⊗ A^B`.
    pub s_rho: Matrix<F>,
    /// `λS = m∘(ι⊗S_Bε_B)∘λT⁻¹` on `^C A ⊗ A_C`.
    pub lambda_s: Matrix<F>,
    /// The antipode of the co-opposite, computed independently of `S`.
    pub s_co: Matrix<F>,
}

/// An invertible antipode together with the two counits.
#[derive(Clone, Debug)]
pub struct Antipode<F> {
    pub s: Matrix<F>,
    pub s_inv: Matrix<F>,
    pub eps_b: CounitCandidate<F>,
    pub eps_c: CounitCandidate<F>,
    pub trace: Option<AntipodeTrace<F>>,
}

impl<F: Field> Antipode<F> {
    /// A candidate antipode given by its matrices.
    pub fn from_maps(s: Matrix<F>, eps_b: CounitCandidate<F>, eps_c: CounitCandidate<F>) -> Result<Self> {
        let s_inv = s.inverse().ok_or_else(|| Error::InverseCheckFailed(String::from("S is not invertible")))?;
        Ok(Antipode { s, s_inv, eps_b, eps_c, trace: None })
    }
}

/// Finds the elements whose left multiplications are the given matrices.
fn elements_from_left_actions<F: Field>(a: &Algebra<F>, lefts: &[Matrix<F>]) -> Option<Matrix<F>> {
    let n = a.dim();
    let basis: Vec<Vec<F>> = (0..n).map(|k| a.left_mult(k).vectorize()).collect();
    let system = Matrix::from_fn(n * n, n, |r, k| basis[k][r].clone());
    let targets: Vec<Vec<F>> = lefts.iter().map(|m| m.vectorize()).collect();
    let rhs = Matrix::from_fn(n * n, lefts.len(), |r, b| targets[b][r].clone());
    solve_many(&system, &rhs)
}

fn check_anti_multiplicative<F: Field>(a: &Algebra<F>, s: &Matrix<F>) -> core::result::Result<(), Witness> {
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            let lhs = s.mul_sparse(a.product(i, j));
            let rhs = a.mul_sparse(&s.sparse_col(j), &s.sparse_col(i));
            if lhs != rhs {
                return Err(Witness::new("S(ab) = S(b)S(a) fails", vec![String::from(a.label(i)), String::from(a.label(j))]));
            }
        }
    }
    Ok(())
}

impl<F: Field> MultiplierBialgebroid<F> {
    /// Derives the counits and the antipode of a regular multiplier Hopf
    /// algebroid from the inverses of the canonical maps. Fails with
    /// `NotBijective` if a canonical map is not invertible and `NotRegular` if
    /// a fullness condition fails.
    pub fn derive_antipode(&self) -> Result<Antipode<F>> {
        let cert = self.check_regular();
        if cert.bijective.iter().any(|b| !*b) {
            return Err(Error::NotBijective(cert.failures().join("; ")));
        }
        if !cert.is_valid() {
            return Err(Error::NotRegular(cert.failures().join("; ")));
        }
        let ts = self.two_sided();
        let q = ts.canonical().map_err(Error::WellDefinednessViolated)?;
        let alg = &self.a;
        let n = alg.dim();
        let one = F::one();
        let (eps_c, counit_c) = self.right.derive_counit()?;
        let tr_inv = invert(&q.t_rho, "T_ρ")?;
        let (p1, p3, p4, p5, a1) = (ts.left_target(), ts.tr_domain(), ts.right_target(), ts.lt_domain(), ts.plain(1));
        let lcols = mult_by_values(&self.iota_b, &self.s_c.mul(&eps_c.map), false);
        let f = |v: &[(usize, F)]| slice_apply(&lcols, n, 0, v);
        let m_rho = ts.lifted_fn(&p3, &f, &a1, "m∘(S_Cε_C⊗ι)").map_err(Error::WellDefinednessViolated)?;
        let s_rho = m_rho.mul(&tr_inv);
        let (eps_b, counit_b) = self.left.derive_counit()?;
        let lt_inv = invert(&q.lambda_t, "λT")?;
        let rcols = mult_by_values(&self.iota_c, &self.s_b.mul(&eps_b.map), true);
        let g = |v: &[(usize, F)]| slice_apply(&rcols, n, 1, v);
        let m_lam = ts.lifted_fn(&p5, &g, &a1, "m∘(ι⊗S_Bε_B)").map_err(Error::WellDefinednessViolated)?;
        let lambda_s = m_lam.mul(&lt_inv);

        let mut pairs = Vec::with_capacity(n);
        for b in 0..n {
            let lc: Vec<SVec<F>> = (0..n).map(|c| s_rho.mul_sparse(&p1.project(&[(b * n + c, one.clone())]))).collect();
            let rc: Vec<SVec<F>> = (0..n).map(|a| lambda_s.mul_sparse(&p4.project(&[(a * n + b, one.clone())]))).collect();
            let mp = MultiplierPair::new(Matrix::from_sparse_cols(n, &lc), Matrix::from_sparse_cols(n, &rc));
            if !mp.is_valid(alg) {
                return Err(Error::InconsistentSystem(format!("aS_ρ(b⊗c) ≠ λS(a⊗b)c for b = {}", alg.label(b))));
            }
            pairs.push(mp);
        }
        let lefts: Vec<Matrix<F>> = pairs.iter().map(|m| m.left.clone()).collect();
        let s = elements_from_left_actions(alg, &lefts)
            .ok_or_else(|| Error::InconsistentSystem(String::from("S does not take values in A")))?;
        for (b, mp) in pairs.iter().enumerate() {
            if alg.right_mult_by(&s.col(b)) != mp.right {
                return Err(Error::InconsistentSystem(format!("aS({}) ≠ λS(a⊗{})", alg.label(b), alg.label(b))));
            }
        }

        let tl_inv = invert(&q.t_lambda, "T_λ")?;
        let p2 = ts.tl_domain();
        let ccols = mult_by_values(&self.iota_c, &eps_c.map, false);
        let h = |v: &[(usize, F)]| slice_apply(&ccols, n, 1, v);
        let m_co = ts.lifted_fn(&p2, &h, &a1, "(ι⊗ε_C) on A^B ⊗ ^B A").map_err(Error::WellDefinednessViolated)?;
        let e_co = m_co.mul(&tl_inv);
        let co_lefts: Vec<Matrix<F>> = (0..n)
            .map(|a| {
                let cols: Vec<SVec<F>> = (0..n).map(|b| e_co.mul_sparse(&p1.project(&[(b * n + a, one.clone())]))).collect();
                Matrix::from_sparse_cols(n, &cols)
            })
            .collect();
        let s_co = elements_from_left_actions(alg, &co_lefts)
            .ok_or_else(|| Error::InconsistentSystem(String::from("S^co does not take values in A")))?;
        if !s.mul(&s_co).is_identity() || !s_co.mul(&s).is_identity() {
            return Err(Error::InverseCheckFailed(String::from("S∘S^co or S^co∘S is not the identity")));
        }
        if let Err(w) = check_anti_multiplicative(alg, &s) {
            return Err(Error::InconsistentSystem(format!("{}", w)));
        }
        if s.rank() != n {
            return Err(Error::InverseCheckFailed(String::from("S(A) ≠ A")));
        }
        Ok(Antipode {
            s: s.clone(),
            s_inv: s_co.clone(),
            eps_b,
            eps_c,
            trace: Some(AntipodeTrace { counit_b, counit_c, s_rho, lambda_s, s_co }),
        })
    }

    /// Counit axioms of both counits and the antipode axioms.
    pub fn verify_antipode(&self, ap: &Antipode<F>) -> Vec<Entry> {
        let mut v = self.left.check_counit(&ap.eps_b);
        v.extend(self.right.check_counit(&ap.eps_c));
        v.push(Entry::new(AxiomId::ApBimod, Status::from_result(self.antipode_bimodule(&ap.s))));
        v.push(Entry::new(AxiomId::ApDiagram, Status::from_result(self.antipode_diagrams(ap))));
        v.push(Entry::new(AxiomId::ApAntimult, Status::from_result(check_anti_multiplicative(&self.a, &ap.s))));
        let inv = if ap.s.mul(&ap.s_inv).is_identity() && ap.s_inv.mul(&ap.s).is_identity() {
            Status::Pass
        } else {
            Status::Fail(Witness::msg("S∘S⁻¹ or S⁻¹∘S is not the identity"))
        };
        v.push(Entry::new(AxiomId::ApInverse, inv));
        sort_entries(&mut v);
        v
    }

    /// `S(xa) = S(a)S_B(x)`, `S(ya) = S(a)S_C(y)`, `S(ax) = S_B(x)S(a)` and
    /// `S(ay) = S_C(y)S(a)`.
    fn antipode_bimodule(&self, s: &Matrix<F>) -> core::result::Result<(), Witness> {
        for (k, m, emb, other, twist) in self.bimodule_families() {
            let lhs = s.mul(&m);
            let rhs = other.mul(s);
            if let Some((_, c)) = lhs.first_difference(&rhs) {
                let what = ["S(xa) = S(a)S_B(x)", "S(ya) = S(a)S_C(y)", "S(ax) = S_B(x)S(a)", "S(ay) = S_C(y)S(a)"][twist];
                return Err(Witness::new(
                    format!("{} fails", what),
                    vec![String::from(emb.label(k)), String::from(self.a.label(c))],
                ));
            }
        }
        Ok(())
    }

    /// `(k, M, base, N, family)` such that `S∘M = N∘S` is one of the bimodule
    /// identities of the antipode.
    fn bimodule_families(&self) -> Vec<(usize, Matrix<F>, &Algebra<F>, Matrix<F>, usize)> {
        let mut out = Vec::new();
        for x in 0..self.b().dim() {
            let img = self.iota_c.image_of(&self.s_b.col(x));
            out.push((x, self.iota_b.images[x].left.clone(), self.b(), img.right.clone(), 0));
            out.push((x, self.iota_b.images[x].right.clone(), self.b(), img.left.clone(), 2));
        }
        for y in 0..self.c().dim() {
            let img = self.iota_b.image_of(&self.s_c.col(y));
            out.push((y, self.iota_c.images[y].left.clone(), self.c(), img.right.clone(), 1));
            out.push((y, self.iota_c.images[y].right.clone(), self.c(), img.left.clone(), 3));
        }
        out
    }

    /// `m∘(S⊗ι)∘T_ρ = m∘(S_Cε_C⊗ι)` and `m∘(ι⊗S)∘λT = m∘(ι⊗S_Bε_B)`.
    fn antipode_diagrams(&self, ap: &Antipode<F>) -> core::result::Result<(), Witness> {
        let ts = self.two_sided();
        let alg = &self.a;
        let n = alg.dim();
        let s_cols = ap.s.sparse_cols();
        let (p1, p3, p4, p5, a1) = (ts.left_target(), ts.tr_domain(), ts.right_target(), ts.lt_domain(), ts.plain(1));
        let lcols = mult_by_values(&self.iota_b, &self.s_c.mul(&ap.eps_c.map), false);
        let f = |v: &[(usize, F)]| slice_apply(&lcols, n, 0, v);
        let lhs = [
            Stage::new(Op::Legs(0, 1, self.left.tr_cols()), &*p1),
            Stage::new(Op::Leg(0, &s_cols), &*p5),
            Stage::new(Op::Mult(0, 1), &*a1),
        ];
        let rhs = [Stage::new(Op::Func(&f), &*a1)];
        compare_paths(alg, &p3, &lhs, &rhs, "m∘(S⊗ι)∘T_ρ = m∘(S_Cε_C⊗ι)")?;
        let rcols = mult_by_values(&self.iota_c, &self.s_b.mul(&ap.eps_b.map), true);
        let g = |v: &[(usize, F)]| slice_apply(&rcols, n, 1, v);
        let lhs = [
            Stage::new(Op::Legs(0, 1, self.right.lt_cols()), &*p4),
            Stage::new(Op::Leg(1, &s_cols), &*p3),
            Stage::new(Op::Mult(0, 1), &*a1),
        ];
        let rhs = [Stage::new(Op::Func(&g), &*a1)];
        compare_paths(alg, &p5, &lhs, &rhs, "m∘(ι⊗S)∘λT = m∘(ι⊗S_Bε_B)")
    }

    /// Dimension of the space of linear maps `K: A → A` satisfying the
    /// homogeneous bimodule and diagram equations of an antipode.
    pub fn antipode_solution_dim(&self) -> usize {
        let alg = &self.a;
        let n = alg.dim();
        let var = |r: usize, c: usize| r * n + c;
        let mut ech = Echelon::new(n * n);
        let mut push = |rows: BTreeMap<usize, BTreeMap<usize, F>>| {
            for (_, r) in rows {
                let r = acc_finish(r);
                if !r.is_empty() {
                    ech.insert(r);
                }
            }
        };
        for (_, m, _, other, _) in self.bimodule_families() {
            let mut rows: BTreeMap<usize, BTreeMap<usize, F>> = BTreeMap::new();
            for i in 0..n {
                for j in 0..n {
                    let row = rows.entry(i * n + j).or_default();
                    for k in 0..n {
                        acc_add(row, var(i, k), m.get(k, j).clone());
                        acc_add(row, var(k, j), -other.get(i, k).clone());
                    }
                }
            }
            push(rows);
        }
        for lift in self.left.tr_cols() {
            let mut rows: BTreeMap<usize, BTreeMap<usize, F>> = BTreeMap::new();
            for (idx, c) in lift {
                let (u, v) = (idx / n, idx % n);
                for r in 0..n {
                    for (k, l) in alg.product(r, v) {
                        acc_add(rows.entry(*k).or_default(), var(r, u), l.clone() * c);
                    }
                }
            }
            push(rows);
        }
        for lift in self.right.lt_cols() {
            let mut rows: BTreeMap<usize, BTreeMap<usize, F>> = BTreeMap::new();
            for (idx, c) in lift {
                let (u, v) = (idx / n, idx % n);
                for r in 0..n {
                    for (k, l) in alg.product(u, r) {
                        acc_add(rows.entry(*k).or_default(), var(r, v), l.clone() * c);
                    }
                }
            }
            push(rows);
        }
        n * n - ech.rank()
    }

    /// The counit derivation dimensions on both sides and the antipode one.
    pub fn uniqueness_dims(&self) -> Result<[usize; 3]> {
        Ok([self.left.counit_solution_dim(), self.right.counit_solution_dim()?, self.antipode_solution_dim()])
    }
}
