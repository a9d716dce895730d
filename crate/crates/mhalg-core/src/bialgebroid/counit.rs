use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::{status, Act, LeftBialgebroid, LeftChecker, RightBialgebroid};
use crate::catalog::{AxiomId, Entry, Status};
use crate::error::{Error, Result, Witness};
use crate::field::Field;
use crate::linalg::{acc_add, acc_finish, acc_scaled, dense_from_sparse, hom_space, solve_many, Echelon, Matrix, SVec};
use crate::tensor::{compare_paths, evaluate, Op, Stage};

/// A linear map `ε: A → base`, stored as a `base_dim × dim A` matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CounitCandidate<F> {
    pub map: Matrix<F>,
}

impl<F: Field> CounitCandidate<F> {
    pub fn new(map: Matrix<F>) -> Self {
        CounitCandidate { map }
    }

    pub fn apply(&self, a: &[(usize, F)]) -> Vec<F> {
        dense_from_sparse(&self.map.mul_sparse(a), self.map.nrows())
    }
}

/// Intermediate maps of the counit construction.
#[derive(Clone, Debug)]
pub struct DerivationTrace<F> {
    /// `Ẽ_t = m_B∘T_ρ⁻¹` on quotient coordinates of `_B A ⊗ A^B`.
    pub et: Matrix<F>,
    /// `Ẽ_s = (m^B)^op∘T_λ⁻¹`.
    pub es: Matrix<F>,
    /// `ē_t(a)` as the matrix of `b ↦ Ẽ_t(a⊗b)`.
    pub eps_t: Vec<Matrix<F>>,
    /// `ē_s(a)` as the matrix of `b ↦ Ẽ_s(b⊗a)`.
    pub eps_s: Vec<Matrix<F>>,
    pub counit: CounitCandidate<F>,
}

/// The ideals `I^s`, `I^t` of the base, the spanning conditions
/// `s(I^t)A = A = t(I^s)A` and the two fullness flags.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealReport<F> {
    pub i_s: Vec<Vec<F>>,
    pub i_t: Vec<Vec<F>>,
    pub s_of_i_t_spans: bool,
    pub t_of_i_s_spans: bool,
    pub left_full: bool,
    pub right_full: bool,
}

impl<F> IdealReport<F> {
    pub fn condition_holds(&self) -> bool {
        self.s_of_i_t_spans && self.t_of_i_s_spans
    }

    pub fn is_full(&self) -> bool {
        self.left_full && self.right_full
    }
}

fn echelon_basis<F: Field>(n: usize, e: &Echelon<F>) -> Vec<Vec<F>> {
    e.sorted_rows().iter().map(|r| dense_from_sparse(r, n)).collect()
}

fn inverse_of<F: Field>(m: &Matrix<F>, what: &str) -> Result<Matrix<F>> {
    if m.nrows() != m.ncols() {
        return Err(Error::NotBijective(format!("{} maps a space of dimension {} to one of dimension {}", what, m.ncols(), m.nrows())));
    }
    m.inverse().ok_or_else(|| Error::NotBijective(format!("{} has rank {} < {}", what, m.rank(), m.nrows())))
}

impl<'a, F: Field> LeftChecker<'a, F> {
    /// `u⊗v ↦ Σ t(ε(u))v` with the action columns precomputed per `u`.
    fn slice_cols(&self, eps: &CounitCandidate<F>, act: Act) -> Vec<Vec<SVec<F>>> {
        let n = self.bg.dim();
        (0..n).map(|u| self.bg.modules.action_of(act, &eps.map.col(u)).sparse_cols()).collect()
    }

    pub fn check_counit(&self, eps: &CounitCandidate<F>) -> Vec<Entry> {
        let (n, p) = (self.bg.dim(), self.bg.base_dim());
        if eps.map.nrows() != p || eps.map.ncols() != n {
            let w = Witness::msg(format!("counit must be a {}×{} matrix", p, n));
            return vec![
                Entry::new(AxiomId::CuLBimod, Status::Fail(w.clone())),
                Entry::new(AxiomId::CuLCounit, Status::Fail(w.clone())),
                Entry::new(AxiomId::CuLMult, Status::Fail(w)),
            ];
        }
        vec![
            Entry::new(AxiomId::CuLBimod, status(self.counit_bimod(eps))),
            Entry::new(AxiomId::CuLCounit, status(self.counit_slices(eps))),
            Entry::new(AxiomId::CuLMult, self.counit_mult(eps)),
        ]
    }

    fn counit_bimod(&self, eps: &CounitCandidate<F>) -> core::result::Result<(), Witness> {
        let (base, m, e) = (&self.bg.base, &self.bg.modules, &eps.map);
        let alg = &self.bg.a;
        for x in 0..self.bg.base_dim() {
            let lbl = |c: usize| vec![format!("{}:{}", self.bg.base_name, base.label(x)), String::from(alg.label(c))];
            if let Some((_, c)) = e.mul(&m.ls.action[x]).first_difference(&base.left_mult(x).mul(e)) {
                return Err(Witness::new("ε(s(x)a) = xε(a) fails", lbl(c)));
            }
            if let Some((_, c)) = e.mul(&m.lt.action[x]).first_difference(&base.right_mult(x).mul(e)) {
                return Err(Witness::new("ε(t(y)a) = ε(a)y fails", lbl(c)));
            }
        }
        Ok(())
    }

    fn counit_slices(&self, eps: &CounitCandidate<F>) -> core::result::Result<(), Witness> {
        let alg = &self.bg.a;
        let n = alg.dim();
        let (p1, p2, qst) = (self.plain(1), self.plain(2), self.qst());
        let tcols = self.slice_cols(eps, Act::Lt);
        let scols = self.slice_cols(eps, Act::Ls);
        let slice_t = |v: &[(usize, F)]| {
            let mut acc = BTreeMap::new();
            for (idx, c) in v {
                acc_scaled(&mut acc, &tcols[idx / n][idx % n], c);
            }
            acc_finish(acc)
        };
        let slice_s = |v: &[(usize, F)]| {
            let mut acc = BTreeMap::new();
            for (idx, c) in v {
                acc_scaled(&mut acc, &scols[idx % n][idx / n], c);
            }
            acc_finish(acc)
        };
        let lhs = [Stage::new(Op::Legs(0, 1, self.bg.tr_cols()), &*qst), Stage::new(Op::Func(&slice_t), &*p1)];
        let rhs = [Stage::new(Op::Mult(0, 1), &*p1)];
        compare_paths(alg, &p2, &lhs, &rhs, "(ε⊗ι)T_ρ(a⊗b) = ab")?;
        let lhs = [Stage::new(Op::Legs(0, 1, self.bg.tl_cols()), &*qst), Stage::new(Op::Func(&slice_s), &*p1)];
        let rhs = [Stage::new(Op::Mult(1, 0), &*p1)];
        compare_paths(alg, &p2, &lhs, &rhs, "(ι⊗ε)T_λ(a⊗b) = ba")
    }

    /// Exact surjectivity of `T_λ` and `T_ρ`; a map that does not descend
    /// counts as not surjective.
    pub fn surjectivity(&self) -> (bool, bool) {
        let d = self.qst().dim();
        let tl = self.t_lambda().map(|m| m.rank() == d).unwrap_or(false);
        let tr = self.t_rho().map(|m| m.rank() == d).unwrap_or(false);
        (tl, tr)
    }

    fn counit_mult(&self, eps: &CounitCandidate<F>) -> Status {
        let (tl_sur, tr_sur) = self.surjectivity();
        if !tl_sur && !tr_sur {
            return Status::Skipped(String::from("neither T_λ nor T_ρ is surjective"));
        }
        let alg = &self.bg.a;
        let n = alg.dim();
        let e = &eps.map;
        let m = &self.bg.modules;
        let image: Vec<Vec<F>> = (0..n).map(|b| e.col(b)).collect();
        let rs: Vec<Matrix<F>> = if tl_sur { image.iter().map(|x| m.action_of(Act::Rs, x)).collect() } else { Vec::new() };
        let rt: Vec<Matrix<F>> = if tr_sur { image.iter().map(|x| m.action_of(Act::Rt, x)).collect() } else { Vec::new() };
        for a in 0..n {
            for b in 0..n {
                let lhs = e.mul_sparse(alg.product(a, b));
                let lbl = || vec![String::from(alg.label(a)), String::from(alg.label(b))];
                if tl_sur && lhs != e.mul_sparse(&rs[b].sparse_col(a)) {
                    return Status::Fail(Witness::new("ε(ab) = ε(as(ε(b))) fails", lbl()));
                }
                if tr_sur && lhs != e.mul_sparse(&rt[b].sparse_col(a)) {
                    return Status::Fail(Witness::new("ε(ab) = ε(at(ε(b))) fails", lbl()));
                }
            }
        }
        Status::Pass
    }

    /// Bases of `Hom(_B A, _B B)` and `Hom(A^B, B_B)` as `base_dim × dim A`
    /// matrices.
    pub fn slice_homs(&self) -> (Vec<Matrix<F>>, Vec<Matrix<F>>) {
        let (n, p) = (self.bg.dim(), self.bg.base_dim());
        let (base, m) = (&self.bg.base, &self.bg.modules);
        let phi_c: Vec<_> = (0..p).map(|x| (base.left_mult(x).clone(), m.ls.action[x].clone())).collect();
        let psi_c: Vec<_> = (0..p).map(|x| (base.right_mult(x).clone(), m.lt.action[x].clone())).collect();
        (hom_space(n, p, &phi_c), hom_space(n, p, &psi_c))
    }

    pub fn fullness_and_ideals(&self) -> IdealReport<F> {
        let (n, p) = (self.bg.dim(), self.bg.base_dim());
        let m = &self.bg.modules;
        let (phis, psis) = self.slice_homs();
        let ideal = |homs: &[Matrix<F>]| {
            let mut e = Echelon::new(p);
            for h in homs {
                for c in h.sparse_cols() {
                    e.insert(c);
                }
            }
            e
        };
        let (e_s, e_t) = (ideal(&phis), ideal(&psis));
        let spans = |gens: &Echelon<F>, act: Act| {
            let mut e = Echelon::new(n);
            for y in gens.rows() {
                let mat = m.action_of(act, &dense_from_sparse(y, p));
                for c in mat.sparse_cols() {
                    e.insert(c);
                }
            }
            e.rank() == n
        };
        let s_of_i_t_spans = spans(&e_t, Act::Ls);
        let t_of_i_s_spans = spans(&e_s, Act::Lt);
        // left-full: Σ s(ψ(v))u over T̃_ρ(a⊗b); right-full: Σ t(φ(u))v over T̃_λ(a⊗b)
        let full = |homs: &[Matrix<F>], act: Act, lifts: &[SVec<F>], on_second: bool| {
            let mut e = Echelon::new(n);
            for h in homs {
                let cols: Vec<Vec<SVec<F>>> = (0..n).map(|w| m.action_of(act, &h.col(w)).sparse_cols()).collect();
                for lift in lifts {
                    let mut acc = BTreeMap::new();
                    for (idx, c) in lift {
                        let (u, v) = (idx / n, idx % n);
                        let col = if on_second { &cols[v][u] } else { &cols[u][v] };
                        acc_scaled(&mut acc, col, c);
                    }
                    e.insert(acc_finish(acc));
                    if e.rank() == n {
                        return true;
                    }
                }
            }
            e.rank() == n
        };
        let left_full = full(&psis, Act::Ls, self.bg.tr_cols(), true);
        let right_full = full(&phis, Act::Lt, self.bg.tl_cols(), false);
        IdealReport {
            i_s: echelon_basis(p, &e_s),
            i_t: echelon_basis(p, &e_t),
            s_of_i_t_spans,
            t_of_i_s_spans,
            left_full,
            right_full,
        }
    }

    /// Constructs the unique left counit from the inverses of the canonical
    /// maps and certifies it.
    pub fn derive_counit(&self) -> Result<(CounitCandidate<F>, DerivationTrace<F>)> {
        let alg = &self.bg.a;
        let n = alg.dim();
        let m = &self.bg.modules;
        let tl_inv = inverse_of(&self.t_lambda()?, "T_λ")?;
        let tr_inv = inverse_of(&self.t_rho()?, "T_ρ")?;
        let ideals = self.fullness_and_ideals();
        if !ideals.s_of_i_t_spans {
            return Err(Error::IdealConditionFails(String::from("s(I^t)A ≠ A")));
        }
        if !ideals.t_of_i_s_spans {
            return Err(Error::IdealConditionFails(String::from("t(I^s)A ≠ A")));
        }
        let (qst, qrho, qlam, p1) = (self.qst(), self.qrho(), self.qlam(), self.plain(1));
        let mb = evaluate(alg, &qrho, &[Stage::new(Op::Mult(0, 1), &*p1)], "m_B").map_err(Error::WellDefinednessViolated)?;
        let mbop = evaluate(alg, &qlam, &[Stage::new(Op::Mult(1, 0), &*p1)], "(m^B)^op").map_err(Error::WellDefinednessViolated)?;
        let et = Matrix::from_sparse_cols(n, &mb).mul(&tr_inv);
        let es = Matrix::from_sparse_cols(n, &mbop).mul(&tl_inv);
        let one = F::one();
        let eps_t: Vec<Matrix<F>> = (0..n)
            .map(|a| {
                let cols: Vec<SVec<F>> = (0..n).map(|b| et.mul_sparse(&qst.project(&[(a * n + b, one.clone())]))).collect();
                Matrix::from_sparse_cols(n, &cols)
            })
            .collect();
        let eps_s: Vec<Matrix<F>> = (0..n)
            .map(|a| {
                let cols: Vec<SVec<F>> = (0..n).map(|b| es.mul_sparse(&qst.project(&[(b * n + a, one.clone())]))).collect();
                Matrix::from_sparse_cols(n, &cols)
            })
            .collect();
        let system = |act: Act| {
            let vs: Vec<Vec<F>> = m.get(act).action.iter().map(|x| x.vectorize()).collect();
            Matrix::from_fn(n * n, vs.len(), |r, x| vs[x][r].clone())
        };
        let rhs = |maps: &[Matrix<F>]| {
            let vs: Vec<Vec<F>> = maps.iter().map(|x| x.vectorize()).collect();
            Matrix::from_fn(n * n, n, |r, a| vs[a][r].clone())
        };
        let from_t = solve_many(&system(Act::Lt), &rhs(&eps_t))
            .ok_or_else(|| Error::InconsistentSystem(String::from("ē_t(a) does not lie in t(B)")))?;
        let from_s = solve_many(&system(Act::Ls), &rhs(&eps_s))
            .ok_or_else(|| Error::InconsistentSystem(String::from("ē_s(a) does not lie in s(B)")))?;
        if let Some((_, a)) = from_t.first_difference(&from_s) {
            return Err(Error::InconsistentSystem(format!("t⁻¹∘ē_t and s⁻¹∘ē_s differ at {}", alg.label(a))));
        }
        let counit = CounitCandidate::new(from_t);
        for e in self.check_counit(&counit) {
            if let Status::Fail(w) = e.status {
                return Err(Error::InconsistentSystem(format!("derived counit fails {}: {}", e.axiom.code(), w)));
            }
        }
        Ok((counit.clone(), DerivationTrace { et, es, eps_t, eps_s, counit }))
    }

    /// Dimension of the space of maps `E: A → B` satisfying the homogeneous
    /// versions of the bimodule and slice equations. Zero means a counit,
    /// when it exists, is unique.
    pub fn counit_solution_dim(&self) -> usize {
        let (n, p) = (self.bg.dim(), self.bg.base_dim());
        let (base, m) = (&self.bg.base, &self.bg.modules);
        let var = |x: usize, u: usize| x * n + u;
        let mut ech = Echelon::new(p * n);
        let push = |rows: BTreeMap<usize, BTreeMap<usize, F>>, ech: &mut Echelon<F>| {
            for (_, r) in rows {
                let r = acc_finish(r);
                if !r.is_empty() {
                    ech.insert(r);
                }
            }
        };
        for x in 0..p {
            for (act, bm) in [(&m.ls.action[x], base.left_mult(x)), (&m.lt.action[x], base.right_mult(x))] {
                let mut rows: BTreeMap<usize, BTreeMap<usize, F>> = BTreeMap::new();
                for i in 0..p {
                    for j in 0..n {
                        let row = rows.entry(i * n + j).or_default();
                        for k in 0..n {
                            acc_add(row, var(i, k), act.get(k, j).clone());
                        }
                        for k in 0..p {
                            acc_add(row, var(k, j), -bm.get(i, k).clone());
                        }
                    }
                }
                push(rows, &mut ech);
            }
        }
        for (lifts, act, on_second) in [(self.bg.tr_cols(), Act::Lt, false), (self.bg.tl_cols(), Act::Ls, true)] {
            for lift in lifts {
                let mut rows: BTreeMap<usize, BTreeMap<usize, F>> = BTreeMap::new();
                for (idx, c) in lift {
                    let (u, v) = (idx / n, idx % n);
                    let (arg, moved) = if on_second { (v, u) } else { (u, v) };
                    for x in 0..p {
                        for (k, l) in &m.cols(act, x)[moved] {
                            acc_add(rows.entry(*k).or_default(), var(x, arg), l.clone() * c);
                        }
                    }
                }
                push(rows, &mut ech);
            }
        }
        p * n - ech.rank()
    }
}

impl<F: Field> LeftBialgebroid<F> {
    pub fn check_counit(&self, eps: &CounitCandidate<F>) -> Vec<Entry> {
        self.checker().check_counit(eps)
    }

    pub fn derive_counit(&self) -> Result<(CounitCandidate<F>, DerivationTrace<F>)> {
        self.checker().derive_counit()
    }

    pub fn counit_solution_dim(&self) -> usize {
        self.checker().counit_solution_dim()
    }

    pub fn fullness_and_ideals(&self) -> IdealReport<F> {
        self.checker().fullness_and_ideals()
    }
}

fn to_right(axiom: AxiomId) -> AxiomId {
    match axiom {
        AxiomId::CuLBimod => AxiomId::CuRBimod,
        AxiomId::CuLCounit => AxiomId::CuRCounit,
        AxiomId::CuLMult => AxiomId::CuRMult,
        other => other,
    }
}

/// Right counits are exactly the left counits of the opposite left
/// bialgebroid `(A^op, C, t, s, Δ)`.
impl<F: Field> RightBialgebroid<F> {
    pub fn check_counit(&self, eps: &CounitCandidate<F>) -> Vec<Entry> {
        match self.to_left_opposite() {
            Ok(l) => l.check_counit(eps).into_iter().map(|e| Entry::new(to_right(e.axiom), e.status)).collect(),
            Err(err) => [AxiomId::CuRBimod, AxiomId::CuRCounit, AxiomId::CuRMult]
                .iter()
                .map(|&ax| Entry::new(ax, Status::Fail(Witness::msg(format!("{}", err)))))
                .collect(),
        }
    }

    pub fn derive_counit(&self) -> Result<(CounitCandidate<F>, DerivationTrace<F>)> {
        let l = self.to_left_opposite()?;
        l.derive_counit().map_err(|e| match e {
            Error::NotBijective(s) => Error::NotBijective(s.replace("T_λ", "λT").replace("T_ρ", "ρT")),
            other => other,
        })
    }

    pub fn counit_solution_dim(&self) -> Result<usize> {
        Ok(self.to_left_opposite()?.counit_solution_dim())
    }

    pub fn fullness_and_ideals(&self) -> Result<IdealReport<F>> {
        Ok(self.to_left_opposite()?.fullness_and_ideals())
    }
}
