use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use super::{apply_cols, check_embedding_pair, flip_matrix, lift_cols, prefixed, status, Act, Modules, RightBialgebroid};
use crate::algebra::{check_a1, check_a2, Algebra, BaseEmbedding, EmbeddingKind, Side};
use crate::catalog::{AxiomId, Entry, Status};
use crate::error::{Error, Result, Witness};
use crate::field::Field;
use crate::linalg::{solve_many, Matrix, SVec};
use crate::tensor::{
    check_a3, check_descent, compare_paths, evaluate, evaluate_at, map_leg, nondegenerate_on_leg, Balancing,
    BalancedTensorSpace, Op, SpaceCache, Stage,
};

/// A left multiplier bialgebroid `(A, B, s, t, Δ)` stored through the lifted
/// canonical maps `T̃_λ(a⊗b) = Δ(b)(a⊗1)` and `T̃_ρ(a⊗b) = Δ(a)(1⊗b)`.
///
/// Both lifts are `n² × n²` matrices on `A⊗A`; their values are read in the
/// balanced product `_B A ⊗ A^B`, so any representative will do.
#[derive(Clone, Debug)]
pub struct LeftBialgebroid<F> {
    pub a: Algebra<F>,
    pub base: Algebra<F>,
    pub base_name: String,
    pub s: BaseEmbedding<F>,
    pub t: BaseEmbedding<F>,
    pub tl: Matrix<F>,
    pub tr: Matrix<F>,
    pub modules: Modules<F>,
    tl_cols: Vec<SVec<F>>,
    tr_cols: Vec<SVec<F>>,
}

/// Builds the bialgebroid and checks every structural identity, failing on
/// the first one that does not hold.
pub fn make_left_bialgebroid<F: Field>(
    a: &Algebra<F>,
    base_name: &str,
    s: BaseEmbedding<F>,
    t: BaseEmbedding<F>,
    tl: Matrix<F>,
    tr: Matrix<F>,
) -> Result<LeftBialgebroid<F>> {
    let bg = LeftBialgebroid::new(a, base_name, s, t, tl, tr)?;
    bg.certify()?;
    Ok(bg)
}

impl<F: Field> LeftBialgebroid<F> {
    /// Validates shapes and the embeddings without checking the axioms.
    pub fn new(
        a: &Algebra<F>,
        base_name: &str,
        s: BaseEmbedding<F>,
        t: BaseEmbedding<F>,
        tl: Matrix<F>,
        tr: Matrix<F>,
    ) -> Result<Self> {
        check_embedding_pair(&s, &t)?;
        if s.carrier_dim() != a.dim() {
            return Err(Error::ShapeMismatch(String::from("embeddings do not act on A")));
        }
        let n = a.dim();
        let tl_cols = lift_cols(&tl, n, "T̃_λ")?;
        let tr_cols = lift_cols(&tr, n, "T̃_ρ")?;
        let modules = Modules::new(&s, &t, base_name)?;
        Ok(LeftBialgebroid {
            a: a.clone(),
            base: s.base.clone(),
            base_name: String::from(base_name),
            s,
            t,
            tl,
            tr,
            modules,
            tl_cols,
            tr_cols,
        })
    }

    pub fn dim(&self) -> usize {
        self.a.dim()
    }

    pub fn base_dim(&self) -> usize {
        self.base.dim()
    }

    pub fn tl_cols(&self) -> &[SVec<F>] {
        &self.tl_cols
    }

    pub fn tr_cols(&self) -> &[SVec<F>] {
        &self.tr_cols
    }

    pub fn checker(&self) -> LeftChecker<'_, F> {
        LeftChecker { bg: self, cache: SpaceCache::new(&self.a) }
    }

    pub fn check_axiom(&self, axiom: AxiomId) -> Status {
        self.checker().check(axiom)
    }

    /// Every `LB.*` identity, in catalog order.
    pub fn check_all(&self) -> Vec<Entry> {
        let ch = self.checker();
        LEFT_AXIOMS.iter().map(|&ax| Entry::new(ax, ch.check(ax))).collect()
    }

    /// `Ok` iff no structural identity fails; skipped checks are accepted.
    pub fn certify(&self) -> Result<()> {
        for e in self.check_all() {
            if let Status::Fail(w) = e.status {
                return Err(Error::AxiomFailed { axiom: e.axiom, witness: w });
            }
        }
        Ok(())
    }

    /// The co-opposite `(A, B^op, t, s, Δ^co)` with `T̃_λ^co = ΣT̃_ρΣ` and
    /// `T̃_ρ^co = ΣT̃_λΣ`.
    pub fn co_opposite(&self) -> Result<Self> {
        let base_op = self.base.opposite();
        let s = BaseEmbedding { base: base_op.clone(), images: self.t.images.clone(), kind: EmbeddingKind::Homomorphism };
        let t = BaseEmbedding { base: base_op, images: self.s.images.clone(), kind: EmbeddingKind::AntiHomomorphism };
        let sigma = flip_matrix::<F>(self.dim());
        let tl = sigma.mul(&self.tr).mul(&sigma);
        let tr = sigma.mul(&self.tl).mul(&sigma);
        LeftBialgebroid::new(&self.a, &co_name(&self.base_name), s, t, tl, tr)
    }

    /// The opposite right bialgebroid `(A^op, B, t, s, Δ)`; the lifts are
    /// unchanged under the identity identification of `A` with `A^op`.
    pub fn to_opposite(&self) -> Result<RightBialgebroid<F>> {
        RightBialgebroid::new(
            &self.a.opposite(),
            &self.base_name,
            self.t.into_opposite(),
            self.s.into_opposite(),
            self.tl.clone(),
            self.tr.clone(),
        )
    }
}

pub(crate) fn co_name(name: &str) -> String {
    match name.strip_suffix("^op") {
        Some(n) => String::from(n),
        None => format!("{}^op", name),
    }
}

pub(crate) const LEFT_AXIOMS: [AxiomId; 11] = [
    AxiomId::LbA1,
    AxiomId::LbA2,
    AxiomId::LbA3,
    AxiomId::LbWelldef,
    AxiomId::LbCompat,
    AxiomId::LbModule,
    AxiomId::LbMult,
    AxiomId::LbBimod,
    AxiomId::LbCoassoc,
    AxiomId::LbPentagon,
    AxiomId::LbTakeuchi,
];

type Spec = (usize, Act, usize, Act);

/// Checks on one left bialgebroid sharing a cache of balanced products.
pub struct LeftChecker<'a, F> {
    pub bg: &'a LeftBialgebroid<F>,
    pub cache: SpaceCache<F>,
}

impl<'a, F: Field> LeftChecker<'a, F> {
    fn alg(&self) -> &Algebra<F> {
        &self.bg.a
    }

    pub fn space(&self, arity: usize, specs: &[Spec]) -> Arc<BalancedTensorSpace<F>> {
        let m = &self.bg.modules;
        let bals = specs.iter().map(|&(i, x, j, y)| Balancing::new(i, m.get(x), j, m.get(y))).collect();
        self.cache.get(arity, bals).expect("module structures share the base")
    }

    pub fn plain(&self, arity: usize) -> Arc<BalancedTensorSpace<F>> {
        self.cache.plain(arity)
    }

    /// `_B A ⊗ A^B`.
    pub fn qst(&self) -> Arc<BalancedTensorSpace<F>> {
        self.space(2, &[(0, Act::Ls, 1, Act::Lt)])
    }

    /// `A^B ⊗ ^B A`, the domain of `T_λ`.
    pub fn qlam(&self) -> Arc<BalancedTensorSpace<F>> {
        self.space(2, &[(0, Act::Lt, 1, Act::Rt)])
    }

    /// `A_B ⊗ _B A`, the domain of `T_ρ`.
    pub fn qrho(&self) -> Arc<BalancedTensorSpace<F>> {
        self.space(2, &[(0, Act::Rs, 1, Act::Ls)])
    }

    /// `_B A ⊗ _{B'}A^B ⊗ A^{B'}`.
    pub fn q3c(&self) -> Arc<BalancedTensorSpace<F>> {
        self.space(3, &[(0, Act::Ls, 1, Act::Lt), (1, Act::Ls, 2, Act::Lt)])
    }

    fn descended(&self, dom: &BalancedTensorSpace<F>, cols: &[SVec<F>], what: &str) -> Result<Matrix<F>> {
        let qst = self.qst();
        let st = [Stage::new(Op::Legs(0, 1, cols), &*qst)];
        let out = evaluate(self.alg(), dom, &st, what).map_err(Error::WellDefinednessViolated)?;
        Ok(Matrix::from_sparse_cols(qst.dim(), &out))
    }

    /// `T_λ: A^B ⊗ ^B A → _B A ⊗ A^B` on quotient coordinates.
    pub fn t_lambda(&self) -> Result<Matrix<F>> {
        self.descended(&self.qlam(), self.bg.tl_cols(), "T_λ")
    }

    /// `T_ρ: A_B ⊗ _B A → _B A ⊗ A^B` on quotient coordinates.
    pub fn t_rho(&self) -> Result<Matrix<F>> {
        self.descended(&self.qrho(), self.bg.tr_cols(), "T_ρ")
    }

    pub fn check(&self, axiom: AxiomId) -> Status {
        match axiom {
            AxiomId::LbA1 => {
                let r = check_a1(self.alg());
                if r.passes() {
                    Status::Pass
                } else {
                    Status::Fail(Witness::msg(format!("{:?}", r)))
                }
            }
            AxiomId::LbA2 => match check_a2(&self.bg.modules.ls, &self.bg.modules.lt) {
                Ok(r) if r.passes() => Status::Pass,
                Ok(r) => Status::Fail(Witness::msg(format!("{:?}", r))),
                Err(e) => Status::Fail(Witness::msg(format!("{}", e))),
            },
            AxiomId::LbA3 => match check_a3(self.alg(), &self.qst(), Side::Right) {
                Ok(r) if r.passes() => Status::Pass,
                Ok(r) => Status::Fail(Witness::msg(format!("{:?}", r))),
                Err(e) => Status::Fail(Witness::msg(format!("{}", e))),
            },
            AxiomId::LbWelldef => status(self.welldef()),
            AxiomId::LbCompat => status(self.compat()),
            AxiomId::LbModule => status(self.module()),
            AxiomId::LbMult => status(self.mult()),
            AxiomId::LbBimod => status(self.bimod()),
            AxiomId::LbCoassoc => status(self.coassoc()),
            AxiomId::LbPentagon => self.pentagon(),
            AxiomId::LbTakeuchi => status(self.takeuchi()),
            other => Status::Skipped(format!("{} is not a left bialgebroid identity", other.code())),
        }
    }

    fn base_label(&self, x: usize) -> String {
        format!("{}:{}", self.bg.base_name, self.bg.base.label(x))
    }

    fn welldef(&self) -> core::result::Result<(), Witness> {
        let (alg, m) = (self.alg(), &self.bg.modules);
        let (plain, qst) = (self.plain(2), self.qst());
        let (tl, tr) = (self.bg.tl_cols(), self.bg.tr_cols());
        for x in 0..self.bg.base_dim() {
            let p1 = [Stage::new(Op::Leg(0, m.cols(Act::Ls, x)), &*plain), Stage::new(Op::Legs(0, 1, tl), &*qst)];
            let p2 = [Stage::new(Op::Legs(0, 1, tl), &*qst), Stage::new(Op::Leg(1, m.cols(Act::Rt, x)), &*qst)];
            compare_paths(alg, &plain, &p1, &p2, "T̃_λ(s(x)a⊗b) = T̃_λ(a⊗b)(1⊗t(x))")
                .map_err(|w| prefixed(w, &[self.base_label(x)]))?;
            let p1 = [Stage::new(Op::Leg(1, m.cols(Act::Lt, x)), &*plain), Stage::new(Op::Legs(0, 1, tr), &*qst)];
            let p2 = [Stage::new(Op::Legs(0, 1, tr), &*qst), Stage::new(Op::Leg(0, m.cols(Act::Rs, x)), &*qst)];
            compare_paths(alg, &plain, &p1, &p2, "T̃_ρ(a⊗t(x)b) = T̃_ρ(a⊗b)(s(x)⊗1)")
                .map_err(|w| prefixed(w, &[self.base_label(x)]))?;
        }
        Ok(())
    }

    fn compat(&self) -> core::result::Result<(), Witness> {
        let alg = self.alg();
        let (p3, qst) = (self.plain(3), self.qst());
        let mid1 = self.space(3, &[(0, Act::Ls, 1, Act::Lt)]);
        let mid2 = self.space(3, &[(1, Act::Ls, 2, Act::Lt)]);
        let (tl, tr) = (self.bg.tl_cols(), self.bg.tr_cols());
        let p1 = [Stage::new(Op::Legs(0, 1, tl), &*mid1), Stage::new(Op::Mult(1, 2), &*qst)];
        let p2 = [Stage::new(Op::Legs(1, 2, tr), &*mid2), Stage::new(Op::Mult(1, 0), &*qst)];
        compare_paths(alg, &p3, &p1, &p2, "T̃_λ(a⊗b)(1⊗c) = T̃_ρ(b⊗c)(a⊗1)")
    }

    fn module(&self) -> core::result::Result<(), Witness> {
        let alg = self.alg();
        let (p2, p3, qst) = (self.plain(2), self.plain(3), self.qst());
        let (tl, tr) = (self.bg.tl_cols(), self.bg.tr_cols());
        // (b, a, c): T̃_λ(ba⊗c) = T̃_λ(b⊗c)(a⊗1)
        let mid = self.space(3, &[(0, Act::Ls, 2, Act::Lt)]);
        let l1 = [Stage::new(Op::Mult(0, 1), &*p2), Stage::new(Op::Legs(0, 1, tl), &*qst)];
        let l2 = [Stage::new(Op::Legs(0, 2, tl), &*mid), Stage::new(Op::Mult(0, 1), &*qst)];
        compare_paths(alg, &p3, &l1, &l2, "T̃_λ(ba⊗c) = T̃_λ(b⊗c)(a⊗1)")?;
        // (a, b, c): T̃_ρ(a⊗bc) = T̃_ρ(a⊗b)(1⊗c)
        let mid = self.space(3, &[(0, Act::Ls, 1, Act::Lt)]);
        let r1 = [Stage::new(Op::Mult(1, 2), &*p2), Stage::new(Op::Legs(0, 1, tr), &*qst)];
        let r2 = [Stage::new(Op::Legs(0, 1, tr), &*mid), Stage::new(Op::Mult(1, 2), &*qst)];
        compare_paths(alg, &p3, &r1, &r2, "T̃_ρ(a⊗bc) = T̃_ρ(a⊗b)(1⊗c)")
    }

    fn mult(&self) -> core::result::Result<(), Witness> {
        let alg = self.alg();
        let (p2, p3, qst) = (self.plain(2), self.plain(3), self.qst());
        let (tl, tr) = (self.bg.tl_cols(), self.bg.tr_cols());
        // T̃_λ(a⊗bc) = Δ(b)T̃_λ(a⊗c)
        let m1 = self.space(3, &[(0, Act::Ls, 2, Act::Lt)]);
        let m2 = self.space(3, &[(0, Act::Ls, 1, Act::Lt), (1, Act::Rt, 2, Act::Lt)]);
        let l1 = [Stage::new(Op::Mult(1, 2), &*p2), Stage::new(Op::Legs(0, 1, tl), &*qst)];
        let l2 = [
            Stage::new(Op::Legs(0, 2, tl), &*m1),
            Stage::new(Op::Legs(0, 1, tl), &*m2),
            Stage::new(Op::Mult(1, 2), &*qst),
        ];
        compare_paths(alg, &p3, &l1, &l2, "T̃_λ(a⊗bc) = Δ(b)T̃_λ(a⊗c)")?;
        // T̃_ρ(ab⊗c) = Δ(a)T̃_ρ(b⊗c)
        let m1 = self.space(3, &[(1, Act::Ls, 2, Act::Lt)]);
        let m2 = self.space(3, &[(0, Act::Ls, 2, Act::Lt), (0, Act::Rs, 1, Act::Ls)]);
        let r1 = [Stage::new(Op::Mult(0, 1), &*p2), Stage::new(Op::Legs(0, 1, tr), &*qst)];
        let r2 = [
            Stage::new(Op::Legs(1, 2, tr), &*m1),
            Stage::new(Op::Legs(0, 2, tr), &*m2),
            Stage::new(Op::Mult(0, 1), &*qst),
        ];
        compare_paths(alg, &p3, &r1, &r2, "T̃_ρ(ab⊗c) = Δ(a)T̃_ρ(b⊗c)")
    }

    fn bimod(&self) -> core::result::Result<(), Witness> {
        let alg = self.alg();
        let n = alg.dim();
        let p = self.bg.base_dim();
        let m = &self.bg.modules;
        let qst = self.qst();
        let (tl, tr) = (self.bg.tl_cols(), self.bg.tr_cols());
        let lbl = |v: &[usize], a: usize, b: usize| {
            let mut t: Vec<String> = v.iter().map(|&x| self.base_label(x)).collect();
            t.push(String::from(alg.label(a)));
            t.push(String::from(alg.label(b)));
            t
        };
        for x in 0..p {
            for y in 0..p {
                for x2 in 0..p {
                    for y2 in 0..p {
                        // s(x)t(y) c s(x')t(y')
                        let wrap = |c: &[(usize, F)]| {
                            let v = apply_cols(m.cols(Act::Rs, x2), c);
                            let v = apply_cols(m.cols(Act::Rt, y2), &v);
                            let v = apply_cols(m.cols(Act::Lt, y), &v);
                            apply_cols(m.cols(Act::Ls, x), &v)
                        };
                        for a in 0..n {
                            for b in 0..n {
                                let eb = [(b, F::one())];
                                let ea = [(a, F::one())];
                                // T̃_λ(a⊗s(x)t(y)bs(x')t(y')) = (t(y)⊗s(x))T̃_λ(t(y')a⊗b)(1⊗s(x'))
                                let mid = wrap(&eb);
                                let lhs: SVec<F> = apply_cols(tl, &mid.iter().map(|(c, k)| (a * n + c, k.clone())).collect::<Vec<_>>());
                                let ta = apply_cols(m.cols(Act::Lt, y2), &ea);
                                let rhs = apply_cols(tl, &ta.iter().map(|(c, k)| (c * n + b, k.clone())).collect::<Vec<_>>());
                                let rhs = map_leg(&rhs, n, 2, 0, m.cols(Act::Lt, y));
                                let rhs = map_leg(&rhs, n, 2, 1, m.cols(Act::Ls, x));
                                let rhs = map_leg(&rhs, n, 2, 1, m.cols(Act::Rs, x2));
                                if qst.project(&lhs) != qst.project(&rhs) {
                                    return Err(Witness::new(
                                        "T̃_λ(a⊗s(x)t(y)bs(x′)t(y′)) = (t(y)⊗s(x))T̃_λ(t(y′)a⊗b)(1⊗s(x′)) fails",
                                        lbl(&[x, y, x2, y2], a, b),
                                    ));
                                }
                                // T̃_ρ(s(x)t(y)as(x')t(y')⊗b) = (t(y)⊗s(x))T̃_ρ(a⊗s(x')b)(t(y')⊗1)
                                let mid = wrap(&ea);
                                let lhs = apply_cols(tr, &mid.iter().map(|(c, k)| (c * n + b, k.clone())).collect::<Vec<_>>());
                                let sb = apply_cols(m.cols(Act::Ls, x2), &eb);
                                let rhs = apply_cols(tr, &sb.iter().map(|(c, k)| (a * n + c, k.clone())).collect::<Vec<_>>());
                                let rhs = map_leg(&rhs, n, 2, 0, m.cols(Act::Lt, y));
                                let rhs = map_leg(&rhs, n, 2, 1, m.cols(Act::Ls, x));
                                let rhs = map_leg(&rhs, n, 2, 0, m.cols(Act::Rt, y2));
                                if qst.project(&lhs) != qst.project(&rhs) {
                                    return Err(Witness::new(
                                        "T̃_ρ(s(x)t(y)as(x′)t(y′)⊗b) = (t(y)⊗s(x))T̃_ρ(a⊗s(x′)b)(t(y′)⊗1) fails",
                                        lbl(&[x, y, x2, y2], a, b),
                                    ));
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    fn coassoc(&self) -> core::result::Result<(), Witness> {
        let alg = self.alg();
        let (p3, q3c) = (self.plain(3), self.q3c());
        let (tl, tr) = (self.bg.tl_cols(), self.bg.tr_cols());
        let m1 = self.space(3, &[(1, Act::Ls, 2, Act::Lt)]);
        let m2 = self.space(3, &[(0, Act::Ls, 1, Act::Lt)]);
        let p1 = [Stage::new(Op::Legs(1, 2, tr), &*m1), Stage::new(Op::Legs(0, 1, tl), &*q3c)];
        let p2 = [Stage::new(Op::Legs(0, 1, tl), &*m2), Stage::new(Op::Legs(1, 2, tr), &*q3c)];
        compare_paths(alg, &p3, &p1, &p2, "(T̃_λ⊗ι)(ι⊗T̃_ρ) = (ι⊗T̃_ρ)(T̃_λ⊗ι)")
    }

    /// Non-degeneracy of the threefold product under right multiplication in
    /// the first and the last leg.
    pub fn pentagon_hypothesis(&self) -> Result<bool> {
        let q3c = self.q3c();
        Ok(nondegenerate_on_leg(self.alg(), &q3c, 0, Side::Right)?
            && nondegenerate_on_leg(self.alg(), &q3c, 2, Side::Right)?)
    }

    fn pentagon(&self) -> Status {
        match self.pentagon_hypothesis() {
            Ok(true) => {}
            Ok(false) => {
                return Status::Skipped(String::from(
                    "HypothesisUnverified: the threefold product is degenerate in the first or last leg",
                ))
            }
            Err(e) => return Status::Skipped(format!("HypothesisUnverified: {}", e)),
        }
        status(self.pentagon_identities())
    }

    fn pentagon_identities(&self) -> core::result::Result<(), Witness> {
        let alg = self.alg();
        let q3c = self.q3c();
        let (tl, tr) = (self.bg.tl_cols(), self.bg.tr_cols());
        use Act::*;
        let start = self.space(3, &[(0, Lt, 1, Rt), (1, Lt, 2, Rt)]);
        let top1 = self.space(3, &[(0, Lt, 1, Rt), (1, Ls, 2, Lt)]);
        let bot1 = self.space(3, &[(0, Ls, 1, Lt), (0, Lt, 2, Rt)]);
        let bot2 = self.space(3, &[(0, Ls, 2, Lt), (1, Lt, 2, Rt)]);
        let top = [Stage::new(Op::Legs(1, 2, tl), &*top1), Stage::new(Op::Legs(0, 1, tl), &*q3c)];
        let bot = [
            Stage::new(Op::Legs(0, 1, tl), &*bot1),
            Stage::new(Op::Legs(0, 2, tl), &*bot2),
            Stage::new(Op::Legs(1, 2, tl), &*q3c),
        ];
        compare_paths(alg, &start, &top, &bot, "(T_λ)_12(T_λ)_23 = (T_λ)_23(T_λ)_13(T_λ)_12")?;
        let start = self.space(3, &[(0, Rs, 1, Ls), (1, Rs, 2, Ls)]);
        let top1 = self.space(3, &[(0, Ls, 1, Lt), (1, Rs, 2, Ls)]);
        let bot1 = self.space(3, &[(0, Rs, 2, Ls), (1, Ls, 2, Lt)]);
        let bot2 = self.space(3, &[(0, Ls, 2, Lt), (0, Rs, 1, Ls)]);
        let top = [Stage::new(Op::Legs(0, 1, tr), &*top1), Stage::new(Op::Legs(1, 2, tr), &*q3c)];
        let bot = [
            Stage::new(Op::Legs(1, 2, tr), &*bot1),
            Stage::new(Op::Legs(0, 2, tr), &*bot2),
            Stage::new(Op::Legs(0, 1, tr), &*q3c),
        ];
        compare_paths(alg, &start, &top, &bot, "(T_ρ)_23(T_ρ)_12 = (T_ρ)_12(T_ρ)_13(T_ρ)_23")
    }

    /// `b⊗c ↦ Δ(a)(b⊗c)`, read off from `T̃_ρ(a⊗c)(b⊗1)`, on ambient vectors.
    fn delta_ambient(&self, a: &[(usize, F)], v: &[(usize, F)]) -> SVec<F> {
        let alg = self.alg();
        let n = alg.dim();
        let tr = self.bg.tr_cols();
        let mut acc = alloc::collections::BTreeMap::new();
        for (bc, coef) in v {
            let (b, c) = (bc / n, bc % n);
            let ac: Vec<(usize, F)> = a.iter().map(|(i, x)| (i * n + c, x.clone() * coef)).collect();
            let w = apply_cols(tr, &ac);
            let w = map_leg(&w, n, 2, 0, &alg.right_mult(b).sparse_cols());
            for (k, x) in w {
                crate::linalg::acc_add(&mut acc, k, x);
            }
        }
        crate::linalg::acc_finish(acc)
    }

    /// `Δ(a)` as an endomorphism of `_B A ⊗ A^B` in quotient coordinates.
    pub fn delta_of(&self, a: &[(usize, F)]) -> Result<Matrix<F>> {
        let qst = self.qst();
        let f = |v: &[(usize, F)]| self.delta_ambient(a, v);
        let st = [Stage::new(Op::Func(&f), &*qst)];
        let out = evaluate(self.alg(), &qst, &st, "Δ(a)").map_err(Error::WellDefinednessViolated)?;
        Ok(Matrix::from_sparse_cols(qst.dim(), &out))
    }

    /// Stacked matrix of `w ↦ (w·(c on leg))_c` on `_B A ⊗ A^B`.
    fn stacked_right_mult(&self, leg: usize) -> core::result::Result<Matrix<F>, Witness> {
        let alg = self.alg();
        let qst = self.qst();
        let mut blocks = Vec::new();
        for c in 0..alg.dim() {
            let cols = alg.right_mult(c).sparse_cols();
            let st = [Stage::new(Op::Leg(leg, &cols), &*qst)];
            let out = evaluate(alg, &qst, &st, "right multiplication")?;
            blocks.push(Matrix::from_sparse_cols(qst.dim(), &out));
        }
        Ok(Matrix::vstack(&blocks))
    }

    fn takeuchi(&self) -> core::result::Result<(), Witness> {
        let alg = self.alg();
        let n = alg.dim();
        let qst = self.qst();
        let d = qst.dim();
        for a in 0..n {
            let ea = [(a, F::one())];
            let f = |v: &[(usize, F)]| self.delta_ambient(&ea, v);
            check_descent(alg, &qst, &Op::Func(&f), &qst, "Δ(a)")
                .map_err(|w| prefixed(w, &[String::from(alg.label(a))]))?;
        }
        if d == 0 {
            return Ok(());
        }
        let m1 = self.stacked_right_mult(1)?;
        // Δ(a)(b⊗c) = w·(1⊗c) with w = Δ(a)(b⊗1), expected to be T̃_λ(b⊗a)
        let mut rhs = Matrix::zeros(d * n, n * n);
        let mut expected = Matrix::zeros(d, n * n);
        for a in 0..n {
            for b in 0..n {
                let col = a * n + b;
                for c in 0..n {
                    let v = qst.project(&self.delta_ambient(&[(a, F::one())], &[(b * n + c, F::one())]));
                    for (k, x) in v {
                        rhs.set(c * d + k, col, x);
                    }
                }
                for (k, x) in qst.project(&self.bg.tl_cols()[b * n + a]) {
                    expected.set(k, col, x);
                }
            }
        }
        let tuple = |col: usize| vec![String::from(alg.label(col / n)), String::from(alg.label(col % n))];
        if solve_many(&m1, &rhs).is_none() {
            for col in 0..n * n {
                if crate::linalg::solve(&m1, &rhs.col(col)).is_none() {
                    return Err(Witness::new("Δ(a)(b⊗1) does not exist in the balanced product", tuple(col)));
                }
            }
        }
        let back = m1.mul(&expected);
        if let Some((_, col)) = back.first_difference(&rhs) {
            return Err(Witness::new("Δ(a)(b⊗1) differs from T̃_λ(b⊗a)", tuple(col)));
        }
        Ok(())
    }

    /// Evaluates `T̃_λ` on one pair and projects into `_B A ⊗ A^B`.
    pub fn tl_value(&self, a: usize, b: usize) -> SVec<F> {
        let qst = self.qst();
        let n = self.alg().dim();
        evaluate_at(self.alg(), &self.plain(2), &[Stage::new(Op::Legs(0, 1, self.bg.tl_cols()), &*qst)], &[(a * n + b, F::one())])
    }
}
