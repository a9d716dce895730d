use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use super::left::co_name;
use super::{apply_cols, check_embedding_pair, flip_matrix, lift_cols, prefixed, status, Act, LeftBialgebroid, Modules};
use crate::algebra::{check_a1, check_a2, Algebra, BaseEmbedding, EmbeddingKind, Side};
use crate::catalog::{AxiomId, Entry, Status};
use crate::error::{Error, Result, Witness};
use crate::field::Field;
use crate::linalg::{acc_add, acc_finish, solve, solve_many, Matrix, SVec};
use crate::tensor::{check_a3, check_descent, compare_paths, evaluate, map_leg, Balancing, BalancedTensorSpace, Op, SpaceCache, Stage};

/// A right multiplier bialgebroid `(A, C, s, t, Δ)` stored through the lifted
/// canonical maps `λT̃(a⊗b) = (a⊗1)Δ(b)` and `ρT̃(a⊗b) = (1⊗b)Δ(a)`, read in
/// `^C A ⊗ A_C`.
#[derive(Clone, Debug)]
pub struct RightBialgebroid<F> {
    pub a: Algebra<F>,
    pub base: Algebra<F>,
    pub base_name: String,
    pub s: BaseEmbedding<F>,
    pub t: BaseEmbedding<F>,
    pub lt: Matrix<F>,
    pub rt: Matrix<F>,
    pub modules: Modules<F>,
    lt_cols: Vec<SVec<F>>,
    rt_cols: Vec<SVec<F>>,
}

pub fn make_right_bialgebroid<F: Field>(
    a: &Algebra<F>,
    base_name: &str,
    s: BaseEmbedding<F>,
    t: BaseEmbedding<F>,
    lt: Matrix<F>,
    rt: Matrix<F>,
) -> Result<RightBialgebroid<F>> {
    let bg = RightBialgebroid::new(a, base_name, s, t, lt, rt)?;
    bg.certify()?;
    Ok(bg)
}

pub(crate) const RIGHT_AXIOMS: [AxiomId; 11] = [
    AxiomId::RbA1,
    AxiomId::RbA2,
    AxiomId::RbA3,
    AxiomId::RbWelldef,
    AxiomId::RbCompat,
    AxiomId::RbModule,
    AxiomId::RbMult,
    AxiomId::RbBimod,
    AxiomId::RbCoassoc,
    AxiomId::RbPentagon,
    AxiomId::RbTakeuchi,
];

impl<F: Field> RightBialgebroid<F> {
    pub fn new(
        a: &Algebra<F>,
        base_name: &str,
        s: BaseEmbedding<F>,
        t: BaseEmbedding<F>,
        lt: Matrix<F>,
        rt: Matrix<F>,
    ) -> Result<Self> {
        check_embedding_pair(&s, &t)?;
        if s.carrier_dim() != a.dim() {
            return Err(Error::ShapeMismatch(String::from("embeddings do not act on A")));
        }
        let n = a.dim();
        let lt_cols = lift_cols(&lt, n, "λT̃")?;
        let rt_cols = lift_cols(&rt, n, "ρT̃")?;
        let modules = Modules::new(&s, &t, base_name)?;
        Ok(RightBialgebroid {
            a: a.clone(),
            base: s.base.clone(),
            base_name: String::from(base_name),
            s,
            t,
            lt,
            rt,
            modules,
            lt_cols,
            rt_cols,
        })
    }

    pub fn dim(&self) -> usize {
        self.a.dim()
    }

    pub fn base_dim(&self) -> usize {
        self.base.dim()
    }

    pub fn lt_cols(&self) -> &[SVec<F>] {
        &self.lt_cols
    }

    pub fn rt_cols(&self) -> &[SVec<F>] {
        &self.rt_cols
    }

    pub fn checker(&self) -> RightChecker<'_, F> {
        RightChecker { bg: self, cache: SpaceCache::new(&self.a) }
    }

    pub fn check_axiom(&self, axiom: AxiomId) -> Status {
        self.checker().check(axiom)
    }

    pub fn check_all(&self) -> Vec<Entry> {
        let ch = self.checker();
        RIGHT_AXIOMS.iter().map(|&ax| Entry::new(ax, ch.check(ax))).collect()
    }

    pub fn certify(&self) -> Result<()> {
        for e in self.check_all() {
            if let Status::Fail(w) = e.status {
                return Err(Error::AxiomFailed { axiom: e.axiom, witness: w });
            }
        }
        Ok(())
    }

    /// The left bialgebroid `(A^op, C, t, s, Δ)`.
    pub fn to_left_opposite(&self) -> Result<LeftBialgebroid<F>> {
        LeftBialgebroid::new(
            &self.a.opposite(),
            &self.base_name,
            self.t.into_opposite(),
            self.s.into_opposite(),
            self.lt.clone(),
            self.rt.clone(),
        )
    }

    /// The co-opposite `(A, C^op, t, s, ςΔ)`.
    pub fn co_opposite(&self) -> Result<Self> {
        let base_op = self.base.opposite();
        let s = BaseEmbedding { base: base_op.clone(), images: self.t.images.clone(), kind: EmbeddingKind::Homomorphism };
        let t = BaseEmbedding { base: base_op, images: self.s.images.clone(), kind: EmbeddingKind::AntiHomomorphism };
        let sigma = flip_matrix::<F>(self.dim());
        let lt = sigma.mul(&self.rt).mul(&sigma);
        let rt = sigma.mul(&self.lt).mul(&sigma);
        RightBialgebroid::new(&self.a, &co_name(&self.base_name), s, t, lt, rt)
    }
}

type Spec = (usize, Act, usize, Act);

pub struct RightChecker<'a, F> {
    pub bg: &'a RightBialgebroid<F>,
    pub cache: SpaceCache<F>,
}

impl<'a, F: Field> RightChecker<'a, F> {
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

    /// `^C A ⊗ A_C`.
    pub fn qr(&self) -> Arc<BalancedTensorSpace<F>> {
        self.space(2, &[(0, Act::Rt, 1, Act::Rs)])
    }

    /// `A_C ⊗ _C A`, the domain of `λT`.
    pub fn qlam(&self) -> Arc<BalancedTensorSpace<F>> {
        self.space(2, &[(0, Act::Rs, 1, Act::Ls)])
    }

    /// `A^C ⊗ ^C A`, the domain of `ρT`.
    pub fn qrho(&self) -> Arc<BalancedTensorSpace<F>> {
        self.space(2, &[(0, Act::Lt, 1, Act::Rt)])
    }

    fn descended(&self, dom: &BalancedTensorSpace<F>, cols: &[SVec<F>], what: &str) -> Result<Matrix<F>> {
        let qr = self.qr();
        let st = [Stage::new(Op::Legs(0, 1, cols), &*qr)];
        let out = evaluate(self.alg(), dom, &st, what).map_err(Error::WellDefinednessViolated)?;
        Ok(Matrix::from_sparse_cols(qr.dim(), &out))
    }

    /// `λT: A_C ⊗ _C A → ^C A ⊗ A_C`.
    pub fn lambda_t(&self) -> Result<Matrix<F>> {
        self.descended(&self.qlam(), self.bg.lt_cols(), "λT")
    }

    /// `ρT: A^C ⊗ ^C A → ^C A ⊗ A_C`.
    pub fn rho_t(&self) -> Result<Matrix<F>> {
        self.descended(&self.qrho(), self.bg.rt_cols(), "ρT")
    }

    pub fn check(&self, axiom: AxiomId) -> Status {
        match axiom {
            AxiomId::RbA1 => {
                let r = check_a1(self.alg());
                if r.passes() {
                    Status::Pass
                } else {
                    Status::Fail(Witness::msg(format!("{:?}", r)))
                }
            }
            AxiomId::RbA2 => match check_a2(&self.bg.modules.rt, &self.bg.modules.rs) {
                Ok(r) if r.passes() => Status::Pass,
                Ok(r) => Status::Fail(Witness::msg(format!("{:?}", r))),
                Err(e) => Status::Fail(Witness::msg(format!("{}", e))),
            },
            AxiomId::RbA3 => match check_a3(self.alg(), &self.qr(), Side::Left) {
                Ok(r) if r.passes() => Status::Pass,
                Ok(r) => Status::Fail(Witness::msg(format!("{:?}", r))),
                Err(e) => Status::Fail(Witness::msg(format!("{}", e))),
            },
            AxiomId::RbWelldef => status(self.welldef()),
            AxiomId::RbCompat => status(self.compat()),
            AxiomId::RbModule => status(self.module()),
            AxiomId::RbMult => status(self.mult()),
            AxiomId::RbBimod => status(self.bimod()),
            AxiomId::RbCoassoc => status(self.coassoc()),
            AxiomId::RbPentagon => match self.bg.to_left_opposite() {
                Ok(l) => l.check_axiom(AxiomId::LbPentagon),
                Err(e) => Status::Fail(Witness::msg(format!("{}", e))),
            },
            AxiomId::RbTakeuchi => status(self.takeuchi()),
            other => Status::Skipped(format!("{} is not a right bialgebroid identity", other.code())),
        }
    }

    fn base_label(&self, x: usize) -> String {
        format!("{}:{}", self.bg.base_name, self.bg.base.label(x))
    }

    fn welldef(&self) -> core::result::Result<(), Witness> {
        let (alg, m) = (self.alg(), &self.bg.modules);
        let (plain, qr) = (self.plain(2), self.qr());
        let (lt, rt) = (self.bg.lt_cols(), self.bg.rt_cols());
        for z in 0..self.bg.base_dim() {
            let p1 = [Stage::new(Op::Leg(0, m.cols(Act::Rt, z)), &*plain), Stage::new(Op::Legs(0, 1, lt), &*qr)];
            let p2 = [Stage::new(Op::Legs(0, 1, lt), &*qr), Stage::new(Op::Leg(1, m.cols(Act::Ls, z)), &*qr)];
            compare_paths(alg, &plain, &p1, &p2, "λT̃(at(z)⊗b) = (1⊗s(z))λT̃(a⊗b)")
                .map_err(|w| prefixed(w, &[self.base_label(z)]))?;
            let p1 = [Stage::new(Op::Leg(1, m.cols(Act::Rs, z)), &*plain), Stage::new(Op::Legs(0, 1, rt), &*qr)];
            let p2 = [Stage::new(Op::Legs(0, 1, rt), &*qr), Stage::new(Op::Leg(0, m.cols(Act::Lt, z)), &*qr)];
            compare_paths(alg, &plain, &p1, &p2, "ρT̃(a⊗bs(z)) = (t(z)⊗1)ρT̃(a⊗b)")
                .map_err(|w| prefixed(w, &[self.base_label(z)]))?;
        }
        Ok(())
    }

    fn compat(&self) -> core::result::Result<(), Witness> {
        let alg = self.alg();
        let (p3, qr) = (self.plain(3), self.qr());
        let (lt, rt) = (self.bg.lt_cols(), self.bg.rt_cols());
        let m1 = self.space(3, &[(0, Act::Rt, 1, Act::Rs)]);
        let m2 = self.space(3, &[(1, Act::Rt, 2, Act::Rs)]);
        let p1 = [Stage::new(Op::Legs(0, 1, lt), &*m1), Stage::new(Op::Mult(2, 1), &*qr)];
        let p2 = [Stage::new(Op::Legs(1, 2, rt), &*m2), Stage::new(Op::Mult(0, 1), &*qr)];
        compare_paths(alg, &p3, &p1, &p2, "(ι⊗m^op)(λT̃⊗ι) = (m⊗ι)(ι⊗ρT̃)")
    }

    fn module(&self) -> core::result::Result<(), Witness> {
        let alg = self.alg();
        let (p2, p3, qr) = (self.plain(2), self.plain(3), self.qr());
        let (lt, rt) = (self.bg.lt_cols(), self.bg.rt_cols());
        let mid = self.space(3, &[(1, Act::Rt, 2, Act::Rs)]);
        let l1 = [Stage::new(Op::Mult(0, 1), &*p2), Stage::new(Op::Legs(0, 1, lt), &*qr)];
        let l2 = [Stage::new(Op::Legs(1, 2, lt), &*mid), Stage::new(Op::Mult(0, 1), &*qr)];
        compare_paths(alg, &p3, &l1, &l2, "λT̃(ab⊗c) = (a⊗1)λT̃(b⊗c)")?;
        let mid = self.space(3, &[(0, Act::Rt, 1, Act::Rs)]);
        let r1 = [Stage::new(Op::Mult(2, 1), &*p2), Stage::new(Op::Legs(0, 1, rt), &*qr)];
        let r2 = [Stage::new(Op::Legs(0, 1, rt), &*mid), Stage::new(Op::Mult(2, 1), &*qr)];
        compare_paths(alg, &p3, &r1, &r2, "ρT̃(a⊗cb) = (1⊗c)ρT̃(a⊗b)")
    }

    fn mult(&self) -> core::result::Result<(), Witness> {
        let alg = self.alg();
        let (p2, p3, qr) = (self.plain(2), self.plain(3), self.qr());
        let (lt, rt) = (self.bg.lt_cols(), self.bg.rt_cols());
        let m1 = self.space(3, &[(0, Act::Rt, 1, Act::Rs)]);
        let m2 = self.space(3, &[(0, Act::Rt, 2, Act::Rs), (1, Act::Rs, 2, Act::Ls)]);
        let l1 = [Stage::new(Op::Mult(1, 2), &*p2), Stage::new(Op::Legs(0, 1, lt), &*qr)];
        let l2 = [
            Stage::new(Op::Legs(0, 1, lt), &*m1),
            Stage::new(Op::Legs(0, 2, lt), &*m2),
            Stage::new(Op::Mult(1, 2), &*qr),
        ];
        compare_paths(alg, &p3, &l1, &l2, "λT̃(a⊗bc) = λT̃(a⊗b)Δ(c)")?;
        let m1 = self.space(3, &[(0, Act::Rt, 2, Act::Rs)]);
        let m2 = self.space(3, &[(0, Act::Rt, 1, Act::Lt), (1, Act::Rt, 2, Act::Rs)]);
        let r1 = [Stage::new(Op::Mult(0, 1), &*p2), Stage::new(Op::Legs(0, 1, rt), &*qr)];
        let r2 = [
            Stage::new(Op::Legs(0, 2, rt), &*m1),
            Stage::new(Op::Legs(1, 2, rt), &*m2),
            Stage::new(Op::Mult(0, 1), &*qr),
        ];
        compare_paths(alg, &p3, &r1, &r2, "ρT̃(ab⊗c) = ρT̃(a⊗c)Δ(b)")
    }

    fn bimod(&self) -> core::result::Result<(), Witness> {
        let alg = self.alg();
        let n = alg.dim();
        let p = self.bg.base_dim();
        let m = &self.bg.modules;
        let qr = self.qr();
        let (lt, rt) = (self.bg.lt_cols(), self.bg.rt_cols());
        let lbl = |v: &[usize], a: usize, b: usize| {
            let mut t: Vec<String> = v.iter().map(|&x| self.base_label(x)).collect();
            t.push(String::from(alg.label(a)));
            t.push(String::from(alg.label(b)));
            t
        };
        let right_wrap = |c: &[(usize, F)], y2: usize, x2: usize| {
            let v = apply_cols(m.cols(Act::Rs, y2), c);
            apply_cols(m.cols(Act::Rt, x2), &v)
        };
        for z in 0..p {
            for x in 0..p {
                for y2 in 0..p {
                    for x2 in 0..p {
                        for a in 0..n {
                            for b in 0..n {
                                let (ea, eb) = ([(a, F::one())], [(b, F::one())]);
                                let tail = |w: &[(usize, F)]| {
                                    let w = map_leg(w, n, 2, 0, m.cols(Act::Rs, y2));
                                    map_leg(&w, n, 2, 1, m.cols(Act::Rt, x2))
                                };
                                // λT̃(at(z)⊗t(x)bs(y')t(x')) = (1⊗s(z)t(x))λT̃(a⊗b)(s(y')⊗t(x'))
                                let l0 = apply_cols(m.cols(Act::Rt, z), &ea);
                                let l1 = right_wrap(&apply_cols(m.cols(Act::Lt, x), &eb), y2, x2);
                                let lhs = apply_cols(lt, &tensor(&l0, &l1, n));
                                let rhs = apply_cols(lt, &[(a * n + b, F::one())]);
                                let rhs = map_leg(&rhs, n, 2, 1, m.cols(Act::Lt, x));
                                let rhs = tail(&map_leg(&rhs, n, 2, 1, m.cols(Act::Ls, z)));
                                if qr.project(&lhs) != qr.project(&rhs) {
                                    return Err(Witness::new(
                                        "λT̃(at(z)⊗t(x)bs(y′)t(x′)) = (1⊗s(z)t(x))λT̃(a⊗b)(s(y′)⊗t(x′)) fails",
                                        lbl(&[z, x, y2, x2], a, b),
                                    ));
                                }
                                // ρT̃(s(y)as(y')t(x')⊗bs(z)) = (s(y)t(z)⊗1)ρT̃(a⊗b)(s(y')⊗t(x')), with y running over x
                                let r0 = apply_cols(m.cols(Act::Ls, x), &right_wrap(&ea, y2, x2));
                                let r1 = apply_cols(m.cols(Act::Rs, z), &eb);
                                let lhs = apply_cols(rt, &tensor(&r0, &r1, n));
                                let rhs = apply_cols(rt, &[(a * n + b, F::one())]);
                                let rhs = map_leg(&rhs, n, 2, 0, m.cols(Act::Lt, z));
                                let rhs = tail(&map_leg(&rhs, n, 2, 0, m.cols(Act::Ls, x)));
                                if qr.project(&lhs) != qr.project(&rhs) {
                                    return Err(Witness::new(
                                        "ρT̃(s(y)as(y′)t(x′)⊗bs(z)) = (s(y)t(z)⊗1)ρT̃(a⊗b)(s(y′)⊗t(x′)) fails",
                                        lbl(&[x, z, y2, x2], a, b),
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
        let p3 = self.plain(3);
        let (lt, rt) = (self.bg.lt_cols(), self.bg.rt_cols());
        let target = self.space(3, &[(0, Act::Rt, 1, Act::Rs), (1, Act::Rt, 2, Act::Rs)]);
        let m1 = self.space(3, &[(1, Act::Rt, 2, Act::Rs)]);
        let m2 = self.space(3, &[(0, Act::Rt, 1, Act::Rs)]);
        let p1 = [Stage::new(Op::Legs(1, 2, rt), &*m1), Stage::new(Op::Legs(0, 1, lt), &*target)];
        let p2 = [Stage::new(Op::Legs(0, 1, lt), &*m2), Stage::new(Op::Legs(1, 2, rt), &*target)];
        compare_paths(alg, &p3, &p1, &p2, "(λT̃⊗ι)(ι⊗ρT̃) = (ι⊗ρT̃)(λT̃⊗ι)")
    }

    /// `b⊗c ↦ (b⊗c)Δ(a)`, read off from `(b⊗1)ρT̃(a⊗c)`.
    fn delta_ambient(&self, a: &[(usize, F)], v: &[(usize, F)]) -> SVec<F> {
        let alg = self.alg();
        let n = alg.dim();
        let rt = self.bg.rt_cols();
        let mut acc = alloc::collections::BTreeMap::new();
        for (bc, coef) in v {
            let (b, c) = (bc / n, bc % n);
            let ac: Vec<(usize, F)> = a.iter().map(|(i, x)| (i * n + c, x.clone() * coef)).collect();
            let w = map_leg(&apply_cols(rt, &ac), n, 2, 0, &alg.left_mult(b).sparse_cols());
            for (k, x) in w {
                acc_add(&mut acc, k, x);
            }
        }
        acc_finish(acc)
    }

    fn takeuchi(&self) -> core::result::Result<(), Witness> {
        let alg = self.alg();
        let n = alg.dim();
        let qr = self.qr();
        let d = qr.dim();
        for a in 0..n {
            let ea = [(a, F::one())];
            let f = |v: &[(usize, F)]| self.delta_ambient(&ea, v);
            check_descent(alg, &qr, &Op::Func(&f), &qr, "Δ(a)")
                .map_err(|w| prefixed(w, &[String::from(alg.label(a))]))?;
        }
        if d == 0 {
            return Ok(());
        }
        let mut blocks = Vec::new();
        for c in 0..n {
            let cols = alg.left_mult(c).sparse_cols();
            let out = evaluate(alg, &qr, &[Stage::new(Op::Leg(1, &cols), &*qr)], "left multiplication")?;
            blocks.push(Matrix::from_sparse_cols(d, &out));
        }
        let m1 = Matrix::vstack(&blocks);
        // (b⊗c)Δ(a) = (1⊗c)w with w = (b⊗1)Δ(a), expected to be λT̃(b⊗a)
        let mut rhs = Matrix::zeros(d * n, n * n);
        let mut expected = Matrix::zeros(d, n * n);
        for a in 0..n {
            for b in 0..n {
                let col = a * n + b;
                for c in 0..n {
                    for (k, x) in qr.project(&self.delta_ambient(&[(a, F::one())], &[(b * n + c, F::one())])) {
                        rhs.set(c * d + k, col, x);
                    }
                }
                for (k, x) in qr.project(&self.bg.lt_cols()[b * n + a]) {
                    expected.set(k, col, x);
                }
            }
        }
        let tuple = |col: usize| vec![String::from(alg.label(col / n)), String::from(alg.label(col % n))];
        if solve_many(&m1, &rhs).is_none() {
            for col in 0..n * n {
                if solve(&m1, &rhs.col(col)).is_none() {
                    return Err(Witness::new("(b⊗1)Δ(a) does not exist in the balanced product", tuple(col)));
                }
            }
        }
        if let Some((_, col)) = m1.mul(&expected).first_difference(&rhs) {
            return Err(Witness::new("(b⊗1)Δ(a) differs from λT̃(b⊗a)", tuple(col)));
        }
        Ok(())
    }
}

fn tensor<F: Field>(u: &[(usize, F)], v: &[(usize, F)], n: usize) -> SVec<F> {
    let mut out = Vec::with_capacity(u.len() * v.len());
    for (i, x) in u {
        for (j, y) in v {
            out.push((i * n + j, x.clone() * y));
        }
    }
    out
}
