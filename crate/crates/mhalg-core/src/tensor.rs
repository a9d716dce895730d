//! Balanced tensor products of two or three copies of `A`, leg maps, flips,
//! multiplication arrows and the machinery for comparing two composites of
//! descended maps on such quotients.
//!
//! Ambient tensors are sparse vectors indexed by `u_0 n^{k-1} + ... + u_{k-1}`
//! where `n = dim A` and `k` is the arity. Legs are numbered from 0.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::cell::RefCell;

use crate::algebra::{Algebra, Decoration, ModuleStruct, Side};
use crate::error::{Error, Result, Witness};
use crate::field::Field;
use crate::linalg::{acc_add, acc_finish, acc_scaled, sparse_sub, Echelon, LabeledSpace, LinMap, Matrix, QuotientSpace, SVec};

fn pow(n: usize, k: usize) -> usize {
    n.pow(k as u32)
}

fn stride(n: usize, k: usize, leg: usize) -> usize {
    pow(n, k - 1 - leg)
}

/// Leg indices of an ambient basis index.
pub fn tuple_of(mut idx: usize, n: usize, k: usize) -> Vec<usize> {
    let mut t = vec![0; k];
    for slot in (0..k).rev() {
        t[slot] = idx % n;
        idx /= n;
    }
    t
}

pub fn index_of(t: &[usize], n: usize) -> usize {
    t.iter().fold(0, |acc, &u| acc * n + u)
}

/// Applies an `n × n` map, given by its sparse columns, to one leg.
pub fn map_leg<F: Field>(v: &[(usize, F)], n: usize, k: usize, leg: usize, cols: &[SVec<F>]) -> SVec<F> {
    let st = stride(n, k, leg);
    let mut acc = BTreeMap::new();
    for (idx, c) in v {
        let u = (idx / st) % n;
        let base = idx - u * st;
        for (r, x) in &cols[u] {
            acc_add(&mut acc, base + r * st, x.clone() * c);
        }
    }
    acc_finish(acc)
}

/// Applies an `n² × n²` map to the legs `l1, l2` (in that order).
pub fn map_legs<F: Field>(v: &[(usize, F)], n: usize, k: usize, l1: usize, l2: usize, cols: &[SVec<F>]) -> SVec<F> {
    let (s1, s2) = (stride(n, k, l1), stride(n, k, l2));
    let mut acc = BTreeMap::new();
    for (idx, c) in v {
        let (u1, u2) = ((idx / s1) % n, (idx / s2) % n);
        let base = idx - u1 * s1 - u2 * s2;
        for (o, x) in &cols[u1 * n + u2] {
            acc_add(&mut acc, base + (o / n) * s1 + (o % n) * s2, x.clone() * c);
        }
    }
    acc_finish(acc)
}

/// Multiplies leg `l1` by leg `l2` (in that order) and puts the product in
/// the lower of the two positions; the result has arity `k - 1`.
pub fn mult_legs<F: Field>(v: &[(usize, F)], alg: &Algebra<F>, k: usize, l1: usize, l2: usize) -> SVec<F> {
    let n = alg.dim();
    let (lo, hi) = if l1 < l2 { (l1, l2) } else { (l2, l1) };
    let mut acc = BTreeMap::new();
    for (idx, c) in v {
        let t = tuple_of(*idx, n, k);
        let mut rest: Vec<usize> = t.clone();
        rest.remove(hi);
        for (p, x) in alg.product(t[l1], t[l2]) {
            rest[lo] = *p;
            acc_add(&mut acc, index_of(&rest, n), x.clone() * c);
        }
    }
    acc_finish(acc)
}

/// Reorders legs: output leg `j` carries input leg `perm[j]`.
pub fn permute_legs<F: Field>(v: &[(usize, F)], n: usize, k: usize, perm: &[usize]) -> SVec<F> {
    let mut acc = BTreeMap::new();
    for (idx, c) in v {
        let t = tuple_of(*idx, n, k);
        let out: Vec<usize> = perm.iter().map(|&p| t[p]).collect();
        acc_add(&mut acc, index_of(&out, n), c.clone());
    }
    acc_finish(acc)
}

/// `ι ⊗ ... ⊗ f ⊗ ... ⊗ ι` where `f: A → A⊗A` (or any map from one leg into
/// two legs) is inserted at leg `leg`; the arity grows by one.
pub fn split_leg<F: Field>(v: &[(usize, F)], n: usize, k: usize, leg: usize, cols: &[SVec<F>]) -> SVec<F> {
    let mut acc = BTreeMap::new();
    for (idx, c) in v {
        let t = tuple_of(*idx, n, k);
        for (o, x) in &cols[t[leg]] {
            let mut out = t.clone();
            out[leg] = o / n;
            out.insert(leg + 1, o % n);
            acc_add(&mut acc, index_of(&out, n), x.clone() * c);
        }
    }
    acc_finish(acc)
}

/// One relation family `act_first(x)@i − act_second(x)@j`, for all base basis
/// elements `x` and all ambient basis tensors.
#[derive(Clone, Debug)]
pub struct Balancing<F> {
    pub legs: (usize, usize),
    pub first: Arc<ModuleStruct<F>>,
    pub second: Arc<ModuleStruct<F>>,
}

pub type BalancingKey = (usize, Decoration, usize, Decoration);

impl<F: Field> Balancing<F> {
    pub fn new(i: usize, first: &Arc<ModuleStruct<F>>, j: usize, second: &Arc<ModuleStruct<F>>) -> Self {
        Balancing { legs: (i, j), first: first.clone(), second: second.clone() }
    }

    pub fn key(&self) -> BalancingKey {
        (self.legs.0, self.first.decoration.clone(), self.legs.1, self.second.decoration.clone())
    }
}

/// A quotient of `A^{⊗k}` by the relations of a list of balancings.
#[derive(Clone, Debug)]
pub struct BalancedTensorSpace<F> {
    pub arity: usize,
    pub n: usize,
    pub factors: LabeledSpace,
    pub balancings: Vec<Balancing<F>>,
    pub quotient: QuotientSpace<F>,
    algebra_labels: LabeledSpace,
}

/// Builds the balanced tensor product of `arity` copies of `alg`.
pub fn btensor<F: Field>(alg: &Algebra<F>, arity: usize, balancings: Vec<Balancing<F>>) -> Result<BalancedTensorSpace<F>> {
    let n = alg.dim();
    let factors = alg.space().tensor_power(arity);
    let total = pow(n, arity);
    let mut ech = Echelon::new(total);
    for b in &balancings {
        let (i, j) = b.legs;
        if i >= arity || j >= arity || i == j {
            return Err(Error::ShapeMismatch(format!("balancing legs ({}, {}) invalid for arity {}", i, j, arity)));
        }
        if b.first.base != b.second.base {
            return Err(Error::BaseMismatch(format!("{} and {}", b.first.decoration, b.second.decoration)));
        }
        if b.first.carrier_dim != n || b.second.carrier_dim != n {
            return Err(Error::ShapeMismatch(String::from("module carrier is not the algebra")));
        }
        for x in 0..b.first.base.dim() {
            let c1 = b.first.action[x].sparse_cols();
            let c2 = b.second.action[x].sparse_cols();
            for u in 0..total {
                let e = [(u, F::one())];
                let r = sparse_sub(&map_leg(&e, n, arity, i, &c1), &map_leg(&e, n, arity, j, &c2));
                if !r.is_empty() {
                    ech.insert(r);
                }
            }
        }
    }
    let quotient = QuotientSpace::from_echelon(factors.clone(), ech);
    Ok(BalancedTensorSpace { arity, n, factors, balancings, quotient, algebra_labels: alg.space().clone() })
}

impl<F: Field> BalancedTensorSpace<F> {
    pub fn dim(&self) -> usize {
        self.quotient.dim()
    }

    pub fn ambient_dim(&self) -> usize {
        self.factors.dim()
    }

    pub fn key(&self) -> (usize, Vec<BalancingKey>) {
        (self.arity, self.balancings.iter().map(|b| b.key()).collect())
    }

    pub fn project(&self, v: &[(usize, F)]) -> SVec<F> {
        self.quotient.project(v)
    }

    pub fn is_zero_class(&self, v: &[(usize, F)]) -> bool {
        self.quotient.is_zero_class(v)
    }

    /// Algebra basis labels of the legs of an ambient basis index.
    pub fn tuple_labels(&self, idx: usize) -> Vec<String> {
        tuple_of(idx, self.n, self.arity)
            .into_iter()
            .map(|u| String::from(self.algebra_labels.label(u)))
            .collect()
    }

    /// Ambient indices representing the quotient basis.
    pub fn basis(&self) -> &[usize] {
        self.quotient.free_columns()
    }

    /// The same space with the two legs of an arity-2 space swapped.
    pub fn flipped(&self, alg: &Algebra<F>) -> Result<BalancedTensorSpace<F>> {
        let swap = |l: usize| self.arity - 1 - l;
        let bals = self
            .balancings
            .iter()
            .map(|b| Balancing { legs: (swap(b.legs.0), swap(b.legs.1)), first: b.first.clone(), second: b.second.clone() })
            .collect();
        btensor(alg, self.arity, bals)
    }
}

/// One elementary ambient operation of a diagram path.
pub enum Op<'a, F> {
    /// `n × n` map on one leg.
    Leg(usize, &'a [SVec<F>]),
    /// `n² × n²` map on two legs.
    Legs(usize, usize, &'a [SVec<F>]),
    /// Product of two legs; arity drops by one.
    Mult(usize, usize),
    Permute(&'a [usize]),
    /// Any linear map on ambient vectors.
    Func(&'a dyn Fn(&[(usize, F)]) -> SVec<F>),
}

impl<F: Field> Op<'_, F> {
    pub fn apply(&self, alg: &Algebra<F>, k: usize, v: &[(usize, F)]) -> SVec<F> {
        let n = alg.dim();
        match self {
            Op::Leg(l, cols) => map_leg(v, n, k, *l, cols),
            Op::Legs(l1, l2, cols) => map_legs(v, n, k, *l1, *l2, cols),
            Op::Mult(l1, l2) => mult_legs(v, alg, k, *l1, *l2),
            Op::Permute(p) => permute_legs(v, n, k, p),
            Op::Func(f) => f(v),
        }
    }
}

/// An operation together with the space its result is read in.
pub struct Stage<'a, F> {
    pub op: Op<'a, F>,
    pub target: &'a BalancedTensorSpace<F>,
}

impl<'a, F> Stage<'a, F> {
    pub fn new(op: Op<'a, F>, target: &'a BalancedTensorSpace<F>) -> Self {
        Stage { op, target }
    }
}

/// Checks that `op` maps the relations of `src` into those of `dst`.
pub fn check_descent<F: Field>(
    alg: &Algebra<F>,
    src: &BalancedTensorSpace<F>,
    op: &Op<'_, F>,
    dst: &BalancedTensorSpace<F>,
    what: &str,
) -> core::result::Result<(), Witness> {
    for r in src.quotient.relation_basis() {
        let img = op.apply(alg, src.arity, r);
        if !dst.is_zero_class(&img) {
            return Err(Witness::new(format!("{} is not well defined on the balanced tensor product", what), src.tuple_labels(r[0].0)));
        }
    }
    Ok(())
}

/// Evaluates a path on every quotient basis vector of `dom` after checking
/// that each stage descends. Returns the columns of the descended map.
pub fn evaluate<F: Field>(
    alg: &Algebra<F>,
    dom: &BalancedTensorSpace<F>,
    stages: &[Stage<'_, F>],
    what: &str,
) -> core::result::Result<Vec<SVec<F>>, Witness> {
    let mut src = dom;
    for (i, st) in stages.iter().enumerate() {
        check_descent(alg, src, &st.op, st.target, &format!("{} (step {})", what, i + 1))?;
        src = st.target;
    }
    Ok(dom.basis().iter().map(|&b| evaluate_at(alg, dom, stages, &[(b, F::one())])).collect())
}

/// Runs a path on one ambient vector without descent checks and projects the
/// result into the last target.
pub fn evaluate_at<F: Field>(
    alg: &Algebra<F>,
    dom: &BalancedTensorSpace<F>,
    stages: &[Stage<'_, F>],
    v: &[(usize, F)],
) -> SVec<F> {
    let mut cur: SVec<F> = v.to_vec();
    let mut k = dom.arity;
    for st in stages {
        cur = st.op.apply(alg, k, &cur);
        k = st.target.arity;
    }
    match stages.last() {
        Some(st) => st.target.project(&cur),
        None => dom.project(&cur),
    }
}

/// Compares two descended paths out of `dom`; the witness is the first
/// quotient basis tensor on which they differ.
pub fn compare_paths<F: Field>(
    alg: &Algebra<F>,
    dom: &BalancedTensorSpace<F>,
    p1: &[Stage<'_, F>],
    p2: &[Stage<'_, F>],
    what: &str,
) -> core::result::Result<(), Witness> {
    let c1 = evaluate(alg, dom, p1, &format!("{} (first path)", what))?;
    let c2 = evaluate(alg, dom, p2, &format!("{} (second path)", what))?;
    for (k, (a, b)) in c1.iter().zip(c2.iter()).enumerate() {
        if a != b {
            return Err(Witness::new(format!("{}: the two sides differ", what), dom.tuple_labels(dom.basis()[k])));
        }
    }
    Ok(())
}

/// Matrix on quotients from evaluated columns.
pub fn columns_to_matrix<F: Field>(rows: usize, cols: &[SVec<F>]) -> Matrix<F> {
    Matrix::from_sparse_cols(rows, cols)
}

/// Memoizes balanced tensor spaces by their decorations.
pub struct SpaceCache<F> {
    alg: Algebra<F>,
    spaces: RefCell<BTreeMap<(usize, Vec<BalancingKey>), Arc<BalancedTensorSpace<F>>>>,
}

impl<F: Field> SpaceCache<F> {
    pub fn new(alg: &Algebra<F>) -> Self {
        SpaceCache { alg: alg.clone(), spaces: RefCell::new(BTreeMap::new()) }
    }

    pub fn algebra(&self) -> &Algebra<F> {
        &self.alg
    }

    pub fn get(&self, arity: usize, balancings: Vec<Balancing<F>>) -> Result<Arc<BalancedTensorSpace<F>>> {
        let key = (arity, balancings.iter().map(|b| b.key()).collect::<Vec<_>>());
        if let Some(s) = self.spaces.borrow().get(&key) {
            return Ok(s.clone());
        }
        let s = Arc::new(btensor(&self.alg, arity, balancings)?);
        self.spaces.borrow_mut().insert(key, s.clone());
        Ok(s)
    }

    /// The unbalanced `A^{⊗k}`.
    pub fn plain(&self, arity: usize) -> Arc<BalancedTensorSpace<F>> {
        self.get(arity, Vec::new()).expect("no balancings")
    }
}

/// Result of the non-degeneracy check on a two-fold balanced tensor product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct A3Report {
    /// Non-degenerate under multiplication by `A` in the first leg.
    pub first_leg: bool,
    /// Non-degenerate under multiplication by `A` in the second leg.
    pub second_leg: bool,
    /// The quotient is zero-dimensional (both checks hold vacuously).
    pub zero_dim: bool,
}

impl A3Report {
    pub fn passes(&self) -> bool {
        self.first_leg && self.second_leg
    }
}

/// Whether `w ↦ (w·(a on leg))_a` (right multiplication for `Side::Right`,
/// left multiplication for `Side::Left`) is injective on the quotient.
pub fn nondegenerate_on_leg<F: Field>(
    alg: &Algebra<F>,
    bt: &BalancedTensorSpace<F>,
    leg: usize,
    side: Side,
) -> Result<bool> {
    let n = alg.dim();
    let d = bt.dim();
    let mut blocks = Vec::with_capacity(n);
    for c in 0..n {
        let m = match side {
            Side::Right => alg.right_mult(c),
            Side::Left => alg.left_mult(c),
        };
        let cols = m.sparse_cols();
        let stage = [Stage::new(Op::Leg(leg, &cols), bt)];
        let out = evaluate(alg, bt, &stage, "multiplication on a leg").map_err(Error::WellDefinednessViolated)?;
        blocks.push(Matrix::from_sparse_cols(d, &out));
    }
    if d == 0 {
        return Ok(true);
    }
    Ok(Matrix::vstack(&blocks).rank() == d)
}

/// The non-degeneracy condition on `bt` for right (left bialgebroid) or left
/// (right bialgebroid) multiplication in each leg.
pub fn check_a3<F: Field>(alg: &Algebra<F>, bt: &BalancedTensorSpace<F>, side: Side) -> Result<A3Report> {
    if bt.arity != 2 {
        return Err(Error::ShapeMismatch(String::from("non-degeneracy is checked on two-fold products")));
    }
    Ok(A3Report {
        first_leg: nondegenerate_on_leg(alg, bt, 0, side)?,
        second_leg: nondegenerate_on_leg(alg, bt, 1, side)?,
        zero_dim: bt.dim() == 0,
    })
}

/// A linear map between balanced tensor spaces with an optional ambient lift.
#[derive(Clone, Debug)]
pub struct DecoratedArrow<F> {
    pub dom: Arc<BalancedTensorSpace<F>>,
    pub cod: Arc<BalancedTensorSpace<F>>,
    pub map: LinMap<F>,
    pub lift: Option<LinMap<F>>,
}

impl<F: Field> DecoratedArrow<F> {
    /// Descends an ambient map; fails if some relation is not preserved.
    pub fn from_lift(
        alg: &Algebra<F>,
        dom: Arc<BalancedTensorSpace<F>>,
        cod: Arc<BalancedTensorSpace<F>>,
        lift: LinMap<F>,
    ) -> Result<Self> {
        if lift.matrix.ncols() != dom.ambient_dim() || lift.matrix.nrows() != cod.ambient_dim() {
            return Err(Error::ShapeMismatch(String::from("lift does not act between the ambients")));
        }
        let cols = lift.matrix.sparse_cols();
        let f = |v: &[(usize, F)]| {
            let mut acc = BTreeMap::new();
            for (j, c) in v {
                acc_scaled(&mut acc, &cols[*j], c);
            }
            acc_finish(acc)
        };
        let stage = [Stage::new(Op::Func(&f), &*cod)];
        let out = evaluate(alg, &dom, &stage, "arrow").map_err(Error::WellDefinednessViolated)?;
        let map = LinMap::new(dom.quotient.space().clone(), cod.quotient.space().clone(), Matrix::from_sparse_cols(cod.dim(), &out));
        Ok(DecoratedArrow { dom, cod, map, lift: Some(lift) })
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        let lift = match (&self.lift, &other.lift) {
            (Some(a), Some(b)) => Some(a.compose(b)),
            _ => None,
        };
        DecoratedArrow { dom: other.dom.clone(), cod: self.cod.clone(), map: self.map.compose(&other.map), lift }
    }
}

/// The flip `a⊗b ↦ b⊗a` from `dom` to the space with swapped decorations.
pub fn flip_sigma<F: Field>(alg: &Algebra<F>, dom: Arc<BalancedTensorSpace<F>>) -> Result<DecoratedArrow<F>> {
    if dom.arity != 2 {
        return Err(Error::ShapeMismatch(String::from("the flip acts on two-fold products")));
    }
    let cod = Arc::new(dom.flipped(alg)?);
    let n = alg.dim();
    let lift = Matrix::from_fn(n * n, n * n, |r, c| if r == (c % n) * n + c / n { F::one() } else { F::zero() });
    let lift = LinMap::new(dom.factors.clone(), cod.factors.clone(), lift);
    DecoratedArrow::from_lift(alg, dom, cod, lift)
}

/// Lifts an arrow on `A⊗A` to the legs `legs` of a threefold product, e.g.
/// `(T)_{13}` for `legs = (0, 2)`.
pub fn leg_map<F: Field>(
    alg: &Algebra<F>,
    arrow: &DecoratedArrow<F>,
    legs: (usize, usize),
    dom3: Arc<BalancedTensorSpace<F>>,
    cod3: Arc<BalancedTensorSpace<F>>,
) -> Result<DecoratedArrow<F>> {
    let lift = arrow
        .lift
        .as_ref()
        .ok_or_else(|| Error::ShapeMismatch(String::from("leg maps need an ambient lift")))?;
    if dom3.arity != 3 || cod3.arity != 3 {
        return Err(Error::ShapeMismatch(String::from("leg maps act on threefold products")));
    }
    let n = alg.dim();
    let cols = lift.matrix.sparse_cols();
    let big: Vec<SVec<F>> = (0..pow(n, 3)).map(|u| map_legs(&[(u, F::one())], n, 3, legs.0, legs.1, &cols)).collect();
    let lift3 = LinMap::new(dom3.factors.clone(), cod3.factors.clone(), Matrix::from_sparse_cols(pow(n, 3), &big));
    DecoratedArrow::from_lift(alg, dom3, cod3, lift3)
}

/// The multiplication maps appearing in the diagrams. All are `a⊗b ↦ ab`
/// or `a⊗b ↦ ba`; the subscript records which balanced product they
/// descend from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MultKind {
    M,
    MOp,
    MLowerB,
    MUpperB,
    MLowerBOp,
    MUpperBOp,
    MLowerC,
    MUpperC,
}

impl MultKind {
    pub fn is_opposite(self) -> bool {
        matches!(self, MultKind::MOp | MultKind::MLowerBOp | MultKind::MUpperBOp)
    }
}

/// Descends (opposite) multiplication from the two-fold `dom` to `cod`,
/// which must be the onefold space `A`.
pub fn mult_arrow<F: Field>(
    alg: &Algebra<F>,
    kind: MultKind,
    dom: Arc<BalancedTensorSpace<F>>,
    cod: Arc<BalancedTensorSpace<F>>,
) -> Result<DecoratedArrow<F>> {
    if dom.arity != 2 || cod.arity != 1 {
        return Err(Error::ShapeMismatch(String::from("multiplication maps a two-fold product to A")));
    }
    let n = alg.dim();
    let cols: Vec<SVec<F>> = (0..n * n)
        .map(|ab| {
            let (a, b) = (ab / n, ab % n);
            if kind.is_opposite() { alg.product(b, a).clone() } else { alg.product(a, b).clone() }
        })
        .collect();
    let lift = LinMap::new(dom.factors.clone(), cod.factors.clone(), Matrix::from_sparse_cols(n, &cols));
    DecoratedArrow::from_lift(alg, dom, cod, lift)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{make_algebra, make_base_embedding, module_from_embedding, DecKind, EmbeddingKind, MultiplierPair};
    use crate::field::Rational;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    #[test]
    fn leg_helpers() {
        let n = 3;
        let v = vec![(index_of(&[0, 1, 2], n), q(1))];
        let swap: Vec<usize> = vec![2, 1, 0];
        assert_eq!(permute_legs(&v, n, 3, &swap), vec![(index_of(&[2, 1, 0], n), q(1))]);
        assert_eq!(tuple_of(index_of(&[2, 0, 1], n), n, 3), vec![2, 0, 1]);
    }

    #[test]
    fn unbalanced_and_scalar() {
        let k = make_algebra(vec![String::from("1")], vec![(0, 0, 0, q(1))], Some(vec![q(1)])).unwrap();
        let s = btensor(&k, 2, Vec::new()).unwrap();
        assert_eq!(s.dim(), 1);
        let one = Arc::new(btensor(&k, 1, Vec::new()).unwrap());
        let m = mult_arrow(&k, MultKind::M, Arc::new(s), one).unwrap();
        assert_eq!(m.map.matrix.get(0, 0), &q(1));
    }

    #[test]
    fn balancing_over_diagonal_base() {
        // A = B = ℚ×ℚ, both structures given by left multiplication.
        let a = make_algebra(
            vec![String::from("p"), String::from("q")],
            vec![(0, 0, 0, q(1)), (1, 1, 1, q(1))],
            Some(vec![q(1), q(1)]),
        )
        .unwrap();
        let imgs: Vec<_> = (0..2).map(|i| MultiplierPair::of_basis(&a, i)).collect();
        let s = make_base_embedding(&a, &a, imgs.clone(), EmbeddingKind::Homomorphism).unwrap();
        let t = make_base_embedding(&a, &a, imgs, EmbeddingKind::AntiHomomorphism).unwrap();
        let ls = Arc::new(module_from_embedding(&s, DecKind::LowerLeft, "B").unwrap());
        let lt = Arc::new(module_from_embedding(&t, DecKind::UpperRight, "B").unwrap());
        let bt = btensor(&a, 2, vec![Balancing::new(0, &ls, 1, &lt)]).unwrap();
        assert_eq!(bt.dim(), 2);
        assert_eq!(bt.dim() + bt.quotient.relation_rank(), 4);
        let r = check_a3(&a, &bt, Side::Right).unwrap();
        assert!(r.passes());
        let bt = Arc::new(bt);
        let f = flip_sigma(&a, bt.clone()).unwrap();
        let back = flip_sigma(&a, f.cod.clone()).unwrap();
        assert!(back.compose(&f).map.matrix.is_identity());
    }
}
