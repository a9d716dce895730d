//! Finite-dimensional associative algebras given by structure constants,
//! their multipliers, base-algebra embeddings and the decorated module
//! structures used to balance tensor products.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{
    acc_add, acc_finish, acc_scaled, dense_from_sparse, kernel_basis, solve, sparse_from_dense, span_dim, Echelon,
    LabeledSpace, Matrix, SVec,
};

struct AlgebraData<F> {
    space: LabeledSpace,
    /// `products[i * n + j]` is `e_i e_j` as a sparse vector.
    products: Vec<SVec<F>>,
    unit: Option<Vec<F>>,
    lmul: Vec<Matrix<F>>,
    rmul: Vec<Matrix<F>>,
}

/// A finite-dimensional associative algebra, possibly without unit.
///
/// Cloning is cheap; the data is shared.
#[derive(Clone)]
pub struct Algebra<F> {
    inner: Arc<AlgebraData<F>>,
}

impl<F: PartialEq> PartialEq for Algebra<F> {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.space == other.inner.space && self.inner.products == other.inner.products)
    }
}

impl<F: Eq> Eq for Algebra<F> {}

impl<F> fmt::Debug for Algebra<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Algebra(dim {}, {:?})", self.inner.space.dim(), self.inner.space.labels())
    }
}

/// Checks shapes, associativity and the unit, then builds the algebra.
/// `constants` lists `(i, j, k, c)` meaning `e_i e_j` has coefficient `c` at
/// `e_k`; omitted constants are zero and repeated ones are summed.
pub fn make_algebra<F: Field>(
    labels: Vec<String>,
    constants: Vec<(usize, usize, usize, F)>,
    unit: Option<Vec<F>>,
) -> Result<Algebra<F>> {
    let n = labels.len();
    if n == 0 {
        return Err(Error::EmptyAlgebra);
    }
    let space = LabeledSpace::try_new(labels)?;
    let mut accs: Vec<BTreeMap<usize, F>> = vec![BTreeMap::new(); n * n];
    for (i, j, k, c) in constants {
        if i >= n || j >= n || k >= n {
            return Err(Error::ShapeMismatch(format!("structure constant index ({}, {}, {}) out of range", i, j, k)));
        }
        acc_add(&mut accs[i * n + j], k, c);
    }
    let products: Vec<SVec<F>> = accs.into_iter().map(acc_finish).collect();
    let alg = Algebra::from_products(space, products, None);
    if let Some((i, j, k, q)) = alg.associativity_violation() {
        return Err(Error::NotAssociative { i, j, k, q });
    }
    match unit {
        None => Ok(alg),
        Some(u) => {
            if u.len() != n {
                return Err(Error::ShapeMismatch(String::from("unit has wrong length")));
            }
            if !alg.is_unit(&u) {
                return Err(Error::UnitInvalid);
            }
            Ok(Algebra::from_products(alg.inner.space.clone(), alg.inner.products.clone(), Some(u)))
        }
    }
}

impl<F: Field> Algebra<F> {
    fn from_products(space: LabeledSpace, products: Vec<SVec<F>>, unit: Option<Vec<F>>) -> Self {
        let n = space.dim();
        let lmul = (0..n)
            .map(|i| {
                let cols: Vec<SVec<F>> = (0..n).map(|j| products[i * n + j].clone()).collect();
                Matrix::from_sparse_cols(n, &cols)
            })
            .collect();
        let rmul = (0..n)
            .map(|j| {
                let cols: Vec<SVec<F>> = (0..n).map(|i| products[i * n + j].clone()).collect();
                Matrix::from_sparse_cols(n, &cols)
            })
            .collect();
        Algebra { inner: Arc::new(AlgebraData { space, products, unit, lmul, rmul }) }
    }


    pub fn dim(&self) -> usize {
        self.inner.space.dim()
    }

    pub fn space(&self) -> &LabeledSpace {
        &self.inner.space
    }

    pub fn label(&self, i: usize) -> &str {
        self.inner.space.label(i)
    }

    /// `e_i e_j`.
    pub fn product(&self, i: usize, j: usize) -> &SVec<F> {
        &self.inner.products[i * self.dim() + j]
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> F {
        self.product(i, j)
            .iter()
            .find(|(idx, _)| *idx == k)
            .map_or_else(F::zero, |(_, c)| c.clone())
    }

    /// All nonzero structure constants in index order.
    pub fn constants(&self) -> Vec<(usize, usize, usize, F)> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for (k, c) in self.product(i, j) {
                    out.push((i, j, *k, c.clone()));
                }
            }
        }
        out
    }

    pub fn unit(&self) -> Option<&Vec<F>> {
        self.inner.unit.as_ref()
    }

    /// Matrix of `b ↦ e_i b`.
    pub fn left_mult(&self, i: usize) -> &Matrix<F> {
        &self.inner.lmul[i]
    }

    /// Matrix of `a ↦ a e_j`.
    pub fn right_mult(&self, j: usize) -> &Matrix<F> {
        &self.inner.rmul[j]
    }

    /// Matrix of `b ↦ a b` for an arbitrary element.
    pub fn left_mult_by(&self, a: &[F]) -> Matrix<F> {
        let mut m = Matrix::zeros(self.dim(), self.dim());
        for (i, c) in a.iter().enumerate() {
            if !c.is_zero() {
                m = m.add(&self.inner.lmul[i].scale(c));
            }
        }
        m
    }

    pub fn right_mult_by(&self, a: &[F]) -> Matrix<F> {
        let mut m = Matrix::zeros(self.dim(), self.dim());
        for (i, c) in a.iter().enumerate() {
            if !c.is_zero() {
                m = m.add(&self.inner.rmul[i].scale(c));
            }
        }
        m
    }

    /// Product of two sparse elements.
    pub fn mul_sparse(&self, a: &[(usize, F)], b: &[(usize, F)]) -> SVec<F> {
        let mut acc = BTreeMap::new();
        for (i, x) in a {
            for (j, y) in b {
                acc_scaled(&mut acc, self.product(*i, *j), &(x.clone() * y));
            }
        }
        acc_finish(acc)
    }

    pub fn mul(&self, a: &[F], b: &[F]) -> Vec<F> {
        dense_from_sparse(&self.mul_sparse(&sparse_from_dense(a), &sparse_from_dense(b)), self.dim())
    }

    pub fn basis_vector(&self, i: usize) -> Vec<F> {
        let mut v = vec![F::zero(); self.dim()];
        v[i] = F::one();
        v
    }

    fn associativity_violation(&self) -> Option<(usize, usize, usize, usize)> {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                let ij = self.product(i, j);
                for k in 0..n {
                    let left = self.mul_sparse(ij, &[(k, F::one())]);
                    let right = self.mul_sparse(&[(i, F::one())], self.product(j, k));
                    if left != right {
                        let diff = crate::linalg::sparse_sub(&left, &right);
                        return Some((i, j, k, diff[0].0));
                    }
                }
            }
        }
        None
    }

    fn is_unit(&self, u: &[F]) -> bool {
        let us = sparse_from_dense(u);
        (0..self.dim()).all(|i| {
            let e = [(i, F::one())];
            self.mul_sparse(&us, &e) == e && self.mul_sparse(&e, &us) == e
        })
    }

    /// Solves for a two-sided unit.
    pub fn find_unit(&self) -> Option<Vec<F>> {
        if let Some(u) = &self.inner.unit {
            return Some(u.clone());
        }
        let n = self.dim();
        // u e_j = e_j and e_j u = e_j: columns of the system are L_{e_i} e_j
        // stacked over j, and R_{e_i} e_j likewise.
        let mut m = Matrix::zeros(2 * n * n, n);
        let mut rhs = vec![F::zero(); 2 * n * n];
        for j in 0..n {
            for i in 0..n {
                for (k, c) in self.product(i, j) {
                    m.set(j * n + k, i, c.clone());
                }
                for (k, c) in self.product(j, i) {
                    m.set(n * n + j * n + k, i, c.clone());
                }
            }
            rhs[j * n + j] = F::one();
            rhs[n * n + j * n + j] = F::one();
        }
        solve(&m, &rhs)
    }

    pub fn is_unital(&self) -> bool {
        self.find_unit().is_some()
    }

    /// Returns the same algebra with a verified unit attached, if one exists.
    pub fn with_unit(&self) -> Option<Algebra<F>> {
        let u = self.find_unit()?;
        Some(Algebra::from_products(self.inner.space.clone(), self.inner.products.clone(), Some(u)))
    }

    /// The opposite algebra: same basis, `e_i ·op e_j = e_j e_i`.
    pub fn opposite(&self) -> Algebra<F> {
        let n = self.dim();
        let products = (0..n * n).map(|ij| self.product(ij % n, ij / n).clone()).collect();
        Algebra::from_products(self.inner.space.clone(), products, self.inner.unit.clone())
    }

    /// Tensor product algebra with basis `e_i ⊗ f_j` ordered `i * m + j`.
    pub fn tensor(&self, other: &Algebra<F>) -> Algebra<F> {
        let (n, m) = (self.dim(), other.dim());
        let labels: Vec<String> = (0..n * m)
            .map(|idx| format!("{}⊗{}", self.label(idx / m), other.label(idx % m)))
            .collect();
        let mut products = Vec::with_capacity(n * m * n * m);
        for a in 0..n * m {
            for b in 0..n * m {
                let (i1, j1, i2, j2) = (a / m, a % m, b / m, b % m);
                let mut acc = BTreeMap::new();
                for (k, x) in self.product(i1, i2) {
                    for (l, y) in other.product(j1, j2) {
                        acc_add(&mut acc, k * m + l, x.clone() * y);
                    }
                }
                products.push(acc_finish(acc));
            }
        }
        let unit = match (self.unit(), other.unit()) {
            (Some(u), Some(v)) => Some(
                (0..n * m).map(|idx| u[idx / m].clone() * &v[idx % m]).collect(),
            ),
            _ => None,
        };
        Algebra::from_products(LabeledSpace::new(labels), products, unit)
    }
}

/// Result of the idempotency / non-degeneracy check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct A1Report {
    /// `span(A·A) = A`.
    pub idempotent: bool,
    /// `{a : aA = 0} = 0`.
    pub right_annihilator_trivial: bool,
    /// `{a : Aa = 0} = 0`.
    pub left_annihilator_trivial: bool,
}

impl A1Report {
    pub fn passes(&self) -> bool {
        self.idempotent && self.right_annihilator_trivial && self.left_annihilator_trivial
    }
}

pub fn check_a1<F: Field>(a: &Algebra<F>) -> A1Report {
    let n = a.dim();
    let products: Vec<Vec<F>> = (0..n * n).map(|ij| dense_from_sparse(a.product(ij / n, ij % n), n)).collect();
    let idempotent = span_dim(n, &products) == n;
    // a = Σ a_i e_i with a e_j = 0 for all j
    let mut right = Matrix::zeros(n * n, n);
    let mut left = Matrix::zeros(n * n, n);
    for i in 0..n {
        for j in 0..n {
            for (k, c) in a.product(i, j) {
                right.set(j * n + k, i, c.clone());
            }
            for (k, c) in a.product(j, i) {
                left.set(j * n + k, i, c.clone());
            }
        }
    }
    A1Report {
        idempotent,
        right_annihilator_trivial: kernel_basis(&right).is_empty(),
        left_annihilator_trivial: kernel_basis(&left).is_empty(),
    }
}

/// An element of the multiplier algebra `M(A)`, given by its left and right
/// actions: `left` is `b ↦ m b`, `right` is `a ↦ a m`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MultiplierPair<F> {
    pub left: Matrix<F>,
    pub right: Matrix<F>,
}

impl<F: Field> MultiplierPair<F> {
    pub fn new(left: Matrix<F>, right: Matrix<F>) -> Self {
        MultiplierPair { left, right }
    }

    pub fn identity(n: usize) -> Self {
        MultiplierPair { left: Matrix::identity(n), right: Matrix::identity(n) }
    }

    pub fn zero(n: usize) -> Self {
        MultiplierPair { left: Matrix::zeros(n, n), right: Matrix::zeros(n, n) }
    }

    /// The canonical image of an element of `A`.
    pub fn of_element(a: &Algebra<F>, x: &[F]) -> Self {
        MultiplierPair { left: a.left_mult_by(x), right: a.right_mult_by(x) }
    }

    pub fn of_basis(a: &Algebra<F>, i: usize) -> Self {
        MultiplierPair { left: a.left_mult(i).clone(), right: a.right_mult(i).clone() }
    }

    /// Product `self · other` in `M(A)`.
    pub fn mul(&self, other: &Self) -> Self {
        MultiplierPair { left: self.left.mul(&other.left), right: other.right.mul(&self.right) }
    }

    pub fn add(&self, other: &Self) -> Self {
        MultiplierPair { left: self.left.add(&other.left), right: self.right.add(&other.right) }
    }

    pub fn scale(&self, c: &F) -> Self {
        MultiplierPair { left: self.left.scale(c), right: self.right.scale(c) }
    }

    /// The same multiplier viewed in `M(A^op)`.
    pub fn swapped(&self) -> Self {
        MultiplierPair { left: self.right.clone(), right: self.left.clone() }
    }

    pub fn is_identity(&self) -> bool {
        self.left.is_identity() && self.right.is_identity()
    }

    /// Flattened `(left, right)` entries, used for linear independence tests.
    pub fn vectorize(&self) -> Vec<F> {
        let mut v = self.left.vectorize();
        v.extend(self.right.vectorize());
        v
    }

    /// Checks `a·left(b) = right(a)·b`, `left(bc) = left(b)c` and
    /// `right(ab) = a·right(b)` on basis elements.
    pub fn is_valid(&self, a: &Algebra<F>) -> bool {
        let n = a.dim();
        if self.left.nrows() != n || self.left.ncols() != n || self.right.nrows() != n || self.right.ncols() != n {
            return false;
        }
        let lcols = self.left.sparse_cols();
        let rcols = self.right.sparse_cols();
        for i in 0..n {
            for j in 0..n {
                let ei = [(i, F::one())];
                let ej = [(j, F::one())];
                if a.mul_sparse(&ei, &lcols[j]) != a.mul_sparse(&rcols[i], &ej) {
                    return false;
                }
                let prod = a.product(i, j);
                if self.left.mul_sparse(prod) != a.mul_sparse(&lcols[i], &ej) {
                    return false;
                }
                if self.right.mul_sparse(prod) != a.mul_sparse(&ei, &rcols[j]) {
                    return false;
                }
            }
        }
        true
    }
}

/// Basis of the space of all multipliers of `a`.
pub fn multiplier_algebra<F: Field>(a: &Algebra<F>) -> Result<Vec<MultiplierPair<F>>> {
    let report = check_a1(a);
    if !report.passes() {
        return Err(Error::A1Violated(format!("{:?}", report)));
    }
    let n = a.dim();
    let nn = n * n;
    let lv = |r: usize, c: usize| r * n + c;
    let rv = |r: usize, c: usize| nn + r * n + c;
    let c = |i: usize, j: usize, k: usize| a.structure_constant(i, j, k);
    let mut rows = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                // (e_i · L(e_j))_k - (R(e_i) · e_j)_k
                let mut acc = BTreeMap::new();
                for r in 0..n {
                    acc_add(&mut acc, lv(r, j), c(i, r, k));
                    acc_add(&mut acc, rv(r, i), -c(r, j, k));
                }
                rows.push(acc_finish(acc));
                // L(e_i e_j)_k - (L(e_i) e_j)_k
                let mut acc = BTreeMap::new();
                for (p, x) in a.product(i, j) {
                    acc_add(&mut acc, lv(k, *p), x.clone());
                }
                for r in 0..n {
                    acc_add(&mut acc, lv(r, i), -c(r, j, k));
                }
                rows.push(acc_finish(acc));
                // R(e_i e_j)_k - (e_i R(e_j))_k
                let mut acc = BTreeMap::new();
                for (p, x) in a.product(i, j) {
                    acc_add(&mut acc, rv(k, *p), x.clone());
                }
                for r in 0..n {
                    acc_add(&mut acc, rv(r, j), -c(i, r, k));
                }
                rows.push(acc_finish(acc));
            }
        }
    }
    let kernel = Echelon::from_rows(2 * nn, rows.into_iter().filter(|r| !r.is_empty())).kernel();
    Ok(kernel
        .into_iter()
        .map(|v| {
            let d = dense_from_sparse(&v, 2 * nn);
            MultiplierPair {
                left: Matrix::from_fn(n, n, |r, c| d[lv(r, c)].clone()),
                right: Matrix::from_fn(n, n, |r, c| d[rv(r, c)].clone()),
            }
        })
        .collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EmbeddingKind {
    Homomorphism,
    AntiHomomorphism,
}

/// A linear map from a base algebra into `M(A)` that is multiplicative or
/// anti-multiplicative and injective.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaseEmbedding<F> {
    pub base: Algebra<F>,
    pub images: Vec<MultiplierPair<F>>,
    pub kind: EmbeddingKind,
}

pub fn make_base_embedding<F: Field>(
    a: &Algebra<F>,
    base: &Algebra<F>,
    images: Vec<MultiplierPair<F>>,
    kind: EmbeddingKind,
) -> Result<BaseEmbedding<F>> {
    if base.dim() == 0 {
        return Err(Error::EmptyAlgebra);
    }
    if images.len() != base.dim() {
        return Err(Error::ShapeMismatch(String::from("one multiplier per base basis element is required")));
    }
    for (i, m) in images.iter().enumerate() {
        if !m.is_valid(a) {
            return Err(Error::InvalidMultiplier(i));
        }
    }
    let emb = BaseEmbedding { base: base.clone(), images, kind };
    let p = base.dim();
    for i in 0..p {
        for j in 0..p {
            let lhs = emb.image_of_sparse(base.product(i, j));
            let rhs = match kind {
                EmbeddingKind::Homomorphism => emb.images[i].mul(&emb.images[j]),
                EmbeddingKind::AntiHomomorphism => emb.images[j].mul(&emb.images[i]),
            };
            if lhs != rhs {
                return Err(Error::NotMultiplicative { i, j });
            }
        }
    }
    let vecs: Vec<Vec<F>> = emb.images.iter().map(|m| m.vectorize()).collect();
    if span_dim(2 * a.dim() * a.dim(), &vecs) != p {
        return Err(Error::NotInjective);
    }
    Ok(emb)
}

impl<F: Field> BaseEmbedding<F> {
    pub fn carrier_dim(&self) -> usize {
        self.images.first().map_or(0, |m| m.left.nrows())
    }

    pub fn image_of_sparse(&self, x: &[(usize, F)]) -> MultiplierPair<F> {
        let n = self.carrier_dim();
        let mut m = MultiplierPair::zero(n);
        for (i, c) in x {
            m = m.add(&self.images[*i].scale(c));
        }
        m
    }

    pub fn image_of(&self, x: &[F]) -> MultiplierPair<F> {
        self.image_of_sparse(&sparse_from_dense(x))
    }

    /// Checks that every image commutes with every image of `other`.
    pub fn check_commutes(&self, other: &BaseEmbedding<F>) -> Result<()> {
        for (i, m) in self.images.iter().enumerate() {
            for (j, k) in other.images.iter().enumerate() {
                if m.mul(k) != k.mul(m) {
                    return Err(Error::ImagesDoNotCommute { i, j });
                }
            }
        }
        Ok(())
    }

    /// Whether the base unit (if any) maps to the identity multiplier.
    pub fn is_unital(&self) -> bool {
        match self.base.find_unit() {
            Some(u) => self.image_of(&u).is_identity(),
            None => false,
        }
    }

    /// The embedding `x ↦ self(φ(x))` of another base, where `phi` is the
    /// `self.base.dim() × new_base.dim()` matrix of a linear map.
    pub fn precompose(&self, new_base: &Algebra<F>, phi: &Matrix<F>, kind: EmbeddingKind) -> BaseEmbedding<F> {
        let images = (0..new_base.dim()).map(|x| self.image_of(&phi.col(x))).collect();
        BaseEmbedding { base: new_base.clone(), images, kind }
    }

    /// The same embedding viewed as a map into `M(A^op)`.
    pub fn into_opposite(&self) -> BaseEmbedding<F> {
        BaseEmbedding {
            base: self.base.clone(),
            images: self.images.iter().map(|m| m.swapped()).collect(),
            kind: match self.kind {
                EmbeddingKind::Homomorphism => EmbeddingKind::AntiHomomorphism,
                EmbeddingKind::AntiHomomorphism => EmbeddingKind::Homomorphism,
            },
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

/// Which of the four module structures an embedding induces on `A`.
///
/// With `s` a homomorphism and `t` an anti-homomorphism:
/// `LowerLeft` is `x·a = s(x)a`, `LowerRight` is `a·x = as(x)`,
/// `UpperRight` is `a·x = t(x)a`, `UpperLeft` is `x·a = at(x)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DecKind {
    LowerLeft,
    LowerRight,
    UpperRight,
    UpperLeft,
}

impl DecKind {
    pub fn side(self) -> Side {
        match self {
            DecKind::LowerLeft | DecKind::UpperLeft => Side::Left,
            DecKind::LowerRight | DecKind::UpperRight => Side::Right,
        }
    }

    pub fn required_kind(self) -> EmbeddingKind {
        match self {
            DecKind::LowerLeft | DecKind::LowerRight => EmbeddingKind::Homomorphism,
            DecKind::UpperLeft | DecKind::UpperRight => EmbeddingKind::AntiHomomorphism,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Decoration {
    pub kind: DecKind,
    pub base_name: String,
}

impl fmt::Display for Decoration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let b = &self.base_name;
        match self.kind {
            DecKind::LowerLeft => write!(f, "_{} A", b),
            DecKind::LowerRight => write!(f, "A_{}", b),
            DecKind::UpperRight => write!(f, "A^{}", b),
            DecKind::UpperLeft => write!(f, "^{} A", b),
        }
    }
}

/// A base algebra acting on `A` by one of the decorated structures.
///
/// `action[x]` is the matrix of `a ↦ x·a` (left side) or `a ↦ a·x` (right
/// side) for the base basis element `x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleStruct<F> {
    pub base: Algebra<F>,
    pub carrier_dim: usize,
    pub action: Vec<Matrix<F>>,
    pub side: Side,
    pub decoration: Decoration,
}

pub fn module_from_embedding<F: Field>(
    emb: &BaseEmbedding<F>,
    kind: DecKind,
    base_name: &str,
) -> Result<ModuleStruct<F>> {
    if emb.kind != kind.required_kind() {
        return Err(Error::DecorationMismatch(format!(
            "{:?} needs a {:?}, got a {:?}",
            kind,
            kind.required_kind(),
            emb.kind
        )));
    }
    let action: Vec<Matrix<F>> = emb
        .images
        .iter()
        .map(|m| match kind {
            DecKind::LowerLeft | DecKind::UpperRight => m.left.clone(),
            DecKind::LowerRight | DecKind::UpperLeft => m.right.clone(),
        })
        .collect();
    let module = ModuleStruct {
        base: emb.base.clone(),
        carrier_dim: emb.carrier_dim(),
        action,
        side: kind.side(),
        decoration: Decoration { kind, base_name: String::from(base_name) },
    };
    module.check_associative()?;
    Ok(module)
}

impl<F: Field> ModuleStruct<F> {
    pub fn action_of_sparse(&self, x: &[(usize, F)]) -> Matrix<F> {
        let mut m = Matrix::zeros(self.carrier_dim, self.carrier_dim);
        for (i, c) in x {
            m = m.add(&self.action[*i].scale(c));
        }
        m
    }

    fn check_associative(&self) -> Result<()> {
        let p = self.base.dim();
        for i in 0..p {
            for j in 0..p {
                let lhs = self.action_of_sparse(self.base.product(i, j));
                let rhs = match self.side {
                    Side::Left => self.action[i].mul(&self.action[j]),
                    Side::Right => self.action[j].mul(&self.action[i]),
                };
                if lhs != rhs {
                    return Err(Error::DecorationMismatch(format!(
                        "{} is not associative over the base at ({}, {})",
                        self.decoration, i, j
                    )));
                }
            }
        }
        Ok(())
    }

    /// `{x : x·A = 0} = 0`.
    pub fn is_faithful(&self) -> bool {
        let vecs: Vec<Vec<F>> = self.action.iter().map(|m| m.vectorize()).collect();
        span_dim(self.carrier_dim * self.carrier_dim, &vecs) == self.base.dim()
    }

    /// `span{x·a} = A`.
    pub fn is_idempotent(&self) -> bool {
        let mut vecs = Vec::new();
        for m in &self.action {
            for j in 0..m.ncols() {
                vecs.push(m.col(j));
            }
        }
        span_dim(self.carrier_dim, &vecs) == self.carrier_dim
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct A2Report {
    pub left_faithful: bool,
    pub left_idempotent: bool,
    pub right_faithful: bool,
    pub right_idempotent: bool,
}

impl A2Report {
    pub fn passes(&self) -> bool {
        self.left_faithful && self.left_idempotent && self.right_faithful && self.right_idempotent
    }
}

pub fn check_a2<F: Field>(left: &ModuleStruct<F>, right: &ModuleStruct<F>) -> Result<A2Report> {
    if left.base != right.base {
        return Err(Error::BaseMismatch(format!("{} and {}", left.decoration, right.decoration)));
    }
    Ok(A2Report {
        left_faithful: left.is_faithful(),
        left_idempotent: left.is_idempotent(),
        right_faithful: right.is_faithful(),
        right_idempotent: right.is_idempotent(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    fn labels(n: usize) -> Vec<String> {
        (0..n).map(|i| format!("e{}", i)).collect()
    }

    fn z2() -> Algebra<Rational> {
        make_algebra(
            labels(2),
            vec![(0, 0, 0, q(1)), (0, 1, 1, q(1)), (1, 0, 1, q(1)), (1, 1, 0, q(1))],
            Some(vec![q(1), q(0)]),
        )
        .unwrap()
    }

    #[test]
    fn small_algebras() {
        let k = make_algebra(labels(1), vec![(0, 0, 0, q(1))], Some(vec![q(1)])).unwrap();
        assert!(k.is_unital());
        assert!(z2().is_unital());
        assert_eq!(make_algebra::<Rational>(vec![], vec![], None).unwrap_err(), Error::EmptyAlgebra);
    }

    #[test]
    fn detects_nonassociative() {
        // e0 e0 = e1, everything else zero except e1 e0 = e0:
        // (e0 e0) e0 = e1 e0 = e0, e0 (e0 e0) = e0 e1 = 0.
        let err = make_algebra(labels(2), vec![(0, 0, 1, q(1)), (1, 0, 0, q(1))], None).unwrap_err();
        assert!(matches!(err, Error::NotAssociative { .. }));
    }

    #[test]
    fn a1_examples() {
        assert!(check_a1(&z2()).passes());
        let zero = make_algebra::<Rational>(labels(1), vec![], None).unwrap();
        let r = check_a1(&zero);
        assert!(!r.idempotent && !r.right_annihilator_trivial && !r.left_annihilator_trivial);
        // span{E11, E12}: E11 E11 = E11, E11 E12 = E12, E12 · anything = 0
        let upper = make_algebra(labels(2), vec![(0, 0, 0, q(1)), (0, 1, 1, q(1))], None).unwrap();
        let r = check_a1(&upper);
        assert!(r.idempotent);
        assert!(!r.right_annihilator_trivial);
    }

    #[test]
    fn multiplier_algebra_of_unital_is_itself() {
        let m = multiplier_algebra(&z2()).unwrap();
        assert_eq!(m.len(), 2);
        for pair in &m {
            assert!(pair.is_valid(&z2()));
        }
        let prod = make_algebra(labels(2), vec![(0, 0, 0, q(1)), (1, 1, 1, q(1))], None).unwrap();
        assert_eq!(multiplier_algebra(&prod).unwrap().len(), 2);
    }

    #[test]
    fn embedding_checks() {
        let a = z2();
        let id = make_base_embedding(
            &a,
            &a,
            (0..2).map(|i| MultiplierPair::of_basis(&a, i)).collect(),
            EmbeddingKind::Homomorphism,
        )
        .unwrap();
        assert!(id.is_unital());
        let kxk = make_algebra(labels(2), vec![(0, 0, 0, q(1)), (1, 1, 1, q(1))], Some(vec![q(1), q(1)])).unwrap();
        let e0 = MultiplierPair::of_element(&kxk, &[q(1), q(0)]);
        let err = make_base_embedding(&kxk, &kxk, vec![e0.clone(), e0.clone()], EmbeddingKind::Homomorphism)
            .unwrap_err();
        assert_eq!(err, Error::NotMultiplicative { i: 0, j: 1 });
        let zero = MultiplierPair::zero(2);
        let err = make_base_embedding(&kxk, &kxk, vec![e0, zero], EmbeddingKind::Homomorphism).unwrap_err();
        assert_eq!(err, Error::NotInjective);
    }
}
