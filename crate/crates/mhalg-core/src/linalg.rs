//! Exact linear algebra: dense matrices, reduced row echelon form, kernels,
//! solving, quotient spaces and spaces of intertwiners.
//!
//! Matrices are dense in the public API. Elimination itself runs on sparse
//! rows, which keeps the triple tensor quotients (ambient dimension in the
//! hundreds) cheap.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result, Witness};
use crate::field::Field;

/// A sparse vector: `(index, value)` pairs, sorted by index, no zero values.
pub type SVec<F> = Vec<(usize, F)>;

/// Accumulates `c * v` into a map.
pub fn acc_scaled<F: Field>(acc: &mut BTreeMap<usize, F>, v: &[(usize, F)], c: &F) {
    if c.is_zero() {
        return;
    }
    for (i, x) in v {
        let t = x.clone() * c;
        match acc.get_mut(i) {
            Some(y) => *y = y.clone() + &t,
            None => {
                acc.insert(*i, t);
            }
        }
    }
}

/// Accumulates a single term.
pub fn acc_add<F: Field>(acc: &mut BTreeMap<usize, F>, i: usize, c: F) {
    if c.is_zero() {
        return;
    }
    match acc.get_mut(&i) {
        Some(y) => *y = y.clone() + &c,
        None => {
            acc.insert(i, c);
        }
    }
}

/// Drops zero entries and returns the sorted sparse vector.
pub fn acc_finish<F: Field>(acc: BTreeMap<usize, F>) -> SVec<F> {
    acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
}

pub fn sparse_from_dense<F: Field>(v: &[F]) -> SVec<F> {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

pub fn dense_from_sparse<F: Field>(v: &[(usize, F)], n: usize) -> Vec<F> {
    let mut out = vec![F::zero(); n];
    for (i, x) in v {
        out[*i] = x.clone();
    }
    out
}

/// `a - b` for sparse vectors.
pub fn sparse_sub<F: Field>(a: &[(usize, F)], b: &[(usize, F)]) -> SVec<F> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, -b[j].1.clone()));
            j += 1;
        } else {
            let d = a[i].1.clone() - &b[j].1;
            if !d.is_zero() {
                out.push((a[i].0, d));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// `a + c * b` for sparse vectors.
fn sparse_axpy<F: Field>(a: &[(usize, F)], c: &F, b: &[(usize, F)]) -> SVec<F> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, b[j].1.clone() * c));
            j += 1;
        } else {
            let d = a[i].1.clone() + &(b[j].1.clone() * c);
            if !d.is_zero() {
                out.push((a[i].0, d));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// A dense row-major matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![F::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, F::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row);
        }
        Matrix { rows: r, cols: c, data }
    }

    /// Builds a matrix from sparse columns.
    pub fn from_sparse_cols(rows: usize, cols: &[SVec<F>]) -> Self {
        let mut m = Self::zeros(rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            for (i, x) in col {
                m.set(*i, j, x.clone());
            }
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<F> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn sparse_col(&self, j: usize) -> SVec<F> {
        (0..self.rows)
            .filter(|&i| !self.get(i, j).is_zero())
            .map(|i| (i, self.get(i, j).clone()))
            .collect()
    }

    pub fn sparse_row(&self, i: usize) -> SVec<F> {
        sparse_from_dense(self.row(i))
    }

    pub fn sparse_cols(&self) -> Vec<SVec<F>> {
        (0..self.cols).map(|j| self.sparse_col(j)).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = self.get(i, j);
                    if i == j {
                        x.is_one()
                    } else {
                        x.is_zero()
                    }
                })
            })
    }

    /// Matrix product `self * other`.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "shape mismatch in product");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    out.data[idx] = out.data[idx].clone() + &(a.clone() * b);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut s = F::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        s = s + &(a.clone() * b);
                    }
                }
                s
            })
            .collect()
    }

    /// Applies the matrix to a sparse vector.
    pub fn mul_sparse(&self, v: &[(usize, F)]) -> SVec<F> {
        let mut acc = vec![F::zero(); self.rows];
        for (j, x) in v {
            for (i, slot) in acc.iter_mut().enumerate() {
                let a = self.get(i, *j);
                if !a.is_zero() {
                    *slot = slot.clone() + &(a.clone() * x);
                }
            }
        }
        sparse_from_dense(&acc)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.clone() + b).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.clone() - b).collect(),
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a.clone() * c).collect() }
    }

    pub fn map_entries(&self, f: impl Fn(&F) -> F) -> Self {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    /// Kronecker product.
    pub fn kron(&self, other: &Self) -> Self {
        let (r2, c2) = (other.rows, other.cols);
        Self::from_fn(self.rows * r2, self.cols * c2, |i, j| {
            self.get(i / r2, j / c2).clone() * other.get(i % r2, j % c2)
        })
    }

    /// Stacks matrices vertically.
    pub fn vstack(parts: &[Self]) -> Self {
        let cols = parts.first().map_or(0, |m| m.cols);
        let mut data = Vec::new();
        let mut rows = 0;
        for p in parts {
            assert_eq!(p.cols, cols);
            rows += p.rows;
            data.extend(p.data.iter().cloned());
        }
        Matrix { rows, cols, data }
    }

    pub fn hstack(parts: &[Self]) -> Self {
        let rows = parts.first().map_or(0, |m| m.rows);
        let cols = parts.iter().map(|p| p.cols).sum();
        let mut out = Self::zeros(rows, cols);
        let mut off = 0;
        for p in parts {
            assert_eq!(p.rows, rows);
            for i in 0..rows {
                for j in 0..p.cols {
                    out.set(i, off + j, p.get(i, j).clone());
                }
            }
            off += p.cols;
        }
        out
    }

    /// The matrix flattened row-major into a column vector.
    pub fn vectorize(&self) -> Vec<F> {
        self.data.clone()
    }

    pub fn sparse_rows(&self) -> Vec<SVec<F>> {
        (0..self.rows).map(|i| self.sparse_row(i)).collect()
    }

    pub fn rank(&self) -> usize {
        Echelon::from_rows(self.cols, self.sparse_rows()).rank()
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.rows != self.cols {
            return None;
        }
        solve_many(self, &Self::identity(self.rows))
    }

    /// First entry (row, column) where two equally-shaped matrices differ,
    /// scanning column by column.
    pub fn first_difference(&self, other: &Self) -> Option<(usize, usize)> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        for j in 0..self.cols {
            for i in 0..self.rows {
                if self.get(i, j) != other.get(i, j) {
                    return Some((i, j));
                }
            }
        }
        None
    }
}

impl<F: fmt::Debug> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                write!(f, "{:?} ", self.data[i * self.cols + j])?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

/// Incrementally maintained row echelon form of a set of sparse rows.
///
/// Each stored row has its leftmost entry (the pivot) normalized to 1 and no
/// entries in earlier pivot columns of rows inserted before it. Reduction of a
/// vector against the rows gives its normal form modulo the span, which is
/// supported on non-pivot columns and therefore canonical. The fully reduced
/// form is produced on demand.
#[derive(Clone, Debug)]
pub struct Echelon<F> {
    ncols: usize,
    rows: Vec<SVec<F>>,
    pivot_row: BTreeMap<usize, usize>,
}

impl<F: Field> Echelon<F> {
    pub fn new(ncols: usize) -> Self {
        Echelon { ncols, rows: Vec::new(), pivot_row: BTreeMap::new() }
    }

    pub fn from_rows(ncols: usize, rows: impl IntoIterator<Item = SVec<F>>) -> Self {
        let mut e = Self::new(ncols);
        for r in rows {
            e.insert(r);
        }
        e
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Normal form of `v` modulo the row span: the unique representative
    /// with no entries in pivot columns.
    pub fn reduce(&self, v: &[(usize, F)]) -> SVec<F> {
        let mut out: SVec<F> = v.to_vec();
        let mut i = 0;
        while i < out.len() {
            let (c, coef) = (out[i].0, out[i].1.clone());
            match self.pivot_row.get(&c) {
                Some(&r) => out = sparse_axpy(&out, &(-coef), &self.rows[r]),
                None => i += 1,
            }
        }
        out
    }

    pub fn contains(&self, v: &[(usize, F)]) -> bool {
        self.reduce(v).is_empty()
    }

    /// Inserts a row; returns whether the rank grew.
    pub fn insert(&mut self, v: SVec<F>) -> bool {
        let mut v = self.reduce(&v);
        if v.is_empty() {
            return false;
        }
        let p = v[0].0;
        let inv = v[0].1.inv().expect("nonzero pivot");
        if !inv.is_one() {
            for (_, x) in v.iter_mut() {
                *x = x.clone() * &inv;
            }
        }
        self.pivot_row.insert(p, self.rows.len());
        self.rows.push(v);
        true
    }

    /// The stored (semi-reduced) rows; they span the same space as the
    /// fully reduced ones.
    pub fn rows(&self) -> &[SVec<F>] {
        &self.rows
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.pivot_row.keys().copied().collect()
    }

    pub fn is_pivot(&self, c: usize) -> bool {
        self.pivot_row.contains_key(&c)
    }

    /// Fully reduced rows keyed by pivot column.
    pub fn reduced(&self) -> BTreeMap<usize, SVec<F>> {
        let mut done: BTreeMap<usize, SVec<F>> = BTreeMap::new();
        for (&p, &r) in self.pivot_row.iter().rev() {
            let mut row = self.rows[r].clone();
            let mut i = 1;
            while i < row.len() {
                let (c, coef) = (row[i].0, row[i].1.clone());
                match done.get(&c) {
                    Some(other) => row = sparse_axpy(&row, &(-coef), other),
                    None => i += 1,
                }
            }
            done.insert(p, row);
        }
        done
    }

    /// Fully reduced rows sorted by pivot column.
    pub fn sorted_rows(&self) -> Vec<SVec<F>> {
        self.reduced().into_values().collect()
    }

    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.ncols).filter(|c| !self.pivot_row.contains_key(c)).collect()
    }

    /// Canonical basis of the null space of the row span.
    pub fn kernel(&self) -> Vec<SVec<F>> {
        let free = self.free_columns();
        let mut col_entries: BTreeMap<usize, Vec<(usize, F)>> = BTreeMap::new();
        for (p, row) in self.reduced() {
            for (c, x) in row {
                if c != p {
                    col_entries.entry(c).or_default().push((p, x));
                }
            }
        }
        let vecs = free.into_iter().map(|f| {
            let mut acc = BTreeMap::new();
            acc.insert(f, F::one());
            if let Some(es) = col_entries.get(&f) {
                for (p, x) in es {
                    acc.insert(*p, -x.clone());
                }
            }
            acc_finish(acc)
        });
        Echelon::from_rows(self.ncols, vecs).sorted_rows()
    }
}

/// Echelon-normalized basis of the null space of `m`, in deterministic order.
pub fn kernel_basis<F: Field>(m: &Matrix<F>) -> Vec<Vec<F>> {
    Echelon::from_rows(m.ncols(), m.sparse_rows())
        .kernel()
        .iter()
        .map(|v| dense_from_sparse(v, m.ncols()))
        .collect()
}

/// Echelon-normalized basis of the column space of `m`.
pub fn image_basis<F: Field>(m: &Matrix<F>) -> Vec<Vec<F>> {
    Echelon::from_rows(m.nrows(), m.sparse_cols())
        .sorted_rows()
        .iter()
        .map(|v| dense_from_sparse(v, m.nrows()))
        .collect()
}

/// Solves `m X = b` for all columns of `b` at once; `None` if inconsistent.
/// Free variables are set to zero.
pub fn solve_many<F: Field>(m: &Matrix<F>, b: &Matrix<F>) -> Option<Matrix<F>> {
    assert_eq!(m.nrows(), b.nrows());
    let n = m.ncols();
    let k = b.ncols();
    let rows = (0..m.nrows()).map(|i| {
        let mut r = m.sparse_row(i);
        for (j, x) in b.row(i).iter().enumerate() {
            if !x.is_zero() {
                r.push((n + j, x.clone()));
            }
        }
        r
    });
    let e = Echelon::from_rows(n + k, rows);
    if e.pivots().iter().any(|&p| p >= n) {
        return None;
    }
    let mut x = Matrix::zeros(n, k);
    for (p, row) in e.reduced() {
        for (c, v) in row {
            if c >= n {
                x.set(p, c - n, v);
            }
        }
    }
    Some(x)
}

/// Solves `m x = b`; `None` if inconsistent.
pub fn solve<F: Field>(m: &Matrix<F>, b: &[F]) -> Option<Vec<F>> {
    let bm = Matrix::from_fn(b.len(), 1, |i, _| b[i].clone());
    solve_many(m, &bm).map(|x| x.col(0))
}

/// Whether `v` lies in the span of `vs`.
pub fn in_span<F: Field>(vs: &[Vec<F>], v: &[F]) -> bool {
    let e = Echelon::from_rows(v.len(), vs.iter().map(|x| sparse_from_dense(x)));
    e.contains(&sparse_from_dense(v))
}

/// Dimension of the span of a list of vectors of length `n`.
pub fn span_dim<F: Field>(n: usize, vs: &[Vec<F>]) -> usize {
    Echelon::from_rows(n, vs.iter().map(|x| sparse_from_dense(x))).rank()
}

/// A finite-dimensional space with named basis vectors.
#[derive(Clone, PartialEq, Eq)]
pub struct LabeledSpace {
    labels: Arc<Vec<String>>,
}

impl LabeledSpace {
    /// Panics if labels repeat.
    pub fn new(labels: Vec<String>) -> Self {
        let mut sorted: Vec<&String> = labels.iter().collect();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), labels.len(), "basis labels must be distinct");
        LabeledSpace { labels: Arc::new(labels) }
    }

    pub fn try_new(labels: Vec<String>) -> Result<Self> {
        let mut sorted: Vec<&String> = labels.iter().collect();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != labels.len() {
            return Err(Error::ShapeMismatch(String::from("repeated basis label")));
        }
        Ok(LabeledSpace { labels: Arc::new(labels) })
    }

    /// Labels `prefix0, prefix1, ...`.
    pub fn numbered(prefix: &str, dim: usize) -> Self {
        LabeledSpace { labels: Arc::new((0..dim).map(|i| format!("{}{}", prefix, i)).collect()) }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Tensor power with labels joined by `⊗`.
    pub fn tensor_power(&self, k: usize) -> Self {
        let n = self.dim();
        let total = n.pow(k as u32);
        let labels = (0..total)
            .map(|mut idx| {
                let mut parts = vec![String::new(); k];
                for slot in (0..k).rev() {
                    parts[slot] = self.labels[idx % n].clone();
                    idx /= n;
                }
                parts.join("⊗")
            })
            .collect();
        LabeledSpace { labels: Arc::new(labels) }
    }
}

impl fmt::Debug for LabeledSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LabeledSpace{:?}", self.labels)
    }
}

/// A linear map between labeled spaces.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinMap<F> {
    pub dom: LabeledSpace,
    pub cod: LabeledSpace,
    pub matrix: Matrix<F>,
}

impl<F: Field> LinMap<F> {
    pub fn new(dom: LabeledSpace, cod: LabeledSpace, matrix: Matrix<F>) -> Self {
        assert_eq!(matrix.nrows(), cod.dim(), "codomain shape");
        assert_eq!(matrix.ncols(), dom.dim(), "domain shape");
        LinMap { dom, cod, matrix }
    }

    pub fn identity(space: LabeledSpace) -> Self {
        let n = space.dim();
        LinMap { dom: space.clone(), cod: space, matrix: Matrix::identity(n) }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.dom.dim(), other.cod.dim());
        LinMap { dom: other.dom.clone(), cod: self.cod.clone(), matrix: self.matrix.mul(&other.matrix) }
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn is_bijective(&self) -> bool {
        is_bijective(self)
    }

    pub fn inverse(&self) -> Option<Self> {
        self.matrix.inverse().map(|m| LinMap { dom: self.cod.clone(), cod: self.dom.clone(), matrix: m })
    }
}

/// True iff domain and codomain dimensions agree with the rank.
pub fn is_bijective<F: Field>(f: &LinMap<F>) -> bool {
    let n = f.dom.dim();
    n == f.cod.dim() && f.rank() == n
}

impl<F: fmt::Debug> fmt::Debug for QuotientSpace<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QuotientSpace(ambient {}, dim {})", self.ambient.dim(), self.free.len())
    }
}

/// A quotient of a labeled space by the span of some relation vectors.
///
/// The quotient basis is indexed by the non-pivot columns of the reduced
/// echelon form of the relations; the section sends a quotient basis vector
/// to the corresponding ambient basis vector.
#[derive(Clone)]
pub struct QuotientSpace<F> {
    ambient: LabeledSpace,
    space: LabeledSpace,
    echelon: Echelon<F>,
    free: Vec<usize>,
    free_index: Vec<Option<usize>>,
}

impl<F: Field> QuotientSpace<F> {
    pub fn new(ambient: LabeledSpace, relations: impl IntoIterator<Item = SVec<F>>) -> Self {
        let echelon = Echelon::from_rows(ambient.dim(), relations);
        Self::from_echelon(ambient, echelon)
    }

    pub fn from_echelon(ambient: LabeledSpace, echelon: Echelon<F>) -> Self {
        let free = echelon.free_columns();
        let mut free_index = vec![None; ambient.dim()];
        for (k, &f) in free.iter().enumerate() {
            free_index[f] = Some(k);
        }
        let space = LabeledSpace {
            labels: Arc::new(free.iter().map(|&f| format!("[{}]", ambient.label(f))).collect()),
        };
        QuotientSpace { ambient, space, echelon, free, free_index }
    }

    pub fn ambient(&self) -> &LabeledSpace {
        &self.ambient
    }

    /// The quotient as a labeled space.
    pub fn space(&self) -> &LabeledSpace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.free.len()
    }

    /// Reduced echelon basis of the relation span.
    pub fn relations(&self) -> Vec<SVec<F>> {
        self.echelon.sorted_rows()
    }

    /// A basis of the relation span, cheaper than [`Self::relations`].
    pub fn relation_basis(&self) -> &[SVec<F>] {
        self.echelon.rows()
    }

    pub fn relation_rank(&self) -> usize {
        self.echelon.rank()
    }

    /// Ambient indices of the quotient basis.
    pub fn free_columns(&self) -> &[usize] {
        &self.free
    }

    pub fn same_relations(&self, other: &Self) -> bool {
        self.ambient.dim() == other.ambient.dim()
            && self.free == other.free
            && self.echelon.sorted_rows() == other.echelon.sorted_rows()
    }

    /// Projects a sparse ambient vector to quotient coordinates.
    pub fn project(&self, v: &[(usize, F)]) -> SVec<F> {
        self.echelon
            .reduce(v)
            .into_iter()
            .map(|(j, x)| (self.free_index[j].expect("normal form lies on free columns"), x))
            .collect()
    }

    /// Ambient representative of a quotient vector.
    pub fn lift(&self, v: &[(usize, F)]) -> SVec<F> {
        v.iter().map(|(k, x)| (self.free[*k], x.clone())).collect()
    }

    /// Whether an ambient vector lies in the relation span.
    pub fn is_zero_class(&self, v: &[(usize, F)]) -> bool {
        self.echelon.contains(v)
    }

    pub fn projection(&self) -> LinMap<F> {
        let cols: Vec<SVec<F>> = (0..self.ambient.dim()).map(|j| self.project(&[(j, F::one())])).collect();
        LinMap::new(self.ambient.clone(), self.space.clone(), Matrix::from_sparse_cols(self.dim(), &cols))
    }

    pub fn section(&self) -> LinMap<F> {
        let mut m = Matrix::zeros(self.ambient.dim(), self.dim());
        for (k, &f) in self.free.iter().enumerate() {
            m.set(f, k, F::one());
        }
        LinMap::new(self.space.clone(), self.ambient.clone(), m)
    }
}

/// Convenience constructor matching the dense API.
pub fn make_quotient<F: Field>(ambient: LabeledSpace, relations: &[Vec<F>]) -> QuotientSpace<F> {
    QuotientSpace::new(ambient, relations.iter().map(|r| sparse_from_dense(r)))
}

/// Descends `f` (between ambients) to the quotients, checking that every
/// relation of `qdom` maps into the relation span of `qcod`.
pub fn descend_map<F: Field>(f: &LinMap<F>, qdom: &QuotientSpace<F>, qcod: &QuotientSpace<F>) -> Result<LinMap<F>> {
    if f.dom.dim() != qdom.ambient().dim() || f.cod.dim() != qcod.ambient().dim() {
        return Err(Error::ShapeMismatch(String::from("map does not act between the ambients")));
    }
    for r in qdom.relation_basis() {
        let img = f.matrix.mul_sparse(r);
        if !qcod.project(&img).is_empty() {
            let p = r[0].0;
            return Err(Error::WellDefinednessViolated(Witness::new(
                "relation image is not in the codomain relations",
                vec![String::from(qdom.ambient().label(p))],
            )));
        }
    }
    let cols: Vec<SVec<F>> = qdom
        .free_columns()
        .iter()
        .map(|&c| qcod.project(&f.matrix.sparse_col(c)))
        .collect();
    Ok(LinMap::new(qdom.space().clone(), qcod.space().clone(), Matrix::from_sparse_cols(qcod.dim(), &cols)))
}

/// Basis of `{h : cod→... | L_i h = h R_i for all i}` where `h` maps a space
/// of dimension `dom` to one of dimension `cod`, each `L_i` is `cod × cod`
/// and each `R_i` is `dom × dom`. Basis elements come in echelon order of
/// their row-major vectorization.
pub fn hom_space<F: Field>(dom: usize, cod: usize, constraints: &[(Matrix<F>, Matrix<F>)]) -> Vec<Matrix<F>> {
    let nvar = dom * cod;
    let var = |r: usize, c: usize| r * dom + c;
    let mut rows = Vec::new();
    for (l, r) in constraints {
        assert_eq!((l.nrows(), l.ncols()), (cod, cod), "left constraint shape");
        assert_eq!((r.nrows(), r.ncols()), (dom, dom), "right constraint shape");
        for i in 0..cod {
            for j in 0..dom {
                let mut acc = BTreeMap::new();
                for k in 0..cod {
                    acc_add(&mut acc, var(k, j), l.get(i, k).clone());
                }
                for k in 0..dom {
                    acc_add(&mut acc, var(i, k), -r.get(k, j).clone());
                }
                let row = acc_finish(acc);
                if !row.is_empty() {
                    rows.push(row);
                }
            }
        }
    }
    Echelon::from_rows(nvar, rows)
        .kernel()
        .into_iter()
        .map(|v| {
            let d = dense_from_sparse(&v, nvar);
            Matrix::from_fn(cod, dom, |i, j| d[var(i, j)].clone())
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    fn m(rows: &[&[i64]]) -> Matrix<Rational> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect())
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(kernel_basis(&m(&[&[0]])), vec![vec![q(1)]]);
        assert!(kernel_basis(&Matrix::<Rational>::identity(3)).is_empty());
        assert_eq!(kernel_basis(&m(&[&[1, 1], &[1, 1]])), vec![vec![q(1), q(-1)]]);
    }

    #[test]
    fn bijectivity() {
        let s = LabeledSpace::numbered("e", 5);
        assert!(is_bijective(&LinMap::<Rational>::identity(s.clone())));
        assert!(!is_bijective(&LinMap::new(s.clone(), s, Matrix::<Rational>::zeros(5, 5))));
    }

    #[test]
    fn quotient_examples() {
        let amb = LabeledSpace::numbered("e", 2);
        let q0 = make_quotient::<Rational>(amb.clone(), &[]);
        assert!(q0.projection().matrix.is_identity());
        let q1 = make_quotient(amb, &[vec![q(1), q(-1)]]);
        assert_eq!(q1.dim(), 1);
        assert!(q1.projection().compose(&q1.section()).matrix.is_identity());
    }

    #[test]
    fn descend_rejects_leg_projection() {
        // ambient k^2 ⊗ k^2 with relation e0⊗e0 - e1⊗e1; projecting onto the
        // first factor does not kill it.
        let amb = LabeledSpace::numbered("e", 2).tensor_power(2);
        let rel = vec![(0usize, q(1)), (3, q(-1))];
        let qd = QuotientSpace::new(amb.clone(), vec![rel]);
        let target = LabeledSpace::numbered("f", 2);
        let qc = QuotientSpace::<Rational>::new(target.clone(), Vec::new());
        let proj1 = Matrix::from_fn(2, 4, |i, j| if j / 2 == i { q(1) } else { q(0) });
        let err = descend_map(&LinMap::new(amb, target, proj1), &qd, &qc).unwrap_err();
        assert!(matches!(err, Error::WellDefinednessViolated(_)));
    }

    #[test]
    fn solve_and_inverse() {
        let a = m(&[&[2, 1], &[1, 1]]);
        let inv = a.inverse().unwrap();
        assert!(a.mul(&inv).is_identity());
        assert_eq!(solve(&a, &[q(3), q(2)]).unwrap(), vec![q(1), q(1)]);
        assert!(solve(&m(&[&[1, 1], &[1, 1]]), &[q(1), q(2)]).is_none());
    }

    #[test]
    fn hom_space_trivial() {
        assert_eq!(hom_space::<Rational>(1, 1, &[]).len(), 1);
        // commutant of the swap on k^2 is two-dimensional
        let swap = m(&[&[0, 1], &[1, 0]]);
        assert_eq!(hom_space(2, 2, &[(swap.clone(), swap)]).len(), 2);
    }
}
