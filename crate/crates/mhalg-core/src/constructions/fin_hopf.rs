//! Finite-dimensional Hopf algebras.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{make_algebra, Algebra};
use crate::error::{Error, Result, Witness};
use crate::field::Field;
use crate::linalg::{dense_from_sparse, sparse_from_dense, Matrix, SVec};

/// A finite-dimensional unital Hopf algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinHopf<F> {
    pub algebra: Algebra<F>,
    /// `Δ: H → H⊗H` as an `n² × n` matrix.
    pub comult: Matrix<F>,
    /// `ε: H → k` as a `1 × n` matrix.
    pub counit: Matrix<F>,
    pub antipode: Matrix<F>,
}

fn hopf_err(msg: impl Into<String>, tuple: Vec<String>) -> Error {
    Error::InconsistentSystem(format!("{}", Witness::new(msg, tuple)))
}

impl<F: Field> FinHopf<F> {
    /// Checks the bialgebra and antipode axioms on basis elements.
    pub fn new(algebra: Algebra<F>, comult: Matrix<F>, counit: Matrix<F>, antipode: Matrix<F>) -> Result<Self> {
        let n = algebra.dim();
        if comult.nrows() != n * n || comult.ncols() != n || counit.nrows() != 1 || counit.ncols() != n {
            return Err(Error::ShapeMismatch(String::from("Hopf structure maps have the wrong shape")));
        }
        if antipode.nrows() != n || antipode.ncols() != n {
            return Err(Error::ShapeMismatch(String::from("the antipode must be square")));
        }
        let unit = algebra.find_unit().ok_or_else(|| Error::BaseNotUnital(String::from("H has no unit")))?;
        let h = FinHopf { algebra, comult, counit, antipode };
        let hh = h.algebra.tensor(&h.algebra);
        let lbl = |i: usize| String::from(h.algebra.label(i));
        let delta_unit = h.comult.mul_vec(&unit);
        let unit2: Vec<F> = (0..n * n).map(|k| unit[k / n].clone() * &unit[k % n]).collect();
        if delta_unit != unit2 {
            return Err(hopf_err("Δ(1) = 1⊗1 fails", vec![]));
        }
        if h.eps(&sparse_from_dense(&unit)) != F::one() {
            return Err(hopf_err("ε(1) = 1 fails", vec![]));
        }
        for i in 0..n {
            for j in 0..n {
                let prod = h.algebra.product(i, j);
                let lhs = h.comult.mul_sparse(prod);
                let rhs = hh.mul_sparse(&h.delta(i), &h.delta(j));
                if lhs != rhs {
                    return Err(hopf_err("Δ(gh) = Δ(g)Δ(h) fails", vec![lbl(i), lbl(j)]));
                }
                if h.eps(prod) != h.eps(&[(i, F::one())]) * &h.eps(&[(j, F::one())]) {
                    return Err(hopf_err("ε(gh) = ε(g)ε(h) fails", vec![lbl(i), lbl(j)]));
                }
            }
        }
        for i in 0..n {
            let d = h.delta(i);
            let mut left3 = Vec::new();
            let mut right3 = Vec::new();
            let (mut l_eps, mut r_eps) = (vec![F::zero(); n], vec![F::zero(); n]);
            let (mut s_left, mut s_right) = (vec![F::zero(); n], vec![F::zero(); n]);
            for (k, c) in &d {
                let (p, q) = (k / n, k % n);
                for (k2, c2) in h.delta(p) {
                    left3.push((k2 * n + q, c.clone() * &c2));
                }
                for (k2, c2) in h.delta(q) {
                    right3.push((p * n * n + k2, c.clone() * &c2));
                }
                let ep = h.eps(&[(p, F::one())]);
                let eq = h.eps(&[(q, F::one())]);
                r_eps[p] = r_eps[p].clone() + &(c.clone() * &eq);
                l_eps[q] = l_eps[q].clone() + &(c.clone() * &ep);
                let sp = h.antipode.sparse_col(p);
                let sq = h.antipode.sparse_col(q);
                for (k, v) in h.algebra.mul_sparse(&sp, &[(q, F::one())]) {
                    s_left[k] = s_left[k].clone() + &(c.clone() * &v);
                }
                for (k, v) in h.algebra.mul_sparse(&[(p, F::one())], &sq) {
                    s_right[k] = s_right[k].clone() + &(c.clone() * &v);
                }
            }
            if crate::linalg::acc_finish(collect(left3)) != crate::linalg::acc_finish(collect(right3)) {
                return Err(hopf_err("Δ is not coassociative", vec![lbl(i)]));
            }
            let e_i = dense_from_sparse(&[(i, F::one())], n);
            if l_eps != e_i || r_eps != e_i {
                return Err(hopf_err("(ε⊗ι)Δ = ι = (ι⊗ε)Δ fails", vec![lbl(i)]));
            }
            let expect: Vec<F> = unit.iter().map(|u| u.clone() * &h.eps(&[(i, F::one())])).collect();
            if s_left != expect || s_right != expect {
                return Err(hopf_err("m(S⊗ι)Δ = 1ε = m(ι⊗S)Δ fails", vec![lbl(i)]));
            }
        }
        Ok(h)
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// `Δ(e_i)` as a sparse vector on `H⊗H`.
    pub fn delta(&self, i: usize) -> SVec<F> {
        self.comult.sparse_col(i)
    }

    pub fn eps(&self, v: &[(usize, F)]) -> F {
        let mut acc = F::zero();
        for (i, c) in v {
            acc = acc + &(self.counit.get(0, *i).clone() * c);
        }
        acc
    }

    pub fn unit(&self) -> Vec<F> {
        self.algebra.find_unit().expect("Hopf algebras are unital")
    }
}

fn collect<F: Field>(v: Vec<(usize, F)>) -> alloc::collections::BTreeMap<usize, F> {
    let mut acc = alloc::collections::BTreeMap::new();
    for (i, c) in v {
        crate::linalg::acc_add(&mut acc, i, c);
    }
    acc
}

/// The group algebra of a finite group given by its multiplication table
/// `table[g][h] = gh`, with `Δ(g) = g⊗g`, `ε(g) = 1` and `S(g) = g⁻¹`.
pub fn make_fin_hopf<F: Field>(labels: Vec<String>, table: &[Vec<usize>]) -> Result<FinHopf<F>> {
    let n = labels.len();
    let bad = |msg: &str, t: Vec<String>| Error::NotAGroup(Witness::new(msg, t));
    if n == 0 || table.len() != n || table.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
        return Err(bad("the table must be a square table over the elements", vec![]));
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if table[table[a][b]][c] != table[a][table[b][c]] {
                    return Err(bad("not associative", vec![labels[a].clone(), labels[b].clone(), labels[c].clone()]));
                }
            }
        }
    }
    let e = (0..n)
        .find(|&e| (0..n).all(|g| table[e][g] == g && table[g][e] == g))
        .ok_or_else(|| bad("no identity element", vec![]))?;
    let mut inv = vec![0; n];
    for g in 0..n {
        inv[g] = (0..n)
            .find(|&h| table[g][h] == e && table[h][g] == e)
            .ok_or_else(|| bad("element has no inverse", vec![labels[g].clone()]))?;
    }
    let mut constants = Vec::new();
    for a in 0..n {
        for b in 0..n {
            constants.push((a, b, table[a][b], F::one()));
        }
    }
    let mut unit = vec![F::zero(); n];
    unit[e] = F::one();
    let algebra = make_algebra(labels, constants, Some(unit))?;
    let comult = Matrix::from_fn(n * n, n, |r, c| if r == c * n + c { F::one() } else { F::zero() });
    let counit = Matrix::from_fn(1, n, |_, _| F::one());
    let antipode = Matrix::from_fn(n, n, |r, c| if r == inv[c] { F::one() } else { F::zero() });
    FinHopf::new(algebra, comult, counit, antipode)
}

/// `ℤ/n` as a group algebra with elements `g0, …, g(n-1)`.
pub fn cyclic_group_algebra<F: Field>(n: usize) -> Result<FinHopf<F>> {
    let labels = (0..n).map(|k| format!("g{}", k)).collect();
    let table: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
    make_fin_hopf(labels, &table)
}
