//! One-sided multiplier bialgebroids given by their lifted canonical maps.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::algebra::{module_from_embedding, BaseEmbedding, DecKind, EmbeddingKind, ModuleStruct};
use crate::catalog::Status;
use crate::error::{Error, Result, Witness};
use crate::field::Field;
use crate::linalg::{Matrix, SVec};

mod counit;
mod left;
mod right;

pub use counit::{CounitCandidate, DerivationTrace, IdealReport};
pub use left::{make_left_bialgebroid, LeftBialgebroid, LeftChecker};
pub use right::{make_right_bialgebroid, RightBialgebroid, RightChecker};

/// The four ways a base element `x` acts on `A` through `s` and `t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Act {
    /// `a ↦ s(x)a`
    Ls,
    /// `a ↦ t(x)a`
    Lt,
    /// `a ↦ as(x)`
    Rs,
    /// `a ↦ at(x)`
    Rt,
}

/// Module structures induced by a pair `(s, t)` together with the sparse
/// columns of every action matrix.
#[derive(Clone, Debug)]
pub struct Modules<F> {
    pub ls: Arc<ModuleStruct<F>>,
    pub lt: Arc<ModuleStruct<F>>,
    pub rs: Arc<ModuleStruct<F>>,
    pub rt: Arc<ModuleStruct<F>>,
    cols: [Vec<Vec<SVec<F>>>; 4],
}

impl<F: Field> Modules<F> {
    pub fn new(s: &BaseEmbedding<F>, t: &BaseEmbedding<F>, base_name: &str) -> Result<Self> {
        let ls = Arc::new(module_from_embedding(s, DecKind::LowerLeft, base_name)?);
        let lt = Arc::new(module_from_embedding(t, DecKind::UpperRight, base_name)?);
        let rs = Arc::new(module_from_embedding(s, DecKind::LowerRight, base_name)?);
        let rt = Arc::new(module_from_embedding(t, DecKind::UpperLeft, base_name)?);
        let fam = |m: &ModuleStruct<F>| m.action.iter().map(|a| a.sparse_cols()).collect::<Vec<_>>();
        let cols = [fam(&ls), fam(&lt), fam(&rs), fam(&rt)];
        Ok(Modules { ls, lt, rs, rt, cols })
    }

    pub fn get(&self, act: Act) -> &Arc<ModuleStruct<F>> {
        match act {
            Act::Ls => &self.ls,
            Act::Lt => &self.lt,
            Act::Rs => &self.rs,
            Act::Rt => &self.rt,
        }
    }

    /// Sparse columns of the action of base basis element `x`.
    pub fn cols(&self, act: Act, x: usize) -> &[SVec<F>] {
        let i = match act {
            Act::Ls => 0,
            Act::Lt => 1,
            Act::Rs => 2,
            Act::Rt => 3,
        };
        &self.cols[i][x]
    }

    /// Action matrix of an arbitrary base element.
    pub fn action_of(&self, act: Act, x: &[F]) -> Matrix<F> {
        let m = self.get(act);
        let mut out = Matrix::zeros(m.carrier_dim, m.carrier_dim);
        for (i, c) in x.iter().enumerate() {
            if !c.is_zero() {
                out = out.add(&m.action[i].scale(c));
            }
        }
        out
    }
}

pub(crate) fn check_embedding_pair<F: Field>(s: &BaseEmbedding<F>, t: &BaseEmbedding<F>) -> Result<()> {
    if s.kind != EmbeddingKind::Homomorphism {
        return Err(Error::DecorationMismatch(String::from("s must be a homomorphism")));
    }
    if t.kind != EmbeddingKind::AntiHomomorphism {
        return Err(Error::DecorationMismatch(String::from("t must be an anti-homomorphism")));
    }
    if s.base != t.base {
        return Err(Error::BaseMismatch(String::from("s and t have different domains")));
    }
    s.check_commutes(t)
}

pub(crate) fn lift_cols<F: Field>(m: &Matrix<F>, n: usize, what: &str) -> Result<Vec<SVec<F>>> {
    if m.nrows() != n * n || m.ncols() != n * n {
        return Err(Error::ShapeMismatch(format!("{} must be a {}×{} matrix", what, n * n, n * n)));
    }
    Ok(m.sparse_cols())
}

/// Matrix of the flip `a⊗b ↦ b⊗a` on `A⊗A`.
pub fn flip_matrix<F: Field>(n: usize) -> Matrix<F> {
    Matrix::from_fn(n * n, n * n, |r, c| if r == (c % n) * n + c / n { F::one() } else { F::zero() })
}

pub(crate) fn status(r: core::result::Result<(), Witness>) -> Status {
    Status::from_result(r)
}

pub(crate) fn prefixed(mut w: Witness, prefix: &[String]) -> Witness {
    let mut t: Vec<String> = prefix.to_vec();
    t.append(&mut w.tuple);
    w.tuple = t;
    w
}

/// Sparse `Σ_j v_j cols[j]`.
pub(crate) fn apply_cols<F: Field>(cols: &[SVec<F>], v: &[(usize, F)]) -> SVec<F> {
    let mut acc = alloc::collections::BTreeMap::new();
    for (j, c) in v {
        crate::linalg::acc_scaled(&mut acc, &cols[*j], c);
    }
    crate::linalg::acc_finish(acc)
}
