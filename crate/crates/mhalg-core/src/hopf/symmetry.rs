use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{invert, Antipode, MultiplierBialgebroid};
use crate::algebra::{BaseEmbedding, EmbeddingKind};
use crate::bialgebroid::{flip_matrix, CounitCandidate};
use crate::catalog::Status;
use crate::error::{Result, Witness};
use crate::field::Field;
use crate::linalg::Matrix;

/// The co-opposite, opposite and bi-opposite of a multiplier bialgebroid.
#[derive(Clone, Debug)]
pub struct Symmetries<F> {
    pub co: MultiplierBialgebroid<F>,
    pub op: MultiplierBialgebroid<F>,
    pub op_co: MultiplierBialgebroid<F>,
}

/// Outcome of checking one symmetry companion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetryCheck {
    pub name: &'static str,
    pub certified: Status,
    pub regular: bool,
    /// The derived counits equal the transported ones.
    pub counits: Status,
    /// The derived antipode equals `S` or `S⁻¹` and passes every check.
    pub antipode: Status,
}

impl SymmetryCheck {
    pub fn passes(&self) -> bool {
        self.certified.is_pass() && self.regular && !self.counits.is_fail() && !self.antipode.is_fail()
    }
}

fn opposite_embedding<F: Field>(e: &BaseEmbedding<F>) -> BaseEmbedding<F> {
    BaseEmbedding {
        base: e.base.opposite(),
        images: e.images.iter().map(|m| m.swapped()).collect(),
        kind: EmbeddingKind::Homomorphism,
    }
}

impl<F: Field> MultiplierBialgebroid<F> {
    /// `(A, C, B, S_B⁻¹, S_C⁻¹, Δ_C^op-legs, Δ_B^op-legs)`: the flipped
    /// comultiplications.
    pub fn co(&self) -> Result<Self> {
        let flip = flip_matrix::<F>(self.dim());
        let conj = |m: &Matrix<F>| flip.mul(m).mul(&flip);
        Self::new(
            &self.a,
            self.iota_c.clone(),
            self.iota_b.clone(),
            invert(&self.s_b, "S_B")?,
            invert(&self.s_c, "S_C")?,
            conj(&self.left.tr),
            conj(&self.left.tl),
            conj(&self.right.rt),
            conj(&self.right.lt),
        )
    }

    /// `(A^op, B^op, C^op, S_C⁻¹, S_B⁻¹)` with the roles of the left and right
    /// comultiplications exchanged.
    pub fn op(&self) -> Result<Self> {
        Self::new(
            &self.a.opposite(),
            opposite_embedding(&self.iota_b),
            opposite_embedding(&self.iota_c),
            invert(&self.s_c, "S_C")?,
            invert(&self.s_b, "S_B")?,
            self.right.lt.clone(),
            self.right.rt.clone(),
            self.left.tl.clone(),
            self.left.tr.clone(),
        )
    }

    pub fn op_co(&self) -> Result<Self> {
        self.op()?.co()
    }

    /// All three companions, each certified.
    pub fn symmetries(&self) -> Result<Symmetries<F>> {
        let (co, op, op_co) = (self.co()?, self.op()?, self.op_co()?);
        co.certify()?;
        op.certify()?;
        op_co.certify()?;
        Ok(Symmetries { co, op, op_co })
    }

    /// Certifies the companions and, given the antipode of `self`, compares
    /// their derived counits and antipodes with the transported ones.
    pub fn check_symmetries(&self, ap: Option<&Antipode<F>>) -> Vec<SymmetryCheck> {
        let builders: [(&'static str, fn(&Self) -> Result<Self>); 3] = [("co", Self::co), ("op", Self::op), ("op_co", Self::op_co)];
        let mut out = Vec::new();
        for (name, build) in builders {
            let v = match build(self) {
                Ok(v) => v,
                Err(e) => {
                    let fail = Status::Fail(Witness::msg(format!("{}", e)));
                    out.push(SymmetryCheck { name, certified: fail.clone(), regular: false, counits: fail.clone(), antipode: fail });
                    continue;
                }
            };
            let certified = match v.certify() {
                Ok(()) => Status::Pass,
                Err(e) => Status::Fail(Witness::msg(format!("{}", e))),
            };
            let regular = v.check_regular().is_valid();
            let (counits, antipode) = match ap {
                None => (Status::Skipped(String::from("no antipode given")), Status::Skipped(String::from("no antipode given"))),
                Some(ap) => self.compare_companion(name, &v, ap),
            };
            out.push(SymmetryCheck { name, certified, regular, counits, antipode });
        }
        out
    }

    fn compare_companion(&self, name: &str, v: &Self, ap: &Antipode<F>) -> (Status, Status) {
        let (eb, ec, s) = match name {
            "co" => (self.s_b.mul(&ap.eps_b.map), self.s_c.mul(&ap.eps_c.map), ap.s_inv.clone()),
            "op" => (self.s_c.mul(&ap.eps_c.map), self.s_b.mul(&ap.eps_b.map), ap.s_inv.clone()),
            _ => (ap.eps_c.map.clone(), ap.eps_b.map.clone(), ap.s.clone()),
        };
        let derived = match v.derive_antipode() {
            Ok(d) => d,
            Err(e) => {
                let fail = Status::Fail(Witness::msg(format!("{}", e)));
                return (fail.clone(), fail);
            }
        };
        let counits = if derived.eps_b.map != eb {
            Status::Fail(Witness::msg(format!("the derived left counit of {} differs from the transported one", name)))
        } else if derived.eps_c.map != ec {
            Status::Fail(Witness::msg(format!("the derived right counit of {} differs from the transported one", name)))
        } else {
            Status::Pass
        };
        let antipode = if derived.s != s {
            Status::Fail(Witness::msg(format!("the derived antipode of {} differs from the expected one", name)))
        } else {
            match Antipode::from_maps(s, CounitCandidate::new(eb), CounitCandidate::new(ec)) {
                Ok(given) => v
                    .main_theorem_report(&given)
                    .into_iter()
                    .find(|e| e.status.is_fail())
                    .map_or(Status::Pass, |e| match e.status {
                        Status::Fail(w) => Status::Fail(Witness::new(format!("{}: {}", e.axiom.code(), w.message), w.tuple)),
                        other => other,
                    }),
                Err(e) => Status::Fail(Witness::msg(format!("{}", e))),
            }
        };
        (counits, antipode)
    }
}
