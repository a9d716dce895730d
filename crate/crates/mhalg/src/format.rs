//! JSON file formats. Scalars are `"p/q"` strings, or
//! `{"re": "p/q", "im": "r/s"}` objects over `Q(i)`.

use std::collections::BTreeMap;

use mhalg_core::algebra::{make_algebra, Algebra, MultiplierPair};
use mhalg_core::field::{Field, Rational};
use mhalg_core::linalg::Matrix;
use serde::{Deserialize, Serialize};

use crate::error::CliError;

pub const INSTANCE_SCHEMA: &str = "mhalg-instance/1";
pub const REPORT_SCHEMA: &str = "mhalg-report/1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ScalarDto {
    Real(String),
    Complex { re: String, im: String },
}

pub fn encode_scalar<F: Field>(x: &F) -> ScalarDto {
    let (re, im) = x.re_im();
    if im.is_zero() {
        ScalarDto::Real(re.to_fraction_string())
    } else {
        ScalarDto::Complex { re: re.to_fraction_string(), im: im.to_fraction_string() }
    }
}

pub fn decode_scalar<F: Field>(s: &ScalarDto) -> Result<F, CliError> {
    let parse = |t: &str| t.parse::<Rational>().map_err(CliError::parse);
    let (re, im) = match s {
        ScalarDto::Real(r) => (parse(r)?, Rational::zero()),
        ScalarDto::Complex { re, im } => (parse(re)?, parse(im)?),
    };
    F::from_re_im(re, im).ok_or_else(|| CliError::Parse(String::from("complex scalar in a rational instance; use --field qi")))
}

/// A sparse matrix; `entries` lists `[row, col, value]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixDto {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<(usize, usize, ScalarDto)>,
}

impl MatrixDto {
    pub fn encode<F: Field>(m: &Matrix<F>) -> Self {
        let mut entries = Vec::new();
        for r in 0..m.nrows() {
            for (c, x) in m.sparse_row(r) {
                entries.push((r, c, encode_scalar(&x)));
            }
        }
        MatrixDto { rows: m.nrows(), cols: m.ncols(), entries }
    }

    pub fn decode<F: Field>(&self) -> Result<Matrix<F>, CliError> {
        let mut m: Matrix<F> = Matrix::zeros(self.rows, self.cols);
        for (r, c, x) in &self.entries {
            if *r >= self.rows || *c >= self.cols {
                return Err(CliError::Parse(format!("matrix entry ({}, {}) outside a {}×{} matrix", r, c, self.rows, self.cols)));
            }
            let v: F = decode_scalar(x)?;
            let old = m.get(*r, *c).clone();
            m.set(*r, *c, old + v);
        }
        Ok(m)
    }
}

/// `e_i e_j` has coefficient `value` at `e_k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstantDto {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub value: ScalarDto,
}

/// Sparse structure constants; omitted constants are zero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraDto {
    pub labels: Vec<String>,
    pub constants: Vec<ConstantDto>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<Vec<ScalarDto>>,
}

impl AlgebraDto {
    pub fn encode<F: Field>(a: &Algebra<F>) -> Self {
        AlgebraDto {
            labels: (0..a.dim()).map(|i| String::from(a.label(i))).collect(),
            constants: a.constants().into_iter().map(|(i, j, k, c)| ConstantDto { i, j, k, value: encode_scalar(&c) }).collect(),
            unit: a.unit().map(|u| u.iter().map(encode_scalar).collect()),
        }
    }

    pub fn decode<F: Field>(&self) -> Result<Algebra<F>, CliError> {
        let constants = self
            .constants
            .iter()
            .map(|c| Ok((c.i, c.j, c.k, decode_scalar(&c.value)?)))
            .collect::<Result<Vec<_>, CliError>>()?;
        let unit = match &self.unit {
            Some(u) => Some(u.iter().map(decode_scalar).collect::<Result<Vec<F>, _>>()?),
            None => None,
        };
        Ok(make_algebra(self.labels.clone(), constants, unit)?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiplierDto {
    pub left: MatrixDto,
    pub right: MatrixDto,
}

impl MultiplierDto {
    pub fn encode<F: Field>(m: &MultiplierPair<F>) -> Self {
        MultiplierDto { left: MatrixDto::encode(&m.left), right: MatrixDto::encode(&m.right) }
    }

    pub fn decode<F: Field>(&self) -> Result<MultiplierPair<F>, CliError> {
        Ok(MultiplierPair::new(self.left.decode()?, self.right.decode()?))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StarDto {
    pub star_a: MatrixDto,
    pub star_b: MatrixDto,
    pub star_c: MatrixDto,
}

/// A self-contained multiplier bialgebroid.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceDto {
    pub schema: String,
    pub field: String,
    pub kind: String,
    pub descriptor: String,
    pub algebra: AlgebraDto,
    pub base_b: AlgebraDto,
    pub base_c: AlgebraDto,
    pub iota_b: Vec<MultiplierDto>,
    pub iota_c: Vec<MultiplierDto>,
    pub s_b: MatrixDto,
    pub s_c: MatrixDto,
    pub tl: MatrixDto,
    pub tr: MatrixDto,
    pub lt: MatrixDto,
    pub rt: MatrixDto,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub star: Option<StarDto>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrowDto {
    pub id: String,
    pub src: String,
    pub tgt: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComposeDto {
    pub left: String,
    pub right: String,
    pub result: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InverseDto {
    pub arrow: String,
    pub result: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupoidDto {
    pub objects: Vec<String>,
    pub arrows: Vec<ArrowDto>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub compose: Option<Vec<ComposeDto>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub inverse: Option<Vec<InverseDto>>,
}

/// Input of `build tensor`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TensorInputDto {
    pub b: AlgebraDto,
    pub c: AlgebraDto,
    pub s_b: MatrixDto,
    pub s_c: MatrixDto,
}

/// A finite group by its multiplication table of labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupDto {
    pub elements: Vec<String>,
    pub table: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum HopfDto {
    Group { group: GroupDto },
    General { algebra: AlgebraDto, comult: MatrixDto, counit: MatrixDto, antipode: MatrixDto },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ActionDto {
    /// `h ▷ c`, one matrix per basis element of `H`.
    pub left: Vec<MatrixDto>,
    /// `b ◁ h`, one matrix per basis element of `H`.
    pub right: Vec<MatrixDto>,
}

/// Input of `build crossed`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossedInputDto {
    pub b: AlgebraDto,
    pub c: AlgebraDto,
    pub s_b: MatrixDto,
    pub s_c: MatrixDto,
    pub hopf: HopfDto,
    pub action: ActionDto,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessDto {
    pub message: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub tuple: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryDto {
    pub axiom: String,
    pub anchor: String,
    /// `pass`, `fail` or `skipped`.
    pub status: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessDto>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceInfo {
    pub kind: String,
    pub field: String,
    pub descriptor: String,
    pub dim_a: usize,
    pub dim_b: usize,
    pub dim_c: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegularityDto {
    /// `T_λ, T_ρ, λT, ρT`.
    pub bijective: [bool; 4],
    pub full: [bool; 4],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerivationDto {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counit_b: Option<MatrixDto>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counit_c: Option<MatrixDto>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub antipode: Option<MatrixDto>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub antipode_inverse: Option<MatrixDto>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportDto {
    pub schema: String,
    pub command: String,
    pub instance: InstanceInfo,
    pub entries: Vec<EntryDto>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub regular: Option<RegularityDto>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub derivation: Option<DerivationDto>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    /// Seconds per phase; only present when requested.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timings: Option<BTreeMap<String, f64>>,
}

pub fn from_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T, CliError> {
    serde_json::from_str(text).map_err(CliError::parse)
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("DTOs serialize");
    s.push('\n');
    s
}
