//! Error and witness types shared by every module.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::catalog::AxiomId;

/// A concrete counterexample: a human-readable message plus the basis tuple
/// (or relation generator) at which an identity fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub message: String,
    pub tuple: Vec<String>,
}

impl Witness {
    pub fn new(message: impl Into<String>, tuple: Vec<String>) -> Self {
        Witness { message: message.into(), tuple }
    }

    pub fn msg(message: impl Into<String>) -> Self {
        Witness { message: message.into(), tuple: Vec::new() }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.tuple.is_empty() {
            write!(f, "{}", self.message)
        } else {
            write!(f, "{} at (", self.message)?;
            for (i, t) in self.tuple.iter().enumerate() {
                if i > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", t)?;
            }
            write!(f, ")")
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    EmptyAlgebra,
    ShapeMismatch(String),
    NotAssociative { i: usize, j: usize, k: usize, q: usize },
    UnitInvalid,
    A1Violated(String),
    NotMultiplicative { i: usize, j: usize },
    NotInjective,
    ImagesDoNotCommute { i: usize, j: usize },
    InvalidMultiplier(usize),
    DecorationMismatch(String),
    BaseMismatch(String),
    BaseNotUnital(String),
    WellDefinednessViolated(Witness),
    AxiomFailed { axiom: AxiomId, witness: Witness },
    TakeuchiMembershipFailed(Witness),
    HypothesisUnverified(String),
    NotBijective(String),
    IdealConditionFails(String),
    InconsistentSystem(String),
    NotRegular(String),
    InverseCheckFailed(String),
    FieldMismatch,
    NotACategory(Witness),
    NotAGroupoid(Witness),
    NotAGroup(Witness),
    ActionInvalid { condition: String, witness: Witness },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptyAlgebra => write!(f, "EmptyAlgebra: dimension-0 algebras are not supported"),
            Error::ShapeMismatch(s) => write!(f, "ShapeMismatch: {}", s),
            Error::NotAssociative { i, j, k, q } => {
                write!(f, "NotAssociative: (e{} e{}) e{} differs from e{} (e{} e{}) in coordinate {}", i, j, k, i, j, k, q)
            }
            Error::UnitInvalid => write!(f, "UnitInvalid: the given unit does not act as identity"),
            Error::A1Violated(s) => write!(f, "A1Violated: {}", s),
            Error::NotMultiplicative { i, j } => write!(f, "NotMultiplicative: basis pair ({}, {})", i, j),
            Error::NotInjective => write!(f, "NotInjective"),
            Error::ImagesDoNotCommute { i, j } => write!(f, "ImagesDoNotCommute: basis pair ({}, {})", i, j),
            Error::InvalidMultiplier(i) => write!(f, "InvalidMultiplier: image of basis element {} is not a multiplier", i),
            Error::DecorationMismatch(s) => write!(f, "DecorationMismatch: {}", s),
            Error::BaseMismatch(s) => write!(f, "BaseMismatch: {}", s),
            Error::BaseNotUnital(s) => write!(f, "BaseNotUnital: {}", s),
            Error::WellDefinednessViolated(w) => write!(f, "WellDefinednessViolated: {}", w),
            Error::AxiomFailed { axiom, witness } => write!(f, "AxiomFailed({}): {}", axiom.code(), witness),
            Error::TakeuchiMembershipFailed(w) => write!(f, "TakeuchiMembershipFailed: {}", w),
            Error::HypothesisUnverified(s) => write!(f, "HypothesisUnverified: {}", s),
            Error::NotBijective(s) => write!(f, "NotBijective: {}", s),
            Error::IdealConditionFails(s) => write!(f, "IdealConditionFails: {}", s),
            Error::InconsistentSystem(s) => write!(f, "InconsistentSystem: {}", s),
            Error::NotRegular(s) => write!(f, "NotRegular: {}", s),
            Error::InverseCheckFailed(s) => write!(f, "InverseCheckFailed: {}", s),
            Error::FieldMismatch => write!(f, "FieldMismatch: star structures require the Gaussian rationals"),
            Error::NotACategory(w) => write!(f, "NotACategory: {}", w),
            Error::NotAGroupoid(w) => write!(f, "NotAGroupoid: {}", w),
            Error::NotAGroup(w) => write!(f, "NotAGroup: {}", w),
            Error::ActionInvalid { condition, witness } => write!(f, "ActionInvalid({}): {}", condition, witness),
        }
    }
}

pub type Result<T> = core::result::Result<T, Error>;

impl core::error::Error for Error {}
