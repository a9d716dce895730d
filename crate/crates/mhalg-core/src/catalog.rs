//! The fixed catalog of checkable identities and their report entries.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::Witness;

macro_rules! catalog {
    ($( $var:ident => ($code:literal, $anchor:literal, $quote:literal), )*) => {
        /// Identifier of one checkable identity.
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum AxiomId {
            $( $var, )*
        }

        impl AxiomId {
            /// Every identifier, in catalog order.
            pub const ALL: &'static [AxiomId] = &[ $( AxiomId::$var, )* ];

            pub fn code(self) -> &'static str {
                match self { $( AxiomId::$var => $code, )* }
            }

            pub fn anchor(self) -> &'static str {
                match self { $( AxiomId::$var => $anchor, )* }
            }

            pub fn quote(self) -> &'static str {
                match self { $( AxiomId::$var => $quote, )* }
            }
        }
    };
}

catalog! {
    LbA1 => ("LB.A1", "(A1)", "idempotent and non-degenerate"),
    LbA2 => ("LB.A2", "(A2)", "faithful and idempotent"),
    LbA3 => ("LB.A3", "(A3)", "non-degenerate as a right module"),
    LbWelldef => ("LB.WELLDEF", "eq:tltr-welldefined", "T̃_λ(s(x)a⊗b) = T̃_λ(a⊗b)(1⊗t(x))"),
    LbCompat => ("LB.COMPAT", "dg:tltr-compatible", "make the following diagrams commute"),
    LbModule => ("LB.MODULE", "dg:tltr-module", "tensor products over ℂ and over B^op appear side by side"),
    LbMult => ("LB.MULT", "lemma:tltr(1)", "Δ is a homomorphism if and only if"),
    LbBimod => ("LB.BIMOD", "eq:tltr-bimodule", "Δ(s(x)t(y)as(x′)t(y′))"),
    LbCoassoc => ("LB.COASSOC", "dg:tltr-coassociative", "coassociative in the sense that"),
    LbPentagon => ("LB.PENTAGON", "prop:tltr-pentagon", "pentagonal relations"),
    LbTakeuchi => ("LB.TAKEUCHI", "eq:left-takeuchi", "There exist elements"),
    RbA1 => ("RB.A1", "(A1)", "idempotent and non-degenerate"),
    RbA2 => ("RB.A2", "(A2)", "faithful and idempotent"),
    RbA3 => ("RB.A3", "(A3)", "non-degenerate as a left module"),
    RbWelldef => ("RB.WELLDEF", "eq:ltrt-welldefined", "λT̃(at(z)⊗b) = (1⊗s(z))λT̃(a⊗b)"),
    RbCompat => ("RB.COMPAT", "dg:ltrt-compatible", "make the following diagrams commute"),
    RbModule => ("RB.MODULE", "dg:ltrt-module", "tensor products over ℂ and over C appear side by side"),
    RbMult => ("RB.MULT", "lemma:ltrt(1)", "Δ is a homomorphism if and only if"),
    RbBimod => ("RB.BIMOD", "eq:ltrt-bimodule", "at(z) ⊗ t(x)bs(y′)t(x′)"),
    RbCoassoc => ("RB.COASSOC", "dg:ltrt-coassociative", "coassociative in the sense that"),
    RbPentagon => ("RB.PENTAGON", "prop:ltrt-pentagon", "pentagonal relations"),
    RbTakeuchi => ("RB.TAKEUCHI", "eq:right-takeuchi", "There exist elements"),
    MbBases => ("MB.BASES", "definition:mult-hopf-algebroid", "s_B(B) = t_C(C)"),
    MbMixed => ("MB.MIXED", "dg:compatible", "mixed co-associativity"),
    MbBimod => ("MB.BIMOD", "eq:hopf-delta-bimodule", "Δ_B(xyax′y′) = (y⊗x)Δ_B(a)(y′⊗x′)"),
    MhFull => ("MH.FULL", "definition:hopf(1)", "are equal to A"),
    MhBijective => ("MH.BIJECTIVE", "definition:hopf(2)", "are bijective"),
    CuLBimod => ("CU.L.BIMOD", "eq:left-counit-bimodule", "ε(s(x)a) = xε(a)"),
    CuLCounit => ("CU.L.COUNIT", "eq:left-counit", "(ε⊗ι)(T_ρ(a⊗b)) = ab"),
    CuLMult => ("CU.L.MULT", "eq:left-counit-multiplicative", "ε(ab) = ε(as(ε(b)))"),
    CuRBimod => ("CU.R.BIMOD", "eq:right-counit-bimodule", "ε(as(y)) = ε(a)y"),
    CuRCounit => ("CU.R.COUNIT", "eq:right-counit", "(ε⊗ι)(ρT(a⊗b)) = ba"),
    CuRMult => ("CU.R.MULT", "eq:right-counit-multiplicative", "ε(ab) = ε(s(ε(a))b)"),
    ApBimod => ("AP.BIMOD", "eq:antipode-bimodule", "S(xyax′y′)=S_C(y′)S_B(x′)S(a)S_C(y)S_B(x)"),
    ApDiagram => ("AP.DIAGRAM", "dg:antipode", "the following diagrams commute"),
    ApAntimult => ("AP.ANTIMULT", "tm:hopf-characterization", "S(ab) = S(b)S(a)"),
    ApInverse => ("AP.INVERSE", "definition:antipode", "An invertible antipode for a"),
    GalInverse => ("GAL.INVERSE", "dg:galois-inverse", "a_(1) ⊗ S(a_(2))b"),
    Aux => ("AUX", "prop:antipode-aux", "the following diagrams commute, where we omitted"),
    Comult => ("COMULT", "prop:antipode-comult", "reverses not only the multiplication"),
    CorCounit => ("COR.COUNIT", "corollary:hopf-symmetry", "S_B∘ε_B = ε_C∘S"),
    StInvolution => ("ST.INVOLUTION", "eq:involution", "S_B∘∗∘S_C∘∗ = ι_C"),
    StCanonical => ("ST.CANONICAL", "eq:tltr-involution", "(∗⊗∗)∘T_λ = λT∘(∗⊗∗)"),
    StCounit => ("ST.COUNIT", "prop:involution", "ε_C∘∗ = ∗∘S_B∘ε_B"),
    StAntipode => ("ST.ANTIPODE", "prop:involution", "S∘∗∘S∘∗ = ι_A"),
}

impl AxiomId {
    pub fn from_code(code: &str) -> Option<AxiomId> {
        AxiomId::ALL.iter().copied().find(|a| a.code().eq_ignore_ascii_case(code.trim()))
    }

    /// Structural identities of a multiplier bialgebroid (what `check` runs).
    pub fn structural() -> Vec<AxiomId> {
        AxiomId::ALL
            .iter()
            .copied()
            .filter(|a| {
                let c = a.code();
                c.starts_with("LB.") || c.starts_with("RB.") || c.starts_with("MB.") || c.starts_with("MH.")
            })
            .collect()
    }
}

impl fmt::Display for AxiomId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

/// Outcome of checking one identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail(Witness),
    Skipped(String),
}

impl Status {
    pub fn is_pass(&self) -> bool {
        matches!(self, Status::Pass)
    }

    pub fn is_fail(&self) -> bool {
        matches!(self, Status::Fail(_))
    }

    /// Combines two statuses, keeping the first failure.
    pub fn and(self, other: Status) -> Status {
        match self {
            Status::Pass => other,
            s => s,
        }
    }

    pub fn from_result(r: core::result::Result<(), Witness>) -> Status {
        match r {
            Ok(()) => Status::Pass,
            Err(w) => Status::Fail(w),
        }
    }
}

/// One line of a report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Entry {
    pub axiom: AxiomId,
    pub status: Status,
}

impl Entry {
    pub fn new(axiom: AxiomId, status: Status) -> Self {
        Entry { axiom, status }
    }
}

/// Sorts entries into catalog order.
pub fn sort_entries(entries: &mut [Entry]) {
    entries.sort_by_key(|e| e.axiom);
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn codes_are_unique_and_parse_back() {
        for a in AxiomId::ALL {
            assert_eq!(AxiomId::from_code(a.code()), Some(*a));
        }
        let mut codes: Vec<&str> = AxiomId::ALL.iter().map(|a| a.code()).collect();
        codes.sort();
        codes.dedup();
        assert_eq!(codes.len(), AxiomId::ALL.len());
    }
}
