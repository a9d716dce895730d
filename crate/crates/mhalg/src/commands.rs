//! The `check` and `derive` commands.

use std::collections::BTreeMap;
use std::time::Instant;

use mhalg_core::catalog::{sort_entries, AxiomId, Entry, Status};
use mhalg_core::error::Error as CoreError;
use mhalg_core::field::{Field, FieldTag, GaussianRational, Rational};
use mhalg_core::hopf::{Antipode, HopfCertificate, MultiplierBialgebroid};

use crate::error::CliError;
use crate::format::*;
use crate::instance::{load, parse_field, Loaded};
use crate::report::entry_dto;

/// Which axioms `check` runs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Selection {
    All,
    Only(Vec<AxiomId>),
}

impl Selection {
    /// Parses `all` or a comma-separated list of codes.
    pub fn parse(s: &str) -> Result<Self, CliError> {
        if s.trim().eq_ignore_ascii_case("all") {
            return Ok(Selection::All);
        }
        let mut v = Vec::new();
        for code in s.split(',').filter(|c| !c.trim().is_empty()) {
            let ax = AxiomId::from_code(code).ok_or_else(|| CliError::Usage(format!("unknown axiom code {:?}", code.trim())))?;
            if !v.contains(&ax) {
                v.push(ax);
            }
        }
        if v.is_empty() {
            return Err(CliError::Usage(String::from("no axioms selected")));
        }
        v.sort();
        Ok(Selection::Only(v))
    }

    fn axioms(&self) -> Vec<AxiomId> {
        match self {
            Selection::All => AxiomId::ALL.to_vec(),
            Selection::Only(v) => v.clone(),
        }
    }
}

/// What `derive` computes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum What {
    Counits,
    Antipode,
    All,
}

impl What {
    pub fn parse(s: &str) -> Result<Self, CliError> {
        match s {
            "counits" => Ok(What::Counits),
            "antipode" => Ok(What::Antipode),
            "all" => Ok(What::All),
            other => Err(CliError::Usage(format!("unknown --what {:?}; expected counits, antipode or all", other))),
        }
    }
}

/// A finished report and the exit code it implies.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub report: ReportDto,
    pub exit_code: i32,
}

fn info<F: Field>(dto: &InstanceDto, mb: &MultiplierBialgebroid<F>) -> InstanceInfo {
    InstanceInfo {
        kind: dto.kind.clone(),
        field: dto.field.clone(),
        descriptor: dto.descriptor.clone(),
        dim_a: mb.dim(),
        dim_b: mb.b().dim(),
        dim_c: mb.c().dim(),
    }
}

fn info_unloaded(dto: &InstanceDto) -> InstanceInfo {
    InstanceInfo {
        kind: dto.kind.clone(),
        field: dto.field.clone(),
        descriptor: dto.descriptor.clone(),
        dim_a: dto.algebra.labels.len(),
        dim_b: dto.base_b.labels.len(),
        dim_c: dto.base_c.labels.len(),
    }
}

fn regularity<F>(cert: &HopfCertificate<F>) -> RegularityDto {
    RegularityDto { bijective: cert.bijective, full: cert.full }
}

fn exit_code(entries: &[EntryDto]) -> i32 {
    i32::from(entries.iter().any(|e| e.status == "fail"))
}

fn needs_antipode(ax: AxiomId) -> bool {
    let c = ax.code();
    c.starts_with("CU.") || c.starts_with("AP.") || matches!(ax, AxiomId::GalInverse | AxiomId::Aux | AxiomId::Comult | AxiomId::CorCounit)
}

fn is_star(ax: AxiomId) -> bool {
    ax.code().starts_with("ST.")
}

fn secs(t: Instant) -> f64 {
    (t.elapsed().as_secs_f64() * 1000.0).round() / 1000.0
}

/// Loads an instance. A failed base identification is reported as an axiom
/// failure, every other problem as malformed input.
fn load_or_report<F: Field>(dto: &InstanceDto, command: &str) -> Result<Result<Loaded<F>, Outcome>, CliError> {
    match load::<F>(dto) {
        Ok(l) => Ok(Ok(l)),
        Err(CliError::Invalid(CoreError::AxiomFailed { axiom, witness })) => {
            let entries = vec![entry_dto(&Entry::new(axiom, Status::Fail(witness.clone())))];
            let report = ReportDto {
                schema: String::from(REPORT_SCHEMA),
                command: String::from(command),
                instance: info_unloaded(dto),
                entries,
                regular: None,
                derivation: None,
                error: Some(format!("{}", CoreError::AxiomFailed { axiom, witness })),
                timings: None,
            };
            Ok(Err(Outcome { report, exit_code: 1 }))
        }
        Err(e) => Err(e),
    }
}

fn check_typed<F: Field>(dto: &InstanceDto, sel: &Selection, timings: bool) -> Result<Outcome, CliError> {
    let start = Instant::now();
    let Loaded { mb, star } = match load_or_report::<F>(dto, "check")? {
        Ok(l) => l,
        Err(outcome) => return Ok(outcome),
    };
    let mut times = BTreeMap::new();
    times.insert(String::from("load"), secs(start));
    let axioms = sel.axioms();
    let t = Instant::now();
    let mut entries: Vec<Entry> = match sel {
        Selection::All => mb.check_all(),
        Selection::Only(_) => axioms
            .iter()
            .filter(|a| {
                let c = a.code();
                c.starts_with("LB.") || c.starts_with("RB.") || c.starts_with("MB.")
            })
            .map(|&a| Entry::new(a, mb.check_axiom(a)))
            .collect(),
    };
    times.insert(String::from("structural"), secs(t));
    let t = Instant::now();
    let wants_regular = axioms.iter().any(|&a| matches!(a, AxiomId::MhFull | AxiomId::MhBijective) || needs_antipode(a) || is_star(a));
    let cert = wants_regular.then(|| mb.check_regular());
    if let Some(cert) = &cert {
        entries.extend(cert.entries().into_iter().filter(|e| axioms.contains(&e.axiom)));
    }
    let mut ap: Option<Antipode<F>> = None;
    let mut ap_error: Option<String> = None;
    if axioms.iter().any(|&a| needs_antipode(a) || is_star(a)) {
        match mb.derive_antipode() {
            Ok(a) => ap = Some(a),
            Err(e) => ap_error = Some(format!("{}", e)),
        }
    }
    if axioms.iter().any(|&a| needs_antipode(a)) {
        match &ap {
            Some(ap) => entries.extend(mb.main_theorem_report(ap).into_iter().filter(|e| axioms.contains(&e.axiom))),
            None => {
                let reason = format!("no antipode: {}", ap_error.clone().unwrap_or_default());
                entries.extend(axioms.iter().filter(|&&a| needs_antipode(a)).map(|&a| Entry::new(a, Status::Skipped(reason.clone()))));
            }
        }
    }
    if axioms.iter().any(|&a| is_star(a)) {
        let star_entries = match (&star, F::TAG) {
            (Some(st), FieldTag::QI) => mb.check_star(st, ap.as_ref())?,
            (Some(_), FieldTag::Q) => Vec::new(),
            (None, _) => Vec::new(),
        };
        let reason = if star.is_none() { "the instance has no star structure" } else { "star structures need --field qi" };
        for &a in axioms.iter().filter(|&&a| is_star(a)) {
            match star_entries.iter().find(|e| e.axiom == a) {
                Some(e) => entries.push(e.clone()),
                None => entries.push(Entry::new(a, Status::Skipped(String::from(reason)))),
            }
        }
    }
    times.insert(String::from("hopf"), secs(t));
    sort_entries(&mut entries);
    let entries: Vec<EntryDto> = entries.iter().map(entry_dto).collect();
    let code = exit_code(&entries);
    let report = ReportDto {
        schema: String::from(REPORT_SCHEMA),
        command: String::from("check"),
        instance: info(dto, &mb),
        entries,
        regular: cert.as_ref().map(regularity),
        derivation: None,
        error: None,
        timings: timings.then_some(times),
    };
    Ok(Outcome { report, exit_code: code })
}

fn derive_typed<F: Field>(dto: &InstanceDto, what: What, timings: bool) -> Result<Outcome, CliError> {
    let start = Instant::now();
    let Loaded { mb, .. } = match load_or_report::<F>(dto, "derive")? {
        Ok(l) => l,
        Err(outcome) => return Ok(outcome),
    };
    let mut times = BTreeMap::new();
    times.insert(String::from("load"), secs(start));
    let t = Instant::now();
    let mut report = ReportDto {
        schema: String::from(REPORT_SCHEMA),
        command: String::from("derive"),
        instance: info(dto, &mb),
        entries: Vec::new(),
        regular: None,
        derivation: None,
        error: None,
        timings: None,
    };
    let mut entries: Vec<Entry> = Vec::new();
    let mut failed = false;
    match what {
        What::Counits => {
            let eb = mb.left.derive_counit();
            let ec = mb.right.derive_counit();
            let mut d = DerivationDto { counit_b: None, counit_c: None, antipode: None, antipode_inverse: None };
            let mut errors = Vec::new();
            match eb {
                Ok((eps, _)) => {
                    entries.extend(mb.left.check_counit(&eps));
                    d.counit_b = Some(MatrixDto::encode(&eps.map));
                }
                Err(e) => errors.push(format!("left counit: {}", e)),
            }
            match ec {
                Ok((eps, _)) => {
                    entries.extend(mb.right.check_counit(&eps));
                    d.counit_c = Some(MatrixDto::encode(&eps.map));
                }
                Err(e) => errors.push(format!("right counit: {}", e)),
            }
            if !errors.is_empty() {
                failed = true;
                report.error = Some(errors.join("; "));
            }
            report.derivation = Some(d);
        }
        What::Antipode | What::All => {
            let cert = mb.check_regular();
            report.regular = Some(regularity(&cert));
            match mb.derive_antipode() {
                Ok(ap) => {
                    entries.extend(mb.main_theorem_report(&ap));
                    let all = what == What::All;
                    report.derivation = Some(DerivationDto {
                        counit_b: all.then(|| MatrixDto::encode(&ap.eps_b.map)),
                        counit_c: all.then(|| MatrixDto::encode(&ap.eps_c.map)),
                        antipode: Some(MatrixDto::encode(&ap.s)),
                        antipode_inverse: Some(MatrixDto::encode(&ap.s_inv)),
                    });
                }
                Err(e) => {
                    failed = true;
                    report.error = Some(format!("{}", e));
                }
            }
        }
    }
    times.insert(String::from("derive"), secs(t));
    sort_entries(&mut entries);
    report.entries = entries.iter().map(entry_dto).collect();
    report.timings = timings.then_some(times);
    let code = if failed { 1 } else { exit_code(&report.entries) };
    Ok(Outcome { report, exit_code: code })
}

/// Runs the selected axioms on an instance.
pub fn check(dto: &InstanceDto, sel: &Selection, timings: bool) -> Result<Outcome, CliError> {
    match parse_field(&dto.field)? {
        FieldTag::Q => check_typed::<Rational>(dto, sel, timings),
        FieldTag::QI => check_typed::<GaussianRational>(dto, sel, timings),
    }
}

/// Derives counits and/or the antipode and verifies them.
pub fn derive(dto: &InstanceDto, what: What, timings: bool) -> Result<Outcome, CliError> {
    match parse_field(&dto.field)? {
        FieldTag::Q => derive_typed::<Rational>(dto, what, timings),
        FieldTag::QI => derive_typed::<GaussianRational>(dto, what, timings),
    }
}
