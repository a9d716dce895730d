//! Report entries and their text rendering.

use std::fmt::Write as _;

use mhalg_core::catalog::{Entry, Status};

use crate::format::{EntryDto, MatrixDto, ReportDto, ScalarDto, WitnessDto};

pub fn entry_dto(e: &Entry) -> EntryDto {
    let (status, reason, witness) = match &e.status {
        Status::Pass => ("pass", None, None),
        Status::Fail(w) => ("fail", None, Some(WitnessDto { message: w.message.clone(), tuple: w.tuple.clone() })),
        Status::Skipped(r) => ("skipped", Some(r.clone()), None),
    };
    EntryDto { axiom: String::from(e.axiom.code()), anchor: String::from(e.axiom.anchor()), status: String::from(status), reason, witness }
}

fn scalar_text(s: &ScalarDto) -> String {
    let short = |t: &str| t.strip_suffix("/1").map_or_else(|| String::from(t), String::from);
    match s {
        ScalarDto::Real(r) => short(r),
        ScalarDto::Complex { re, im } => {
            let im = short(im);
            let sign = if im.starts_with('-') { "" } else { "+" };
            format!("{}{}{}i", short(re), sign, im)
        }
    }
}

fn matrix_text(out: &mut String, name: &str, m: &MatrixDto) {
    let mut grid = vec![vec![String::from("0"); m.cols]; m.rows];
    for (r, c, x) in &m.entries {
        grid[*r][*c] = scalar_text(x);
    }
    let width = grid.iter().flatten().map(|s| s.chars().count()).max().unwrap_or(1);
    let _ = writeln!(out, "{} ({}×{}):", name, m.rows, m.cols);
    for row in grid {
        let cells: Vec<String> = row.iter().map(|s| format!("{:>w$}", s, w = width)).collect();
        let _ = writeln!(out, "  [{}]", cells.join(" "));
    }
}

/// Human-readable rendering of a report.
pub fn render_text(r: &ReportDto) -> String {
    let mut out = String::new();
    let i = &r.instance;
    let _ = writeln!(out, "mhalg {}: {} over {}", r.command, i.kind, i.field);
    let _ = writeln!(out, "  {}", i.descriptor);
    let _ = writeln!(out, "  dim A = {}, dim B = {}, dim C = {}", i.dim_a, i.dim_b, i.dim_c);
    let width = r.entries.iter().map(|e| e.axiom.len()).max().unwrap_or(0);
    for e in &r.entries {
        let tag = match e.status.as_str() {
            "pass" => "PASS",
            "fail" => "FAIL",
            _ => "SKIP",
        };
        let mut line = format!("{}  {:<w$}  {}", tag, e.axiom, e.anchor, w = width);
        if let Some(w) = &e.witness {
            if w.tuple.is_empty() {
                let _ = write!(line, "  {}", w.message);
            } else {
                let _ = write!(line, "  {} at ({})", w.message, w.tuple.join(", "));
            }
        }
        if let Some(reason) = &e.reason {
            let _ = write!(line, "  {}", reason);
        }
        let _ = writeln!(out, "{}", line);
    }
    if let Some(reg) = &r.regular {
        let yn = |b: bool| if b { "yes" } else { "no" };
        let names = ["T_λ", "T_ρ", "λT", "ρT"];
        let parts: Vec<String> = names.iter().zip(reg.bijective).map(|(n, b)| format!("{} {}", n, yn(b))).collect();
        let _ = writeln!(out, "bijective: {}", parts.join(", "));
        let full: Vec<&str> = reg.full.iter().map(|b| yn(*b)).collect();
        let _ = writeln!(out, "full: {}", full.join(", "));
    }
    if let Some(d) = &r.derivation {
        for (name, m) in [("ε_B", &d.counit_b), ("ε_C", &d.counit_c), ("S", &d.antipode), ("S⁻¹", &d.antipode_inverse)] {
            if let Some(m) = m {
                matrix_text(&mut out, name, m);
            }
        }
    }
    if let Some(e) = &r.error {
        let _ = writeln!(out, "error: {}", e);
    }
    if let Some(t) = &r.timings {
        for (k, v) in t {
            let _ = writeln!(out, "time {}: {:.3}s", k, v);
        }
    }
    let count = |s: &str| r.entries.iter().filter(|e| e.status == s).count();
    let _ = writeln!(out, "result: {} passed, {} failed, {} skipped", count("pass"), count("fail"), count("skipped"));
    out
}
