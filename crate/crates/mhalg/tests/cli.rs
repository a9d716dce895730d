use std::path::PathBuf;
use std::process::{Command, Output};
use std::sync::atomic::{AtomicUsize, Ordering};

use mhalg::format::{from_json, to_json, InstanceDto, ReportDto};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name)
}

static NEXT: AtomicUsize = AtomicUsize::new(0);

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("mhalg-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(format!("{}-{}", NEXT.fetch_add(1, Ordering::Relaxed), name))
}

fn mhalg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mhalg")).args(args).output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn build(kind: &str, input: &str, extra: &[&str]) -> PathBuf {
    let out = scratch(&format!("{}-{}.json", kind, input.trim_end_matches(".json")));
    let input = data(input);
    let mut args = vec!["build", kind, input.to_str().unwrap(), "--out", out.to_str().unwrap()];
    args.extend_from_slice(extra);
    let o = mhalg(&args);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    out
}

fn report(o: &Output) -> ReportDto {
    from_json(&stdout(o)).unwrap()
}

#[test]
fn groupoid_instances_build_check_and_derive() {
    for file in ["one_point.json", "z2.json", "z3.json", "pair2.json", "pair3.json"] {
        for kind in ["groupoid-fn", "groupoid-conv"] {
            let inst = build(kind, file, &[]);
            let p = inst.to_str().unwrap();
            let o = mhalg(&["check", p, "--format", "json"]);
            assert_eq!(code(&o), 0, "{} {}", kind, file);
            let r = report(&o);
            for e in &r.entries {
                let ok = e.status == "pass" || (e.status == "skipped" && e.axiom.starts_with("ST."));
                assert!(ok, "{} {}: {} {}", kind, file, e.axiom, e.status);
            }
            assert_eq!(r.regular.unwrap().bijective, [true; 4]);
            let o = mhalg(&["derive", p, "--format", "json"]);
            assert_eq!(code(&o), 0);
            let d = report(&o).derivation.unwrap();
            assert!(d.counit_b.is_some() && d.counit_c.is_some() && d.antipode.is_some() && d.antipode_inverse.is_some());
        }
    }
}

#[test]
fn tensor_and_crossed_inputs_build() {
    for (kind, file, dim) in [("tensor", "tensor_z2.json", 4), ("tensor", "tensor_qq.json", 4), ("crossed", "crossed_swap.json", 8)] {
        let inst = build(kind, file, &[]);
        let o = mhalg(&["check", inst.to_str().unwrap(), "--format", "json"]);
        assert_eq!(code(&o), 0, "{}", file);
        assert_eq!(report(&o).instance.dim_a, dim);
    }
}

#[test]
fn derive_counits_only() {
    let inst = build("groupoid-conv", "pair2.json", &[]);
    let o = mhalg(&["derive", inst.to_str().unwrap(), "--what", "counits", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let d = report(&o).derivation.unwrap();
    assert!(d.counit_b.is_some() && d.antipode.is_none());
}

#[test]
fn monoid_needs_the_flag_and_is_not_bijective() {
    let o = mhalg(&["build", "groupoid-fn", data("monoid.json").to_str().unwrap()]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("NotAGroupoid"));
    let inst = build("groupoid-fn", "monoid.json", &["--allow-non-groupoid"]);
    let o = mhalg(&["derive", inst.to_str().unwrap(), "--format", "json"]);
    assert_eq!(code(&o), 1);
    let r = report(&o);
    assert!(r.error.as_deref().unwrap_or("").contains("NotBijective"), "{:?}", r.error);
    assert!(String::from_utf8_lossy(&o.stderr).contains("NotBijective"));
    assert!(r.regular.unwrap().bijective.iter().any(|b| !b));
}

#[test]
fn corrupted_instance_fails_its_axioms() {
    let inst = build("groupoid-conv", "z2.json", &[]);
    let mut dto: InstanceDto = from_json(&std::fs::read_to_string(&inst).unwrap()).unwrap();
    let (row, col) = (dto.tl.entries[0].0, dto.tl.entries[0].1);
    let moved = (row + 1) % dto.tl.rows;
    dto.tl.entries.retain(|e| (e.0, e.1) != (moved, col));
    dto.tl.entries[0].0 = moved;
    let bad = scratch("corrupted.json");
    std::fs::write(&bad, to_json(&dto)).unwrap();
    let o = mhalg(&["check", bad.to_str().unwrap(), "--format", "json"]);
    assert_eq!(code(&o), 1);
    assert!(report(&o).entries.iter().any(|e| e.status == "fail" && e.witness.is_some()));
}

#[test]
fn malformed_input_exits_two() {
    let bad = scratch("garbage.json");
    std::fs::write(&bad, "{ \"objects\": [").unwrap();
    assert_eq!(code(&mhalg(&["build", "groupoid-fn", bad.to_str().unwrap()])), 2);
    assert_eq!(code(&mhalg(&["check", bad.to_str().unwrap()])), 2);
    assert_eq!(code(&mhalg(&["check", data("missing.json").to_str().unwrap()])), 2);
}

#[test]
fn axiom_selection() {
    let inst = build("groupoid-fn", "pair2.json", &[]);
    let p = inst.to_str().unwrap();
    assert_eq!(code(&mhalg(&["check", p, "--axioms", "LB.NOPE"])), 2);
    let o = mhalg(&["check", p, "--axioms", "LB.PENTAGON", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let r = report(&o);
    assert_eq!(r.entries.len(), 1);
    assert_eq!(r.entries[0].axiom, "LB.PENTAGON");
    assert_eq!(r.entries[0].status, "pass");
    let o = mhalg(&["check", p, "--axioms", "AP.DIAGRAM,GAL.INVERSE", "--format", "json"]);
    let codes: Vec<String> = report(&o).entries.into_iter().map(|e| e.axiom).collect();
    assert!(codes.contains(&String::from("AP.DIAGRAM")) && codes.contains(&String::from("GAL.INVERSE")));
}

#[test]
fn star_checks_over_gaussian_rationals() {
    for kind in ["groupoid-fn", "groupoid-conv"] {
        let inst = build(kind, "pair3.json", &["--field", "qi"]);
        let o = mhalg(&["check", inst.to_str().unwrap(), "--axioms", "ST.INVOLUTION,ST.CANONICAL,ST.COUNIT,ST.ANTIPODE", "--format", "json"]);
        assert_eq!(code(&o), 0);
        let r = report(&o);
        assert_eq!(r.instance.field, "qi");
        assert_eq!(r.entries.len(), 4);
        assert!(r.entries.iter().all(|e| e.status == "pass"), "{:?}", r.entries);
    }
    let inst = build("groupoid-fn", "pair2.json", &[]);
    let o = mhalg(&["check", inst.to_str().unwrap(), "--axioms", "ST.INVOLUTION", "--format", "json"]);
    assert_eq!(report(&o).entries[0].status, "skipped");
}

#[test]
fn json_reports_are_reproducible() {
    let inst = build("groupoid-conv", "z3.json", &[]);
    let p = inst.to_str().unwrap();
    let a = mhalg(&["check", p, "--format", "json"]);
    let b = mhalg(&["check", p, "--format", "json"]);
    assert_eq!(a.stdout, b.stdout);
    assert!(report(&a).timings.is_none());
    let t = mhalg(&["check", p, "--format", "json", "--timings"]);
    assert!(report(&t).timings.is_some());
}

#[test]
fn text_reports_list_every_entry() {
    let inst = build("groupoid-fn", "z2.json", &[]);
    let o = mhalg(&["check", inst.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    for code in ["LB.A1", "RB.PENTAGON", "MH.BIJECTIVE", "AP.DIAGRAM"] {
        assert!(text.contains(code), "{}", code);
    }
}

#[test]
fn instance_files_round_trip() {
    for (kind, file) in [("groupoid-conv", "pair2.json"), ("crossed", "crossed_swap.json")] {
        let inst = build(kind, file, &[]);
        let text = std::fs::read_to_string(&inst).unwrap();
        let dto: InstanceDto = from_json(&text).unwrap();
        assert_eq!(to_json(&dto), text);
    }
    let inst = build("groupoid-fn", "pair2.json", &["--field", "qi"]);
    let text = std::fs::read_to_string(&inst).unwrap();
    let dto: InstanceDto = from_json(&text).unwrap();
    assert!(dto.star.is_some());
    assert_eq!(to_json(&dto), text);
}
