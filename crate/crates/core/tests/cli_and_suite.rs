use c4lab::harness::{cmd_suite, CorpusEntry, Expectation, FailureKind, ModuleSpec, Property, Source, SuiteOptions};
use std::path::PathBuf;
use std::process::Command;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

fn c4lab(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_c4lab")).args(args).env_remove("C4LAB_GUARDS").output().unwrap();
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

#[test]
fn analyze_regular_dual_numbers() {
    let f = data("dual_regular.json");
    let (code, out, _) = c4lab(&["analyze", f.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.contains("flags: C4=true C4star=true swCS=true strong=true"), "{out}");
    assert!(out.contains("obstruction_index: infinity"));
}

#[test]
fn analyze_writes_structured_report() {
    let f = data("dual_r_plus_s.json");
    let dir = std::env::temp_dir().join(format!("c4lab-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let out_path = dir.join("report.json");
    let (code, out, _) = c4lab(&["analyze", f.to_str().unwrap(), "--out", out_path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.contains("C4=false"));
    let json: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&out_path).unwrap()).unwrap();
    assert_eq!(json["report"]["flags"]["c4"], false);
    assert_eq!(json["report"]["def_c4"].as_array().unwrap().len(), 1);
}

#[test]
fn analyze_ring_mode_scans_ideals() {
    let f = data("t2_regular.json");
    let (code, out, _) = c4lab(&["analyze", f.to_str().unwrap(), "--ring", "--extensions", "2,1"]);
    assert_eq!(code, 0);
    assert!(out.contains("right-ideal scan: 7 right ideals, 1 not C4"), "{out}");
}

#[test]
fn guard_file_marks_sections_partial() {
    let f = data("dual_r_plus_s.json");
    let g = data("guards_small.json");
    let (code, out, _) = c4lab(&["--guards", g.to_str().unwrap(), "analyze", f.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.contains("C4star=partial"), "{out}");
    let env = Command::new(env!("CARGO_BIN_EXE_c4lab"))
        .args(["analyze", f.to_str().unwrap()])
        .env("C4LAB_GUARDS", &g)
        .output()
        .unwrap();
    assert!(String::from_utf8_lossy(&env.stdout).contains("C4star=partial"));
}

#[test]
fn morita_commands() {
    let (code, out, _) = c4lab(&["morita", data("dual_r_plus_s.json").to_str().unwrap(), "--matrix", "2", "--conditions", "C4"]);
    assert_eq!(code, 0);
    assert!(out.contains("M=false") && out.contains("F(M)=false") && out.contains("agree"), "{out}");

    let (code, out, _) = c4lab(&["morita", data("m2f2_regular.json").to_str().unwrap(), "--corner", "1,0,0,0", "--conditions", "strong"]);
    assert_eq!(code, 0);
    assert!(out.contains("agree"));

    let (code, _, err) = c4lab(&["morita", data("f2xf2_regular.json").to_str().unwrap(), "--corner", "1,0"]);
    assert_eq!(code, 2);
    assert!(err.contains("not full") && err.contains("dimension 1"), "{err}");
}

#[test]
fn explicit_module_file_and_bad_input() {
    let (code, out, _) = c4lab(&["analyze", data("f3_plane.json").to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.contains("dim 2"));
    let (code, _, err) = c4lab(&["analyze", "/nonexistent/module.json"]);
    assert_eq!(code, 2);
    assert!(err.contains("nonexistent"));
    let (code, _, err) = c4lab(&["--rule", "no-such-rule", "analyze", data("f3_plane.json").to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("no-such-rule"));
}

#[test]
fn suite_filter_runs_only_matching_checks() {
    let (code, out, _) = c4lab(&["suite", "--filter", "essential", "--seed", "7"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("PASS essential"));
    assert!(!out.contains("transport-lemmas"));
    assert!(out.contains("seed 7"));
}

#[test]
fn suite_json_is_deterministic() {
    let opts = || SuiteOptions { filter: Some("ring-level".into()), ..SuiteOptions::default() };
    assert_eq!(cmd_suite(&opts()).to_json(), cmd_suite(&opts()).to_json());
}

#[test]
fn corrupted_expectation_is_a_fixture_failure() {
    let bad = CorpusEntry {
        name: "F2 :: corrupted".into(),
        ring: "F2",
        module: ModuleSpec::Regular,
        expected: vec![Expectation { property: Property::C4, value: false, source: Source::Trivial("deliberately wrong") }],
    };
    let report = cmd_suite(&SuiteOptions { filter: Some("expectations".into()), extra_entries: vec![bad], ..SuiteOptions::default() });
    assert!(!report.passed());
    let check = report.check("expectations").unwrap();
    assert_eq!(check.failures.len(), 1);
    assert_eq!(check.failures[0].kind, FailureKind::FixtureFailure);
    assert_eq!(check.failures[0].case, "F2 :: corrupted");
}
