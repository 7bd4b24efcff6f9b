//! One PASS/FAIL line per acceptance criterion. Agreement is exact; the budgets are the
//! wall-clock limits in `BUDGETS_MS`.

use c4lab::harness::{cmd_suite, SuiteOptions, BUDGETS_MS, MIN_ESSENTIAL_PAIRS};
use std::process::ExitCode;

const CRITERIA: &[(u32, &str, &str)] = &[
    (1, "essential", "essentiality oracles agree on every (N <= M) pair"),
    (2, "transport-lemmas", "summands, semisimplicity and essentiality transport"),
    (3, "c4-morita", "C4 is Morita invariant, negative instance fails on both sides"),
    (4, "defect-classes", "defect classes correspond across realizations"),
    (5, "c4star-swcs-strong", "C4*, semi-weak-CS and strong flags agree"),
    (6, "obstruction-index", "obstruction index agrees across realizations"),
    (7, "strong-decomposition", "strong decompositions re-verify"),
    (8, "example-schemes", "summand-square-free and weak CS imply semi-weak-CS"),
    (9, "extensions", "extension coherence and transfer"),
    (10, "ring-level", "right-ideal scan matches the regular module"),
    (11, "expectations", "hand-derived corpus expectations"),
];

fn main() -> ExitCode {
    let report = cmd_suite(&SuiteOptions::default());
    let mut ok = report.passed();
    for &(n, id, what) in CRITERIA {
        let Some(c) = report.check(id) else {
            println!("FAIL [{n:>2}] {id}: check did not run");
            ok = false;
            continue;
        };
        let mut pass = c.passed();
        let mut extra = String::new();
        if id == "essential" && c.cases < MIN_ESSENTIAL_PAIRS {
            pass = false;
            extra = format!(" (only {} pairs, need {MIN_ESSENTIAL_PAIRS})", c.cases);
        }
        ok &= pass;
        let budget = BUDGETS_MS.iter().find(|b| b.0 == id).map_or(0, |b| b.1);
        println!(
            "{} [{n:>2}] {id}: {what}; {} cases, {} partial, {} ms of {budget} ms{extra}",
            if pass { "PASS" } else { "FAIL" },
            c.cases,
            c.partial.len(),
            c.elapsed_ms
        );
        for f in &c.failures {
            println!("       {:?} [{}] {}", f.kind, f.case, f.detail);
        }
        for p in &c.partial {
            println!("       partial: {p}");
        }
    }
    if let Some(setup) = report.check("setup") {
        println!("{} [ 0] setup: corpus construction", if setup.passed() { "PASS" } else { "FAIL" });
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
