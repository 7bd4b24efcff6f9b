//! Runs the acceptance suite on the built-in corpus; an optional argument filters checks by id.

use c4lab::harness::{cmd_suite, SuiteOptions};

fn main() {
    let filter = std::env::args().nth(1);
    let report = cmd_suite(&SuiteOptions { filter, ..SuiteOptions::default() });
    print!("{}", report.to_text());
    if !report.passed() {
        std::process::exit(1);
    }
}
