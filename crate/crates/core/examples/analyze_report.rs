//! The structured defect report for a module read from a JSON file.

use c4lab::conditions::{analyze, AnalyzeOptions};
use c4lab::harness::read_module_file;
use c4lab::Guards;
use std::path::PathBuf;

fn main() -> c4lab::Result<()> {
    let path = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data/dual_r_plus_s.json"));
    let g = Guards::default();
    let (_, m) = read_module_file(&path, &g)?;
    let report = analyze(&m, &path.display().to_string(), &g, &AnalyzeOptions::default())?;
    println!("{}", report.to_json());
    Ok(())
}
