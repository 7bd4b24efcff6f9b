//! File ingestion, the built-in corpus, and the `analyze`, `morita` and `suite` commands.

mod corpus;
mod input;
mod suite;

pub use corpus::{
    corpus_builtin, corpus_rings, square_zero_plane, CorpusEntry, CorpusRing, Expectation, Property, Source,
};
pub use input::{
    build_module, module_spec_from_json, parse_module, parse_ring, read_module_file, ring_spec_from_json, ModuleSpec,
};
pub use suite::{
    check_ids, cmd_suite, CheckResult, Failure, FailureKind, SuiteOptions, SuiteReport, BUDGETS_MS, MIN_ESSENTIAL_PAIRS,
};

use crate::algebra::Ring;
use crate::conditions::{analyze, AnalyzeOptions, DefectReport, ModuleContext, WitnessRule};
use crate::error::{Error, Result};
use crate::guards::Guards;
use crate::linalg::{Subspace, Vector};
use crate::module::{regular_module, RightModule};
use crate::morita::{morita_pair_check, Condition, MoritaComparison, Realization};
use serde::Serialize;
use std::collections::BTreeSet;

/// Right ideals of R found by closing the cyclic ideals aR under sums, each tested for C4
/// in its own coordinates.
#[derive(Debug, Clone, Serialize)]
pub struct RingScan {
    pub ideals: usize,
    /// Bases of the right ideals that are not C4.
    pub failing: Vec<Vec<Vector>>,
    pub all_c4: bool,
}

pub fn right_ideal_scan(r: &Ring, rule: &dyn WitnessRule, guards: &Guards) -> Result<RingScan> {
    let reg = regular_module(r);
    let mut cyclic: BTreeSet<Subspace> = BTreeSet::new();
    r.for_each_element(guards, |a| {
        cyclic.insert(reg.cyclic(a));
        true
    })?;
    let mut ideals: BTreeSet<Subspace> = cyclic.clone();
    let mut frontier: Vec<Subspace> = ideals.iter().cloned().collect();
    while let Some(i) = frontier.pop() {
        for c in &cyclic {
            let s = i.sum(c);
            if !ideals.contains(&s) {
                guards.lattice(ideals.len() as u128 + 1)?;
                ideals.insert(s.clone());
                frontier.push(s);
            }
        }
    }
    let mut failing = Vec::new();
    for i in &ideals {
        let m = reg.submodule_module(i);
        if !crate::conditions::is_c4(&ModuleContext::new(&m, guards), rule)? {
            failing.push(i.basis().to_vec());
        }
    }
    Ok(RingScan { ideals: ideals.len(), all_c4: failing.is_empty(), failing })
}

pub struct AnalyzeCommand {
    pub options: AnalyzeOptions,
    /// Analyze R_R and add the right-ideal scan.
    pub ring_mode: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct AnalyzeOutput {
    pub report: DefectReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ring_scan: Option<RingScan>,
}

impl AnalyzeOutput {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("analysis serializes")
    }

    pub fn to_text(&self) -> String {
        let mut s = self.report.to_text();
        if let Some(scan) = &self.ring_scan {
            s.push_str(&format!(
                "right-ideal scan: {} right ideals, {} not C4, every right ideal C4: {}\n",
                scan.ideals,
                scan.failing.len(),
                scan.all_c4
            ));
        }
        s
    }
}

pub fn cmd_analyze(
    ring: &Ring,
    module: &RightModule,
    name: &str,
    guards: &Guards,
    cmd: &AnalyzeCommand,
) -> Result<AnalyzeOutput> {
    if cmd.ring_mode {
        let reg = regular_module(ring);
        let report = analyze(&reg, &format!("{name} (regular)"), guards, &cmd.options)?;
        let ring_scan = match right_ideal_scan(ring, cmd.options.rule.as_ref(), guards) {
            Ok(s) => Some(s),
            Err(e) if e.is_guard() => None,
            Err(e) => return Err(e),
        };
        Ok(AnalyzeOutput { report, ring_scan })
    } else {
        Ok(AnalyzeOutput { report: analyze(module, name, guards, &cmd.options)?, ring_scan: None })
    }
}

/// `N` for P = Rⁿ. For a corner, either comma-separated coordinates or an index into
/// `idempotents(R)`.
pub fn parse_realization(ring: &Ring, matrix: Option<usize>, corner: Option<&str>, guards: &Guards) -> Result<Realization> {
    match (matrix, corner) {
        (Some(n), None) => Ok(Realization::Matrix(n)),
        (None, Some(c)) if c.contains(',') => {
            let e = c
                .split(',')
                .map(|x| x.trim().parse::<u64>().map(|v| (v % ring.p() as u64) as u32))
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|_| Error::Parse(format!("bad idempotent coordinates `{c}`")))?;
            Ok(Realization::Corner(e))
        }
        (None, Some(c)) => {
            let idx: usize = c.trim().parse().map_err(|_| Error::Parse(format!("bad idempotent index `{c}`")))?;
            let all = ring.idempotents(guards)?;
            all.get(idx)
                .cloned()
                .map(Realization::Corner)
                .ok_or_else(|| Error::Parse(format!("idempotent index {idx} out of range ({} idempotents)", all.len())))
        }
        _ => Err(Error::Parse("give exactly one of a matrix size or a corner idempotent".into())),
    }
}

pub fn cmd_morita(
    ring: &Ring,
    module: &RightModule,
    name: &str,
    realization: &Realization,
    conditions: &[Condition],
    rule: &dyn WitnessRule,
    guards: &Guards,
) -> Result<MoritaComparison> {
    morita_pair_check(ring, realization, module, name, conditions, rule, guards)
}

/// Guards from an explicit path, else from `C4LAB_GUARDS`, else the defaults.
pub fn load_guards(path: Option<&std::path::Path>) -> Result<Guards> {
    if let Some(p) = path {
        return Guards::from_file(p);
    }
    match std::env::var_os("C4LAB_GUARDS") {
        Some(p) if !p.is_empty() => Guards::from_file(std::path::Path::new(&p)),
        _ => Ok(Guards::default()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{build_algebra, product_algebra, AlgebraSpec};
    use crate::conditions::MonoImageSplits;

    fn dual() -> Ring {
        build_algebra(&AlgebraSpec::PolyQuotient { p: 2, coeffs: vec![0, 0, 1] }).unwrap()
    }

    #[test]
    fn ideal_scan_of_small_rings() {
        let g = Guards::default();
        let s = right_ideal_scan(&dual(), &MonoImageSplits, &g).unwrap();
        assert_eq!(s.ideals, 3);
        assert!(s.all_c4);
        let t = build_algebra(&AlgebraSpec::UpperTriangular { p: 2, n: 2 }).unwrap();
        let s = right_ideal_scan(&t, &MonoImageSplits, &g).unwrap();
        assert!(!s.all_c4);
    }

    #[test]
    fn analyze_ring_mode() {
        let g = Guards::default();
        let r = dual();
        let m = regular_module(&r);
        let cmd = AnalyzeCommand { options: AnalyzeOptions::default(), ring_mode: true };
        let out = cmd_analyze(&r, &m, "D", &g, &cmd).unwrap();
        assert_eq!(out.report.flags.c4star, Some(true));
        assert_eq!(out.ring_scan.as_ref().unwrap().all_c4, true);
        assert!(out.to_text().contains("right-ideal scan"));
    }

    #[test]
    fn realization_parsing_and_non_full_corner() {
        let g = Guards::default();
        let f2 = build_algebra(&AlgebraSpec::Field { p: 2 }).unwrap();
        let prod = product_algebra(&f2, &f2).unwrap();
        assert_eq!(parse_realization(&prod, Some(2), None, &g).unwrap(), Realization::Matrix(2));
        let r = parse_realization(&prod, None, Some("1,0"), &g).unwrap();
        let m = regular_module(&prod);
        let err = cmd_morita(&prod, &m, "F2xF2", &r, &[Condition::C4], &MonoImageSplits, &g).unwrap_err();
        assert_eq!(err, Error::NotFull { span_dim: 1, dim: 2 });
        assert!(err.to_string().contains("dimension 1"));
        assert!(parse_realization(&prod, None, Some("99"), &g).is_err());
        assert!(parse_realization(&prod, Some(2), Some("1,0"), &g).is_err());
    }
}
