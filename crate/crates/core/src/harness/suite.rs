//! The acceptance suite: corpus expectations, oracle agreements and transport theorems.

use super::corpus::{corpus_builtin, corpus_rings, square_zero_plane, CorpusEntry, Property};
use super::right_ideal_scan;
use crate::algebra::{corner_algebra, Ring};
use crate::conditions::{
    check_extended, decompose_strong, def_c4star, is_c4, is_c4_m, is_c4star, is_semiweak_cs, is_strongly_c4star,
    obstruction_index, ModuleContext, ObstructionIndex, Reading, Strictness, WitnessRule,
};
use crate::error::{Error, Result};
use crate::guards::Guards;
use crate::module::{
    all_submodules, classical_predicates, hom_vanishes, is_essential, is_essential_by_definition, is_orthogonal,
    is_semisimple, is_summand, is_summand_square_free, regular_module, RightModule,
};
use crate::morita::{
    apply_functor, compare_conditions, defect_bijection_check, restrict_scalars, transport_lemma_check, Condition,
    MoritaComparison, Outcome, Progenerator,
};
use rayon::prelude::*;
use serde::Serialize;
use std::fmt::Write as _;
use std::sync::Arc;
use std::time::Instant;

/// Minimum number of (N ≤ M) pairs the essentiality check must cover.
pub const MIN_ESSENTIAL_PAIRS: usize = 200;

/// Agreement is exact everywhere; the only tolerances are wall-clock budgets.
pub const BUDGETS_MS: &[(&str, u64)] = &[
    ("essential", 10_000),
    ("transport-lemmas", 120_000),
    ("c4-morita", 300_000),
    ("defect-classes", 600_000),
    ("c4star-swcs-strong", 600_000),
    ("obstruction-index", 120_000),
    ("strong-decomposition", 120_000),
    ("example-schemes", 60_000),
    ("extensions", 600_000),
    ("ring-level", 60_000),
    ("expectations", 60_000),
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FailureKind {
    TheoremViolation,
    FixtureFailure,
    Error,
    OverBudget,
}

#[derive(Debug, Clone, Serialize)]
pub struct Failure {
    pub kind: FailureKind,
    pub case: String,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub id: &'static str,
    pub title: &'static str,
    pub cases: usize,
    pub failures: Vec<Failure>,
    /// Cases excluded because a guard stopped them.
    pub partial: Vec<String>,
    pub notes: Vec<String>,
    #[serde(skip)]
    pub elapsed_ms: u64,
    pub budget_ms: Option<u64>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub seed: u64,
    pub rule: String,
    pub guards: Guards,
    pub entries: usize,
    pub checks: Vec<CheckResult>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }

    pub fn check(&self, id: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.id == id)
    }

    /// Timings are left out so that equal inputs give byte-identical output.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("suite report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "suite: {} corpus entries, rule {}, seed {}", self.entries, self.rule, self.seed);
        for c in &self.checks {
            let status = if c.passed() { "PASS" } else { "FAIL" };
            let _ = writeln!(
                s,
                "{status} {:<22} {:>5} cases {:>4} partial {:>8} ms  {}",
                c.id,
                c.cases,
                c.partial.len(),
                c.elapsed_ms,
                c.title
            );
            for f in &c.failures {
                let _ = writeln!(s, "     {:?} [{}] {}", f.kind, f.case, f.detail);
            }
            for n in &c.notes {
                let _ = writeln!(s, "     note: {n}");
            }
            for p in c.partial.iter().take(3) {
                let _ = writeln!(s, "     partial: {p}");
            }
        }
        let _ = writeln!(s, "{}", if self.passed() { "suite PASSED" } else { "suite FAILED" });
        s
    }
}

pub struct SuiteOptions {
    pub guards: Guards,
    /// Substring matched against check ids.
    pub filter: Option<String>,
    pub rule: Arc<dyn WitnessRule>,
    /// Appended to the built-in corpus; used to exercise fixture failures.
    pub extra_entries: Vec<CorpusEntry>,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            guards: Guards::default(),
            filter: None,
            rule: Arc::new(crate::conditions::MonoImageSplits),
            extra_entries: Vec::new(),
        }
    }
}

struct RingData {
    name: &'static str,
    ring: Ring,
    square: Progenerator,
    /// e₁₁ corner of M₂(R), the model ring of `square`.
    corner: Progenerator,
}

struct Case {
    entry: CorpusEntry,
    ring: usize,
    module: RightModule,
}

#[derive(Clone, Copy)]
enum Side {
    Matrix,
    Corner,
}

impl Side {
    fn label(self) -> &'static str {
        match self {
            Side::Matrix => "P=R^2",
            Side::Corner => "P=e11*M2(R)",
        }
    }
}

#[derive(Default)]
struct Tally {
    cases: usize,
    failures: Vec<Failure>,
    partial: Vec<String>,
    notes: Vec<String>,
}

impl Tally {
    fn merge(&mut self, other: Tally) {
        self.cases += other.cases;
        self.failures.extend(other.failures);
        self.partial.extend(other.partial);
        self.notes.extend(other.notes);
    }

    fn violation(&mut self, case: &str, detail: impl Into<String>) {
        self.failures.push(Failure { kind: FailureKind::TheoremViolation, case: case.into(), detail: detail.into() });
    }

    fn fixture(&mut self, case: &str, detail: impl Into<String>) {
        self.failures.push(Failure { kind: FailureKind::FixtureFailure, case: case.into(), detail: detail.into() });
    }

    /// Routes an error: guard exhaustion is partial, a theorem violation is a failure.
    fn error(&mut self, case: &str, e: Error) {
        match e {
            Error::GuardExceeded { .. } | Error::Inconclusive(_) => self.partial.push(format!("{case}: {e}")),
            Error::TheoremViolation(d) => self.violation(case, d),
            other => self.failures.push(Failure { kind: FailureKind::Error, case: case.into(), detail: other.to_string() }),
        }
    }

    fn run(&mut self, case: &str, f: impl FnOnce(&mut Tally) -> Result<()>) {
        if let Err(e) = f(self) {
            self.error(case, e);
        }
    }
}

fn e11(ring: &Ring) -> Vec<u32> {
    // E11 ⊗ 1 in M₂(R), basis index (2i + j)·dim R + k.
    let mut e = vec![0u32; 4 * ring.dim()];
    e[..ring.dim()].copy_from_slice(ring.one());
    e
}

struct Suite {
    guards: Guards,
    rule: Arc<dyn WitnessRule>,
    rings: Vec<RingData>,
    cases: Vec<Case>,
    setup: Tally,
}

impl Suite {
    fn new(opts: &SuiteOptions) -> Suite {
        let guards = opts.guards.clone();
        let mut setup = Tally::default();
        let mut rings = Vec::new();
        let mut names = Vec::new();
        for r in corpus_rings() {
            let built = r.build().and_then(|ring| {
                let square = Progenerator::free_power(&ring, 2, &guards)?;
                let corner = Progenerator::corner(&square.model, &e11(&ring), &guards)?;
                Ok(RingData { name: r.name, ring, square, corner })
            });
            match built {
                Ok(d) => {
                    names.push(r.name);
                    rings.push(d);
                }
                Err(e) => setup.error(r.name, e),
            }
        }
        let mut cases = Vec::new();
        for entry in corpus_builtin().into_iter().chain(opts.extra_entries.iter().cloned()) {
            let Some(idx) = names.iter().position(|n| *n == entry.ring) else {
                setup.fixture(&entry.name, format!("unknown corpus ring `{}`", entry.ring));
                continue;
            };
            match entry.build(&rings[idx].ring, &guards) {
                Ok(module) => cases.push(Case { entry, ring: idx, module }),
                Err(e) => setup.fixture(&entry.name, format!("module does not build: {e}")),
            }
        }
        Suite { guards, rule: opts.rule.clone(), rings, cases, setup }
    }

    fn rule(&self) -> &dyn WitnessRule {
        self.rule.as_ref()
    }

    /// The progenerator and source module for one realization of a case.
    fn realize(&self, c: &Case, side: Side) -> Result<(&Progenerator, RightModule)> {
        let rd = &self.rings[c.ring];
        match side {
            Side::Matrix => Ok((&rd.square, c.module.clone())),
            Side::Corner => {
                let t = apply_functor(&rd.square, &c.module)?;
                let lifted = restrict_scalars(&t.image, &rd.square.model, &rd.square.theta)?;
                Ok((&rd.corner, lifted))
            }
        }
    }

    fn per_case(&self, f: impl Fn(&Case, &mut Tally) + Sync) -> Tally {
        let tallies: Vec<Tally> = self
            .cases
            .par_iter()
            .map(|c| {
                let mut t = Tally::default();
                f(c, &mut t);
                t
            })
            .collect();
        let mut out = Tally::default();
        for t in tallies {
            out.merge(t);
        }
        out
    }

    fn per_side(&self, f: impl Fn(&Case, Side, &str, &mut Tally) + Sync) -> Tally {
        self.per_case(|c, t| {
            for side in [Side::Matrix, Side::Corner] {
                let case = format!("{} [{}]", c.entry.name, side.label());
                f(c, side, &case, t);
            }
        })
    }

    fn comparison_rows(&self, t: &mut Tally, case: &str, cmp: &MoritaComparison) {
        for row in &cmp.rows {
            match row.agree {
                Some(true) => t.cases += 1,
                Some(false) => t.violation(
                    case,
                    format!("{}: M={:?} F(M)={:?}", row.condition, row.source, row.target),
                ),
                None => t.partial.push(format!("{case}: {} partial", row.condition)),
            }
        }
    }

    fn essential(&self) -> Tally {
        let mut t = self.per_case(|c, t| {
            t.run(&c.entry.name, |t| {
                let lattice = all_submodules(&c.module, &self.guards)?;
                for n in lattice.members() {
                    let by_socle = is_essential(&c.module, n, &self.guards)?;
                    let by_def = is_essential_by_definition(&c.module, n, &self.guards)?;
                    t.cases += 1;
                    if by_socle != by_def {
                        t.violation(&c.entry.name, format!("essentiality oracles disagree on N of dim {}", n.dim()));
                    }
                }
                Ok(())
            })
        });
        if t.cases < MIN_ESSENTIAL_PAIRS {
            t.fixture("corpus", format!("only {} (N ≤ M) pairs, need {MIN_ESSENTIAL_PAIRS}", t.cases));
        }
        t.notes.push(format!("{} (N ≤ M) pairs checked", t.cases));
        t
    }

    fn transport_lemmas(&self) -> Tally {
        self.per_side(|c, side, case, t| {
            t.run(case, |t| {
                let (prog, m) = self.realize(c, side)?;
                if !prog.certificates_hold() {
                    t.violation(case, "progenerator certificates fail");
                }
                let r = transport_lemma_check(prog, &m, &self.guards)?;
                t.cases += r.pairs;
                if !r.all_agree() {
                    t.violation(case, format!("{r:?}"));
                }
                Ok(())
            })
        })
    }

    fn compare(&self, conditions: &[Condition], sides: &[Side]) -> Tally {
        self.per_case(|c, t| {
            for &side in sides {
                let case = format!("{} [{}]", c.entry.name, side.label());
                t.run(&case, |t| {
                    let (prog, m) = self.realize(c, side)?;
                    let cmp = compare_conditions(prog, &m, &c.entry.name, conditions, self.rule(), &self.guards)?;
                    self.comparison_rows(t, &case, &cmp);
                    Ok(())
                });
            }
        })
    }

    fn c4_morita(&self) -> Tally {
        let mut t = self.compare(&[Condition::C4], &[Side::Matrix, Side::Corner]);
        let target = "F2[x]/(x^2) :: R+R/(x)";
        match self.cases.iter().find(|c| c.entry.name == target) {
            None => t.fixture(target, "negative instance missing from the corpus"),
            Some(c) => {
                for side in [Side::Matrix, Side::Corner] {
                    let case = format!("{target} [{}]", side.label());
                    t.run(&case, |t| {
                        let (prog, m) = self.realize(c, side)?;
                        let cmp = compare_conditions(prog, &m, target, &[Condition::C4], self.rule(), &self.guards)?;
                        let no = Outcome::Value("false".into());
                        if cmp.rows[0].source != no || cmp.rows[0].target != no {
                            t.violation(&case, "negative instance is not non-C4 on both sides");
                        } else {
                            t.notes.push(format!("{case}: non-C4 on both sides"));
                        }
                        Ok(())
                    });
                }
            }
        }
        t
    }

    fn defect_classes(&self) -> Tally {
        self.per_side(|c, side, case, t| {
            t.run(case, |t| {
                let (prog, m) = self.realize(c, side)?;
                let b = defect_bijection_check(prog, &m, self.rule(), &self.guards)?;
                t.cases += 1;
                if !b.all_agree() {
                    t.violation(case, format!("{b:?}"));
                }
                Ok(())
            })
        })
    }

    fn obstruction_index(&self) -> Tally {
        let mut t = self.compare(&[Condition::Index], &[Side::Matrix, Side::Corner]);
        let per_ring: Vec<Tally> = self
            .rings
            .par_iter()
            .map(|rd| {
                let mut t = Tally::default();
                let mut values: Vec<(String, ObstructionIndex)> = Vec::new();
                let mut probe = |label: String, ring: &Ring, t: &mut Tally| {
                    let m = regular_module(ring);
                    match obstruction_index(&ModuleContext::new(&m, &self.guards)) {
                        Ok(i) => values.push((label, i)),
                        Err(e) => t.error(&label, e),
                    }
                };
                probe(format!("{} regular", rd.name), &rd.ring, &mut t);
                probe(format!("M2({}) regular", rd.name), &rd.square.model, &mut t);
                match corner_algebra(&rd.square.model, &e11(&rd.ring)) {
                    Ok((corner, _)) => probe(format!("e11*M2({})*e11 regular", rd.name), &corner, &mut t),
                    Err(e) => t.error(rd.name, e),
                }
                if let Some((_, first)) = values.first() {
                    t.cases += 1;
                    if values.iter().any(|(_, v)| v != first) {
                        t.violation(rd.name, format!("ring-level indices differ: {values:?}"));
                    }
                }
                t
            })
            .collect();
        for r in per_ring {
            t.merge(r);
        }
        t
    }

    fn strong_decomposition(&self) -> Tally {
        self.per_case(|c, t| {
            let case = &c.entry.name;
            t.run(case, |t| {
                let ctx = ModuleContext::new(&c.module, &self.guards);
                if !is_strongly_c4star(&ctx, self.rule())? {
                    return Ok(());
                }
                let d = decompose_strong(&ctx, self.rule())?;
                t.cases += 1;
                let m = &c.module;
                let pm = m.submodule_module(&d.p);
                let qm = m.submodule_module(&d.q);
                let mut bad = Vec::new();
                if !d.p.intersect(&d.q).is_zero() || !d.p.sum(&d.q).is_full() {
                    bad.push("P ⊕ Q ≠ M");
                }
                if !m.is_submodule(&d.p) || !m.is_submodule(&d.q) || is_summand(m, &d.p)?.is_none() {
                    bad.push("P, Q are not complementary summands");
                }
                if !is_semisimple(&pm, &self.guards)? {
                    bad.push("P is not semisimple");
                }
                if !is_summand_square_free(&qm, &self.guards)? {
                    bad.push("Q is not summand-square-free");
                }
                if !d.p.is_zero() && !d.q.is_zero() {
                    if !is_orthogonal(&pm, &qm, &self.guards)? {
                        bad.push("P and Q are not orthogonal");
                    }
                    if !hom_vanishes(&pm, &qm)? {
                        bad.push("Hom(P, Q) ≠ 0");
                    }
                }
                if !bad.is_empty() {
                    t.violation(case, bad.join("; "));
                }
                Ok(())
            })
        })
    }

    fn example_schemes(&self) -> Tally {
        let mut t = self.per_case(|c, t| {
            let case = &c.entry.name;
            t.run(case, |t| {
                let m = &c.module;
                let ctx = ModuleContext::new(m, &self.guards);
                let swcs = is_semiweak_cs(&ctx, Reading::Submodule)?;
                let literal = is_semiweak_cs(&ctx, Reading::LiteralSummand)?;
                let ssf = is_summand_square_free(m, &self.guards)?;
                let weak = classical_predicates(m, &self.guards)?.weak_cs;
                let c4 = is_c4(&ctx, self.rule())?;
                let star = is_c4star(&ctx, self.rule())?;
                t.cases += 1;
                if ssf && !swcs {
                    t.violation(case, "summand-square-free but not semi-weak-CS");
                }
                if weak && !swcs {
                    t.violation(case, "weak CS but not semi-weak-CS");
                }
                if !literal {
                    t.violation(case, "literal-summand reading fails");
                }
                if is_semisimple(m, &self.guards)? && !(c4 && star && swcs) {
                    t.violation(case, "semisimple module fails a layer");
                }
                if !c4 && star {
                    t.violation(case, "C4* without C4");
                }
                Ok(())
            })
        });
        // Outside the corpus: the reading-sensitive ring, reported but not asserted.
        let plane = square_zero_plane();
        let note = |t: &mut Tally| -> Result<()> {
            let r = plane.build()?;
            let m = regular_module(&r);
            let ctx = ModuleContext::new(&m, &self.guards);
            t.notes.push(format!(
                "{} (not in corpus): summand-square-free={}, swCS[submodule]={}, swCS[literal]={}",
                plane.name,
                is_summand_square_free(&m, &self.guards)?,
                is_semiweak_cs(&ctx, Reading::Submodule)?,
                is_semiweak_cs(&ctx, Reading::LiteralSummand)?
            ));
            Ok(())
        };
        if let Err(e) = note(&mut t) {
            t.notes.push(format!("{}: {e}", plane.name));
        }
        t
    }

    fn extensions(&self) -> Tally {
        let mut t = self.per_case(|c, t| {
            let case = &c.entry.name;
            t.run(case, |t| {
                let ctx = ModuleContext::new(&c.module, &self.guards);
                let c4 = is_c4(&ctx, self.rule())?;
                t.cases += 1;
                if is_c4_m(&ctx, 2, self.rule())? != c4 {
                    t.violation(case, "C4[2] differs from C4");
                }
                let star = is_c4star(&ctx, self.rule())?;
                for d in 1..=3 {
                    t.cases += 1;
                    if check_extended(&ctx, 2, d, Strictness::NonStrict, self.rule())?.c4star_d != star {
                        t.violation(case, format!("non-strict C4*({d}) differs from C4*"));
                    }
                }
                Ok(())
            })
        });
        let points = [
            Condition::Extension { m: 2, d: 1, strictness: Strictness::Strict },
            Condition::Extension { m: 3, d: 1, strictness: Strictness::Strict },
            Condition::Extension { m: 2, d: 2, strictness: Strictness::Strict },
            Condition::Extension { m: 3, d: 2, strictness: Strictness::Strict },
            Condition::Extension { m: 2, d: 2, strictness: Strictness::NonStrict },
        ];
        t.merge(self.compare(&points, &[Side::Matrix]));
        t
    }

    fn ring_level(&self) -> Tally {
        let mut t = Tally::default();
        for name in ["F2", "F2[x]/(x^2)", "T2(F2)", "M2(F2)"] {
            let Some(rd) = self.rings.iter().find(|r| r.name == name) else {
                t.fixture(name, "ring missing from the corpus");
                continue;
            };
            t.run(name, |t| {
                let scan = right_ideal_scan(&rd.ring, self.rule(), &self.guards)?;
                let m = regular_module(&rd.ring);
                let direct = def_c4star(&ModuleContext::new(&m, &self.guards), self.rule())?.is_empty();
                t.cases += 1;
                if scan.all_c4 != direct {
                    t.violation(name, format!("ideal scan says {}, Def_C4* says {direct}", scan.all_c4));
                }
                t.notes.push(format!("{name}: {} right ideals, C4* = {direct}", scan.ideals));
                Ok(())
            });
        }
        t
    }

    fn expectations(&self) -> Tally {
        self.per_case(|c, t| {
            let case = &c.entry.name;
            t.run(case, |t| {
                let ctx = ModuleContext::new(&c.module, &self.guards);
                for e in &c.entry.expected {
                    let (actual, expected) = match e.property {
                        Property::C4 => (is_c4(&ctx, self.rule())?.to_string(), e.value.to_string()),
                        Property::C4Star => (is_c4star(&ctx, self.rule())?.to_string(), e.value.to_string()),
                        Property::Swcs => (is_semiweak_cs(&ctx, Reading::Submodule)?.to_string(), e.value.to_string()),
                        Property::Strong => (is_strongly_c4star(&ctx, self.rule())?.to_string(), e.value.to_string()),
                        Property::SummandSquareFree => {
                            (is_summand_square_free(&c.module, &self.guards)?.to_string(), e.value.to_string())
                        }
                        Property::Semisimple => (is_semisimple(&c.module, &self.guards)?.to_string(), e.value.to_string()),
                        Property::Index(i) => (obstruction_index(&ctx)?.to_string(), i.to_string()),
                    };
                    t.cases += 1;
                    if actual != expected {
                        t.fixture(case, format!("{:?}: expected {expected}, computed {actual} ({:?})", e.property, e.source));
                    }
                }
                Ok(())
            })
        })
    }
}

type CheckFn = fn(&Suite) -> Tally;

const CHECKS: &[(&str, &str, CheckFn)] = &[
    ("essential", "socle containment agrees with the cyclic-intersection definition", Suite::essential),
    ("transport-lemmas", "summands, semisimplicity and essentiality transport", Suite::transport_lemmas),
    ("c4-morita", "C4 agrees on M and F(M)", Suite::c4_morita),
    ("defect-classes", "defect classes correspond under transport", Suite::defect_classes),
    ("c4star-swcs-strong", "C4*, semi-weak-CS and strong agree on M and F(M)", |s| {
        s.compare(&[Condition::C4Star, Condition::Swcs, Condition::Strong], &[Side::Matrix, Side::Corner])
    }),
    ("obstruction-index", "the obstruction index agrees on M, F(M) and across R, M2(R), eRe", Suite::obstruction_index),
    ("strong-decomposition", "strongly C4* modules split as semisimple plus summand-square-free", Suite::strong_decomposition),
    ("example-schemes", "summand-square-free or weak CS implies semi-weak-CS", Suite::example_schemes),
    ("extensions", "arity and depth extensions are coherent and transport", Suite::extensions),
    ("ring-level", "right-ideal scan matches Def_C4* of the regular module", Suite::ring_level),
    ("expectations", "corpus expectations", Suite::expectations),
];

pub fn check_ids() -> Vec<&'static str> {
    CHECKS.iter().map(|c| c.0).collect()
}

pub fn cmd_suite(opts: &SuiteOptions) -> SuiteReport {
    let suite = Suite::new(opts);
    let mut checks = Vec::new();
    for &(id, title, f) in CHECKS {
        if let Some(filter) = &opts.filter {
            if !id.contains(filter.as_str()) {
                continue;
            }
        }
        let start = Instant::now();
        let mut t = f(&suite);
        let elapsed_ms = start.elapsed().as_millis() as u64;
        let budget_ms = BUDGETS_MS.iter().find(|b| b.0 == id).map(|b| b.1);
        if let Some(budget_ms) = budget_ms.filter(|&b| elapsed_ms > b) {
            t.failures.push(Failure {
                kind: FailureKind::OverBudget,
                case: id.into(),
                detail: format!("{elapsed_ms} ms over the {budget_ms} ms budget"),
            });
        }
        checks.push(CheckResult {
            id,
            title,
            cases: t.cases,
            failures: t.failures,
            partial: t.partial,
            notes: t.notes,
            elapsed_ms,
            budget_ms,
        });
    }
    if !suite.setup.failures.is_empty() || !suite.setup.partial.is_empty() {
        let s = suite.setup;
        checks.insert(
            0,
            CheckResult {
                id: "setup",
                title: "corpus construction",
                cases: 0,
                failures: s.failures,
                partial: s.partial,
                notes: s.notes,
                elapsed_ms: 0,
                budget_ms: None,
            },
        );
    }
    SuiteReport {
        seed: opts.guards.rng_seed,
        rule: opts.rule.id().to_string(),
        guards: opts.guards.clone(),
        entries: suite.cases.len(),
        checks,
    }
}
