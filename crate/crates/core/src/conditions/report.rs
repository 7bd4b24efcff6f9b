use super::c4::{def_c4, def_c4star, C4Defects, ShapeKey};
use super::extended::{check_extended_grid, ExtendedVerdict, Strictness};
use super::strong::decompose_strong;
use super::swcs::{obs_swcs, ObstructionIndex, Reading};
use super::{ModuleContext, MonoImageSplits, WitnessRecord, WitnessRule};
use crate::error::{Error, Result};
use crate::guards::Guards;
use crate::linalg::{Matrix, Vector};
use crate::module::{classical_predicates, ClassicalPredicates, RightModule, Submodule};
use serde::Serialize;
use std::fmt::Write as _;
use std::sync::Arc;

pub struct AnalyzeOptions {
    pub rule: Arc<dyn WitnessRule>,
    /// (m, d) points of the extension grid.
    pub extensions: Vec<(usize, usize)>,
    pub strictness: Strictness,
    pub classical: bool,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        AnalyzeOptions {
            rule: Arc::new(MonoImageSplits),
            extensions: vec![(2, 1), (3, 1), (2, 2)],
            strictness: Strictness::Strict,
            classical: true,
        }
    }
}

/// Flags are `null` when their section is partial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Flags {
    pub c4: Option<bool>,
    pub c4star: Option<bool>,
    pub swcs: Option<bool>,
    pub strong: Option<bool>,
}

#[derive(Debug, Clone, Serialize)]
pub struct WitnessSample {
    pub a: Vec<Vector>,
    pub b: Vec<Vector>,
    pub f: Vec<Vector>,
    pub kernel: Vec<Vector>,
    pub image: Vec<Vector>,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct ShapeClassRow {
    pub key: ShapeKey,
    pub count: usize,
    pub sample: WitnessSample,
}

#[derive(Debug, Clone, Serialize)]
pub struct SubmoduleDefectRow {
    pub submodule: Vec<Vector>,
    pub classes: Vec<ShapeClassRow>,
}

#[derive(Debug, Clone, Serialize)]
pub struct PairRow {
    pub x: Vec<Vector>,
    pub y: Vec<Vector>,
    pub lengths: (usize, usize),
    pub minimal: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct CertificateRow {
    pub p: Vec<Vector>,
    pub q: Vec<Vector>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PartialNote {
    pub section: String,
    pub reason: String,
}

/// Everything known about one module, in a fixed key order.
#[derive(Debug, Clone, Serialize)]
pub struct DefectReport {
    pub module: String,
    pub dim: usize,
    pub rule: String,
    pub guards: Guards,
    pub flags: Flags,
    pub def_c4: Option<Vec<ShapeClassRow>>,
    pub def_c4star: Option<Vec<SubmoduleDefectRow>>,
    pub obs_swcs: Option<Vec<PairRow>>,
    pub obstruction_index: Option<ObstructionIndex>,
    pub extensions: Option<Vec<ExtendedVerdict>>,
    pub decomposition_certificate: Option<CertificateRow>,
    pub classical: Option<ClassicalPredicates>,
    pub partial: Vec<PartialNote>,
}

fn rows(s: &Submodule) -> Vec<Vector> {
    s.basis().to_vec()
}

fn matrix_rows(m: &Matrix) -> Vec<Vector> {
    m.row_vectors()
}

/// Lifts a witness on a submodule X (in X-coordinates) to M-coordinates.
fn sample(w: &WitnessRecord, lift: Option<&Matrix>) -> WitnessSample {
    let up = |s: &Submodule| -> Vec<Vector> {
        match lift {
            Some(l) => rows(&s.image(l)),
            None => rows(s),
        }
    };
    WitnessSample {
        a: up(&w.decomposition.a),
        b: up(&w.decomposition.b),
        f: matrix_rows(w.f.matrix()),
        kernel: up(&w.kernel),
        image: up(&w.image),
        detail: w.detail.clone().unwrap_or_default(),
    }
}

fn class_rows(d: &C4Defects, lift: Option<&Matrix>) -> Vec<ShapeClassRow> {
    d.samples().into_iter().map(|(key, count, w)| ShapeClassRow { key, count, sample: sample(w, lift) }).collect()
}

/// Runs a section; guard exhaustion and inconclusive searches become partial notes.
fn section<T>(name: &str, partial: &mut Vec<PartialNote>, r: Result<T>) -> Result<Option<T>> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(e @ (Error::GuardExceeded { .. } | Error::Inconclusive(_))) => {
            partial.push(PartialNote { section: name.into(), reason: e.to_string() });
            Ok(None)
        }
        Err(e) => Err(e),
    }
}

/// Builds the full report for one module.
pub fn analyze(m: &RightModule, name: &str, guards: &Guards, opts: &AnalyzeOptions) -> Result<DefectReport> {
    let ctx = ModuleContext::new(m, guards);
    let rule = opts.rule.as_ref();
    let mut partial = Vec::new();

    let c4 = section("def_c4", &mut partial, def_c4(&ctx, rule))?;
    let star = section("def_c4star", &mut partial, def_c4star(&ctx, rule))?;
    let swcs = section("obs_swcs", &mut partial, obs_swcs(&ctx, Reading::Submodule))?;

    let flags = Flags {
        c4: c4.as_ref().map(|d| d.is_empty()),
        c4star: star.as_ref().map(|d| d.is_empty()),
        swcs: swcs.as_ref().map(|a| a.obstructions.is_empty()),
        strong: match (&star, &swcs) {
            (Some(s), Some(w)) => Some(s.is_empty() && w.obstructions.is_empty()),
            _ => None,
        },
    };

    let requests: Vec<(usize, usize, Strictness)> =
        opts.extensions.iter().map(|&(mm, d)| (mm, d, opts.strictness)).collect();
    let extensions = if requests.is_empty() {
        Some(Vec::new())
    } else {
        section("extensions", &mut partial, check_extended_grid(&ctx, &requests, rule))?
    };

    let decomposition_certificate = if flags.strong == Some(true) {
        section("decomposition_certificate", &mut partial, decompose_strong(&ctx, rule))?
            .map(|d| CertificateRow { p: rows(&d.p), q: rows(&d.q) })
    } else {
        None
    };

    let classical = if opts.classical {
        section("classical", &mut partial, classical_predicates(m, guards))?
    } else {
        None
    };

    Ok(DefectReport {
        module: name.to_string(),
        dim: m.dim(),
        rule: rule.id().to_string(),
        guards: guards.clone(),
        flags,
        def_c4: c4.as_ref().map(|d| class_rows(d, None)),
        def_c4star: star.as_ref().map(|list| {
            list.iter()
                .map(|sd| {
                    let lift = sd.submodule.basis_matrix();
                    SubmoduleDefectRow { submodule: rows(&sd.submodule), classes: class_rows(&sd.defects, Some(&lift)) }
                })
                .collect()
        }),
        obs_swcs: swcs.as_ref().map(|a| {
            a.obstructions
                .iter()
                .map(|p| PairRow { x: rows(&p.x), y: rows(&p.y), lengths: p.lengths, minimal: p.minimal })
                .collect()
        }),
        obstruction_index: swcs.as_ref().map(|a| a.index()),
        extensions,
        decomposition_certificate,
        classical,
        partial,
    })
}

fn flag(b: Option<bool>) -> String {
    match b {
        Some(b) => b.to_string(),
        None => "partial".into(),
    }
}

fn vecs(v: &[Vector]) -> String {
    let parts: Vec<String> =
        v.iter().map(|r| format!("({})", r.iter().map(u32::to_string).collect::<Vec<_>>().join(","))).collect();
    format!("[{}]", parts.join(" "))
}

impl DefectReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Line-oriented text with the same key order as the JSON form.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "module: {} (dim {})", self.module, self.dim);
        let _ = writeln!(s, "rule: {}", self.rule);
        let _ = writeln!(
            s,
            "flags: C4={} C4star={} swCS={} strong={}",
            flag(self.flags.c4),
            flag(self.flags.c4star),
            flag(self.flags.swcs),
            flag(self.flags.strong)
        );
        match &self.def_c4 {
            None => {
                let _ = writeln!(s, "def_c4: partial");
            }
            Some(rows) => {
                let _ = writeln!(s, "def_c4: {} shape classes", rows.len());
                for r in rows {
                    let k = r.key;
                    let _ = writeln!(
                        s,
                        "  class (dimA={}, dimB={}, ker={}, im={}, len_im={}, len_soc_im={}) count={} sample A={} B={} im={}",
                        k.dim_a, k.dim_b, k.dim_ker, k.dim_im, k.len_im, k.len_soc_im, r.count,
                        vecs(&r.sample.a), vecs(&r.sample.b), vecs(&r.sample.image)
                    );
                }
            }
        }
        match &self.def_c4star {
            None => {
                let _ = writeln!(s, "def_c4star: partial");
            }
            Some(rows) => {
                let _ = writeln!(s, "def_c4star: {} non-C4 submodules", rows.len());
                for r in rows {
                    let _ = writeln!(s, "  submodule {} classes={}", vecs(&r.submodule), r.classes.len());
                }
            }
        }
        match &self.obs_swcs {
            None => {
                let _ = writeln!(s, "obs_swcs: partial");
            }
            Some(rows) => {
                let _ = writeln!(s, "obs_swcs: {} obstruction pairs", rows.len());
                for r in rows {
                    let _ = writeln!(
                        s,
                        "  X={} Y={} lengths=({}, {}) minimal={}",
                        vecs(&r.x), vecs(&r.y), r.lengths.0, r.lengths.1, r.minimal
                    );
                }
            }
        }
        let _ = writeln!(
            s,
            "obstruction_index: {}",
            self.obstruction_index.map_or("partial".to_string(), |i| i.to_string())
        );
        match &self.extensions {
            None => {
                let _ = writeln!(s, "extensions: partial");
            }
            Some(v) => {
                for e in v {
                    let _ = writeln!(
                        s,
                        "extension m={} d={} {:?}: C4star_d={} C4_m={} C4star_m_d={} swcs_depth_d={} strong_depth_d={}",
                        e.m, e.d, e.strictness, e.c4star_d, e.c4_m, e.c4star_m_d, e.swcs_depth_d, e.strong_depth_d
                    );
                }
            }
        }
        match &self.decomposition_certificate {
            Some(c) => {
                let _ = writeln!(s, "decomposition_certificate: P={} Q={}", vecs(&c.p), vecs(&c.q));
            }
            None => {
                let _ = writeln!(s, "decomposition_certificate: none");
            }
        }
        if let Some(c) = &self.classical {
            let _ = writeln!(
                s,
                "classical: C2={} C3={} CS={} weak_CS={} continuous={} directly_finite={}",
                c.c2, c.c3, c.cs, c.weak_cs, c.continuous, c.directly_finite
            );
        }
        for p in &self.partial {
            let _ = writeln!(s, "partial: {}: {}", p.section, p.reason);
        }
        s
    }
}
