use super::transport::{apply_functor, transport_submodule, TransportedModule};
use super::Progenerator;
use crate::algebra::Ring;
use crate::conditions::{
    check_extended, def_c4, def_c4star, is_c4, is_c4star, is_semiweak_cs, is_strongly_c4star, obs_swcs,
    ModuleContext, ObstructionIndex, Reading, ShapeKey, Strictness, WitnessRule,
};
use crate::error::{Error, Result};
use crate::guards::Guards;
use crate::linalg::{Matrix, Vector};
use crate::module::{is_semisimple, RightModule, Submodule};
use serde::Serialize;
use std::collections::{BTreeMap, HashSet};
use std::fmt::Write as _;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Realization {
    /// P = Rⁿ, S ≅ M_n(R).
    Matrix(usize),
    /// P = eR, S ≅ eRe.
    Corner(Vector),
}

impl Realization {
    pub fn progenerator(&self, r: &Ring, guards: &Guards) -> Result<Progenerator> {
        match self {
            Realization::Matrix(n) => Progenerator::free_power(r, *n, guards),
            Realization::Corner(e) => Progenerator::corner(r, e, guards),
        }
    }

    pub fn label(&self) -> String {
        match self {
            Realization::Matrix(n) => format!("matrix({n})"),
            Realization::Corner(e) => {
                format!("corner({})", e.iter().map(u32::to_string).collect::<Vec<_>>().join(","))
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Condition {
    C4,
    C4Star,
    Swcs,
    Strong,
    Index,
    Extension { m: usize, d: usize, strictness: Strictness },
}

impl Condition {
    pub fn all_basic() -> Vec<Condition> {
        vec![Condition::C4, Condition::C4Star, Condition::Swcs, Condition::Strong, Condition::Index]
    }

    /// `C4`, `C4star`, `swCS`, `strong`, `index`, or `ext:m:d` / `ext:m:d:nonstrict`.
    pub fn parse(s: &str) -> Result<Condition> {
        let lower = s.trim().to_ascii_lowercase();
        Ok(match lower.as_str() {
            "c4" => Condition::C4,
            "c4star" | "c4*" => Condition::C4Star,
            "swcs" => Condition::Swcs,
            "strong" => Condition::Strong,
            "index" | "iota" => Condition::Index,
            other if other.starts_with("ext:") => {
                let parts: Vec<&str> = other[4..].split(':').collect();
                let num = |i: usize| -> Result<usize> {
                    parts
                        .get(i)
                        .and_then(|p| p.parse().ok())
                        .ok_or_else(|| Error::Parse(format!("bad extension condition `{s}`")))
                };
                let strictness = match parts.get(2) {
                    None | Some(&"strict") => Strictness::Strict,
                    Some(&"nonstrict") | Some(&"non-strict") => Strictness::NonStrict,
                    Some(_) => return Err(Error::Parse(format!("bad strictness in `{s}`"))),
                };
                Condition::Extension { m: num(0)?, d: num(1)?, strictness }
            }
            _ => return Err(Error::Parse(format!("unknown condition `{s}`"))),
        })
    }

    pub fn label(&self) -> String {
        match self {
            Condition::C4 => "C4".into(),
            Condition::C4Star => "C4star".into(),
            Condition::Swcs => "swCS".into(),
            Condition::Strong => "strong".into(),
            Condition::Index => "index".into(),
            Condition::Extension { m, d, strictness } => {
                let s = match strictness {
                    Strictness::Strict => "strict",
                    Strictness::NonStrict => "nonstrict",
                };
                format!("ext:{m}:{d}:{s}")
            }
        }
    }
}

/// A value, or the reason a guard stopped its computation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Value(String),
    Partial(String),
}

impl Outcome {
    fn text(&self) -> String {
        match self {
            Outcome::Value(v) => v.clone(),
            Outcome::Partial(_) => "partial".into(),
        }
    }
}

fn outcome(r: Result<String>) -> Result<Outcome> {
    match r {
        Ok(v) => Ok(Outcome::Value(v)),
        Err(e @ (Error::GuardExceeded { .. } | Error::Inconclusive(_))) => Ok(Outcome::Partial(e.to_string())),
        Err(e) => Err(e),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ConditionRow {
    pub condition: String,
    pub source: Outcome,
    pub target: Outcome,
    /// `None` when either side is partial.
    pub agree: Option<bool>,
}

#[derive(Debug, Clone, Serialize)]
pub struct MoritaComparison {
    pub realization: String,
    pub module: String,
    pub source_dim: usize,
    pub target_dim: usize,
    pub rows: Vec<ConditionRow>,
}

impl MoritaComparison {
    pub fn violations(&self) -> Vec<&ConditionRow> {
        self.rows.iter().filter(|r| r.agree == Some(false)).collect()
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(
            s,
            "morita {} on {} (dim {} -> dim {})",
            self.realization, self.module, self.source_dim, self.target_dim
        );
        for r in &self.rows {
            let verdict = match r.agree {
                Some(true) => "agree",
                Some(false) => "THEOREM VIOLATION",
                None => "partial",
            };
            let _ = writeln!(s, "  {:<22} M={:<9} F(M)={:<9} {}", r.condition, r.source.text(), r.target.text(), verdict);
        }
        s
    }
}

fn evaluate(ctx: &ModuleContext, c: Condition, rule: &dyn WitnessRule) -> Result<String> {
    Ok(match c {
        Condition::C4 => is_c4(ctx, rule)?.to_string(),
        Condition::C4Star => is_c4star(ctx, rule)?.to_string(),
        Condition::Swcs => is_semiweak_cs(ctx, Reading::Submodule)?.to_string(),
        Condition::Strong => is_strongly_c4star(ctx, rule)?.to_string(),
        Condition::Index => obs_swcs(ctx, Reading::Submodule)?.index().to_string(),
        Condition::Extension { m, d, strictness } => {
            let v = check_extended(ctx, m, d, strictness, rule)?;
            format!(
                "{}/{}/{}/{}/{}",
                v.c4star_d as u8, v.c4_m as u8, v.c4star_m_d as u8, v.swcs_depth_d as u8, v.strong_depth_d as u8
            )
        }
    })
}

/// Evaluates each condition on M and on F(M) = Hom(P, M).
pub fn compare_conditions(
    prog: &Progenerator,
    m: &RightModule,
    name: &str,
    conditions: &[Condition],
    rule: &dyn WitnessRule,
    guards: &Guards,
) -> Result<MoritaComparison> {
    let t = apply_functor(prog, m)?;
    let src = ModuleContext::new(m, guards);
    let tgt = ModuleContext::new(&t.image, guards);
    let mut rows = Vec::new();
    for &c in conditions {
        let a = outcome(evaluate(&src, c, rule))?;
        let b = outcome(evaluate(&tgt, c, rule))?;
        let agree = match (&a, &b) {
            (Outcome::Value(x), Outcome::Value(y)) => Some(x == y),
            _ => None,
        };
        rows.push(ConditionRow { condition: c.label(), source: a, target: b, agree });
    }
    let realization = match &prog.kind {
        super::ProgeneratorKind::FreePower(n) => Realization::Matrix(*n).label(),
        super::ProgeneratorKind::Corner(e) => Realization::Corner(e.clone()).label(),
    };
    Ok(MoritaComparison { realization, module: name.to_string(), source_dim: m.dim(), target_dim: t.image.dim(), rows })
}

pub fn morita_pair_check(
    r: &Ring,
    realization: &Realization,
    m: &RightModule,
    name: &str,
    conditions: &[Condition],
    rule: &dyn WitnessRule,
    guards: &Guards,
) -> Result<MoritaComparison> {
    let prog = realization.progenerator(r, guards)?;
    compare_conditions(&prog, m, name, conditions, rule, guards)
}

/// Emptiness and shape-class agreement of the defect classes of M and F(M).
#[derive(Debug, Clone, Serialize)]
pub struct BijectionReport {
    pub c4_empty: (bool, bool),
    pub c4star_empty: (bool, bool),
    pub swcs_empty: (bool, bool),
    pub c4_classes_match: bool,
    pub c4star_classes_match: bool,
    pub swcs_classes_match: bool,
    pub index: (ObstructionIndex, ObstructionIndex),
    /// Sizes of the classes on M: (Def_C4, Def_C4*, Obs_swCS).
    pub source_sizes: (usize, usize, usize),
}

impl BijectionReport {
    pub fn all_agree(&self) -> bool {
        self.c4_empty.0 == self.c4_empty.1
            && self.c4star_empty.0 == self.c4star_empty.1
            && self.swcs_empty.0 == self.swcs_empty.1
            && self.c4_classes_match
            && self.c4star_classes_match
            && self.swcs_classes_match
            && self.index.0 == self.index.1
    }
}

struct DimMap<'a, 'p> {
    t: &'a TransportedModule<'p>,
}

impl DimMap<'_, '_> {
    fn dim(&self, n: &Submodule) -> Result<usize> {
        Ok(transport_submodule(self.t, n)?.dim())
    }

    /// Maps a key computed on M (pieces lifted by `lift` into M-coordinates) to F(M) dimensions.
    fn key(&self, key: ShapeKey, pieces: [&Submodule; 4], lift: Option<&Matrix>) -> Result<ShapeKey> {
        let up = |s: &Submodule| -> Submodule {
            match lift {
                Some(l) => s.image(l),
                None => s.clone(),
            }
        };
        Ok(ShapeKey {
            dim_a: self.dim(&up(pieces[0]))?,
            dim_b: self.dim(&up(pieces[1]))?,
            dim_ker: self.dim(&up(pieces[2]))?,
            dim_im: self.dim(&up(pieces[3]))?,
            len_im: key.len_im,
            len_soc_im: key.len_soc_im,
        })
    }
}

type PairKey = ((usize, usize), (usize, usize), bool);

fn pair_key(dx: usize, lx: usize, dy: usize, ly: usize, minimal: bool) -> PairKey {
    let (a, b) = if (dx, lx) <= (dy, ly) { ((dx, lx), (dy, ly)) } else { ((dy, ly), (dx, lx)) };
    (a, b, minimal)
}

pub fn defect_bijection_check(
    prog: &Progenerator,
    m: &RightModule,
    rule: &dyn WitnessRule,
    guards: &Guards,
) -> Result<BijectionReport> {
    let t = apply_functor(prog, m)?;
    let map = DimMap { t: &t };
    let src = ModuleContext::new(m, guards);
    let tgt = ModuleContext::new(&t.image, guards);

    let c4_src = def_c4(&src, rule)?;
    let c4_tgt = def_c4(&tgt, rule)?;
    let mut mapped: BTreeMap<ShapeKey, usize> = BTreeMap::new();
    for (w, &k) in c4_src.witnesses.iter().zip(&c4_src.keys) {
        let d = &w.decomposition;
        let key = map.key(k, [&d.a, &d.b, &w.kernel, &w.image], None)?;
        *mapped.entry(key).or_insert(0) += 1;
    }
    let c4_classes_match = mapped == c4_tgt.classes;

    let star_src = def_c4star(&src, rule)?;
    let star_tgt = def_c4star(&tgt, rule)?;
    let mut star_mapped: BTreeMap<(usize, ShapeKey), usize> = BTreeMap::new();
    for sd in &star_src {
        let lift = sd.submodule.basis_matrix();
        let dx = map.dim(&sd.submodule)?;
        for (w, &k) in sd.defects.witnesses.iter().zip(&sd.defects.keys) {
            let d = &w.decomposition;
            let key = map.key(k, [&d.a, &d.b, &w.kernel, &w.image], Some(&lift))?;
            *star_mapped.entry((dx, key)).or_insert(0) += 1;
        }
    }
    let mut star_direct: BTreeMap<(usize, ShapeKey), usize> = BTreeMap::new();
    for sd in &star_tgt {
        for (&k, &c) in &sd.defects.classes {
            *star_direct.entry((sd.submodule.dim(), k)).or_insert(0) += c;
        }
    }
    let c4star_classes_match = star_mapped == star_direct;

    let sw_src = obs_swcs(&src, Reading::Submodule)?;
    let sw_tgt = obs_swcs(&tgt, Reading::Submodule)?;
    let mut sw_mapped: BTreeMap<PairKey, usize> = BTreeMap::new();
    for p in &sw_src.obstructions {
        let k = pair_key(map.dim(&p.x)?, p.lengths.0, map.dim(&p.y)?, p.lengths.1, p.minimal);
        *sw_mapped.entry(k).or_insert(0) += 1;
    }
    let mut sw_direct: BTreeMap<PairKey, usize> = BTreeMap::new();
    for p in &sw_tgt.obstructions {
        let k = pair_key(p.x.dim(), p.lengths.0, p.y.dim(), p.lengths.1, p.minimal);
        *sw_direct.entry(k).or_insert(0) += 1;
    }
    let swcs_classes_match = sw_mapped == sw_direct;

    Ok(BijectionReport {
        c4_empty: (c4_src.is_empty(), c4_tgt.is_empty()),
        c4star_empty: (star_src.is_empty(), star_tgt.is_empty()),
        swcs_empty: (sw_src.obstructions.is_empty(), sw_tgt.obstructions.is_empty()),
        c4_classes_match,
        c4star_classes_match,
        swcs_classes_match,
        index: (sw_src.index(), sw_tgt.index()),
        source_sizes: (
            c4_src.witnesses.len(),
            star_src.iter().map(|s| s.defects.witnesses.len()).sum(),
            sw_src.obstructions.len(),
        ),
    })
}

/// Agreement of summandhood, semisimplicity and essentiality over every N ≤ M with
/// those of Hom(P, N) ≤ F(M), plus the lattice order isomorphism.
#[derive(Debug, Clone, Default, Serialize)]
pub struct LemmaReport {
    pub pairs: usize,
    pub summand_mismatches: usize,
    pub semisimple_mismatches: usize,
    pub essential_mismatches: usize,
    pub order_isomorphism: bool,
}

impl LemmaReport {
    pub fn all_agree(&self) -> bool {
        self.summand_mismatches == 0
            && self.semisimple_mismatches == 0
            && self.essential_mismatches == 0
            && self.order_isomorphism
    }
}

pub fn transport_lemma_check(prog: &Progenerator, m: &RightModule, guards: &Guards) -> Result<LemmaReport> {
    let t = apply_functor(prog, m)?;
    let src = ModuleContext::new(m, guards);
    let tgt = ModuleContext::new(&t.image, guards);
    let lm = src.lattice()?;
    let lt = tgt.lattice()?;
    let soc_m = src.socle()?;
    let soc_t = tgt.socle()?;
    let mut rep = LemmaReport::default();
    let mut images = Vec::with_capacity(lm.len());
    for n in lm.members() {
        let tn = transport_submodule(&t, n)?;
        rep.pairs += 1;
        if src.is_summand(n) != tgt.is_summand(&tn) {
            rep.summand_mismatches += 1;
        }
        let ss = is_semisimple(&m.submodule_module(n), guards)?;
        let tss = is_semisimple(&t.image.submodule_module(&tn), guards)?;
        if ss != tss {
            rep.semisimple_mismatches += 1;
        }
        if soc_m.is_subspace_of(n) != soc_t.is_subspace_of(&tn) {
            rep.essential_mismatches += 1;
        }
        images.push(tn);
    }
    let distinct: HashSet<&Submodule> = images.iter().collect();
    let onto = images.iter().all(|i| lt.index_of(i).is_some());
    let mut order = distinct.len() == images.len() && onto && lt.len() == lm.len();
    if order {
        'outer: for i in 0..images.len() {
            for j in 0..images.len() {
                if lm.contains(i, j) != images[i].is_subspace_of(&images[j]) {
                    order = false;
                    break 'outer;
                }
            }
        }
    }
    rep.order_isomorphism = order;
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{build_algebra, matrix_algebra, AlgebraSpec};
    use crate::conditions::MonoImageSplits;
    use crate::module::{direct_sum, regular_module};

    fn dual() -> Ring {
        build_algebra(&AlgebraSpec::PolyQuotient { p: 2, coeffs: vec![0, 0, 1] }).unwrap()
    }

    fn r_plus_s(r: &Ring) -> RightModule {
        let reg = regular_module(r);
        let s = reg.quotient(&reg.cyclic(&[0, 1])).0;
        direct_sum(&reg, &s).unwrap().module
    }

    #[test]
    fn condition_parsing() {
        assert_eq!(Condition::parse("C4star").unwrap(), Condition::C4Star);
        assert_eq!(
            Condition::parse("ext:3:2:nonstrict").unwrap(),
            Condition::Extension { m: 3, d: 2, strictness: Strictness::NonStrict }
        );
        assert!(Condition::parse("ext:3").is_err());
        assert!(Condition::parse("C5").is_err());
        for c in Condition::all_basic() {
            assert_eq!(Condition::parse(&c.label()).unwrap(), c);
        }
    }

    #[test]
    fn r_plus_s_under_matrix_two() {
        let g = Guards::default();
        let r = dual();
        let m = r_plus_s(&r);
        let cmp = morita_pair_check(&r, &Realization::Matrix(2), &m, "R+S", &[Condition::C4], &MonoImageSplits, &g)
            .unwrap();
        assert_eq!(cmp.rows[0].source, Outcome::Value("false".into()));
        assert_eq!(cmp.rows[0].target, Outcome::Value("false".into()));
        assert!(cmp.violations().is_empty());
        let p = Progenerator::free_power(&r, 2, &g).unwrap();
        let b = defect_bijection_check(&p, &m, &MonoImageSplits, &g).unwrap();
        assert!(b.all_agree(), "{b:?}");
        assert!(!b.c4_empty.0);
        assert_eq!(b.index, (ObstructionIndex::Infinity, ObstructionIndex::Infinity));
        let l = transport_lemma_check(&p, &m, &g).unwrap();
        assert!(l.all_agree(), "{l:?}");
    }

    #[test]
    fn semisimple_cases() {
        let g = Guards::default();
        let f2 = build_algebra(&AlgebraSpec::Field { p: 2 }).unwrap();
        let conds = [Condition::C4Star, Condition::Swcs, Condition::Strong];
        let cmp =
            morita_pair_check(&f2, &Realization::Matrix(2), &regular_module(&f2), "F2", &conds, &MonoImageSplits, &g)
                .unwrap();
        assert!(cmp.rows.iter().all(|r| r.source == Outcome::Value("true".into()) && r.agree == Some(true)));
        let m2 = matrix_algebra(&f2, 2).unwrap();
        let cmp = morita_pair_check(
            &m2,
            &Realization::Corner(vec![1, 0, 0, 0]),
            &regular_module(&m2),
            "M2(F2)",
            &[Condition::Strong],
            &MonoImageSplits,
            &g,
        )
        .unwrap();
        assert_eq!(cmp.rows[0].agree, Some(true));
        assert!(cmp.to_text().contains("agree"));
    }
}
