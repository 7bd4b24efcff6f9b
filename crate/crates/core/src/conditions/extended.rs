use super::c4::{homs_for, is_c4};
use super::rules::judge;
use super::swcs::{is_semiweak_cs, Reading};
use super::{ModuleContext, WitnessRule};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::module::Submodule;
use serde::Serialize;
use std::collections::HashMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Strictness {
    /// X₀ < X₁ < … < X_d ≤ M.
    Strict,
    /// X₀ ≤ X₁ ≤ … ≤ X_d ≤ M; constant chains are allowed.
    NonStrict,
}

/// The depth/arity grid at one (m, d, strictness).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ExtendedVerdict {
    pub m: usize,
    pub d: usize,
    pub strictness: Strictness,
    pub c4star_d: bool,
    pub c4_m: bool,
    pub c4star_m_d: bool,
    pub swcs_depth_d: bool,
    pub strong_depth_d: bool,
}

struct Step<'a> {
    /// Current summand A_k; `None` before A₁ is chosen.
    current: Option<&'a Submodule>,
    /// Composites f_{k-1}∘…∘f_i for each start i, as (A_i, matrix A_i → A_k).
    runs: Vec<(&'a Submodule, Matrix)>,
}

/// C4[m]: for every chain A₁, …, A_m where each (A_i, A_{i+1}) is a decomposition of M, and
/// every f_i: A_i → A_{i+1}, each consecutive composite run passes the rule. At m = 2 the
/// runs are single maps A → B and this is C4.
pub fn is_c4_m(ctx: &ModuleContext, m: usize, rule: &dyn WitnessRule) -> Result<bool> {
    if m < 2 {
        return Err(Error::Precondition(format!("arity must be at least 2, got {m}")));
    }
    let decs = ctx.decompositions()?;
    let mut by_first: HashMap<&Submodule, Vec<usize>> = HashMap::new();
    for (i, d) in decs.iter().enumerate() {
        by_first.entry(&d.a).or_default().push(i);
    }
    let mut homs: Vec<Vec<Matrix>> = Vec::with_capacity(decs.len());
    for d in decs {
        homs.push(homs_for(ctx, &d.a, &d.b)?);
    }
    let mut budget = ctx.guards().max_hom_scan;
    let all: Vec<usize> = (0..decs.len()).collect();
    let chains = Chains { ctx, rule, decs, by_first, homs, all };
    chains.extend(Step { current: None, runs: Vec::new() }, m - 1, &mut budget)
}

struct Chains<'a> {
    ctx: &'a ModuleContext,
    rule: &'a dyn WitnessRule,
    decs: &'a [super::Decomposition],
    by_first: HashMap<&'a Submodule, Vec<usize>>,
    homs: Vec<Vec<Matrix>>,
    all: Vec<usize>,
}

impl<'a> Chains<'a> {
    fn extend(&self, step: Step<'a>, remaining: usize, budget: &mut u64) -> Result<bool> {
        if remaining == 0 {
            return Ok(true);
        }
        let choices: &[usize] = match step.current {
            None => &self.all,
            Some(a) => self.by_first.get(a).map_or(&[], |v| v.as_slice()),
        };
        for &di in choices {
            let dec = &self.decs[di];
            let ub = dec.b.basis_matrix();
            for f in &self.homs[di] {
                if *budget == 0 {
                    let bound = self.ctx.guards().max_hom_scan;
                    return Err(Error::guard("max_hom_scan", format!("more than {bound} chain steps"), bound));
                }
                *budget -= 1;
                let mut runs: Vec<(&Submodule, Matrix)> =
                    step.runs.iter().map(|(src, c)| (*src, c.mul(f))).collect();
                runs.push((&dec.a, f.clone()));
                for (src, c) in &runs {
                    let ker = c.left_kernel();
                    let kernel = ker.image(&src.basis_matrix());
                    let image = c.mul(&ub).row_space();
                    if judge(self.ctx, self.rule, ker.is_zero(), &kernel, &image).is_some() {
                        return Ok(false);
                    }
                }
                if !self.extend(Step { current: Some(&dec.b), runs }, remaining - 1, budget)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// Starting terms X₀ of d-step chains X₀ ≤ X₁ ≤ … ≤ X_d ≤ M.
pub fn chain_starts(ctx: &ModuleContext, d: usize, strictness: Strictness) -> Result<Vec<Submodule>> {
    let lattice = ctx.lattice()?;
    Ok(match strictness {
        Strictness::NonStrict => lattice.members().to_vec(),
        Strictness::Strict => {
            let h = lattice.height_above();
            lattice.members().iter().zip(h).filter(|(_, h)| *h >= d).map(|(x, _)| x.clone()).collect()
        }
    })
}

#[derive(Default)]
struct MemberFlags {
    c4: Option<bool>,
    swcs: Option<bool>,
    c4_m: HashMap<usize, bool>,
}

/// Evaluates the grid for every requested (m, d, strictness), sharing per-submodule work.
pub fn check_extended_grid(
    ctx: &ModuleContext,
    requests: &[(usize, usize, Strictness)],
    rule: &dyn WitnessRule,
) -> Result<Vec<ExtendedVerdict>> {
    let mut cache: HashMap<Submodule, MemberFlags> = HashMap::new();
    let mut top_c4_m: HashMap<usize, bool> = HashMap::new();
    let mut out = Vec::new();
    for &(m, d, strictness) in requests {
        let starts = chain_starts(ctx, d, strictness)?;
        let mut c4star_d = true;
        let mut swcs_depth_d = true;
        let mut c4star_m_d = true;
        for x in &starts {
            let sub = if x.is_full() { None } else { Some(ctx.sub_context(x)) };
            let xc = sub.as_ref().unwrap_or(ctx);
            let flags = cache.entry(x.clone()).or_default();
            if flags.c4.is_none() {
                flags.c4 = Some(is_c4(xc, rule)?);
            }
            if flags.swcs.is_none() {
                flags.swcs = Some(is_semiweak_cs(xc, Reading::Submodule)?);
            }
            if let std::collections::hash_map::Entry::Vacant(e) = flags.c4_m.entry(m) {
                e.insert(is_c4_m(xc, m, rule)?);
            }
            c4star_d &= flags.c4.unwrap();
            swcs_depth_d &= flags.swcs.unwrap();
            c4star_m_d &= flags.c4_m[&m];
        }
        let c4_m = match top_c4_m.get(&m) {
            Some(&b) => b,
            None => {
                let b = is_c4_m(ctx, m, rule)?;
                top_c4_m.insert(m, b);
                b
            }
        };
        out.push(ExtendedVerdict {
            m,
            d,
            strictness,
            c4star_d,
            c4_m,
            c4star_m_d,
            swcs_depth_d,
            strong_depth_d: c4star_d && swcs_depth_d,
        });
    }
    Ok(out)
}

pub fn check_extended(
    ctx: &ModuleContext,
    m: usize,
    d: usize,
    strictness: Strictness,
    rule: &dyn WitnessRule,
) -> Result<ExtendedVerdict> {
    Ok(check_extended_grid(ctx, &[(m, d, strictness)], rule)?.remove(0))
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::super::{is_c4star, MonoImageSplits};
    use super::*;
    use crate::guards::Guards;
    use crate::module::{composition_length, direct_sum_all, regular_module, RightModule};

    fn ctx(m: &RightModule) -> ModuleContext {
        ModuleContext::new(m, &Guards::default())
    }

    #[test]
    fn arity_two_is_c4() {
        let r = dual();
        for m in [regular_module(&r), r_plus_s(), square(&simple(&r)), RightModule::zero(&r)] {
            let c = ctx(&m);
            assert_eq!(is_c4_m(&c, 2, &MonoImageSplits).unwrap(), is_c4(&c, &MonoImageSplits).unwrap());
        }
    }

    #[test]
    fn arity_three() {
        let ss = direct_sum_all(&f2(), &vec![regular_module(&f2()); 2]).unwrap();
        assert!(is_c4_m(&ctx(&ss), 3, &MonoImageSplits).unwrap());
        assert!(!is_c4_m(&ctx(&r_plus_s()), 3, &MonoImageSplits).unwrap());
        assert!(is_c4_m(&ctx(&r_plus_s()), 1, &MonoImageSplits).is_err());
    }

    #[test]
    fn depth_examples() {
        let m = r_plus_s();
        let c = ctx(&m);
        let strict = check_extended(&c, 2, 3, Strictness::Strict, &MonoImageSplits).unwrap();
        assert!(strict.c4star_d);
        assert!(!strict.c4_m);
        let starts = chain_starts(&c, 3, Strictness::Strict).unwrap();
        assert_eq!(starts.len(), 1);
        assert!(starts[0].is_zero());
        let star = is_c4star(&c, &MonoImageSplits).unwrap();
        for d in 1..=3 {
            let v = check_extended(&c, 2, d, Strictness::NonStrict, &MonoImageSplits).unwrap();
            assert_eq!(v.c4star_d, star);
        }
        let s = simple(&dual());
        let v = check_extended(&ctx(&s), 2, 2, Strictness::Strict, &MonoImageSplits).unwrap();
        assert!(v.c4star_d);
    }

    #[test]
    fn strict_heights_match_length() {
        let m = r_plus_s();
        let c = ctx(&m);
        let g = Guards::default();
        let total = composition_length(&m, &g).unwrap();
        let lat = c.lattice().unwrap();
        for (x, h) in lat.members().iter().zip(lat.height_above()) {
            assert_eq!(h, total - composition_length(&m.submodule_module(x), &g).unwrap());
        }
    }
}
