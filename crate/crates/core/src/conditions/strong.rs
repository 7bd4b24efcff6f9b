use super::c4::{def_c4star, is_c4star, SubmoduleDefects};
use super::swcs::{obs_swcs, ObstructionPair, Reading};
use super::{ModuleContext, WitnessRule};
use crate::error::{Error, Result};
use crate::module::{hom_vanishes, is_orthogonal, is_summand_square_free, Submodule};

/// The strong defect class: C4*-layer and swCS-layer parts, kept apart.
#[derive(Debug, Clone)]
pub struct StrongDefect {
    pub c4star_layer: Vec<SubmoduleDefects>,
    pub swcs_layer: Vec<ObstructionPair>,
}

impl StrongDefect {
    pub fn is_empty(&self) -> bool {
        self.c4star_layer.is_empty() && self.swcs_layer.is_empty()
    }

    /// Layer tags present, in fixed order.
    pub fn tags(&self) -> Vec<&'static str> {
        let mut t = Vec::new();
        if !self.c4star_layer.is_empty() {
            t.push("C4star-layer");
        }
        if !self.swcs_layer.is_empty() {
            t.push("swCS-layer");
        }
        t
    }
}

pub fn strong_defect(ctx: &ModuleContext, rule: &dyn WitnessRule) -> Result<StrongDefect> {
    Ok(StrongDefect {
        c4star_layer: def_c4star(ctx, rule)?,
        swcs_layer: obs_swcs(ctx, Reading::Submodule)?.obstructions,
    })
}

pub fn is_strongly_c4star(ctx: &ModuleContext, rule: &dyn WitnessRule) -> Result<bool> {
    Ok(obs_swcs(ctx, Reading::Submodule)?.obstructions.is_empty() && is_c4star(ctx, rule)?)
}

/// M = P ⊕ Q with P semisimple, Q summand-square-free, P orthogonal to Q and Hom(P, Q) = 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrongDecomposition {
    pub p: Submodule,
    pub q: Submodule,
}

/// Searches the decompositions, largest P first, for one meeting all four clauses.
/// Refuses modules that are not strongly C4*; a strongly C4* module with no such
/// decomposition is reported as a theorem violation.
pub fn decompose_strong(ctx: &ModuleContext, rule: &dyn WitnessRule) -> Result<StrongDecomposition> {
    if !is_strongly_c4star(ctx, rule)? {
        return Err(Error::Precondition("module is not strongly C4*".into()));
    }
    let m = ctx.module();
    let g = ctx.guards();
    let soc = ctx.socle()?.clone();
    let mut decs: Vec<&super::Decomposition> = ctx.decompositions()?.iter().collect();
    decs.sort_by(|x, y| y.a.dim().cmp(&x.a.dim()).then_with(|| x.a.cmp(&y.a)).then_with(|| x.b.cmp(&y.b)));
    for dec in decs {
        if !dec.a.is_subspace_of(&soc) {
            continue;
        }
        let pm = m.submodule_module(&dec.a);
        let qm = m.submodule_module(&dec.b);
        if !hom_vanishes(&pm, &qm)? {
            continue;
        }
        if !is_summand_square_free(&qm, g)? {
            continue;
        }
        if !is_orthogonal(&pm, &qm, g)? {
            continue;
        }
        return Ok(StrongDecomposition { p: dec.a.clone(), q: dec.b.clone() });
    }
    Err(Error::TheoremViolation(
        "strongly C4* module has no decomposition P ⊕ Q with P semisimple, Q summand-square-free, \
         P orthogonal to Q and Hom(P, Q) = 0"
            .into(),
    ))
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::super::MonoImageSplits;
    use super::*;
    use crate::guards::Guards;
    use crate::module::{direct_sum, direct_sum_all, regular_module, RightModule};

    fn ctx(m: &RightModule) -> ModuleContext {
        ModuleContext::new(m, &Guards::default())
    }

    #[test]
    fn strong_examples() {
        let r = dual();
        let reg = ctx(&regular_module(&r));
        assert!(is_strongly_c4star(&reg, &MonoImageSplits).unwrap());
        let d = decompose_strong(&reg, &MonoImageSplits).unwrap();
        assert!(d.p.is_zero() && d.q.is_full());

        let ss = direct_sum_all(&f2(), &vec![regular_module(&f2()); 2]).unwrap();
        let c = ctx(&ss);
        assert!(is_strongly_c4star(&c, &MonoImageSplits).unwrap());
        let d = decompose_strong(&c, &MonoImageSplits).unwrap();
        assert!(d.p.is_full() && d.q.is_zero());
    }

    #[test]
    fn r_plus_s_is_refused() {
        let c = ctx(&r_plus_s());
        assert!(!is_strongly_c4star(&c, &MonoImageSplits).unwrap());
        let sd = strong_defect(&c, &MonoImageSplits).unwrap();
        assert_eq!(sd.tags(), vec!["C4star-layer"]);
        assert!(matches!(decompose_strong(&c, &MonoImageSplits), Err(Error::Precondition(_))));
        let s_plus_r = direct_sum(&simple(&dual()), &regular_module(&dual())).unwrap().module;
        assert!(matches!(decompose_strong(&ctx(&s_plus_r), &MonoImageSplits), Err(Error::Precondition(_))));
    }
}
