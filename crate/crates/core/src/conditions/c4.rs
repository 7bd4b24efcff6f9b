use super::rules::{judge, kernel_image, record};
use super::{ModuleContext, WitnessRecord, WitnessRule};
use crate::error::Result;
use crate::linalg::Matrix;
use crate::module::{hom_space, Submodule};
use serde::Serialize;
use std::collections::BTreeMap;
use std::sync::Arc;

/// Shape class of a defect witness: dimensions plus the lengths of im f and soc(im f).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ShapeKey {
    pub dim_a: usize,
    pub dim_b: usize,
    pub dim_ker: usize,
    pub dim_im: usize,
    pub len_im: usize,
    pub len_soc_im: usize,
}

/// Def_C4 together with its shape-class counts.
#[derive(Debug, Clone, Default)]
pub struct C4Defects {
    pub witnesses: Vec<WitnessRecord>,
    /// Shape key of each witness, parallel to `witnesses`.
    pub keys: Vec<ShapeKey>,
    pub classes: BTreeMap<ShapeKey, usize>,
}

impl C4Defects {
    pub fn is_empty(&self) -> bool {
        self.witnesses.is_empty()
    }

    /// One witness per shape class, the first found.
    pub fn samples(&self) -> Vec<(ShapeKey, usize, &WitnessRecord)> {
        let mut out: Vec<(ShapeKey, usize, &WitnessRecord)> = Vec::new();
        for (key, &count) in &self.classes {
            let w = self.keys.iter().position(|k| k == key).map(|i| &self.witnesses[i]);
            if let Some(w) = w {
                out.push((*key, count, w));
            }
        }
        out
    }
}

pub fn shape_key(ctx: &ModuleContext, w: &WitnessRecord) -> Result<ShapeKey> {
    let soc_im = w.image.intersect(ctx.socle()?);
    Ok(ShapeKey {
        dim_a: w.decomposition.a.dim(),
        dim_b: w.decomposition.b.dim(),
        dim_ker: w.kernel.dim(),
        dim_im: w.image.dim(),
        len_im: ctx.length(&w.image)?,
        len_soc_im: ctx.length(&soc_im)?,
    })
}

/// Every hom A → B for one decomposition, as matrices on the bases of A and B.
pub(crate) fn homs_for(ctx: &ModuleContext, a: &Submodule, b: &Submodule) -> Result<Vec<Matrix>> {
    let m = ctx.module();
    let am = m.submodule_module(a);
    let bm = m.submodule_module(b);
    let space = hom_space(&am, &bm)?;
    ctx.guards().hom_scan(space.size())?;
    let f = m.field();
    let mut out = Vec::new();
    space.for_each_element(|v| {
        out.push(Matrix::from_flat(f, a.dim(), b.dim(), v.to_vec()));
        true
    });
    Ok(out)
}

/// The full defect class Def_C4(M) under `rule`.
pub fn def_c4(ctx: &ModuleContext, rule: &dyn WitnessRule) -> Result<C4Defects> {
    let mut out = C4Defects::default();
    for dec in ctx.decompositions()? {
        let dec = Arc::new(dec.clone());
        for f in homs_for(ctx, &dec.a, &dec.b)? {
            let w = record(ctx, &dec, &f, rule);
            if w.is_defect() {
                let key = shape_key(ctx, &w)?;
                *out.classes.entry(key).or_insert(0) += 1;
                out.keys.push(key);
                out.witnesses.push(w);
            }
        }
    }
    Ok(out)
}

/// C4 under `rule`, stopping at the first defect.
pub fn is_c4(ctx: &ModuleContext, rule: &dyn WitnessRule) -> Result<bool> {
    for dec in ctx.decompositions()? {
        for f in homs_for(ctx, &dec.a, &dec.b)? {
            let (injective, kernel, image) = kernel_image(dec, &f);
            if judge(ctx, rule, injective, &kernel, &image).is_some() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Subobject-level defects at one submodule X, with witnesses in X's own coordinates.
#[derive(Debug, Clone)]
pub struct SubmoduleDefects {
    pub submodule: Submodule,
    pub defects: C4Defects,
}

/// Def_C4*(M): the non-C4 members of the lattice with their defect classes.
pub fn def_c4star(ctx: &ModuleContext, rule: &dyn WitnessRule) -> Result<Vec<SubmoduleDefects>> {
    let mut out = Vec::new();
    for x in ctx.lattice()?.members() {
        let defects = if x.is_full() { def_c4(ctx, rule)? } else { def_c4(&ctx.sub_context(x), rule)? };
        if !defects.is_empty() {
            out.push(SubmoduleDefects { submodule: x.clone(), defects });
        }
    }
    Ok(out)
}

pub fn is_c4star(ctx: &ModuleContext, rule: &dyn WitnessRule) -> Result<bool> {
    // M itself first: it is the most likely failure and its context is already warm.
    if !is_c4(ctx, rule)? {
        return Ok(false);
    }
    for x in ctx.lattice()?.members() {
        if !x.is_full() && !is_c4(&ctx.sub_context(x), rule)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::super::MonoImageSplits;
    use super::*;
    use crate::guards::Guards;
    use crate::module::{direct_sum_all, regular_module, RightModule};

    fn ctx(m: &RightModule) -> ModuleContext {
        ModuleContext::new(m, &Guards::default())
    }

    #[test]
    fn c4_examples() {
        let r = dual();
        let reg = ctx(&regular_module(&r));
        assert!(is_c4(&reg, &MonoImageSplits).unwrap());
        assert!(is_c4star(&reg, &MonoImageSplits).unwrap());
        let semisimple = direct_sum_all(&f2(), &vec![regular_module(&f2()); 3]).unwrap();
        assert!(is_c4(&ctx(&semisimple), &MonoImageSplits).unwrap());
        let s = ctx(&simple(&r));
        assert!(is_c4star(&s, &MonoImageSplits).unwrap());
    }

    #[test]
    fn r_plus_s_has_one_shape_class() {
        let m = r_plus_s();
        let c = ctx(&m);
        assert!(!is_c4(&c, &MonoImageSplits).unwrap());
        let defects = def_c4(&c, &MonoImageSplits).unwrap();
        assert_eq!(defects.classes.len(), 1);
        let (key, count, sample) = defects.samples()[0];
        assert_eq!(key, ShapeKey { dim_a: 1, dim_b: 2, dim_ker: 0, dim_im: 1, len_im: 1, len_soc_im: 1 });
        assert_eq!(count, defects.witnesses.len());
        assert!(sample.is_defect());
        let star = def_c4star(&c, &MonoImageSplits).unwrap();
        assert!(star.iter().any(|d| d.submodule.is_full()));
        assert!(!is_c4star(&c, &MonoImageSplits).unwrap());
    }

    #[test]
    fn flags_match_classes() {
        let r = dual();
        for m in [regular_module(&r), r_plus_s(), square(&simple(&r)), square(&regular_module(&r))] {
            let c = ctx(&m);
            assert_eq!(is_c4(&c, &MonoImageSplits).unwrap(), def_c4(&c, &MonoImageSplits).unwrap().is_empty());
            assert_eq!(
                is_c4star(&c, &MonoImageSplits).unwrap(),
                def_c4star(&c, &MonoImageSplits).unwrap().is_empty()
            );
        }
    }
}
