//! The defect class of R ⊕ R/(x) over 𝔽₂[x]/(x²) under both registered witness rules.

use c4lab::algebra::{build_algebra, AlgebraSpec};
use c4lab::conditions::{def_c4, ModuleContext, RuleRegistry};
use c4lab::module::{direct_sum, regular_module};
use c4lab::Guards;

fn main() -> c4lab::Result<()> {
    let r = build_algebra(&AlgebraSpec::PolyQuotient { p: 2, coeffs: vec![0, 0, 1] })?;
    let reg = regular_module(&r);
    let s = reg.quotient(&reg.cyclic(&[0, 1])).0;
    let m = direct_sum(&reg, &s)?.module;
    let ctx = ModuleContext::new(&m, &Guards::default());

    let registry = RuleRegistry::default();
    for id in registry.ids() {
        let rule = registry.get(&id)?;
        let d = def_c4(&ctx, rule.as_ref())?;
        println!("{id}: {} defect witnesses in {} shape classes", d.witnesses.len(), d.classes.len());
        for (key, count, w) in d.samples() {
            println!("  {key:?} x{count}: A={:?} B={:?} im={:?}", w.decomposition.a.basis(), w.decomposition.b.basis(), w.image.basis());
            println!("    {}", w.detail.as_deref().unwrap_or(""));
        }
    }
    Ok(())
}
