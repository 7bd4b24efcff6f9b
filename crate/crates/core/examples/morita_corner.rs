//! Full and non-full corners: e₁₁ in M₂(𝔽₂) is accepted, (1, 0) in 𝔽₂ × 𝔽₂ is rejected.

use c4lab::algebra::{build_algebra, AlgebraSpec};
use c4lab::conditions::MonoImageSplits;
use c4lab::module::regular_module;
use c4lab::morita::{morita_pair_check, Condition, Progenerator, Realization};
use c4lab::Guards;

fn main() -> c4lab::Result<()> {
    let g = Guards::default();
    let f2 = AlgebraSpec::Field { p: 2 };
    let m2 = build_algebra(&AlgebraSpec::Matrix { base: Box::new(f2.clone()), n: 2 })?;
    let e11 = vec![1, 0, 0, 0];
    let p = Progenerator::corner(&m2, &e11, &g)?;
    println!("e11·M2(F2): dim {}, End has dim {}, trace ideal dim {}", p.module.dim(), p.end_ring().dim(), p.trace_dim);
    let cmp = morita_pair_check(
        &m2,
        &Realization::Corner(e11),
        &regular_module(&m2),
        "M2(F2)",
        &Condition::all_basic(),
        &MonoImageSplits,
        &g,
    )?;
    print!("{}", cmp.to_text());

    let prod = build_algebra(&AlgebraSpec::Product(Box::new(f2.clone()), Box::new(f2)))?;
    match Progenerator::corner(&prod, &[1, 0], &g) {
        Ok(_) => println!("unexpected: (1,0) accepted"),
        Err(e) => println!("F2xF2 with e = (1,0): {e}"),
    }
    Ok(())
}
