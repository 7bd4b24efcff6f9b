//! Compares every condition on M and on Hom(R², M) over M₂(R), for R = 𝔽₂[x]/(x²).

use c4lab::algebra::{build_algebra, AlgebraSpec};
use c4lab::conditions::MonoImageSplits;
use c4lab::module::{direct_sum, regular_module};
use c4lab::morita::{morita_pair_check, Condition, Progenerator, Realization};
use c4lab::Guards;

fn main() -> c4lab::Result<()> {
    let g = Guards::default();
    let r = build_algebra(&AlgebraSpec::PolyQuotient { p: 2, coeffs: vec![0, 0, 1] })?;
    let p = Progenerator::free_power(&r, 2, &g)?;
    println!("End(R²) has dim {}, certificates hold: {}", p.end_ring().dim(), p.certificates_hold());

    let reg = regular_module(&r);
    let s = reg.quotient(&reg.cyclic(&[0, 1])).0;
    let m = direct_sum(&reg, &s)?.module;
    let mut conditions = Condition::all_basic();
    conditions.push(Condition::parse("ext:3:2")?);
    let cmp = morita_pair_check(&r, &Realization::Matrix(2), &m, "R+R/(x)", &conditions, &MonoImageSplits, &g)?;
    print!("{}", cmp.to_text());
    Ok(())
}
