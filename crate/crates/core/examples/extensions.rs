//! Arity and depth extensions on the regular module and on R² over 𝔽₂[x]/(x²).

use c4lab::algebra::{build_algebra, AlgebraSpec};
use c4lab::conditions::{check_extended_grid, is_c4_m, ModuleContext, MonoImageSplits, Strictness};
use c4lab::module::{direct_sum_all, regular_module};
use c4lab::Guards;

fn main() -> c4lab::Result<()> {
    let g = Guards::default();
    let r = build_algebra(&AlgebraSpec::PolyQuotient { p: 2, coeffs: vec![0, 0, 1] })?;
    let reg = regular_module(&r);
    let square = direct_sum_all(&r, &[reg.clone(), reg.clone()])?;
    let grid: Vec<(usize, usize, Strictness)> = [Strictness::Strict, Strictness::NonStrict]
        .into_iter()
        .flat_map(|s| [(2, 1, s), (3, 1, s), (2, 2, s), (3, 3, s)])
        .collect();
    for (name, m) in [("R", &reg), ("R+R", &square)] {
        let ctx = ModuleContext::new(m, &g);
        println!("{name}: C4[2]={} C4[3]={}", is_c4_m(&ctx, 2, &MonoImageSplits)?, is_c4_m(&ctx, 3, &MonoImageSplits)?);
        for v in check_extended_grid(&ctx, &grid, &MonoImageSplits)? {
            println!(
                "  m={} d={} {:?}: C4*(d)={} C4*[m](d)={} swCS(d)={} strong(d)={}",
                v.m, v.d, v.strictness, v.c4star_d, v.c4star_m_d, v.swcs_depth_d, v.strong_depth_d
            );
        }
    }
    Ok(())
}
