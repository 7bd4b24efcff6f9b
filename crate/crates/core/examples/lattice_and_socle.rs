//! Submodule lattice of R ⊕ R/(x) over the dual numbers, with socle and both essentiality oracles.

use c4lab::algebra::{build_algebra, AlgebraSpec};
use c4lab::module::{all_submodules, direct_sum, is_essential, is_essential_by_definition, regular_module, socle};
use c4lab::Guards;

fn main() -> c4lab::Result<()> {
    let g = Guards::default();
    let r = build_algebra(&AlgebraSpec::PolyQuotient { p: 2, coeffs: vec![0, 0, 1] })?;
    let reg = regular_module(&r);
    let s = reg.quotient(&reg.cyclic(&[0, 1])).0;
    let m = direct_sum(&reg, &s)?.module;

    let lattice = all_submodules(&m, &g)?;
    let soc = socle(&m, &g)?;
    println!("{} submodules, socle of dim {}", lattice.len(), soc.dim());
    for n in lattice.members() {
        let a = is_essential(&m, n, &g)?;
        let b = is_essential_by_definition(&m, n, &g)?;
        println!("  dim {}  basis {:?}  essential {a} (definition: {b})", n.dim(), n.basis());
    }
    Ok(())
}
