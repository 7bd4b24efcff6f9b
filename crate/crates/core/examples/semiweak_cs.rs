//! Obstruction pairs and the obstruction index, including the ring where the two readings
//! of semi-weak-CS part ways.

use c4lab::conditions::{obs_swcs, ModuleContext, Reading};
use c4lab::harness::square_zero_plane;
use c4lab::module::{is_summand_square_free, regular_module};
use c4lab::Guards;

fn main() -> c4lab::Result<()> {
    let g = Guards::default();
    let plane = square_zero_plane();
    let r = plane.build()?;
    let m = regular_module(&r);
    let ctx = ModuleContext::new(&m, &g);
    println!("{}: summand-square-free = {}", plane.name, is_summand_square_free(&m, &g)?);
    for reading in [Reading::Submodule, Reading::LiteralSummand] {
        let a = obs_swcs(&ctx, reading)?;
        println!("{reading:?}: {} admissible pairs, {} obstructions, index {}", a.admissible, a.obstructions.len(), a.index());
        for p in &a.obstructions {
            println!("  X={:?} Y={:?} lengths {:?} minimal {}", p.x.basis(), p.y.basis(), p.lengths, p.minimal);
        }
    }
    Ok(())
}
