//! Ring-level C4*: every right ideal is C4, checked by an independent ideal scan.

use c4lab::conditions::MonoImageSplits;
use c4lab::harness::{corpus_rings, right_ideal_scan};
use c4lab::Guards;

fn main() -> c4lab::Result<()> {
    let g = Guards::default();
    for r in corpus_rings().into_iter().take(7) {
        let scan = right_ideal_scan(&r.build()?, &MonoImageSplits, &g)?;
        println!("{:<14} {:>3} right ideals, {} not C4, right C4*: {}", r.name, scan.ideals, scan.failing.len(), scan.all_c4);
    }
    Ok(())
}
