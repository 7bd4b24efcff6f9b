//! Splits strongly C4* corpus modules as P ⊕ Q with P semisimple and Q summand-square-free.

use c4lab::conditions::{decompose_strong, is_strongly_c4star, ModuleContext, MonoImageSplits};
use c4lab::harness::{corpus_builtin, corpus_rings};
use c4lab::Guards;

fn main() -> c4lab::Result<()> {
    let g = Guards::default();
    let rings = corpus_rings();
    for e in corpus_builtin() {
        let ring = rings.iter().find(|r| r.name == e.ring).unwrap().build()?;
        let m = e.build(&ring, &g)?;
        let ctx = ModuleContext::new(&m, &g);
        if !is_strongly_c4star(&ctx, &MonoImageSplits)? {
            println!("{:<32} not strongly C4*", e.name);
            continue;
        }
        let d = decompose_strong(&ctx, &MonoImageSplits)?;
        println!("{:<32} dim P = {}  dim Q = {}", e.name, d.p.dim(), d.q.dim());
    }
    Ok(())
}
