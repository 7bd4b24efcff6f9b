//! Builds the corpus rings and prints dimension, radical and idempotent counts.

use c4lab::algebra::jacobson_radical;
use c4lab::harness::corpus_rings;
use c4lab::Guards;

fn main() -> c4lab::Result<()> {
    let g = Guards::default();
    for r in corpus_rings() {
        let ring = r.build()?;
        let j = jacobson_radical(&ring, &g)?;
        let idem = ring.idempotents(&g)?;
        println!(
            "{:<18} dim {:>2}  dim J = {:>2}  nilpotency {:?}  idempotents {}",
            r.name,
            ring.dim(),
            j.dim(),
            j.nilpotency_index(),
            idem.len()
        );
    }
    Ok(())
}
