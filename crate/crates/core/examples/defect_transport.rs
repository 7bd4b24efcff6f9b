//! Sends each C4 defect witness of R ⊕ R/(x) through Hom(R², −) and re-judges it, then
//! compares the defect classes and the transport lemmas.

use c4lab::algebra::{build_algebra, AlgebraSpec};
use c4lab::conditions::{def_c4, ModuleContext, MonoImageSplits};
use c4lab::module::{direct_sum, regular_module};
use c4lab::morita::{apply_functor, defect_bijection_check, transport_lemma_check, transport_witness, Progenerator};
use c4lab::Guards;

fn main() -> c4lab::Result<()> {
    let g = Guards::default();
    let r = build_algebra(&AlgebraSpec::PolyQuotient { p: 2, coeffs: vec![0, 0, 1] })?;
    let reg = regular_module(&r);
    let s = reg.quotient(&reg.cyclic(&[0, 1])).0;
    let m = direct_sum(&reg, &s)?.module;
    let p = Progenerator::free_power(&r, 2, &g)?;
    let t = apply_functor(&p, &m)?;

    let src = ModuleContext::new(&m, &g);
    let tgt = ModuleContext::new(&t.image, &g);
    for w in &def_c4(&src, &MonoImageSplits)?.witnesses {
        let tw = transport_witness(&t, &tgt, w, &MonoImageSplits)?;
        println!("im f = {:?}  ->  F(im f) of dim {}, still a defect: {}", w.image.basis(), tw.image.dim(), tw.is_defect());
    }
    println!("{:?}", defect_bijection_check(&p, &m, &MonoImageSplits, &g)?);
    println!("{:?}", transport_lemma_check(&p, &m, &g)?);
    Ok(())
}
