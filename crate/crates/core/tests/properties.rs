use c4lab::algebra::{build_algebra, matrix_algebra, AlgebraSpec, Ring};
use c4lab::conditions::{analyze, def_c4, is_c4, is_c4star, is_semiweak_cs, obstruction_index, AnalyzeOptions, ModuleContext, MonoImageSplits, Reading};
use c4lab::harness::{corpus_builtin, corpus_rings};
use c4lab::linalg::{Matrix, Subspace, Vector};
use c4lab::module::{all_submodules, is_essential, regular_module, socle, RightModule};
use c4lab::morita::{apply_functor, transport_submodule, Progenerator};
use c4lab::Guards;
use proptest::prelude::*;

fn ring(i: usize) -> Ring {
    corpus_rings()[i % 7].build().unwrap()
}

fn small_corpus() -> Vec<(String, RightModule)> {
    let g = Guards::default();
    let rings = corpus_rings();
    corpus_builtin()
        .into_iter()
        .filter(|e| e.ring != "M2(F2[x]/(x^2))")
        .map(|e| {
            let r = rings.iter().find(|r| r.name == e.ring).unwrap().build().unwrap();
            let m = e.build(&r, &g).unwrap();
            (e.name, m)
        })
        .collect()
}

fn element(r: &Ring, seed: &[u32]) -> Vector {
    (0..r.dim()).map(|i| seed[i % seed.len()] % r.p()).collect()
}

/// The same module written in the basis given by the rows of an invertible P.
fn rebase(m: &RightModule, p: &Matrix) -> RightModule {
    let inv = p.inverse().unwrap();
    let action = m.actions().iter().map(|a| p.mul(a).mul(&inv)).collect();
    RightModule::new(m.ring(), action).unwrap()
}

fn invertible(p: u32, n: usize, entries: &[u32]) -> Option<Matrix> {
    let f = c4lab::PrimeField::new(p as u64).unwrap();
    let data: Vec<u32> = (0..n * n).map(|i| entries[i % entries.len()] % p).collect();
    let m = Matrix::from_flat(f, n, n, data);
    m.is_invertible().then_some(m)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn right_action_is_multiplicative(ri in 0usize..7, a in prop::collection::vec(0u32..3, 1..9), b in prop::collection::vec(0u32..3, 1..9)) {
        let r = ring(ri);
        let m = regular_module(&r);
        let (x, y) = (element(&r, &a), element(&r, &b));
        let lhs = m.rho(&r.mul(&x, &y));
        let rhs = m.rho(&x).mul(&m.rho(&y));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn subspace_dimension_formula(
        n in 1usize..6,
        u in prop::collection::vec(prop::collection::vec(0u32..2, 6), 0..5),
        v in prop::collection::vec(prop::collection::vec(0u32..2, 6), 0..5),
    ) {
        let f = c4lab::PrimeField::new(2).unwrap();
        let cut = |s: &Vec<Vec<u32>>| Subspace::from_vectors(f, n, s.iter().map(|x| x[..n].to_vec()));
        let (a, b) = (cut(&u), cut(&v));
        prop_assert_eq!(a.sum(&b).dim() + a.intersect(&b).dim(), a.dim() + b.dim());
        prop_assert!(a.intersect(&b).is_subspace_of(&a));
        prop_assert_eq!(Subspace::from_vectors(f, n, a.basis().iter().rev().cloned()), a.clone());
    }

    #[test]
    fn essential_iff_contains_socle(idx in 0usize..40, pick in 0usize..1000) {
        let corpus = small_corpus();
        let (_, m) = &corpus[idx % corpus.len()];
        let g = Guards::default();
        let lattice = all_submodules(m, &g).unwrap();
        let n = &lattice.members()[pick % lattice.len()];
        let soc = socle(m, &g).unwrap();
        prop_assert_eq!(is_essential(m, n, &g).unwrap(), soc.is_subspace_of(n));
        for x in lattice.members() {
            prop_assert!(m.is_submodule(x));
            prop_assert!(lattice.index_of(&x.sum(n)).is_some());
            prop_assert!(lattice.index_of(&x.intersect(n)).is_some());
        }
    }

    #[test]
    fn conditions_are_isomorphism_invariant(idx in 0usize..40, entries in prop::collection::vec(0u32..3, 1..40)) {
        let corpus = small_corpus();
        let (name, m) = &corpus[idx % corpus.len()];
        prop_assume!(m.dim() > 0 && m.dim() <= 4);
        let Some(p) = invertible(m.ring().p(), m.dim(), &entries) else { return Ok(()); };
        let n = rebase(m, &p);
        let g = Guards::default();
        let (a, b) = (ModuleContext::new(m, &g), ModuleContext::new(&n, &g));
        prop_assert_eq!(is_c4(&a, &MonoImageSplits).unwrap(), is_c4(&b, &MonoImageSplits).unwrap(), "{}", name);
        prop_assert_eq!(is_c4star(&a, &MonoImageSplits).unwrap(), is_c4star(&b, &MonoImageSplits).unwrap(), "{}", name);
        prop_assert_eq!(
            is_semiweak_cs(&a, Reading::Submodule).unwrap(),
            is_semiweak_cs(&b, Reading::Submodule).unwrap(),
            "{}", name
        );
        prop_assert_eq!(obstruction_index(&a).unwrap(), obstruction_index(&b).unwrap(), "{}", name);
        prop_assert_eq!(
            def_c4(&a, &MonoImageSplits).unwrap().classes,
            def_c4(&b, &MonoImageSplits).unwrap().classes,
            "{}", name
        );
    }

    #[test]
    fn matrix_certificate_is_multiplicative(ri in 0usize..7, a in prop::collection::vec(0u32..3, 1..20), b in prop::collection::vec(0u32..3, 1..20)) {
        let r = ring(ri);
        let p = Progenerator::free_power(&r, 2, &Guards::default()).unwrap();
        let t = &p.model;
        let (x, y) = (element(t, &a), element(t, &b));
        let s = p.end_ring();
        let th = |v: &[u32]| p.theta.left_apply(v);
        prop_assert_eq!(th(&t.mul(&x, &y)), s.mul(&th(&x), &th(&y)));
    }

    #[test]
    fn transport_preserves_sums_and_intersections(idx in 0usize..40, i in 0usize..100, j in 0usize..100) {
        let corpus = small_corpus();
        let (_, m) = &corpus[idx % corpus.len()];
        let g = Guards::default();
        let p = Progenerator::free_power(m.ring(), 2, &g).unwrap();
        let t = apply_functor(&p, m).unwrap();
        let lattice = all_submodules(m, &g).unwrap();
        let a = &lattice.members()[i % lattice.len()];
        let b = &lattice.members()[j % lattice.len()];
        let f = |s: &Subspace| transport_submodule(&t, s).unwrap();
        prop_assert_eq!(f(&a.sum(b)), f(a).sum(&f(b)));
        prop_assert_eq!(f(&a.intersect(b)), f(a).intersect(&f(b)));
        prop_assert_eq!(f(a).dim(), 2 * a.dim());
    }
}

#[test]
fn defect_witnesses_are_injective_homs() {
    let g = Guards::default();
    let mut seen = 0;
    for (name, m) in small_corpus() {
        let d = def_c4(&ModuleContext::new(&m, &g), &MonoImageSplits).unwrap();
        for w in d.witnesses.iter().filter(|w| w.is_defect()) {
            let (a, b) = (w.f.source(), w.f.target());
            for (x, y) in a.actions().iter().zip(b.actions()) {
                assert_eq!(x.mul(w.f.matrix()), w.f.matrix().mul(y), "{name}");
            }
            assert!(w.f.is_injective(), "{name}");
            assert!(m.is_submodule(&w.image) && w.image.dim() == a.dim(), "{name}");
            seen += 1;
        }
    }
    assert!(seen > 0);
}

#[test]
fn reports_are_byte_identical() {
    let g = Guards::default();
    for (name, m) in small_corpus().into_iter().take(12) {
        let a = analyze(&m, &name, &g, &AnalyzeOptions::default()).unwrap();
        let b = analyze(&m, &name, &g, &AnalyzeOptions::default()).unwrap();
        assert_eq!(a.to_json(), b.to_json());
        assert_eq!(a.to_text(), b.to_text());
    }
}

#[test]
fn matrix_ring_of_matrix_ring_has_expected_dimension() {
    let f2 = build_algebra(&AlgebraSpec::Field { p: 2 }).unwrap();
    let m2 = matrix_algebra(&f2, 2).unwrap();
    assert_eq!(matrix_algebra(&m2, 2).unwrap().dim(), 16);
}
