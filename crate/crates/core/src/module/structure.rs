use super::{all_submodules, hom_space, ModuleHom, RightModule, Submodule};
use crate::algebra::same_ring;
use crate::error::{Error, Result};
use crate::guards::Guards;
use crate::linalg::{Matrix, Vector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::cell::RefCell;
use std::collections::HashMap;

/// soc(M) = { v : v·j = 0 for all j ∈ J(R) }.
pub fn socle(m: &RightModule, guards: &Guards) -> Result<Submodule> {
    let j = m.ring().radical(guards)?;
    if j.is_zero() || m.is_zero() {
        return Ok(m.full());
    }
    let d = m.dim();
    let k = j.dim();
    let mut stacked = Matrix::zeros(m.field(), d, d * k);
    for (t, jv) in j.basis().iter().enumerate() {
        let r = m.rho(jv);
        for row in 0..d {
            for col in 0..d {
                stacked.set(row, t * d + col, r.get(row, col));
            }
        }
    }
    Ok(stacked.left_kernel())
}

/// N ≤e M, decided by soc(M) ⊆ N.
pub fn is_essential(m: &RightModule, n: &Submodule, guards: &Guards) -> Result<bool> {
    m.check_submodule(n)?;
    Ok(socle(m, guards)?.is_subspace_of(n))
}

/// X ≤e A for submodules X, A of M: X ⊆ A and soc(A) = A ∩ soc(M) ⊆ X.
pub fn is_essential_in(m: &RightModule, x: &Submodule, a: &Submodule, guards: &Guards) -> Result<bool> {
    if !x.is_subspace_of(a) {
        return Ok(false);
    }
    Ok(a.intersect(&socle(m, guards)?).is_subspace_of(x))
}

/// N ≤e M by the definition: every nonzero cyclic submodule meets N.
pub fn is_essential_by_definition(m: &RightModule, n: &Submodule, guards: &Guards) -> Result<bool> {
    m.check_submodule(n)?;
    guards.lattice(m.field().count(m.dim()))?;
    let mut ok = true;
    crate::linalg::for_each_vector(m.field(), m.dim(), |v| {
        if v.iter().any(|&c| c != 0) && m.cyclic(v).intersect(n).is_zero() {
            ok = false;
        }
        ok
    });
    Ok(ok)
}

/// A complement of N in M if N ≤⊕ M, found as ker h for a retraction h: M → N.
pub fn is_summand(m: &RightModule, n: &Submodule) -> Result<Option<Submodule>> {
    m.check_submodule(n)?;
    Ok(summand_complement(m, n))
}

pub(crate) fn summand_complement(m: &RightModule, n: &Submodule) -> Option<Submodule> {
    if n.is_zero() {
        return Some(m.full());
    }
    if n.is_full() {
        return Some(m.zero_submodule());
    }
    let f = m.field();
    let k = n.dim();
    let nm = m.submodule_module(n);
    let space = hom_space(m, &nm).expect("same ring");
    if space.is_zero() {
        return None;
    }
    let u = n.basis_matrix();
    let homs: Vec<Matrix> =
        space.basis().iter().map(|v| Matrix::from_flat(f, m.dim(), k, v.clone())).collect();
    let rows: Vec<Vector> = homs.iter().map(|h| u.mul(h).flat().to_vec()).collect();
    let system = Matrix::from_rows(f, k * k, &rows);
    let c = system.solve_left(Matrix::identity(f, k).flat())?;
    let mut h = Matrix::zeros(f, m.dim(), k);
    for (hm, &ci) in homs.iter().zip(&c) {
        h.add_scaled(hm, ci);
    }
    Some(h.left_kernel())
}

/// Memoized summand tests on one module.
pub struct SummandCache {
    module: RightModule,
    map: RefCell<HashMap<Submodule, Option<Submodule>>>,
}

impl SummandCache {
    pub fn new(module: &RightModule) -> Self {
        SummandCache { module: module.clone(), map: RefCell::new(HashMap::new()) }
    }

    pub fn module(&self) -> &RightModule {
        &self.module
    }

    pub fn complement(&self, n: &Submodule) -> Option<Submodule> {
        if let Some(c) = self.map.borrow().get(n) {
            return c.clone();
        }
        let c = summand_complement(&self.module, n);
        self.map.borrow_mut().insert(n.clone(), c.clone());
        c
    }

    pub fn is_summand(&self, n: &Submodule) -> bool {
        self.complement(n).is_some()
    }
}

pub fn is_semisimple(m: &RightModule, guards: &Guards) -> Result<bool> {
    Ok(socle(m, guards)?.is_full())
}

/// A simple submodule contained in the nonzero submodule `w`.
pub fn simple_submodule(m: &RightModule, w: &Submodule, guards: &Guards) -> Result<Submodule> {
    let t = w.intersect(&socle(m, guards)?);
    let Some(v) = t.basis().first() else {
        return Err(Error::Precondition("the zero submodule has no simple submodule".into()));
    };
    let mut c = m.cyclic(v);
    loop {
        guards.lattice(c.size())?;
        let mut smaller = None;
        c.for_each_element(|x| {
            if x.iter().any(|&e| e != 0) {
                let cx = m.cyclic(x);
                if cx.dim() < c.dim() {
                    smaller = Some(cx);
                    return false;
                }
            }
            true
        });
        match smaller {
            Some(s) => c = s,
            None => return Ok(c),
        }
    }
}

pub fn is_simple(m: &RightModule, guards: &Guards) -> Result<bool> {
    if m.is_zero() {
        return Ok(false);
    }
    Ok(simple_submodule(m, &m.full(), guards)?.is_full())
}

/// ℓ(M), by repeatedly splitting off a simple submodule and passing to the quotient.
pub fn composition_length(m: &RightModule, guards: &Guards) -> Result<usize> {
    let mut cur = m.clone();
    let mut len = 0;
    while !cur.is_zero() {
        let s = simple_submodule(&cur, &cur.full(), guards)?;
        cur = cur.quotient(&s).0;
        len += 1;
    }
    Ok(len)
}

/// Outcome of an isomorphism search.
#[derive(Debug, Clone)]
pub enum IsoVerdict {
    Isomorphic(ModuleHom),
    NotIsomorphic,
    /// The hom space was too large to exhaust and sampling found no isomorphism.
    Inconclusive { samples: u64 },
}

impl IsoVerdict {
    pub fn is_isomorphic(&self) -> bool {
        matches!(self, IsoVerdict::Isomorphic(_))
    }

    /// True/false, or an `Inconclusive` error.
    pub fn decided(&self) -> Result<bool> {
        match self {
            IsoVerdict::Isomorphic(_) => Ok(true),
            IsoVerdict::NotIsomorphic => Ok(false),
            IsoVerdict::Inconclusive { samples } => {
                Err(Error::Inconclusive(format!("no isomorphism found in {samples} random samples")))
            }
        }
    }
}

pub fn iso_test(m: &RightModule, n: &RightModule, guards: &Guards) -> Result<IsoVerdict> {
    if !same_ring(m.ring(), n.ring()) {
        return Err(Error::RingMismatch);
    }
    if m.dim() != n.dim() {
        return Ok(IsoVerdict::NotIsomorphic);
    }
    if m.is_zero() {
        return Ok(IsoVerdict::Isomorphic(ModuleHom::zero(m, n)));
    }
    if socle(m, guards)?.dim() != socle(n, guards)?.dim() {
        return Ok(IsoVerdict::NotIsomorphic);
    }
    let hmn = hom_space(m, n)?;
    let end_m = hom_space(m, m)?.dim();
    if hmn.dim() != end_m || hom_space(n, n)?.dim() != end_m || hom_space(n, m)?.dim() != end_m {
        return Ok(IsoVerdict::NotIsomorphic);
    }
    if composition_length(m, guards)? != composition_length(n, guards)? {
        return Ok(IsoVerdict::NotIsomorphic);
    }
    let f = m.field();
    let d = m.dim();
    let as_hom = |v: &[u32]| Matrix::from_flat(f, d, d, v.to_vec());
    if hmn.size() <= guards.max_iso_search as u128 {
        let mut found = None;
        hmn.for_each_element(|v| {
            let x = as_hom(v);
            if x.is_invertible() {
                found = Some(x);
                return false;
            }
            true
        });
        return Ok(match found {
            Some(x) => IsoVerdict::Isomorphic(ModuleHom::new_unchecked(m, n, x)),
            None => IsoVerdict::NotIsomorphic,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(guards.rng_seed);
    for _ in 0..guards.iso_sample_budget {
        let coeffs: Vec<u32> = (0..hmn.dim()).map(|_| rng.gen_range(0..f.p())).collect();
        let x = as_hom(&hmn.combine(&coeffs));
        if x.is_invertible() {
            return Ok(IsoVerdict::Isomorphic(ModuleHom::new_unchecked(m, n, x)));
        }
    }
    Ok(IsoVerdict::Inconclusive { samples: guards.iso_sample_budget })
}

pub fn hom_vanishes(m: &RightModule, n: &RightModule) -> Result<bool> {
    Ok(hom_space(m, n)?.is_zero())
}

/// Hom(X, Y) = 0 for every X ≤ M and Y ≤ N.
pub fn is_orthogonal(m: &RightModule, n: &RightModule, guards: &Guards) -> Result<bool> {
    if !same_ring(m.ring(), n.ring()) {
        return Err(Error::RingMismatch);
    }
    let lm = all_submodules(m, guards)?;
    let ln = all_submodules(n, guards)?;
    for x in lm.members().iter().filter(|x| !x.is_zero()) {
        let xm = m.submodule_module(x);
        for y in ln.members().iter().filter(|y| !y.is_zero()) {
            if !hom_space(&xm, &n.submodule_module(y))?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn submodules_isomorphic(m: &RightModule, x: &Submodule, y: &Submodule, guards: &Guards) -> Result<bool> {
    if x.dim() != y.dim() {
        return Ok(false);
    }
    iso_test(&m.submodule_module(x), &m.submodule_module(y), guards)?.decided()
}

/// No nonzero direct summand of the form X ⊕ X′ with X ≅ X′.
pub fn is_summand_square_free(m: &RightModule, guards: &Guards) -> Result<bool> {
    let lattice = all_submodules(m, guards)?;
    let cache = SummandCache::new(m);
    let summands: Vec<&Submodule> =
        lattice.members().iter().filter(|s| !s.is_zero() && cache.is_summand(s)).collect();
    for (i, x) in summands.iter().enumerate() {
        for y in &summands[i + 1..] {
            if x.dim() != y.dim() || !x.intersect(y).is_zero() {
                continue;
            }
            if cache.is_summand(&x.sum(y)) && submodules_isomorphic(m, x, y, guards)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// No nonzero submodule of the form X ⊕ X′ with X ≅ X′. Restricting to simple X loses
/// nothing, since a simple X₁ ≤ X and its image in X′ form such a pair.
pub fn is_square_free(m: &RightModule, guards: &Guards) -> Result<bool> {
    let lattice = all_submodules(m, guards)?;
    let simples = lattice.minimal();
    for (i, x) in simples.iter().enumerate() {
        for y in &simples[i + 1..] {
            if x.intersect(y).is_zero() && submodules_isomorphic(m, x, y, guards)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct ClassicalPredicates {
    pub c2: bool,
    pub c3: bool,
    pub cs: bool,
    pub weak_cs: bool,
    pub continuous: bool,
    pub directly_finite: bool,
}

pub fn classical_predicates(m: &RightModule, guards: &Guards) -> Result<ClassicalPredicates> {
    let lattice = all_submodules(m, guards)?;
    let soc = socle(m, guards)?;
    let cache = SummandCache::new(m);
    let members = lattice.members();
    let summands: Vec<&Submodule> = members.iter().filter(|s| cache.is_summand(s)).collect();
    let essential_in_summand = |x: &Submodule| -> bool {
        summands.iter().any(|a| x.is_subspace_of(a) && a.intersect(&soc).is_subspace_of(x))
    };

    let mut c2 = true;
    'outer: for n in members.iter().filter(|n| !cache.is_summand(n)) {
        for d in summands.iter().filter(|d| d.dim() == n.dim()) {
            if submodules_isomorphic(m, n, d, guards)? {
                c2 = false;
                break 'outer;
            }
        }
    }
    let c3 = summands.iter().enumerate().all(|(i, a)| {
        summands[i + 1..].iter().all(|b| !a.intersect(b).is_zero() || cache.is_summand(&a.sum(b)))
    });
    let cs = members.iter().all(|x| essential_in_summand(x));
    let weak_cs = members.iter().filter(|x| x.is_subspace_of(&soc)).all(|x| essential_in_summand(x));
    // M ≅ M ⊕ N forces dim N = 0 for finite-dimensional M.
    let directly_finite = true;
    Ok(ClassicalPredicates { c2, c3, cs, weak_cs, continuous: cs && c2, directly_finite })
}

/// No L ⊋ N with N ≤e L.
pub fn is_closed(m: &RightModule, n: &Submodule, guards: &Guards) -> Result<bool> {
    m.check_submodule(n)?;
    let lattice = all_submodules(m, guards)?;
    let soc = socle(m, guards)?;
    Ok(!lattice
        .members()
        .iter()
        .any(|l| l.dim() > n.dim() && n.is_subspace_of(l) && l.intersect(&soc).is_subspace_of(n)))
}
