use super::Progenerator;
use crate::algebra::{same_ring, Ring};
use crate::conditions::{Decomposition, ModuleContext, WitnessRecord, WitnessRule};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace, Vector};
use crate::module::{hom_space, ModuleHom, RightModule, Submodule};
use std::collections::HashMap;
use std::sync::Mutex;

/// F(M) = Hom_R(P, M) as a right S-module, with the correspondence N ↦ Hom(P, N).
pub struct TransportedModule<'p> {
    pub progenerator: &'p Progenerator,
    pub source: RightModule,
    pub image: RightModule,
    /// Hom(P, M) as flattened dim P × dim M matrices; image coordinates are coordinates here.
    pub space: Subspace,
    cache: Mutex<HashMap<Submodule, Submodule>>,
}

impl<'p> TransportedModule<'p> {
    /// The homomorphism P → M with image coordinates `c`.
    pub fn hom_matrix(&self, c: &[u32]) -> Matrix {
        let p = self.progenerator.module.dim();
        Matrix::from_flat(self.source.field(), p, self.source.dim(), self.space.combine(c))
    }

    pub fn coords_of(&self, phi: &Matrix) -> Vector {
        self.space.coords(phi.flat())
    }
}

pub fn apply_functor<'p>(prog: &'p Progenerator, m: &RightModule) -> Result<TransportedModule<'p>> {
    if !same_ring(&prog.ring, m.ring()) {
        return Err(Error::RingMismatch);
    }
    let space = hom_space(&prog.module, m)?;
    let f = m.field();
    let p = prog.module.dim();
    let h = space.dim();
    let phis: Vec<Matrix> = space.basis().iter().map(|v| Matrix::from_flat(f, p, m.dim(), v.clone())).collect();
    // φ·s = φ ∘ s, whose matrix is S·Φ.
    let action: Vec<Matrix> = prog
        .end
        .basis
        .iter()
        .map(|s| {
            let rows: Vec<Vector> = phis.iter().map(|phi| space.coords(s.mul(phi).flat())).collect();
            Matrix::from_rows(f, h, &rows)
        })
        .collect();
    let image = RightModule::new(prog.end_ring(), action)?;
    Ok(TransportedModule { progenerator: prog, source: m.clone(), image, space, cache: Mutex::new(HashMap::new()) })
}

/// Hom(P, N) ⊆ Hom(P, M): the φ whose rows all lie in N.
pub fn transport_submodule(t: &TransportedModule, n: &Submodule) -> Result<Submodule> {
    t.source.check_submodule(n)?;
    if let Some(s) = t.cache.lock().unwrap().get(n) {
        return Ok(s.clone());
    }
    let f = t.source.field();
    let ann = n.annihilator();
    let p = t.progenerator.module.dim();
    let rows: Vec<Vector> = t
        .space
        .basis()
        .iter()
        .map(|v| Matrix::from_flat(f, p, t.source.dim(), v.clone()).mul(&ann).flat().to_vec())
        .collect();
    let s = if ann.cols() == 0 {
        Subspace::full(f, t.space.dim())
    } else {
        Matrix::from_rows(f, p * ann.cols(), &rows).left_kernel()
    };
    t.cache.lock().unwrap().insert(n.clone(), s.clone());
    Ok(s)
}

/// F(g) = g ∘ −: F(M) → F(M′).
pub fn transport_hom(t: &TransportedModule, u: &TransportedModule, g: &ModuleHom) -> Result<ModuleHom> {
    if g.source().dim() != t.source.dim() || g.target().dim() != u.source.dim() {
        return Err(Error::DimensionMismatch { expected: t.source.dim(), found: g.source().dim() });
    }
    let f = t.source.field();
    let p = t.progenerator.module.dim();
    let rows: Vec<Vector> = t
        .space
        .basis()
        .iter()
        .map(|v| u.coords_of(&Matrix::from_flat(f, p, t.source.dim(), v.clone()).mul(g.matrix())))
        .collect();
    ModuleHom::new(&t.image, &u.image, Matrix::from_rows(f, u.space.dim(), &rows))
}

/// Transports a witness on M to one on F(M) and re-judges it there. The map f: A → B is
/// extended to the endomorphism g = π_A f ι_B of M, transported, and restricted to F(A).
pub fn transport_witness(
    t: &TransportedModule,
    target_ctx: &ModuleContext,
    w: &WitnessRecord,
    rule: &dyn WitnessRule,
) -> Result<WitnessRecord> {
    let m = &t.source;
    let f = m.field();
    let dec = &w.decomposition;
    let ub = dec.b.basis_matrix();
    // π_A in A-coordinates: v ↦ coords_A(v·e).
    let e = dec.idempotent.matrix();
    let pi_rows: Vec<Vector> = (0..m.dim()).map(|i| dec.a.coords(e.row(i))).collect();
    let pi = Matrix::from_rows(f, dec.a.dim(), &pi_rows);
    let g = pi.mul(w.f.matrix()).mul(&ub);
    let g = ModuleHom::new(m, m, g)?;
    let fg = transport_hom(t, t, &g)?;
    let fa = transport_submodule(t, &dec.a)?;
    let fb = transport_submodule(t, &dec.b)?;
    let fe = transport_hom(t, t, &dec.idempotent)?;
    let tdec = Decomposition::from_idempotent(&t.image, fe.matrix().clone())?;
    if tdec.a != fa || tdec.b != fb {
        return Err(Error::TheoremViolation("transported idempotent does not split along F(A), F(B)".into()));
    }
    let rows: Vec<Vector> = fa.basis().iter().map(|v| fb.coords(&fg.apply(v))).collect();
    let tf = Matrix::from_rows(f, fb.dim(), &rows);
    let source = t.image.submodule_module(&fa);
    let target = t.image.submodule_module(&fb);
    let tf = ModuleHom::new(&source, &target, tf)?;
    crate::conditions::evaluate_witness_in(target_ctx, &tdec, &tf, rule)
}

/// Restriction of scalars along θ: T → S, where row i of θ is the image of basis
/// element i of T in S-coordinates.
pub fn restrict_scalars(x: &RightModule, t: &Ring, theta: &Matrix) -> Result<RightModule> {
    if theta.shape() != (t.dim(), x.ring().dim()) {
        return Err(Error::DimensionMismatch { expected: t.dim(), found: theta.rows() });
    }
    let action: Vec<Matrix> = (0..t.dim()).map(|i| x.rho(theta.row(i))).collect();
    RightModule::new(t, action)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{build_algebra, AlgebraSpec};
    use crate::conditions::{def_c4, MonoImageSplits};
    use crate::guards::Guards;
    use crate::module::{direct_sum, is_simple, regular_module};

    fn dual() -> Ring {
        build_algebra(&AlgebraSpec::PolyQuotient { p: 2, coeffs: vec![0, 0, 1] }).unwrap()
    }

    fn r_plus_s(r: &Ring) -> RightModule {
        let reg = regular_module(r);
        let s = reg.quotient(&reg.cyclic(&[0, 1])).0;
        direct_sum(&reg, &s).unwrap().module
    }

    #[test]
    fn dimensions_and_simplicity() {
        let g = Guards::default();
        let f2 = build_algebra(&AlgebraSpec::Field { p: 2 }).unwrap();
        let p = Progenerator::free_power(&f2, 2, &g).unwrap();
        let t = apply_functor(&p, &regular_module(&f2)).unwrap();
        assert_eq!(t.image.dim(), 2);
        assert!(is_simple(&t.image, &g).unwrap());

        let r = dual();
        let p2 = Progenerator::free_power(&r, 2, &g).unwrap();
        let m = r_plus_s(&r);
        let t = apply_functor(&p2, &m).unwrap();
        assert_eq!(t.image.dim(), 2 * m.dim());
        assert!(transport_submodule(&t, &m.zero_submodule()).unwrap().is_zero());
        assert!(transport_submodule(&t, &m.full()).unwrap().is_full());
        let soc = m.cyclic(&[0, 1, 0]);
        let ts = transport_submodule(&t, &soc).unwrap();
        assert_eq!(ts.dim(), 2);
        assert!(t.image.is_submodule(&ts));
    }

    #[test]
    fn functoriality() {
        let g = Guards::default();
        let r = dual();
        let p = Progenerator::free_power(&r, 2, &g).unwrap();
        let m = r_plus_s(&r);
        let t = apply_functor(&p, &m).unwrap();
        let id = transport_hom(&t, &t, &ModuleHom::identity(&m)).unwrap();
        assert!(id.matrix().is_identity());
        let homs = crate::module::hom_basis(&m, &m).unwrap();
        for a in &homs {
            for b in &homs {
                let ab = transport_hom(&t, &t, &a.then(b).unwrap()).unwrap();
                let fa_fb = transport_hom(&t, &t, a).unwrap().then(&transport_hom(&t, &t, b).unwrap()).unwrap();
                assert_eq!(ab.matrix(), fa_fb.matrix());
            }
        }
    }

    #[test]
    fn defect_witness_survives_transport() {
        let g = Guards::default();
        let r = dual();
        let p = Progenerator::free_power(&r, 2, &g).unwrap();
        let m = r_plus_s(&r);
        let t = apply_functor(&p, &m).unwrap();
        let src = ModuleContext::new(&m, &g);
        let tgt = ModuleContext::new(&t.image, &g);
        let defects = def_c4(&src, &MonoImageSplits).unwrap();
        assert!(!defects.is_empty());
        for w in defects.witnesses.iter().take(4) {
            let tw = transport_witness(&t, &tgt, w, &MonoImageSplits).unwrap();
            assert!(tw.is_defect());
        }
    }

    #[test]
    fn restriction_along_the_matrix_certificate() {
        let g = Guards::default();
        let r = dual();
        let p = Progenerator::free_power(&r, 2, &g).unwrap();
        let t = apply_functor(&p, &regular_module(&r)).unwrap();
        let back = restrict_scalars(&t.image, &p.model, &p.theta).unwrap();
        assert_eq!(back.dim(), 4);
        assert!(back.validate().is_ok());
    }
}
