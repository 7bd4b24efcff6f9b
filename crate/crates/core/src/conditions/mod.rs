//! C4, C4*, semi-weak-CS and strongly C4*, with their defect classes and depth/arity extensions.

mod c4;
mod extended;
mod report;
mod rules;
mod strong;
mod swcs;

pub use c4::{def_c4, def_c4star, is_c4, is_c4star, C4Defects, ShapeKey, SubmoduleDefects};
pub use extended::{chain_starts, check_extended, check_extended_grid, is_c4_m, ExtendedVerdict, Strictness};
pub use report::{analyze, AnalyzeOptions, CertificateRow, DefectReport, Flags, PairRow, PartialNote, ShapeClassRow, SubmoduleDefectRow, WitnessSample};
pub use rules::{
    evaluate_witness, evaluate_witness_in, KernelSummandImageSplits, MonoImageSplits, RuleRegistry, Verdict, WitnessFacts,
    WitnessRecord, WitnessRule,
};
pub use strong::{decompose_strong, is_strongly_c4star, strong_defect, StrongDecomposition, StrongDefect};
pub use swcs::{is_semiweak_cs, obs_swcs, obstruction_index, ObstructionIndex, ObstructionPair, Reading, SwcsAnalysis};

use crate::error::{Error, Result};
use crate::guards::Guards;
use crate::linalg::Matrix;
use crate::module::{
    all_submodules, composition_length, hom_space, socle, summand_complement, ModuleHom, RightModule,
    Submodule, SubmoduleLattice,
};
use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

/// M = A ⊕ B, with the projection onto A along B.
#[derive(Debug, Clone)]
pub struct Decomposition {
    pub parent: RightModule,
    pub a: Submodule,
    pub b: Submodule,
    pub idempotent: ModuleHom,
}

impl Decomposition {
    pub fn from_idempotent(parent: &RightModule, e: Matrix) -> Result<Self> {
        if e.shape() != (parent.dim(), parent.dim()) {
            return Err(Error::DimensionMismatch { expected: parent.dim(), found: e.rows() });
        }
        if e.mul(&e) != e {
            return Err(Error::NotIdempotent);
        }
        let idempotent = ModuleHom::new(parent, parent, e)?;
        let a = idempotent.image();
        let b = idempotent.kernel();
        Ok(Decomposition { parent: parent.clone(), a, b, idempotent })
    }

    /// The swapped decomposition B ⊕ A.
    pub fn swapped(&self) -> Decomposition {
        let f = self.parent.field();
        let comp = Matrix::identity(f, self.parent.dim()).sub(self.idempotent.matrix());
        Decomposition {
            parent: self.parent.clone(),
            a: self.b.clone(),
            b: self.a.clone(),
            idempotent: ModuleHom::new_unchecked(&self.parent, &self.parent, comp),
        }
    }
}

/// One decomposition per idempotent of End(M), in the enumeration order of the hom space.
pub fn enumerate_decompositions(m: &RightModule, guards: &Guards) -> Result<Vec<Decomposition>> {
    let end = hom_space(m, m)?;
    guards.end(end.size())?;
    let f = m.field();
    let d = m.dim();
    let mut out = Vec::new();
    end.for_each_element(|v| {
        let e = Matrix::from_flat(f, d, d, v.to_vec());
        if e.mul(&e) == e {
            let idempotent = ModuleHom::new_unchecked(m, m, e);
            out.push(Decomposition {
                parent: m.clone(),
                a: idempotent.image(),
                b: idempotent.kernel(),
                idempotent,
            });
        }
        true
    });
    Ok(out)
}

/// Memoized structural data for one module: lattice, socle, decompositions, summand and
/// length caches. Every checker in this module works through a context.
pub struct ModuleContext {
    module: RightModule,
    guards: Guards,
    lattice: OnceLock<SubmoduleLattice>,
    socle: OnceLock<Submodule>,
    decompositions: OnceLock<Vec<Decomposition>>,
    summand_members: OnceLock<Vec<Submodule>>,
    summands: Mutex<HashMap<Submodule, bool>>,
    lengths: Mutex<HashMap<Submodule, usize>>,
}

impl ModuleContext {
    pub fn new(module: &RightModule, guards: &Guards) -> Self {
        ModuleContext {
            module: module.clone(),
            guards: guards.clone(),
            lattice: OnceLock::new(),
            socle: OnceLock::new(),
            decompositions: OnceLock::new(),
            summand_members: OnceLock::new(),
            summands: Mutex::new(HashMap::new()),
            lengths: Mutex::new(HashMap::new()),
        }
    }

    pub fn module(&self) -> &RightModule {
        &self.module
    }

    pub fn guards(&self) -> &Guards {
        &self.guards
    }

    /// Context for a submodule X, viewed as a module in the coordinates of X's basis.
    pub fn sub_context(&self, x: &Submodule) -> ModuleContext {
        ModuleContext::new(&self.module.submodule_module(x), &self.guards)
    }

    pub fn lattice(&self) -> Result<&SubmoduleLattice> {
        if let Some(l) = self.lattice.get() {
            return Ok(l);
        }
        let l = all_submodules(&self.module, &self.guards)?;
        Ok(self.lattice.get_or_init(|| l))
    }

    pub fn socle(&self) -> Result<&Submodule> {
        if let Some(s) = self.socle.get() {
            return Ok(s);
        }
        let s = socle(&self.module, &self.guards)?;
        Ok(self.socle.get_or_init(|| s))
    }

    pub fn decompositions(&self) -> Result<&[Decomposition]> {
        if let Some(d) = self.decompositions.get() {
            return Ok(d);
        }
        let d = enumerate_decompositions(&self.module, &self.guards)?;
        Ok(self.decompositions.get_or_init(|| d))
    }

    pub fn is_summand(&self, n: &Submodule) -> bool {
        if let Some(&b) = self.summands.lock().unwrap().get(n) {
            return b;
        }
        let b = summand_complement(&self.module, n).is_some();
        self.summands.lock().unwrap().insert(n.clone(), b);
        b
    }

    /// Lattice members that are direct summands.
    pub fn summand_members(&self) -> Result<&[Submodule]> {
        if let Some(s) = self.summand_members.get() {
            return Ok(s);
        }
        let s: Vec<Submodule> = self.lattice()?.members().iter().filter(|n| self.is_summand(n)).cloned().collect();
        Ok(self.summand_members.get_or_init(|| s))
    }

    /// ℓ(N) for a submodule N.
    pub fn length(&self, n: &Submodule) -> Result<usize> {
        if let Some(&l) = self.lengths.lock().unwrap().get(n) {
            return Ok(l);
        }
        let l = composition_length(&self.module.submodule_module(n), &self.guards)?;
        self.lengths.lock().unwrap().insert(n.clone(), l);
        Ok(l)
    }

    /// X ≤e A for submodules X ⊆ A of M.
    pub fn essential_in(&self, x: &Submodule, a: &Submodule) -> Result<bool> {
        Ok(x.is_subspace_of(a) && a.intersect(self.socle()?).is_subspace_of(x))
    }
}


#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;
    use crate::module::regular_module;

    #[test]
    fn decomposition_counts() {
        let g = Guards::default();
        let r = dual();
        assert_eq!(enumerate_decompositions(&regular_module(&r), &g).unwrap().len(), 2);
        let v = square(&regular_module(&f2()));
        let decs = enumerate_decompositions(&v, &g).unwrap();
        assert_eq!(decs.len(), 8);
        for d in &decs {
            assert!(d.a.intersect(&d.b).is_zero());
            assert!(d.a.sum(&d.b).is_full());
            let s = d.swapped();
            assert_eq!(s.idempotent.image(), d.b);
        }
        let zero = RightModule::zero(&r);
        let z = enumerate_decompositions(&zero, &g).unwrap();
        assert_eq!(z.len(), 1);
        assert!(z[0].a.is_zero() && z[0].b.is_zero());
    }

    #[test]
    fn from_idempotent_checks() {
        let v = square(&regular_module(&f2()));
        let f = v.field();
        let e = Matrix::from_rows(f, 2, &[vec![1, 1], vec![0, 0]]);
        let d = Decomposition::from_idempotent(&v, e).unwrap();
        assert_eq!(d.a.basis(), &[vec![1, 1]]);
        let bad = Matrix::from_rows(f, 2, &[vec![0, 1], vec![0, 0]]);
        assert_eq!(Decomposition::from_idempotent(&v, bad).unwrap_err(), Error::NotIdempotent);
    }

    #[test]
    fn context_caches() {
        let m = r_plus_s();
        let ctx = ModuleContext::new(&m, &Guards::default());
        assert_eq!(ctx.lattice().unwrap().len(), ctx.lattice().unwrap().len());
        assert_eq!(ctx.length(&m.full()).unwrap(), 3);
        assert_eq!(ctx.socle().unwrap().dim(), 2);
        // Summands among the lattice: 0, S-component, span{(x,1)}-type complements of R, R-copies, M.
        assert!(ctx.summand_members().unwrap().len() >= 4);
    }
}
