//! Finite right modules given by action matrices on row vectors.

mod lattice;
mod structure;

pub use lattice::{all_submodules, SubmoduleLattice};
pub(crate) use structure::summand_complement;
pub use structure::{
    classical_predicates, composition_length, is_closed, is_essential, is_essential_by_definition,
    is_essential_in, is_orthogonal, is_semisimple, is_simple, is_square_free, is_summand,
    is_summand_square_free, hom_vanishes, iso_test, simple_submodule, socle, ClassicalPredicates,
    IsoVerdict, SummandCache,
};

use crate::algebra::{same_ring, Ring};
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::guards::Guards;
use crate::linalg::{Matrix, Subspace, Vector};
use std::sync::Arc;

/// Submodules are canonical subspaces of the parent's coordinate space.
pub type Submodule = Subspace;

/// A right module over a finite algebra: `v·b_i = v·action[i]`.
#[derive(Clone)]
pub struct RightModule {
    ring: Ring,
    dim: usize,
    action: Arc<Vec<Matrix>>,
}

impl std::fmt::Debug for RightModule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "RightModule(dim {} over {:?})", self.dim, self.ring)
    }
}

impl PartialEq for RightModule {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.dim == other.dim && self.action == other.action
    }
}

impl RightModule {
    /// Validates `ρ(1) = I` and `ρ(b_i b_j) = ρ(b_i)ρ(b_j)`.
    pub fn new(ring: &Ring, action: Vec<Matrix>) -> Result<Self> {
        if action.len() != ring.dim() {
            return Err(Error::DimensionMismatch { expected: ring.dim(), found: action.len() });
        }
        let dim = action.first().map_or(0, |m| m.rows());
        for m in &action {
            if m.shape() != (dim, dim) {
                return Err(Error::DimensionMismatch { expected: dim, found: m.rows().max(m.cols()) });
            }
            if m.field() != ring.field() {
                return Err(Error::RingMismatch);
            }
        }
        let module = RightModule { ring: ring.clone(), dim, action: Arc::new(action) };
        if !module.rho(ring.one()).is_identity() {
            return Err(Error::ActionIdentity);
        }
        for i in 0..ring.dim() {
            for j in 0..ring.dim() {
                let prod = ring.mul(&ring.basis_vector(i), &ring.basis_vector(j));
                if module.rho(&prod) != module.action[i].mul(&module.action[j]) {
                    return Err(Error::ActionNotMultiplicative { i, j });
                }
            }
        }
        Ok(module)
    }

    pub(crate) fn new_unchecked(ring: &Ring, dim: usize, action: Vec<Matrix>) -> Self {
        RightModule { ring: ring.clone(), dim, action: Arc::new(action) }
    }

    pub fn zero(ring: &Ring) -> Self {
        let action = (0..ring.dim()).map(|_| Matrix::zeros(ring.field(), 0, 0)).collect();
        RightModule::new_unchecked(ring, 0, action)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn field(&self) -> PrimeField {
        self.ring.field()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.dim == 0
    }

    pub fn action(&self, i: usize) -> &Matrix {
        &self.action[i]
    }

    pub fn actions(&self) -> &[Matrix] {
        &self.action
    }

    /// Matrix of `v ↦ v·a`.
    pub fn rho(&self, a: &[u32]) -> Matrix {
        let mut m = Matrix::zeros(self.field(), self.dim, self.dim);
        for (i, &c) in a.iter().enumerate() {
            m.add_scaled(&self.action[i], c);
        }
        m
    }

    pub fn act(&self, v: &[u32], a: &[u32]) -> Vector {
        self.rho(a).left_apply(v)
    }

    /// Action matrices of the ring's generating set.
    pub fn generator_actions(&self) -> Vec<&Matrix> {
        self.ring.generators().iter().map(|&g| &self.action[g]).collect()
    }

    pub fn full(&self) -> Submodule {
        Subspace::full(self.field(), self.dim)
    }

    pub fn zero_submodule(&self) -> Submodule {
        Subspace::zero(self.field(), self.dim)
    }

    pub fn is_submodule(&self, s: &Subspace) -> bool {
        s.ambient() == self.dim
            && s.basis().iter().all(|v| self.generator_actions().iter().all(|m| s.contains(&m.left_apply(v))))
    }

    pub fn check_submodule(&self, s: &Subspace) -> Result<()> {
        if s.ambient() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: s.ambient() });
        }
        if self.is_submodule(s) {
            Ok(())
        } else {
            Err(Error::NotSubmodule)
        }
    }

    /// The cyclic submodule vR.
    pub fn cyclic(&self, v: &[u32]) -> Submodule {
        Subspace::from_vectors(self.field(), self.dim, self.action.iter().map(|m| m.left_apply(v)))
    }

    /// Smallest submodule containing the given vectors.
    pub fn span<I: IntoIterator<Item = Vector>>(&self, generators: I) -> Submodule {
        let mut s = self.zero_submodule();
        let mut frontier: Vec<Vector> = Vec::new();
        for v in generators {
            if s.insert(v.clone()) {
                frontier.push(v);
            }
        }
        let gens = self.generator_actions();
        while let Some(v) = frontier.pop() {
            for m in &gens {
                let w = m.left_apply(&v);
                if s.insert(w.clone()) {
                    frontier.push(w);
                }
            }
        }
        s
    }

    /// The submodule N as a module in its own right, in coordinates of N's basis.
    pub fn submodule_module(&self, n: &Submodule) -> RightModule {
        let k = n.dim();
        let action = self
            .action
            .iter()
            .map(|m| {
                let rows: Vec<Vector> = n.basis().iter().map(|b| n.coords(&m.left_apply(b))).collect();
                Matrix::from_rows(self.field(), k, &rows)
            })
            .collect();
        RightModule::new_unchecked(&self.ring, k, action)
    }

    /// M/N on the non-pivot coordinates of N, with the projection M → M/N.
    pub fn quotient(&self, n: &Submodule) -> (RightModule, ModuleHom) {
        let free: Vec<usize> = (0..self.dim).filter(|c| !n.pivots().contains(c)).collect();
        let k = free.len();
        let project = |v: &[u32]| -> Vector {
            let r = n.reduce(v);
            free.iter().map(|&c| r[c]).collect()
        };
        let action = self
            .action
            .iter()
            .map(|m| {
                let rows: Vec<Vector> = free.iter().map(|&c| project(m.row(c))).collect();
                Matrix::from_rows(self.field(), k, &rows)
            })
            .collect();
        let q = RightModule::new_unchecked(&self.ring, k, action);
        let rows: Vec<Vector> = (0..self.dim).map(|i| {
            let mut e = vec![0; self.dim];
            e[i] = 1;
            project(&e)
        }).collect();
        let proj = ModuleHom::new_unchecked(self, &q, Matrix::from_rows(self.field(), k, &rows));
        (q, proj)
    }

    /// Basis-free sanity check that the action is well defined; used on derived modules in tests.
    pub fn validate(&self) -> Result<()> {
        RightModule::new(&self.ring, self.action.to_vec()).map(|_| ())
    }
}

/// The regular module R_R, acting by right multiplication.
pub fn regular_module(ring: &Ring) -> RightModule {
    let action = (0..ring.dim()).map(|j| ring.basis_right_mult(j).clone()).collect();
    RightModule::new_unchecked(ring, ring.dim(), action)
}

/// M ⊕ N with its canonical injections and projections.
#[derive(Debug, Clone)]
pub struct DirectSum {
    pub module: RightModule,
    pub injections: [ModuleHom; 2],
    pub projections: [ModuleHom; 2],
}

pub fn direct_sum(m: &RightModule, n: &RightModule) -> Result<DirectSum> {
    if !same_ring(m.ring(), n.ring()) {
        return Err(Error::RingMismatch);
    }
    let f = m.field();
    let action = m.actions().iter().zip(n.actions()).map(|(a, b)| a.block_diag(b)).collect();
    let sum = RightModule::new_unchecked(m.ring(), m.dim + n.dim, action);
    let (dm, dn) = (m.dim, n.dim);
    let mut i1 = Matrix::zeros(f, dm, dm + dn);
    let mut p1 = Matrix::zeros(f, dm + dn, dm);
    for r in 0..dm {
        i1.set(r, r, 1);
        p1.set(r, r, 1);
    }
    let mut i2 = Matrix::zeros(f, dn, dm + dn);
    let mut p2 = Matrix::zeros(f, dm + dn, dn);
    for r in 0..dn {
        i2.set(r, dm + r, 1);
        p2.set(dm + r, r, 1);
    }
    Ok(DirectSum {
        injections: [
            ModuleHom::new_unchecked(m, &sum, i1),
            ModuleHom::new_unchecked(n, &sum, i2),
        ],
        projections: [
            ModuleHom::new_unchecked(&sum, m, p1),
            ModuleHom::new_unchecked(&sum, n, p2),
        ],
        module: sum,
    })
}

/// Iterated direct sum; the empty sum is the zero module.
pub fn direct_sum_all(ring: &Ring, parts: &[RightModule]) -> Result<RightModule> {
    let mut acc = RightModule::zero(ring);
    for p in parts {
        acc = direct_sum(&acc, p)?.module;
    }
    Ok(acc)
}

/// A module homomorphism `v ↦ v·matrix`.
#[derive(Debug, Clone, PartialEq)]
pub struct ModuleHom {
    source: RightModule,
    target: RightModule,
    matrix: Matrix,
}

impl ModuleHom {
    pub fn new(source: &RightModule, target: &RightModule, matrix: Matrix) -> Result<Self> {
        if !same_ring(source.ring(), target.ring()) {
            return Err(Error::RingMismatch);
        }
        if matrix.shape() != (source.dim, target.dim) {
            return Err(Error::DimensionMismatch { expected: source.dim * target.dim, found: matrix.rows() * matrix.cols() });
        }
        for i in 0..source.ring.dim() {
            if matrix.mul(target.action(i)) != source.action(i).mul(&matrix) {
                return Err(Error::NotHomomorphism);
            }
        }
        Ok(ModuleHom { source: source.clone(), target: target.clone(), matrix })
    }

    pub(crate) fn new_unchecked(source: &RightModule, target: &RightModule, matrix: Matrix) -> Self {
        ModuleHom { source: source.clone(), target: target.clone(), matrix }
    }

    pub fn identity(m: &RightModule) -> Self {
        ModuleHom::new_unchecked(m, m, Matrix::identity(m.field(), m.dim))
    }

    pub fn zero(source: &RightModule, target: &RightModule) -> Self {
        ModuleHom::new_unchecked(source, target, Matrix::zeros(source.field(), source.dim, target.dim))
    }

    pub fn source(&self) -> &RightModule {
        &self.source
    }

    pub fn target(&self) -> &RightModule {
        &self.target
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn apply(&self, v: &[u32]) -> Vector {
        self.matrix.left_apply(v)
    }

    pub fn kernel(&self) -> Submodule {
        self.matrix.left_kernel()
    }

    pub fn image(&self) -> Submodule {
        self.matrix.row_space()
    }

    pub fn is_injective(&self) -> bool {
        self.matrix.rank() == self.source.dim
    }

    pub fn is_surjective(&self) -> bool {
        self.matrix.rank() == self.target.dim
    }

    pub fn is_isomorphism(&self) -> bool {
        self.source.dim == self.target.dim && self.is_injective()
    }

    /// `other ∘ self`: first self, then other.
    pub fn then(&self, other: &ModuleHom) -> Result<ModuleHom> {
        if self.target.dim != other.source.dim || !same_ring(self.target.ring(), other.source.ring()) {
            return Err(Error::RingMismatch);
        }
        Ok(ModuleHom::new_unchecked(&self.source, &other.target, self.matrix.mul(&other.matrix)))
    }
}

/// Hom(M, N) as a subspace of flattened dim(M)×dim(N) matrices.
pub fn hom_space(m: &RightModule, n: &RightModule) -> Result<Subspace> {
    if !same_ring(m.ring(), n.ring()) {
        return Err(Error::RingMismatch);
    }
    let (a, b) = (m.dim, n.dim);
    let f = m.field();
    let unknowns = a * b;
    if unknowns == 0 {
        return Ok(Subspace::zero(f, 0));
    }
    let gens = m.ring().generators().to_vec();
    // The unknown X[r][s] contributes δ_{r,i}ρ_N[s][j] − δ_{s,j}ρ_M[i][r] to equation (g, i, j).
    let eqs = gens.len() * a * b;
    let mut system = Matrix::zeros(f, unknowns, eqs.max(1));
    for (gi, &g) in gens.iter().enumerate() {
        let (rm, rn) = (m.action(g), n.action(g));
        for r in 0..a {
            for s in 0..b {
                let row = r * b + s;
                for j in 0..b {
                    let v = rn.get(s, j);
                    if v != 0 {
                        let col = (gi * a + r) * b + j;
                        system.set(row, col, f.add(system.get(row, col), v));
                    }
                }
                for i in 0..a {
                    let v = rm.get(i, r);
                    if v != 0 {
                        let col = (gi * a + i) * b + s;
                        system.set(row, col, f.sub(system.get(row, col), v));
                    }
                }
            }
        }
    }
    Ok(system.left_kernel())
}

/// Hom(M, N) as homomorphisms, in the canonical echelon order of the solution space.
pub fn hom_basis(m: &RightModule, n: &RightModule) -> Result<Vec<ModuleHom>> {
    let space = hom_space(m, n)?;
    Ok(space
        .basis()
        .iter()
        .map(|v| ModuleHom::new_unchecked(m, n, Matrix::from_flat(m.field(), m.dim, n.dim, v.clone())))
        .collect())
}

/// Visits every homomorphism M → N as a matrix, after a guard check on p^dim Hom.
pub fn for_each_hom<F: FnMut(&Matrix) -> bool>(
    m: &RightModule,
    n: &RightModule,
    guards: &Guards,
    mut visit: F,
) -> Result<()> {
    let space = hom_space(m, n)?;
    guards.hom_scan(space.size())?;
    let f = m.field();
    space.for_each_element(|v| visit(&Matrix::from_flat(f, m.dim, n.dim, v.to_vec())));
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{build_algebra, matrix_algebra, AlgebraSpec};

    pub(crate) fn dual() -> Ring {
        build_algebra(&AlgebraSpec::PolyQuotient { p: 2, coeffs: vec![0, 0, 1] }).unwrap()
    }

    #[test]
    fn regular_module_of_dual_numbers() {
        let r = dual();
        let m = regular_module(&r);
        assert_eq!(m.dim(), 2);
        assert_eq!(m.action(1).row_vectors(), vec![vec![0, 1], vec![0, 0]]);
        m.validate().unwrap();
        let f2 = build_algebra(&AlgebraSpec::Field { p: 2 }).unwrap();
        assert_eq!(regular_module(&f2).dim(), 1);
    }

    #[test]
    fn validation_errors() {
        let r = dual();
        let f = r.field();
        let bad_one = vec![Matrix::zeros(f, 1, 1), Matrix::zeros(f, 1, 1)];
        assert_eq!(RightModule::new(&r, bad_one).unwrap_err(), Error::ActionIdentity);
        // x acting invertibly violates x·x = 0.
        let bad_mul = vec![Matrix::identity(f, 1), Matrix::identity(f, 1)];
        assert!(matches!(RightModule::new(&r, bad_mul), Err(Error::ActionNotMultiplicative { .. })));
    }

    #[test]
    fn hom_dimensions() {
        let r = dual();
        let rr = regular_module(&r);
        let (s, _) = rr.quotient(&rr.cyclic(&[0, 1]));
        assert_eq!(s.dim(), 1);
        s.validate().unwrap();
        assert_eq!(hom_basis(&s, &s).unwrap().len(), 1);
        assert_eq!(hom_basis(&rr, &rr).unwrap().len(), 2);
        assert_eq!(hom_basis(&s, &rr).unwrap().len(), 1);
        assert_eq!(hom_basis(&rr, &s).unwrap().len(), 1);
        for h in hom_basis(&rr, &rr).unwrap() {
            ModuleHom::new(&rr, &rr, h.matrix().clone()).unwrap();
        }
    }

    #[test]
    fn spans_and_sums() {
        let r = dual();
        let rr = regular_module(&r);
        assert!(rr.span(vec![]).is_zero());
        assert_eq!(rr.span(vec![vec![0, 1]]).basis(), &[vec![0, 1]]);
        assert!(rr.span(vec![vec![1, 0]]).is_full());
        let z = direct_sum(&rr, &RightModule::zero(&r)).unwrap();
        assert_eq!(z.module, rr);
        assert!(z.injections[0].matrix().is_identity());
        let m2 = matrix_algebra(&r, 2).unwrap();
        let reg = regular_module(&m2);
        reg.validate().unwrap();
        let ds = direct_sum(&reg, &reg).unwrap();
        let id = ds.injections[1].then(&ds.projections[1]).unwrap();
        assert!(id.matrix().is_identity());
        assert!(ds.injections[0].then(&ds.projections[1]).unwrap().matrix().is_zero());
    }

    #[test]
    fn submodule_as_module_is_valid() {
        let r = dual();
        let rr = regular_module(&r);
        let m = direct_sum(&rr, &rr).unwrap().module;
        let n = m.span(vec![vec![1, 0, 0, 1]]);
        let nm = m.submodule_module(&n);
        nm.validate().unwrap();
        assert_eq!(nm.dim(), 2);
        let (q, pi) = m.quotient(&n);
        q.validate().unwrap();
        ModuleHom::new(&m, &q, pi.matrix().clone()).unwrap();
        assert_eq!(pi.kernel(), n);
    }
}
