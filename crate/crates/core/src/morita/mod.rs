//! The equivalence Hom_R(P, −): Mod-R → Mod-End(P) for P = Rⁿ and P = eR with e full.

mod compare;
mod transport;

pub use compare::{
    compare_conditions, defect_bijection_check, morita_pair_check, transport_lemma_check, BijectionReport, Condition, ConditionRow,
    LemmaReport, MoritaComparison, Outcome, Realization,
};
pub use transport::{apply_functor, restrict_scalars, transport_hom, transport_submodule, transport_witness, TransportedModule};

use crate::algebra::{corner_algebra, matrix_algebra, FiniteAlgebra, Ring};
use crate::error::{Error, Result};
use crate::guards::Guards;
use crate::linalg::{Matrix, Subspace, Vector};
use crate::module::{direct_sum_all, hom_basis, hom_space, regular_module, summand_complement, RightModule};

/// S = End_R(P) as an algebra on the basis `hom_basis(P, P)`, with s_i·s_j = s_i ∘ s_j.
#[derive(Debug, Clone)]
pub struct EndAlgebra {
    pub algebra: Ring,
    /// Basis endomorphisms as matrices on P.
    pub basis: Vec<Matrix>,
    /// The hom space End(P) as flattened matrices; coordinates of S are coordinates here.
    pub space: Subspace,
}

impl EndAlgebra {
    /// Coordinates in S of an endomorphism given as a matrix.
    pub fn coords(&self, m: &Matrix) -> Vector {
        self.space.coords(m.flat())
    }

    /// The matrix on P of an element of S.
    pub fn matrix_of(&self, s: &[u32]) -> Matrix {
        let d = self.basis.first().map_or(0, |b| b.rows());
        Matrix::from_flat(self.algebra.field(), d, d, self.space.combine(s))
    }
}

fn end_algebra_with_hint(p: &RightModule, hint: Option<&Subspace>) -> Result<EndAlgebra> {
    let space = hom_space(p, p)?;
    let f = p.field();
    let d = p.dim();
    let basis: Vec<Matrix> =
        space.basis().iter().map(|v| Matrix::from_flat(f, d, d, v.clone())).collect();
    let k = basis.len();
    if k == 0 {
        return Err(Error::Precondition("End of the zero module has no identity basis".into()));
    }
    let mut constants = vec![0u32; k * k * k];
    for i in 0..k {
        for j in 0..k {
            // (s_i ∘ s_j)(v) = v·S_j·S_i in the row convention.
            let prod = basis[j].mul(&basis[i]);
            for (t, c) in space.coords(prod.flat()).into_iter().enumerate() {
                constants[(i * k + j) * k + t] = c;
            }
        }
    }
    let one = space.coords(Matrix::identity(f, d).flat());
    let labels = (0..k).map(|t| format!("s{t}")).collect();
    // J(End P) = Hom(P, PJ) for projective P; coordinates of those endomorphisms.
    let radical = hint.map(|pj| {
        let ann = pj.annihilator();
        let rows: Vec<Vector> = basis.iter().map(|b| b.mul(&ann).flat().to_vec()).collect();
        let cols = d * ann.cols();
        Matrix::from_rows(f, cols, &rows).left_kernel()
    });
    let algebra = FiniteAlgebra::from_constants_with_hint(f, labels, constants, one, radical)?;
    Ok(EndAlgebra { algebra, basis, space })
}

/// End_R(P) for an arbitrary module P. Its radical is computed on demand by enumeration.
pub fn end_algebra(p: &RightModule) -> Result<EndAlgebra> {
    end_algebra_with_hint(p, None)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProgeneratorKind {
    FreePower(usize),
    Corner(Vector),
}

/// A progenerator P_R with its endomorphism algebra and certificates.
#[derive(Debug, Clone)]
pub struct Progenerator {
    pub ring: Ring,
    pub module: RightModule,
    pub kind: ProgeneratorKind,
    pub end: EndAlgebra,
    /// Dimension of the trace ideal Σ im(Hom(P, R_R)); equal to dim R.
    pub trace_dim: usize,
    /// A complement of P in R_R^k witnessing projectivity (None for P = Rⁿ itself).
    pub projectivity_complement: Option<Subspace>,
    /// A model algebra (M_n(R) or eRe) with a verified isomorphism onto S; row i is the
    /// image of model basis element i in S-coordinates.
    pub model: Ring,
    pub theta: Matrix,
}

fn trace_dim(p: &RightModule) -> Result<usize> {
    let r = regular_module(p.ring());
    let mut t = Subspace::zero(p.field(), r.dim());
    for h in hom_basis(p, &r)? {
        t = t.sum(&h.image());
    }
    Ok(t.dim())
}

/// P·J(R), the image of the radical action.
fn radical_layer(p: &RightModule, guards: &Guards) -> Result<Subspace> {
    let j = p.ring().radical(guards)?;
    let mut s = Subspace::zero(p.field(), p.dim());
    for v in Subspace::full(p.field(), p.dim()).basis() {
        for jv in j.basis() {
            s.insert(p.act(v, jv));
        }
    }
    Ok(s)
}

impl Progenerator {
    /// P = Rⁿ, with S certified isomorphic to M_n(R).
    pub fn free_power(ring: &Ring, n: usize, guards: &Guards) -> Result<Self> {
        if n == 0 {
            return Err(Error::Precondition("free power needs n ≥ 1".into()));
        }
        let module = direct_sum_all(ring, &vec![regular_module(ring); n])?;
        let pj = radical_layer(&module, guards)?;
        let end = end_algebra_with_hint(&module, Some(&pj))?;
        let model = matrix_algebra(ring, n)?;
        let d = ring.dim();
        let f = ring.field();
        let mut rows = Vec::with_capacity(model.dim());
        for i in 0..n {
            for j in 0..n {
                for k in 0..d {
                    // E_ij ⊗ b_k sends component j to component i by left multiplication.
                    let lam = ring.left_mult_matrix(&ring.basis_vector(k));
                    let mut m = Matrix::zeros(f, n * d, n * d);
                    for r in 0..d {
                        for c in 0..d {
                            m.set(j * d + r, i * d + c, lam.get(r, c));
                        }
                    }
                    rows.push(end.coords(&m));
                }
            }
        }
        let theta = Matrix::from_rows(f, end.algebra.dim(), &rows);
        if !model.is_isomorphism_onto(&end.algebra, &theta) {
            return Err(Error::TheoremViolation("End(Rⁿ) does not match M_n(R) under the matrix-unit map".into()));
        }
        let trace_dim = trace_dim(&module)?;
        Ok(Progenerator {
            ring: ring.clone(),
            module,
            kind: ProgeneratorKind::FreePower(n),
            end,
            trace_dim,
            projectivity_complement: None,
            model,
            theta,
        })
    }

    /// P = eR for a full idempotent e, with S certified isomorphic to eRe.
    pub fn corner(ring: &Ring, e: &[u32], guards: &Guards) -> Result<Self> {
        if e.len() != ring.dim() {
            return Err(Error::DimensionMismatch { expected: ring.dim(), found: e.len() });
        }
        if !ring.is_full_idempotent(e)? {
            return Err(Error::NotFull { span_dim: ring.two_sided_span(e).dim(), dim: ring.dim() });
        }
        let reg = regular_module(ring);
        let er = reg.cyclic(e);
        let complement = summand_complement(&reg, &er)
            .ok_or_else(|| Error::TheoremViolation("eR is not a summand of R_R".into()))?;
        let module = reg.submodule_module(&er);
        let pj = radical_layer(&module, guards)?;
        let end = end_algebra_with_hint(&module, Some(&pj))?;
        let (model, emb) = corner_algebra(ring, e)?;
        let f = ring.field();
        let mut rows = Vec::with_capacity(model.dim());
        for c in emb.embedding.row_vectors() {
            let images: Vec<Vector> = er.basis().iter().map(|b| er.coords(&ring.mul(&c, b))).collect();
            rows.push(end.coords(&Matrix::from_rows(f, er.dim(), &images)));
        }
        let theta = Matrix::from_rows(f, end.algebra.dim(), &rows);
        if !model.is_isomorphism_onto(&end.algebra, &theta) {
            return Err(Error::TheoremViolation("End(eR) does not match eRe under left multiplication".into()));
        }
        let trace_dim = trace_dim(&module)?;
        Ok(Progenerator {
            ring: ring.clone(),
            module,
            kind: ProgeneratorKind::Corner(e.to_vec()),
            end,
            trace_dim,
            projectivity_complement: Some(complement),
            model,
            theta,
        })
    }

    pub fn end_ring(&self) -> &Ring {
        &self.end.algebra
    }

    /// Both certificates: trace ideal is R, and P is a summand of a free module.
    pub fn certificates_hold(&self) -> bool {
        let projective = match (&self.kind, &self.projectivity_complement) {
            (ProgeneratorKind::FreePower(_), _) => true,
            (ProgeneratorKind::Corner(e), Some(c)) => {
                let reg = regular_module(&self.ring);
                let er = reg.cyclic(e);
                er.intersect(c).is_zero() && er.sum(c).is_full() && reg.is_submodule(c)
            }
            _ => false,
        };
        projective && self.trace_dim == self.ring.dim()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{build_algebra, product_algebra, AlgebraSpec};

    fn dual() -> Ring {
        build_algebra(&AlgebraSpec::PolyQuotient { p: 2, coeffs: vec![0, 0, 1] }).unwrap()
    }

    #[test]
    fn end_of_regular_is_the_ring() {
        let r = dual();
        let e = end_algebra(&regular_module(&r)).unwrap();
        assert_eq!(e.algebra.dim(), 2);
        let p = Progenerator::free_power(&r, 1, &Guards::default()).unwrap();
        assert!(p.certificates_hold());
        assert!(p.model.is_isomorphism_onto(&p.end.algebra, &p.theta));
    }

    #[test]
    fn end_of_free_square_is_matrices() {
        let g = Guards::default();
        let r = dual();
        let p = Progenerator::free_power(&r, 2, &g).unwrap();
        assert_eq!(p.end_ring().dim(), 8);
        assert!(p.certificates_hold());
        // The radical passed down agrees with enumeration.
        let hint = p.end_ring().radical_hint().unwrap().clone();
        assert_eq!(hint, p.end_ring().exhaustive_radical(&g).unwrap());
    }

    #[test]
    fn corner_of_matrix_ring() {
        let g = Guards::default();
        let f2 = build_algebra(&AlgebraSpec::Field { p: 2 }).unwrap();
        let m2 = matrix_algebra(&f2, 2).unwrap();
        let e11 = vec![1, 0, 0, 0];
        let p = Progenerator::corner(&m2, &e11, &g).unwrap();
        assert_eq!(p.end_ring().dim(), 1);
        assert!(p.certificates_hold());
        assert_eq!(p.module.dim(), 2);
    }

    #[test]
    fn non_full_corner_is_rejected() {
        let f2 = build_algebra(&AlgebraSpec::Field { p: 2 }).unwrap();
        let prod = product_algebra(&f2, &f2).unwrap();
        let err = Progenerator::corner(&prod, &[1, 0], &Guards::default()).unwrap_err();
        assert_eq!(err, Error::NotFull { span_dim: 1, dim: 2 });
        let err = Progenerator::corner(&prod, &[1, 1, 0], &Guards::default()).unwrap_err();
        assert!(matches!(err, Error::DimensionMismatch { .. }));
    }
}
