use super::{FiniteAlgebra, Ring};
use crate::error::{Error, Result};
use crate::guards::Guards;
use crate::linalg::Subspace;

/// A two-sided ideal, stored as a canonical subspace of the algebra.
#[derive(Debug, Clone)]
pub struct IdealBasis {
    parent: Ring,
    basis: Subspace,
}

impl IdealBasis {
    pub fn new(parent: &Ring, basis: Subspace) -> Result<Self> {
        if basis.ambient() != parent.dim() {
            return Err(Error::DimensionMismatch { expected: parent.dim(), found: basis.ambient() });
        }
        if !parent.is_two_sided_ideal(&basis) {
            return Err(Error::Precondition("subspace is not a two-sided ideal".into()));
        }
        Ok(IdealBasis { parent: parent.clone(), basis })
    }

    pub fn parent(&self) -> &Ring {
        &self.parent
    }

    pub fn basis(&self) -> &Subspace {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_zero()
    }

    /// The subspace I^k spanned by k-fold products; I^0 is the whole algebra.
    pub fn power(&self, k: usize) -> Subspace {
        let a = &self.parent;
        let mut cur = Subspace::full(a.field(), a.dim());
        for _ in 0..k {
            cur = a.product_span(&cur, &self.basis);
        }
        cur
    }

    /// Least k with I^k = 0, searched up to dim + 1.
    pub fn nilpotency_index(&self) -> Option<usize> {
        let a = &self.parent;
        let mut cur = Subspace::full(a.field(), a.dim());
        for k in 0..=a.dim() + 1 {
            if cur.is_zero() {
                return Some(k);
            }
            cur = a.product_span(&cur, &self.basis);
        }
        None
    }
}

impl FiniteAlgebra {
    pub fn is_two_sided_ideal(&self, s: &Subspace) -> bool {
        s.basis().iter().all(|v| {
            (0..self.dim).all(|i| {
                let b = self.basis_vector(i);
                s.contains(&self.mul(v, &b)) && s.contains(&self.mul(&b, v))
            })
        })
    }

    /// Span of all products u·v with u ∈ s, v ∈ t.
    pub fn product_span(&self, s: &Subspace, t: &Subspace) -> Subspace {
        Subspace::from_vectors(
            self.field,
            self.dim,
            s.basis().iter().flat_map(|u| t.basis().iter().map(move |v| self.mul(u, v))),
        )
    }

    /// J(A) as the set of x with 1 - y a unit for every y ∈ xA, by full enumeration.
    pub fn exhaustive_radical(&self, guards: &Guards) -> Result<Subspace> {
        if let Some(j) = self.radical.get() {
            return Ok(j.clone());
        }
        guards.algebra(self.element_count())?;
        let p = self.p() as usize;
        let d = self.dim;
        let index = |v: &[u32]| v.iter().fold(0usize, |acc, &c| acc * p + c as usize);
        let mut unit = vec![false; p.pow(d as u32)];
        crate::linalg::for_each_vector(self.field, d, |v| {
            unit[index(v)] = self.is_unit(v);
            true
        });
        let mut j = Subspace::zero(self.field, d);
        crate::linalg::for_each_vector(self.field, d, |x| {
            if j.contains(x) {
                return true;
            }
            let right_ideal = Subspace::from_vectors(
                self.field,
                d,
                (0..d).map(|i| self.mul(x, &self.basis_vector(i))),
            );
            let mut quasi_regular = true;
            right_ideal.for_each_element(|y| {
                let one_minus = self.sub(&self.one, y);
                quasi_regular = unit[index(&one_minus)];
                quasi_regular
            });
            if quasi_regular {
                j.insert(x.to_vec());
            }
            true
        });
        let _ = self.radical.set(j.clone());
        Ok(j)
    }

    /// J(A): the constructor-supplied radical when one is known, otherwise exhaustive.
    pub fn radical(&self, guards: &Guards) -> Result<Subspace> {
        match &self.radical_hint {
            Some(h) => Ok(h.clone()),
            None => self.exhaustive_radical(guards),
        }
    }
}

pub fn jacobson_radical(a: &Ring, guards: &Guards) -> Result<IdealBasis> {
    let j = a.radical(guards)?;
    Ok(IdealBasis { parent: a.clone(), basis: j })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{build_algebra, matrix_algebra, product_algebra, AlgebraSpec};

    fn spec_ring(s: AlgebraSpec) -> Ring {
        build_algebra(&s).unwrap()
    }

    #[test]
    fn small_radicals() {
        let g = Guards::default();
        let f2 = spec_ring(AlgebraSpec::Field { p: 2 });
        assert!(f2.exhaustive_radical(&g).unwrap().is_zero());
        let f3 = spec_ring(AlgebraSpec::Field { p: 3 });
        assert!(f3.exhaustive_radical(&g).unwrap().is_zero());
        let d = spec_ring(AlgebraSpec::PolyQuotient { p: 2, coeffs: vec![0, 0, 1] });
        let j = d.exhaustive_radical(&g).unwrap();
        assert_eq!(j.basis(), &[vec![0, 1]]);
        let m = matrix_algebra(&f2, 2).unwrap();
        assert!(m.exhaustive_radical(&g).unwrap().is_zero());
        let c = spec_ring(AlgebraSpec::PolyQuotient { p: 2, coeffs: vec![0, 0, 0, 1] });
        assert_eq!(c.exhaustive_radical(&g).unwrap().dim(), 2);
        // 𝔽₂[x]/(x² + x + 1) is a field.
        let f4 = spec_ring(AlgebraSpec::PolyQuotient { p: 2, coeffs: vec![1, 1, 1] });
        assert!(f4.exhaustive_radical(&g).unwrap().is_zero());
        // 𝔽₂[x]/(x² + 1) = 𝔽₂[x]/((x + 1)²).
        let e = spec_ring(AlgebraSpec::PolyQuotient { p: 2, coeffs: vec![1, 0, 1] });
        assert_eq!(e.exhaustive_radical(&g).unwrap().basis(), &[vec![1, 1]]);
    }

    #[test]
    fn hints_agree_with_enumeration() {
        let g = Guards::default();
        let d = spec_ring(AlgebraSpec::PolyQuotient { p: 2, coeffs: vec![0, 0, 1] });
        let f2 = spec_ring(AlgebraSpec::Field { p: 2 });
        let t2 = spec_ring(AlgebraSpec::UpperTriangular { p: 2, n: 2 });
        let t3 = spec_ring(AlgebraSpec::UpperTriangular { p: 3, n: 2 });
        let md = matrix_algebra(&d, 2).unwrap();
        let prod = product_algebra(&f2, &t2).unwrap();
        for a in [t2, t3, md.clone(), prod] {
            let hint = a.radical_hint().cloned();
            if let Some(h) = hint {
                assert_eq!(h, a.exhaustive_radical(&g).unwrap(), "{a:?}");
            }
        }
        assert_eq!(md.radical(&g).unwrap().dim(), 4);
    }

    #[test]
    fn radical_is_nilpotent_ideal() {
        let g = Guards::default();
        let c = spec_ring(AlgebraSpec::PolyQuotient { p: 2, coeffs: vec![0, 0, 0, 1] });
        let j = jacobson_radical(&c, &g).unwrap();
        assert_eq!(j.nilpotency_index(), Some(3));
        assert_eq!(j.power(2).dim(), 1);
        let t = spec_ring(AlgebraSpec::UpperTriangular { p: 2, n: 3 });
        let jt = IdealBasis::new(&t, t.exhaustive_radical(&g).unwrap()).unwrap();
        assert_eq!(jt.dim(), 3);
        assert_eq!(jt.nilpotency_index(), Some(3));
    }

    #[test]
    fn guard_is_reported() {
        let g = Guards { max_algebra_enumeration: 8, ..Guards::default() };
        let d = spec_ring(AlgebraSpec::PolyQuotient { p: 2, coeffs: vec![0, 0, 0, 0, 1] });
        let err = d.exhaustive_radical(&g).unwrap_err();
        assert!(err.is_guard(), "{err}");
        assert!(err.to_string().contains("max_algebra_enumeration"));
    }
}
