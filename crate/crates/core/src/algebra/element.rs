use super::{same_ring, Ring};
use crate::error::{Error, Result};
use crate::linalg::Vector;
use std::fmt;

/// An element of a [`super::FiniteAlgebra`], in basis coordinates.
#[derive(Clone)]
pub struct AlgebraElement {
    parent: Ring,
    coords: Vector,
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coords
            .iter()
            .zip(self.parent.labels())
            .filter(|(&c, _)| c != 0)
            .map(|(&c, l)| if c == 1 { l.clone() } else { format!("{c}{l}") })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

impl PartialEq for AlgebraElement {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.parent, &other.parent) && self.coords == other.coords
    }
}

impl AlgebraElement {
    pub fn new(parent: &Ring, coords: Vector) -> Result<Self> {
        if coords.len() != parent.dim() {
            return Err(Error::DimensionMismatch { expected: parent.dim(), found: coords.len() });
        }
        let coords = coords.into_iter().map(|c| c % parent.p()).collect();
        Ok(AlgebraElement { parent: parent.clone(), coords })
    }

    pub fn one(parent: &Ring) -> Self {
        AlgebraElement { parent: parent.clone(), coords: parent.one().to_vec() }
    }

    pub fn zero(parent: &Ring) -> Self {
        AlgebraElement { parent: parent.clone(), coords: parent.zero() }
    }

    pub fn basis(parent: &Ring, i: usize) -> Self {
        AlgebraElement { parent: parent.clone(), coords: parent.basis_vector(i) }
    }

    pub fn parent(&self) -> &Ring {
        &self.parent
    }

    pub fn coords(&self) -> &[u32] {
        &self.coords
    }

    fn check(&self, other: &Self) -> Result<()> {
        if same_ring(&self.parent, &other.parent) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(AlgebraElement { parent: self.parent.clone(), coords: self.parent.add(&self.coords, &other.coords) })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(AlgebraElement { parent: self.parent.clone(), coords: self.parent.mul(&self.coords, &other.coords) })
    }

    pub fn is_unit(&self) -> bool {
        self.parent.is_unit(&self.coords)
    }

    pub fn inverse(&self) -> Option<Self> {
        self.parent
            .inverse(&self.coords)
            .map(|coords| AlgebraElement { parent: self.parent.clone(), coords })
    }

    pub fn is_idempotent(&self) -> bool {
        self.parent.is_idempotent(&self.coords)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{build_algebra, AlgebraSpec};

    #[test]
    fn arithmetic_and_units() {
        let a = build_algebra(&AlgebraSpec::PolyQuotient { p: 2, coeffs: vec![0, 0, 1] }).unwrap();
        let x = AlgebraElement::basis(&a, 1);
        assert_eq!(x.mul(&x).unwrap(), AlgebraElement::zero(&a));
        let u = AlgebraElement::one(&a).add(&x).unwrap();
        assert!(u.is_unit());
        assert_eq!(u.inverse().unwrap(), u);
        assert!(!x.is_unit());
        let other = build_algebra(&AlgebraSpec::Field { p: 2 }).unwrap();
        assert_eq!(x.mul(&AlgebraElement::one(&other)).unwrap_err(), Error::RingMismatch);
    }
}
