//! Finite-dimensional unital associative algebras over 𝔽_p, given by structure constants.

mod build;
mod element;
mod radical;

pub use build::{build_algebra, AlgebraSpec};
pub use element::AlgebraElement;
pub use radical::{jacobson_radical, IdealBasis};

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::guards::Guards;
use crate::linalg::{Matrix, Subspace, Vector};
use std::sync::{Arc, OnceLock};

/// Shared handle to an immutable algebra.
pub type Ring = Arc<FiniteAlgebra>;

/// An algebra with basis `b_0..b_{d-1}` and products `b_i·b_j = Σ_k c[i][j][k] b_k`.
pub struct FiniteAlgebra {
    field: PrimeField,
    dim: usize,
    labels: Vec<String>,
    constants: Vec<u32>,
    one: Vector,
    right_mult: Vec<Matrix>,
    radical_hint: Option<Subspace>,
    generators: OnceLock<Vec<usize>>,
    radical: OnceLock<Subspace>,
}

impl std::fmt::Debug for FiniteAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FiniteAlgebra(F_{}, dim {}, {:?})", self.field.p(), self.dim, self.labels)
    }
}

impl PartialEq for FiniteAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && self.dim == other.dim
            && self.one == other.one
            && self.constants == other.constants
    }
}

impl Eq for FiniteAlgebra {}

/// Same algebra: pointer equality first, then structure constants.
pub fn same_ring(a: &Ring, b: &Ring) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl FiniteAlgebra {
    /// Validates structure constants and builds the algebra.
    pub fn from_constants(
        field: PrimeField,
        labels: Vec<String>,
        constants: Vec<u32>,
        one: Vector,
    ) -> Result<Ring> {
        Self::from_constants_with_hint(field, labels, constants, one, None)
    }

    pub(crate) fn from_constants_with_hint(
        field: PrimeField,
        labels: Vec<String>,
        constants: Vec<u32>,
        one: Vector,
        radical_hint: Option<Subspace>,
    ) -> Result<Ring> {
        let d = labels.len();
        if d == 0 {
            return Err(Error::Precondition("algebra dimension must be at least 1".into()));
        }
        if constants.len() != d * d * d {
            return Err(Error::DimensionMismatch { expected: d * d * d, found: constants.len() });
        }
        if one.len() != d {
            return Err(Error::DimensionMismatch { expected: d, found: one.len() });
        }
        for (idx, &c) in constants.iter().enumerate() {
            if c >= field.p() {
                let (i, j, k) = (idx / (d * d), (idx / d) % d, idx % d);
                return Err(Error::UnreducedConstant { i, j, k, value: c as u64, p: field.p() });
            }
        }
        if let Some(&c) = one.iter().find(|&&c| c >= field.p()) {
            return Err(Error::UnreducedConstant { i: 0, j: 0, k: 0, value: c as u64, p: field.p() });
        }
        let right_mult = (0..d)
            .map(|j| {
                let mut m = Matrix::zeros(field, d, d);
                for i in 0..d {
                    for k in 0..d {
                        m.set(i, k, constants[(i * d + j) * d + k]);
                    }
                }
                m
            })
            .collect();
        let alg = FiniteAlgebra {
            field,
            dim: d,
            labels,
            constants,
            one,
            right_mult,
            radical_hint,
            generators: OnceLock::new(),
            radical: OnceLock::new(),
        };
        alg.validate()?;
        Ok(Arc::new(alg))
    }

    fn validate(&self) -> Result<()> {
        let d = self.dim;
        for i in 0..d {
            let e = self.basis_vector(i);
            if self.mul(&self.one, &e) != e || self.mul(&e, &self.one) != e {
                return Err(Error::IdentityLaw(i));
            }
        }
        // (b_i b_j) b_k = b_i (b_j b_k)  ⇔  R_j R_k = R_{b_j b_k} row by row.
        for j in 0..d {
            for k in 0..d {
                let lhs = self.right_mult[j].mul(&self.right_mult[k]);
                let jk = self.right_mult[k].row(j).to_vec();
                let rhs = self.right_mult_matrix(&jk);
                if lhs != rhs {
                    let i = (0..d).find(|&i| lhs.row(i) != rhs.row(i)).unwrap_or(0);
                    return Err(Error::NonAssociative { i, j, k });
                }
            }
        }
        Ok(())
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn p(&self) -> u32 {
        self.field.p()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn one(&self) -> &[u32] {
        &self.one
    }

    pub fn zero(&self) -> Vector {
        vec![0; self.dim]
    }

    /// Structure constant c[i][j][k].
    pub fn constant(&self, i: usize, j: usize, k: usize) -> u32 {
        self.constants[(i * self.dim + j) * self.dim + k]
    }

    pub fn constants(&self) -> &[u32] {
        &self.constants
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        let mut v = vec![0; self.dim];
        v[i] = 1 % self.p();
        v
    }

    /// Matrix of `a ↦ a·b_j`.
    pub fn basis_right_mult(&self, j: usize) -> &Matrix {
        &self.right_mult[j]
    }

    pub fn mul(&self, a: &[u32], b: &[u32]) -> Vector {
        self.right_mult_matrix(b).left_apply(a)
    }

    pub fn add(&self, a: &[u32], b: &[u32]) -> Vector {
        a.iter().zip(b).map(|(&x, &y)| self.field.add(x, y)).collect()
    }

    pub fn sub(&self, a: &[u32], b: &[u32]) -> Vector {
        a.iter().zip(b).map(|(&x, &y)| self.field.sub(x, y)).collect()
    }

    /// Matrix of `x ↦ x·b`.
    pub fn right_mult_matrix(&self, b: &[u32]) -> Matrix {
        let mut m = Matrix::zeros(self.field, self.dim, self.dim);
        for (j, &c) in b.iter().enumerate() {
            m.add_scaled(&self.right_mult[j], c);
        }
        m
    }

    /// Matrix of `x ↦ a·x`.
    pub fn left_mult_matrix(&self, a: &[u32]) -> Matrix {
        let d = self.dim;
        let f = self.field;
        let mut m = Matrix::zeros(f, d, d);
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for j in 0..d {
                for k in 0..d {
                    let c = self.constant(i, j, k);
                    if c != 0 {
                        m.set(j, k, f.add(m.get(j, k), f.mul(ai, c)));
                    }
                }
            }
        }
        m
    }

    /// Two-sided inverse, if `a` is a unit.
    pub fn inverse(&self, a: &[u32]) -> Option<Vector> {
        let left = self.left_mult_matrix(a);
        if !left.is_invertible() {
            return None;
        }
        let b = left.solve_left(&self.one)?;
        if self.mul(&b, a) == self.one {
            Some(b)
        } else {
            None
        }
    }

    pub fn is_unit(&self, a: &[u32]) -> bool {
        self.inverse(a).is_some()
    }

    pub fn is_idempotent(&self, e: &[u32]) -> bool {
        self.mul(e, e) == e
    }

    pub fn element_count(&self) -> u128 {
        self.field.count(self.dim)
    }

    /// Every element, in lexicographic coordinate order.
    pub fn for_each_element<F: FnMut(&[u32]) -> bool>(&self, guards: &Guards, visit: F) -> Result<()> {
        guards.algebra(self.element_count())?;
        crate::linalg::for_each_vector(self.field, self.dim, visit);
        Ok(())
    }

    /// Indices of a generating set of basis elements, chosen greedily in basis order.
    pub fn generators(&self) -> &[usize] {
        self.generators.get_or_init(|| {
            let mut gens: Vec<usize> = Vec::new();
            let mut sub = self.subalgebra_generated(&gens);
            for i in 0..self.dim {
                if sub.is_full() {
                    break;
                }
                if !sub.contains(&self.basis_vector(i)) {
                    gens.push(i);
                    sub = self.subalgebra_generated(&gens);
                }
            }
            gens
        })
    }

    /// Right-multiplication matrices of the generating set.
    pub fn generator_matrices(&self) -> Vec<&Matrix> {
        self.generators().iter().map(|&g| &self.right_mult[g]).collect()
    }

    fn subalgebra_generated(&self, gens: &[usize]) -> Subspace {
        let mut s = Subspace::from_vectors(self.field, self.dim, vec![self.one.clone()]);
        let mut frontier = vec![self.one.clone()];
        while let Some(v) = frontier.pop() {
            for &g in gens {
                let w = self.right_mult[g].left_apply(&v);
                if s.insert(w.clone()) {
                    frontier.push(w);
                }
            }
        }
        s
    }

    pub fn radical_hint(&self) -> Option<&Subspace> {
        self.radical_hint.as_ref()
    }

    /// Every idempotent, in lexicographic coordinate order.
    pub fn idempotents(&self, guards: &Guards) -> Result<Vec<Vector>> {
        let mut out = Vec::new();
        self.for_each_element(guards, |e| {
            if self.mul(e, e) == e {
                out.push(e.to_vec());
            }
            true
        })?;
        Ok(out)
    }

    /// Span of the two-sided ideal generated by `e`, i.e. A·e·A.
    pub fn two_sided_span(&self, e: &[u32]) -> Subspace {
        let d = self.dim;
        let mut s = Subspace::zero(self.field, d);
        for i in 0..d {
            let be = self.mul(&self.basis_vector(i), e);
            for j in 0..d {
                s.insert(self.mul(&be, &self.basis_vector(j)));
                if s.is_full() {
                    return s;
                }
            }
        }
        s
    }

    pub fn is_full_idempotent(&self, e: &[u32]) -> Result<bool> {
        if !self.is_idempotent(e) {
            return Err(Error::NotIdempotent);
        }
        Ok(self.two_sided_span(e).is_full())
    }

    /// Structure constants of `self` match those of `other` under the linear map
    /// sending basis element `i` of `self` to row `i` of `map`.
    pub fn is_isomorphism_onto(&self, other: &FiniteAlgebra, map: &Matrix) -> bool {
        if map.shape() != (self.dim, other.dim) || !map.is_invertible() || self.field != other.field {
            return false;
        }
        if map.left_apply(&self.one) != other.one {
            return false;
        }
        let images: Vec<Vector> = (0..self.dim).map(|i| map.row(i).to_vec()).collect();
        for i in 0..self.dim {
            for j in 0..self.dim {
                let prod = self.mul(&self.basis_vector(i), &self.basis_vector(j));
                if map.left_apply(&prod) != other.mul(&images[i], &images[j]) {
                    return false;
                }
            }
        }
        true
    }

    /// Restriction of the identity basis map: true when both algebras have literally the
    /// same multiplication table.
    pub fn same_table(&self, other: &FiniteAlgebra) -> bool {
        self == other
    }
}

/// Embedding data for a corner algebra eAe ↪ A.
#[derive(Debug, Clone)]
pub struct CornerEmbedding {
    /// Row i is basis element i of eAe written in the coordinates of A.
    pub embedding: Matrix,
    pub idempotent: Vector,
}

/// The corner algebra eAe with identity e.
pub fn corner_algebra(a: &Ring, e: &[u32]) -> Result<(Ring, CornerEmbedding)> {
    if !a.is_idempotent(e) {
        return Err(Error::NotIdempotent);
    }
    if e.iter().all(|&x| x == 0) {
        return Err(Error::ZeroIdempotent);
    }
    let d = a.dim();
    let f = a.field();
    let span = Subspace::from_vectors(
        f,
        d,
        (0..d).map(|i| a.mul(&a.mul(e, &a.basis_vector(i)), e)),
    );
    let k = span.dim();
    let basis: Vec<Vector> = span.basis().to_vec();
    let mut constants = vec![0u32; k * k * k];
    for (i, bi) in basis.iter().enumerate() {
        for (j, bj) in basis.iter().enumerate() {
            let prod = a.mul(bi, bj);
            let c = span.coords(&prod);
            for (t, &v) in c.iter().enumerate() {
                constants[(i * k + j) * k + t] = v;
            }
        }
    }
    let one = span.coords(e);
    let labels = span.pivots().iter().map(|&pc| format!("e*{}*e", a.labels()[pc])).collect();
    // J(eAe) = e·J(A)·e.
    let hint = a.radical(&Guards::default()).ok().map(|j| {
        Subspace::from_vectors(
            f,
            k,
            j.basis().iter().map(|x| span.coords(&a.mul(&a.mul(e, x), e))),
        )
    });
    let ring = FiniteAlgebra::from_constants_with_hint(f, labels, constants, one, hint)?;
    let embedding = Matrix::from_rows(f, d, &basis);
    Ok((ring, CornerEmbedding { embedding, idempotent: e.to_vec() }))
}

/// The matrix algebra M_n(A), basis `E_ij ⊗ b_k` at index `(i·n + j)·dim(A) + k`.
pub fn matrix_algebra(a: &Ring, n: usize) -> Result<Ring> {
    if n == 0 {
        return Err(Error::Precondition("matrix size must be at least 1".into()));
    }
    let da = a.dim();
    let d = n * n * da;
    let idx = |i: usize, j: usize, k: usize| (i * n + j) * da + k;
    let mut constants = vec![0u32; d * d * d];
    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                for b in 0..da {
                    for c in 0..da {
                        for t in 0..da {
                            let v = a.constant(b, c, t);
                            if v != 0 {
                                // E_ij b · E_jl c = E_il (bc)
                                constants[(idx(i, j, b) * d + idx(j, l, c)) * d + idx(i, l, t)] = v;
                            }
                        }
                    }
                }
            }
        }
    }
    let mut one = vec![0u32; d];
    for i in 0..n {
        for k in 0..da {
            one[idx(i, i, k)] = a.one()[k];
        }
    }
    let mut labels = Vec::with_capacity(d);
    for i in 0..n {
        for j in 0..n {
            for k in 0..da {
                labels.push(format!("E{}{}*{}", i + 1, j + 1, a.labels()[k]));
            }
        }
    }
    // J(M_n(A)) = M_n(J(A)).
    let hint = a.radical(&Guards::default()).ok().map(|jr| {
        let mut s = Subspace::zero(a.field(), d);
        for i in 0..n {
            for j in 0..n {
                for v in jr.basis() {
                    let mut w = vec![0u32; d];
                    for k in 0..da {
                        w[idx(i, j, k)] = v[k];
                    }
                    s.insert(w);
                }
            }
        }
        s
    });
    FiniteAlgebra::from_constants_with_hint(a.field(), labels, constants, one, hint)
}

/// A × B with basis `(b_i, 0)` followed by `(0, c_j)`.
pub fn product_algebra(a: &Ring, b: &Ring) -> Result<Ring> {
    if a.field() != b.field() {
        return Err(Error::RingMismatch);
    }
    let (da, db) = (a.dim(), b.dim());
    let d = da + db;
    let mut constants = vec![0u32; d * d * d];
    for i in 0..da {
        for j in 0..da {
            for k in 0..da {
                constants[(i * d + j) * d + k] = a.constant(i, j, k);
            }
        }
    }
    for i in 0..db {
        for j in 0..db {
            for k in 0..db {
                constants[((i + da) * d + j + da) * d + k + da] = b.constant(i, j, k);
            }
        }
    }
    let mut one = a.one().to_vec();
    one.extend_from_slice(b.one());
    let mut labels: Vec<String> = a.labels().iter().map(|l| format!("({l},0)")).collect();
    labels.extend(b.labels().iter().map(|l| format!("(0,{l})")));
    let hint = match (a.radical(&Guards::default()).ok(), b.radical(&Guards::default()).ok()) {
        (Some(ja), Some(jb)) => {
            let mut s = Subspace::zero(a.field(), d);
            for v in ja.basis() {
                let mut w = v.clone();
                w.extend(std::iter::repeat(0).take(db));
                s.insert(w);
            }
            for v in jb.basis() {
                let mut w = vec![0; da];
                w.extend_from_slice(v);
                s.insert(w);
            }
            Some(s)
        }
        _ => None,
    };
    FiniteAlgebra::from_constants_with_hint(a.field(), labels, constants, one, hint)
}

/// The quotient A/I by a two-sided ideal, on the non-pivot coordinates of I.
pub fn quotient_algebra(a: &Ring, ideal: &Subspace) -> Result<Ring> {
    let d = a.dim();
    for v in ideal.basis() {
        for i in 0..d {
            let b = a.basis_vector(i);
            if !ideal.contains(&a.mul(v, &b)) || !ideal.contains(&a.mul(&b, v)) {
                return Err(Error::Precondition("subspace is not a two-sided ideal".into()));
            }
        }
    }
    let free: Vec<usize> = (0..d).filter(|c| !ideal.pivots().contains(c)).collect();
    let k = free.len();
    if k == 0 {
        return Err(Error::Precondition("quotient by the whole algebra is the zero ring".into()));
    }
    let project = |v: &[u32]| -> Vector {
        let r = ideal.reduce(v);
        free.iter().map(|&c| r[c]).collect()
    };
    let mut constants = vec![0u32; k * k * k];
    for (i, &ci) in free.iter().enumerate() {
        for (j, &cj) in free.iter().enumerate() {
            let prod = a.mul(&a.basis_vector(ci), &a.basis_vector(cj));
            for (t, v) in project(&prod).into_iter().enumerate() {
                constants[(i * k + j) * k + t] = v;
            }
        }
    }
    let labels = free.iter().map(|&c| format!("[{}]", a.labels()[c])).collect();
    FiniteAlgebra::from_constants(a.field(), labels, constants, project(a.one()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> Ring {
        build_algebra(&AlgebraSpec::Field { p: 2 }).unwrap()
    }

    fn dual_numbers() -> Ring {
        build_algebra(&AlgebraSpec::PolyQuotient { p: 2, coeffs: vec![0, 0, 1] }).unwrap()
    }

    #[test]
    fn matrix_units_multiply() {
        let m = matrix_algebra(&f2(), 2).unwrap();
        assert_eq!(m.dim(), 4);
        let e11 = m.basis_vector(0);
        let e12 = m.basis_vector(1);
        assert_eq!(m.mul(&e11, &e12), e12);
        assert_eq!(m.mul(&e12, &e11), m.zero());
        assert_eq!(m.labels()[1], "E12*1");
    }

    #[test]
    fn units_in_dual_numbers() {
        let a = dual_numbers();
        let x = vec![0, 1];
        assert_eq!(a.mul(&x, &x), vec![0, 0]);
        assert!(a.is_unit(&[1, 1]));
        assert!(!a.is_unit(&x));
    }

    #[test]
    fn idempotent_counts() {
        let g = Guards::default();
        assert_eq!(dual_numbers().idempotents(&g).unwrap(), vec![vec![0, 0], vec![1, 0]]);
        assert_eq!(f2().idempotents(&g).unwrap().len(), 2);
        let m = matrix_algebra(&f2(), 2).unwrap();
        assert_eq!(m.idempotents(&g).unwrap().len(), 8);
    }

    #[test]
    fn full_idempotents() {
        let m = matrix_algebra(&f2(), 2).unwrap();
        assert!(m.is_full_idempotent(m.one()).unwrap());
        assert!(m.is_full_idempotent(&[1, 0, 0, 0]).unwrap());
        let p = product_algebra(&f2(), &f2()).unwrap();
        assert!(!p.is_full_idempotent(&[1, 0]).unwrap());
        assert_eq!(p.is_full_idempotent(&[0, 1]).map(|_| ()), Ok(()));
        assert_eq!(m.is_full_idempotent(&[0, 1, 0, 0]), Err(Error::NotIdempotent));
    }

    #[test]
    fn corners() {
        let m = matrix_algebra(&f2(), 2).unwrap();
        let (c, emb) = corner_algebra(&m, &[1, 0, 0, 0]).unwrap();
        assert_eq!(c.dim(), 1);
        assert!(c.same_table(&f2()));
        assert_eq!(emb.embedding.row(0), &[1, 0, 0, 0]);
        let p = product_algebra(&f2(), &f2()).unwrap();
        let (c2, _) = corner_algebra(&p, &[1, 0]).unwrap();
        assert!(c2.same_table(&f2()));
        let (whole, _) = corner_algebra(&m, m.one()).unwrap();
        assert_eq!(whole.dim(), 4);
        assert!(matches!(corner_algebra(&m, &[0, 0, 0, 0]), Err(Error::ZeroIdempotent)));
        assert!(matches!(corner_algebra(&m, &[0, 1, 0, 0]), Err(Error::NotIdempotent)));
    }

    #[test]
    fn matrix_of_size_one_is_the_base() {
        let a = dual_numbers();
        let m = matrix_algebra(&a, 1).unwrap();
        assert!(m.same_table(&a));
    }

    #[test]
    fn corner_of_matrix_algebra_recovers_base() {
        let a = dual_numbers();
        let m = matrix_algebra(&a, 2).unwrap();
        let mut e = m.zero();
        e[0] = 1;
        let (c, _) = corner_algebra(&m, &e).unwrap();
        assert!(c.same_table(&a));
    }

    #[test]
    fn rejects_non_associative_constants() {
        let p = PrimeField::new(2).unwrap();
        let d = 4;
        let mut k = vec![0u32; d * d * d];
        for i in 0..d {
            k[i * d + i] = 1; // 1·b_i = b_i
            k[(i * d) * d + i] = 1; // b_i·1 = b_i
        }
        k[(d + 2) * d + 3] = 1; // a·b = c
        k[(3 * d + 2) * d + 1] = 1; // c·b = a, so (ab)b = a but a(bb) = 0
        let labels = ["1", "a", "b", "c"].map(String::from).to_vec();
        let r = FiniteAlgebra::from_constants(p, labels, k, vec![1, 0, 0, 0]);
        assert!(matches!(r, Err(Error::NonAssociative { .. })), "{r:?}");
    }
}
