//! Dense linear algebra over 𝔽_p.
//!
//! Vectors are rows and matrices act on the right: `v ↦ v·A`. Every subspace is
//! stored in canonical reduced row echelon form, so two subspaces are equal exactly
//! when their stored bases are equal.

use crate::field::PrimeField;
use std::fmt;

pub type Vector = Vec<u32>;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{:?}", self.row(r))?;
        }
        write!(f, "]")
    }
}

impl Matrix {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        Matrix { field, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1 % field.p();
        }
        m
    }

    /// Builds a matrix from rows of equal length `cols`.
    pub fn from_rows(field: PrimeField, cols: usize, rows: &[Vector]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix rows");
            data.extend(r.iter().map(|&x| x % field.p()));
        }
        Matrix { field, rows: rows.len(), cols, data }
    }

    pub fn from_flat(field: PrimeField, rows: usize, cols: usize, data: Vec<u32>) -> Self {
        assert_eq!(data.len(), rows * cols);
        Matrix { field, rows, cols, data }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v % self.field.p();
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> Vec<Vector> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn flat(&self) -> &[u32] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.get(r, c);
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "incompatible matrix shapes");
        let p = self.field.p() as u64;
        let mut out = Matrix::zeros(self.field, self.rows, other.cols);
        let mut acc = vec![0u64; other.cols];
        for r in 0..self.rows {
            acc.iter_mut().for_each(|a| *a = 0);
            for k in 0..self.cols {
                let a = self.get(r, k) as u64;
                if a == 0 {
                    continue;
                }
                let orow = other.row(k);
                for (slot, &b) in acc.iter_mut().zip(orow) {
                    *slot += a * b as u64;
                }
                if k % 64 == 63 {
                    acc.iter_mut().for_each(|a| *a %= p);
                }
            }
            for (c, a) in acc.iter().enumerate() {
                out.data[r * other.cols + c] = (a % p) as u32;
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.shape(), other.shape());
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| self.field.add(a, b)).collect();
        Matrix { field: self.field, rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.shape(), other.shape());
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| self.field.sub(a, b)).collect();
        Matrix { field: self.field, rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, s: u32) -> Matrix {
        let data = self.data.iter().map(|&a| self.field.mul(a, s)).collect();
        Matrix { field: self.field, rows: self.rows, cols: self.cols, data }
    }

    /// `self + s·other`, in place.
    pub fn add_scaled(&mut self, other: &Matrix, s: u32) {
        assert_eq!(self.shape(), other.shape());
        if s == 0 {
            return;
        }
        for (a, &b) in self.data.iter_mut().zip(&other.data) {
            *a = self.field.add(*a, self.field.mul(b, s));
        }
    }

    /// Row vector times matrix.
    pub fn left_apply(&self, v: &[u32]) -> Vector {
        assert_eq!(v.len(), self.rows);
        let p = self.field.p() as u64;
        let mut acc = vec![0u64; self.cols];
        for (k, &a) in v.iter().enumerate() {
            if a == 0 {
                continue;
            }
            let a = a as u64;
            for (slot, &b) in acc.iter_mut().zip(self.row(k)) {
                *slot += a * b as u64;
            }
            if k % 64 == 63 {
                acc.iter_mut().for_each(|x| *x %= p);
            }
        }
        acc.into_iter().map(|x| (x % p) as u32).collect()
    }

    pub fn rank(&self) -> usize {
        Subspace::from_vectors(self.field, self.cols, self.row_vectors()).dim()
    }

    pub fn row_space(&self) -> Subspace {
        Subspace::from_vectors(self.field, self.cols, self.row_vectors())
    }

    /// Basis of `{x : x·self = 0}` in canonical form.
    pub fn left_kernel(&self) -> Subspace {
        let (_, kernel) = eliminate_tracked(self);
        Subspace::from_vectors(self.field, self.rows, kernel)
    }

    /// Solves `x·self = b`, returning one solution if any exists.
    pub fn solve_left(&self, b: &[u32]) -> Option<Vector> {
        assert_eq!(b.len(), self.cols);
        let f = self.field;
        let (pivot_rows, _) = eliminate_tracked(self);
        let mut rem = b.to_vec();
        let mut x = vec![0u32; self.rows];
        for (pivot, vals, comb) in &pivot_rows {
            let c = rem[*pivot];
            if c == 0 {
                continue;
            }
            for (r, &v) in rem.iter_mut().zip(vals.iter()) {
                *r = f.sub(*r, f.mul(c, v));
            }
            for (xi, &v) in x.iter_mut().zip(comb.iter()) {
                *xi = f.add(*xi, f.mul(c, v));
            }
        }
        if rem.iter().all(|&r| r == 0) {
            Some(x)
        } else {
            None
        }
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let f = self.field;
        let mut a = self.clone();
        let mut inv = Matrix::identity(f, n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| a.get(r, col) != 0)?;
            if pivot != col {
                for c in 0..n {
                    a.data.swap(pivot * n + c, col * n + c);
                    inv.data.swap(pivot * n + c, col * n + c);
                }
            }
            let s = f.inv(a.get(col, col));
            for c in 0..n {
                a.data[col * n + c] = f.mul(a.data[col * n + c], s);
                inv.data[col * n + c] = f.mul(inv.data[col * n + c], s);
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let factor = a.get(r, col);
                if factor == 0 {
                    continue;
                }
                for c in 0..n {
                    let av = f.mul(factor, a.data[col * n + c]);
                    a.data[r * n + c] = f.sub(a.data[r * n + c], av);
                    let iv = f.mul(factor, inv.data[col * n + c]);
                    inv.data[r * n + c] = f.sub(inv.data[r * n + c], iv);
                }
            }
        }
        Some(inv)
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|r| (0..self.cols).all(|c| self.get(r, c) == u32::from(r == c)))
    }

    /// Sub-matrix made of the given rows.
    pub fn select_rows(&self, rows: &[usize]) -> Matrix {
        let mut data = Vec::with_capacity(rows.len() * self.cols);
        for &r in rows {
            data.extend_from_slice(self.row(r));
        }
        Matrix { field: self.field, rows: rows.len(), cols: self.cols, data }
    }

    /// Block-diagonal sum.
    pub fn block_diag(&self, other: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.field, self.rows + other.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.data[r * out.cols + c] = self.get(r, c);
            }
        }
        for r in 0..other.rows {
            for c in 0..other.cols {
                out.data[(r + self.rows) * out.cols + c + self.cols] = other.get(r, c);
            }
        }
        out
    }
}

/// Gaussian elimination on the rows of `a`, tracking row combinations.
///
/// Returns pivot rows as `(pivot column, reduced row, combination)` such that
/// `combination · a = reduced row`, plus the combinations of rows that reduced to zero.
#[allow(clippy::type_complexity)]
fn eliminate_tracked(a: &Matrix) -> (Vec<(usize, Vector, Vector)>, Vec<Vector>) {
    let f = a.field;
    let n = a.rows;
    let mut pivots: Vec<(usize, Vector, Vector)> = Vec::new();
    let mut kernel = Vec::new();
    for r in 0..n {
        let mut vals = a.row(r).to_vec();
        let mut comb = vec![0u32; n];
        comb[r] = 1 % f.p();
        for (pc, pv, pcomb) in &pivots {
            let c = vals[*pc];
            if c == 0 {
                continue;
            }
            for (x, &y) in vals.iter_mut().zip(pv.iter()) {
                *x = f.sub(*x, f.mul(c, y));
            }
            for (x, &y) in comb.iter_mut().zip(pcomb.iter()) {
                *x = f.sub(*x, f.mul(c, y));
            }
        }
        match vals.iter().position(|&x| x != 0) {
            None => kernel.push(comb),
            Some(pc) => {
                let s = f.inv(vals[pc]);
                vals.iter_mut().for_each(|x| *x = f.mul(*x, s));
                comb.iter_mut().for_each(|x| *x = f.mul(*x, s));
                pivots.push((pc, vals, comb));
            }
        }
    }
    (pivots, kernel)
}

/// A subspace of 𝔽_p^n in canonical reduced row echelon form.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subspace {
    field: PrimeField,
    ambient: usize,
    rows: Vec<Vector>,
    pivots: Vec<usize>,
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "span{:?}", self.rows)
    }
}

impl Subspace {
    pub fn zero(field: PrimeField, ambient: usize) -> Self {
        Subspace { field, ambient, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(field: PrimeField, ambient: usize) -> Self {
        let rows = (0..ambient)
            .map(|i| {
                let mut v = vec![0; ambient];
                v[i] = 1 % field.p();
                v
            })
            .collect();
        Subspace { field, ambient, rows, pivots: (0..ambient).collect() }
    }

    pub fn from_vectors<I>(field: PrimeField, ambient: usize, vectors: I) -> Self
    where
        I: IntoIterator<Item = Vector>,
    {
        let mut s = Subspace::zero(field, ambient);
        for v in vectors {
            s.insert(v);
            if s.dim() == ambient {
                break;
            }
        }
        s
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ambient
    }

    pub fn basis(&self) -> &[Vector] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_matrix(&self) -> Matrix {
        Matrix::from_rows(self.field, self.ambient, &self.rows)
    }

    /// Remainder of `v` after elimination against the basis.
    pub fn reduce(&self, v: &[u32]) -> Vector {
        let f = self.field;
        let mut out = v.to_vec();
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            let c = out[pc];
            if c == 0 {
                continue;
            }
            for (x, &y) in out.iter_mut().zip(row.iter()) {
                *x = f.sub(*x, f.mul(c, y));
            }
        }
        out
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        assert_eq!(v.len(), self.ambient);
        self.reduce(v).iter().all(|&x| x == 0)
    }

    /// Adds `v` to the span. Returns true if the dimension grew.
    pub fn insert(&mut self, v: Vector) -> bool {
        assert_eq!(v.len(), self.ambient, "vector length does not match ambient dimension");
        let f = self.field;
        let mut r: Vector = self.reduce(&v);
        let Some(pc) = r.iter().position(|&x| x != 0) else {
            return false;
        };
        let s = f.inv(r[pc]);
        r.iter_mut().for_each(|x| *x = f.mul(*x, s));
        for row in self.rows.iter_mut() {
            let c = row[pc];
            if c == 0 {
                continue;
            }
            for (x, &y) in row.iter_mut().zip(r.iter()) {
                *x = f.sub(*x, f.mul(c, y));
            }
        }
        let at = self.pivots.partition_point(|&q| q < pc);
        self.pivots.insert(at, pc);
        self.rows.insert(at, r);
        true
    }

    /// Coordinates of `v` with respect to the basis. `v` must lie in the span.
    pub fn coords(&self, v: &[u32]) -> Vector {
        debug_assert!(self.contains(v), "vector not in subspace");
        self.pivots.iter().map(|&pc| v[pc]).collect()
    }

    /// Linear combination of basis rows.
    pub fn combine(&self, coeffs: &[u32]) -> Vector {
        assert_eq!(coeffs.len(), self.dim());
        let f = self.field;
        let mut out = vec![0u32; self.ambient];
        for (row, &c) in self.rows.iter().zip(coeffs) {
            if c == 0 {
                continue;
            }
            for (x, &y) in out.iter_mut().zip(row.iter()) {
                *x = f.add(*x, f.mul(c, y));
            }
        }
        out
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        let (big, small) = if self.dim() >= other.dim() { (self, other) } else { (other, self) };
        let mut s = big.clone();
        for v in &small.rows {
            s.insert(v.clone());
        }
        s
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.dim() <= other.dim() && self.rows.iter().all(|v| other.contains(v))
    }

    /// Matrix `K` (ambient × codim) with `v ∈ self ⇔ v·K = 0`.
    pub fn annihilator(&self) -> Matrix {
        let f = self.field;
        let n = self.ambient;
        let free: Vec<usize> = (0..n).filter(|c| !self.pivots.contains(c)).collect();
        let mut k = Matrix::zeros(f, n, free.len());
        // Column t encodes the functional v ↦ v[free_t] − Σ_i row_i[free_t]·v[pivot_i].
        for (t, &fc) in free.iter().enumerate() {
            k.set(fc, t, 1);
            for (row, &pc) in self.rows.iter().zip(&self.pivots) {
                k.set(pc, t, f.neg(row[fc]));
            }
        }
        k
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        if self.is_zero() || other.is_zero() {
            return Subspace::zero(self.field, self.ambient);
        }
        // Coefficient vectors c with (c·basis)·K_other = 0.
        let k = other.annihilator();
        let image = self.basis_matrix().mul(&k);
        let coeffs = image.left_kernel();
        Subspace::from_vectors(self.field, self.ambient, coeffs.rows.iter().map(|c| self.combine(c)))
    }

    /// Image under `v ↦ v·m`.
    pub fn image(&self, m: &Matrix) -> Subspace {
        Subspace::from_vectors(self.field, m.cols(), self.rows.iter().map(|v| m.left_apply(v)))
    }

    /// Number of elements, saturating.
    pub fn size(&self) -> u128 {
        self.field.count(self.dim())
    }

    /// Visits every element of the subspace in lexicographic coefficient order.
    pub fn for_each_element<F: FnMut(&[u32]) -> bool>(&self, mut visit: F) {
        let d = self.dim();
        let p = self.field.p();
        let mut coeffs = vec![0u32; d];
        let mut current = vec![0u32; self.ambient];
        loop {
            if !visit(&current) {
                return;
            }
            // Increment the coefficient counter; update `current` incrementally.
            let mut i = d;
            loop {
                if i == 0 {
                    return;
                }
                i -= 1;
                let f = self.field;
                if coeffs[i] + 1 < p {
                    coeffs[i] += 1;
                    for (x, &y) in current.iter_mut().zip(self.rows[i].iter()) {
                        *x = f.add(*x, y);
                    }
                    break;
                }
                // Wrap: subtract (p-1)·row_i, i.e. add row_i once more.
                coeffs[i] = 0;
                for (x, &y) in current.iter_mut().zip(self.rows[i].iter()) {
                    *x = f.add(*x, y);
                }
            }
        }
    }

    /// Embeds coordinates on the basis back into the ambient space, as a matrix
    /// whose rows are the basis vectors.
    pub fn inclusion(&self) -> Matrix {
        self.basis_matrix()
    }
}

/// Enumerates every vector of 𝔽_p^n in lexicographic order.
pub fn for_each_vector<F: FnMut(&[u32]) -> bool>(field: PrimeField, n: usize, visit: F) {
    Subspace::full(field, n).for_each_element(visit)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn echelon_form_is_canonical() {
        let a = Subspace::from_vectors(f(3), 3, vec![vec![1, 2, 0], vec![0, 1, 1]]);
        let b = Subspace::from_vectors(f(3), 3, vec![vec![1, 0, 1], vec![2, 1, 0]]);
        let c = Subspace::from_vectors(f(3), 3, vec![vec![1, 2, 0], vec![2, 0, 2]]);
        assert_eq!(a.dim(), 2);
        assert_eq!(b.dim(), 2);
        assert!(a.contains(&[1, 0, 1]) == b.is_subspace_of(&a));
        assert_eq!(a == c, c.is_subspace_of(&a) && a.is_subspace_of(&c));
    }

    #[test]
    fn kernel_and_solve() {
        let p = f(2);
        let m = Matrix::from_rows(p, 2, &[vec![1, 0], vec![0, 1], vec![1, 1]]);
        let k = m.left_kernel();
        assert_eq!(k.basis(), &[vec![1, 1, 1]]);
        let x = m.solve_left(&[1, 1]).unwrap();
        assert_eq!(m.left_apply(&x), vec![1, 1]);
        let z = Matrix::from_rows(p, 2, &[vec![1, 1]]);
        assert!(z.solve_left(&[1, 0]).is_none());
    }

    #[test]
    fn intersection_and_annihilator() {
        let p = f(2);
        let u = Subspace::from_vectors(p, 3, vec![vec![1, 0, 0], vec![0, 1, 0]]);
        let w = Subspace::from_vectors(p, 3, vec![vec![0, 1, 0], vec![0, 0, 1]]);
        assert_eq!(u.intersect(&w).basis(), &[vec![0, 1, 0]]);
        let k = u.annihilator();
        assert!(k.left_apply(&[1, 1, 0]).iter().all(|&x| x == 0));
        assert!(k.left_apply(&[0, 0, 1]).iter().any(|&x| x != 0));
    }

    #[test]
    fn element_enumeration_counts() {
        let s = Subspace::from_vectors(f(3), 3, vec![vec![1, 1, 0], vec![0, 0, 1]]);
        let mut seen = std::collections::HashSet::new();
        s.for_each_element(|v| {
            assert!(s.contains(v));
            seen.insert(v.to_vec());
            true
        });
        assert_eq!(seen.len(), 9);
    }

    #[test]
    fn inverse_round_trip() {
        let p = f(5);
        let m = Matrix::from_rows(p, 2, &[vec![2, 1], vec![1, 4]]);
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
        let s = Matrix::from_rows(p, 2, &[vec![1, 2], vec![2, 4]]);
        assert!(s.inverse().is_none());
    }
}
