use super::{corner_algebra, matrix_algebra, product_algebra, FiniteAlgebra, Ring};
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::linalg::Subspace;

/// Constructor descriptor for an algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlgebraSpec {
    Field { p: u64 },
    /// 𝔽_p[x]/(f) with `coeffs` listing f from the constant term up; f must be monic.
    PolyQuotient { p: u64, coeffs: Vec<u64> },
    Matrix { base: Box<AlgebraSpec>, n: usize },
    UpperTriangular { p: u64, n: usize },
    Product(Box<AlgebraSpec>, Box<AlgebraSpec>),
    Corner { base: Box<AlgebraSpec>, e: Vec<u64> },
    Raw {
        p: u64,
        labels: Vec<String>,
        one: Vec<u64>,
        /// `(i, j, coefficients of b_i·b_j)`; omitted pairs multiply to zero.
        mul: Vec<(usize, usize, Vec<u64>)>,
    },
}

pub fn build_algebra(spec: &AlgebraSpec) -> Result<Ring> {
    match spec {
        AlgebraSpec::Field { p } => {
            let f = PrimeField::new(*p)?;
            FiniteAlgebra::from_constants_with_hint(
                f,
                vec!["1".into()],
                vec![1],
                vec![1],
                Some(Subspace::zero(f, 1)),
            )
        }
        AlgebraSpec::PolyQuotient { p, coeffs } => poly_quotient(*p, coeffs),
        AlgebraSpec::Matrix { base, n } => matrix_algebra(&build_algebra(base)?, *n),
        AlgebraSpec::UpperTriangular { p, n } => upper_triangular(*p, *n),
        AlgebraSpec::Product(a, b) => product_algebra(&build_algebra(a)?, &build_algebra(b)?),
        AlgebraSpec::Corner { base, e } => {
            let a = build_algebra(base)?;
            if e.len() != a.dim() {
                return Err(Error::DimensionMismatch { expected: a.dim(), found: e.len() });
            }
            let e: Vec<u32> = e.iter().map(|&x| a.field().reduce(x as i64)).collect();
            Ok(corner_algebra(&a, &e)?.0)
        }
        AlgebraSpec::Raw { p, labels, one, mul } => raw(*p, labels, one, mul),
    }
}

fn poly_quotient(p: u64, coeffs: &[u64]) -> Result<Ring> {
    let f = PrimeField::new(p)?;
    let coeffs: Vec<u32> = coeffs.iter().map(|&c| f.reduce((c % p) as i64)).collect();
    let n = coeffs.len().saturating_sub(1);
    if n == 0 || coeffs[n] != 1 {
        return Err(Error::NonMonic);
    }
    // x^n = -Σ_{t<n} f_t x^t; reduce a polynomial of degree < 2n - 1.
    let reduce = |mut poly: Vec<u32>| -> Vec<u32> {
        for deg in (n..poly.len()).rev() {
            let c = poly[deg];
            if c == 0 {
                continue;
            }
            poly[deg] = 0;
            for t in 0..n {
                let shift = deg - n + t;
                poly[shift] = f.sub(poly[shift], f.mul(c, coeffs[t]));
            }
        }
        poly.truncate(n);
        poly
    };
    let mut constants = vec![0u32; n * n * n];
    for i in 0..n {
        for j in 0..n {
            let mut poly = vec![0u32; 2 * n];
            poly[i + j] = 1;
            for (k, v) in reduce(poly).into_iter().enumerate() {
                constants[(i * n + j) * n + k] = v;
            }
        }
    }
    let labels = (0..n)
        .map(|i| match i {
            0 => "1".to_string(),
            1 => "x".to_string(),
            _ => format!("x^{i}"),
        })
        .collect();
    let mut one = vec![0; n];
    one[0] = 1;
    FiniteAlgebra::from_constants(f, labels, constants, one)
}

fn upper_triangular(p: u64, n: usize) -> Result<Ring> {
    let f = PrimeField::new(p)?;
    if n == 0 {
        return Err(Error::Precondition("matrix size must be at least 1".into()));
    }
    let units: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    let d = units.len();
    let index = |i: usize, j: usize| units.iter().position(|&u| u == (i, j));
    let mut constants = vec![0u32; d * d * d];
    for (a, &(i, j)) in units.iter().enumerate() {
        for (b, &(k, l)) in units.iter().enumerate() {
            if j == k {
                let c = index(i, l).expect("upper triangular product stays upper triangular");
                constants[(a * d + b) * d + c] = 1;
            }
        }
    }
    let mut one = vec![0u32; d];
    for i in 0..n {
        one[index(i, i).unwrap()] = 1;
    }
    let labels = units.iter().map(|&(i, j)| format!("E{}{}", i + 1, j + 1)).collect();
    let strictly_upper = Subspace::from_vectors(
        f,
        d,
        units.iter().enumerate().filter(|(_, &(i, j))| i < j).map(|(a, _)| {
            let mut v = vec![0u32; d];
            v[a] = 1;
            v
        }),
    );
    FiniteAlgebra::from_constants_with_hint(f, labels, constants, one, Some(strictly_upper))
}

fn raw(p: u64, labels: &[String], one: &[u64], mul: &[(usize, usize, Vec<u64>)]) -> Result<Ring> {
    let f = PrimeField::new(p)?;
    let d = labels.len();
    let mut constants = vec![0u32; d * d * d];
    for (i, j, coeffs) in mul {
        if *i >= d || *j >= d {
            return Err(Error::Parse(format!("mul triple index ({i}, {j}) out of range for dim {d}")));
        }
        if coeffs.len() != d {
            return Err(Error::Parse(format!(
                "mul triple ({i}, {j}) has {} coefficients, expected {d}",
                coeffs.len()
            )));
        }
        for (k, &c) in coeffs.iter().enumerate() {
            if c >= p {
                return Err(Error::UnreducedConstant { i: *i, j: *j, k, value: c, p: p as u32 });
            }
            constants[(i * d + j) * d + k] = c as u32;
        }
    }
    if one.len() != d {
        return Err(Error::DimensionMismatch { expected: d, found: one.len() });
    }
    let one = one.iter().map(|&c| f.reduce((c % p) as i64)).collect();
    FiniteAlgebra::from_constants(f, labels.to_vec(), constants, one)
}
