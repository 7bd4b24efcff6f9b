//! Decision procedures for C4, C4*, semi-weak-CS and strongly C4* over finite
//! 𝔽_p-algebras, with explicit Morita transport along free powers and full corners.

pub mod algebra;
pub mod conditions;
pub mod error;
pub mod field;
pub mod guards;
pub mod linalg;
pub mod module;
pub mod harness;
pub mod morita;

pub use algebra::{AlgebraElement, AlgebraSpec, FiniteAlgebra, IdealBasis, Ring};
pub use error::{Error, Result};
pub use field::PrimeField;
pub use guards::Guards;
