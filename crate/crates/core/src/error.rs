use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus {0} is not prime")]
    NotPrime(u64),

    #[error("modulus {0} exceeds the supported bound 65521")]
    ModulusTooLarge(u64),

    #[error("structure constant {value} at ({i}, {j}, {k}) is not reduced modulo {p}")]
    UnreducedConstant { i: usize, j: usize, k: usize, value: u64, p: u32 },

    #[error("multiplication is not associative on basis triple ({i}, {j}, {k})")]
    NonAssociative { i: usize, j: usize, k: usize },

    #[error("identity law fails on basis element {0}")]
    IdentityLaw(usize),

    #[error("polynomial is not monic")]
    NonMonic,

    #[error("e² ≠ e")]
    NotIdempotent,

    #[error("the zero idempotent has no corner algebra")]
    ZeroIdempotent,

    #[error("idempotent is not full: span of AeA has dimension {span_dim}, algebra has dimension {dim}")]
    NotFull { span_dim: usize, dim: usize },

    #[error("operands live over different rings")]
    RingMismatch,

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("action of the identity is not the identity matrix")]
    ActionIdentity,

    #[error("action is not multiplicative on basis pair ({i}, {j})")]
    ActionNotMultiplicative { i: usize, j: usize },

    #[error("matrix does not commute with the ring action")]
    NotHomomorphism,

    #[error("subspace is not closed under the ring action")]
    NotSubmodule,

    #[error("guard `{guard}` exceeded: need {needed}, bound is {bound}")]
    GuardExceeded { guard: &'static str, needed: String, bound: u64 },

    #[error("inconclusive: {0}")]
    Inconclusive(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("THEOREM VIOLATION: {0}")]
    TheoremViolation(String),

    #[error("unknown witness rule `{0}`")]
    UnknownRule(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("io error: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn guard(guard: &'static str, needed: impl ToString, bound: u64) -> Self {
        Error::GuardExceeded { guard, needed: needed.to_string(), bound }
    }

    pub fn is_guard(&self) -> bool {
        matches!(self, Error::GuardExceeded { .. })
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
