use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::path::Path;

/// Enumeration bounds. Every exhaustive quantifier checks one of these before it starts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct Guards {
    /// Bound on p^dim(M) for submodule lattice enumeration.
    pub max_lattice_vectors: u64,
    /// Bound on p^dim(End M) for idempotent scans of the endomorphism ring.
    pub max_end_enumeration: u64,
    /// Bound on the number of homomorphisms scanned per witness family.
    pub max_hom_scan: u64,
    /// Bound on p^dim(Hom) for exhaustive isomorphism search.
    pub max_iso_search: u64,
    /// Bound on |A| = p^dim(A) for element enumeration in an algebra.
    pub max_algebra_enumeration: u64,
    /// Random samples drawn by the isomorphism search above `max_iso_search`.
    pub iso_sample_budget: u64,
    pub rng_seed: u64,
}

impl Default for Guards {
    fn default() -> Self {
        Guards {
            max_lattice_vectors: 1 << 16,
            max_end_enumeration: 1 << 20,
            max_hom_scan: 1 << 20,
            max_iso_search: 1 << 16,
            max_algebra_enumeration: 1 << 20,
            iso_sample_budget: 4096,
            rng_seed: 0x0C4_1AB,
        }
    }
}

impl Guards {
    pub fn validate(&self) -> Result<()> {
        let all = [
            self.max_lattice_vectors,
            self.max_end_enumeration,
            self.max_hom_scan,
            self.max_iso_search,
            self.max_algebra_enumeration,
            self.iso_sample_budget,
        ];
        if all.iter().any(|&g| g == 0) {
            return Err(Error::Precondition("every guard must be positive".into()));
        }
        Ok(())
    }

    pub fn from_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        let g: Guards = serde_json::from_str(&text)?;
        g.validate()?;
        Ok(g)
    }

    pub(crate) fn check(&self, guard: &'static str, needed: u128, bound: u64) -> Result<()> {
        if needed > bound as u128 {
            Err(Error::guard(guard, needed, bound))
        } else {
            Ok(())
        }
    }

    pub(crate) fn lattice(&self, needed: u128) -> Result<()> {
        self.check("max_lattice_vectors", needed, self.max_lattice_vectors)
    }

    pub(crate) fn end(&self, needed: u128) -> Result<()> {
        self.check("max_end_enumeration", needed, self.max_end_enumeration)
    }

    pub(crate) fn hom_scan(&self, needed: u128) -> Result<()> {
        self.check("max_hom_scan", needed, self.max_hom_scan)
    }

    pub(crate) fn algebra(&self, needed: u128) -> Result<()> {
        self.check("max_algebra_enumeration", needed, self.max_algebra_enumeration)
    }
}
