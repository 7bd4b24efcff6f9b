use super::ModuleContext;
use crate::error::Result;
use crate::linalg::Matrix;
use crate::module::{iso_test, IsoVerdict, ModuleHom, RightModule, Submodule};
use serde::{Serialize, Serializer};
use std::fmt;

/// Which semisimple X, Y the semi-weak-CS quantifier ranges over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Reading {
    /// Semisimple submodules.
    Submodule,
    /// Semisimple direct summands only. Under this reading every module qualifies,
    /// since A = X and B = Y always realize the condition.
    LiteralSummand,
}

/// An admissible semisimple pair (X, Y) with no summands A ≥e X, B ≥e Y.
#[derive(Debug, Clone)]
pub struct ObstructionPair {
    pub x: Submodule,
    pub y: Submodule,
    /// An isomorphism X → Y on the bases of X and Y.
    pub iso_certificate: ModuleHom,
    pub minimal: bool,
    pub lengths: (usize, usize),
}

#[derive(Debug, Clone)]
pub struct SwcsAnalysis {
    pub reading: Reading,
    /// Number of unordered admissible pairs examined.
    pub admissible: usize,
    pub obstructions: Vec<ObstructionPair>,
}

/// ι_swCS: the least common length of an obstruction pair, or ∞.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ObstructionIndex {
    Finite(usize),
    Infinity,
}

impl fmt::Display for ObstructionIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ObstructionIndex::Finite(n) => write!(f, "{n}"),
            ObstructionIndex::Infinity => write!(f, "infinity"),
        }
    }
}

impl Serialize for ObstructionIndex {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            ObstructionIndex::Finite(n) => s.serialize_u64(*n as u64),
            ObstructionIndex::Infinity => s.serialize_str("infinity"),
        }
    }
}

struct Candidate {
    sub: Submodule,
    module: RightModule,
    class: usize,
    /// Isomorphism onto the class representative.
    to_rep: Matrix,
    essential_in_summand: bool,
    length: usize,
}

fn candidates(ctx: &ModuleContext, reading: Reading) -> Result<Vec<Candidate>> {
    let soc = ctx.socle()?.clone();
    let m = ctx.module();
    let summands = ctx.summand_members()?;
    let mut out: Vec<Candidate> = Vec::new();
    let mut reps: Vec<usize> = Vec::new();
    for x in ctx.lattice()?.members() {
        if x.is_zero() || !x.is_subspace_of(&soc) {
            continue;
        }
        if reading == Reading::LiteralSummand && !ctx.is_summand(x) {
            continue;
        }
        let module = m.submodule_module(x);
        let length = ctx.length(x)?;
        let mut class = None;
        for &r in &reps {
            let rep = &out[r];
            if rep.sub.dim() != x.dim() || rep.length != length {
                continue;
            }
            match iso_test(&module, &rep.module, ctx.guards())? {
                IsoVerdict::Isomorphic(h) => {
                    class = Some((rep.class, h.matrix().clone()));
                    break;
                }
                IsoVerdict::NotIsomorphic => {}
                v @ IsoVerdict::Inconclusive { .. } => {
                    v.decided()?;
                }
            }
        }
        let (class, to_rep) = match class {
            Some(c) => c,
            None => {
                reps.push(out.len());
                (reps.len() - 1, Matrix::identity(m.field(), x.dim()))
            }
        };
        let mut essential_in_summand = false;
        for a in summands {
            if ctx.essential_in(x, a)? {
                essential_in_summand = true;
                break;
            }
        }
        out.push(Candidate { sub: x.clone(), module, class, to_rep, essential_in_summand, length });
    }
    Ok(out)
}

/// Obs_swCS(M) under `reading`, with minimal pairs marked.
pub fn obs_swcs(ctx: &ModuleContext, reading: Reading) -> Result<SwcsAnalysis> {
    let cands = candidates(ctx, reading)?;
    let mut admissible = 0;
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 0..cands.len() {
        for j in i + 1..cands.len() {
            if cands[i].class != cands[j].class || !cands[i].sub.intersect(&cands[j].sub).is_zero() {
                continue;
            }
            admissible += 1;
            if !(cands[i].essential_in_summand && cands[j].essential_in_summand) {
                pairs.push((i, j));
            }
        }
    }
    let within = |a: usize, b: usize| cands[a].sub.is_subspace_of(&cands[b].sub);
    let mut obstructions = Vec::new();
    for &(i, j) in &pairs {
        // Minimal: no other obstruction pair sits inside (X, Y) in either orientation.
        let minimal = !pairs.iter().any(|&(k, l)| {
            (k, l) != (i, j) && ((within(k, i) && within(l, j)) || (within(l, i) && within(k, j)))
        });
        let rep_to_y = cands[j].to_rep.inverse().expect("isomorphism certificates are invertible");
        let iso = cands[i].to_rep.mul(&rep_to_y);
        obstructions.push(ObstructionPair {
            x: cands[i].sub.clone(),
            y: cands[j].sub.clone(),
            iso_certificate: ModuleHom::new_unchecked(&cands[i].module, &cands[j].module, iso),
            minimal,
            lengths: (cands[i].length, cands[j].length),
        });
    }
    Ok(SwcsAnalysis { reading, admissible, obstructions })
}

pub fn is_semiweak_cs(ctx: &ModuleContext, reading: Reading) -> Result<bool> {
    Ok(obs_swcs(ctx, reading)?.obstructions.is_empty())
}

impl SwcsAnalysis {
    pub fn index(&self) -> ObstructionIndex {
        self.obstructions
            .iter()
            .map(|p| p.lengths.0)
            .min()
            .map_or(ObstructionIndex::Infinity, ObstructionIndex::Finite)
    }
}

/// ι_swCS(M) under the submodule reading.
pub fn obstruction_index(ctx: &ModuleContext) -> Result<ObstructionIndex> {
    Ok(obs_swcs(ctx, Reading::Submodule)?.index())
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::*;
    use crate::algebra::{build_algebra, AlgebraSpec};
    use crate::guards::Guards;
    use crate::module::{direct_sum_all, is_summand_square_free, regular_module};

    fn ctx(m: &RightModule) -> ModuleContext {
        ModuleContext::new(m, &Guards::default())
    }

    #[test]
    fn r_plus_s_has_no_obstruction() {
        let c = ctx(&r_plus_s());
        let a = obs_swcs(&c, Reading::Submodule).unwrap();
        // Three simple submodules of the socle, pairwise disjoint and isomorphic.
        assert_eq!(a.admissible, 3);
        assert!(a.obstructions.is_empty());
        assert_eq!(a.index(), ObstructionIndex::Infinity);
    }

    #[test]
    fn index_examples() {
        let r = dual();
        assert_eq!(obstruction_index(&ctx(&regular_module(&r))).unwrap(), ObstructionIndex::Infinity);
        assert_eq!(obstruction_index(&ctx(&RightModule::zero(&r))).unwrap(), ObstructionIndex::Infinity);
        let ss = direct_sum_all(&f2(), &vec![regular_module(&f2()); 3]).unwrap();
        assert_eq!(obstruction_index(&ctx(&ss)).unwrap(), ObstructionIndex::Infinity);
        assert_eq!(serde_json::to_string(&ObstructionIndex::Infinity).unwrap(), "\"infinity\"");
        assert_eq!(serde_json::to_string(&ObstructionIndex::Finite(2)).unwrap(), "2");
    }

    #[test]
    fn square_zero_plane_is_summand_square_free_but_obstructed() {
        // A = 𝔽₂[x,y]/(x,y)² is local, so A_A is indecomposable and summand-square-free,
        // yet span{x} and span{y} are disjoint isomorphic simples and only A contains them.
        let a = build_algebra(&AlgebraSpec::Raw {
            p: 2,
            labels: vec!["1".into(), "x".into(), "y".into()],
            one: vec![1, 0, 0],
            mul: vec![
                (0, 0, vec![1, 0, 0]),
                (0, 1, vec![0, 1, 0]),
                (0, 2, vec![0, 0, 1]),
                (1, 0, vec![0, 1, 0]),
                (2, 0, vec![0, 0, 1]),
            ],
        })
        .unwrap();
        let m = regular_module(&a);
        let g = Guards::default();
        assert!(is_summand_square_free(&m, &g).unwrap());
        let c = ctx(&m);
        let obs = obs_swcs(&c, Reading::Submodule).unwrap();
        assert_eq!(obs.admissible, 3);
        assert_eq!(obs.obstructions.len(), 3);
        assert_eq!(obs.index(), ObstructionIndex::Finite(1));
        assert!(obs.obstructions.iter().all(|p| p.minimal));
        for p in &obs.obstructions {
            let h = &p.iso_certificate;
            assert!(h.is_isomorphism());
            assert!(ModuleHom::new(h.source(), h.target(), h.matrix().clone()).is_ok());
            assert_eq!(p.lengths, (1, 1));
        }
        assert!(is_semiweak_cs(&c, Reading::LiteralSummand).unwrap());
    }

    #[test]
    fn free_modules_over_the_dual_numbers_are_unobstructed() {
        // Each socle line of R ⊕ R is the socle of a summand copy of R.
        let m = square(&regular_module(&dual()));
        let obs = obs_swcs(&ctx(&m), Reading::Submodule).unwrap();
        assert_eq!(obs.admissible, 3);
        assert!(obs.obstructions.is_empty());
    }
}
