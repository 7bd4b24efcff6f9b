use super::{RightModule, Submodule};
use crate::error::Result;
use crate::guards::Guards;
use crate::linalg::for_each_vector;
use std::collections::{BTreeSet, HashMap};

/// Every submodule of a module, sorted by dimension and then by canonical basis.
#[derive(Debug, Clone)]
pub struct SubmoduleLattice {
    members: Vec<Submodule>,
    cyclic: Vec<usize>,
    index: HashMap<Submodule, usize>,
}

impl SubmoduleLattice {
    pub fn members(&self) -> &[Submodule] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn index_of(&self, s: &Submodule) -> Option<usize> {
        self.index.get(s).copied()
    }

    /// Indices of the cyclic members.
    pub fn cyclic(&self) -> &[usize] {
        &self.cyclic
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        self.members[i].is_subspace_of(&self.members[j])
    }

    /// Nonzero members with no nonzero proper submodule.
    pub fn minimal(&self) -> Vec<&Submodule> {
        let nonzero: Vec<&Submodule> = self.members.iter().filter(|s| !s.is_zero()).collect();
        nonzero
            .iter()
            .filter(|s| !nonzero.iter().any(|t| t.dim() < s.dim() && t.is_subspace_of(s)))
            .copied()
            .collect()
    }

    /// For each member, pairs (i, j) where j covers i.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.members.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if self.members[i].dim() < self.members[j].dim() && self.contains(i, j) {
                    let between = (0..n).any(|k| {
                        k != i
                            && k != j
                            && self.members[i].dim() < self.members[k].dim()
                            && self.members[k].dim() < self.members[j].dim()
                            && self.contains(i, k)
                            && self.contains(k, j)
                    });
                    if !between {
                        out.push((i, j));
                    }
                }
            }
        }
        out
    }

    /// Length of the longest strict chain from member i up to the whole module.
    pub fn height_above(&self) -> Vec<usize> {
        let n = self.members.len();
        let mut h = vec![0usize; n];
        // Members are sorted by dimension, so process from the top down.
        for i in (0..n).rev() {
            let mut best = 0;
            for j in i + 1..n {
                if self.members[j].dim() > self.members[i].dim() && self.contains(i, j) {
                    best = best.max(h[j] + 1);
                }
            }
            h[i] = best;
        }
        h
    }
}

/// All submodules, as sums of cyclic submodules closed to a fixpoint.
pub fn all_submodules(m: &RightModule, guards: &Guards) -> Result<SubmoduleLattice> {
    guards.lattice(m.field().count(m.dim()))?;
    let mut cyclics: BTreeSet<Submodule> = BTreeSet::new();
    for_each_vector(m.field(), m.dim(), |v| {
        cyclics.insert(m.cyclic(v));
        true
    });
    let cyclic_list: Vec<Submodule> = cyclics.iter().cloned().collect();
    let mut all: BTreeSet<Submodule> = cyclics.clone();
    let mut frontier: Vec<Submodule> = cyclic_list.clone();
    while let Some(x) = frontier.pop() {
        for c in &cyclic_list {
            if c.is_subspace_of(&x) {
                continue;
            }
            let s = x.sum(c);
            if !all.contains(&s) {
                all.insert(s.clone());
                frontier.push(s);
            }
        }
    }
    let mut members: Vec<Submodule> = all.into_iter().collect();
    members.sort_by(|a, b| a.dim().cmp(&b.dim()).then_with(|| a.cmp(b)));
    let index: HashMap<Submodule, usize> = members.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
    let cyclic = cyclic_list.iter().map(|c| index[c]).collect();
    Ok(SubmoduleLattice { members, cyclic, index })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{build_algebra, AlgebraSpec};
    use crate::module::{direct_sum, regular_module};

    #[test]
    fn lattice_counts() {
        let g = Guards::default();
        let f2 = build_algebra(&AlgebraSpec::Field { p: 2 }).unwrap();
        let v = direct_sum(&regular_module(&f2), &regular_module(&f2)).unwrap().module;
        assert_eq!(all_submodules(&v, &g).unwrap().len(), 5);
        let d = build_algebra(&AlgebraSpec::PolyQuotient { p: 2, coeffs: vec![0, 0, 1] }).unwrap();
        let lat = all_submodules(&regular_module(&d), &g).unwrap();
        assert_eq!(lat.len(), 3);
        assert_eq!(lat.members()[1].basis(), &[vec![0, 1]]);
        let zero = crate::module::RightModule::zero(&d);
        assert_eq!(all_submodules(&zero, &g).unwrap().len(), 1);
        let f3 = build_algebra(&AlgebraSpec::Field { p: 3 }).unwrap();
        let w = direct_sum(&regular_module(&f3), &regular_module(&f3)).unwrap().module;
        assert_eq!(all_submodules(&w, &g).unwrap().len(), 6);
    }

    #[test]
    fn heights_follow_composition_length() {
        let g = Guards::default();
        let c = build_algebra(&AlgebraSpec::PolyQuotient { p: 2, coeffs: vec![0, 0, 0, 1] }).unwrap();
        let lat = all_submodules(&regular_module(&c), &g).unwrap();
        assert_eq!(lat.height_above(), vec![3, 2, 1, 0]);
        assert_eq!(lat.covers().len(), 3);
        assert_eq!(lat.minimal().len(), 1);
    }

    #[test]
    fn guard_exceeded() {
        let g = Guards { max_lattice_vectors: 2, ..Guards::default() };
        let d = build_algebra(&AlgebraSpec::PolyQuotient { p: 2, coeffs: vec![0, 0, 1] }).unwrap();
        assert!(all_submodules(&regular_module(&d), &g).unwrap_err().is_guard());
    }
}
