//! Decorated graphs: one involution `j_s` of `S` per generator, fixing `s`.

use crate::error::{Error, Result};
use crate::label::LabelSet;
use crate::perm::Permutation;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecoratedGraph {
    labels: LabelSet,
    involutions: Vec<Permutation>,
}

impl DecoratedGraph {
    pub fn new(labels: LabelSet, involutions: Vec<Permutation>) -> Result<Self> {
        let n = labels.len();
        if involutions.len() != n {
            return Err(Error::LabelSetMismatch {
                left: n,
                right: involutions.len(),
            });
        }
        for (s, j) in involutions.iter().enumerate() {
            let label = labels.name(s).to_string();
            let bad = |reason: &str| Error::BadInvolution {
                label: label.clone(),
                reason: reason.to_string(),
            };
            if j.degree() != n {
                return Err(bad("acts on a different number of labels"));
            }
            if !j.is_involution() {
                return Err(bad("does not square to the identity"));
            }
            if j.apply(s) != s {
                return Err(bad("does not fix its own generator"));
            }
        }
        Ok(Self {
            labels,
            involutions,
        })
    }

    /// Graph with every `j_s` the identity (the right-angled case).
    pub fn trivial(labels: LabelSet) -> Self {
        let n = labels.len();
        Self {
            labels,
            involutions: vec![Permutation::identity(n); n],
        }
    }

    /// Convenience builder: `defs` lists `(s, [(u, v), ..])` meaning
    /// `j_s = (u v)...`; unlisted generators get the identity.
    pub fn from_transpositions(labels: &[&str], defs: &[(&str, &[(&str, &str)])]) -> Result<Self> {
        let labels = LabelSet::from_strs(labels)?;
        let n = labels.len();
        let mut involutions = vec![Permutation::identity(n); n];
        for (s, pairs) in defs {
            let s = labels.index_of(s)?;
            let pairs = pairs
                .iter()
                .map(|(u, v)| Ok((labels.index_of(u)?, labels.index_of(v)?)))
                .collect::<Result<Vec<_>>>()?;
            involutions[s] = Permutation::from_transpositions(n, &pairs).ok_or_else(|| {
                Error::BadInvolution {
                    label: labels.name(s).to_string(),
                    reason: "transpositions are not disjoint".to_string(),
                }
            })?;
        }
        Self::new(labels, involutions)
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &LabelSet {
        &self.labels
    }

    pub fn involution(&self, s: usize) -> &Permutation {
        &self.involutions[s]
    }

    pub fn involutions(&self) -> &[Permutation] {
        &self.involutions
    }

    /// `j_s(t)`.
    pub fn j(&self, s: usize, t: usize) -> usize {
        self.involutions[s].apply(t)
    }

    /// Cycle notation of `j_s` using label names.
    pub fn format_involution(&self, s: usize) -> String {
        self.involutions[s].format_with(|x| self.labels.name(x).to_string())
    }

    /// Restriction to an invariant subset `members` (ambient indices). Each
    /// restricted map is re-validated, so a non-invariant subset is rejected.
    pub fn restrict(&self, members: &[usize]) -> Result<DecoratedGraph> {
        let sub = self.labels.restrict(members)?;
        let ambient: Vec<usize> = sub
            .names()
            .iter()
            .map(|l| self.labels.index_of(l.as_str()))
            .collect::<Result<_>>()?;
        let mut local = vec![usize::MAX; self.rank()];
        for (i, &a) in ambient.iter().enumerate() {
            local[a] = i;
        }
        let mut involutions = Vec::with_capacity(ambient.len());
        for &t in &ambient {
            let images: Vec<usize> = ambient.iter().map(|&u| local[self.j(t, u)]).collect();
            let perm = Permutation::from_images(images).ok_or_else(|| Error::BadInvolution {
                label: self.labels.name(t).to_string(),
                reason: "subset is not invariant under this involution".to_string(),
            })?;
            involutions.push(perm);
        }
        Self::new(sub, involutions)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn validates_involutions() {
        let labels = LabelSet::from_strs(&["a", "b", "c"]).unwrap();
        let moves_self = Permutation::from_transpositions(3, &[(0, 1)]).unwrap();
        let err = DecoratedGraph::new(
            labels.clone(),
            vec![moves_self, Permutation::identity(3), Permutation::identity(3)],
        )
        .unwrap_err();
        assert!(matches!(err, Error::BadInvolution { .. }));

        let three_cycle = Permutation::from_images(vec![0, 2, 1]).unwrap();
        assert!(DecoratedGraph::new(
            labels.clone(),
            vec![three_cycle, Permutation::identity(3), Permutation::identity(3)]
        )
        .is_ok());
        let not_inv = Permutation::from_images(vec![1, 2, 0]).unwrap();
        assert!(DecoratedGraph::new(
            labels,
            vec![Permutation::identity(3), not_inv, Permutation::identity(3)]
        )
        .is_err());
    }

    #[test]
    fn restriction_to_invariant_subset() {
        let g = fixtures::d4();
        let bc = g.restrict(&[1, 2]).unwrap();
        assert_eq!(bc.rank(), 2);
        assert!(bc.involutions().iter().all(Permutation::is_identity));
        // {a, b} is not invariant: j_a swaps b and c
        assert!(g.restrict(&[0, 1]).is_err());
    }
}
