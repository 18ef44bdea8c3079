//! Plain permutations of `{0, .., n-1}`.

use std::fmt;

use crate::error::{Error, Result};

/// A bijection of `{0, .., n-1}` stored as its image vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self((0..n).collect())
    }

    /// Builds a permutation from its images, rejecting non-bijections.
    pub fn from_images(images: Vec<usize>) -> Option<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || std::mem::replace(&mut seen[x], true) {
                return None;
            }
        }
        Some(Self(images))
    }

    /// Product of disjoint transpositions.
    pub fn from_transpositions(n: usize, pairs: &[(usize, usize)]) -> Option<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut touched = vec![false; n];
        for &(x, y) in pairs {
            if x >= n || y >= n || x == y || touched[x] || touched[y] {
                return None;
            }
            touched[x] = true;
            touched[y] = true;
            images.swap(x, y);
        }
        Some(Self(images))
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.0[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::LabelSetMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(Self(other.0.iter().map(|&x| self.0[x]).collect()))
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.degree()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x] = i;
        }
        Self(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn is_involution(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| self.0[x] == i)
    }

    /// Nontrivial cycles, each starting at its least point, sorted by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.0[start] == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.0[start];
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.0[x];
            }
            out.push(cycle);
        }
        out
    }

    /// Cycle notation using `name` for points, `id` for the identity.
    pub fn format_with(&self, mut name: impl FnMut(usize) -> String) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "id".to_string();
        }
        cycles
            .iter()
            .map(|c| {
                let parts: Vec<String> = c.iter().map(|&x| name(x)).collect();
                format!("({})", parts.join(" "))
            })
            .collect()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_with(|x| x.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_applies_right_first() {
        let a = Permutation::from_images(vec![1, 2, 0]).unwrap();
        let b = Permutation::from_transpositions(3, &[(0, 1)]).unwrap();
        // a∘b: 0 -> b -> 1 -> a -> 2
        assert_eq!(a.compose(&b).unwrap().apply(0), 2);
        assert_eq!(b.compose(&a).unwrap().apply(0), 0);
        assert!(a.compose(&a.inverse()).unwrap().is_identity());
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::from_images(vec![0, 0]).is_none());
        assert!(Permutation::from_images(vec![0, 2]).is_none());
        assert!(Permutation::from_transpositions(4, &[(0, 1), (1, 2)]).is_none());
        assert!(Permutation::from_transpositions(4, &[(2, 2)]).is_none());
    }

    #[test]
    fn cycle_notation() {
        let p = Permutation::from_transpositions(4, &[(3, 1), (0, 2)]).unwrap();
        assert_eq!(p.to_string(), "(0 2)(1 3)");
        assert!(p.is_involution());
        assert_eq!(Permutation::identity(3).to_string(), "id");
        let c = Permutation::from_images(vec![1, 2, 0]).unwrap();
        assert!(!c.is_involution());
        assert_eq!(c.to_string(), "(0 1 2)");
    }
}
