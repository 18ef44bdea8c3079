//! Signed permutations: the matrices `ρ_g` acting on the basis `{e_t}`.

use std::fmt;

use crate::decorated::DecoratedGraph;
use crate::error::{Error, Result};
use crate::label::{LabelSet, MAX_RANK};
use crate::perm::Permutation;

/// `e_t ↦ sign(t) · e_{perm(t)}`. Signs are kept as a bitmask of the labels
/// sent to a negative basis vector, which caps the dimension at `MAX_RANK`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    perm: Permutation,
    negative: u32,
}

impl SignedPermutation {
    pub fn identity(n: usize) -> Self {
        assert!(n <= MAX_RANK, "rank {n} exceeds MAX_RANK");
        Self {
            perm: Permutation::identity(n),
            negative: 0,
        }
    }

    pub fn new(perm: Permutation, signs: &[i8]) -> Result<Self> {
        let n = perm.degree();
        if signs.len() != n {
            return Err(Error::LabelSetMismatch {
                left: n,
                right: signs.len(),
            });
        }
        if n > MAX_RANK {
            return Err(Error::RankCapExceeded { rank: n, cap: MAX_RANK });
        }
        let negative = signs
            .iter()
            .enumerate()
            .filter(|(_, &s)| s < 0)
            .fold(0, |m, (t, _)| m | 1 << t);
        Ok(Self { perm, negative })
    }

    pub fn degree(&self) -> usize {
        self.perm.degree()
    }

    pub fn perm(&self) -> &Permutation {
        &self.perm
    }

    pub fn sign(&self, t: usize) -> i8 {
        if self.negative >> t & 1 == 1 {
            -1
        } else {
            1
        }
    }

    pub fn signs(&self) -> Vec<i8> {
        (0..self.degree()).map(|t| self.sign(t)).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.negative == 0 && self.perm.is_identity()
    }

    /// `self ∘ other`: the matrix product `self · other`.
    pub fn compose(&self, other: &SignedPermutation) -> Result<SignedPermutation> {
        let perm = self.perm.compose(&other.perm)?;
        let mut negative = 0u32;
        for t in 0..self.degree() {
            let flipped = (other.negative >> t & 1) ^ (self.negative >> other.perm.apply(t) & 1);
            negative |= flipped << t;
        }
        Ok(Self { perm, negative })
    }

    pub fn transpose(&self) -> SignedPermutation {
        // column t of self holds sign(t) in row perm(t); transposing moves it
        // to column perm(t)
        let inv = self.perm.inverse();
        let negative = (0..self.degree())
            .filter(|&t| self.negative >> t & 1 == 1)
            .fold(0, |m, t| m | 1 << self.perm.apply(t));
        Self { perm: inv, negative }
    }

    /// Image of an integer vector.
    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        let mut out = vec![0; v.len()];
        for (t, &x) in v.iter().enumerate() {
            out[self.perm.apply(t)] = i64::from(self.sign(t)) * x;
        }
        out
    }

    /// Dense matrix, `rows[r][c]`, with column `t` equal to the image of `e_t`.
    pub fn matrix(&self) -> Vec<Vec<i64>> {
        let n = self.degree();
        let mut m = vec![vec![0; n]; n];
        for t in 0..n {
            m[self.perm.apply(t)][t] = i64::from(self.sign(t));
        }
        m
    }

    /// Renders the action on basis vectors, e.g. `a↦-a b↦c c↦b`.
    pub fn format(&self, labels: &LabelSet) -> String {
        (0..self.degree())
            .map(|t| {
                let sign = if self.sign(t) < 0 { "-" } else { "" };
                format!("{}↦{}{}", labels.name(t), sign, labels.name(self.perm.apply(t)))
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} signs {:0width$b}", self.perm, self.negative, width = self.degree())
    }
}

/// `ρ_s`: `e_s ↦ -e_s` and `e_t ↦ e_{j_s(t)}` for `t ≠ s`.
pub fn generator_rho(g: &DecoratedGraph, s: usize) -> Result<SignedPermutation> {
    g.labels().check_index(s)?;
    Ok(SignedPermutation {
        perm: g.involution(s).clone(),
        negative: 1 << s,
    })
}

/// Composite `ρ_{w_k} ∘ .. ∘ ρ_{w_1}` of a word in application order.
pub fn word_matrix(g: &DecoratedGraph, word: &[usize]) -> Result<SignedPermutation> {
    word.iter().try_fold(SignedPermutation::identity(g.rank()), |acc, &s| {
        generator_rho(g, s)?.compose(&acc)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    /// Plain integer matrix product, independent of `compose`.
    fn matmul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
        let n = a.len();
        (0..n)
            .map(|r| (0..n).map(|c| (0..n).map(|k| a[r][k] * b[k][c]).sum()).collect())
            .collect()
    }

    #[test]
    fn generator_matrices() {
        let g = fixtures::d4();
        let ra = generator_rho(&g, 0).unwrap();
        assert_eq!(ra.perm().images(), &[0, 2, 1]);
        assert_eq!(ra.signs(), vec![-1, 1, 1]);
        let rb = generator_rho(&g, 1).unwrap();
        assert!(rb.perm().is_identity());
        assert_eq!(rb.signs(), vec![1, -1, 1]);
        assert!(matches!(generator_rho(&g, 3), Err(Error::UnknownLabel(_))));
        for s in 0..3 {
            let r = generator_rho(&g, s).unwrap();
            assert!(r.compose(&r).unwrap().is_identity());
        }
    }

    #[test]
    fn compose_matches_matrix_product() {
        let g = fixtures::d4();
        let ra = generator_rho(&g, 0).unwrap();
        let rb = generator_rho(&g, 1).unwrap();
        let ab = ra.compose(&rb).unwrap();
        assert_eq!(ab.matrix(), matmul(&ra.matrix(), &rb.matrix()));
        // ρ_a ρ_b e_b = -e_c
        assert_eq!(ab.apply(&[0, 1, 0]), vec![0, 0, -1]);
        let id = SignedPermutation::identity(3);
        assert_eq!(id.compose(&ab).unwrap(), ab);
        assert!(matches!(
            id.compose(&SignedPermutation::identity(2)),
            Err(Error::LabelSetMismatch { .. })
        ));
    }

    #[test]
    fn transpose_is_inverse() {
        let g = fixtures::five_simplex();
        let m = word_matrix(&g, &[0, 4, 1, 2, 4]).unwrap();
        assert!(m.compose(&m.transpose()).unwrap().is_identity());
        let dense = m.matrix();
        let t = m.transpose().matrix();
        for r in 0..5 {
            for c in 0..5 {
                assert_eq!(dense[r][c], t[c][r]);
            }
        }
    }
}
