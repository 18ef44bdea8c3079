//! The geometric representation on `ℝ^S`, with exact integer entries.

use serde::Serialize;

use crate::decomposition::{orbits, perm_image};
use crate::decorated::DecoratedGraph;
use crate::error::{Error, Result};
use crate::label::LabelSet;
use crate::signed::{generator_rho, SignedPermutation};
use crate::trajectory::require_admissible;

/// Integer vector indexed by label.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct CubeVector(pub Vec<i64>);

/// `v_T = Σ_{s∉T} e_s − Σ_{s∈T} e_s`.
pub fn embed_vertex(labels: &LabelSet, subset: u32) -> Result<CubeVector> {
    if labels.len() < 32 && subset >> labels.len() != 0 {
        return Err(Error::UnknownLabel(format!("subset bit {}", 31 - subset.leading_zeros())));
    }
    Ok(CubeVector(
        (0..labels.len())
            .map(|s| if subset >> s & 1 == 1 { -1 } else { 1 })
            .collect(),
    ))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignCount {
    pub word: Vec<usize>,
    pub target: usize,
    pub count: usize,
}

impl SignCount {
    pub fn sign(&self) -> i8 {
        if self.count.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

/// Number of steps `i ∈ {0, .., k-1}` at which the next letter `s_{i+1}`
/// equals the current image `(j_{s_i} ∘ .. ∘ j_{s_1})(t)` of `t`; at `i = 0`
/// the image is `t` itself. Each such step flips the sign of the tracked
/// basis vector.
pub fn sign_count(g: &DecoratedGraph, word: &[usize], t: usize) -> Result<SignCount> {
    g.labels().check_index(t)?;
    let mut image = t;
    let mut count = 0;
    for &s in word {
        g.labels().check_index(s)?;
        if s == image {
            count += 1;
        }
        image = g.j(s, image);
    }
    Ok(SignCount {
        word: word.to_vec(),
        target: t,
        count,
    })
}

/// `ρ_g(e_t) = (−1)^{n(g,t)} e_{j_g(t)}`, computed without multiplying
/// matrices.
pub fn rho_via_formula(g: &DecoratedGraph, word: &[usize]) -> Result<SignedPermutation> {
    let perm = perm_image(g, word)?;
    let signs = (0..g.rank())
        .map(|t| sign_count(g, word, t).map(|c| c.sign()))
        .collect::<Result<Vec<_>>>()?;
    SignedPermutation::new(perm, &signs)
}

/// Orbit blocks `T` with `ℝ^T` invariant, after checking every generator
/// matrix maps the coordinates of each block into the block.
pub fn invariant_coordinate_subspaces(g: &DecoratedGraph) -> Result<Vec<Vec<usize>>> {
    require_admissible(g)?;
    let blocks = orbits(g).blocks;
    for s in 0..g.rank() {
        let rho = generator_rho(g, s)?;
        for block in &blocks {
            if let Some(&t) = block.iter().find(|&&t| !block.contains(&rho.perm().apply(t))) {
                return Err(Error::TransitiveOrbit(format!(
                    "ρ_{} moves e_{} out of its block",
                    g.labels().name(s),
                    g.labels().name(t)
                )));
            }
        }
    }
    Ok(blocks)
}

/// Reducible iff `S` splits into at least two invariant coordinate blocks.
pub fn is_reducible(g: &DecoratedGraph) -> Result<bool> {
    if g.rank() < 2 {
        return Err(Error::RankTooSmall(g.rank()));
    }
    Ok(invariant_coordinate_subspaces(g)?.len() >= 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::signed::word_matrix;

    #[test]
    fn embeddings() {
        let l = LabelSet::alphabetic(3).unwrap();
        assert_eq!(embed_vertex(&l, 0).unwrap().0, vec![1, 1, 1]);
        assert_eq!(embed_vertex(&l, 0b111).unwrap().0, vec![-1, -1, -1]);
        assert_eq!(embed_vertex(&l, 0b001).unwrap().0, vec![-1, 1, 1]);
        assert!(embed_vertex(&l, 0b1000).is_err());
    }

    #[test]
    fn sign_counts() {
        let g = fixtures::d4();
        assert_eq!(sign_count(&g, &[0], 0).unwrap().count, 1);
        assert_eq!(sign_count(&g, &[0], 1).unwrap().count, 0);
        // b first, then a: ρ_a ρ_b e_b = ρ_a(−e_b) = −e_c
        let c = sign_count(&g, &[1, 0], 1).unwrap();
        assert_eq!(c.count, 1);
        let m = word_matrix(&g, &[1, 0]).unwrap();
        assert_eq!(m.apply(&[0, 1, 0]), vec![0, 0, -1]);
        assert!(sign_count(&g, &[0], 9).is_err());
    }

    #[test]
    fn formula_cases() {
        let g = fixtures::d4();
        assert!(rho_via_formula(&g, &[]).unwrap().is_identity());
        assert_eq!(rho_via_formula(&g, &[0]).unwrap(), generator_rho(&g, 0).unwrap());
        let f = fixtures::five_simplex();
        assert!(rho_via_formula(&f, &[0, 1, 2, 3]).unwrap().is_identity());
        assert!(word_matrix(&f, &[0, 1, 2, 3]).unwrap().is_identity());
    }

    #[test]
    fn subspaces_and_reducibility() {
        let g = fixtures::d4();
        assert_eq!(invariant_coordinate_subspaces(&g).unwrap(), vec![vec![0], vec![1, 2]]);
        assert!(is_reducible(&g).unwrap());
        let triv = DecoratedGraph::trivial(LabelSet::alphabetic(4).unwrap());
        assert_eq!(invariant_coordinate_subspaces(&triv).unwrap().len(), 4);
        assert!(is_reducible(&fixtures::five_simplex()).unwrap());
        let one = DecoratedGraph::trivial(LabelSet::alphabetic(1).unwrap());
        assert!(matches!(is_reducible(&one), Err(Error::RankTooSmall(1))));
        assert!(matches!(
            invariant_coordinate_subspaces(&fixtures::non_periodic_rank3()),
            Err(Error::NotAdmissible(_))
        ));
    }
}
