//! The permutation representation `j: G → Aut(S)`, orbits, orbit trees and
//! boolean normal forms.

use serde::Serialize;

use crate::decorated::DecoratedGraph;
use crate::error::{Error, Result};
use crate::group::CubeGroup;
use crate::perm::Permutation;
use crate::trajectory::require_admissible;

/// `j_{wk} ∘ .. ∘ j_{w1}` for a word in application order.
pub fn perm_image(g: &DecoratedGraph, word: &[usize]) -> Result<Permutation> {
    word.iter().try_fold(Permutation::identity(g.rank()), |acc, &s| {
        g.labels().check_index(s)?;
        g.involution(s).compose(&acc)
    })
}

/// Disjoint label blocks, each sorted, ordered by least member.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitPartition {
    pub blocks: Vec<Vec<usize>>,
}

impl OrbitPartition {
    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }
}

/// Orbits of the group generated by the `j_s`: connected components of
/// `u ~ j_t(u)`.
pub fn orbits(g: &DecoratedGraph) -> OrbitPartition {
    let n = g.rank();
    let mut block_of = vec![usize::MAX; n];
    let mut blocks = Vec::new();
    for start in 0..n {
        if block_of[start] != usize::MAX {
            continue;
        }
        let id = blocks.len();
        let mut block = vec![start];
        block_of[start] = id;
        let mut i = 0;
        while i < block.len() {
            let u = block[i];
            for t in 0..n {
                let v = g.j(t, u);
                if block_of[v] == usize::MAX {
                    block_of[v] = id;
                    block.push(v);
                }
            }
            i += 1;
        }
        block.sort_unstable();
        blocks.push(block);
    }
    OrbitPartition { blocks }
}

/// At least two orbits on `S` (rank ≥ 2).
pub fn two_orbit_check(g: &DecoratedGraph) -> Result<bool> {
    if g.rank() < 2 {
        return Err(Error::RankTooSmall(g.rank()));
    }
    Ok(orbits(g).block_count() >= 2)
}

/// Node of the orbit tree; `labels` are indices into the root label set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitTree {
    pub labels: Vec<usize>,
    pub children: Vec<OrbitTree>,
}

impl OrbitTree {
    pub fn leaf(label: usize) -> Self {
        Self {
            labels: vec![label],
            children: Vec::new(),
        }
    }

    /// Node whose label set is the union of its children's.
    pub fn node(children: Vec<OrbitTree>) -> Self {
        let mut labels: Vec<usize> = children.iter().flat_map(|c| c.labels.iter().copied()).collect();
        labels.sort_unstable();
        Self { labels, children }
    }

    pub fn is_leaf(&self) -> bool {
        self.children.is_empty()
    }

    /// Leaves read left to right.
    pub fn ordering(&self) -> Vec<usize> {
        self.ordering_with(&mut |_| None)
    }

    /// Leaves read left to right after reordering children. `choose` is
    /// called at each internal node in pre-order and may return a
    /// permutation of `0..children.len()`; `None` keeps the stored order.
    pub fn ordering_with(&self, choose: &mut dyn FnMut(&OrbitTree) -> Option<Vec<usize>>) -> Vec<usize> {
        if self.is_leaf() {
            return self.labels.clone();
        }
        let order = choose(self).unwrap_or_else(|| (0..self.children.len()).collect());
        order
            .into_iter()
            .flat_map(|i| self.children[i].ordering_with(choose))
            .collect()
    }

    /// Every planar reading of the tree (product over nodes of the number of
    /// child orders).
    pub fn planar_orderings(&self) -> Vec<Vec<usize>> {
        if self.is_leaf() {
            return vec![self.labels.clone()];
        }
        let child_options: Vec<Vec<Vec<usize>>> =
            self.children.iter().map(OrbitTree::planar_orderings).collect();
        let mut out = Vec::new();
        for order in permutations(self.children.len()) {
            let mut partial: Vec<Vec<usize>> = vec![Vec::new()];
            for &c in &order {
                partial = partial
                    .iter()
                    .flat_map(|p| {
                        child_options[c].iter().map(move |o| {
                            let mut q = p.clone();
                            q.extend_from_slice(o);
                            q
                        })
                    })
                    .collect();
            }
            out.extend(partial);
        }
        out
    }

    /// Bracketed rendering such as `{a,b,c}[{a} {b,c}[{b} {c}]]`.
    pub fn display(&self, g: &DecoratedGraph) -> String {
        let names: Vec<&str> = self.labels.iter().map(|&i| g.labels().name(i).as_str()).collect();
        let mut s = format!("{{{}}}", names.join(","));
        if !self.is_leaf() {
            let kids: Vec<String> = self.children.iter().map(|c| c.display(g)).collect();
            s.push_str(&format!("[{}]", kids.join(" ")));
        }
        s
    }
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(k - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, k - 1);
            out.push(q);
        }
    }
    out.sort();
    out
}

/// Recursive orbit decomposition. Each child is an orbit of the restricted
/// graph on its parent, which is again admissible.
pub fn orbit_tree(g: &DecoratedGraph) -> Result<OrbitTree> {
    require_admissible(g)?;
    let all: Vec<usize> = (0..g.rank()).collect();
    build_tree(g, &all)
}

fn build_tree(root: &DecoratedGraph, members: &[usize]) -> Result<OrbitTree> {
    if members.len() == 1 {
        return Ok(OrbitTree::leaf(members[0]));
    }
    let sub = root.restrict(members)?;
    let parts = orbits(&sub);
    if parts.block_count() < 2 {
        return Err(Error::TransitiveOrbit(root.labels().format_subset(
            members.iter().fold(0, |m, &i| m | 1 << i),
        )));
    }
    // members are sorted, so local index i is members[i]
    let children = parts
        .blocks
        .iter()
        .map(|b| {
            let block: Vec<usize> = b.iter().map(|&i| members[i]).collect();
            build_tree(root, &block)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(OrbitTree {
        labels: members.to_vec(),
        children,
    })
}

/// Left-to-right leaf order of the tree.
pub fn decomposition_ordering(t: &OrbitTree) -> Vec<usize> {
    t.ordering()
}

/// Exponent vectors `m ∈ {0,1}^n` stored with `m_i` at bit `i-1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalForm {
    pub ordering: Vec<usize>,
    /// `table[m]` = element id of `s1^{m1} ⋯ sn^{mn}`.
    pub table: Vec<usize>,
    /// Inverse of `table`.
    pub bits_of: Vec<u32>,
}

impl NormalForm {
    pub fn element(&self, bits: u32) -> usize {
        self.table[bits as usize]
    }

    pub fn bits(&self, element: usize) -> u32 {
        self.bits_of[element]
    }

    /// `m1 m2 .. mn` as a 0/1 string.
    pub fn format_bits(&self, bits: u32) -> String {
        format_bits(bits, self.ordering.len())
    }

    /// Generators with `m_i = 1`, in product order.
    pub fn factors(&self, bits: u32) -> Vec<usize> {
        (0..self.ordering.len())
            .filter(|&i| bits >> i & 1 == 1)
            .map(|i| self.ordering[i])
            .collect()
    }
}

fn format_bits(bits: u32, n: usize) -> String {
    (0..n).map(|i| if bits >> i & 1 == 1 { '1' } else { '0' }).collect()
}

/// Builds the table of all `2^n` products `s1^{m1} ⋯ sn^{mn}` and checks it
/// is a bijection onto `G`.
pub fn normal_form(group: &CubeGroup, ordering: &[usize]) -> Result<NormalForm> {
    let n = group.rank();
    let mut seen = vec![false; n];
    for &s in ordering {
        group.labels().check_index(s)?;
        if std::mem::replace(&mut seen[s], true) {
            return Err(Error::BadOrdering(format!("{} repeated", group.labels().name(s))));
        }
    }
    if ordering.len() != n {
        return Err(Error::BadOrdering(format!("{} of {n} labels", ordering.len())));
    }
    let gens: Vec<usize> = ordering.iter().map(|&s| group.generator_id(s)).collect();
    let size = 1usize << n;
    let mut table = vec![0usize; size];
    let mut bits_of = vec![u32::MAX; size];
    for bits in 0..size {
        // strip the highest set bit: table[bits] = table[rest] · s_top
        let elem = if bits == 0 {
            0
        } else {
            let top = usize::BITS - 1 - bits.leading_zeros();
            group.multiply(table[bits ^ 1 << top], gens[top as usize])
        };
        table[bits] = elem;
        if bits_of[elem] != u32::MAX {
            let names = group.labels().format_word(ordering);
            return Err(Error::NotADecomposition {
                ordering: names,
                first: format_bits(bits_of[elem], n),
                second: format_bits(bits as u32, n),
            });
        }
        bits_of[elem] = bits as u32;
    }
    Ok(NormalForm {
        ordering: ordering.to_vec(),
        table,
        bits_of,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::group::generate_group;
    use crate::label::LabelSet;

    #[test]
    fn perm_images() {
        let g = fixtures::d4();
        assert_eq!(perm_image(&g, &[0]).unwrap(), g.involution(0).clone());
        assert!(perm_image(&g, &[]).unwrap().is_identity());
        assert_eq!(perm_image(&g, &[0, 1, 0]).unwrap(), perm_image(&g, &[2]).unwrap());
        assert!(perm_image(&g, &[5]).is_err());
    }

    #[test]
    fn d4_orbits_and_tree() {
        let g = fixtures::d4();
        assert_eq!(orbits(&g).blocks, vec![vec![0], vec![1, 2]]);
        let t = orbit_tree(&g).unwrap();
        assert_eq!(t.display(&g), "{a,b,c}[{a} {b,c}[{b} {c}]]");
        assert_eq!(decomposition_ordering(&t), vec![0, 1, 2]);
        assert_eq!(t.planar_orderings().len(), 4);
        assert!(two_orbit_check(&g).unwrap());
    }

    #[test]
    fn trivial_action_orbits() {
        let g = DecoratedGraph::trivial(LabelSet::alphabetic(4).unwrap());
        assert_eq!(orbits(&g).block_count(), 4);
        let one = DecoratedGraph::trivial(LabelSet::alphabetic(1).unwrap());
        let t = orbit_tree(&one).unwrap();
        assert!(t.is_leaf());
        assert_eq!(t.ordering(), vec![0]);
        assert!(matches!(two_orbit_check(&one), Err(Error::RankTooSmall(1))));
    }

    #[test]
    fn hand_built_rank8_tree() {
        // a b c d e f g h = 0..8
        let pair = |x, y| OrbitTree::node(vec![OrbitTree::leaf(x), OrbitTree::leaf(y)]);
        let t1 = OrbitTree::node(vec![pair(0, 4), pair(1, 5)]);
        let t2 = OrbitTree::node(vec![pair(2, 6), pair(3, 7)]);
        let root = OrbitTree::node(vec![t1, t2]);
        assert_eq!(decomposition_ordering(&root), vec![0, 4, 1, 5, 2, 6, 3, 7]);
        assert_eq!(root.planar_orderings().len(), 2 * 2 * 2 * 2 * 2 * 2 * 2);
        let swapped = root.ordering_with(&mut |n| (n.labels.len() == 8).then(|| vec![1, 0]));
        assert_eq!(swapped, vec![2, 6, 3, 7, 0, 4, 1, 5]);
    }

    #[test]
    fn d4_normal_forms() {
        let grp = generate_group(&fixtures::d4()).unwrap();
        let nf = normal_form(&grp, &[0, 1, 2]).unwrap();
        assert_eq!(nf.table.len(), 8);
        let a = grp.generator_id(0);
        assert_eq!(nf.format_bits(nf.bits(a)), "100");
        match normal_form(&grp, &[1, 0, 2]) {
            Err(Error::NotADecomposition { first, second, .. }) => {
                // ba = ac
                assert_eq!((first.as_str(), second.as_str()), ("110", "011"));
            }
            other => panic!("expected collision, got {other:?}"),
        }
        assert!(matches!(normal_form(&grp, &[0, 0, 1]), Err(Error::BadOrdering(_))));
        assert!(matches!(normal_form(&grp, &[0, 1]), Err(Error::BadOrdering(_))));
    }

    #[test]
    fn rank_one_normal_form() {
        let grp = generate_group(&DecoratedGraph::trivial(LabelSet::alphabetic(1).unwrap())).unwrap();
        let nf = normal_form(&grp, &[0]).unwrap();
        assert_eq!(nf.table, vec![0, 1]);
    }
}
