//! Exhaustive enumeration of decorated graphs at small rank and the
//! verification sweep run over every admissible one.

use serde::Serialize;

use crate::decomposition::{normal_form, orbit_tree, orbits, two_orbit_check};
use crate::decorated::DecoratedGraph;
use crate::error::{Error, Result};
use crate::group::{decorated_graph_from_group, generate_group, standard_subgroup, CubeGroup, SignedPermutationGroup};
use crate::io::serialize_decorated_graph;
use crate::label::LabelSet;
use crate::par::{map_range, Execution};
use crate::perm::Permutation;
use crate::representation::{is_reducible, rho_via_formula};
use crate::signed::word_matrix;
use crate::trajectory::{admissible, presentation_relators};

/// Largest rank accepted by the enumerator: `I(4)^5 = 100000` graphs.
pub const ENUMERATION_RANK_CAP: usize = 5;

/// Number of involutions on `m` points: `I(m) = I(m-1) + (m-1) I(m-2)`.
pub fn involution_count(m: usize) -> u64 {
    let (mut prev, mut cur) = (1u64, 1u64);
    for k in 1..m {
        (prev, cur) = (cur, cur + k as u64 * prev);
    }
    cur
}

/// Involutions of `0..n` fixing `s`, sorted by image vector.
fn involutions_fixing(n: usize, s: usize) -> Vec<Permutation> {
    fn extend(free: &[usize], images: &mut Vec<usize>, out: &mut Vec<Permutation>) {
        let Some((&x, rest)) = free.split_first() else {
            out.push(Permutation::from_images(images.clone()).expect("involution"));
            return;
        };
        extend(rest, images, out);
        for (k, &y) in rest.iter().enumerate() {
            images.swap(x, y);
            let remaining: Vec<usize> = rest.iter().enumerate().filter(|&(i, _)| i != k).map(|(_, &z)| z).collect();
            extend(&remaining, images, out);
            images.swap(x, y);
        }
    }
    let free: Vec<usize> = (0..n).filter(|&t| t != s).collect();
    let mut out = Vec::new();
    extend(&free, &mut (0..n).collect(), &mut out);
    out.sort();
    out
}

/// All decorated graphs on `a, b, ..` of a given rank, in lexicographic
/// order of `(j_a, j_b, ..)`.
#[derive(Debug, Clone)]
pub struct DecoratedGraphs {
    labels: LabelSet,
    choices: Vec<Vec<Permutation>>,
    total: usize,
    next: usize,
}

impl DecoratedGraphs {
    pub fn new(rank: usize) -> Result<Self> {
        if rank == 0 || rank > ENUMERATION_RANK_CAP {
            return Err(Error::RankCapExceeded {
                rank,
                cap: ENUMERATION_RANK_CAP,
            });
        }
        let choices: Vec<Vec<Permutation>> = (0..rank).map(|s| involutions_fixing(rank, s)).collect();
        let total = choices.iter().map(Vec::len).product();
        Ok(Self {
            labels: LabelSet::alphabetic(rank)?,
            choices,
            total,
            next: 0,
        })
    }

    pub fn total(&self) -> usize {
        self.total
    }

    /// The graph at position `index` of the enumeration.
    pub fn graph_at(&self, index: usize) -> DecoratedGraph {
        assert!(index < self.total, "graph index out of range");
        let mut rest = index;
        let mut involutions = vec![Permutation::identity(0); self.choices.len()];
        for (s, opts) in self.choices.iter().enumerate().rev() {
            involutions[s] = opts[rest % opts.len()].clone();
            rest /= opts.len();
        }
        DecoratedGraph::new(self.labels.clone(), involutions).expect("enumerated graphs are valid")
    }
}

impl Iterator for DecoratedGraphs {
    type Item = DecoratedGraph;

    fn next(&mut self) -> Option<DecoratedGraph> {
        (self.next < self.total).then(|| {
            self.next += 1;
            self.graph_at(self.next - 1)
        })
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = self.total - self.next;
        (left, Some(left))
    }
}

pub fn enumerate_decorated_graphs(rank: usize) -> Result<DecoratedGraphs> {
    DecoratedGraphs::new(rank)
}

#[derive(Debug, Clone, Copy)]
pub struct SweepOptions {
    /// Check the normal form for every planar reading of the orbit tree up
    /// to this rank; above it only the stored reading is checked.
    pub planar_rank_limit: usize,
    /// Compare the sign formula with matrix products on all words up to
    /// this length.
    pub word_length: usize,
    pub execution: Execution,
}

impl Default for SweepOptions {
    fn default() -> Self {
        Self {
            planar_rank_limit: 3,
            word_length: 4,
            execution: Execution::Parallel,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepFailure {
    pub index: usize,
    pub graph: String,
    pub check: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub rank: usize,
    pub total_graphs: usize,
    pub admissible_count: usize,
    pub verified_count: usize,
    pub failures: Vec<SweepFailure>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.verified_count == self.admissible_count
    }
}

/// Outcome of the battery on one graph: `None` when inadmissible.
pub type GraphOutcome = Option<Vec<(String, String)>>;

pub fn sweep(rank: usize) -> Result<SweepReport> {
    sweep_with(rank, &SweepOptions::default())
}

pub fn sweep_with(rank: usize, opts: &SweepOptions) -> Result<SweepReport> {
    let total = DecoratedGraphs::new(rank)?.total();
    sweep_range(rank, 0..total, opts)
}

/// Sweeps graphs `range` of the enumeration; used to resume or bisect.
pub fn sweep_range(rank: usize, range: std::ops::Range<usize>, opts: &SweepOptions) -> Result<SweepReport> {
    let graphs = DecoratedGraphs::new(rank)?;
    let range = range.start.min(graphs.total())..range.end.min(graphs.total());
    let outcomes = map_range(range.clone(), opts.execution, |i| verify_graph(&graphs.graph_at(i), opts));
    let mut report = SweepReport {
        rank,
        total_graphs: range.len(),
        admissible_count: 0,
        verified_count: 0,
        failures: Vec::new(),
    };
    for (index, outcome) in range.zip(outcomes) {
        let Some(failures) = outcome else { continue };
        report.admissible_count += 1;
        if failures.is_empty() {
            report.verified_count += 1;
        }
        let graph = serialize_decorated_graph(&graphs.graph_at(index));
        report.failures.extend(failures.into_iter().map(|(check, detail)| SweepFailure {
            index,
            graph: graph.clone(),
            check,
            detail,
        }));
    }
    Ok(report)
}

/// Runs every check on one graph; returns `None` for inadmissible graphs.
pub fn verify_graph(g: &DecoratedGraph, opts: &SweepOptions) -> GraphOutcome {
    if !admissible(g) {
        return None;
    }
    let mut failures = Vec::new();
    let mut fail = |check: &str, detail: String| failures.push((check.to_string(), detail));
    let n = g.rank();

    let group = match generate_group(g) {
        Ok(grp) => grp,
        Err(e) => {
            fail("generate_group", e.to_string());
            return Some(failures);
        }
    };
    if group.order() != 1 << n {
        fail("order", format!("{} != 2^{n}", group.order()));
    }
    for s in 0..n {
        if group.subset(group.generator_id(s)) != 1 << s {
            fail("identity_neighbors", format!("generator {s} is not at vertex {{{s}}}"));
        }
    }
    match presentation_relators(g) {
        Ok(rels) => {
            for r in rels {
                let mut w = r.0.clone();
                w.reverse();
                if !word_matrix(g, &w).is_ok_and(|m| m.is_identity()) {
                    fail("relators", r.display(g));
                }
            }
        }
        Err(e) => fail("relators", e.to_string()),
    }
    match decorated_graph_from_group(&SignedPermutationGroup { degree: n }, group.generators(), g.labels().clone()) {
        Ok(back) if back == *g => {}
        Ok(_) => fail("round_trip", "extracted a different decorated graph".to_string()),
        Err(e) => fail("round_trip", e.to_string()),
    }

    if n >= 2 {
        if !two_orbit_check(g).unwrap_or(false) {
            fail("two_orbits", "action on S is transitive".to_string());
        }
        if !is_reducible(g).unwrap_or(false) {
            fail("reducible", "no invariant coordinate split".to_string());
        }
        check_product_decomposition(g, &group, &mut fail);
    }

    match orbit_tree(g) {
        Ok(tree) => {
            if let Err(e) = normal_form(&group, &tree.ordering()) {
                fail("normal_form", e.to_string());
            }
            if n <= opts.planar_rank_limit {
                for ordering in tree.planar_orderings() {
                    if let Err(e) = normal_form(&group, &ordering) {
                        fail("normal_form_planar", e.to_string());
                    }
                }
            }
        }
        Err(e) => fail("orbit_tree", e.to_string()),
    }

    let mut word = Vec::new();
    check_words(g, &mut word, opts.word_length, &mut fail);
    Some(failures)
}

fn check_words(g: &DecoratedGraph, word: &mut Vec<usize>, depth: usize, fail: &mut dyn FnMut(&str, String)) {
    match (rho_via_formula(g, word), word_matrix(g, word)) {
        (Ok(a), Ok(b)) if a == b => {}
        _ => fail("rho_formula", g.labels().format_word(word)),
    }
    if depth == 0 {
        return;
    }
    for s in 0..g.rank() {
        word.push(s);
        check_words(g, word, depth - 1, fail);
        word.pop();
    }
}

/// `G = G_T G_{S−T}` uniquely, with trivial intersection, for every orbit `T`.
fn check_product_decomposition(g: &DecoratedGraph, group: &CubeGroup, fail: &mut dyn FnMut(&str, String)) {
    let n = g.rank();
    for block in orbits(g).blocks {
        if block.len() == n {
            continue;
        }
        let rest: Vec<usize> = (0..n).filter(|s| !block.contains(s)).collect();
        let (gt, gr) = match (standard_subgroup(group, &block), standard_subgroup(group, &rest)) {
            (Ok(a), Ok(b)) => (a, b),
            (Err(e), _) | (_, Err(e)) => {
                fail("standard_subgroup", e.to_string());
                continue;
            }
        };
        let ids = |sub: &CubeGroup| -> Vec<usize> {
            sub.elements().iter().map(|e| group.find(&e.matrix).expect("subgroup element")).collect()
        };
        let (a, b) = (ids(&gt), ids(&gr));
        if a.iter().filter(|x| b.contains(x)).count() != 1 {
            fail("intersection", g.labels().format_word(&block));
        }
        let mut hit = vec![false; group.order()];
        for &x in &a {
            for &y in &b {
                hit[group.multiply(x, y)] = true;
            }
        }
        if hit.contains(&false) {
            fail("product_decomposition", g.labels().format_word(&block));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn involution_counts() {
        let counts: Vec<u64> = (0..7).map(involution_count).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 10, 26, 76]);
        for n in 1..=5 {
            assert_eq!(involutions_fixing(n, 0).len() as u64, involution_count(n - 1));
        }
    }

    #[test]
    fn enumeration_sizes() {
        assert_eq!(DecoratedGraphs::new(1).unwrap().count(), 1);
        assert_eq!(DecoratedGraphs::new(2).unwrap().count(), 1);
        assert_eq!(DecoratedGraphs::new(3).unwrap().count(), 8);
        assert_eq!(DecoratedGraphs::new(4).unwrap().total(), 256);
        assert_eq!(DecoratedGraphs::new(5).unwrap().total(), 100_000);
        assert!(matches!(DecoratedGraphs::new(6), Err(Error::RankCapExceeded { .. })));
        assert!(DecoratedGraphs::new(0).is_err());
    }

    #[test]
    fn enumeration_is_duplicate_free() {
        let all: Vec<DecoratedGraph> = DecoratedGraphs::new(4).unwrap().collect();
        let mut keys: Vec<Vec<Vec<usize>>> = all
            .iter()
            .map(|g| g.involutions().iter().map(|p| p.images().to_vec()).collect())
            .collect();
        let sorted = {
            let mut k = keys.clone();
            k.sort();
            k
        };
        assert_eq!(keys, sorted, "lexicographic order");
        keys.dedup();
        assert_eq!(keys.len(), 256);
    }

    #[test]
    fn small_sweeps() {
        let r1 = sweep(1).unwrap();
        assert_eq!((r1.admissible_count, r1.verified_count), (1, 1));
        let r2 = sweep(2).unwrap();
        assert_eq!((r2.total_graphs, r2.admissible_count, r2.verified_count), (1, 1, 1));
        let r3 = sweep(3).unwrap();
        assert!(r3.passed(), "{:?}", r3.failures);
        assert!(r3.admissible_count >= 2);
    }

    #[test]
    fn resumable_ranges() {
        let opts = SweepOptions::default();
        let full = sweep_with(3, &opts).unwrap();
        let a = sweep_range(3, 0..5, &opts).unwrap();
        let b = sweep_range(3, 5..8, &opts).unwrap();
        assert_eq!(a.admissible_count + b.admissible_count, full.admissible_count);
        assert_eq!(a.total_graphs + b.total_graphs, 8);
    }
}
