//! Cube groups realized as signed-permutation matrix groups.
//!
//! Words are stored in application order: `[w1, .., wk]` is the element
//! `wk ⋯ w1`, with matrix `ρ_{wk} ∘ .. ∘ ρ_{w1}`. Cayley graph edges join
//! `x` and `x·s`.

use std::collections::HashMap;
use std::hash::Hash;

use crate::decorated::DecoratedGraph;
use crate::error::{Error, Result};
use crate::hypercube::{is_hypercube, HypercubeCoordinates, LabeledGraph};
use crate::label::LabelSet;
use crate::perm::Permutation;
use crate::signed::{generator_rho, SignedPermutation};
use crate::trajectory::{admissible, require_admissible};

/// Multiplication oracle for an abstract group.
pub trait GroupOracle {
    type Element: Clone + Eq + Hash;

    fn identity(&self) -> Self::Element;

    /// The product `a · b`.
    fn multiply(&self, a: &Self::Element, b: &Self::Element) -> Self::Element;
}

/// Signed permutations under matrix multiplication.
#[derive(Debug, Clone, Copy)]
pub struct SignedPermutationGroup {
    pub degree: usize,
}

impl GroupOracle for SignedPermutationGroup {
    type Element = SignedPermutation;

    fn identity(&self) -> SignedPermutation {
        SignedPermutation::identity(self.degree)
    }

    fn multiply(&self, a: &SignedPermutation, b: &SignedPermutation) -> SignedPermutation {
        a.compose(b).expect("degrees agree")
    }
}

/// Permutations of `{0, .., degree-1}`, with `a · b = a ∘ b`.
#[derive(Debug, Clone, Copy)]
pub struct PermutationGroup {
    pub degree: usize,
}

impl GroupOracle for PermutationGroup {
    type Element = Permutation;

    fn identity(&self) -> Permutation {
        Permutation::identity(self.degree)
    }

    fn multiply(&self, a: &Permutation, b: &Permutation) -> Permutation {
        a.compose(b).expect("degrees agree")
    }
}

/// Breadth-first closure from the identity under right multiplication.
struct Closure<E> {
    elements: Vec<E>,
    words: Vec<Vec<usize>>,
    edges: Vec<(usize, usize, usize)>,
}

enum ClosureError {
    /// More than the allowed number of elements.
    TooLarge,
    /// A generator equals the identity.
    TrivialGenerator(usize),
}

fn closure<O: GroupOracle>(
    oracle: &O,
    gens: &[O::Element],
    limit: usize,
) -> std::result::Result<Closure<O::Element>, ClosureError> {
    let id = oracle.identity();
    let mut index: HashMap<O::Element, usize> = HashMap::from([(id.clone(), 0)]);
    let mut c = Closure {
        elements: vec![id],
        words: vec![Vec::new()],
        edges: Vec::new(),
    };
    let mut head = 0;
    while head < c.elements.len() {
        for (s, gen) in gens.iter().enumerate() {
            let y = oracle.multiply(&c.elements[head], gen);
            let target = match index.get(&y) {
                Some(&j) => j,
                None => {
                    if c.elements.len() == limit {
                        return Err(ClosureError::TooLarge);
                    }
                    let j = c.elements.len();
                    let mut word = Vec::with_capacity(c.words[head].len() + 1);
                    word.push(s);
                    word.extend_from_slice(&c.words[head]);
                    index.insert(y.clone(), j);
                    c.elements.push(y);
                    c.words.push(word);
                    j
                }
            };
            if target == head {
                return Err(ClosureError::TrivialGenerator(s));
            }
            if target > head {
                c.edges.push((head, target, s));
            }
        }
        head += 1;
    }
    Ok(c)
}

/// Closure size without the limit, for diagnostics.
fn closure_size<O: GroupOracle>(oracle: &O, gens: &[O::Element], limit: usize) -> String {
    match closure(oracle, gens, limit) {
        Ok(c) => c.elements.len().to_string(),
        Err(ClosureError::TooLarge) => format!("more than {limit}"),
        Err(ClosureError::TrivialGenerator(_)) => "?".to_string(),
    }
}

/// Hypercube coordinates re-expressed as label subsets: bit `s` of
/// `subset[v]` is set when `v` differs from the identity across the class
/// of the edge `{1, s}`.
fn subsets_from_coordinates(
    cayley: &LabeledGraph,
    coords: &HypercubeCoordinates,
    rank: usize,
) -> std::result::Result<Vec<u32>, String> {
    if coords.dimension != rank {
        return Err(format!("dimension {} but rank {rank}", coords.dimension));
    }
    let mut label_of_class = vec![usize::MAX; rank];
    for &(_, e) in cayley.neighbors(0) {
        label_of_class[coords.edge_class[e]] = cayley.edges()[e].2;
    }
    let subsets = coords
        .coords
        .iter()
        .map(|&c| {
            (0..rank)
                .filter(|&k| c >> k & 1 == 1)
                .fold(0u32, |m, k| m | 1 << label_of_class[k])
        })
        .collect();
    Ok(subsets)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupElement {
    pub matrix: SignedPermutation,
    /// Shortest word in application order (first found by label-order BFS).
    pub word: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct CubeGroup {
    graph: DecoratedGraph,
    generators: Vec<SignedPermutation>,
    elements: Vec<GroupElement>,
    lookup: HashMap<SignedPermutation, usize>,
    subsets: Vec<u32>,
    by_subset: Vec<usize>,
    cayley: LabeledGraph,
}

impl CubeGroup {
    fn assemble(
        graph: DecoratedGraph,
        generators: Vec<SignedPermutation>,
        closure: Closure<SignedPermutation>,
    ) -> std::result::Result<Self, String> {
        let rank = graph.rank();
        let cayley = LabeledGraph::new(closure.elements.len(), closure.edges)
            .map_err(|e| e.to_string())?;
        let coords = is_hypercube(&cayley).map_err(|e| e.0)?;
        let subsets = subsets_from_coordinates(&cayley, &coords, rank)?;
        let mut by_subset = vec![usize::MAX; 1 << rank];
        for (v, &m) in subsets.iter().enumerate() {
            by_subset[m as usize] = v;
        }
        if by_subset.contains(&usize::MAX) {
            return Err("subset indexing is not a bijection".to_string());
        }
        let lookup = closure
            .elements
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        let elements = closure
            .elements
            .into_iter()
            .zip(closure.words)
            .map(|(matrix, word)| GroupElement { matrix, word })
            .collect();
        Ok(Self {
            graph,
            generators,
            elements,
            lookup,
            subsets,
            by_subset,
            cayley,
        })
    }

    pub fn rank(&self) -> usize {
        self.graph.rank()
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Decorated graph on this group's own generating set.
    pub fn graph(&self) -> &DecoratedGraph {
        &self.graph
    }

    pub fn labels(&self) -> &LabelSet {
        self.graph.labels()
    }

    /// Generator matrices, acting on the ambient space.
    pub fn generators(&self) -> &[SignedPermutation] {
        &self.generators
    }

    /// Elements in breadth-first order; id 0 is the identity.
    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn element(&self, id: usize) -> &GroupElement {
        &self.elements[id]
    }

    pub fn find(&self, m: &SignedPermutation) -> Option<usize> {
        self.lookup.get(m).copied()
    }

    pub fn generator_id(&self, s: usize) -> usize {
        self.find(&self.generators[s]).expect("generator is an element")
    }

    /// Product `a · b` of two element ids.
    pub fn multiply(&self, a: usize, b: usize) -> usize {
        let m = self.elements[a]
            .matrix
            .compose(&self.elements[b].matrix)
            .expect("same degree");
        self.find(&m).expect("closed under multiplication")
    }

    /// Element of a word in application order.
    pub fn element_of_word(&self, word: &[usize]) -> Result<usize> {
        let m = word.iter().try_fold(self.elements[0].matrix.clone(), |acc, &s| {
            self.labels().check_index(s)?;
            self.generators[s].compose(&acc)
        })?;
        Ok(self.find(&m).expect("closed under multiplication"))
    }

    /// `T(g)`: the vertex `g` is `g_T`.
    pub fn subset(&self, id: usize) -> u32 {
        self.subsets[id]
    }

    pub fn element_of_subset(&self, mask: u32) -> usize {
        self.by_subset[mask as usize]
    }

    pub fn cayley(&self) -> &LabeledGraph {
        &self.cayley
    }
}

/// Closure of the generator matrices `ρ_s` of an admissible graph.
pub fn generate_group(g: &DecoratedGraph) -> Result<CubeGroup> {
    require_admissible(g)?;
    let n = g.rank();
    let gens = (0..n).map(|s| generator_rho(g, s)).collect::<Result<Vec<_>>>()?;
    let oracle = SignedPermutationGroup { degree: n };
    let expected = 1usize << n;
    let c = match closure(&oracle, &gens, expected) {
        Ok(c) => c,
        Err(ClosureError::TooLarge) => {
            return Err(Error::ClosureSizeMismatch {
                expected,
                found: expected + 1,
            })
        }
        Err(ClosureError::TrivialGenerator(s)) => {
            return Err(Error::HypercubeCheckFailed(format!(
                "generator {} acts trivially",
                g.labels().name(s)
            )))
        }
    };
    if c.elements.len() != expected {
        return Err(Error::ClosureSizeMismatch {
            expected,
            found: c.elements.len(),
        });
    }
    CubeGroup::assemble(g.clone(), gens, c).map_err(Error::HypercubeCheckFailed)
}

/// `G_T` when `(G_T, T)` is itself a cube group. `members` are label indices
/// of `G`; the result is labeled by `T` in `G`'s label order.
pub fn standard_subgroup(group: &CubeGroup, members: &[usize]) -> Result<CubeGroup> {
    let labels = group.labels();
    let sub_labels = labels.restrict(members)?;
    let ambient: Vec<usize> = sub_labels
        .names()
        .iter()
        .map(|l| labels.index_of(l.as_str()))
        .collect::<Result<_>>()?;
    let not_standard = |reason: String| Error::NotStandard {
        subset: labels.format_subset(ambient.iter().fold(0, |m, &i| m | 1 << i)),
        reason,
    };
    if ambient.is_empty() {
        return Err(not_standard("empty generating set".to_string()));
    }
    let gens: Vec<SignedPermutation> = ambient.iter().map(|&s| group.generators[s].clone()).collect();
    let oracle = SignedPermutationGroup {
        degree: group.generators[0].degree(),
    };
    let expected = 1usize << ambient.len();
    let c = closure(&oracle, &gens, group.order())
        .map_err(|_| not_standard("closure escaped the group".to_string()))?;
    if c.elements.len() != expected {
        return Err(not_standard(format!(
            "order {} but 2^{} = {expected}",
            c.elements.len(),
            ambient.len()
        )));
    }
    let graph = extract(&sub_labels, &c).map_err(|e| match e {
        Error::NotACubeGroup(reason) => not_standard(reason),
        other => other,
    })?;
    CubeGroup::assemble(graph, gens, c).map_err(not_standard)
}

/// Reads the decorated graph off the Cayley graph of a closure.
fn extract<E>(labels: &LabelSet, c: &Closure<E>) -> Result<DecoratedGraph> {
    let n = labels.len();
    let cayley = LabeledGraph::new(c.elements.len(), c.edges.clone())
        .map_err(|e| Error::NotACubeGroup(e.to_string()))?;
    let coords = is_hypercube(&cayley).map_err(|e| Error::NotACubeGroup(e.0))?;
    let subsets = subsets_from_coordinates(&cayley, &coords, n).map_err(Error::NotACubeGroup)?;
    let mut by_subset = vec![usize::MAX; 1 << n];
    for (v, &m) in subsets.iter().enumerate() {
        by_subset[m as usize] = v;
    }
    let vertex = |mask: u32| by_subset[mask as usize];
    let label = |a: usize, b: usize| cayley.label_between(a, b).expect("face edge");

    let mut table = vec![vec![usize::MAX; n]; n];
    for (s, row) in table.iter_mut().enumerate() {
        row[s] = s;
    }
    for u in 0..n {
        for s in u + 1..n {
            // the square 1 - u - x - s - 1 spanned by the edges u and s at 1
            let (vu, vs, x) = (vertex(1 << u), vertex(1 << s), vertex(1 << u | 1 << s));
            let cyc = [u, label(vu, x), label(x, vs), s];
            for i in 0..4 {
                let (prev, mid, next) = (cyc[(i + 3) % 4], cyc[i], cyc[(i + 1) % 4]);
                for (from, to) in [(prev, next), (next, prev)] {
                    let slot = &mut table[mid][from];
                    if *slot != usize::MAX && *slot != to {
                        return Err(Error::IllDefinedInvolution {
                            label: labels.name(mid).to_string(),
                            detail: format!(
                                "{} maps to both {} and {}",
                                labels.name(from),
                                labels.name(*slot),
                                labels.name(to)
                            ),
                        });
                    }
                    *slot = to;
                }
            }
        }
    }
    let mut involutions = Vec::with_capacity(n);
    for (s, row) in table.into_iter().enumerate() {
        let ill = |detail: &str| Error::IllDefinedInvolution {
            label: labels.name(s).to_string(),
            detail: detail.to_string(),
        };
        if row.contains(&usize::MAX) {
            return Err(ill("some label was never read off a square"));
        }
        involutions.push(Permutation::from_images(row).ok_or_else(|| ill("not a bijection"))?);
    }
    let graph = DecoratedGraph::new(labels.clone(), involutions).map_err(|e| {
        Error::IllDefinedInvolution {
            label: "?".to_string(),
            detail: e.to_string(),
        }
    })?;
    if !admissible(&graph) {
        return Err(Error::IllDefinedInvolution {
            label: "?".to_string(),
            detail: "extracted decorated graph is not admissible".to_string(),
        });
    }
    Ok(graph)
}

/// Recovers the decorated graph of a cube group given by involutive
/// generators and a multiplication oracle.
pub fn decorated_graph_from_group<O: GroupOracle>(
    oracle: &O,
    gens: &[O::Element],
    labels: LabelSet,
) -> Result<DecoratedGraph> {
    if gens.len() != labels.len() {
        return Err(Error::LabelSetMismatch {
            left: labels.len(),
            right: gens.len(),
        });
    }
    let id = oracle.identity();
    for (s, x) in gens.iter().enumerate() {
        if *x == id || oracle.multiply(x, x) != id {
            return Err(Error::NotInvolution(labels.name(s).to_string()));
        }
    }
    let expected = 1usize << labels.len();
    let c = closure(oracle, gens, expected).map_err(|e| match e {
        ClosureError::TooLarge => Error::NotACubeGroup(format!(
            "group has {} elements, a rank-{} cube has {expected}",
            closure_size(oracle, gens, 1 << 16),
            labels.len()
        )),
        ClosureError::TrivialGenerator(s) => Error::NotInvolution(labels.name(s).to_string()),
    })?;
    if c.elements.len() != expected {
        return Err(Error::NotACubeGroup(format!(
            "group has {} elements, a rank-{} cube has {expected}",
            c.elements.len(),
            labels.len()
        )));
    }
    extract(&labels, &c)
}
