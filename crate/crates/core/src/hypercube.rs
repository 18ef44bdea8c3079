//! Labeled graphs and hypercube recognition by parallel edge classes.
//!
//! Edges that are opposite in some 4-cycle are merged into one class (the
//! transitive closure of this relation is the Djoković–Winkler relation on
//! hypercubes). A graph on `2^n` vertices is accepted when there are exactly
//! `n` classes, each a perfect matching, and the induced coordinates form a
//! bijection onto `{0,1}^n` under which every edge joins vertices at Hamming
//! distance one. The last check certifies the isomorphism on its own.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::error::{Error, Result};

/// Simple undirected graph whose edges carry a label id, with the labels at
/// each vertex pairwise distinct.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledGraph {
    vertex_count: usize,
    edges: Vec<(usize, usize, usize)>,
    adjacency: Vec<Vec<(usize, usize)>>,
    edge_index: HashMap<(usize, usize), usize>,
}

impl LabeledGraph {
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize, usize)>) -> Result<Self> {
        let mut adjacency = vec![Vec::new(); vertex_count];
        let mut edge_index = HashMap::with_capacity(edges.len());
        for (id, &(u, v, _)) in edges.iter().enumerate() {
            if u >= vertex_count || v >= vertex_count {
                return Err(Error::InvalidGraph(format!("edge {u}-{v} leaves the vertex set")));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("loop at vertex {u}")));
            }
            if edge_index.insert((u.min(v), u.max(v)), id).is_some() {
                return Err(Error::InvalidGraph(format!("repeated edge {u}-{v}")));
            }
            adjacency[u].push((v, id));
            adjacency[v].push((u, id));
        }
        for (v, adj) in adjacency.iter().enumerate() {
            let mut labels: Vec<usize> = adj.iter().map(|&(_, e)| edges[e].2).collect();
            labels.sort_unstable();
            if labels.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidGraph(format!("repeated edge label at vertex {v}")));
            }
        }
        Ok(Self {
            vertex_count,
            edges,
            adjacency,
            edge_index,
        })
    }

    /// Every edge gets its own label.
    pub fn unlabeled(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let edges = edges.iter().enumerate().map(|(i, &(u, v))| (u, v, i)).collect();
        Self::new(vertex_count, edges)
    }

    pub fn cycle(n: usize) -> Self {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::unlabeled(n, &edges).expect("cycle graph")
    }

    pub fn complete(n: usize) -> Self {
        let edges: Vec<_> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        Self::unlabeled(n, &edges).expect("complete graph")
    }

    /// `Q_n` on bitmasks, edge label = flipped bit.
    pub fn hypercube(n: usize) -> Self {
        let edges = (0..1usize << n)
            .flat_map(|v| (0..n).filter(move |&b| v >> b & 1 == 0).map(move |b| (v, v | 1 << b, b)))
            .collect();
        Self::new(1 << n, edges).expect("hypercube graph")
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// `(u, v, label)` triples.
    pub fn edges(&self) -> &[(usize, usize, usize)] {
        &self.edges
    }

    /// `(neighbor, edge id)` pairs in insertion order.
    pub fn neighbors(&self, v: usize) -> &[(usize, usize)] {
        &self.adjacency[v]
    }

    pub fn edge_between(&self, u: usize, v: usize) -> Option<usize> {
        self.edge_index.get(&(u.min(v), u.max(v))).copied()
    }

    pub fn label_between(&self, u: usize, v: usize) -> Option<usize> {
        self.edge_between(u, v).map(|e| self.edges[e].2)
    }
}

/// Successful recognition: vertex `v` sits at corner `coords[v]` of `Q_n`,
/// with vertex 0 at the origin. Class `c` is the class of the `c`-th edge
/// incident to vertex 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HypercubeCoordinates {
    pub dimension: usize,
    pub coords: Vec<u32>,
    pub edge_class: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NotHypercube(pub String);

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.0[root] != root {
            root = self.0[root];
        }
        let mut x = x;
        while self.0[x] != root {
            x = std::mem::replace(&mut self.0[x], root);
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            self.0[a.max(b)] = a.min(b);
        }
    }
}

pub fn is_hypercube(lg: &LabeledGraph) -> std::result::Result<HypercubeCoordinates, NotHypercube> {
    let fail = |msg: String| Err(NotHypercube(msg));
    let v_count = lg.vertex_count();
    if v_count == 0 || !v_count.is_power_of_two() {
        return fail(format!("{v_count} vertices is not a power of two"));
    }
    let n = v_count.trailing_zeros() as usize;
    if n > 31 {
        return fail(format!("dimension {n} is too large"));
    }
    if let Some(v) = (0..v_count).find(|&v| lg.neighbors(v).len() != n) {
        return fail(format!(
            "vertex {v} has degree {}, expected {n}",
            lg.neighbors(v).len()
        ));
    }

    let mut uf = UnionFind((0..lg.edges().len()).collect());
    let neighbor_sets: Vec<HashSet<usize>> = (0..v_count)
        .map(|v| lg.neighbors(v).iter().map(|&(w, _)| w).collect())
        .collect();
    for v in 0..v_count {
        let adj = lg.neighbors(v);
        for (i, &(a, va)) in adj.iter().enumerate() {
            for &(b, vb) in &adj[i + 1..] {
                for &w in neighbor_sets[a].intersection(&neighbor_sets[b]) {
                    if w == v {
                        continue;
                    }
                    // v-a-w-b-v: v-a opposite b-w, v-b opposite a-w
                    uf.union(va, lg.edge_between(b, w).expect("edge"));
                    uf.union(vb, lg.edge_between(a, w).expect("edge"));
                }
            }
        }
    }

    let mut class_of_root: HashMap<usize, usize> = HashMap::new();
    for &(_, e) in lg.neighbors(0) {
        let r = uf.find(e);
        let next = class_of_root.len();
        if class_of_root.insert(r, next).is_some() {
            return fail("two edges at vertex 0 share a parallel class".to_string());
        }
    }
    let mut edge_class = Vec::with_capacity(lg.edges().len());
    for e in 0..lg.edges().len() {
        match class_of_root.get(&uf.find(e)) {
            Some(&c) => edge_class.push(c),
            None => {
                return fail(format!(
                    "more than {n} parallel classes (edge {e} meets none at vertex 0)"
                ))
            }
        }
    }
    for v in 0..v_count {
        let mut seen = 0u32;
        for &(_, e) in lg.neighbors(v) {
            let bit = 1u32 << edge_class[e];
            if seen & bit != 0 {
                return fail(format!("class {} is not a matching at vertex {v}", edge_class[e]));
            }
            seen |= bit;
        }
    }

    let mut coords = vec![u32::MAX; v_count];
    coords[0] = 0;
    let mut queue = VecDeque::from([0usize]);
    while let Some(v) = queue.pop_front() {
        for &(w, e) in lg.neighbors(v) {
            let expected = coords[v] ^ 1 << edge_class[e];
            if coords[w] == u32::MAX {
                coords[w] = expected;
                queue.push_back(w);
            } else if coords[w] != expected {
                return fail(format!("inconsistent coordinates across edge {v}-{w}"));
            }
        }
    }
    if coords.contains(&u32::MAX) {
        return fail("graph is disconnected".to_string());
    }
    let mut hit = vec![false; v_count];
    for (v, &c) in coords.iter().enumerate() {
        if std::mem::replace(&mut hit[c as usize], true) {
            return fail(format!("vertex {v} repeats coordinate {c:b}"));
        }
    }
    // bijection, n·2^(n-1) edges, all of Hamming length one: exactly Q_n
    if lg.edges().len() != n << n.saturating_sub(1) && n > 0 {
        return fail("wrong edge count".to_string());
    }
    if let Some(&(u, v, _)) = lg
        .edges()
        .iter()
        .find(|&&(u, v, _)| (coords[u] ^ coords[v]).count_ones() != 1)
    {
        return fail(format!("edge {u}-{v} is not a cube edge"));
    }
    Ok(HypercubeCoordinates {
        dimension: n,
        coords,
        edge_class,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn accepts_cubes() {
        for n in 0..=5 {
            let c = is_hypercube(&LabeledGraph::hypercube(n)).unwrap();
            assert_eq!(c.dimension, n);
        }
        // relabeled square
        let sq = LabeledGraph::unlabeled(4, &[(0, 2), (2, 3), (3, 1), (1, 0)]).unwrap();
        assert_eq!(is_hypercube(&sq).unwrap().dimension, 2);
    }

    #[test]
    fn rejects_non_cubes() {
        assert!(is_hypercube(&LabeledGraph::cycle(8)).is_err());
        assert!(is_hypercube(&LabeledGraph::complete(4)).is_err());
        assert!(is_hypercube(&LabeledGraph::cycle(6)).is_err());
        // Wagner graph: cubic on 8 vertices, not Q_3
        let mut edges: Vec<_> = (0..8).map(|i| (i, (i + 1) % 8)).collect();
        edges.extend((0..4).map(|i| (i, i + 4)));
        let wagner = LabeledGraph::unlabeled(8, &edges).unwrap();
        assert!(is_hypercube(&wagner).is_err());
        // two disjoint squares: 2-regular on 8 vertices fails degree; two
        // disjoint K4 are 3-regular but disconnected
        let mut k4s: Vec<_> = (0..4).flat_map(|i| (i + 1..4).map(move |j| (i, j))).collect();
        k4s.extend(k4s.clone().into_iter().map(|(i, j)| (i + 4, j + 4)));
        assert!(is_hypercube(&LabeledGraph::unlabeled(8, &k4s).unwrap()).is_err());
    }

    #[test]
    fn graph_validation() {
        assert!(LabeledGraph::new(2, vec![(0, 0, 0)]).is_err());
        assert!(LabeledGraph::new(2, vec![(0, 1, 0), (1, 0, 1)]).is_err());
        assert!(LabeledGraph::new(3, vec![(0, 1, 0), (0, 2, 0)]).is_err());
        assert!(LabeledGraph::new(2, vec![(0, 5, 0)]).is_err());
    }
}
