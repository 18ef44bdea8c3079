#![allow(dead_code)]

use cubegroup::enumerate::DecoratedGraphs;
use cubegroup::trajectory::admissible;
use cubegroup::{DecoratedGraph, LabeledGraph};

/// Every admissible decorated graph of rank `1..=max_rank`.
pub fn admissible_graphs(max_rank: usize) -> Vec<DecoratedGraph> {
    (1..=max_rank)
        .flat_map(|r| DecoratedGraphs::new(r).unwrap())
        .filter(admissible)
        .collect()
}

/// Trajectory terms by plain unrolling of the recurrence.
pub fn unrolled(g: &DecoratedGraph, s1: usize, s2: usize, len: usize) -> Vec<usize> {
    let mut t = vec![s1, s2];
    while t.len() < len {
        let k = t.len();
        t.push(g.j(t[k - 1], t[k - 2]));
    }
    t
}

/// Isomorphism test against `Q_n` by trying every vertex bijection.
pub fn brute_force_is_cube(lg: &LabeledGraph) -> bool {
    let v = lg.vertex_count();
    if !v.is_power_of_two() {
        return false;
    }
    let n = v.trailing_zeros() as usize;
    let cube_adj = |a: usize, b: usize| (a ^ b).count_ones() == 1;
    let mut adj = vec![vec![false; v]; v];
    for &(a, b, _) in lg.edges() {
        adj[a][b] = true;
        adj[b][a] = true;
    }
    if lg.edges().len() != if n == 0 { 0 } else { n << (n - 1) } {
        return false;
    }
    let mut perm: Vec<usize> = (0..v).collect();
    loop {
        if (0..v).all(|a| (0..v).all(|b| adj[a][b] == cube_adj(perm[a], perm[b]))) {
            return true;
        }
        if !next_permutation(&mut perm) {
            return false;
        }
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Dense integer matrix product.
pub fn matmul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    (0..n)
        .map(|r| (0..n).map(|c| (0..n).map(|k| a[r][k] * b[k][c]).sum()).collect())
        .collect()
}

pub fn identity_matrix(n: usize) -> Vec<Vec<i64>> {
    (0..n).map(|r| (0..n).map(|c| i64::from(r == c)).collect()).collect()
}
