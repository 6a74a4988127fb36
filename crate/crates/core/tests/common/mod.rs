//! Naive reference implementations, kept independent of the library's
//! bitset search: Floyd-Warshall distances, plain subset enumeration, and
//! hashed signatures.

#![allow(dead_code)]

use std::collections::HashSet;

use edgedim::graph::Graph;
use itertools::Itertools;

pub const INF: u32 = u32::MAX / 4;

pub fn floyd_warshall(g: &Graph) -> Vec<Vec<u32>> {
    let n = g.vertex_count();
    let mut d = vec![vec![INF; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = 0;
    }
    for &(u, v) in g.edges() {
        d[u][v] = 1;
        d[v][u] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let via = d[i][k] + d[k][j];
                if via < d[i][j] {
                    d[i][j] = via;
                }
            }
        }
    }
    d
}

pub fn resolves_vertices(d: &[Vec<u32>], set: &[usize]) -> bool {
    let mut seen = HashSet::new();
    (0..d.len()).all(|x| seen.insert(set.iter().map(|&s| d[x][s]).collect::<Vec<_>>()))
}

pub fn resolves_edges(g: &Graph, d: &[Vec<u32>], set: &[usize]) -> bool {
    let mut seen = HashSet::new();
    g.edges().iter().all(|&(x, y)| {
        seen.insert(
            set.iter()
                .map(|&s| d[x][s].min(d[y][s]))
                .collect::<Vec<_>>(),
        )
    })
}

/// Least size and lexicographically first resolving set of that size.
pub fn naive_dim(g: &Graph) -> (usize, Vec<usize>) {
    let d = floyd_warshall(g);
    first_resolving(g.vertex_count(), |s| resolves_vertices(&d, s))
}

pub fn naive_edim(g: &Graph) -> (usize, Vec<usize>) {
    let d = floyd_warshall(g);
    first_resolving(g.vertex_count(), |s| resolves_edges(g, &d, s))
}

fn first_resolving(n: usize, ok: impl Fn(&[usize]) -> bool) -> (usize, Vec<usize>) {
    for size in 0..=n {
        if let Some(s) = (0..n).combinations(size).find(|s| ok(s)) {
            return (size, s);
        }
    }
    unreachable!("the full vertex set resolves every connected graph")
}

pub fn path(n: usize) -> Graph {
    let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::new(n, &e).unwrap()
}

pub fn cycle(n: usize) -> Graph {
    let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::new(n, &e).unwrap()
}

pub fn complete(n: usize) -> Graph {
    let e: Vec<_> = (0..n).tuple_combinations().collect();
    Graph::new(n, &e).unwrap()
}
