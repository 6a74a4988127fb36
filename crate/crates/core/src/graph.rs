//! Immutable simple undirected graphs and their hop-distance matrices.
//!
//! Vertices are dense indices `0..n`. Edges are stored canonically as
//! `(min, max)` pairs sorted ascending, so two graphs with the same vertex
//! count and edge set compare equal regardless of how they were built.

use std::collections::VecDeque;

use crate::error::{Error, Result};

/// Largest vertex count accepted by [`Graph::new`].
pub const MAX_VERTICES: usize = 4096;

/// An undirected edge as a canonical `(min, max)` pair.
pub type Edge = (usize, usize);

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph on `n` vertices from an edge list.
    ///
    /// Pairs may be given in either orientation, but the same unordered pair
    /// may only appear once.
    pub fn new(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                n,
                max: MAX_VERTICES,
            });
        }
        let mut edges = Vec::with_capacity(pairs.len());
        for &(u, v) in pairs {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { v: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            edges.push((u.min(v), u.max(v)));
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].0, w[0].1));
        }
        Ok(Self::from_canonical(n, edges))
    }

    /// `edges` must already be canonical, sorted and free of duplicates.
    pub(crate) fn from_canonical(n: usize, edges: Vec<Edge>) -> Self {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    /// The single-vertex graph K_1.
    pub fn singleton() -> Self {
        Self::from_canonical(1, Vec::new())
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Canonical edge list, sorted ascending.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Sorted neighbors of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Position of `{u, v}` in [`Graph::edges`].
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Every vertex reachable from vertex 0. Graphs with one vertex count as
    /// connected.
    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        seen[0] = true;
        let mut stack = vec![0];
        let mut reached = 1;
        while let Some(u) = stack.pop() {
            for &w in &self.adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        reached == self.n
    }

    /// All-pairs hop distances by one BFS per source.
    pub fn distances(&self) -> Result<DistanceMatrix> {
        let n = self.n;
        let mut d = vec![u16::MAX; n * n];
        let mut queue = VecDeque::with_capacity(n);
        for s in 0..n {
            let row = &mut d[s * n..(s + 1) * n];
            row[s] = 0;
            queue.clear();
            queue.push_back(s);
            let mut reached = 1;
            while let Some(u) = queue.pop_front() {
                let du = row[u];
                for &w in &self.adj[u] {
                    if row[w] == u16::MAX {
                        row[w] = du + 1;
                        reached += 1;
                        queue.push_back(w);
                    }
                }
            }
            if reached != n {
                return Err(Error::Disconnected);
            }
        }
        Ok(DistanceMatrix { n, d })
    }

    pub fn diameter(&self) -> Result<usize> {
        Ok(self.distances()?.diameter())
    }

    /// Symmetric difference of the neighborhoods of `v1` and `v2`, sorted.
    pub fn non_mutual_neighbors(&self, v1: usize, v2: usize) -> Result<Vec<usize>> {
        for v in [v1, v2] {
            if v >= self.n {
                return Err(Error::VertexOutOfRange { v, n: self.n });
            }
        }
        if v1 == v2 {
            return Err(Error::SameVertex(v1));
        }
        let (a, b) = (&self.adj[v1], &self.adj[v2]);
        let mut out = Vec::new();
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            match (a.get(i), b.get(j)) {
                (Some(x), Some(y)) if x == y => {
                    i += 1;
                    j += 1;
                }
                (Some(&x), Some(&y)) if x < y => {
                    out.push(x);
                    i += 1;
                }
                (Some(_), Some(&y)) => {
                    out.push(y);
                    j += 1;
                }
                (Some(&x), None) => {
                    out.push(x);
                    i += 1;
                }
                (None, Some(&y)) => {
                    out.push(y);
                    j += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        Ok(out)
    }

    /// Checks that every vertex in `set` exists.
    pub(crate) fn check_vertices(&self, set: &[usize]) -> Result<()> {
        match set.iter().find(|&&v| v >= self.n) {
            Some(&v) => Err(Error::VertexOutOfRange { v, n: self.n }),
            None => Ok(()),
        }
    }
}

/// Hop distances between all vertex pairs of a connected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u16>,
}

impl DistanceMatrix {
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u16 {
        self.d[u * self.n + v]
    }

    #[inline]
    pub fn row(&self, u: usize) -> &[u16] {
        &self.d[u * self.n..(u + 1) * self.n]
    }

    pub fn diameter(&self) -> usize {
        self.d.iter().copied().max().unwrap_or(0) as usize
    }

    /// Distance from edge `{x, y}` to `v`: the nearer of the two endpoints.
    pub fn edge_distance(&self, (x, y): Edge, v: usize) -> Result<u16> {
        self.check_edge(x, y)?;
        Ok(self.get(x, v).min(self.get(y, v)))
    }

    pub(crate) fn check_edge(&self, x: usize, y: usize) -> Result<()> {
        if x >= self.n || y >= self.n || self.get(x, y) != 1 {
            return Err(Error::NotAnEdge(x, y));
        }
        Ok(())
    }
}
