//! Graph families and operators: F_k, H_k, joins, products with a path, and
//! a few standard families used for cross-checks.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};
use crate::resolver::min_joint_cover;

/// Largest k for which F_k and H_k fit under [`MAX_VERTICES`].
pub const MAX_FAMILY_K: usize = 11;

/// A graph together with a readable name for every vertex index.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LabeledConstruction {
    #[serde(skip)]
    pub graph: Graph,
    pub labels: Vec<String>,
}

impl LabeledConstruction {
    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }
}

fn check_k(k: usize) -> Result<()> {
    if !(1..=MAX_FAMILY_K).contains(&k) {
        return Err(Error::KOutOfRange {
            k,
            min: 1,
            max: MAX_FAMILY_K,
        });
    }
    Ok(())
}

/// F_k: a clique B = {b_1..b_k}, a clique A = {a_S : S ⊆ B}, and b_i ~ a_S
/// exactly when b_i ∈ S.
///
/// Labeling: b_i is vertex `i - 1`; a_S is vertex `k + mask(S)`, where bit
/// `i - 1` of the mask records b_i ∈ S. In particular a_∅ = k and
/// a_B = k + 2^k - 1.
pub fn construct_f(k: usize) -> Result<LabeledConstruction> {
    check_k(k)?;
    let subsets = 1usize << k;
    let n = k + subsets;
    let mut edges = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            edges.push((i, j));
        }
    }
    for s in 0..subsets {
        for i in 0..k {
            if s >> i & 1 == 1 {
                edges.push((i, k + s));
            }
        }
        for t in s + 1..subsets {
            edges.push((k + s, k + t));
        }
    }
    let mut labels: Vec<String> = (1..=k).map(|i| format!("b{i}")).collect();
    for s in 0..subsets {
        let members: Vec<String> = (0..k)
            .filter(|i| s >> i & 1 == 1)
            .map(|i| (i + 1).to_string())
            .collect();
        labels.push(format!("a{{{}}}", members.join(",")));
    }
    debug_assert_eq!(labels.len(), n);
    Ok(LabeledConstruction {
        graph: Graph::new(n, &edges)?,
        labels,
    })
}

/// H_k = F_k + K_1. The extra vertex `t` is the last index, `k + 2^k`.
pub fn construct_h(k: usize) -> Result<LabeledConstruction> {
    let f = construct_f(k)?;
    let graph = join(&f.graph, &Graph::singleton())?;
    let mut labels = f.labels;
    labels.push("t".into());
    Ok(LabeledConstruction { graph, labels })
}

/// G1 + G2: disjoint union plus every edge between the two sides. G2's
/// vertices are shifted past G1's.
pub fn join(g1: &Graph, g2: &Graph) -> Result<Graph> {
    let (n1, n2) = (g1.vertex_count(), g2.vertex_count());
    let mut edges: Vec<_> = g1.edges().to_vec();
    edges.extend(g2.edges().iter().map(|&(u, v)| (u + n1, v + n1)));
    for u in 0..n1 {
        for v in 0..n2 {
            edges.push((u, n1 + v));
        }
    }
    Graph::new(n1 + n2, &edges)
}

/// G □ P_m with `m` copies of G. Vertex v of copy i (1-based) is
/// `(i - 1) * n + v` and is labeled `v(i)`.
pub fn cartesian_path(g: &Graph, m: usize) -> Result<LabeledConstruction> {
    if m < 2 {
        return Err(Error::MTooSmall(m));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.vertex_count();
    if n * m > MAX_VERTICES {
        return Err(Error::TooManyVertices {
            n: n * m,
            max: MAX_VERTICES,
        });
    }
    let mut edges = Vec::with_capacity(m * g.edge_count() + (m - 1) * n);
    for copy in 0..m {
        let off = copy * n;
        edges.extend(g.edges().iter().map(|&(u, v)| (u + off, v + off)));
        if copy + 1 < m {
            edges.extend((0..n).map(|v| (off + v, off + n + v)));
        }
    }
    let labels = (1..=m)
        .flat_map(|i| (0..n).map(move |v| format!("{v}({i})")))
        .collect();
    Ok(LabeledConstruction {
        graph: Graph::new(n * m, &edges)?,
        labels,
    })
}

/// The edge generator of G □ P_m built from a minimum joint cover M of G:
/// the first copy of M plus the last copy of t = min(M).
pub fn product_upper_witness(g: &Graph, m: usize) -> Result<Vec<usize>> {
    if m < 2 {
        return Err(Error::MTooSmall(m));
    }
    let cover = min_joint_cover(g)?;
    let base = cover.union();
    let t = base[0];
    let mut out = base;
    out.push((m - 1) * g.vertex_count() + t);
    Ok(out)
}

/// Named standard graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// Path on n vertices, labeled in order.
    Path(usize),
    /// Cycle on n >= 3 vertices, labeled in order.
    Cycle(usize),
    Complete(usize),
    /// K_{1,k}: center 0, leaves 1..=k.
    Star(usize),
    /// K_{a,b}: one side 0..a, the other a..a+b.
    CompleteBipartite(usize, usize),
    /// r x c grid, row-major.
    Grid(usize, usize),
}

pub fn standard_family(family: Family) -> Result<Graph> {
    use Family::*;
    let bad = |msg: &str| Err(Error::BadParams(format!("{family}: {msg}")));
    let (n, edges): (usize, Vec<(usize, usize)>) = match family {
        Path(0) => return bad("need at least one vertex"),
        Path(n) => (n, (1..n).map(|i| (i - 1, i)).collect()),
        Cycle(n) if n < 3 => return bad("need at least three vertices"),
        Cycle(n) => (n, (0..n).map(|i| (i, (i + 1) % n)).collect()),
        Complete(0) => return bad("need at least one vertex"),
        Complete(n) => (
            n,
            (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .collect(),
        ),
        Star(0) => return bad("need at least one leaf"),
        Star(k) => (k + 1, (1..=k).map(|v| (0, v)).collect()),
        CompleteBipartite(a, b) if a == 0 || b == 0 => return bad("both sides must be non-empty"),
        CompleteBipartite(a, b) => (
            a + b,
            (0..a)
                .flat_map(|u| (a..a + b).map(move |v| (u, v)))
                .collect(),
        ),
        Grid(r, c) if r == 0 || c == 0 => return bad("both dimensions must be positive"),
        Grid(r, c) => {
            let mut e = Vec::new();
            for i in 0..r {
                for j in 0..c {
                    let v = i * c + j;
                    if j + 1 < c {
                        e.push((v, v + 1));
                    }
                    if i + 1 < r {
                        e.push((v, v + c));
                    }
                }
            }
            (r * c, e)
        }
    };
    Graph::new(n, &edges)
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Family::Path(n) => write!(f, "path:{n}"),
            Family::Cycle(n) => write!(f, "cycle:{n}"),
            Family::Complete(n) => write!(f, "complete:{n}"),
            Family::Star(k) => write!(f, "star:{k}"),
            Family::CompleteBipartite(a, b) => write!(f, "complete_bipartite:{a},{b}"),
            Family::Grid(r, c) => write!(f, "grid:{r},{c}"),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    /// Parses `name:params`, e.g. `path:5`, `grid:3,4`. A space may stand in
    /// for the colon.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::BadParams(format!("unrecognised family `{s}`"));
        let (name, params) = s.split_once([':', ' ']).ok_or_else(bad)?;
        let nums: Vec<usize> = params
            .split([',', ' '])
            .filter(|p| !p.is_empty())
            .map(|p| p.parse().map_err(|_| bad()))
            .collect::<Result<_>>()?;
        Ok(match (name, nums.as_slice()) {
            ("path", &[n]) => Family::Path(n),
            ("cycle", &[n]) => Family::Cycle(n),
            ("complete", &[n]) => Family::Complete(n),
            ("star", &[k]) => Family::Star(k),
            ("complete_bipartite" | "kbip", &[a, b]) => Family::CompleteBipartite(a, b),
            ("grid", &[r, c]) => Family::Grid(r, c),
            _ => return Err(bad()),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::resolver::is_edge_generator;

    #[test]
    fn f1_is_p3() {
        let f = construct_f(1).unwrap();
        assert_eq!(f.graph.vertex_count(), 3);
        // b1 = 0, a{} = 1, a{1} = 2
        assert_eq!(f.graph.edges(), &[(0, 2), (1, 2)]);
        assert_eq!(f.labels, vec!["b1", "a{}", "a{1}"]);
    }

    #[test]
    fn f2_counts() {
        let f = construct_f(2).unwrap();
        assert_eq!(f.graph.vertex_count(), 6);
        assert_eq!(f.graph.edge_count(), 11);
        assert_eq!(f.index_of("a{1,2}"), Some(5));
        assert_eq!(f.graph.max_degree(), 5);
        assert_eq!(f.graph.degree(5), 5);
        assert_eq!(f.graph.diameter().unwrap(), 2);
    }

    #[test]
    fn k_range() {
        assert!(matches!(construct_f(0), Err(Error::KOutOfRange { .. })));
        assert!(matches!(
            construct_h(MAX_FAMILY_K + 1),
            Err(Error::KOutOfRange { .. })
        ));
    }

    #[test]
    fn h_counts() {
        let h = construct_h(1).unwrap();
        assert_eq!(h.graph.vertex_count(), 4);
        assert_eq!(h.graph.degree(3), 3);
        let h = construct_h(2).unwrap();
        assert_eq!(h.graph.vertex_count(), 7);
        assert_eq!(h.graph.degree(h.index_of("a{1,2}").unwrap()), 6);
        assert_eq!(h.graph.degree(h.index_of("t").unwrap()), 6);
    }

    #[test]
    fn joins() {
        let k1 = Graph::singleton();
        assert_eq!(
            join(&k1, &k1).unwrap(),
            standard_family(Family::Complete(2)).unwrap()
        );
        let fan = join(&standard_family(Family::Path(3)).unwrap(), &k1).unwrap();
        assert_eq!((fan.vertex_count(), fan.edge_count()), (4, 5));
        let wheel = join(&standard_family(Family::Cycle(4)).unwrap(), &k1).unwrap();
        assert_eq!((wheel.vertex_count(), wheel.edge_count()), (5, 8));
        assert_eq!(wheel.degree(4), 4);
    }

    #[test]
    fn products() {
        let p4 = cartesian_path(&Graph::singleton(), 4).unwrap();
        assert_eq!(p4.graph, standard_family(Family::Path(4)).unwrap());
        let c4 = cartesian_path(&standard_family(Family::Path(2)).unwrap(), 2).unwrap();
        assert_eq!(c4.graph.edge_count(), 4);
        assert_eq!(c4.graph.max_degree(), 2);
        let grid = cartesian_path(&standard_family(Family::Path(3)).unwrap(), 4).unwrap();
        assert_eq!(
            (grid.graph.vertex_count(), grid.graph.edge_count()),
            (12, 17)
        );
        assert_eq!(grid.labels[7], "1(3)");
        // copies are rows of the row-major 4x3 grid
        assert_eq!(grid.graph, standard_family(Family::Grid(4, 3)).unwrap());
        let p3 = standard_family(Family::Path(3)).unwrap();
        assert_eq!(cartesian_path(&p3, 1).unwrap_err(), Error::MTooSmall(1));
        let split = Graph::new(2, &[]).unwrap();
        assert_eq!(cartesian_path(&split, 2).unwrap_err(), Error::Disconnected);
    }

    #[test]
    fn upper_witness() {
        let p3 = standard_family(Family::Path(3)).unwrap();
        let w = product_upper_witness(&p3, 3).unwrap();
        assert_eq!(w, vec![0, 6]);
        let grid = cartesian_path(&p3, 3).unwrap().graph;
        assert!(is_edge_generator(&grid, &w).unwrap());

        let k3 = standard_family(Family::Complete(3)).unwrap();
        let w = product_upper_witness(&k3, 2).unwrap();
        assert_eq!(w.len(), 3);
        let prism = cartesian_path(&k3, 2).unwrap().graph;
        assert!(is_edge_generator(&prism, &w).unwrap());

        assert_eq!(
            product_upper_witness(&Graph::singleton(), 2),
            Err(Error::NoEdges)
        );
        assert_eq!(product_upper_witness(&p3, 1), Err(Error::MTooSmall(1)));
    }

    #[test]
    fn families() {
        assert_eq!(
            standard_family(Family::Cycle(3)).unwrap(),
            standard_family(Family::Complete(3)).unwrap()
        );
        assert_eq!(
            standard_family(Family::Complete(4)).unwrap().edge_count(),
            6
        );
        assert_eq!(
            standard_family(Family::CompleteBipartite(2, 3))
                .unwrap()
                .edge_count(),
            6
        );
        assert!(matches!(
            standard_family(Family::Cycle(2)),
            Err(Error::BadParams(_))
        ));
        assert!(matches!(
            standard_family(Family::Grid(0, 3)),
            Err(Error::BadParams(_))
        ));
        assert_eq!("grid:3,4".parse::<Family>().unwrap(), Family::Grid(3, 4));
        assert_eq!("cycle 5".parse::<Family>().unwrap(), Family::Cycle(5));
        assert!("blob:3".parse::<Family>().is_err());
        assert!("path:x".parse::<Family>().is_err());
    }
}
