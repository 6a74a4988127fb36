//! Distance signatures, resolving-set predicates, and exact computation of
//! the metric dimension and the edge metric dimension.

mod search;
mod table;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Edge, Graph};

pub(crate) use search::binomial;
use search::Search;
use table::DistinctionTable;

/// Which objects a landmark set has to tell apart.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    /// Vertices; the minimum is the metric dimension.
    Vertex,
    /// Edges; the minimum is the edge metric dimension.
    Edge,
}

/// Distances from one vertex or edge to an ordered list of landmarks.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Signature(pub Vec<u16>);

pub fn vertex_signature(dm: &DistanceMatrix, x: usize, landmarks: &[usize]) -> Signature {
    let row = dm.row(x);
    Signature(landmarks.iter().map(|&s| row[s]).collect())
}

pub fn edge_signature(dm: &DistanceMatrix, e: Edge, landmarks: &[usize]) -> Result<Signature> {
    dm.check_edge(e.0, e.1)?;
    let (rx, ry) = (dm.row(e.0), dm.row(e.1));
    Ok(Signature(
        landmarks.iter().map(|&s| rx[s].min(ry[s])).collect(),
    ))
}

/// True iff every vertex of `g` has a distinct signature on `set`.
pub fn is_vertex_generator(g: &Graph, set: &[usize]) -> Result<bool> {
    g.check_vertices(set)?;
    let dm = g.distances()?;
    let sigs = (0..g.vertex_count()).map(|x| vertex_signature(&dm, x, set));
    Ok(all_distinct(sigs))
}

/// True iff every edge of `g` has a distinct signature on `set`. Graphs with
/// at most one edge are resolved by any set.
pub fn is_edge_generator(g: &Graph, set: &[usize]) -> Result<bool> {
    g.check_vertices(set)?;
    let dm = g.distances()?;
    let sigs = g
        .edges()
        .iter()
        .map(|&e| edge_signature(&dm, e, set).expect("edges of g are edges"));
    Ok(all_distinct(sigs))
}

fn all_distinct(sigs: impl Iterator<Item = Signature>) -> bool {
    let mut v: Vec<_> = sigs.collect();
    v.sort_unstable();
    v.windows(2).all(|w| w[0] != w[1])
}

/// Outcome of an exact dimension computation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DimensionResult {
    pub value: usize,
    /// Lexicographically least minimum resolving set.
    pub witness: Vec<usize>,
    /// Every minimum resolving set, in lexicographic order, when requested.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub all_bases: Option<Vec<Vec<usize>>>,
}

/// dim(G). By convention dim(K_1) = 0.
pub fn metric_dimension(g: &Graph, want_all_bases: bool) -> Result<DimensionResult> {
    dimension(g, Kind::Vertex, want_all_bases)
}

/// edim(G). By convention edim(G) = 0 when G has at most one edge.
pub fn edge_metric_dimension(g: &Graph, want_all_bases: bool) -> Result<DimensionResult> {
    dimension(g, Kind::Edge, want_all_bases)
}

pub fn dimension(g: &Graph, kind: Kind, want_all_bases: bool) -> Result<DimensionResult> {
    let dm = g.distances()?;
    dimension_with(g, &dm, kind, want_all_bases)
}

/// Like [`dimension`] with a precomputed distance matrix for `g`.
pub fn dimension_with(
    g: &Graph,
    dm: &DistanceMatrix,
    kind: Kind,
    want_all_bases: bool,
) -> Result<DimensionResult> {
    let table = DistinctionTable::build(g, dm, kind)?;
    let search = Search::new(&table);
    let min = search.minimum();
    let all_bases = want_all_bases.then(|| search.all_of_size(min.value));
    Ok(DimensionResult {
        value: min.value,
        witness: min.witness,
        all_bases,
    })
}

/// Smallest `|S ∪ T|` over vertex bases `S` and edge bases `T`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct JointCover {
    pub k: usize,
    pub vertex_basis: Vec<usize>,
    pub edge_basis: Vec<usize>,
}

impl JointCover {
    /// `S ∪ T`, sorted.
    pub fn union(&self) -> Vec<usize> {
        let mut u: Vec<_> = self
            .vertex_basis
            .iter()
            .chain(&self.edge_basis)
            .copied()
            .collect();
        u.sort_unstable();
        u.dedup();
        u
    }
}

/// Minimises `|S ∪ T|` over all minimum vertex bases `S` and all minimum edge
/// bases `T`; ties go to the lexicographically least `(S, T)`.
pub fn min_joint_cover(g: &Graph) -> Result<JointCover> {
    let dm = g.distances()?;
    if g.edge_count() == 0 {
        return Err(Error::NoEdges);
    }
    let vb = dimension_with(g, &dm, Kind::Vertex, true)?
        .all_bases
        .expect("requested");
    let eb = dimension_with(g, &dm, Kind::Edge, true)?
        .all_bases
        .expect("requested");

    let n = g.vertex_count();
    let mask = |set: &[usize]| {
        let mut m = vec![0u64; n.div_ceil(64)];
        for &v in set {
            m[v >> 6] |= 1 << (v & 63);
        }
        m
    };
    let emasks: Vec<_> = eb.iter().map(|t| mask(t)).collect();

    let mut best: Option<(usize, usize, usize)> = None;
    for (si, s) in vb.iter().enumerate() {
        let sm = mask(s);
        for (ti, tm) in emasks.iter().enumerate() {
            let size: u32 = sm.iter().zip(tm).map(|(a, b)| (a | b).count_ones()).sum();
            let size = size as usize;
            if best.is_none_or(|(b, _, _)| size < b) {
                best = Some((size, si, ti));
            }
        }
    }
    let (k, si, ti) = best.expect("bases are never empty");
    Ok(JointCover {
        k,
        vertex_basis: vb[si].clone(),
        edge_basis: eb[ti].clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::new(n, &e).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &e).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let mut e = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                e.push((i, j));
            }
        }
        Graph::new(n, &e).unwrap()
    }

    #[test]
    fn signatures() {
        let p3 = path(3).distances().unwrap();
        assert_eq!(vertex_signature(&p3, 2, &[0]), Signature(vec![2]));
        assert_eq!(vertex_signature(&p3, 1, &[]), Signature(vec![]));
        let c4 = cycle(4).distances().unwrap();
        assert_eq!(vertex_signature(&c4, 2, &[0, 1]), Signature(vec![2, 1]));

        assert_eq!(edge_signature(&p3, (0, 1), &[0]), Ok(Signature(vec![0])));
        assert_eq!(edge_signature(&p3, (1, 2), &[0]), Ok(Signature(vec![1])));
        let k3 = complete(3).distances().unwrap();
        assert_eq!(edge_signature(&k3, (1, 2), &[0]), Ok(Signature(vec![1])));
        assert_eq!(
            edge_signature(&p3, (0, 2), &[0]),
            Err(Error::NotAnEdge(0, 2))
        );
    }

    #[test]
    fn generator_predicates() {
        assert_eq!(is_vertex_generator(&path(3), &[0]), Ok(true));
        assert_eq!(is_vertex_generator(&cycle(4), &[0]), Ok(false));
        let g = cycle(5);
        assert_eq!(is_vertex_generator(&g, &[0, 1, 2, 3, 4]), Ok(true));

        assert_eq!(is_edge_generator(&path(3), &[0]), Ok(true));
        assert_eq!(is_edge_generator(&complete(3), &[0]), Ok(false));
        let star = Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(is_edge_generator(&star, &[1, 2]), Ok(true));

        let split = Graph::new(3, &[(0, 1)]).unwrap();
        assert_eq!(is_vertex_generator(&split, &[0]), Err(Error::Disconnected));
        assert!(matches!(
            is_edge_generator(&path(3), &[7]),
            Err(Error::VertexOutOfRange { v: 7, .. })
        ));
    }

    #[test]
    fn small_dimensions() {
        let p5 = path(5);
        let d = metric_dimension(&p5, false).unwrap();
        assert_eq!((d.value, d.witness.as_slice()), (1, &[0][..]));
        assert_eq!(edge_metric_dimension(&p5, false).unwrap().value, 1);
        assert_eq!(metric_dimension(&complete(4), false).unwrap().value, 3);
        assert_eq!(edge_metric_dimension(&complete(4), false).unwrap().value, 3);
        assert_eq!(edge_metric_dimension(&cycle(5), false).unwrap().value, 2);
    }

    #[test]
    fn degenerate_conventions() {
        let k1 = Graph::singleton();
        let d = metric_dimension(&k1, true).unwrap();
        assert_eq!(d.value, 0);
        assert_eq!(d.all_bases, Some(vec![vec![]]));
        assert_eq!(edge_metric_dimension(&k1, false).unwrap().value, 0);
        let k2 = path(2);
        assert_eq!(metric_dimension(&k2, false).unwrap().value, 1);
        assert_eq!(edge_metric_dimension(&k2, false).unwrap().value, 0);
        assert_eq!(min_joint_cover(&k1), Err(Error::NoEdges));
    }

    #[test]
    fn all_bases_p3() {
        let d = metric_dimension(&path(3), true).unwrap();
        assert_eq!(d.all_bases, Some(vec![vec![0], vec![2]]));
        let d = edge_metric_dimension(&complete(3), true).unwrap();
        assert_eq!(d.all_bases, Some(vec![vec![0, 1], vec![0, 2], vec![1, 2]]));
    }

    #[test]
    fn joint_cover() {
        let j = min_joint_cover(&path(3)).unwrap();
        assert_eq!((j.k, j.vertex_basis, j.edge_basis), (1, vec![0], vec![0]));
        assert_eq!(min_joint_cover(&complete(4)).unwrap().k, 3);
        assert_eq!(min_joint_cover(&complete(3)).unwrap().k, 2);
        for g in [path(4), cycle(5), complete(4)] {
            let j = min_joint_cover(&g).unwrap();
            let dim = metric_dimension(&g, false).unwrap().value;
            let edim = edge_metric_dimension(&g, false).unwrap().value;
            assert!(dim.max(edim) <= j.k && j.k <= dim + edim);
            assert_eq!(j.union().len(), j.k);
        }
    }
}
