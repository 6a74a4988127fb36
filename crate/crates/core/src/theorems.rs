//! Executable checks of the structural results about dim and edim.
//!
//! Every check evaluates the statement on concrete solver output and returns
//! a [`TheoremReport`]. The certificate carries the numbers the verdict was
//! derived from, and [`Certificate::verdict`] re-derives the verdict from
//! them alone, so a failing report can be audited without rerunning anything.

use std::cell::OnceCell;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::constructions::{cartesian_path, construct_f, construct_h, join, product_upper_witness};
use crate::error::{Error, Result};
use crate::experiments::{connected_masks, graph_from_mask};
use crate::format::to_graph6;
use crate::graph::{DistanceMatrix, Edge, Graph};
use crate::resolver::{binomial, dimension_with, is_edge_generator, min_joint_cover, Kind};

/// Largest k accepted by the F_k and H_k checks.
pub const MAX_CHECK_K: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TheoremId {
    /// edim = n - 1 iff every vertex pair has a common neighbour adjacent
    /// to all their non-mutual neighbours.
    Ncondition,
    /// edim = n - 1 forces diameter <= 2 and every edge in a triangle.
    Corollary,
    /// n <= dim + D^dim.
    VertexBound,
    /// |E| <= C(k,2) + k D^(k-1) + D^k with k = edim.
    EdgeBound,
    /// Universal vertices pin edim to n - 1 or n - 2.
    MaxDegree,
    /// dim(F_k) = k, edim(F_k) = k + 2^k - 2.
    Fk,
    /// dim(H_k) = k + 1, edim(H_k) = k + 2^k.
    Hk,
    /// edim(G + K_1) is n or n - 1 according to the join predicate.
    Join,
    /// k <= edim(G □ P_m) <= k + 1 for the minimum joint cover size k.
    Product,
}

impl TheoremId {
    pub const ALL: [TheoremId; 9] = [
        TheoremId::Ncondition,
        TheoremId::Corollary,
        TheoremId::VertexBound,
        TheoremId::EdgeBound,
        TheoremId::MaxDegree,
        TheoremId::Fk,
        TheoremId::Hk,
        TheoremId::Join,
        TheoremId::Product,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::Ncondition => "ncondition",
            TheoremId::Corollary => "corollary",
            TheoremId::VertexBound => "vertex-bound",
            TheoremId::EdgeBound => "edge-bound",
            TheoremId::MaxDegree => "max-degree",
            TheoremId::Fk => "fk",
            TheoremId::Hk => "hk",
            TheoremId::Join => "join",
            TheoremId::Product => "product",
        }
    }

    /// Whether the statement is about a family index k rather than an
    /// arbitrary graph.
    pub fn is_family(self) -> bool {
        matches!(self, TheoremId::Fk | TheoremId::Hk)
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::BadParams(format!("unknown theorem `{s}`")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Holds,
    Fails,
    NotApplicable,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Holds => "holds",
            Verdict::Fails => "fails",
            Verdict::NotApplicable => "not_applicable",
        })
    }
}

/// The evidence behind a verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    NotApplicable {
        reason: String,
    },
    Ncondition {
        n: usize,
        edim: usize,
        condition: bool,
        violating_pair: Option<(usize, usize)>,
    },
    Corollary {
        n: usize,
        edim: usize,
        diameter: usize,
        edge_without_triangle: Option<Edge>,
    },
    VertexBound {
        n: usize,
        dim: usize,
        diameter: usize,
        bound: u128,
    },
    EdgeBound {
        edges: usize,
        edim: usize,
        diameter: usize,
        bound: u128,
    },
    MaxDegree {
        n: usize,
        max_degree: usize,
        universal_vertices: usize,
        edim: usize,
    },
    Family {
        k: usize,
        n: usize,
        dim: usize,
        edim: usize,
        expected_dim: usize,
        expected_edim: usize,
        /// Only for H_k: the non-mutual-neighbour condition, which must hold.
        #[serde(skip_serializing_if = "Option::is_none")]
        condition: Option<bool>,
    },
    Join {
        n: usize,
        predicate: bool,
        failing_vertex: Option<usize>,
        edim_join: usize,
    },
    Product {
        m: usize,
        k: usize,
        edim_product: usize,
        witness: Vec<usize>,
        witness_generates: bool,
    },
}

impl Certificate {
    /// Re-derives the verdict from the recorded numbers.
    pub fn verdict(&self) -> Verdict {
        use Certificate::*;
        let holds = match *self {
            NotApplicable { .. } => return Verdict::NotApplicable,
            Ncondition {
                n,
                edim,
                condition,
                violating_pair,
            } => condition == violating_pair.is_none() && (edim + 1 == n) == condition,
            Corollary {
                n,
                edim,
                diameter,
                edge_without_triangle,
            } => edim + 1 != n || (diameter <= 2 && edge_without_triangle.is_none()),
            VertexBound {
                n,
                dim,
                diameter,
                bound,
            } => bound == vertex_bound(dim, diameter) && n as u128 <= bound,
            EdgeBound {
                edges,
                edim,
                diameter,
                bound,
            } => bound == edge_bound(edim, diameter) && edges as u128 <= bound,
            MaxDegree {
                n,
                max_degree,
                universal_vertices,
                edim,
            } => {
                let one = max_degree + 1 != n || edim + 1 == n || edim + 2 == n;
                let two = universal_vertices < 2 || edim + 1 == n;
                one && two
            }
            Family {
                dim,
                edim,
                expected_dim,
                expected_edim,
                condition,
                ..
            } => dim == expected_dim && edim == expected_edim && condition != Some(false),
            Join {
                n,
                predicate,
                failing_vertex,
                edim_join,
            } => {
                predicate == failing_vertex.is_none()
                    && Some(edim_join) == if predicate { Some(n) } else { n.checked_sub(1) }
            }
            Product {
                k,
                edim_product,
                ref witness,
                witness_generates,
                ..
            } => {
                k <= edim_product
                    && edim_product <= k + 1
                    && witness.len() == k + 1
                    && witness_generates
            }
        };
        if holds {
            Verdict::Holds
        } else {
            Verdict::Fails
        }
    }
}

fn vertex_bound(dim: usize, diameter: usize) -> u128 {
    (dim as u128).saturating_add(pow(diameter, dim))
}

fn edge_bound(k: usize, diameter: usize) -> u128 {
    let pairs = binomial(k, 2);
    let one_zero = if k == 0 {
        0
    } else {
        (k as u128).saturating_mul(pow(diameter, k - 1))
    };
    pairs
        .saturating_add(one_zero)
        .saturating_add(pow(diameter, k))
}

fn pow(base: usize, exp: usize) -> u128 {
    (base as u128).saturating_pow(exp.min(u32::MAX as usize) as u32)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub theorem_id: TheoremId,
    /// graph6 of the instance, or `F_k` / `H_k` for the family checks; the
    /// product check appends `xP<m>`.
    #[serde(rename = "graph")]
    pub graph_id: String,
    pub verdict: Verdict,
    pub certificate: Certificate,
}

impl TheoremReport {
    fn new(theorem_id: TheoremId, graph_id: String, certificate: Certificate) -> Self {
        TheoremReport {
            theorem_id,
            graph_id,
            verdict: certificate.verdict(),
            certificate,
        }
    }

    fn not_applicable(theorem_id: TheoremId, graph_id: String, reason: &str) -> Self {
        Self::new(
            theorem_id,
            graph_id,
            Certificate::NotApplicable {
                reason: reason.into(),
            },
        )
    }

    /// The stored verdict agrees with the certificate.
    pub fn is_consistent(&self) -> bool {
        self.verdict == self.certificate.verdict()
    }

    /// `theorem_id<TAB>graph<TAB>verdict<TAB>certificate-json`
    pub fn to_record(&self) -> String {
        format!(
            "{}\t{}\t{}\t{}",
            self.theorem_id,
            self.graph_id,
            self.verdict,
            serde_json::to_string(&self.certificate).expect("certificate serialises")
        )
    }
}

/// Per-graph values shared between checks, computed on first use.
pub struct Facts<'g> {
    g: &'g Graph,
    dm: DistanceMatrix,
    dim: OnceCell<usize>,
    edim: OnceCell<usize>,
}

impl<'g> Facts<'g> {
    pub fn new(g: &'g Graph) -> Result<Self> {
        Ok(Facts {
            g,
            dm: g.distances()?,
            dim: OnceCell::new(),
            edim: OnceCell::new(),
        })
    }

    pub fn graph(&self) -> &Graph {
        self.g
    }

    pub fn dim(&self) -> usize {
        *self.dim.get_or_init(|| {
            dimension_with(self.g, &self.dm, Kind::Vertex, false)
                .expect("distances already computed")
                .value
        })
    }

    pub fn edim(&self) -> usize {
        *self.edim.get_or_init(|| {
            dimension_with(self.g, &self.dm, Kind::Edge, false)
                .expect("distances already computed")
                .value
        })
    }

    pub fn diameter(&self) -> usize {
        self.dm.diameter()
    }
}

struct Adjacency {
    words: usize,
    bits: Vec<u64>,
}

impl Adjacency {
    fn new(g: &Graph) -> Self {
        let n = g.vertex_count();
        let words = n.div_ceil(64);
        let mut bits = vec![0u64; n * words];
        for &(u, v) in g.edges() {
            bits[u * words + (v >> 6)] |= 1 << (v & 63);
            bits[v * words + (u >> 6)] |= 1 << (u & 63);
        }
        Adjacency { words, bits }
    }

    fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.words..(v + 1) * self.words]
    }
}

fn subset(a: impl Iterator<Item = u64>, b: &[u64]) -> bool {
    a.zip(b).all(|(x, y)| x & !y == 0)
}

/// First pair `{v1, v2}` (lexicographic) for which no common neighbour u is
/// adjacent to all non-mutual neighbours of v1 and v2.
pub fn full_edim_violation(g: &Graph) -> Result<Option<(usize, usize)>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let adj = Adjacency::new(g);
    let n = g.vertex_count();
    for v1 in 0..n {
        for v2 in v1 + 1..n {
            let (a, b) = (adj.row(v1), adj.row(v2));
            let non_mutual = || a.iter().zip(b).map(|(x, y)| x ^ y);
            let ok = (0..n).any(|u| {
                g.has_edge(u, v1) && g.has_edge(u, v2) && subset(non_mutual(), adj.row(u))
            });
            if !ok {
                return Ok(Some((v1, v2)));
            }
        }
    }
    Ok(None)
}

/// The condition characterising edim = n - 1.
pub fn full_edim_condition(g: &Graph) -> Result<bool> {
    Ok(full_edim_violation(g)?.is_none())
}

/// First vertex x for which no other vertex u has V \ N(x) ⊆ N(u).
pub fn join_k1_violation(g: &Graph) -> Result<Option<usize>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let adj = Adjacency::new(g);
    let n = g.vertex_count();
    let mut all = vec![u64::MAX; adj.words];
    if !n.is_multiple_of(64) {
        all[adj.words - 1] = (1 << (n % 64)) - 1;
    }
    for x in 0..n {
        let outside = || all.iter().zip(adj.row(x)).map(|(a, r)| a & !r);
        if !(0..n).any(|u| u != x && subset(outside(), adj.row(u))) {
            return Ok(Some(x));
        }
    }
    Ok(None)
}

/// For every x some other u is adjacent to all of V \ N(x), x included.
pub fn join_k1_predicate(g: &Graph) -> Result<bool> {
    Ok(join_k1_violation(g)?.is_none())
}

fn first_edge_without_triangle(g: &Graph) -> Option<Edge> {
    g.edges().iter().copied().find(|&(x, y)| {
        let (a, b) = (g.neighbors(x), g.neighbors(y));
        !a.iter().any(|u| b.binary_search(u).is_ok())
    })
}

fn ncondition(f: &Facts) -> TheoremReport {
    let g = f.graph();
    let id = to_graph6(g);
    if g.vertex_count() < 2 || g.edge_count() < 2 {
        return TheoremReport::not_applicable(
            TheoremId::Ncondition,
            id,
            "needs n >= 2 and |E| >= 2",
        );
    }
    let violating_pair = full_edim_violation(g).expect("connected");
    let cert = Certificate::Ncondition {
        n: g.vertex_count(),
        edim: f.edim(),
        condition: violating_pair.is_none(),
        violating_pair,
    };
    TheoremReport::new(TheoremId::Ncondition, id, cert)
}

fn corollary(f: &Facts) -> TheoremReport {
    let g = f.graph();
    let id = to_graph6(g);
    if g.vertex_count() < 2 || g.edge_count() < 2 {
        return TheoremReport::not_applicable(
            TheoremId::Corollary,
            id,
            "needs n >= 2 and |E| >= 2",
        );
    }
    let cert = Certificate::Corollary {
        n: g.vertex_count(),
        edim: f.edim(),
        diameter: f.diameter(),
        edge_without_triangle: first_edge_without_triangle(g),
    };
    TheoremReport::new(TheoremId::Corollary, id, cert)
}

fn vertex_count_bound(f: &Facts) -> TheoremReport {
    let g = f.graph();
    let id = to_graph6(g);
    if g.vertex_count() < 2 {
        return TheoremReport::not_applicable(TheoremId::VertexBound, id, "needs n >= 2");
    }
    let (dim, diameter) = (f.dim(), f.diameter());
    let cert = Certificate::VertexBound {
        n: g.vertex_count(),
        dim,
        diameter,
        bound: vertex_bound(dim, diameter),
    };
    TheoremReport::new(TheoremId::VertexBound, id, cert)
}

fn edge_count_bound(f: &Facts) -> TheoremReport {
    let g = f.graph();
    let id = to_graph6(g);
    if g.edge_count() < 1 {
        return TheoremReport::not_applicable(TheoremId::EdgeBound, id, "needs |E| >= 1");
    }
    let (edim, diameter) = (f.edim(), f.diameter());
    let cert = Certificate::EdgeBound {
        edges: g.edge_count(),
        edim,
        diameter,
        bound: edge_bound(edim, diameter),
    };
    TheoremReport::new(TheoremId::EdgeBound, id, cert)
}

fn max_degree_lemmas(f: &Facts) -> TheoremReport {
    let g = f.graph();
    let id = to_graph6(g);
    let n = g.vertex_count();
    if n < 3 {
        return TheoremReport::not_applicable(TheoremId::MaxDegree, id, "needs n >= 3");
    }
    let cert = Certificate::MaxDegree {
        n,
        max_degree: g.max_degree(),
        universal_vertices: (0..n).filter(|&v| g.degree(v) == n - 1).count(),
        edim: f.edim(),
    };
    TheoremReport::new(TheoremId::MaxDegree, id, cert)
}

fn join_theorem(f: &Facts) -> Result<TheoremReport> {
    let g = f.graph();
    let id = to_graph6(g);
    let n = g.vertex_count();
    if n < 2 {
        return Ok(TheoremReport::not_applicable(
            TheoremId::Join,
            id,
            "needs n >= 2",
        ));
    }
    let failing_vertex = join_k1_violation(g)?;
    let joined = join(g, &Graph::singleton())?;
    let cert = Certificate::Join {
        n,
        predicate: failing_vertex.is_none(),
        failing_vertex,
        edim_join: dimension_with(&joined, &joined.distances()?, Kind::Edge, false)?.value,
    };
    Ok(TheoremReport::new(TheoremId::Join, id, cert))
}

fn product_theorem(f: &Facts, m: usize) -> Result<TheoremReport> {
    let g = f.graph();
    if m < 2 {
        return Err(Error::MTooSmall(m));
    }
    let id = format!("{}xP{m}", to_graph6(g));
    if g.edge_count() == 0 {
        return Ok(TheoremReport::not_applicable(
            TheoremId::Product,
            id,
            "needs |E| >= 1",
        ));
    }
    let k = min_joint_cover(g)?.k;
    let product = cartesian_path(g, m)?.graph;
    let witness = product_upper_witness(g, m)?;
    let cert = Certificate::Product {
        m,
        k,
        edim_product: dimension_with(&product, &product.distances()?, Kind::Edge, false)?.value,
        witness_generates: is_edge_generator(&product, &witness)?,
        witness,
    };
    Ok(TheoremReport::new(TheoremId::Product, id, cert))
}

/// Runs a graph-scoped check on precomputed facts. `m` is only read by
/// [`TheoremId::Product`].
pub fn check_facts(theorem: TheoremId, f: &Facts, m: usize) -> Result<TheoremReport> {
    Ok(match theorem {
        TheoremId::Ncondition => ncondition(f),
        TheoremId::Corollary => corollary(f),
        TheoremId::VertexBound => vertex_count_bound(f),
        TheoremId::EdgeBound => edge_count_bound(f),
        TheoremId::MaxDegree => max_degree_lemmas(f),
        TheoremId::Join => join_theorem(f)?,
        TheoremId::Product => product_theorem(f, m)?,
        TheoremId::Fk | TheoremId::Hk => {
            return Err(Error::BadParams(format!(
                "{theorem} is checked per k, not per graph"
            )))
        }
    })
}

pub fn check_graph(theorem: TheoremId, g: &Graph, m: usize) -> Result<TheoremReport> {
    check_facts(theorem, &Facts::new(g)?, m)
}

pub fn check_ncondition_theorem(g: &Graph) -> Result<TheoremReport> {
    Ok(ncondition(&Facts::new(g)?))
}

pub fn check_corollary_diam_triangle(g: &Graph) -> Result<TheoremReport> {
    Ok(corollary(&Facts::new(g)?))
}

pub fn check_vertex_count_bound(g: &Graph) -> Result<TheoremReport> {
    Ok(vertex_count_bound(&Facts::new(g)?))
}

pub fn check_edge_count_bound(g: &Graph) -> Result<TheoremReport> {
    Ok(edge_count_bound(&Facts::new(g)?))
}

pub fn check_max_degree_lemmas(g: &Graph) -> Result<TheoremReport> {
    Ok(max_degree_lemmas(&Facts::new(g)?))
}

pub fn check_join_k1_theorem(g: &Graph) -> Result<TheoremReport> {
    join_theorem(&Facts::new(g)?)
}

pub fn check_product_theorem(g: &Graph, m: usize) -> Result<TheoremReport> {
    product_theorem(&Facts::new(g)?, m)
}

fn check_family_k(k: usize) -> Result<()> {
    if !(1..=MAX_CHECK_K).contains(&k) {
        return Err(Error::KOutOfRange {
            k,
            min: 1,
            max: MAX_CHECK_K,
        });
    }
    Ok(())
}

pub fn check_fk_theorem(k: usize) -> Result<TheoremReport> {
    check_family_k(k)?;
    let g = construct_f(k)?.graph;
    let f = Facts::new(&g)?;
    let cert = Certificate::Family {
        k,
        n: g.vertex_count(),
        dim: f.dim(),
        edim: f.edim(),
        expected_dim: k,
        expected_edim: k + (1 << k) - 2,
        condition: None,
    };
    Ok(TheoremReport::new(TheoremId::Fk, format!("F_{k}"), cert))
}

pub fn check_hk_theorem(k: usize) -> Result<TheoremReport> {
    check_family_k(k)?;
    let g = construct_h(k)?.graph;
    let f = Facts::new(&g)?;
    let cert = Certificate::Family {
        k,
        n: g.vertex_count(),
        dim: f.dim(),
        edim: f.edim(),
        expected_dim: k + 1,
        expected_edim: k + (1 << k),
        condition: Some(full_edim_condition(&g)?),
    };
    Ok(TheoremReport::new(TheoremId::Hk, format!("H_{k}"), cert))
}

pub fn check_family(theorem: TheoremId, k: usize) -> Result<TheoremReport> {
    match theorem {
        TheoremId::Fk => check_fk_theorem(k),
        TheoremId::Hk => check_hk_theorem(k),
        other => Err(Error::BadParams(format!(
            "{other} is checked per graph, not per k"
        ))),
    }
}

/// Runs every theorem in `theorems` on every labeled connected graph with
/// `n_min..=n_max` vertices (and, for the product theorem, every `m` in
/// `ms`). Reports are ordered by vertex count, then graph6, then theorem,
/// then m.
pub fn sweep(
    theorems: &[TheoremId],
    n_min: usize,
    n_max: usize,
    ms: &[usize],
) -> Result<Vec<TheoremReport>> {
    if let Some(t) = theorems.iter().find(|t| t.is_family()) {
        return Err(Error::BadParams(format!("{t} cannot be swept over graphs")));
    }
    let mut out = Vec::new();
    for n in n_min.max(1)..=n_max {
        let mut per_graph: Vec<(String, Vec<TheoremReport>)> = connected_masks(n)?
            .into_par_iter()
            .map(|mask| {
                let g = graph_from_mask(n, mask);
                let f = Facts::new(&g)?;
                let mut reports = Vec::new();
                for &t in theorems {
                    if t == TheoremId::Product {
                        for &m in ms {
                            reports.push(check_facts(t, &f, m)?);
                        }
                    } else {
                        reports.push(check_facts(t, &f, 0)?);
                    }
                }
                Ok((to_graph6(&g), reports))
            })
            .collect::<Result<_>>()?;
        per_graph.sort_by(|a, b| a.0.cmp(&b.0));
        out.extend(per_graph.into_iter().flat_map(|(_, r)| r));
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub instances: usize,
    pub holds: usize,
    pub fails: usize,
    pub not_applicable: usize,
}

impl Summary {
    pub fn of(reports: &[TheoremReport]) -> Self {
        let mut s = Summary::default();
        for r in reports {
            s.instances += 1;
            match r.verdict {
                Verdict::Holds => s.holds += 1,
                Verdict::Fails => s.fails += 1,
                Verdict::NotApplicable => s.not_applicable += 1,
            }
        }
        s
    }
}
