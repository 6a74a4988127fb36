//! Exhaustive enumeration of small labeled connected graphs, and surveys of
//! which (dim, edim) pairs they realise.
//!
//! A labeled graph on `n` vertices is identified with a bitmask over the
//! vertex pairs `(i, j)`, `i < j`, taken in lexicographic order: bit 0 is
//! `(0, 1)`, bit 1 is `(0, 2)`, and so on.

use std::collections::{BTreeMap, HashSet};
use std::fmt::Write as _;

use num_rational::Ratio;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::format::to_graph6;
use crate::graph::Graph;
use crate::resolver::{dimension_with, Kind};

/// Largest order accepted by [`enumerate_connected_graphs`].
pub const MAX_ENUM_N: usize = 8;
/// Largest order accepted by the surveys.
pub const MAX_SURVEY_N: usize = 7;

/// Vertex pairs in mask-bit order.
pub fn pair_list(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect()
}

pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let edges = pair_list(n)
        .into_iter()
        .enumerate()
        .filter(|(b, _)| mask >> b & 1 == 1)
        .map(|(_, p)| p)
        .collect();
    Graph::from_canonical(n, edges)
}

/// Connectivity straight from the mask, without building a [`Graph`].
pub fn mask_is_connected(n: usize, mask: u64) -> bool {
    let mut adj = [0u16; 16];
    let mut b = 0;
    for i in 0..n {
        for j in i + 1..n {
            if mask >> b & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
            b += 1;
        }
    }
    let all = ((1u32 << n) - 1) as u16;
    let mut reach: u16 = 1;
    loop {
        let mut next = reach;
        let mut r = reach;
        while r != 0 {
            let v = r.trailing_zeros() as usize;
            next |= adj[v];
            r &= r - 1;
        }
        if next == reach {
            return reach == all;
        }
        reach = next;
    }
}

fn check_n(n: usize, max: usize) -> Result<()> {
    if !(1..=max).contains(&n) {
        return Err(Error::NTooLarge { n, max });
    }
    Ok(())
}

fn mask_count(n: usize) -> u64 {
    1u64 << (n * (n - 1) / 2)
}

/// Masks of all labeled connected graphs on `n` vertices, ascending.
pub fn connected_masks(n: usize) -> Result<Vec<u64>> {
    check_n(n, MAX_ENUM_N)?;
    Ok((0..mask_count(n))
        .into_par_iter()
        .filter(|&m| mask_is_connected(n, m))
        .collect())
}

/// Every labeled connected graph on `n` vertices exactly once, in ascending
/// mask order.
///
/// With `distinct_only`, a graph is dropped when its sorted degree sequence
/// and sorted multiset of pairwise distances both match an earlier graph.
/// That is a cheap quotient, not an isomorphism test: non-isomorphic graphs
/// sharing both invariants are merged too.
pub fn enumerate_connected_graphs(
    n: usize,
    distinct_only: bool,
) -> Result<impl Iterator<Item = Graph>> {
    check_n(n, MAX_ENUM_N)?;
    let mut seen = HashSet::new();
    Ok((0..mask_count(n))
        .filter(move |&m| mask_is_connected(n, m))
        .map(move |m| graph_from_mask(n, m))
        .filter(move |g| !distinct_only || seen.insert(invariant_key(g))))
}

fn invariant_key(g: &Graph) -> (Vec<usize>, Vec<u16>) {
    let n = g.vertex_count();
    let mut degrees: Vec<_> = (0..n).map(|v| g.degree(v)).collect();
    degrees.sort_unstable();
    let dm = g.distances().expect("enumerated graphs are connected");
    let mut dists: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .map(|(u, v)| dm.get(u, v))
        .collect();
    dists.sort_unstable();
    (degrees, dists)
}

/// One realised (n, dim, edim) triple.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SurveyRow {
    pub n: usize,
    pub dim: usize,
    pub edim: usize,
    /// Labeled connected graphs realising the triple.
    pub count: u64,
    /// graph6 of the realising graph with the smallest mask.
    pub example: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RatioExtremes {
    /// Largest edim/dim over graphs with dim > 0.
    #[serde(serialize_with = "ser_ratio")]
    pub max_ratio: Ratio<usize>,
    /// graph6 of every graph attaining it, in mask order.
    pub witnesses: Vec<String>,
}

fn ser_ratio<S: serde::Serializer>(r: &Ratio<usize>, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format!("{}/{}", r.numer(), r.denom()))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Survey {
    pub n: usize,
    pub rows: Vec<SurveyRow>,
    pub ratio: Option<RatioExtremes>,
}

/// (mask, dim, edim) for every labeled connected graph on `n` vertices.
pub fn dimension_records(n: usize) -> Result<Vec<(u64, usize, usize)>> {
    check_n(n, MAX_SURVEY_N)?;
    connected_masks(n)?
        .into_par_iter()
        .map(|m| {
            let g = graph_from_mask(n, m);
            let dm = g.distances()?;
            let dim = dimension_with(&g, &dm, Kind::Vertex, false)?.value;
            let edim = dimension_with(&g, &dm, Kind::Edge, false)?.value;
            Ok((m, dim, edim))
        })
        .collect()
}

pub fn survey(n: usize) -> Result<Survey> {
    let records = dimension_records(n)?;

    let mut agg: BTreeMap<(usize, usize), (u64, u64)> = BTreeMap::new();
    for &(m, dim, edim) in &records {
        let e = agg.entry((dim, edim)).or_insert((0, m));
        e.0 += 1;
        e.1 = e.1.min(m);
    }
    let rows = agg
        .into_iter()
        .map(|((dim, edim), (count, m))| SurveyRow {
            n,
            dim,
            edim,
            count,
            example: to_graph6(&graph_from_mask(n, m)),
        })
        .collect();

    let max_ratio = records
        .iter()
        .filter(|r| r.1 > 0)
        .map(|&(_, dim, edim)| Ratio::new(edim, dim))
        .max();
    let ratio = max_ratio.map(|max_ratio| RatioExtremes {
        max_ratio,
        witnesses: records
            .iter()
            .filter(|&&(_, dim, edim)| dim > 0 && Ratio::new(edim, dim) == max_ratio)
            .map(|&(m, _, _)| to_graph6(&graph_from_mask(n, m)))
            .collect(),
    });
    Ok(Survey { n, rows, ratio })
}

/// Rows sorted by (dim, edim).
pub fn survey_triples(n: usize) -> Result<Vec<SurveyRow>> {
    Ok(survey(n)?.rows)
}

/// `None` only for n = 1, where every graph has dim 0.
pub fn ratio_extremes(n: usize) -> Result<Option<RatioExtremes>> {
    Ok(survey(n)?.ratio)
}

pub const SURVEY_CSV_HEADER: &str = "n,dim,edim,count,example_graph6";

pub fn survey_csv(rows: &[SurveyRow]) -> String {
    let mut s = String::from(SURVEY_CSV_HEADER);
    s.push('\n');
    for r in rows {
        writeln!(s, "{},{},{},{},{}", r.n, r.dim, r.edim, r.count, r.example).unwrap();
    }
    s
}
