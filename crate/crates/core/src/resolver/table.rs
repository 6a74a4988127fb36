//! Per-vertex "distinguishing bitsets".
//!
//! Objects (vertices or edges) are numbered `0..m`; unordered pairs `(i, j)`,
//! `i < j`, are numbered lexicographically. Row `v` has bit `p` set when
//! landmark `v` separates the objects of pair `p`. A landmark set resolves
//! the graph exactly when the OR of its rows covers every pair.

use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Graph};

use super::Kind;

/// Refuse to allocate tables beyond this size.
const MAX_TABLE_BYTES: usize = 1 << 30;

pub(crate) struct DistinctionTable {
    n: usize,
    words: usize,
    rows: Vec<u64>,
    full: Vec<u64>,
}

impl DistinctionTable {
    pub(crate) fn build(g: &Graph, dm: &DistanceMatrix, kind: Kind) -> Result<Self> {
        let n = g.vertex_count();
        let objects = match kind {
            Kind::Vertex => n,
            Kind::Edge => g.edge_count(),
        };
        let pairs = objects * objects.saturating_sub(1) / 2;
        let words = pairs.div_ceil(64);
        let bytes = n.saturating_mul(words).saturating_mul(8);
        if bytes > MAX_TABLE_BYTES {
            return Err(Error::SearchTooLarge { bytes });
        }

        let mut rows = vec![0u64; n * words];
        let mut dist = vec![0u16; objects];
        for v in 0..n {
            match kind {
                Kind::Vertex => dist.copy_from_slice(dm.row(v)),
                Kind::Edge => {
                    let row = dm.row(v);
                    for (slot, &(x, y)) in dist.iter_mut().zip(g.edges()) {
                        *slot = row[x].min(row[y]);
                    }
                }
            }
            let out = &mut rows[v * words..(v + 1) * words];
            let mut p = 0;
            for i in 0..objects {
                let di = dist[i];
                for &dj in &dist[i + 1..] {
                    if di != dj {
                        out[p >> 6] |= 1 << (p & 63);
                    }
                    p += 1;
                }
            }
        }

        let mut full = vec![u64::MAX; words];
        if pairs % 64 != 0 {
            full[words - 1] = (1u64 << (pairs % 64)) - 1;
        }
        Ok(DistinctionTable {
            n,
            words,
            rows,
            full,
        })
    }

    pub(crate) fn vertex_count(&self) -> usize {
        self.n
    }

    pub(crate) fn words(&self) -> usize {
        self.words
    }

    #[inline]
    pub(crate) fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    #[inline]
    pub(crate) fn is_full(&self, acc: &[u64]) -> bool {
        acc == self.full.as_slice()
    }

    /// Whether `a | b` covers every pair.
    #[inline]
    pub(crate) fn covers(&self, a: &[u64], b: &[u64]) -> bool {
        a.iter()
            .zip(b)
            .zip(&self.full)
            .all(|((x, y), f)| x | y == *f)
    }

    /// `suffix[i]` is the OR of rows `i..n`; `suffix[n]` is empty.
    pub(crate) fn suffix_unions(&self) -> Vec<u64> {
        let w = self.words;
        let mut out = vec![0u64; (self.n + 1) * w];
        for v in (0..self.n).rev() {
            let (head, tail) = out.split_at_mut((v + 1) * w);
            let dst = &mut head[v * w..];
            for ((d, s), r) in dst.iter_mut().zip(&tail[..w]).zip(self.row(v)) {
                *d = s | r;
            }
        }
        out
    }
}
