//! Exact minimum-resolving-set search over a [`DistinctionTable`].
//!
//! Subsets of a fixed size are visited as lexicographic combinations by a
//! depth-first walk that carries the OR of the chosen rows. A branch is cut
//! as soon as the rows still available cannot cover the missing pairs, and
//! a branch whose prefix already covers everything is completed with the
//! smallest remaining indices.
//!
//! Resolving is monotone under adding landmarks, so "a generator of size
//! `s` exists" is monotone in `s`. The search may therefore probe sizes in
//! any order; the answer (least size, lexicographically first witness) does
//! not depend on it.

use rayon::prelude::*;

use super::table::DistinctionTable;

/// Up to this many vertices the search simply walks sizes upwards.
const ASCENDING_ONLY_MAX_N: usize = 16;
/// Largest level (in subsets) a downward probe may need to refute.
const DESCENT_BUDGET: u128 = 1 << 16;
/// Split the first branching level across rayon workers from this size on.
const PARALLEL_MIN_N: usize = 14;

pub(crate) struct Search<'a> {
    table: &'a DistinctionTable,
    suffix: Vec<u64>,
    parallel: bool,
}

pub(crate) struct Minimum {
    pub value: usize,
    pub witness: Vec<usize>,
}

impl<'a> Search<'a> {
    pub(crate) fn new(table: &'a DistinctionTable) -> Self {
        Search {
            table,
            suffix: table.suffix_unions(),
            parallel: table.vertex_count() >= PARALLEL_MIN_N,
        }
    }

    fn n(&self) -> usize {
        self.table.vertex_count()
    }

    fn suffix(&self, i: usize) -> &[u64] {
        let w = self.table.words();
        &self.suffix[i * w..(i + 1) * w]
    }

    pub(crate) fn minimum(&self) -> Minimum {
        let n = self.n();
        let mut lo = 0;
        let mut hi = n;
        let mut best: Option<Vec<usize>> = None;

        if n > ASCENDING_ONLY_MAX_N {
            while hi > lo {
                let t = hi - 1;
                if binomial(n, t) > DESCENT_BUDGET {
                    break;
                }
                match self.first_of_size(t) {
                    Some(w) => {
                        hi = t;
                        best = Some(w);
                    }
                    None => lo = hi,
                }
            }
        }
        if let Some((t, w)) = (lo..hi).find_map(|t| self.first_of_size(t).map(|w| (t, w))) {
            hi = t;
            best = Some(w);
        }
        let witness = best.unwrap_or_else(|| {
            self.first_of_size(hi)
                .expect("the full vertex set always resolves")
        });
        Minimum { value: hi, witness }
    }

    /// Lexicographically first resolving set of exactly `size` vertices.
    pub(crate) fn first_of_size(&self, size: usize) -> Option<Vec<usize>> {
        let n = self.n();
        if size > n {
            return None;
        }
        if size == 0 {
            return self.table.is_full(self.suffix(n)).then(Vec::new);
        }
        let branch = |i: usize| {
            let mut walk = Walk::new(self, size);
            walk.first_from(i)
        };
        if self.parallel {
            (0..=n - size).into_par_iter().find_map_first(branch)
        } else {
            (0..=n - size).find_map(branch)
        }
    }

    /// Every resolving set of exactly `size` vertices, in lexicographic order.
    pub(crate) fn all_of_size(&self, size: usize) -> Vec<Vec<usize>> {
        let n = self.n();
        if size > n {
            return Vec::new();
        }
        if size == 0 {
            return if self.table.is_full(self.suffix(n)) {
                vec![Vec::new()]
            } else {
                Vec::new()
            };
        }
        let branch = |i: usize| {
            let mut walk = Walk::new(self, size);
            walk.all_from(i);
            walk.found
        };
        if self.parallel {
            (0..=n - size)
                .into_par_iter()
                .map(branch)
                .collect::<Vec<_>>()
                .into_iter()
                .flatten()
                .collect()
        } else {
            (0..=n - size).flat_map(branch).collect()
        }
    }
}

/// State of one depth-first walk: chosen indices and one accumulator per
/// depth.
struct Walk<'s, 'a> {
    search: &'s Search<'a>,
    size: usize,
    chosen: Vec<usize>,
    acc: Vec<u64>,
    found: Vec<Vec<usize>>,
}

impl<'s, 'a> Walk<'s, 'a> {
    fn new(search: &'s Search<'a>, size: usize) -> Self {
        let w = search.table.words();
        Walk {
            search,
            size,
            chosen: Vec::with_capacity(size),
            acc: vec![0; (size + 1) * w],
            found: Vec::new(),
        }
    }

    /// Pushes `i` onto the prefix; returns whether the prefix now resolves.
    fn push(&mut self, i: usize) -> bool {
        let w = self.search.table.words();
        let d = self.chosen.len();
        let (cur, next) = self.acc.split_at_mut((d + 1) * w);
        let cur = &cur[d * w..];
        let next = &mut next[..w];
        for ((o, a), r) in next.iter_mut().zip(cur).zip(self.search.table.row(i)) {
            *o = a | r;
        }
        self.chosen.push(i);
        self.search.table.is_full(next)
    }

    /// Can the current prefix still be completed using indices `i..`?
    fn feasible(&self, i: usize) -> bool {
        let w = self.search.table.words();
        let d = self.chosen.len();
        self.search
            .table
            .covers(&self.acc[d * w..(d + 1) * w], self.search.suffix(i))
    }

    fn first_from(&mut self, i: usize) -> Option<Vec<usize>> {
        if !self.feasible(i) {
            return None;
        }
        if self.push(i) {
            return Some(self.complete_least());
        }
        let hit = self.first_rec();
        hit.then(|| self.chosen.clone())
    }

    fn first_rec(&mut self) -> bool {
        let n = self.search.n();
        let remaining = self.size - self.chosen.len();
        if remaining == 0 {
            return false;
        }
        let start = self.chosen.last().map_or(0, |&l| l + 1);
        for i in start..=n - remaining {
            if !self.feasible(i) {
                // suffix unions only shrink as i grows
                return false;
            }
            if self.push(i) {
                let least = self.complete_least();
                self.chosen = least;
                return true;
            }
            if self.first_rec() {
                return true;
            }
            self.chosen.pop();
        }
        false
    }

    /// The prefix already resolves: pad it with the smallest free indices.
    fn complete_least(&self) -> Vec<usize> {
        let mut out = self.chosen.clone();
        let last = *out.last().expect("non-empty prefix");
        out.extend(last + 1..last + 1 + (self.size - out.len()));
        out
    }

    fn all_from(&mut self, i: usize) {
        if !self.feasible(i) {
            return;
        }
        if self.push(i) {
            self.emit_all_completions();
        } else {
            self.all_rec();
        }
        self.chosen.pop();
    }

    fn all_rec(&mut self) {
        let n = self.search.n();
        let remaining = self.size - self.chosen.len();
        if remaining == 0 {
            return;
        }
        let start = self.chosen.last().map_or(0, |&l| l + 1);
        for i in start..=n - remaining {
            if !self.feasible(i) {
                return;
            }
            if self.push(i) {
                self.emit_all_completions();
            } else {
                self.all_rec();
            }
            self.chosen.pop();
        }
    }

    /// Records the prefix extended by every combination of later indices.
    fn emit_all_completions(&mut self) {
        let n = self.search.n();
        let need = self.size - self.chosen.len();
        let start = self.chosen.last().map_or(0, |&l| l + 1);
        let mut tail: Vec<usize> = (start..start + need).collect();
        loop {
            let mut set = self.chosen.clone();
            set.extend_from_slice(&tail);
            self.found.push(set);
            // advance `tail` to the next combination of start..n
            let Some(pos) = (0..need).rev().find(|&p| tail[p] < n - need + p) else {
                break;
            };
            tail[pos] += 1;
            for q in pos + 1..need {
                tail[q] = tail[q - 1] + 1;
            }
        }
    }
}

pub(crate) fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((n - i) as u128) / (i as u128 + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::binomial;

    #[test]
    fn binomials() {
        assert_eq!(binomial(20, 17), 1140);
        assert_eq!(binomial(7, 0), 1);
        assert_eq!(binomial(3, 4), 0);
        assert_eq!(binomial(37, 34), 7770);
    }
}
