use super::{BipartiteGraph, Graph};
use crate::error::{Error, Result};

/// An induced 6-cycle `(h1, ..., h6)` of a bipartite host.
///
/// Consecutive entries (cyclically) are adjacent, the three diagonals
/// `h_i h_{i+3}` are non-edges, and `h1, h3, h5` share a part.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct C6Embedding {
    cycle: [usize; 6],
}

impl C6Embedding {
    pub fn new(host: &BipartiteGraph, cycle: [usize; 6]) -> Result<Self> {
        let c = Self { cycle };
        c.check(host)?;
        Ok(c)
    }

    /// Checks the embedding invariants against `host`.
    pub fn check(&self, host: &BipartiteGraph) -> Result<()> {
        let h = &self.cycle;
        if let Some(&v) = h.iter().find(|&&v| v >= host.n()) {
            return Err(Error::input(format!("cycle vertex {v} out of range")));
        }
        for i in 0..6 {
            if h[(i + 1)..].contains(&h[i]) {
                return Err(Error::input(format!("cycle repeats vertex {}", h[i])));
            }
        }
        for i in 0..6 {
            let (u, v) = (h[i], h[(i + 1) % 6]);
            if !host.has_edge(u, v) {
                return Err(Error::input(format!(
                    "cycle pair ({u}, {v}) is not an edge"
                )));
            }
        }
        for i in 0..3 {
            if host.has_edge(h[i], h[i + 3]) {
                return Err(Error::input(format!(
                    "diagonal ({}, {}) is an edge; cycle is not induced",
                    h[i],
                    h[i + 3]
                )));
            }
        }
        if host.part(h[0]) != host.part(h[2]) || host.part(h[0]) != host.part(h[4]) {
            return Err(Error::input("h1, h3, h5 are not in a common part"));
        }
        Ok(())
    }

    /// Builds an embedding without host checks; callers must uphold the
    /// invariants.
    pub(crate) fn from_cycle_unchecked(cycle: [usize; 6]) -> Self {
        Self { cycle }
    }

    pub fn cycle(&self) -> [usize; 6] {
        self.cycle
    }

    /// `h_i` for `i` in `1..=6`.
    pub fn h(&self, i: usize) -> usize {
        self.cycle[i - 1]
    }

    /// Position (0-based) of `v` on the cycle.
    pub fn position(&self, v: usize) -> Option<usize> {
        self.cycle.iter().position(|&c| c == v)
    }

    /// Rotation by `k` steps: the result starts at `h_{k+1}`.
    pub fn rotated(&self, k: usize) -> Self {
        let mut cycle = [0; 6];
        for (i, slot) in cycle.iter_mut().enumerate() {
            *slot = self.cycle[(i + k) % 6];
        }
        Self { cycle }
    }

    pub fn vertices(&self) -> &[usize; 6] {
        &self.cycle
    }

    /// Lexicographically smallest rotation/reflection, starting at the
    /// minimum vertex.
    pub fn canonical(&self) -> Self {
        let start = (0..6).min_by_key(|&i| self.cycle[i]).unwrap();
        let fwd: [usize; 6] = std::array::from_fn(|i| self.cycle[(start + i) % 6]);
        let bwd: [usize; 6] = std::array::from_fn(|i| self.cycle[(start + 6 - i) % 6]);
        Self {
            cycle: fwd.min(bwd),
        }
    }
}

/// The abstract 6-cycle `0-1-2-3-4-5-0`.
pub fn abstract_c6() -> Graph {
    Graph::from_edges(6, (0..6).map(|i| (i, (i + 1) % 6))).unwrap()
}

/// Every induced 6-cycle of `b`, one canonical embedding per vertex set,
/// sorted.
pub fn enumerate_induced_c6(b: &BipartiteGraph) -> Vec<C6Embedding> {
    let mut out = Vec::new();
    for s in 0..b.n() {
        let mut path = [s, 0, 0, 0, 0, 0];
        extend(b, &mut path, 1, &mut out);
    }
    out
}

fn extend(b: &BipartiteGraph, path: &mut [usize; 6], len: usize, out: &mut Vec<C6Embedding>) {
    let s = path[0];
    if len == 6 {
        // close the cycle; orientation fixed by h2 < h6
        if b.has_edge(path[5], s)
            && path[1] < path[5]
            && (0..3).all(|i| !b.has_edge(path[i], path[i + 3]))
        {
            out.push(C6Embedding::from_cycle_unchecked(*path));
        }
        return;
    }
    let last = path[len - 1];
    for &w in b.neighbors(last) {
        if w <= s || path[..len].contains(&w) {
            continue;
        }
        // chords to earlier non-consecutive vertices kill inducedness
        if (0..len - 1).any(|i| b.has_edge(path[i], w) && !(i == 0 && len == 5)) {
            continue;
        }
        path[len] = w;
        extend(b, path, len + 1, out);
    }
}
