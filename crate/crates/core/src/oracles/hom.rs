//! Backtracking search for (list) homomorphisms into a small target.
//!
//! Domains are bitsets over the target's vertices, kept arc consistent:
//! after every change the domain of each neighbor is intersected with the
//! union of target-neighborhoods of the changed domain. A state in which
//! every domain is a singleton is therefore a homomorphism.

use super::listhom::Surjectivity;
use crate::graph::Graph;

pub(crate) const MAX_TARGET: usize = 64;

pub(crate) struct HomSearch<'a> {
    g: &'a Graph,
    target_nbrs: Vec<u64>,
    target_edges: Vec<(usize, usize)>,
    full: u64,
    mode: Surjectivity,
    dom: Vec<u64>,
    trail: Vec<(usize, u64)>,
    queued: Vec<bool>,
    queue: Vec<usize>,
}

impl<'a> HomSearch<'a> {
    /// `domains[v]` is the initial bitset for source vertex `v`.
    pub(crate) fn new(g: &'a Graph, target: &Graph, domains: Vec<u64>, mode: Surjectivity) -> Self {
        debug_assert!(target.n() <= MAX_TARGET);
        debug_assert_eq!(domains.len(), g.n());
        let target_nbrs = (0..target.n())
            .map(|a| target.neighbors(a).iter().fold(0u64, |m, &b| m | 1 << b))
            .collect();
        let full = if target.n() == 64 {
            u64::MAX
        } else {
            (1u64 << target.n()) - 1
        };
        Self {
            g,
            target_nbrs,
            target_edges: target.edges().collect(),
            full,
            mode,
            dom: domains,
            trail: Vec::new(),
            queued: vec![false; g.n()],
            queue: Vec::new(),
        }
    }

    /// Runs the search; returns the image of every source vertex.
    pub(crate) fn run(mut self) -> Option<Vec<usize>> {
        if self.dom.contains(&0) {
            return None;
        }
        for v in 0..self.g.n() {
            self.enqueue(v);
        }
        if !self.propagate() || !self.search() {
            return None;
        }
        Some(
            self.dom
                .iter()
                .map(|d| d.trailing_zeros() as usize)
                .collect(),
        )
    }

    fn enqueue(&mut self, v: usize) {
        if !self.queued[v] {
            self.queued[v] = true;
            self.queue.push(v);
        }
    }

    fn support(&self, d: u64) -> u64 {
        let mut bits = d;
        let mut s = 0;
        while bits != 0 {
            let a = bits.trailing_zeros() as usize;
            s |= self.target_nbrs[a];
            bits &= bits - 1;
        }
        s
    }

    fn propagate(&mut self) -> bool {
        let g = self.g;
        while let Some(u) = self.queue.pop() {
            self.queued[u] = false;
            let s = self.support(self.dom[u]);
            for &w in g.neighbors(u) {
                let old = self.dom[w];
                let new = old & s;
                if new != old {
                    if new == 0 {
                        for &q in &self.queue {
                            self.queued[q] = false;
                        }
                        self.queue.clear();
                        return false;
                    }
                    self.trail.push((w, old));
                    self.dom[w] = new;
                    self.enqueue(w);
                }
            }
        }
        true
    }

    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let (v, d) = self.trail.pop().unwrap();
            self.dom[v] = d;
        }
    }

    /// Whether the current domains can still meet the surjectivity mode.
    /// Exact once every domain is a singleton.
    fn coverable(&self) -> bool {
        match self.mode {
            Surjectivity::Plain => true,
            Surjectivity::Vertex => {
                self.dom.iter().fold(0u64, |acc, &d| acc | d) & self.full == self.full
            }
            Surjectivity::Edge => {
                let mut pending: Vec<(usize, usize)> = self.target_edges.clone();
                for (u, v) in self.g.edges() {
                    let (du, dv) = (self.dom[u], self.dom[v]);
                    pending.retain(|&(a, b)| {
                        !((du >> a & 1 == 1 && dv >> b & 1 == 1)
                            || (du >> b & 1 == 1 && dv >> a & 1 == 1))
                    });
                    if pending.is_empty() {
                        return true;
                    }
                }
                pending.is_empty()
            }
        }
    }

    fn search(&mut self) -> bool {
        if !self.coverable() {
            return false;
        }
        let mut pick: Option<(usize, u32)> = None;
        for (v, &d) in self.dom.iter().enumerate() {
            let c = d.count_ones();
            if c >= 2 && pick.is_none_or(|(_, best)| c < best) {
                pick = Some((v, c));
                if c == 2 {
                    break;
                }
            }
        }
        let Some((v, _)) = pick else {
            return true;
        };
        let mut values = self.dom[v];
        while values != 0 {
            let a = values.trailing_zeros();
            values &= values - 1;
            let mark = self.trail.len();
            self.trail.push((v, self.dom[v]));
            self.dom[v] = 1 << a;
            self.enqueue(v);
            if self.propagate() && self.search() {
                return true;
            }
            self.undo(mark);
        }
        false
    }
}
