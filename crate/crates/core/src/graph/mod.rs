//! Simple undirected graphs and the structural predicates the rest of the
//! crate builds on.

mod bipartite;
mod c6;
mod hypergraph;

pub use bipartite::{bipartite_complement, bipartition, BipartiteGraph, Part};
pub use c6::{abstract_c6, enumerate_induced_c6, C6Embedding};
pub use hypergraph::Hypergraph3;

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

/// A simple undirected graph on vertices `0..n`.
///
/// Neighbor lists are kept sorted so that adjacency tests are a binary
/// search and edge iteration is deterministic.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Self {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Builds a graph from an edge list, rejecting loops, duplicates and
    /// out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::new(n);
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::input(format!(
                    "edge ({u}, {v}) out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::input(format!("self-loop at vertex {u}")));
            }
            if !g.add_edge(u, v) {
                return Err(Error::input(format!("duplicate edge ({u}, {v})")));
            }
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn add_vertex(&mut self) -> usize {
        self.adj.push(Vec::new());
        self.adj.len() - 1
    }

    /// Inserts `uv`; returns `false` if the edge was already present.
    ///
    /// Panics on a self-loop or an out-of-range endpoint.
    pub fn add_edge(&mut self, u: usize, v: usize) -> bool {
        assert!(u != v, "self-loop at vertex {u}");
        match self.adj[u].binary_search(&v) {
            Ok(_) => false,
            Err(pos) => {
                self.adj[u].insert(pos, v);
                let pos = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(pos, u);
                self.m += 1;
                true
            }
        }
    }

    /// Removes `uv`; returns `false` if it was not present.
    pub fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        match self.adj[u].binary_search(&v) {
            Ok(pos) => {
                self.adj[u].remove(pos);
                let pos = self.adj[v].binary_search(&u).expect("symmetric adjacency");
                self.adj[v].remove(pos);
                self.m -= 1;
                true
            }
            Err(_) => false,
        }
    }

    /// The graph with `v` deleted; later vertices shift down by one.
    pub fn without_vertex(&self, v: usize) -> Graph {
        let shift = |w: usize| if w > v { w - 1 } else { w };
        let mut g = Graph::new(self.n() - 1);
        for (a, b) in self.edges().filter(|&(a, b)| a != v && b != v) {
            g.add_edge(shift(a), shift(b));
        }
        g
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    /// BFS distances from `src`; `None` marks unreachable vertices.
    pub fn bfs(&self, src: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        let mut queue = VecDeque::new();
        dist[src] = Some(0);
        queue.push_back(src);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap() + 1;
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(d);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn distance(&self, u: usize, v: usize) -> Option<usize> {
        self.bfs(u)[v]
    }

    pub fn is_connected(&self) -> bool {
        self.n() == 0 || self.bfs(0).iter().all(Option::is_some)
    }

    pub fn isolated_vertices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.n()).filter(|&v| self.adj[v].is_empty())
    }

    /// Exact diameter by BFS from every source.
    pub fn diameter(&self) -> Diameter {
        let mut best = 0;
        for s in 0..self.n() {
            for d in self.bfs(s) {
                match d {
                    Some(d) => best = best.max(d),
                    None => return Diameter::Infinite,
                }
            }
        }
        Diameter::Finite(best)
    }
}

/// Graph diameter; disconnected graphs have infinite diameter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Diameter {
    Finite(usize),
    Infinite,
}

impl Diameter {
    pub fn at_most(self, bound: usize) -> bool {
        matches!(self, Diameter::Finite(d) if d <= bound)
    }
}

impl fmt::Display for Diameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diameter::Finite(d) => write!(f, "{d}"),
            Diameter::Infinite => f.write_str("inf"),
        }
    }
}

/// Whether every vertex of `targets` is in `sources` or adjacent to one.
pub fn dominates(g: &Graph, sources: &[usize], targets: &[usize]) -> bool {
    let mut covered = vec![false; g.n()];
    for &s in sources {
        covered[s] = true;
        for &w in g.neighbors(s) {
            covered[w] = true;
        }
    }
    targets.iter().all(|&t| covered[t])
}

/// Standard small graphs.
pub mod fixtures {
    use super::*;

    pub fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    pub fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    /// `K_{a,b}` with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let mut g = Graph::new(a + b);
        for u in 0..a {
            for v in a..a + b {
                g.add_edge(u, v);
            }
        }
        g
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    fn floyd_warshall(g: &Graph) -> Diameter {
        let n = g.n();
        const INF: usize = usize::MAX / 4;
        let mut d = vec![vec![INF; n]; n];
        for (u, row) in d.iter_mut().enumerate() {
            row[u] = 0;
            for &v in g.neighbors(u) {
                row[v] = 1;
            }
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if d[i][k] + d[k][j] < d[i][j] {
                        d[i][j] = d[i][k] + d[k][j];
                    }
                }
            }
        }
        let worst = d.iter().flatten().copied().max().unwrap_or(0);
        if worst >= INF {
            Diameter::Infinite
        } else {
            Diameter::Finite(worst)
        }
    }

    #[test]
    fn diameter_examples() {
        assert_eq!(cycle(6).diameter(), Diameter::Finite(3));
        assert_eq!(complete_bipartite(2, 3).diameter(), Diameter::Finite(2));
        assert_eq!(Graph::new(1).diameter(), Diameter::Finite(0));
        assert_eq!(Graph::new(2).diameter(), Diameter::Infinite);
    }

    #[test]
    fn from_edges_rejects_malformed() {
        assert!(Graph::from_edges(2, [(0, 0)]).is_err());
        assert!(Graph::from_edges(2, [(0, 1), (1, 0)]).is_err());
        assert!(Graph::from_edges(2, [(0, 2)]).is_err());
    }

    #[test]
    fn edge_bookkeeping() {
        let mut g = cycle(5);
        assert_eq!(g.m(), 5);
        assert!(g.remove_edge(0, 1));
        assert!(!g.remove_edge(0, 1));
        assert_eq!(g.m(), 4);
        assert!(!g.has_edge(1, 0));
        assert_eq!(g.edges().count(), 4);
    }

    #[test]
    fn domination() {
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(dominates(&star, &[0], &[1, 2, 3]));
        assert!(!dominates(&star, &[1], &[2]));
        let c = cycle(6);
        let all: Vec<usize> = (0..6).collect();
        assert!(dominates(&c, &all, &[0, 3]));
    }

    proptest::proptest! {
        #[test]
        fn bfs_diameter_matches_floyd_warshall(
            n in 1usize..=64,
            bits in proptest::collection::vec(proptest::bool::weighted(0.06), 2016),
        ) {
            let mut g = Graph::new(n);
            let mut it = bits.into_iter();
            for u in 0..n {
                for v in u + 1..n {
                    if it.next().unwrap_or(false) {
                        g.add_edge(u, v);
                    }
                }
            }
            proptest::prop_assert_eq!(g.diameter(), floyd_warshall(&g));
        }
    }
}
