use std::collections::VecDeque;
use std::ops::Deref;

use super::Graph;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Part {
    X,
    Y,
}

impl Part {
    pub fn other(self) -> Part {
        match self {
            Part::X => Part::Y,
            Part::Y => Part::X,
        }
    }
}

/// A graph together with a fixed `(X, Y)` labeling such that every edge
/// crosses the two parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BipartiteGraph {
    graph: Graph,
    part: Vec<Part>,
}

impl BipartiteGraph {
    pub fn new(graph: Graph, part: Vec<Part>) -> Result<Self> {
        if part.len() != graph.n() {
            return Err(Error::input(format!(
                "part labeling has {} entries for {} vertices",
                part.len(),
                graph.n()
            )));
        }
        if let Some((u, v)) = graph.edges().find(|&(u, v)| part[u] == part[v]) {
            return Err(Error::input(format!(
                "edge ({u}, {v}) lies inside part {:?}",
                part[u]
            )));
        }
        Ok(Self { graph, part })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    pub fn part(&self, v: usize) -> Part {
        self.part[v]
    }

    pub fn parts(&self) -> &[Part] {
        &self.part
    }

    pub fn side(&self, p: Part) -> Vec<usize> {
        (0..self.graph.n()).filter(|&v| self.part[v] == p).collect()
    }

    pub fn xs(&self) -> Vec<usize> {
        self.side(Part::X)
    }

    pub fn ys(&self) -> Vec<usize> {
        self.side(Part::Y)
    }

    /// Adds a vertex to part `p` and returns its id.
    pub fn add_vertex(&mut self, p: Part) -> usize {
        self.part.push(p);
        self.graph.add_vertex()
    }

    /// Adds a cross edge. Panics if both endpoints lie in the same part.
    pub fn add_edge(&mut self, u: usize, v: usize) -> bool {
        assert!(
            self.part[u] != self.part[v],
            "edge ({u}, {v}) would lie inside part {:?}",
            self.part[u]
        );
        self.graph.add_edge(u, v)
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        self.graph.remove_edge(u, v)
    }

    pub fn without_vertex(&self, v: usize) -> Self {
        let mut part = self.part.clone();
        part.remove(v);
        Self {
            graph: self.graph.without_vertex(v),
            part,
        }
    }

    /// Whether every X-vertex is adjacent to every Y-vertex.
    pub fn is_complete(&self) -> bool {
        let xs = self.xs().len();
        let ys = self.ys().len();
        self.graph.m() == xs * ys
    }

    /// Same graph with the part labels exchanged.
    pub fn swapped(&self) -> Self {
        Self {
            graph: self.graph.clone(),
            part: self.part.iter().map(|p| p.other()).collect(),
        }
    }
}

impl Deref for BipartiteGraph {
    type Target = Graph;

    fn deref(&self) -> &Graph {
        &self.graph
    }
}

/// BFS 2-coloring. Returns `None` when `g` has an odd cycle.
///
/// In each component the smallest vertex goes to `X`, so vertex 0 is
/// always an X-vertex.
pub fn bipartition(g: &Graph) -> Option<BipartiteGraph> {
    let mut part: Vec<Option<Part>> = vec![None; g.n()];
    let mut queue = VecDeque::new();
    for root in 0..g.n() {
        if part[root].is_some() {
            continue;
        }
        part[root] = Some(Part::X);
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            let pu = part[u].unwrap();
            for &w in g.neighbors(u) {
                match part[w] {
                    None => {
                        part[w] = Some(pu.other());
                        queue.push_back(w);
                    }
                    Some(pw) if pw == pu => return None,
                    Some(_) => {}
                }
            }
        }
    }
    Some(BipartiteGraph {
        graph: g.clone(),
        part: part.into_iter().map(Option::unwrap).collect(),
    })
}

/// Cross non-edges of `b`, over the same parts.
pub fn bipartite_complement(b: &BipartiteGraph) -> BipartiteGraph {
    let mut g = Graph::new(b.n());
    let ys = b.ys();
    for x in b.xs() {
        for &y in &ys {
            if !b.has_edge(x, y) {
                g.add_edge(x, y);
            }
        }
    }
    BipartiteGraph {
        graph: g,
        part: b.part.clone(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;

    #[test]
    fn bipartition_examples() {
        assert!(bipartition(&complete(3)).is_none());
        let c6 = bipartition(&cycle(6)).unwrap();
        assert_eq!(c6.xs(), vec![0, 2, 4]);
        assert_eq!(c6.ys(), vec![1, 3, 5]);
        assert!(bipartition(&cycle(5)).is_none());
    }

    #[test]
    fn complement_examples() {
        let k33 = bipartition(&complete_bipartite(3, 3)).unwrap();
        let c = bipartite_complement(&k33);
        assert_eq!(c.m(), 0);
        assert_eq!(c.parts(), k33.parts());

        let c6 = bipartition(&cycle(6)).unwrap();
        let matching = bipartite_complement(&c6);
        let edges: Vec<_> = matching.edges().collect();
        assert_eq!(edges, vec![(0, 3), (1, 4), (2, 5)]);
    }

    #[test]
    fn rejects_edge_inside_part() {
        let g = Graph::from_edges(2, [(0, 1)]).unwrap();
        assert!(BipartiteGraph::new(g, vec![Part::X, Part::X]).is_err());
    }

    proptest::proptest! {
        #[test]
        fn complement_is_involutive(
            nx in 1usize..8,
            ny in 1usize..8,
            bits in proptest::collection::vec(proptest::bool::ANY, 64),
        ) {
            let mut g = Graph::new(nx + ny);
            for x in 0..nx {
                for y in 0..ny {
                    if bits[x * 8 + y] {
                        g.add_edge(x, nx + y);
                    }
                }
            }
            let part = (0..nx + ny).map(|v| if v < nx { Part::X } else { Part::Y }).collect();
            let b = BipartiteGraph::new(g, part).unwrap();
            let back = bipartite_complement(&bipartite_complement(&b));
            proptest::prop_assert_eq!(back, b);
        }
    }
}
