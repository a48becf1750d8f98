use super::{ensure, require, require_connected};
use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, Part};
use crate::oracles::{Coloring, PartialColoring};

/// `g` plus a vertex `x` complete to `Y` and a vertex `y` complete to `X`,
/// both reserved for the new top color `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lift {
    pub graph: BipartiteGraph,
    /// `p` plus `x, y ↦ k`; empty apart from that for the fall lift.
    pub precoloring: PartialColoring,
    /// The palette size on the lifted side.
    pub k: u32,
    pub x: usize,
    pub y: usize,
}

impl Lift {
    /// Vertex count of the source graph.
    pub fn source_n(&self) -> usize {
        self.graph.n() - 2
    }

    /// Restricts a lifted coloring to the source graph, first swapping
    /// color names so that `x` has the top color.
    pub fn restrict(&self, f: &Coloring) -> Coloring {
        let top = f.get(self.x);
        let swap = |c: u32| match c {
            c if c == top => self.k,
            c if c == self.k => top,
            c => c,
        };
        Coloring((0..self.source_n()).map(|v| swap(f.get(v))).collect())
    }

    /// Extends a source coloring with the top color on `x` and `y`.
    pub fn extend(&self, f: &Coloring) -> Coloring {
        let mut colors = f.colors().to_vec();
        colors.extend([self.k, self.k]);
        Coloring(colors)
    }
}

fn add_universal_pair(g: &BipartiteGraph) -> Result<(BipartiteGraph, usize, usize)> {
    require_connected(g)?;
    let mut out = g.clone();
    let (xs, ys) = (g.xs(), g.ys());
    let x = out.add_vertex(Part::X);
    let y = out.add_vertex(Part::Y);
    for &w in &ys {
        out.add_edge(x, w);
    }
    for &w in &xs {
        out.add_edge(y, w);
    }
    ensure(out.diameter().at_most(3), || {
        format!("lifted graph has diameter {} > 3", out.diameter())
    })?;
    Ok((out, x, y))
}

/// Lifts a precoloring-extension instance with `k` colors to one with
/// `k + 1` colors on a bipartite graph of diameter at most 3.
pub fn lift_preext(g: &BipartiteGraph, p: &PartialColoring, k: u32) -> Result<Lift> {
    if p.n() != g.n() {
        return Err(Error::input(format!(
            "precoloring covers {} vertices, graph has {}",
            p.n(),
            g.n()
        )));
    }
    require(p.conflict(g).is_none(), || "precoloring is improper".into())?;
    require(p.assigned().all(|(_, c)| c <= k), || {
        format!("precolor above k = {k}")
    })?;
    let (graph, x, y) = add_universal_pair(g)?;
    let mut precoloring = p.clone();
    precoloring.resize(graph.n());
    precoloring.set(x, k + 1);
    precoloring.set(y, k + 1);
    Ok(Lift {
        graph,
        precoloring,
        k: k + 1,
        x,
        y,
    })
}

/// The same graph as [`lift_preext`], as a `(k + 1)`-fall-coloring
/// instance.
pub fn fall_lift(g: &BipartiteGraph, k: u32) -> Result<Lift> {
    require(k >= 3, || format!("fall lift needs k >= 3, got {k}"))?;
    let (graph, x, y) = add_universal_pair(g)?;
    let precoloring = PartialColoring::empty(graph.n());
    Ok(Lift {
        graph,
        precoloring,
        k: k + 1,
        x,
        y,
    })
}
