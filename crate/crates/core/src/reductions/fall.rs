use super::ensure;
use crate::error::{Error, Result};
use crate::graph::{enumerate_induced_c6, BipartiteGraph, C6Embedding, Graph, Hypergraph3, Part};
use crate::oracles::{solve_preext, Coloring, PartialColoring};

/// Fall labeling of an induced 6-cycle.
pub const FALL_LABELING: [u32; 6] = [1, 2, 3, 1, 2, 3];

/// The diameter-4 fall-coloring instance of a 3-uniform hypergraph.
///
/// Layout: `v` (0), `v'` (1), `v_i` (`2 + i`), `v'_i` (`2 + n + i`),
/// `e_j` (`2 + 2n + j`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FallInstance {
    pub graph: BipartiteGraph,
    pub hypergraph: Hypergraph3,
}

impl FallInstance {
    pub const V: usize = 0;
    pub const V_PRIME: usize = 1;

    pub fn vertex(&self, i: usize) -> usize {
        2 + i
    }

    pub fn vertex_prime(&self, i: usize) -> usize {
        2 + self.hypergraph.n() + i
    }

    pub fn hyperedge(&self, j: usize) -> usize {
        2 + 2 * self.hypergraph.n() + j
    }

    pub fn names(&self) -> Vec<String> {
        let (n, m) = (self.hypergraph.n(), self.hypergraph.m());
        let mut names = vec!["v".to_string(), "v'".to_string()];
        names.extend((1..=n).map(|i| format!("v{i}")));
        names.extend((1..=n).map(|i| format!("v'{i}")));
        names.extend((1..=m).map(|j| format!("e{j}")));
        names
    }

    pub fn check(&self) -> Result<()> {
        let (n, m) = (self.hypergraph.n(), self.hypergraph.m());
        ensure(self.graph.n() == 2 * n + m + 2, || {
            format!(
                "{} vertices, expected 2n+m+2 = {}",
                self.graph.n(),
                2 * n + m + 2
            )
        })?;
        ensure(self.graph.diameter().at_most(4), || {
            format!("diameter {} > 4", self.graph.diameter())
        })
    }

    /// A 3-fall-coloring from a hypergraph 2-coloring: `v_i` gets
    /// `f(v_i) + 1`, `v'_i` the other color of `{2, 3}`, everything else 1.
    pub fn fall_from_h2col(&self, f: &Coloring) -> Coloring {
        let mut colors = vec![1; self.graph.n()];
        for i in 0..self.hypergraph.n() {
            colors[self.vertex(i)] = f.get(i) + 1;
            colors[self.vertex_prime(i)] = 5 - (f.get(i) + 1);
        }
        Coloring(colors)
    }

    /// A hypergraph 2-coloring from a 3-fall-coloring, after renaming colors
    /// so that `v` has color 1.
    pub fn h2col_from_fall(&self, f: &Coloring) -> Coloring {
        let top = f.get(Self::V);
        let swap = |c: u32| match c {
            c if c == top => 1,
            1 => top,
            c => c,
        };
        Coloring(
            (0..self.hypergraph.n())
                .map(|i| swap(f.get(self.vertex(i))) - 1)
                .collect(),
        )
    }
}

/// `v` complete to `V`, `v'` complete to `V'`, the matching `v_i v'_i`, and
/// `e_j v_i` for `v_i ∈ e_j`. The parts are `V' ∪ E ∪ {v}` and `V ∪ {v'}`.
///
/// 3-fall-colorable exactly when `h` is 2-colorable.
pub fn build_fall3_diam4(h: &Hypergraph3) -> Result<FallInstance> {
    if let Some(&v) = h.uncovered_vertices().first() {
        return Err(Error::precondition(format!(
            "vertex {} is in no hyperedge",
            v + 1
        )));
    }
    let (n, m) = (h.n(), h.m());
    let mut g = BipartiteGraph::new(Graph::new(0), vec![])?;
    let v = g.add_vertex(Part::X);
    let vp = g.add_vertex(Part::Y);
    let vs: Vec<usize> = (0..n).map(|_| g.add_vertex(Part::Y)).collect();
    let vps: Vec<usize> = (0..n).map(|_| g.add_vertex(Part::X)).collect();
    let es: Vec<usize> = (0..m).map(|_| g.add_vertex(Part::X)).collect();
    for i in 0..n {
        g.add_edge(v, vs[i]);
        g.add_edge(vp, vps[i]);
        g.add_edge(vs[i], vps[i]);
    }
    for (j, e) in h.edges().iter().enumerate() {
        for &i in e {
            g.add_edge(es[j], vs[i]);
        }
    }
    let inst = FallInstance {
        graph: g,
        hypergraph: h.clone(),
    };
    inst.check()?;
    Ok(inst)
}

/// One precoloring-extension query per induced 6-cycle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TuringQueries {
    pub cycles: Vec<C6Embedding>,
    pub precolorings: Vec<PartialColoring>,
    /// Extension found for each query, if any.
    pub answers: Vec<Option<Coloring>>,
}

impl TuringQueries {
    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    /// Whether any query extends.
    pub fn answer(&self) -> bool {
        self.answers.iter().any(Option::is_some)
    }

    /// The extension of the first query that has one.
    pub fn witness(&self) -> Option<&Coloring> {
        self.answers.iter().flatten().next()
    }
}

/// Precolors every induced 6-cycle of `g` with `labeling` (position `i`
/// gets `labeling[i]`). Requires diameter at most 3.
pub fn fall_preext_queries(
    g: &BipartiteGraph,
    labeling: [u32; 6],
) -> Result<Vec<(C6Embedding, PartialColoring)>> {
    if !g.diameter().at_most(3) {
        return Err(Error::input(format!("diameter {} > 3", g.diameter())));
    }
    enumerate_induced_c6(g)
        .into_iter()
        .map(|c| {
            let p = PartialColoring::from_pairs(g.n(), c.vertices().iter().copied().zip(labeling))?;
            Ok((c, p))
        })
        .collect()
}

/// Decides 3-fall-colorability of a diameter-3 bipartite graph by
/// precoloring extension on each induced 6-cycle with [`FALL_LABELING`].
pub fn fall3_turing_queries(g: &BipartiteGraph) -> Result<TuringQueries> {
    let queries = fall_preext_queries(g, FALL_LABELING)?;
    let mut out = TuringQueries {
        cycles: Vec::with_capacity(queries.len()),
        precolorings: Vec::with_capacity(queries.len()),
        answers: Vec::with_capacity(queries.len()),
    };
    for (c, p) in queries {
        out.answers.push(solve_preext(g, 3, &p)?);
        out.cycles.push(c);
        out.precolorings.push(p);
    }
    Ok(out)
}
