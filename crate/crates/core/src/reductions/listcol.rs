use super::require;
use crate::error::Result;
use crate::graph::{BipartiteGraph, Graph, Hypergraph3, Part};
use crate::oracles::{Coloring, ListAssignment};

/// `K_{m,m}` with `L(a_j) = L(b_j) = e_j`; colors are hypergraph vertices
/// (vertex `i` is color `i + 1`). List-colorable exactly when the
/// hypergraph is 2-colorable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ListColInstance {
    pub graph: BipartiteGraph,
    pub lists: ListAssignment,
    pub k: u32,
    pub hypergraph: Hypergraph3,
}

impl ListColInstance {
    pub fn a(&self, j: usize) -> usize {
        j
    }

    pub fn b(&self, j: usize) -> usize {
        self.hypergraph.m() + j
    }

    /// `a_j` takes the first color-1 vertex of `e_j`, `b_j` the first
    /// color-2 vertex.
    pub fn coloring_from_h2col(&self, f: &Coloring) -> Coloring {
        let pick = |e: &[usize; 3], c: u32| {
            let v = e
                .iter()
                .find(|&&v| f.get(v) == c)
                .expect("no monochromatic hyperedge");
            *v as u32 + 1
        };
        let edges = self.hypergraph.edges();
        let mut colors: Vec<u32> = edges.iter().map(|e| pick(e, 1)).collect();
        colors.extend(edges.iter().map(|e| pick(e, 2)));
        Coloring(colors)
    }

    /// Color 1 on the vertices used on the `a` side, 2 elsewhere.
    pub fn h2col_from_coloring(&self, f: &Coloring) -> Coloring {
        let m = self.hypergraph.m();
        let mut colors = vec![2; self.hypergraph.n()];
        for j in 0..m {
            colors[f.get(self.a(j)) as usize - 1] = 1;
        }
        Coloring(colors)
    }
}

pub fn kmm_listcol3(h: &Hypergraph3) -> Result<ListColInstance> {
    let m = h.m();
    require(m > 0, || "hypergraph has no hyperedge".into())?;
    let g = Graph::from_edges(2 * m, (0..m).flat_map(|i| (0..m).map(move |j| (i, m + j))))?;
    let mut parts = vec![Part::X; m];
    parts.resize(2 * m, Part::Y);
    let graph = BipartiteGraph::new(g, parts)?;
    let edge_list = |e: &[usize; 3]| e.iter().map(|&v| v as u32 + 1).collect::<Vec<_>>();
    let lists = ListAssignment::new(h.edges().iter().chain(h.edges()).map(edge_list).collect());
    Ok(ListColInstance {
        graph,
        lists,
        k: h.n() as u32,
        hypergraph: h.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::hitset::listcol_complete_bipartite;
    use crate::oracles::{
        solve_h2col, solve_list_coloring, validate_h2col, validate_list_coloring,
    };

    #[test]
    fn one_edge_is_k11() {
        let h = Hypergraph3::new(3, [[0, 1, 2]]).unwrap();
        let inst = kmm_listcol3(&h).unwrap();
        assert_eq!((inst.graph.n(), inst.graph.m()), (2, 1));
        assert_eq!(inst.lists.get(1), &[1, 2, 3]);
        let f = solve_list_coloring(&inst.graph, &inst.lists, inst.k)
            .unwrap()
            .unwrap();
        assert!(validate_h2col(&h, &inst.h2col_from_coloring(&f)).is_ok());
    }

    #[test]
    fn fano_is_not_list_colorable() {
        let inst = kmm_listcol3(&Hypergraph3::fano()).unwrap();
        assert_eq!(inst.graph.n(), 14);
        assert!(solve_list_coloring(&inst.graph, &inst.lists, inst.k)
            .unwrap()
            .is_none());
        assert!(listcol_complete_bipartite(&inst.graph, &inst.lists, inst.k)
            .unwrap()
            .is_none());
    }

    #[test]
    fn translators_round_trip() {
        let h = Hypergraph3::new(5, [[0, 1, 2], [2, 3, 4], [0, 3, 4]]).unwrap();
        let inst = kmm_listcol3(&h).unwrap();
        let f = inst.coloring_from_h2col(&solve_h2col(&h).unwrap());
        assert!(validate_list_coloring(&inst.graph, &inst.lists, &f).is_ok());
        assert!(validate_h2col(&h, &inst.h2col_from_coloring(&f)).is_ok());
    }

    #[test]
    fn no_hyperedges_rejected() {
        let h = Hypergraph3::new(3, []).unwrap();
        assert!(matches!(kmm_listcol3(&h), Err(Error::Precondition(_))));
    }
}
