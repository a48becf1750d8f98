use crate::error::{Error, Result};
use crate::graph::{abstract_c6, bipartite_complement, BipartiteGraph, C6Embedding, Part};
use crate::oracles::{
    validate_biclique_partition, validate_homomorphism, BicliquePartition, ListAssignment,
    Surjectivity, VertexMapping,
};

// Cycle position of a vertex by (part, block).
const POSITION: [[usize; 3]; 2] = [[0, 4, 2], [3, 1, 5]];

fn side(p: Part) -> usize {
    match p {
        Part::X => 0,
        Part::Y => 1,
    }
}

/// Lists confining `X` to even and `Y` to odd positions of the abstract
/// 6-cycle, the form [`surjective_to_biclique`] accepts.
pub fn parity_lists(b: &BipartiteGraph) -> ListAssignment {
    ListAssignment::new(
        b.parts()
            .iter()
            .map(|&p| match p {
                Part::X => vec![0, 2, 4],
                Part::Y => vec![1, 3, 5],
            })
            .collect(),
    )
}

/// Maps a 3-biclique partition `V1, V2, V3` of `b` to a surjective
/// homomorphism from the bipartite complement of `b` onto the abstract
/// 6-cycle: `X ∩ V1, Y ∩ V2, X ∩ V3, Y ∩ V1, X ∩ V2, Y ∩ V3` go to
/// `0, ..., 5`.
pub fn biclique_to_surjective(b: &BipartiteGraph, p: &BicliquePartition) -> Result<VertexMapping> {
    validate_biclique_partition(b, p, 3)
        .map_err(|v| Error::input(format!("not a biclique partition: {v}")))?;
    if p.blocks.len() != 3 {
        return Err(Error::input(format!(
            "{} blocks, expected 3",
            p.blocks.len()
        )));
    }
    let block = p.block_of(b.n());
    Ok(VertexMapping(
        (0..b.n())
            .map(|v| POSITION[side(b.part(v))][block[v].expect("partition covers every vertex")])
            .collect(),
    ))
}

/// Inverse of [`biclique_to_surjective`]: `V1 = f⁻¹(0) ∪ f⁻¹(3)`,
/// `V2 = f⁻¹(4) ∪ f⁻¹(1)`, `V3 = f⁻¹(2) ∪ f⁻¹(5)`. Requires `X` on even
/// positions.
pub fn surjective_to_biclique(b: &BipartiteGraph, f: &VertexMapping) -> Result<BicliquePartition> {
    validate_homomorphism(
        &bipartite_complement(b),
        &abstract_c6(),
        f,
        Surjectivity::Vertex,
    )
    .map_err(|v| {
        Error::input(format!(
            "not a surjective homomorphism of the complement: {v}"
        ))
    })?;
    if let Some(v) = (0..b.n()).find(|&v| f.get(v) % 2 != side(b.part(v))) {
        return Err(Error::input(format!(
            "vertex {} maps to position {} against the part parity",
            v + 1,
            f.get(v)
        )));
    }
    let mut blocks = vec![Vec::new(); 3];
    for v in 0..b.n() {
        let s = side(b.part(v));
        let i = POSITION[s]
            .iter()
            .position(|&q| q == f.get(v))
            .expect("parity checked");
        blocks[i].push(v);
    }
    Ok(BicliquePartition::new(blocks))
}

/// The list-coloring construction whose correctness argument breaks:
/// `g` plus the cycle `(x1, y2, x3, y1, x2, y3)` and `u y_i` for every
/// `u ∈ X` and `i ∉ L(u)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleListInstance {
    pub graph: BipartiteGraph,
    pub x: [usize; 3],
    pub y: [usize; 3],
    pub cycle: C6Embedding,
}

impl CycleListInstance {
    /// For `g` a single edge `u v` with `L(u) = L(v) = {1, 2}`: the blocks
    /// `{x1, x2, v}`, `{y1, y2, u}`, `{x3, y3}` partition the bipartite
    /// complement into bicliques while separating `x1` from `y1`.
    pub fn counterexample_partition(&self, u: usize, v: usize) -> BicliquePartition {
        let [x1, x2, x3] = self.x;
        let [y1, y2, y3] = self.y;
        BicliquePartition::new(vec![vec![x1, x2, v], vec![y1, y2, u], vec![x3, y3]])
    }

    /// Pairs `x_i, y_i` that land in different blocks of `p`.
    pub fn split_pairs(&self, p: &BicliquePartition) -> Vec<usize> {
        let block = p.block_of(self.graph.n());
        (0..3)
            .filter(|&i| block[self.x[i]] != block[self.y[i]])
            .collect()
    }
}

pub fn cycle_listcol_instance(
    g: &BipartiteGraph,
    lists: &ListAssignment,
) -> Result<CycleListInstance> {
    if lists.len() != g.n() {
        return Err(Error::input(format!(
            "{} lists for {} vertices",
            lists.len(),
            g.n()
        )));
    }
    if let Some(v) = (0..g.n()).find(|&v| lists.get(v).iter().any(|&c| !(1..=3).contains(&c))) {
        return Err(Error::input(format!(
            "list of vertex {} is not within {{1, 2, 3}}",
            v + 1
        )));
    }
    let mut out = g.clone();
    let x: [usize; 3] = std::array::from_fn(|_| out.add_vertex(Part::X));
    let y: [usize; 3] = std::array::from_fn(|_| out.add_vertex(Part::Y));
    let order = [x[0], y[1], x[2], y[0], x[1], y[2]];
    for i in 0..6 {
        out.add_edge(order[i], order[(i + 1) % 6]);
    }
    for u in g.xs() {
        for i in 1..=3u32 {
            if !lists.get(u).contains(&i) {
                out.add_edge(u, y[i as usize - 1]);
            }
        }
    }
    let cycle = C6Embedding::new(&out, order)?;
    Ok(CycleListInstance {
        graph: out,
        x,
        y,
        cycle,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{bipartition, fixtures::*, Graph};
    use crate::oracles::{solve_biclique_partition_exact, solve_list_hom};

    fn matching3() -> BipartiteGraph {
        let g = Graph::from_edges(6, [(0, 3), (1, 4), (2, 5)]).unwrap();
        BipartiteGraph::new(g, [[Part::X; 3], [Part::Y; 3]].concat()).unwrap()
    }

    #[test]
    fn matching_blocks_give_the_cycle() {
        let b = matching3();
        let p = BicliquePartition::new(vec![vec![0, 3], vec![1, 4], vec![2, 5]]);
        let f = biclique_to_surjective(&b, &p).unwrap();
        assert_eq!(f.images(), &[0, 4, 2, 3, 1, 5]);
        assert_eq!(surjective_to_biclique(&b, &f).unwrap(), p);
    }

    #[test]
    fn wrong_block_count_rejected() {
        let b = matching3();
        let p = BicliquePartition::new(vec![vec![0, 3], vec![1, 4, 2, 5]]);
        assert!(biclique_to_surjective(&b, &p).is_err());
    }

    #[test]
    fn odd_parity_rejected() {
        let b = matching3();
        let f = VertexMapping(vec![1, 5, 3, 4, 2, 0]);
        assert!(matches!(
            surjective_to_biclique(&b, &f),
            Err(Error::Input(_))
        ));
    }

    #[test]
    fn flaw_example() {
        let g = bipartition(&path(2)).unwrap();
        let lists = ListAssignment::new(vec![vec![1, 2], vec![1, 2]]);
        let inst = cycle_listcol_instance(&g, &lists).unwrap();
        assert_eq!(inst.graph.n(), 8);
        assert!(inst.graph.has_edge(0, inst.y[2]));
        let comp = bipartite_complement(&inst.graph);
        let p = inst.counterexample_partition(0, 1);
        assert!(validate_biclique_partition(&comp, &p, 3).is_ok());
        assert_eq!(inst.split_pairs(&p), vec![0, 1]);
        let f = biclique_to_surjective(&comp, &p).unwrap();
        assert!(
            validate_homomorphism(&inst.graph, &abstract_c6(), &f, Surjectivity::Vertex).is_ok()
        );
    }

    #[test]
    fn cycle_listcol_degenerate_inputs() {
        let empty = BipartiteGraph::new(Graph::new(0), vec![]).unwrap();
        let inst = cycle_listcol_instance(&empty, &ListAssignment::new(vec![])).unwrap();
        assert_eq!((inst.graph.n(), inst.graph.m()), (6, 6));
        let g = bipartition(&cycle(4)).unwrap();
        let inst = cycle_listcol_instance(&g, &ListAssignment::full(4, 3)).unwrap();
        assert_eq!(inst.graph.m(), 4 + 6);
        assert!(cycle_listcol_instance(&g, &ListAssignment::full(4, 4)).is_err());
    }

    proptest::proptest! {
        #[test]
        fn converters_agree_with_solvers(
            n in 2usize..=7,
            raw in proptest::collection::vec(proptest::bool::ANY, 49),
        ) {
            let g = Graph::from_edges(
                2 * n,
                (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).filter(|&(i, j)| raw[i * 7 + j]).map(|(i, j)| (i, n + j)),
            ).unwrap();
            let parts = [vec![Part::X; n], vec![Part::Y; n]].concat();
            let b = BipartiteGraph::new(g, parts).unwrap();
            let partition = solve_biclique_partition_exact(&b, 3);
            let comp = bipartite_complement(&b);
            let hom = solve_list_hom(&comp, &abstract_c6(), &parity_lists(&b), Surjectivity::Vertex).unwrap();
            proptest::prop_assert_eq!(partition.is_some(), hom.is_some());
            if let Some(p) = partition {
                let f = biclique_to_surjective(&b, &p).unwrap();
                proptest::prop_assert_eq!(surjective_to_biclique(&b, &f).unwrap(), p);
            }
            if let Some(f) = hom {
                let p = surjective_to_biclique(&b, &f).unwrap();
                proptest::prop_assert!(validate_biclique_partition(&b, &p, 3).is_ok());
            }
        }
    }
}
