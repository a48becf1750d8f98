use super::hom::{HomSearch, MAX_TARGET};
use super::{ListAssignment, VertexMapping};
use crate::error::{Error, Result};
use crate::graph::{abstract_c6, BipartiteGraph, C6Embedding, Graph};

/// Which surjectivity condition a homomorphism must meet.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Surjectivity {
    Plain,
    /// Every target vertex has a preimage.
    Vertex,
    /// Every target edge has a preimage edge.
    Edge,
}

/// Finds a homomorphism `g -> h` with `f(v) ∈ lists[v]` that meets `mode`.
///
/// List values are target-vertex indices. Retraction is expressed with
/// singleton lists on the copy of `h` inside `g`.
pub fn solve_list_hom(
    g: &Graph,
    h: &Graph,
    lists: &ListAssignment,
    mode: Surjectivity,
) -> Result<Option<VertexMapping>> {
    if h.n() > MAX_TARGET {
        return Err(Error::input(format!(
            "target has {} vertices; at most {MAX_TARGET} supported",
            h.n()
        )));
    }
    if lists.len() != g.n() {
        return Err(Error::input(format!(
            "{} lists for {} source vertices",
            lists.len(),
            g.n()
        )));
    }
    let mut domains = Vec::with_capacity(g.n());
    for (v, list) in lists.iter().enumerate() {
        let mut d = 0u64;
        for &a in list {
            if a as usize >= h.n() {
                return Err(Error::input(format!(
                    "list of vertex {v} names target vertex {a}, target has {}",
                    h.n()
                )));
            }
            d |= 1 << a;
        }
        domains.push(d);
    }
    Ok(HomSearch::new(g, h, domains, mode).run().map(VertexMapping))
}

/// Retraction of `b` to the embedded cycle; images are host vertices.
pub fn solve_c6_retraction(b: &BipartiteGraph, c: &C6Embedding) -> Option<VertexMapping> {
    let target = abstract_c6();
    let mut domains = vec![0x3fu64; b.n()];
    for (i, &v) in c.vertices().iter().enumerate() {
        domains[v] = 1 << i;
    }
    HomSearch::new(b.graph(), &target, domains, Surjectivity::Plain)
        .run()
        .map(|img| VertexMapping(img.into_iter().map(|i| c.vertices()[i]).collect()))
}

/// Surjective homomorphism onto the abstract cycle `0..6`.
pub fn solve_c6_surjective(g: &Graph) -> Option<VertexMapping> {
    solve_abstract_c6(g, Surjectivity::Vertex)
}

/// Compaction (edge-surjective homomorphism) onto the abstract cycle `0..6`.
pub fn solve_c6_compaction(g: &Graph) -> Option<VertexMapping> {
    solve_abstract_c6(g, Surjectivity::Edge)
}

// Aut(C6) acts transitively on vertices and the stabilizer of 0 swaps 1 and
// 5, so one vertex may be pinned to 0 and one of its neighbors to 1.
fn solve_abstract_c6(g: &Graph, mode: Surjectivity) -> Option<VertexMapping> {
    let target = abstract_c6();
    let mut domains = vec![0x3fu64; g.n()];
    if let Some(anchor) = (0..g.n()).max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v))) {
        domains[anchor] = 1;
        if let Some(&w) = g.neighbors(anchor).first() {
            domains[w] = 1 << 1;
        }
    }
    HomSearch::new(g, &target, domains, mode)
        .run()
        .map(VertexMapping)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::bipartition;
    use crate::graph::fixtures::*;
    use crate::oracles::validate_homomorphism;

    fn brute_force_hom(g: &Graph, h: &Graph, mode: Surjectivity) -> bool {
        let n = g.n();
        let t = h.n();
        let total = t.pow(n as u32);
        (0..total).any(|mut code| {
            let f: Vec<usize> = (0..n)
                .map(|_| {
                    let a = code % t;
                    code /= t;
                    a
                })
                .collect();
            validate_homomorphism(g, h, &VertexMapping(f), mode).is_ok()
        })
    }

    #[test]
    fn identity_retraction_of_c6() {
        let c6 = cycle(6);
        let lists = ListAssignment::new((0..6).map(|i| vec![i]).collect());
        let f = solve_list_hom(&c6, &c6, &lists, Surjectivity::Plain)
            .unwrap()
            .unwrap();
        assert_eq!(f.images(), &[0, 1, 2, 3, 4, 5]);
    }

    #[test]
    fn p6_onto_c6() {
        let p6 = path(6);
        let c6 = cycle(6);
        let lists = ListAssignment::all_targets(6, 6);
        let f = solve_list_hom(&p6, &c6, &lists, Surjectivity::Vertex).unwrap();
        assert!(f.is_some());
        assert!(validate_homomorphism(&p6, &c6, &f.unwrap(), Surjectivity::Vertex).is_ok());
        assert!(brute_force_hom(&p6, &c6, Surjectivity::Vertex));
        assert!(solve_list_hom(&p6, &c6, &lists, Surjectivity::Edge)
            .unwrap()
            .is_none());
        assert!(!brute_force_hom(&p6, &c6, Surjectivity::Edge));
    }

    #[test]
    fn rejects_bad_lists() {
        let g = path(2);
        let h = cycle(6);
        let lists = ListAssignment::new(vec![vec![0], vec![6]]);
        assert!(solve_list_hom(&g, &h, &lists, Surjectivity::Plain).is_err());
        let short = ListAssignment::new(vec![vec![0]]);
        assert!(solve_list_hom(&g, &h, &short, Surjectivity::Plain).is_err());
    }

    #[test]
    fn empty_list_is_no() {
        let g = path(2);
        let lists = ListAssignment::new(vec![vec![0], vec![]]);
        assert!(solve_list_hom(&g, &cycle(6), &lists, Surjectivity::Plain)
            .unwrap()
            .is_none());
    }

    #[test]
    fn c6_wrappers() {
        let b = bipartition(&cycle(6)).unwrap();
        let c = crate::graph::C6Embedding::new(&b, [0, 1, 2, 3, 4, 5]).unwrap();
        let r = solve_c6_retraction(&b, &c).unwrap();
        assert_eq!(r.images(), &[0, 1, 2, 3, 4, 5]);
        assert!(solve_c6_compaction(&cycle(6)).is_some());
        assert!(solve_c6_surjective(&path(6)).is_some());
        assert!(solve_c6_compaction(&path(6)).is_none());
        assert!(solve_c6_surjective(&path(5)).is_none());
    }

    proptest::proptest! {
        #![proptest_config(proptest::prelude::ProptestConfig::with_cases(60))]
        #[test]
        fn agrees_with_brute_force_on_c6_target(
            n in 1usize..7,
            bits in proptest::collection::vec(proptest::bool::weighted(0.4), 21),
            mode in proptest::sample::select(vec![Surjectivity::Plain, Surjectivity::Vertex, Surjectivity::Edge]),
        ) {
            let mut g = Graph::new(n);
            let mut it = bits.into_iter();
            for u in 0..n {
                for v in u + 1..n {
                    if it.next().unwrap() {
                        g.add_edge(u, v);
                    }
                }
            }
            let h = cycle(6);
            let got = solve_list_hom(&g, &h, &ListAssignment::all_targets(n, 6), mode).unwrap();
            proptest::prop_assert_eq!(got.is_some(), brute_force_hom(&g, &h, mode));
            if let Some(f) = got {
                proptest::prop_assert!(validate_homomorphism(&g, &h, &f, mode).is_ok());
            }
            let pinned = match mode {
                Surjectivity::Vertex => Some(solve_c6_surjective(&g)),
                Surjectivity::Edge => Some(solve_c6_compaction(&g)),
                Surjectivity::Plain => None,
            };
            if let Some(p) = pinned {
                proptest::prop_assert_eq!(p.is_some(), brute_force_hom(&g, &h, mode));
            }
        }
    }
}
