//! Certificate checkers. Each names the first violated condition together
//! with a witness, scanning vertices, edges and blocks in index order.

use std::fmt;

use super::{
    BicliquePartition, Coloring, ListAssignment, PartialColoring, Surjectivity, VertexMapping,
};
use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, Graph, Hypergraph3, Part};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Condition {
    /// The certificate covers a different number of vertices.
    Size,
    /// A color outside `1..=k`, or an image outside the target.
    Range,
    Proper,
    ListRespect,
    /// A precolored vertex changed color.
    Extension,
    /// A vertex whose closed neighborhood misses a color.
    BVertex,
    Homomorphism,
    VertexSurjective,
    EdgeSurjective,
    /// A vertex of the retract is not fixed.
    Fixed,
    /// A vertex in no block or in several.
    Cover,
    BlockCount,
    /// Two vertices of a block on opposite sides are not adjacent.
    Biclique,
    /// A block with no edge.
    BlockEdge,
    Monochromatic,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Condition::Size => "size",
            Condition::Range => "range",
            Condition::Proper => "proper",
            Condition::ListRespect => "list-respect",
            Condition::Extension => "extension",
            Condition::BVertex => "b-vertex",
            Condition::Homomorphism => "homomorphism",
            Condition::VertexSurjective => "vertex-surjective",
            Condition::EdgeSurjective => "edge-surjective",
            Condition::Fixed => "fixed",
            Condition::Cover => "cover",
            Condition::BlockCount => "block-count",
            Condition::Biclique => "biclique",
            Condition::BlockEdge => "block-edge",
            Condition::Monochromatic => "monochromatic",
        };
        f.write_str(s)
    }
}

/// Where a violation was found. Vertex ids are 0-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Witness {
    None,
    Vertex(usize),
    Edge(usize, usize),
    TargetVertex(usize),
    TargetEdge(usize, usize),
    Block(usize),
    Hyperedge(usize),
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Witness::None => f.write_str("-"),
            Witness::Vertex(v) => write!(f, "vertex {}", v + 1),
            Witness::Edge(u, v) => write!(f, "edge {} {}", u + 1, v + 1),
            Witness::TargetVertex(v) => write!(f, "target vertex {}", v + 1),
            Witness::TargetEdge(u, v) => write!(f, "target edge {} {}", u + 1, v + 1),
            Witness::Block(i) => write!(f, "block {}", i + 1),
            Witness::Hyperedge(j) => write!(f, "hyperedge {}", j + 1),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Violation {
    pub condition: Condition,
    pub witness: Witness,
}

impl Violation {
    fn new(condition: Condition, witness: Witness) -> Self {
        Self { condition, witness }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} violated at {}", self.condition, self.witness)
    }
}

impl std::error::Error for Violation {}

type Check = std::result::Result<(), Violation>;

fn fail(condition: Condition, witness: Witness) -> Check {
    Err(Violation::new(condition, witness))
}

fn check_size(n: usize, len: usize) -> Check {
    if n != len {
        return fail(Condition::Size, Witness::None);
    }
    Ok(())
}

/// A proper coloring with colors in `1..=k`.
pub fn validate_coloring(g: &Graph, f: &Coloring, k: u32) -> Check {
    check_size(g.n(), f.len())?;
    if let Some(v) = (0..g.n()).find(|&v| f.get(v) == 0 || f.get(v) > k) {
        return fail(Condition::Range, Witness::Vertex(v));
    }
    if let Some((u, v)) = g.edges().find(|&(u, v)| f.get(u) == f.get(v)) {
        return fail(Condition::Proper, Witness::Edge(u, v));
    }
    Ok(())
}

pub fn validate_list_coloring(g: &Graph, lists: &ListAssignment, f: &Coloring) -> Check {
    check_size(g.n(), f.len())?;
    check_size(g.n(), lists.len())?;
    if let Some(v) = (0..g.n()).find(|&v| !lists.get(v).contains(&f.get(v))) {
        return fail(Condition::ListRespect, Witness::Vertex(v));
    }
    if let Some((u, v)) = g.edges().find(|&(u, v)| f.get(u) == f.get(v)) {
        return fail(Condition::Proper, Witness::Edge(u, v));
    }
    Ok(())
}

/// A proper `k`-coloring agreeing with `p` on its domain.
pub fn validate_preext(g: &Graph, k: u32, p: &PartialColoring, f: &Coloring) -> Check {
    check_size(g.n(), p.n())?;
    validate_coloring(g, f, k)?;
    if let Some((v, _)) = p.assigned().find(|&(v, c)| f.get(v) != c) {
        return fail(Condition::Extension, Witness::Vertex(v));
    }
    Ok(())
}

/// A proper `k`-coloring in which every vertex is a b-vertex.
pub fn validate_fall_coloring(g: &Graph, f: &Coloring, k: u32) -> Check {
    validate_coloring(g, f, k)?;
    if k > 127 {
        return fail(Condition::Range, Witness::None);
    }
    if let Some(v) = (0..g.n()).find(|&v| !super::fall::sees_all(g, f, v, k)) {
        return fail(Condition::BVertex, Witness::Vertex(v));
    }
    Ok(())
}

/// A homomorphism `g -> h` meeting `mode`.
pub fn validate_homomorphism(g: &Graph, h: &Graph, f: &VertexMapping, mode: Surjectivity) -> Check {
    check_size(g.n(), f.len())?;
    if let Some(v) = (0..g.n()).find(|&v| f.get(v) >= h.n()) {
        return fail(Condition::Range, Witness::Vertex(v));
    }
    if let Some((u, v)) = g.edges().find(|&(u, v)| !h.has_edge(f.get(u), f.get(v))) {
        return fail(Condition::Homomorphism, Witness::Edge(u, v));
    }
    match mode {
        Surjectivity::Plain => {}
        Surjectivity::Vertex => {
            let mut hit = vec![false; h.n()];
            for &a in f.images() {
                hit[a] = true;
            }
            if let Some(a) = hit.iter().position(|&x| !x) {
                return fail(Condition::VertexSurjective, Witness::TargetVertex(a));
            }
        }
        Surjectivity::Edge => {
            let mut hit = std::collections::HashSet::new();
            for (u, v) in g.edges() {
                let (a, b) = (f.get(u), f.get(v));
                hit.insert((a.min(b), a.max(b)));
            }
            if let Some((a, b)) = h.edges().find(|e| !hit.contains(e)) {
                return fail(Condition::EdgeSurjective, Witness::TargetEdge(a, b));
            }
        }
    }
    Ok(())
}

/// A homomorphism from `g` onto its subgraph induced by `retract` that
/// fixes every vertex of `retract`. Images are vertices of `g`.
pub fn validate_retraction(g: &Graph, retract: &[usize], f: &VertexMapping) -> Check {
    check_size(g.n(), f.len())?;
    if let Some(v) = (0..g.n()).find(|&v| !retract.contains(&f.get(v))) {
        return fail(Condition::Range, Witness::Vertex(v));
    }
    if let Some((u, v)) = g.edges().find(|&(u, v)| !g.has_edge(f.get(u), f.get(v))) {
        return fail(Condition::Homomorphism, Witness::Edge(u, v));
    }
    if let Some(&v) = retract.iter().find(|&&v| f.get(v) != v) {
        return fail(Condition::Fixed, Witness::Vertex(v));
    }
    Ok(())
}

/// At most `k` blocks covering every vertex exactly once, each inducing a
/// complete bipartite graph with at least one edge.
pub fn validate_biclique_partition(b: &BipartiteGraph, p: &BicliquePartition, k: usize) -> Check {
    let n = b.n();
    let mut seen = vec![false; n];
    for (i, block) in p.blocks.iter().enumerate() {
        for &v in block {
            if v >= n {
                return fail(Condition::Range, Witness::Block(i));
            }
            if seen[v] {
                return fail(Condition::Cover, Witness::Vertex(v));
            }
            seen[v] = true;
        }
    }
    if let Some(v) = seen.iter().position(|&s| !s) {
        return fail(Condition::Cover, Witness::Vertex(v));
    }
    if p.blocks.len() > k {
        return fail(Condition::BlockCount, Witness::Block(k));
    }
    for (i, block) in p.blocks.iter().enumerate() {
        let (xs, ys): (Vec<usize>, Vec<usize>) = block.iter().partition(|&&v| b.part(v) == Part::X);
        if xs.is_empty() || ys.is_empty() {
            return fail(Condition::BlockEdge, Witness::Block(i));
        }
        for &x in &xs {
            if let Some(&y) = ys.iter().find(|&&y| !b.has_edge(x, y)) {
                return fail(Condition::Biclique, Witness::Edge(x, y));
            }
        }
    }
    Ok(())
}

/// A coloring with colors 1 and 2 and no monochromatic hyperedge.
pub fn validate_h2col(h: &Hypergraph3, f: &Coloring) -> Check {
    check_size(h.n(), f.len())?;
    if let Some(v) = (0..h.n()).find(|&v| !matches!(f.get(v), 1 | 2)) {
        return fail(Condition::Range, Witness::Vertex(v));
    }
    if let Some(j) = h
        .edges()
        .iter()
        .position(|e| f.get(e[0]) == f.get(e[1]) && f.get(e[1]) == f.get(e[2]))
    {
        return fail(Condition::Monochromatic, Witness::Hyperedge(j));
    }
    Ok(())
}

/// A problem instance whose certificates [`validate`] can audit.
#[derive(Clone, Copy, Debug)]
pub enum Instance<'a> {
    ListColoring {
        g: &'a Graph,
        lists: &'a ListAssignment,
    },
    PreExt {
        g: &'a Graph,
        k: u32,
        p: &'a PartialColoring,
    },
    Fall {
        g: &'a Graph,
        k: u32,
    },
    H2Col {
        h: &'a Hypergraph3,
    },
    Hom {
        g: &'a Graph,
        h: &'a Graph,
        mode: Surjectivity,
    },
    Retraction {
        g: &'a Graph,
        retract: &'a [usize],
    },
    Biclique {
        b: &'a BipartiteGraph,
        k: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    Coloring(Coloring),
    Mapping(VertexMapping),
    Partition(BicliquePartition),
}

/// Checks `cert` against `instance`. The outer error reports a certificate
/// of the wrong kind; the inner one the first violated condition.
pub fn validate(instance: &Instance<'_>, cert: &Certificate) -> Result<Check> {
    use Certificate as C;
    use Instance as I;
    Ok(match (instance, cert) {
        (I::ListColoring { g, lists }, C::Coloring(f)) => validate_list_coloring(g, lists, f),
        (I::PreExt { g, k, p }, C::Coloring(f)) => validate_preext(g, *k, p, f),
        (I::Fall { g, k }, C::Coloring(f)) => validate_fall_coloring(g, f, *k),
        (I::H2Col { h }, C::Coloring(f)) => validate_h2col(h, f),
        (I::Hom { g, h, mode }, C::Mapping(f)) => validate_homomorphism(g, h, f, *mode),
        (I::Retraction { g, retract }, C::Mapping(f)) => validate_retraction(g, retract, f),
        (I::Biclique { b, k }, C::Partition(p)) => validate_biclique_partition(b, p, *k),
        _ => return Err(Error::input("certificate kind does not match the instance")),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::abstract_c6;
    use crate::graph::fixtures::*;

    #[test]
    fn antipodal_fall_coloring() {
        let f = Coloring(vec![1, 2, 3, 1, 2, 3]);
        assert_eq!(validate_fall_coloring(&cycle(6), &f, 3), Ok(()));
        let g = cycle(6);
        let inst = Instance::Fall { g: &g, k: 3 };
        assert_eq!(validate(&inst, &Certificate::Coloring(f)).unwrap(), Ok(()));
    }

    #[test]
    fn identity_retraction() {
        let g = cycle(6);
        let id = VertexMapping((0..6).collect());
        let all: Vec<usize> = (0..6).collect();
        assert_eq!(validate_retraction(&g, &all, &id), Ok(()));
    }

    #[test]
    fn path_misses_closing_edge() {
        let id = VertexMapping((0..6).collect());
        let err =
            validate_homomorphism(&path(6), &abstract_c6(), &id, Surjectivity::Edge).unwrap_err();
        assert_eq!(err.condition, Condition::EdgeSurjective);
        assert_eq!(err.witness, Witness::TargetEdge(0, 5));
        assert_eq!(
            validate_homomorphism(&path(6), &abstract_c6(), &id, Surjectivity::Vertex),
            Ok(())
        );
    }

    #[test]
    fn first_violation_is_named() {
        let f = Coloring(vec![1, 1, 2]);
        let err = validate_coloring(&path(3), &f, 2).unwrap_err();
        assert_eq!(err, Violation::new(Condition::Proper, Witness::Edge(0, 1)));
        let fixed = VertexMapping(vec![1, 0, 1]);
        assert_eq!(
            validate_retraction(&path(3), &[0, 1], &fixed)
                .unwrap_err()
                .condition,
            Condition::Fixed
        );
    }

    #[test]
    fn mismatched_kind() {
        let g = cycle(6);
        let inst = Instance::Fall { g: &g, k: 3 };
        let cert = Certificate::Mapping(VertexMapping(vec![0; 6]));
        assert!(validate(&inst, &cert).is_err());
    }

    #[test]
    fn partition_checks() {
        let b = crate::graph::bipartition(&path(4)).unwrap();
        let good = BicliquePartition::new(vec![vec![0, 1], vec![2, 3]]);
        assert_eq!(validate_biclique_partition(&b, &good, 2), Ok(()));
        assert_eq!(
            validate_biclique_partition(&b, &good, 1)
                .unwrap_err()
                .condition,
            Condition::BlockCount
        );
        let split = BicliquePartition::new(vec![vec![0], vec![1, 2, 3]]);
        assert_eq!(
            validate_biclique_partition(&b, &split, 2).unwrap_err(),
            Violation::new(Condition::BlockEdge, Witness::Block(0))
        );
        let gap = BicliquePartition::new(vec![vec![0, 1, 2, 3]]);
        assert_eq!(
            validate_biclique_partition(&b, &gap, 2).unwrap_err(),
            Violation::new(Condition::Biclique, Witness::Edge(0, 3))
        );
    }
}
