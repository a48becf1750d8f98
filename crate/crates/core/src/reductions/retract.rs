use super::{ensure, require};
use crate::error::{Error, Result};
use crate::graph::{dominates, BipartiteGraph, C6Embedding, Graph, Hypergraph3, Part};
use crate::oracles::{
    solve_list_hom, validate_h2col, Coloring, ListAssignment, PartialColoring, Surjectivity,
    VertexMapping,
};

/// Cycle positions of the named cycle vertices. The cycle is
/// `(pV1, pE2, pV3, pE1, pV2, pE3)`, so `pV1, pV2, pV3 = h1, h5, h3` and
/// `pE1, pE2, pE3 = h4, h2, h6`.
const PV: [usize; 3] = [0, 4, 2];
const PE: [usize; 3] = [3, 1, 5];
const CYCLE_NAMES: [&str; 6] = ["pV1", "pE2", "pV3", "pE1", "pV2", "pE3"];

/// New vertices per hyperedge besides the hyperedge vertex itself.
pub const GADGET_SIZE: usize = 12;

// offsets inside a gadget; side 2 adds 6
const VP: usize = 0;
const VPP: usize = 1;
const A: usize = 2;
const B: usize = 3;
const C: usize = 4;
const D: usize = 5;
const GADGET_NAMES: [&str; 6] = ["vp", "vpp", "a", "b", "c", "d"];

/// Retraction instance built from a 3-uniform hypergraph.
///
/// Vertex layout: hypergraph vertices `0..n`, hyperedges `n..n+m`, the six
/// cycle vertices in cycle order, then one block of [`GADGET_SIZE`]
/// vertices per hyperedge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RetractInstance {
    pub graph: BipartiteGraph,
    pub cycle: C6Embedding,
    pub hypergraph: Hypergraph3,
    pub names: Vec<String>,
}

impl RetractInstance {
    pub fn vertex(&self, i: usize) -> usize {
        i
    }

    pub fn hyperedge(&self, j: usize) -> usize {
        self.hypergraph.n() + j
    }

    /// `p^V_i` for `i` in `1..=3`.
    pub fn pv(&self, i: usize) -> usize {
        self.cycle.vertices()[PV[i - 1]]
    }

    /// `p^E_i` for `i` in `1..=3`.
    pub fn pe(&self, i: usize) -> usize {
        self.cycle.vertices()[PE[i - 1]]
    }

    fn gadget(&self, j: usize, side: usize, role: usize) -> usize {
        self.hypergraph.n() + self.hypergraph.m() + 6 + GADGET_SIZE * j + 6 * (side - 1) + role
    }

    /// Re-checks the structural guarantees on the current graph.
    pub fn check(&self) -> Result<()> {
        let (n, m) = (self.hypergraph.n(), self.hypergraph.m());
        ensure(self.graph.n() == n + (GADGET_SIZE + 1) * m + 6, || {
            format!(
                "{} vertices, expected n + 13m + 6 = {}",
                self.graph.n(),
                n + 13 * m + 6
            )
        })?;
        self.cycle
            .check(&self.graph)
            .map_err(|e| Error::falsification(format!("cycle: {e}")))?;
        check_domination(&self.graph, &self.cycle.rotated(1))
            .map_err(|e| Error::falsification(e.to_string()))
    }

    /// The 2-coloring read off a retraction: `pV1` is color 1, anything
    /// else color 2.
    pub fn coloring_from_retraction(&self, f: &VertexMapping) -> Coloring {
        let pv1 = self.pv(1);
        Coloring(
            (0..self.hypergraph.n())
                .map(|v| if f.get(v) == pv1 { 1 } else { 2 })
                .collect(),
        )
    }
}

/// Checks that `{h1, h3, h5}` dominates the part of `h2` and lies within
/// distance 2 of every vertex in its own part.
pub fn check_domination(b: &BipartiteGraph, c: &C6Embedding) -> Result<()> {
    let hs = [c.h(1), c.h(3), c.h(5)];
    let own = b.part(c.h(1));
    require(dominates(b, &hs, &b.side(own.other())), || {
        "h1, h3, h5 do not dominate the opposite part".into()
    })?;
    for &h in &hs {
        let dist = b.bfs(h);
        if let Some(x) = b
            .side(own)
            .into_iter()
            .find(|&x| dist[x].is_none_or(|d| d > 2))
        {
            return Err(Error::precondition(format!(
                "vertex {x} is farther than 2 from {h}"
            )));
        }
    }
    Ok(())
}

/// Builds a bipartite graph with an induced 6-cycle `C` such that `G`
/// retracts to `C` iff `h` is 2-colorable. `{pE1, pE2, pE3}` dominates the
/// part of the hypergraph vertices and is within distance 2 of every
/// vertex in the hyperedge part.
pub fn build_c6_retract(h: &Hypergraph3) -> Result<RetractInstance> {
    require(h.m() > 0, || {
        "hypergraph needs at least one hyperedge".into()
    })?;
    let (n, m) = (h.n(), h.m());
    let mut names: Vec<String> = (1..=n).map(|i| format!("v{i}")).collect();
    names.extend((1..=m).map(|j| format!("e{j}")));
    names.extend(CYCLE_NAMES.iter().map(|s| s.to_string()));
    for j in 1..=m {
        for side in 1..=2 {
            names.extend(GADGET_NAMES.iter().map(|r| format!("g{j}:{r}{side}")));
        }
    }
    let mut part = vec![Part::X; n];
    part.extend(vec![Part::Y; m]);
    part.extend([Part::X, Part::Y, Part::X, Part::Y, Part::X, Part::Y]);
    for _ in 0..2 * m {
        part.extend([Part::X, Part::X, Part::Y, Part::Y, Part::Y, Part::Y]);
    }
    let base = n + m;
    let cycle = C6Embedding::from_cycle_unchecked(std::array::from_fn(|i| base + i));
    let inst = RetractInstance {
        graph: BipartiteGraph::new(Graph::new(part.len()), part)?,
        cycle,
        hypergraph: h.clone(),
        names,
    };
    let mut g = inst.graph.clone();
    let (pv, pe) = (|i| inst.pv(i), |i| inst.pe(i));
    for i in 0..6 {
        g.add_edge(base + i, base + (i + 1) % 6);
    }
    for v in 0..n {
        g.add_edge(v, pe(3));
    }
    for (j, e) in h.edges().iter().enumerate() {
        let ej = inst.hyperedge(j);
        g.add_edge(ej, e[2]);
        for side in 1..=2 {
            // side 2 is side 1 with the roles of 1 and 2 exchanged
            let (s1, s2) = if side == 1 { (1, 2) } else { (2, 1) };
            let at = |role| inst.gadget(j, side, role);
            let vi = e[side - 1];
            for (u, w) in [
                (ej, at(VPP)),
                (at(VPP), pe(s2)),
                (at(VPP), at(D)),
                (at(D), pv(s2)),
                (at(VPP), at(C)),
                (at(C), pv(s1)),
                (at(C), at(VP)),
                (at(VP), at(D)),
                (at(VP), pe(s1)),
                (at(VP), at(B)),
                (at(B), vi),
                (at(VP), at(A)),
                (at(A), vi),
                (at(B), pv(s1)),
                (at(A), pv(3)),
            ] {
                g.add_edge(u, w);
            }
        }
    }
    let inst = RetractInstance { graph: g, ..inst };
    inst.check()?;
    Ok(inst)
}

/// Images forced on one side of a gadget when its hypergraph vertex maps
/// to `pV_t`, as `(role, cycle position)`; `s1` is the side's own index.
fn forced_cells(side: usize, t: usize) -> [(usize, usize); 4] {
    let (s1, s2) = if side == 1 { (1, 2) } else { (2, 1) };
    if t == s1 {
        [(VPP, PV[2]), (VP, PV[2]), (D, PE[s1 - 1]), (A, PE[s2 - 1])]
    } else {
        [(VPP, PV[s1 - 1]), (VP, PV[s2 - 1]), (C, PE[2]), (B, PE[2])]
    }
}

/// Turns a proper 2-coloring of the hypergraph into a retraction of the
/// built graph onto its cycle. Hypergraph vertices go to `pV1`/`pV2` by
/// color, forced gadget cells are fixed, and the remaining gadget vertices
/// are completed gadget by gadget.
pub fn complete_gadget_mapping(
    inst: &RetractInstance,
    coloring: &Coloring,
) -> Result<VertexMapping> {
    validate_h2col(&inst.hypergraph, coloring)
        .map_err(|v| Error::input(format!("not a proper 2-coloring: {v}")))?;
    let g = &inst.graph;
    let cyc = inst.cycle.vertices();
    let mut pos: Vec<Option<usize>> = vec![None; g.n()];
    for (i, &c) in cyc.iter().enumerate() {
        pos[c] = Some(i);
    }
    for v in 0..inst.hypergraph.n() {
        pos[v] = Some(PV[coloring.get(v) as usize - 1]);
    }
    for (j, e) in inst.hypergraph.edges().iter().enumerate() {
        let mut local: Vec<usize> = cyc.to_vec();
        local.extend(e.iter().copied());
        local.push(inst.hyperedge(j));
        local.extend((0..GADGET_SIZE).map(|r| inst.gadget(j, 1, 0) + r));
        let mut fixed = pos.clone();
        for side in 1..=2 {
            let t = coloring.get(e[side - 1]) as usize;
            for (role, p) in forced_cells(side, t) {
                fixed[inst.gadget(j, side, role)] = Some(p);
            }
        }
        let index = |v: usize| local.iter().position(|&w| w == v);
        let mut sub = Graph::new(local.len());
        for (a, &u) in local.iter().enumerate() {
            for &w in g.neighbors(u) {
                if let Some(b) = index(w) {
                    if a < b {
                        sub.add_edge(a, b);
                    }
                }
            }
        }
        let lists = ListAssignment::new(
            local
                .iter()
                .map(|&v| match fixed[v] {
                    Some(p) => vec![p as u32],
                    None => (0..6).collect(),
                })
                .collect(),
        );
        let target = crate::graph::abstract_c6();
        let f = solve_list_hom(&sub, &target, &lists, Surjectivity::Plain)?.ok_or_else(|| {
            Error::falsification(format!("gadget of hyperedge {} cannot be completed", j + 1))
        })?;
        for (a, &v) in local.iter().enumerate() {
            pos[v] = Some(f.get(a));
        }
    }
    Ok(VertexMapping(
        pos.into_iter()
            .map(|p| cyc[p.expect("every vertex lies in some gadget or on the cycle")])
            .collect(),
    ))
}

/// Precoloring extension instance with `p^E_i, p^V_i ↦ i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreExtInstance {
    pub graph: BipartiteGraph,
    pub precoloring: PartialColoring,
    pub k: u32,
    pub cycle: C6Embedding,
}

/// Color of each cycle position.
const CYCLE_COLORS: [u32; 6] = [1, 2, 3, 1, 2, 3];

impl PreExtInstance {
    pub fn check(&self) -> Result<()> {
        ensure(self.graph.diameter().at_most(4), || {
            format!("diameter {} > 4", self.graph.diameter())
        })?;
        let own = self.graph.part(self.cycle.h(1));
        let colored: Vec<usize> = self.precoloring.assigned().map(|(v, _)| v).collect();
        ensure(
            self.graph
                .side(own)
                .iter()
                .all(|&x| self.graph.neighbors(x).iter().any(|w| colored.contains(w))),
            || "some vertex of the cycle-start part has no precolored neighbor".into(),
        )
    }

    pub fn coloring_from_retraction(&self, f: &VertexMapping) -> Coloring {
        Coloring(
            f.images()
                .iter()
                .map(|&w| CYCLE_COLORS[self.cycle.position(w).expect("image on the cycle")])
                .collect(),
        )
    }

    /// Sends each vertex to the cycle vertex of its part with its color.
    pub fn retraction_from_coloring(&self, f: &Coloring) -> VertexMapping {
        let own = self.graph.part(self.cycle.h(1));
        VertexMapping(
            (0..self.graph.n())
                .map(|v| {
                    let start = if self.graph.part(v) == own { 0 } else { 1 };
                    let p = (start..6)
                        .step_by(2)
                        .find(|&p| CYCLE_COLORS[p] == f.get(v))
                        .expect("color in 1..=3");
                    self.cycle.vertices()[p]
                })
                .collect(),
        )
    }
}

/// Precolors the cycle so that 3-extensions correspond to retractions.
/// The input must satisfy the guarantees of [`build_c6_retract`].
pub fn retract_to_preext3(b: &BipartiteGraph, c: &C6Embedding) -> Result<PreExtInstance> {
    c.check(b)?;
    check_domination(b, &c.rotated(1)).map_err(|e| Error::input(e.to_string()))?;
    let mut precoloring = PartialColoring::empty(b.n());
    for (i, &v) in c.vertices().iter().enumerate() {
        precoloring.set(v, CYCLE_COLORS[i]);
    }
    let inst = PreExtInstance {
        graph: b.clone(),
        precoloring,
        k: 3,
        cycle: *c,
    };
    inst.check()?;
    Ok(inst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracles::{
        solve_c6_retraction, solve_h2col, solve_preext, validate_preext, validate_retraction,
    };

    fn one_edge() -> Hypergraph3 {
        Hypergraph3::new(3, [[0, 1, 2]]).unwrap()
    }

    #[test]
    fn one_edge_counts_and_guarantees() {
        let inst = build_c6_retract(&one_edge()).unwrap();
        assert_eq!(inst.graph.n(), 22);
        assert_eq!(inst.names[inst.pv(1)], "pV1");
        assert_eq!(inst.names[inst.gadget(0, 2, VPP)], "g1:vpp2");
        let ye: Vec<usize> = (1..=3).map(|i| inst.pe(i)).collect();
        assert!(dominates(&inst.graph, &ye, &inst.graph.xs()));
        let f = solve_c6_retraction(&inst.graph, &inst.cycle).unwrap();
        assert!(validate_retraction(&inst.graph, inst.cycle.vertices(), &f).is_ok());
    }

    #[test]
    fn fano_does_not_retract() {
        let inst = build_c6_retract(&Hypergraph3::fano()).unwrap();
        assert!(solve_h2col(&Hypergraph3::fano()).is_none());
        assert!(solve_c6_retraction(&inst.graph, &inst.cycle).is_none());
        let pre = retract_to_preext3(&inst.graph, &inst.cycle).unwrap();
        assert!(solve_preext(&pre.graph, 3, &pre.precoloring)
            .unwrap()
            .is_none());
    }

    fn image_of_hyperedge(coloring: [u32; 3]) -> usize {
        let inst = build_c6_retract(&one_edge()).unwrap();
        let f = complete_gadget_mapping(&inst, &Coloring(coloring.to_vec())).unwrap();
        assert!(validate_retraction(&inst.graph, inst.cycle.vertices(), &f).is_ok());
        assert_eq!(inst.coloring_from_retraction(&f).colors(), &coloring);
        f.get(inst.hyperedge(0))
    }

    #[test]
    fn hyperedge_images_per_case() {
        let inst = build_c6_retract(&one_edge()).unwrap();
        let (pe1, pe2, pe3) = (inst.pe(1), inst.pe(2), inst.pe(3));
        assert_eq!(image_of_hyperedge([1, 1, 2]), pe1);
        assert_eq!(image_of_hyperedge([2, 2, 1]), pe2);
        assert!([pe1, pe2].contains(&image_of_hyperedge([1, 2, 1])));
        assert!([pe1, pe2].contains(&image_of_hyperedge([1, 2, 2])));
        assert_eq!(image_of_hyperedge([2, 1, 1]), pe3);
        assert_eq!(image_of_hyperedge([2, 1, 2]), pe3);
    }

    #[test]
    fn monochromatic_coloring_rejected() {
        let inst = build_c6_retract(&one_edge()).unwrap();
        assert!(matches!(
            complete_gadget_mapping(&inst, &Coloring(vec![1, 1, 1])),
            Err(Error::Input(_))
        ));
    }

    /// Every forced cell admits no other image once the side's hypergraph
    /// vertex and the cycle are fixed.
    #[test]
    fn forced_cells_are_forced() {
        let inst = build_c6_retract(&one_edge()).unwrap();
        let g = &inst.graph;
        let target = crate::graph::abstract_c6();
        for side in 1..=2 {
            for t in 1..=2 {
                let mut lists = vec![(0..6).collect::<Vec<u32>>(); g.n()];
                for (i, &c) in inst.cycle.vertices().iter().enumerate() {
                    lists[c] = vec![i as u32];
                }
                lists[side - 1] = vec![PV[t - 1] as u32];
                for (role, p) in forced_cells(side, t) {
                    let v = inst.gadget(0, side, role);
                    let mut others = lists.clone();
                    others[v] = (0..6).filter(|&q| q != p as u32).collect();
                    let found = solve_list_hom(
                        g,
                        &target,
                        &ListAssignment::new(others),
                        Surjectivity::Plain,
                    )
                    .unwrap();
                    assert!(found.is_none(), "side {side}, t {t}, {}", inst.names[v]);
                    let mut only = lists.clone();
                    only[v] = vec![p as u32];
                    assert!(solve_list_hom(
                        g,
                        &target,
                        &ListAssignment::new(only),
                        Surjectivity::Plain
                    )
                    .unwrap()
                    .is_some());
                }
            }
        }
    }

    #[test]
    fn preext_translation() {
        let h = Hypergraph3::new(4, [[0, 1, 2], [0, 1, 3]]).unwrap();
        let inst = build_c6_retract(&h).unwrap();
        let pre = retract_to_preext3(&inst.graph, &inst.cycle).unwrap();
        assert_eq!(pre.precoloring.get(inst.pv(2)), Some(2));
        assert_eq!(pre.precoloring.get(inst.pe(3)), Some(3));
        let f = solve_preext(&pre.graph, 3, &pre.precoloring)
            .unwrap()
            .unwrap();
        let r = pre.retraction_from_coloring(&f);
        assert!(validate_retraction(&inst.graph, inst.cycle.vertices(), &r).is_ok());
        let back = pre.coloring_from_retraction(&r);
        assert!(validate_preext(&pre.graph, 3, &pre.precoloring, &back).is_ok());
    }

    #[test]
    fn preext_rejects_unguaranteed_input() {
        let b = crate::graph::bipartition(&crate::graph::fixtures::cycle(8)).unwrap();
        let c = C6Embedding::new(
            &crate::graph::bipartition(&crate::graph::fixtures::cycle(6)).unwrap(),
            [0, 1, 2, 3, 4, 5],
        )
        .unwrap();
        assert!(retract_to_preext3(&b, &c).is_err());
    }
}
