//! Dual-oracle equivalence checks for every reduction, with one registered
//! single-edge or single-vertex mutation each.

use std::time::Instant;

use super::fall_sides_hold;
use super::gen::{
    gen_bipartite, gen_compaction_source, gen_connected_bipartite, gen_planted_bicliques,
    gen_planted_fall, gen_precoloring, gen_side_lists, hypergraph_corpus,
};
use super::report::{EquivalenceReport, InstanceVerdict};
use super::rng::Rng;
use crate::exec::Exec;
use crate::graph::{
    abstract_c6, bipartite_complement, BipartiteGraph, C6Embedding, Diameter, Graph, Hypergraph3,
    Part,
};
use crate::hitset::listcol_complete_bipartite_with;
use crate::oracles::{
    solve_biclique_partition_exact, solve_c6_compaction, solve_c6_retraction, solve_c6_surjective,
    solve_fall_coloring, solve_h2col, solve_list_coloring, solve_list_hom, solve_preext,
    validate_biclique_partition, validate_fall_coloring, validate_h2col, validate_homomorphism,
    validate_list_coloring, validate_preext, validate_retraction, Coloring, ListAssignment,
    PartialColoring, Surjectivity, VertexMapping,
};
use crate::reductions::{
    biclique_to_surjective, build_c6_retract, build_compaction, build_fall3_diam4,
    compaction_to_retraction, complete_gadget_mapping, cycle_listcol_instance,
    fall3_turing_queries, fall_lift, fall_preext_queries, kmm_listcol3, lift_preext, parity_lists,
    retract_to_preext3, retraction_to_compaction, surjective_to_biclique, FALL_LABELING,
};

/// The registered reductions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Reduction {
    /// Precoloring extension to diameter 3 by a universal pair.
    PreextLift,
    /// Hypergraph 2-coloring to retraction onto an induced 6-cycle.
    C6Retract,
    /// Retraction onto the cycle to 3-precoloring extension.
    RetractPreext,
    /// Retraction to compaction via diagonal gadgets.
    Compaction,
    /// 3-biclique partition to surjective homomorphism of the complement.
    BicliqueHom,
    /// Fall coloring to diameter 3 by a universal pair.
    FallLift,
    /// 3-fall coloring on diameter 3 by precoloring extension per 6-cycle.
    FallTuring,
    /// Hypergraph 2-coloring to 3-fall coloring with diameter 4.
    FallDiam4,
    /// Hypergraph 2-coloring to list coloring of `K_{m,m}`.
    ListColK,
    /// List 3-coloring to retraction onto an appended 6-cycle.
    CycleListCol,
}

impl Reduction {
    pub const ALL: [Reduction; 10] = [
        Reduction::PreextLift,
        Reduction::C6Retract,
        Reduction::RetractPreext,
        Reduction::Compaction,
        Reduction::BicliqueHom,
        Reduction::FallLift,
        Reduction::FallTuring,
        Reduction::FallDiam4,
        Reduction::ListColK,
        Reduction::CycleListCol,
    ];

    /// Command-line id.
    pub fn id(self) -> &'static str {
        match self {
            Reduction::PreextLift => "prop1",
            Reduction::C6Retract => "thm7",
            Reduction::RetractPreext => "cor3",
            Reduction::Compaction => "lem7",
            Reduction::BicliqueHom => "cor9",
            Reduction::FallLift => "prop10",
            Reduction::FallTuring => "prop12",
            Reduction::FallDiam4 => "thm13",
            Reduction::ListColK => "appA",
            Reduction::CycleListCol => "fmps",
        }
    }

    pub fn from_id(id: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|r| r.id() == id)
    }

    /// The registered mutation.
    pub fn mutation(self) -> &'static str {
        match self {
            Reduction::PreextLift => "remove the vertex complete to X",
            Reduction::FallLift => "join the two added vertices",
            Reduction::C6Retract => "drop the edge from the first hyperedge to its third vertex",
            Reduction::RetractPreext => {
                "drop the edge from the first hyperedge to its third vertex"
            }
            Reduction::Compaction => "add the chord h1-h4",
            Reduction::BicliqueHom => "add the first edge of the graph to its complement",
            Reduction::FallTuring => "delete h6 from every query",
            Reduction::FallDiam4 => "remove v'",
            Reduction::ListColK => "remove b1",
            Reduction::CycleListCol => "drop the first list-exclusion edge",
        }
    }

    /// Size of the default random part of the corpus.
    pub fn default_count(self) -> usize {
        match self {
            Reduction::FallLift => 60,
            Reduction::FallTuring => 80,
            Reduction::Compaction => 60,
            Reduction::BicliqueHom => 50,
            Reduction::CycleListCol => 60,
            _ => 100,
        }
    }
}

/// Which instances a sweep runs on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CorpusSpec {
    pub seed: u64,
    /// Overrides [`Reduction::default_count`].
    pub count: Option<usize>,
}

impl CorpusSpec {
    pub fn seeded(seed: u64) -> Self {
        Self { seed, count: None }
    }
}

/// How a sweep runs.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RunConfig {
    pub exec: Exec,
    /// Instances not started by then are skipped.
    pub deadline: Option<Instant>,
    /// Apply the registered mutation to every constructed instance.
    pub mutate: bool,
}

impl RunConfig {
    pub fn with_exec(exec: Exec) -> Self {
        Self {
            exec,
            ..Self::default()
        }
    }

    pub fn expired(&self) -> bool {
        self.deadline.is_some_and(|d| Instant::now() >= d)
    }
}

/// An instance of a source problem.
#[derive(Clone, Debug)]
pub enum Item {
    Hyper(Hypergraph3),
    Preext(BipartiteGraph, PartialColoring),
    Bipartite(BipartiteGraph),
    Rooted(BipartiteGraph, C6Embedding),
    Lists(BipartiteGraph, ListAssignment),
}

impl Item {
    pub fn label(&self, index: usize) -> String {
        match self {
            Item::Hyper(h) => format!("#{index} {}", hyper_label(h)),
            Item::Preext(g, p) => format!(
                "#{index} n={} m={} precolored={}",
                g.n(),
                g.m(),
                p.assigned().count()
            ),
            Item::Bipartite(g) | Item::Rooted(g, _) | Item::Lists(g, _) => {
                format!("#{index} n={} m={}", g.n(), g.m())
            }
        }
    }
}

/// The corpus a reduction is checked on.
pub fn corpus(r: Reduction, spec: &CorpusSpec) -> (String, Vec<Item>) {
    let count = spec.count.unwrap_or(r.default_count());
    let seed = spec.seed;
    let rng = |i: usize| Rng::for_instance(seed, i as u64);
    match r {
        Reduction::C6Retract | Reduction::RetractPreext | Reduction::FallDiam4 | Reduction::ListColK => (
            format!("seed {seed}: all hypergraphs n<=5 m<=3, {count} random n<=7 m<=5, Fano, K5(3)"),
            hypergraph_corpus(seed, count).into_iter().map(Item::Hyper).collect(),
        ),
        Reduction::PreextLift => (
            format!("seed {seed}: {count} connected bipartite n<=10, k=3, random precoloring"),
            (0..count)
                .map(|i| {
                    let mut rng = rng(i);
                    let g = gen_connected_bipartite(rng.range(2, 10), rng.next_u64()).expect("n >= 2");
                    let p = gen_precoloring(&g, 3, 0.5, &mut rng);
                    Item::Preext(g, p)
                })
                .collect(),
        ),
        Reduction::FallLift => (
            format!("seed {seed}: {count} connected bipartite n<=10, every other one with a planted 3-fall coloring"),
            (0..count)
                .map(|i| {
                    let mut rng = rng(i);
                    let g = if i % 2 == 0 {
                        gen_connected_bipartite(rng.range(2, 10), rng.next_u64()).expect("n >= 2")
                    } else {
                        gen_planted_fall(rng.range(6, 10), 3, rng.next_u64()).expect("n >= 6")
                    };
                    Item::Bipartite(g)
                })
                .collect(),
        ),
        Reduction::FallTuring => (
            format!("seed {seed}: {count} bipartite diameter 3, n<=12, every other one with a planted 3-fall coloring"),
            (0..count)
                .map(|i| {
                    let mut rng = rng(i);
                    if i % 2 == 0 {
                        return Item::Bipartite(
                            gen_bipartite(rng.range(4, 12), 3, rng.next_u64()).expect("diameter 3 is feasible"),
                        );
                    }
                    let n = rng.range(6, 12);
                    loop {
                        let g = gen_planted_fall(n, 3, rng.next_u64()).expect("n >= 6");
                        if g.diameter() == Diameter::Finite(3) {
                            return Item::Bipartite(g);
                        }
                    }
                })
                .collect(),
        ),
        Reduction::Compaction => {
            let chain = compaction_chain();
            let desc = format!(
                "seed {seed}: {} hypergraph chains n<=4 m<=2, {count} random hypothesis-satisfying graphs",
                chain.len()
            );
            let random = (0..count).map(|i| {
                let mut rng = rng(i);
                let (b, c) = gen_compaction_source(rng.range(1, 4), rng.range(0, 3), rng.next_u64());
                Item::Rooted(b, c)
            });
            (desc, chain.into_iter().chain(random).collect())
        }
        Reduction::BicliqueHom => (
            format!("seed {seed}: {count} random bipartite parts<=5, {count} planted 3-biclique"),
            (0..count)
                .map(|i| {
                    let mut rng = rng(i);
                    let (a, b) = (rng.range(1, 5), rng.range(1, 5));
                    let p = 0.3 + 0.6 * (rng.below(100) as f64 / 100.0);
                    let mut g = Graph::new(a + b);
                    for u in 0..a {
                        for v in a..a + b {
                            if rng.chance(p) {
                                g.add_edge(u, v);
                            }
                        }
                    }
                    let parts = (0..a + b).map(|v| if v < a { Part::X } else { Part::Y }).collect();
                    Item::Bipartite(BipartiteGraph::new(g, parts).expect("edges cross the parts"))
                })
                .chain((0..count).map(|i| Item::Bipartite(gen_planted_bicliques(rng(count + i).next_u64()))))
                .collect(),
        ),
        Reduction::CycleListCol => (
            format!("seed {seed}: {count} connected bipartite n<=8 with lists on X"),
            (0..count)
                .map(|i| {
                    let mut rng = rng(i);
                    let g = gen_connected_bipartite(rng.range(2, 8), rng.next_u64()).expect("n >= 2");
                    let lists = gen_side_lists(&g, &mut rng);
                    Item::Lists(g, lists)
                })
                .collect(),
        ),
    }
}

/// Chain inputs: retraction instances built from small hypergraphs,
/// rooted at `pE2` so that the hyperedge part carries `h1`.
pub fn compaction_chain() -> Vec<Item> {
    super::gen::exhaustive_h3(4, 2)
        .iter()
        .map(|h| {
            let r = build_c6_retract(h).expect("hypergraph has an edge");
            Item::Rooted(r.graph, r.cycle.rotated(1))
        })
        .collect()
}

/// Runs `r` over its corpus and compares the answers of both sides.
pub fn check_equivalence(r: Reduction, spec: &CorpusSpec, run: &RunConfig) -> EquivalenceReport {
    let (desc, items) = corpus(r, spec);
    let results = run.exec.map_range(items.len(), |i| {
        if run.expired() {
            return None;
        }
        let mut v = InstanceVerdict::new(items[i].label(i));
        check_item(r, &items[i], run, &mut v);
        Some(v)
    });
    let mut report = EquivalenceReport::collect(r.id(), desc, results);
    if run.mutate {
        report = report.note(format!("mutation: {}", r.mutation()));
    }
    report
}

fn check_item(r: Reduction, item: &Item, run: &RunConfig, v: &mut InstanceVerdict) {
    match (r, item) {
        (Reduction::PreextLift, Item::Preext(g, p)) => preext_lift(g, p, run.mutate, v),
        (Reduction::C6Retract, Item::Hyper(h)) => c6_retract(h, run.mutate, v),
        (Reduction::RetractPreext, Item::Hyper(h)) => retract_preext(h, run.mutate, v),
        (Reduction::Compaction, Item::Rooted(b, c)) => compaction(b, c, run.mutate, v),
        (Reduction::BicliqueHom, Item::Bipartite(b)) => biclique_hom(b, run.mutate, v),
        (Reduction::FallLift, Item::Bipartite(g)) => fall_lift_check(g, run.mutate, v),
        (Reduction::FallTuring, Item::Bipartite(g)) => fall_turing(g, run.mutate, v),
        (Reduction::FallDiam4, Item::Hyper(h)) => fall_diam4(h, run.mutate, v),
        (Reduction::ListColK, Item::Hyper(h)) => listcol_k(h, run.mutate, run.exec, v),
        (Reduction::CycleListCol, Item::Lists(g, lists)) => cycle_listcol(g, lists, run.mutate, v),
        _ => v.fail("corpus item does not fit the reduction"),
    }
}

fn without_vertex_coloring(p: &PartialColoring, x: usize) -> PartialColoring {
    let mut out = PartialColoring::empty(p.n() - 1);
    for (v, c) in p.assigned() {
        match v.cmp(&x) {
            std::cmp::Ordering::Less => out.set(v, c),
            std::cmp::Ordering::Greater => out.set(v - 1, c),
            std::cmp::Ordering::Equal => {}
        }
    }
    out
}

fn note_fall_sides(v: &mut InstanceVerdict, g: &BipartiteGraph, f: &Coloring, k: u32) {
    v.expect(fall_sides_hold(g, f, k), || {
        format!("fall coloring with k={k} does not use every color on both parts")
    });
}

fn preext_lift(g: &BipartiteGraph, p: &PartialColoring, mutate: bool, v: &mut InstanceVerdict) {
    let Some(lift) = v.check("build", lift_preext(g, p, 3)) else {
        return;
    };
    let (graph, pre) = if mutate {
        (
            lift.graph.without_vertex(lift.y),
            without_vertex_coloring(&lift.precoloring, lift.y),
        )
    } else {
        v.expect(lift.graph.diameter().at_most(3), || {
            format!("lift diameter {}", lift.graph.diameter())
        });
        (lift.graph.clone(), lift.precoloring.clone())
    };
    let Some(src) = v.check("source solver", solve_preext(g, 3, p)) else {
        return;
    };
    let Some(tgt) = v.check("target solver", solve_preext(&graph, lift.k, &pre)) else {
        return;
    };
    v.answers(src.is_some(), tgt.is_some());
    if mutate {
        return;
    }
    if let Some(f) = &src {
        v.check(
            "extended certificate",
            validate_preext(&graph, lift.k, &pre, &lift.extend(f)),
        );
    }
    if let Some(f) = &tgt {
        v.check(
            "restricted certificate",
            validate_preext(g, 3, p, &lift.restrict(f)),
        );
    }
}

fn c6_retract(h: &Hypergraph3, mutate: bool, v: &mut InstanceVerdict) {
    let Some(mut inst) = v.check("build", build_c6_retract(h)) else {
        return;
    };
    if mutate {
        inst.graph
            .remove_edge(inst.hyperedge(0), inst.vertex(h.edges()[0][2]));
    }
    let src = solve_h2col(h);
    let tgt = solve_c6_retraction(&inst.graph, &inst.cycle);
    v.answers(src.is_some(), tgt.is_some());
    if mutate {
        return;
    }
    if let Some(f) = &src {
        if let Some(r) = v.check("gadget completion", complete_gadget_mapping(&inst, f)) {
            v.check(
                "completed retraction",
                validate_retraction(&inst.graph, inst.cycle.vertices(), &r),
            );
        }
    }
    if let Some(r) = &tgt {
        v.check(
            "retraction",
            validate_retraction(&inst.graph, inst.cycle.vertices(), r),
        );
        v.check(
            "coloring from retraction",
            validate_h2col(h, &inst.coloring_from_retraction(r)),
        );
    }
}

fn retract_preext(h: &Hypergraph3, mutate: bool, v: &mut InstanceVerdict) {
    let Some(r) = v.check("build", build_c6_retract(h)) else {
        return;
    };
    let Some(mut inst) = v.check("build", retract_to_preext3(&r.graph, &r.cycle)) else {
        return;
    };
    if mutate {
        inst.graph
            .remove_edge(r.hyperedge(0), r.vertex(h.edges()[0][2]));
    }
    let src = solve_c6_retraction(&r.graph, &r.cycle);
    let Some(tgt) = v.check(
        "target solver",
        solve_preext(&inst.graph, inst.k, &inst.precoloring),
    ) else {
        return;
    };
    v.answers(src.is_some(), tgt.is_some());
    if mutate {
        return;
    }
    v.expect(src.is_some() == solve_h2col(h).is_some(), || {
        "retraction disagrees with 2-colorability".into()
    });
    if let Some(f) = &src {
        v.check(
            "coloring from retraction",
            validate_preext(
                &inst.graph,
                3,
                &inst.precoloring,
                &inst.coloring_from_retraction(f),
            ),
        );
    }
    if let Some(f) = &tgt {
        let back = inst.retraction_from_coloring(f);
        v.check(
            "retraction from coloring",
            validate_retraction(&inst.graph, inst.cycle.vertices(), &back),
        );
    }
}

fn compaction(b: &BipartiteGraph, c: &C6Embedding, mutate: bool, v: &mut InstanceVerdict) {
    let Some(mut inst) = v.check("build", build_compaction(b, c)) else {
        return;
    };
    if mutate {
        inst.graph.add_edge(c.h(1), c.h(4));
    }
    let src = solve_c6_retraction(b, c);
    let tgt = solve_c6_compaction(&inst.graph);
    v.answers(src.is_some(), tgt.is_some());
    if mutate {
        return;
    }
    let surj = solve_c6_surjective(&inst.graph);
    v.expect(surj.is_some() == tgt.is_some(), || {
        format!(
            "diameter {} but surjective {} and compaction {}",
            inst.graph.diameter(),
            surj.is_some(),
            tgt.is_some()
        )
    });
    if let Some(r) = &src {
        if let Some(f) = v.check("extended compaction", retraction_to_compaction(&inst, r)) {
            v.check(
                "compaction",
                validate_homomorphism(&inst.graph, &abstract_c6(), &f, Surjectivity::Edge),
            );
        }
    }
    if let Some(f) = &tgt {
        if let Some(r) = v.check("normalized compaction", compaction_to_retraction(&inst, f)) {
            v.check(
                "retraction from compaction",
                validate_retraction(b, c.vertices(), &r),
            );
        }
    }
}

fn biclique_hom(b: &BipartiteGraph, mutate: bool, v: &mut InstanceVerdict) {
    let mut comp = bipartite_complement(b);
    if mutate {
        if let Some((x, y)) = b.edges().next() {
            comp.add_edge(x, y);
        }
    }
    let src = solve_biclique_partition_exact(b, 3);
    let Some(tgt) = v.check(
        "target solver",
        solve_list_hom(
            &comp,
            &abstract_c6(),
            &parity_lists(b),
            Surjectivity::Vertex,
        ),
    ) else {
        return;
    };
    v.answers(src.is_some(), tgt.is_some());
    if mutate {
        return;
    }
    if let Some(p) = &src {
        if let Some(f) = v.check("forward", biclique_to_surjective(b, p)) {
            v.check(
                "forward hom",
                validate_homomorphism(&comp, &abstract_c6(), &f, Surjectivity::Vertex),
            );
            if let Some(back) = v.check("round trip", surjective_to_biclique(b, &f)) {
                v.expect(&back == p, || "round trip changed the partition".into());
            }
        }
    }
    if let Some(f) = &tgt {
        if let Some(p) = v.check("backward", surjective_to_biclique(b, f)) {
            v.check("backward partition", validate_biclique_partition(b, &p, 3));
            if let Some(again) = v.check("round trip", biclique_to_surjective(b, &p)) {
                v.expect(&again == f, || "round trip changed the homomorphism".into());
            }
        }
    }
}

fn fall_lift_check(g: &BipartiteGraph, mutate: bool, v: &mut InstanceVerdict) {
    let Some(lift) = v.check("build", fall_lift(g, 3)) else {
        return;
    };
    let graph = if mutate {
        let mut g = lift.graph.clone();
        g.add_edge(lift.x, lift.y);
        g
    } else {
        v.expect(lift.graph.diameter().at_most(3), || {
            format!("lift diameter {}", lift.graph.diameter())
        });
        lift.graph.clone()
    };
    let src = solve_fall_coloring(g, 3);
    let tgt = solve_fall_coloring(&graph, lift.k);
    v.answers(src.is_some(), tgt.is_some());
    if mutate {
        return;
    }
    if let Some(f) = &src {
        note_fall_sides(v, g, f, 3);
        v.check(
            "extended certificate",
            validate_fall_coloring(&graph, &lift.extend(f), lift.k),
        );
    }
    if let Some(f) = &tgt {
        note_fall_sides(v, &graph, f, lift.k);
        v.check(
            "restricted certificate",
            validate_fall_coloring(g, &lift.restrict(f), 3),
        );
    }
}

fn fall_turing(g: &BipartiteGraph, mutate: bool, v: &mut InstanceVerdict) {
    let src = solve_fall_coloring(g, 3);
    if let Some(f) = &src {
        note_fall_sides(v, g, f, 3);
    }
    let tgt = if mutate {
        let Some(qs) = v.check("queries", fall_preext_queries(g, FALL_LABELING)) else {
            return;
        };
        qs.into_iter().find_map(|(c, p)| {
            let h6 = c.h(6);
            solve_preext(&g.without_vertex(h6), 3, &without_vertex_coloring(&p, h6))
                .ok()
                .flatten()
        })
    } else {
        let Some(q) = v.check("queries", fall3_turing_queries(g)) else {
            return;
        };
        for perm in [[1, 3, 2], [2, 1, 3], [2, 3, 1], [3, 1, 2], [3, 2, 1]] {
            let labeling = std::array::from_fn(|i| perm[i % 3]);
            let Some(qs) = v.check("relabeled queries", fall_preext_queries(g, labeling)) else {
                return;
            };
            let any = qs
                .iter()
                .any(|(_, p)| matches!(solve_preext(g, 3, p), Ok(Some(_))));
            v.expect(any == q.answer(), || {
                format!("labeling {perm:?} changes the aggregate answer")
            });
        }
        q.witness().cloned()
    };
    v.answers(src.is_some(), tgt.is_some());
    if mutate {
        return;
    }
    if let Some(f) = &tgt {
        v.check(
            "extension is a fall coloring",
            validate_fall_coloring(g, f, 3),
        );
    }
}

fn fall_diam4(h: &Hypergraph3, mutate: bool, v: &mut InstanceVerdict) {
    let h = h.without_uncovered();
    let Some(mut inst) = v.check("build", build_fall3_diam4(&h)) else {
        return;
    };
    if mutate {
        inst.graph = inst.graph.without_vertex(1);
    }
    let src = solve_h2col(&h);
    let tgt = solve_fall_coloring(&inst.graph, 3);
    v.answers(src.is_some(), tgt.is_some());
    if mutate {
        return;
    }
    if let Some(f) = &src {
        v.check(
            "fall from 2-coloring",
            validate_fall_coloring(&inst.graph, &inst.fall_from_h2col(f), 3),
        );
    }
    if let Some(f) = &tgt {
        note_fall_sides(v, &inst.graph, f, 3);
        v.check(
            "2-coloring from fall",
            validate_h2col(&h, &inst.h2col_from_fall(f)),
        );
    }
}

fn listcol_k(h: &Hypergraph3, mutate: bool, exec: Exec, v: &mut InstanceVerdict) {
    let Some(mut inst) = v.check("build", kmm_listcol3(h)) else {
        return;
    };
    if mutate {
        let b1 = inst.b(0);
        inst.graph = inst.graph.without_vertex(b1);
        inst.lists = ListAssignment::new(
            (0..inst.lists.len())
                .filter(|&u| u != b1)
                .map(|u| inst.lists.get(u).to_vec())
                .collect(),
        );
    }
    let src = solve_h2col(h);
    let Some(tgt) = v.check(
        "generic solver",
        solve_list_coloring(&inst.graph, &inst.lists, inst.k),
    ) else {
        return;
    };
    v.answers(src.is_some(), tgt.is_some());
    if mutate {
        return;
    }
    if let Some(hit) = v.check(
        "hitting-set path",
        listcol_complete_bipartite_with(exec, &inst.graph, &inst.lists, inst.k),
    ) {
        v.expect(hit.is_some() == tgt.is_some(), || {
            "hitting-set path disagrees with the generic solver".into()
        });
        if let Some(f) = &hit {
            v.check(
                "hitting-set coloring",
                validate_list_coloring(&inst.graph, &inst.lists, f),
            );
        }
    }
    if let Some(f) = &src {
        v.check(
            "coloring from 2-coloring",
            validate_list_coloring(&inst.graph, &inst.lists, &inst.coloring_from_h2col(f)),
        );
    }
    if let Some(f) = &tgt {
        v.check(
            "2-coloring from coloring",
            validate_h2col(h, &inst.h2col_from_coloring(f)),
        );
    }
}

fn cycle_listcol(
    g: &BipartiteGraph,
    lists: &ListAssignment,
    mutate: bool,
    v: &mut InstanceVerdict,
) {
    let Some(mut inst) = v.check("build", cycle_listcol_instance(g, lists)) else {
        return;
    };
    if mutate {
        let y = inst.y;
        if let Some((u, w)) = g
            .xs()
            .into_iter()
            .flat_map(|u| y.map(|w| (u, w)))
            .find(|&(u, w)| inst.graph.has_edge(u, w))
        {
            inst.graph.remove_edge(u, w);
        }
    }
    let Some(src) = v.check("source solver", solve_list_coloring(g, lists, 3)) else {
        return;
    };
    let tgt = solve_c6_retraction(&inst.graph, &inst.cycle);
    v.answers(src.is_some(), tgt.is_some());
    if mutate {
        return;
    }
    let color_of = |w: usize| {
        (0..3)
            .find(|&i| inst.x[i] == w || inst.y[i] == w)
            .map(|i| i as u32 + 1)
    };
    if let Some(f) = &src {
        let images = (0..inst.graph.n())
            .map(|u| {
                if u < g.n() {
                    let i = f.get(u) as usize - 1;
                    if g.part(u) == Part::X {
                        inst.x[i]
                    } else {
                        inst.y[i]
                    }
                } else {
                    u
                }
            })
            .collect();
        v.check(
            "retraction from coloring",
            validate_retraction(&inst.graph, inst.cycle.vertices(), &VertexMapping(images)),
        );
    }
    if let Some(r) = &tgt {
        let f = Coloring(
            (0..g.n())
                .map(|u| color_of(r.get(u)).expect("image on the cycle"))
                .collect(),
        );
        v.check(
            "coloring from retraction",
            validate_list_coloring(g, lists, &f),
        );
        let comp = bipartite_complement(&inst.graph);
        v.expect(solve_biclique_partition_exact(&comp, 3).is_some(), || {
            "retraction exists but the complement has no 3-biclique partition".into()
        });
    }
}

/// Registered reductions whose mutation leaves their suite passing.
pub fn uncaught_mutations(spec: &CorpusSpec, exec: Exec) -> Vec<Reduction> {
    let run = RunConfig {
        exec,
        deadline: None,
        mutate: true,
    };
    Reduction::ALL
        .into_iter()
        .filter(|&r| check_equivalence(r, spec, &run).passed())
        .collect()
}

/// `n=<n> e=<a>,<b>,<c>;...` with 1-based vertices.
pub fn hyper_label(h: &Hypergraph3) -> String {
    let edges: Vec<String> = h
        .edges()
        .iter()
        .map(|e| format!("{},{},{}", e[0] + 1, e[1] + 1, e[2] + 1))
        .collect();
    format!("n={} e={}", h.n(), edges.join(";"))
}
