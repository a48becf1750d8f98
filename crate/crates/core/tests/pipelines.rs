use chromatic_core::graph::Hypergraph3;
use chromatic_core::io;
use chromatic_core::oracles::{
    solve_c6_retraction, solve_fall_coloring, solve_h2col, solve_list_coloring, solve_preext,
    validate_fall_coloring, validate_h2col, validate_retraction,
};
use chromatic_core::reductions::{
    build_c6_retract, build_fall3_diam4, complete_gadget_mapping, kmm_listcol3, retract_to_preext3,
};
use chromatic_core::verify::{RunConfig, Suite};
use chromatic_core::Exec;
use proptest::prelude::*;

fn hypergraph() -> impl Strategy<Value = Hypergraph3> {
    (3usize..=6).prop_flat_map(|n| {
        let triples = Hypergraph3::complete(n).edges().to_vec();
        proptest::sample::subsequence(triples.clone(), 1..=triples.len().min(5))
            .prop_map(move |edges| Hypergraph3::new(n, edges).unwrap())
    })
}

#[test]
fn strategies_give_identical_reports() {
    for id in ["thm7", "prop1", "cor9", "fmps", "appA", "flaw", "faik"] {
        let s = Suite::from_id(id).unwrap();
        let seq = s.run(3, &RunConfig::with_exec(Exec::Sequential));
        let par = s.run(3, &RunConfig::with_exec(Exec::Parallel));
        assert_eq!(seq, par, "{id}");
        assert!(seq.passed(), "{seq}");
    }
}

#[test]
fn coloring_survives_the_retraction_round_trip() {
    let h = Hypergraph3::new(5, [[0, 1, 2], [1, 3, 4], [0, 2, 4]]).unwrap();
    let f = solve_h2col(&h).unwrap();
    let inst = build_c6_retract(&h).unwrap();
    let r = complete_gadget_mapping(&inst, &f).unwrap();
    validate_retraction(&inst.graph, inst.cycle.vertices(), &r).unwrap();
    let back = inst.coloring_from_retraction(&r);
    validate_h2col(&h, &back).unwrap();
}

#[test]
fn built_instances_survive_text_round_trip() {
    let inst = build_c6_retract(&Hypergraph3::fano()).unwrap();
    let text = io::write_bipartite(&inst.graph);
    let back = io::parse_bipartite(&text).unwrap();
    assert_eq!(back, inst.graph);
    let c = io::parse_c6(&io::write_c6(&inst.cycle), &back).unwrap();
    assert_eq!(c, inst.cycle);
    let pre = retract_to_preext3(&back, &c).unwrap();
    let p = io::parse_precoloring(&io::write_precoloring(&pre.precoloring), back.n()).unwrap();
    assert_eq!(p, pre.precoloring);
    assert!(solve_preext(&back, 3, &p).unwrap().is_none());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn every_route_agrees_with_two_colorability(h in hypergraph()) {
        let yes = solve_h2col(&h).is_some();
        let r = build_c6_retract(&h).unwrap();
        prop_assert_eq!(solve_c6_retraction(&r.graph, &r.cycle).is_some(), yes);
        let core = h.without_uncovered();
        let fall = build_fall3_diam4(&core).unwrap();
        let f = solve_fall_coloring(&fall.graph, 3);
        prop_assert_eq!(f.is_some(), yes);
        if let Some(f) = f {
            prop_assert!(validate_fall_coloring(&fall.graph, &f, 3).is_ok());
            prop_assert!(validate_h2col(&core, &fall.h2col_from_fall(&f)).is_ok());
        }
        let l = kmm_listcol3(&h).unwrap();
        prop_assert_eq!(solve_list_coloring(&l.graph, &l.lists, l.k).unwrap().is_some(), yes);
    }
}
