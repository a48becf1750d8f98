//! One test per acceptance criterion. Each prints a PASS or FAIL line.

use std::sync::Mutex;
use std::time::{Duration, Instant};

use chromatic_core::graph::{bipartition, fixtures, Diameter};
use chromatic_core::oracles::{
    solve_c6_compaction, solve_c6_surjective, solve_fall_coloring, validate_biclique_partition,
    ListAssignment,
};
use chromatic_core::reductions::{
    build_c6_retract, build_compaction, build_fall3_diam4, cycle_listcol_instance, fall_lift,
    lift_preext, retract_to_preext3, COMPACTION_GADGET,
};
use chromatic_core::verify::{
    b_coloring_fall_suite, check_equivalence, corpus, flaw_suite, hitset_suite, hypergraph_corpus,
    surjective_compaction_check, surjective_compaction_suite, uncaught_mutations, CorpusSpec,
    EquivalenceReport, Item, Reduction, RunConfig,
};
use chromatic_core::Exec;

const SEED: u64 = 1;

struct Outcome {
    name: &'static str,
    pass: bool,
    detail: String,
}

fn outcome(name: &'static str, failures: Vec<String>, detail: String) -> Outcome {
    let pass = failures.is_empty();
    let detail = if pass {
        detail
    } else {
        format!("{detail}; {}", failures.join("; "))
    };
    Outcome { name, pass, detail }
}

fn spec() -> CorpusSpec {
    CorpusSpec::seeded(SEED)
}

fn run() -> RunConfig {
    RunConfig::with_exec(Exec::Parallel)
}

fn require_report(r: &EquivalenceReport, min: usize, failures: &mut Vec<String>) {
    if !r.passed() {
        let what = r
            .counterexample()
            .map(|v| format!("{} {:?}", v.label, v.failures))
            .unwrap_or_default();
        failures.push(format!("{} failed on {what}", r.suite));
    }
    if r.incomplete() {
        failures.push(format!("{} skipped {} instances", r.suite, r.skipped));
    }
    if r.instances() < min {
        failures.push(format!(
            "{} ran {} < {min} instances",
            r.suite,
            r.instances()
        ));
    }
}

fn hyper_sweep() -> Outcome {
    let start = Instant::now();
    let r = check_equivalence(Reduction::C6Retract, &spec(), &run());
    let elapsed = start.elapsed();
    let mut failures = Vec::new();
    require_report(&r, 292, &mut failures);
    if elapsed > Duration::from_secs(600) {
        failures.push(format!("took {elapsed:?}"));
    }
    outcome(
        "retraction vs 2-colorability on the hypergraph corpus",
        failures,
        format!("{} in {:.2}s", r.summary(), elapsed.as_secs_f64()),
    )
}

fn structure() -> Outcome {
    let mut failures = Vec::new();
    let mut built = 0;
    for h in hypergraph_corpus(SEED, 100) {
        let r = build_c6_retract(&h).expect("hypergraph corpus builds");
        built += 1;
        if r.graph.n() != h.n() + 13 * h.m() + 6 {
            failures.push(format!("retraction graph has {} vertices", r.graph.n()));
        }
        if let Err(e) = r.check() {
            failures.push(e.to_string());
        }
        let pre = retract_to_preext3(&r.graph, &r.cycle).expect("retraction output is valid");
        if !pre.graph.diameter().at_most(4) {
            failures.push(format!(
                "precoloring graph diameter {}",
                pre.graph.diameter()
            ));
        }
        let core = h.without_uncovered();
        let f = build_fall3_diam4(&core).expect("covered hypergraph builds");
        built += 2;
        if f.graph.n() != 2 * core.n() + core.m() + 2 || !f.graph.diameter().at_most(4) {
            failures.push(format!(
                "fall graph n={} diameter {}",
                f.graph.n(),
                f.graph.diameter()
            ));
        }
    }
    for item in corpus(Reduction::Compaction, &spec()).1 {
        let Item::Rooted(b, c) = item else { continue };
        let inst = build_compaction(&b, &c).expect("corpus meets the hypotheses");
        built += 1;
        if inst.added() != COMPACTION_GADGET * inst.owners.len() {
            failures.push(format!("compaction added {}", inst.added()));
        }
        if !inst.graph.diameter().at_most(4) {
            failures.push(format!("compaction diameter {}", inst.graph.diameter()));
        }
    }
    for item in corpus(Reduction::PreextLift, &spec()).1 {
        let Item::Preext(g, p) = item else { continue };
        let lift = lift_preext(&g, &p, 3).expect("connected");
        built += 1;
        if !lift.graph.diameter().at_most(3) {
            failures.push(format!(
                "precoloring lift diameter {}",
                lift.graph.diameter()
            ));
        }
    }
    for item in corpus(Reduction::FallLift, &spec()).1 {
        let Item::Bipartite(g) = item else { continue };
        let lift = fall_lift(&g, 3).expect("connected");
        built += 1;
        if !lift.graph.diameter().at_most(3) {
            failures.push(format!("fall lift diameter {}", lift.graph.diameter()));
        }
    }
    failures.truncate(5);
    outcome(
        "structural guarantees of every constructed instance",
        failures,
        format!("{built} instances checked"),
    )
}

fn compaction_chain() -> Outcome {
    let mut failures = Vec::new();
    let chain = check_equivalence(Reduction::Compaction, &spec(), &run());
    require_report(&chain, 60, &mut failures);
    let cycle = surjective_compaction_suite(&spec(), &run());
    require_report(&cycle, 1, &mut failures);
    let p6 = surjective_compaction_check(&bipartition(&fixtures::path(6)).unwrap());
    if !(p6.surjective && !p6.compaction && p6.diameter == Diameter::Finite(5) && p6.consistent()) {
        failures.push(format!("P6 gave {p6:?}"));
    }
    if solve_c6_surjective(&fixtures::path(6)).is_none()
        || solve_c6_compaction(&fixtures::path(6)).is_some()
    {
        failures.push("P6 answers differ from surjective YES, compaction NO".into());
    }
    outcome(
        "compaction chain and surjective vs compaction",
        failures,
        format!("{}; {}", chain.summary(), cycle.summary()),
    )
}

fn hitting_sets() -> Outcome {
    let mut failures = Vec::new();
    let r = hitset_suite(&spec(), &run(), true);
    require_report(&r, 502, &mut failures);
    outcome(
        "complementary hitting sets vs generic list coloring, and scaling",
        failures,
        format!("{} [{}]", r.summary(), r.notes.join(", ")),
    )
}

fn fall_suite() -> Outcome {
    let mut failures = Vec::new();
    let mut lines = Vec::new();
    for (r, min) in [
        (Reduction::FallDiam4, 292),
        (Reduction::FallLift, 60),
        (Reduction::FallTuring, 80),
    ] {
        let report = check_equivalence(r, &spec(), &run());
        require_report(&report, min, &mut failures);
        lines.push(report.summary());
    }
    for a in 1..=5 {
        for b in 1..=5 {
            if solve_fall_coloring(&fixtures::complete_bipartite(a, b), 3).is_some() {
                failures.push(format!("K{a},{b} has a 3-fall coloring"));
            }
        }
    }
    outcome("fall coloring reductions", failures, lines.join("; "))
}

fn b_colorings() -> Outcome {
    let mut failures = Vec::new();
    let r = b_coloring_fall_suite(&spec(), &run());
    require_report(&r, 300, &mut failures);
    outcome(
        "every 3-b-coloring of a diameter-3 bipartite graph is a fall coloring",
        failures,
        format!("{} [{}]", r.summary(), r.notes.join(", ")),
    )
}

fn flaw() -> Outcome {
    let mut failures = Vec::new();
    let g = bipartition(&fixtures::path(2)).unwrap();
    let lists = ListAssignment::new(vec![vec![1, 2], vec![1, 2]]);
    let inst = cycle_listcol_instance(&g, &lists).expect("edge with lists in {1,2,3}");
    let p = inst.counterexample_partition(0, 1);
    let comp = chromatic_core::graph::bipartite_complement(&inst.graph);
    if let Err(e) = validate_biclique_partition(&comp, &p, 3) {
        failures.push(format!("counterexample partition: {e}"));
    }
    if inst.split_pairs(&p).is_empty() {
        failures.push("no matching pair is split".into());
    }
    let r = flaw_suite(&spec(), &run());
    require_report(&r, 51, &mut failures);
    outcome(
        "list-coloring route to biclique partition breaks on an edge",
        failures,
        r.summary(),
    )
}

fn listcol() -> Outcome {
    let mut failures = Vec::new();
    let r = check_equivalence(Reduction::ListColK, &spec(), &run());
    require_report(&r, 292, &mut failures);
    outcome(
        "complete bipartite list coloring vs 2-colorability",
        failures,
        r.summary(),
    )
}

fn mutations() -> Outcome {
    let mut failures = Vec::new();
    if Reduction::ALL.len() != 10 {
        failures.push(format!("{} registered reductions", Reduction::ALL.len()));
    }
    for r in uncaught_mutations(&spec(), Exec::Parallel) {
        failures.push(format!("{} survives its mutation", r.id()));
    }
    outcome(
        "every registered mutation is caught",
        failures,
        format!("{} reductions", Reduction::ALL.len()),
    )
}

static SERIAL: Mutex<()> = Mutex::new(());

fn report(check: fn() -> Outcome) {
    let _guard = SERIAL.lock().unwrap_or_else(|e| e.into_inner());
    let o = check();
    let verdict = if o.pass { "PASS" } else { "FAIL" };
    println!("{verdict} {}: {}", o.name, o.detail);
    assert!(o.pass, "{}: {}", o.name, o.detail);
}

#[test]
fn retraction_matches_two_colorability() {
    report(hyper_sweep);
}

#[test]
fn constructed_instances_keep_their_guarantees() {
    report(structure);
}

#[test]
fn compaction_chain_and_surjective_homs() {
    report(compaction_chain);
}

#[test]
fn hitting_sets_match_and_scale() {
    report(hitting_sets);
}

#[test]
fn fall_coloring_reductions_hold() {
    report(fall_suite);
}

#[test]
fn b_colorings_are_fall_colorings() {
    report(b_colorings);
}

#[test]
fn flawed_construction_is_refuted() {
    report(flaw);
}

#[test]
fn complete_bipartite_lists_match_two_colorability() {
    report(listcol);
}

#[test]
fn every_mutation_is_caught() {
    report(mutations);
}
