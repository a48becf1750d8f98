//! Property suites that are not a single reduction's equivalence.

use std::time::{Duration, Instant};

use super::equivalence::{corpus, CorpusSpec, Item, Reduction, RunConfig};
use super::gen::{gen_bipartite, gen_planted_bicliques, gen_planted_fall};
use super::report::{EquivalenceReport, InstanceVerdict};
use super::rng::Rng;
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::graph::{
    abstract_c6, bipartite_complement, bipartition, fixtures, BipartiteGraph, Diameter, Part,
};
use crate::hitset::{
    complementary_hitting_sets_with, elements, full_mask, listcol_complete_bipartite_with,
    scaling_family, SetFamily,
};
use crate::oracles::{
    enumerate_b_colorings, solve_biclique_partition_exact, solve_c6_compaction,
    solve_c6_surjective, solve_fall_coloring, solve_list_coloring, solve_list_hom,
    validate_biclique_partition, validate_fall_coloring, validate_homomorphism, Coloring,
    ListAssignment, Surjectivity,
};
use crate::reductions::{
    biclique_to_surjective, build_compaction, cycle_listcol_instance, parity_lists,
    surjective_to_biclique,
};

/// Whether a fall `k`-coloring of `g` uses every color on each part.
pub fn fall_sides_hold(g: &BipartiteGraph, f: &Coloring, k: u32) -> bool {
    let mut seen = [0u128; 2];
    for v in 0..g.n() {
        seen[(g.part(v) == Part::Y) as usize] |= 1 << f.get(v);
    }
    let all = ((1u128 << k) - 1) << 1;
    seen.iter().all(|&s| s & all == all)
}

/// Counts from [`b_coloring_fall_check`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct BColoringCount {
    pub proper: u64,
    pub b_colorings: u64,
    /// b-colorings that are not fall colorings.
    pub violations: u64,
}

/// Enumerates the proper 3-colorings of a diameter-3 bipartite graph that
/// are b-colorings and counts those that are not fall colorings.
pub fn b_coloring_fall_check(b: &BipartiteGraph) -> Result<BColoringCount> {
    if !b.diameter().at_most(3) {
        return Err(Error::input(format!("diameter {} > 3", b.diameter())));
    }
    let mut violations = 0;
    let (proper, b_colorings) = enumerate_b_colorings(b, 3, |f| {
        if validate_fall_coloring(b, f, 3).is_err() {
            violations += 1;
        }
    });
    Ok(BColoringCount {
        proper,
        b_colorings,
        violations,
    })
}

/// Answers of both 6-cycle problems on one graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CycleAnswers {
    pub diameter: Diameter,
    pub surjective: bool,
    pub compaction: bool,
}

impl CycleAnswers {
    /// Disagreement is allowed only above diameter 4.
    pub fn consistent(&self) -> bool {
        !self.diameter.at_most(4) || self.surjective == self.compaction
    }
}

pub fn surjective_compaction_check(b: &BipartiteGraph) -> CycleAnswers {
    CycleAnswers {
        diameter: b.diameter(),
        surjective: solve_c6_surjective(b).is_some(),
        compaction: solve_c6_compaction(b).is_some(),
    }
}

fn bip(g: crate::graph::Graph) -> BipartiteGraph {
    bipartition(&g).expect("bipartite fixture")
}

/// Surjective homomorphism against compaction on the compaction corpus
/// (sources and constructed graphs), `C6` and `P6`.
pub fn surjective_compaction_suite(spec: &CorpusSpec, run: &RunConfig) -> EquivalenceReport {
    let (_, items) = corpus(Reduction::Compaction, spec);
    let mut graphs: Vec<(String, BipartiteGraph)> = vec![
        ("C6".into(), bip(fixtures::cycle(6))),
        ("P6".into(), bip(fixtures::path(6))),
    ];
    for (i, item) in items.iter().enumerate() {
        if let Item::Rooted(b, c) = item {
            graphs.push((format!("#{i} source"), b.clone()));
            if let Ok(inst) = build_compaction(b, c) {
                graphs.push((format!("#{i} constructed"), inst.graph));
            }
        }
    }
    let results = run.exec.map(&graphs, |(label, g)| {
        if run.expired() {
            return None;
        }
        let a = surjective_compaction_check(g);
        let mut v = InstanceVerdict::new(format!("{label} diameter {}", a.diameter));
        v.source = Some(a.surjective);
        v.target = Some(a.compaction);
        v.expect(a.consistent(), || {
            format!(
                "surjective {} but compaction {} at diameter {}",
                a.surjective, a.compaction, a.diameter
            )
        });
        Some(v)
    });
    let p6 = surjective_compaction_check(&graphs[1].1);
    let gated = results
        .iter()
        .flatten()
        .filter(|v| v.source != v.target)
        .count();
    let mut report = EquivalenceReport::collect(
        "cor8",
        format!("seed {}: compaction corpus, C6, P6", spec.seed),
        results,
    )
    .note(format!(
        "P6 diameter {} surjective {} compaction {}",
        p6.diameter, p6.surjective, p6.compaction
    ))
    .note(format!(
        "{gated} graphs above diameter 4 with differing answers"
    ));
    if !(p6.surjective && !p6.compaction) {
        let mut v = InstanceVerdict::new("P6");
        v.fail("expected surjective YES and compaction NO");
        report.verdicts.push(v);
    }
    report
}

/// Every 3-b-coloring of random diameter-3 bipartite graphs is a fall
/// coloring; also `K_{a,b}` for `a, b ≤ 5` has no 3-fall coloring.
pub fn b_coloring_fall_suite(spec: &CorpusSpec, run: &RunConfig) -> EquivalenceReport {
    let count = spec.count.unwrap_or(300);
    let graphs: Vec<BipartiteGraph> = (0..count)
        .map(|i| {
            let mut rng = Rng::for_instance(spec.seed, i as u64);
            if i % 2 == 0 {
                return gen_bipartite(rng.range(4, 12), 3, rng.next_u64())
                    .expect("diameter 3 is feasible");
            }
            let n = rng.range(6, 12);
            loop {
                let g = gen_planted_fall(n, 3, rng.next_u64()).expect("n >= 6");
                if g.diameter() == Diameter::Finite(3) {
                    return g;
                }
            }
        })
        .collect();
    let results = run.exec.map_range(graphs.len(), |i| {
        if run.expired() {
            return None;
        }
        let g = &graphs[i];
        let mut v = InstanceVerdict::new(format!("#{i} n={} m={}", g.n(), g.m()));
        let mut examined = 0;
        if let Some(c) = v.check("enumeration", b_coloring_fall_check(g)) {
            examined = c.b_colorings;
            v.source = Some(c.b_colorings > 0);
            v.target = Some(c.b_colorings > 0);
            v.expect(c.violations == 0, || {
                format!(
                    "{} of {} b-colorings are not fall",
                    c.violations, c.b_colorings
                )
            });
        }
        if let Some(f) = solve_fall_coloring(g, 3) {
            v.expect(fall_sides_hold(g, &f, 3), || {
                "fall coloring misses a color on one part".into()
            });
        }
        Some((v, examined))
    });
    let total: u64 = results.iter().flatten().map(|r| r.1).sum();
    let results = results.into_iter().map(|r| r.map(|r| r.0));
    let mut report = EquivalenceReport::collect(
        "faik",
        format!(
            "seed {}: {count} bipartite diameter 3, n<=12, every other one with a planted 3-fall coloring",
            spec.seed
        ),
        results,
    )
    .note(format!("{total} b-colorings examined"));
    for a in 1..=5 {
        for b in 1..=5 {
            let g = bip(fixtures::complete_bipartite(a, b));
            if solve_fall_coloring(&g, 3).is_some() {
                let mut v = InstanceVerdict::new(format!("K{a},{b}"));
                v.fail("complete bipartite graph has a 3-fall coloring");
                report.verdicts.push(v);
            }
        }
    }
    report.note("K_{a,b} with a,b<=5 has no 3-fall coloring")
}

/// The broken step of the list-coloring route to 3-biclique partition,
/// plus the partition/homomorphism converters on planted instances.
pub fn flaw_suite(spec: &CorpusSpec, run: &RunConfig) -> EquivalenceReport {
    let mut verdicts = Vec::new();
    let mut v = InstanceVerdict::new("edge uv with L(u)=L(v)={1,2}");
    let g = bip(fixtures::path(2));
    let lists = ListAssignment::new(vec![vec![1, 2], vec![1, 2]]);
    if let Some(inst) = v.check("build", cycle_listcol_instance(&g, &lists)) {
        let comp = bipartite_complement(&inst.graph);
        let p = inst.counterexample_partition(0, 1);
        v.check(
            "counterexample partition",
            validate_biclique_partition(&comp, &p, 3),
        );
        let split = inst.split_pairs(&p);
        v.expect(!split.is_empty(), || {
            "every matching pair shares a block".into()
        });
        let colorable = solve_list_coloring(&g, &lists, 3).ok().flatten().is_some();
        let partitioned = solve_biclique_partition_exact(&comp, 3).is_some();
        v.source = Some(colorable);
        v.target = Some(partitioned);
        v.expect(colorable && partitioned, || {
            "both decision answers should be YES".into()
        });
        if let Some(f) = v.check(
            "partition to homomorphism",
            biclique_to_surjective(&comp, &p),
        ) {
            v.check(
                "homomorphism",
                validate_homomorphism(&inst.graph, &abstract_c6(), &f, Surjectivity::Vertex),
            );
        }
    }
    verdicts.push(Some(v));
    let count = spec.count.unwrap_or(50);
    verdicts.extend(run.exec.map_range(count, |i| {
        if run.expired() {
            return None;
        }
        let b = gen_planted_bicliques(Rng::for_instance(spec.seed, i as u64).next_u64());
        let mut v = InstanceVerdict::new(format!("planted #{i} n={} m={}", b.n(), b.m()));
        let comp = bipartite_complement(&b);
        let Some(p) = solve_biclique_partition_exact(&b, 3) else {
            v.fail("planted instance has no 3-biclique partition");
            return Some(v);
        };
        if let Some(f) = v.check("forward", biclique_to_surjective(&b, &p)) {
            v.check(
                "forward hom",
                validate_homomorphism(&comp, &abstract_c6(), &f, Surjectivity::Vertex),
            );
            if let Some(back) = v.check("backward", surjective_to_biclique(&b, &f)) {
                v.check(
                    "backward partition",
                    validate_biclique_partition(&b, &back, 3),
                );
                v.expect(back == p, || "round trip changed the partition".into());
            }
        }
        match solve_list_hom(
            &comp,
            &abstract_c6(),
            &parity_lists(&b),
            Surjectivity::Vertex,
        ) {
            Ok(Some(f)) => {
                if let Some(q) = v.check("backward from solver", surjective_to_biclique(&b, &f)) {
                    v.check("backward partition", validate_biclique_partition(&b, &q, 3));
                    v.expect(biclique_to_surjective(&b, &q).ok() == Some(f), || {
                        "round trip changed the homomorphism".into()
                    });
                }
            }
            Ok(None) => v.fail("partition exists but no parity homomorphism"),
            Err(e) => v.fail(format!("solver: {e}")),
        }
        v.source = Some(true);
        v.target = Some(true);
        Some(v)
    }));
    EquivalenceReport::collect(
        "flaw",
        format!(
            "seed {}: counterexample, {count} planted 3-biclique",
            spec.seed
        ),
        verdicts,
    )
}

/// Every multiset of `size` nonempty subsets of `[k]`, as bitmasks.
fn multisets(k: u32, size: usize) -> Vec<Vec<u64>> {
    let top = full_mask(k);
    let mut out = Vec::new();
    let mut cur = vec![1u64; size];
    loop {
        out.push(cur.clone());
        let Some(i) = (0..size).rev().find(|&i| cur[i] < top) else {
            break;
        };
        cur[i] += 1;
        for j in i + 1..size {
            cur[j] = cur[i];
        }
    }
    out
}

fn kab(a: usize, b: usize) -> BipartiteGraph {
    bip(fixtures::complete_bipartite(a, b))
}

fn lists_of(a: &[u64], b: &[u64]) -> ListAssignment {
    ListAssignment::new(a.iter().chain(b).map(|&m| elements(m)).collect())
}

fn agree(g: &BipartiteGraph, lists: &ListAssignment, k: u32) -> std::result::Result<(), String> {
    let hit = listcol_complete_bipartite_with(Exec::Sequential, g, lists, k)
        .map_err(|e| e.to_string())?;
    let generic = solve_list_coloring(g, lists, k).map_err(|e| e.to_string())?;
    if hit.is_some() != generic.is_some() {
        return Err(format!(
            "hitting sets {} but generic {}",
            hit.is_some(),
            generic.is_some()
        ));
    }
    if let Some(f) = hit {
        crate::oracles::validate_list_coloring(g, lists, &f).map_err(|e| e.to_string())?;
    }
    Ok(())
}

/// Exhaustive agreement for parts up to `max_part` and `k ≤ max_k`.
/// Vertices within a part are interchangeable, so lists range over
/// multisets per part; for equal parts the second multiset is at least
/// the first.
pub fn hitset_exhaustive(max_part: usize, max_k: u32, exec: Exec) -> (u64, Vec<String>) {
    let mut jobs = Vec::new();
    for k in 1..=max_k {
        for a in 1..=max_part {
            for b in a..=max_part {
                jobs.push((k, a, b));
            }
        }
    }
    let results = exec.map(&jobs, |&(k, a, b)| {
        let g = kab(a, b);
        let (la, lb) = (multisets(k, a), multisets(k, b));
        let mut count = 0u64;
        let mut failures = Vec::new();
        for (i, x) in la.iter().enumerate() {
            let from = if a == b { i } else { 0 };
            for y in &lb[from..] {
                count += 1;
                if let Err(e) = agree(&g, &lists_of(x, y), k) {
                    failures.push(format!("K{a},{b} k={k} A={x:?} B={y:?}: {e}"));
                }
            }
        }
        (count, failures)
    });
    let mut total = 0;
    let mut failures = Vec::new();
    for (c, f) in results {
        total += c;
        failures.extend(f);
    }
    (total, failures)
}

/// Seconds to solve [`scaling_family`] at each `k`, best of `repeats`.
pub fn hitset_scaling(ks: &[u32], n: usize, repeats: usize, exec: Exec) -> Vec<(u32, f64)> {
    ks.iter()
        .map(|&k| {
            let (a, b) = scaling_family(k, n);
            let best = (0..repeats.max(1))
                .map(|_| {
                    let t = Instant::now();
                    let r = complementary_hitting_sets_with(exec, &a, &b, k)
                        .expect("families over [k]");
                    assert!(r.is_none(), "scaling family is a NO instance");
                    t.elapsed()
                })
                .min()
                .unwrap_or(Duration::ZERO);
            (k, best.as_secs_f64())
        })
        .collect()
}

/// Hitting sets against generic list coloring: exhaustive small cases,
/// random `k = 5` instances, and the runtime growth probe.
pub fn hitset_suite(spec: &CorpusSpec, run: &RunConfig, scaling: bool) -> EquivalenceReport {
    let mut verdicts = Vec::new();
    let (count, failures) = hitset_exhaustive(4, 4, run.exec);
    let mut v = InstanceVerdict::new(format!(
        "exhaustive parts<=4 k<=4 ({count} list assignments)"
    ));
    for f in failures.into_iter().take(5) {
        v.fail(f);
    }
    verdicts.push(Some(v));
    let random = spec.count.unwrap_or(500);
    verdicts.extend(run.exec.map_range(random, |i| {
        if run.expired() {
            return None;
        }
        let mut rng = Rng::for_instance(spec.seed, i as u64);
        let (a, b) = (rng.range(1, 5), rng.range(1, 5));
        let lists: Vec<u64> = (0..a + b).map(|_| rng.range(1, 31) as u64).collect();
        let mut v = InstanceVerdict::new(format!("random #{i} K{a},{b} k=5"));
        let fa = SetFamily::from_masks(5, lists[..a].to_vec()).expect("masks within [5]");
        let fb = SetFamily::from_masks(5, lists[a..].to_vec()).expect("masks within [5]");
        if let Ok(Some(s)) = complementary_hitting_sets_with(Exec::Sequential, &fa, &fb, 5) {
            v.expect(fa.hit_by(s) && fb.hit_by(full_mask(5) & !s), || {
                format!("S = {s:#b} misses a member")
            });
        }
        if let Err(e) = agree(&kab(a, b), &lists_of(&lists[..a], &lists[a..]), 5) {
            v.fail(e);
        }
        Some(v)
    }));
    let mut report = EquivalenceReport::collect(
        "hitset",
        format!(
            "seed {}: exhaustive parts<=4 k<=4, {random} random k=5",
            spec.seed
        ),
        verdicts,
    );
    if scaling && !run.expired() {
        let times = hitset_scaling(&[12, 13, 14, 15, 16], 100_000, 2, run.exec);
        let mut v = InstanceVerdict::new("scaling n=100000 k=12..16");
        for w in times.windows(2) {
            let ratio = w[1].1 / w[0].1.max(1e-9);
            report
                .notes
                .push(format!("k={} {:.3}s ratio {:.2}", w[1].0, w[1].1, ratio));
            v.expect((1.5..=3.0).contains(&ratio), || {
                format!("growth {ratio:.2} from k={} to k={}", w[0].0, w[1].0)
            });
        }
        let last = times.last().map_or(0.0, |t| t.1);
        v.expect(last <= 30.0, || format!("k=16 took {last:.1}s"));
        report
            .notes
            .insert(0, format!("k={} {:.3}s", times[0].0, times[0].1));
        report.verdicts.push(v);
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiset_counts() {
        assert_eq!(multisets(2, 2).len(), 6);
        assert_eq!(multisets(4, 4).len(), 3060);
    }

    #[test]
    fn c6_b_colorings_are_fall() {
        let c = b_coloring_fall_check(&bip(fixtures::cycle(6))).unwrap();
        assert!(c.b_colorings > 0);
        assert_eq!(c.violations, 0);
        let k33 = b_coloring_fall_check(&kab(3, 3)).unwrap();
        assert_eq!((k33.b_colorings, k33.violations), (0, 0));
        assert!(b_coloring_fall_check(&bip(fixtures::path(6))).is_err());
    }

    #[test]
    fn p6_diverges_without_tripping() {
        let a = surjective_compaction_check(&bip(fixtures::path(6)));
        assert_eq!(a.diameter, Diameter::Finite(5));
        assert!(a.surjective && !a.compaction && a.consistent());
        let c6 = surjective_compaction_check(&bip(fixtures::cycle(6)));
        assert!(c6.surjective && c6.compaction);
    }

    #[test]
    fn fall_sides_on_c6() {
        let g = bip(fixtures::cycle(6));
        assert!(fall_sides_hold(&g, &Coloring(vec![1, 2, 3, 1, 2, 3]), 3));
        assert!(!fall_sides_hold(&g, &Coloring(vec![1, 2, 1, 2, 1, 2]), 3));
    }

    #[test]
    fn small_exhaustive_hitset() {
        let (count, failures) = hitset_exhaustive(2, 3, Exec::Sequential);
        assert!(count > 0);
        assert!(failures.is_empty(), "{failures:?}");
    }

    #[test]
    fn flaw_passes() {
        let r = flaw_suite(
            &CorpusSpec {
                seed: 1,
                count: Some(10),
            },
            &RunConfig::default(),
        );
        assert!(r.passed(), "{r}");
    }
}
