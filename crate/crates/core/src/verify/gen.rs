//! Seeded instance generators and the fixed corpora.

use super::rng::Rng;
use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, C6Embedding, Diameter, Graph, Hypergraph3, Part};
use crate::oracles::{ListAssignment, PartialColoring};

const RETRIES: usize = 20_000;

/// `m` distinct random triples on `n` vertices.
pub fn gen_h3(n: usize, m: usize, seed: u64) -> Result<Hypergraph3> {
    let total = n * n.saturating_sub(1) * n.saturating_sub(2) / 6;
    if n < 3 || m > total {
        return Err(Error::input(format!(
            "no {m} distinct triples on {n} vertices"
        )));
    }
    let mut rng = Rng::new(seed);
    let mut edges: Vec<[usize; 3]> = Vec::with_capacity(m);
    while edges.len() < m {
        let mut e = [rng.below(n), rng.below(n), rng.below(n)];
        e.sort_unstable();
        if e[0] != e[1] && e[1] != e[2] && !edges.contains(&e) {
            edges.push(e);
        }
    }
    Hypergraph3::new(n, edges)
}

fn random_bipartite(rng: &mut Rng, n: usize, p: f64) -> BipartiteGraph {
    let a = rng.range(1, n - 1);
    let mut g = Graph::new(n);
    for u in 0..a {
        for v in a..n {
            if rng.chance(p) {
                g.add_edge(u, v);
            }
        }
    }
    let parts = (0..n)
        .map(|v| if v < a { Part::X } else { Part::Y })
        .collect();
    BipartiteGraph::new(g, parts).expect("edges cross the parts")
}

/// A random bipartite graph on `n` vertices with diameter exactly `d`,
/// by rejection while sweeping the edge probability.
pub fn gen_bipartite(n: usize, d: usize, seed: u64) -> Result<BipartiteGraph> {
    if n < 2 {
        return Err(Error::input("need at least 2 vertices"));
    }
    let mut rng = Rng::new(seed);
    for attempt in 0..RETRIES {
        let p = 0.15 + 0.7 * ((attempt % 15) as f64 / 14.0);
        let b = random_bipartite(&mut rng, n, p);
        if b.diameter() == Diameter::Finite(d) {
            return Ok(b);
        }
    }
    Err(Error::input(format!(
        "no bipartite graph on {n} vertices with diameter {d} found"
    )))
}

/// A random connected bipartite graph on `n ≥ 2` vertices.
pub fn gen_connected_bipartite(n: usize, seed: u64) -> Result<BipartiteGraph> {
    if n < 2 {
        return Err(Error::input("need at least 2 vertices"));
    }
    let mut rng = Rng::new(seed);
    for attempt in 0..RETRIES {
        let p = 0.25 + 0.5 * ((attempt % 6) as f64 / 5.0);
        let b = random_bipartite(&mut rng, n, p);
        if b.is_connected() {
            return Ok(b);
        }
    }
    Err(Error::input(format!(
        "no connected bipartite graph on {n} vertices found"
    )))
}

/// A random proper partial coloring into `1..=k`, each vertex precolored
/// with probability `p`.
pub fn gen_precoloring(g: &Graph, k: u32, p: f64, rng: &mut Rng) -> PartialColoring {
    let mut out = PartialColoring::empty(g.n());
    for v in 0..g.n() {
        if rng.chance(p) {
            let c = rng.range(1, k as usize) as u32;
            if g.neighbors(v).iter().all(|&w| out.get(w) != Some(c)) {
                out.set(v, c);
            }
        }
    }
    out
}

/// A random graph and cycle meeting the compaction builder's hypotheses:
/// `C6` plus `ny` vertices opposite `h1` attached to some of `h1, h3, h5`,
/// and `nx` vertices on the side of `h1`, each within distance 2 of all of
/// `h1, h3, h5`.
pub fn gen_compaction_source(nx: usize, ny: usize, seed: u64) -> (BipartiteGraph, C6Embedding) {
    let mut rng = Rng::new(seed);
    let mut b = BipartiteGraph::new(Graph::new(0), vec![]).expect("empty graph");
    let cycle: [usize; 6] =
        std::array::from_fn(|i| b.add_vertex(if i % 2 == 0 { Part::X } else { Part::Y }));
    for i in 0..6 {
        b.add_edge(cycle[i], cycle[(i + 1) % 6]);
    }
    let hubs = [cycle[0], cycle[2], cycle[4]];
    for _ in 0..ny {
        let y = b.add_vertex(Part::Y);
        let first = rng.below(3);
        b.add_edge(y, hubs[first]);
        for (i, &h) in hubs.iter().enumerate() {
            if i != first && rng.chance(0.4) {
                b.add_edge(y, h);
            }
        }
    }
    let ys = b.ys();
    for _ in 0..nx {
        let x = b.add_vertex(Part::X);
        for &y in &ys {
            if rng.chance(0.3) {
                b.add_edge(x, y);
            }
        }
        for &h in &hubs {
            if b.distance(x, h).is_none_or(|d| d > 2) {
                let near: Vec<usize> = b.neighbors(h).to_vec();
                let y = *rng.pick(&near);
                b.add_edge(x, y);
            }
        }
    }
    let c = C6Embedding::new(&b, cycle).expect("cycle stays induced");
    (b, c)
}

/// A random connected bipartite graph on `n ≥ 2k` vertices with a planted
/// `k`-fall coloring: every color appears on both sides and every vertex
/// gets a neighbor of each other color.
pub fn gen_planted_fall(n: usize, k: usize, seed: u64) -> Result<BipartiteGraph> {
    if k < 2 || n < 2 * k {
        return Err(Error::input(format!(
            "a planted {k}-fall coloring needs at least {} vertices",
            2 * k
        )));
    }
    let mut rng = Rng::new(seed);
    for _ in 0..RETRIES {
        let a = rng.range(k, n - k);
        let color: Vec<usize> = (0..n)
            .map(|v| if v < a { v % k } else { (v - a) % k })
            .collect();
        let parts: Vec<Part> = (0..n)
            .map(|v| if v < a { Part::X } else { Part::Y })
            .collect();
        let mut g = Graph::new(n);
        for v in 0..n {
            let opposite: Vec<usize> = (0..n).filter(|&w| parts[w] != parts[v]).collect();
            for c in (0..k).filter(|&c| c != color[v]) {
                if !g.neighbors(v).iter().any(|&w| color[w] == c) {
                    let options: Vec<usize> = opposite
                        .iter()
                        .copied()
                        .filter(|&w| color[w] == c)
                        .collect();
                    g.add_edge(v, *rng.pick(&options));
                }
            }
        }
        for u in 0..a {
            for v in a..n {
                if color[u] != color[v] && !g.has_edge(u, v) && rng.chance(0.2) {
                    g.add_edge(u, v);
                }
            }
        }
        let b = BipartiteGraph::new(g, parts).expect("edges cross the parts");
        if b.is_connected() {
            return Ok(b);
        }
    }
    Err(Error::input(format!(
        "no connected planted {k}-fall graph on {n} vertices found"
    )))
}

/// Random lists within `{1, 2, 3}` on `X` and full lists on `Y`.
pub fn gen_side_lists(b: &BipartiteGraph, rng: &mut Rng) -> ListAssignment {
    ListAssignment::new(
        (0..b.n())
            .map(|v| match b.part(v) {
                Part::X => {
                    let mask = rng.range(1, 7);
                    (1..=3).filter(|c| mask >> (c - 1) & 1 == 1).collect()
                }
                Part::Y => vec![1, 2, 3],
            })
            .collect(),
    )
}

/// Bipartite graph with parts `0..a` and `a..a+b` and three planted
/// bicliques, plus random edges between blocks.
pub fn gen_planted_bicliques(seed: u64) -> BipartiteGraph {
    let mut rng = Rng::new(seed);
    let sizes: Vec<(usize, usize)> = (0..3).map(|_| (rng.range(1, 3), rng.range(1, 3))).collect();
    let a: usize = sizes.iter().map(|s| s.0).sum();
    let n = a + sizes.iter().map(|s| s.1).sum::<usize>();
    let (mut xs, mut ys) = (Vec::new(), Vec::new());
    let (mut nx, mut ny) = (0, a);
    for &(sx, sy) in &sizes {
        xs.push((nx..nx + sx).collect::<Vec<_>>());
        ys.push((ny..ny + sy).collect::<Vec<_>>());
        nx += sx;
        ny += sy;
    }
    let mut g = Graph::new(n);
    for (i, bx) in xs.iter().enumerate() {
        for (j, by) in ys.iter().enumerate() {
            for &x in bx {
                for &y in by {
                    if i == j || rng.chance(0.35) {
                        g.add_edge(x, y);
                    }
                }
            }
        }
    }
    let parts = (0..n)
        .map(|v| if v < a { Part::X } else { Part::Y })
        .collect();
    BipartiteGraph::new(g, parts).expect("edges cross the parts")
}

/// Every set of `m` distinct triples on `n` vertices, for `n` in `3..=max_n`
/// and `m` in `1..=max_m`, in lexicographic order of sorted edge lists.
pub fn exhaustive_h3(max_n: usize, max_m: usize) -> Vec<Hypergraph3> {
    let mut out = Vec::new();
    for n in 3..=max_n {
        let triples = Hypergraph3::complete(n).edges().to_vec();
        for m in 1..=max_m.min(triples.len()) {
            let mut pick: Vec<usize> = (0..m).collect();
            loop {
                out.push(
                    Hypergraph3::new(n, pick.iter().map(|&i| triples[i]))
                        .expect("distinct triples"),
                );
                let Some(i) = (0..m).rev().find(|&i| pick[i] < triples.len() - m + i) else {
                    break;
                };
                pick[i] += 1;
                for j in i + 1..m {
                    pick[j] = pick[j - 1] + 1;
                }
            }
        }
    }
    out
}

/// Non-2-colorable fixtures: the Fano plane and all triples on 5 vertices.
pub fn no_fixtures() -> Vec<Hypergraph3> {
    vec![Hypergraph3::fano(), Hypergraph3::complete(5)]
}

/// The exhaustive corpus (`n ≤ 5`, `m ≤ 3`), then `random` seeded
/// instances with `n ≤ 7`, `m ≤ 5`, then [`no_fixtures`].
pub fn hypergraph_corpus(seed: u64, random: usize) -> Vec<Hypergraph3> {
    let mut out = exhaustive_h3(5, 3);
    out.extend((0..random as u64).map(|i| {
        let mut rng = Rng::for_instance(seed, i);
        let n = rng.range(3, 7);
        let m = rng.range(1, 5.min(n * (n - 1) * (n - 2) / 6));
        gen_h3(n, m, rng.next_u64()).expect("feasible sizes")
    }));
    out.extend(no_fixtures());
    out
}
