use super::{check_domination, ensure};
use crate::error::{Error, Result};
use crate::graph::{abstract_c6, BipartiteGraph, C6Embedding, Part};
use crate::oracles::{
    solve_list_hom, validate_homomorphism, ListAssignment, Surjectivity, VertexMapping,
};

/// New vertices per gadget owner: three diagonal gadgets of six vertices.
pub const COMPACTION_GADGET: usize = 18;

/// A retraction instance extended by diagonal gadgets so that
/// C6-compactions of the result correspond to retractions of the source.
///
/// Source vertices keep their ids; gadget vertices follow, 18 per owner.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompactionInstance {
    pub graph: BipartiteGraph,
    pub cycle: C6Embedding,
    pub source_n: usize,
    /// Vertices that received gadgets, in id order.
    pub owners: Vec<usize>,
    pub names: Vec<String>,
}

impl CompactionInstance {
    pub fn added(&self) -> usize {
        self.graph.n() - self.source_n
    }

    pub fn check(&self) -> Result<()> {
        ensure(
            self.added() == COMPACTION_GADGET * self.owners.len(),
            || {
                format!(
                    "{} new vertices for {} owners",
                    self.added(),
                    self.owners.len()
                )
            },
        )?;
        ensure(self.graph.diameter().at_most(4), || {
            format!("diameter {} > 4", self.graph.diameter())
        })?;
        self.cycle
            .check(&self.graph)
            .map_err(|e| Error::falsification(format!("cycle: {e}")))?;
        check_domination(&self.graph, &self.cycle).map_err(|e| Error::falsification(e.to_string()))
    }
}

/// [`build_compaction_with`] attaching gadgets to the vertices of the
/// cycle-start part that are off the cycle.
pub fn build_compaction(b: &BipartiteGraph, c: &C6Embedding) -> Result<CompactionInstance> {
    build_compaction_with(b, c, false)
}

/// Adds, for every gadget owner `u` and each diagonal `(h'1, h'4)` with
/// `h'1 ∈ {h1, h3, h5}`, six vertices: `b1, b2, c1, c2` opposite `u` and
/// `a1, a2` on its side. With `attach_to_cycle`, `h1, h3, h5` also own
/// gadgets.
///
/// Requires `{h1, h3, h5}` to dominate the opposite part and to lie within
/// distance 2 of every vertex of their own part.
pub fn build_compaction_with(
    b: &BipartiteGraph,
    c: &C6Embedding,
    attach_to_cycle: bool,
) -> Result<CompactionInstance> {
    c.check(b)?;
    check_domination(b, c)?;
    let own = b.part(c.h(1));
    let owners: Vec<usize> = b
        .side(own)
        .into_iter()
        .filter(|&u| attach_to_cycle || c.position(u).is_none())
        .collect();
    let mut g = b.clone();
    let mut names: Vec<String> = (1..=b.n()).map(|v| format!("u{v}")).collect();
    for &u in &owners {
        for t in 0..3 {
            let hp = |i: usize| c.h((2 * t + i - 1) % 6 + 1);
            let mut add = |p: Part, name: &str| {
                names.push(format!("g{}.{}:{name}", u + 1, 2 * t + 1));
                g.add_vertex(p)
            };
            let [a1, a2] = [add(own, "a1"), add(own, "a2")];
            let [b1, b2, c1, c2] = ["b1", "b2", "c1", "c2"].map(|s| add(own.other(), s));
            for (x, y) in [
                (u, b1),
                (u, b2),
                (u, c1),
                (u, c2),
                (hp(1), b1),
                (hp(1), b2),
                (a1, b1),
                (a1, c1),
                (a1, hp(4)),
                (a2, b2),
                (a2, c2),
                (a2, hp(4)),
                (hp(3), c1),
                (hp(5), c2),
            ] {
                g.add_edge(x, y);
            }
        }
    }
    let inst = CompactionInstance {
        graph: g,
        cycle: *c,
        source_n: b.n(),
        owners,
        names,
    };
    inst.check()?;
    Ok(inst)
}

/// Extends a retraction of the source (images are host vertices) to a
/// compaction of the extended graph onto the abstract cycle, with `h_i`
/// mapped to `i - 1`.
pub fn retraction_to_compaction(
    inst: &CompactionInstance,
    f: &VertexMapping,
) -> Result<VertexMapping> {
    let lists = ListAssignment::new(
        (0..inst.graph.n())
            .map(|v| {
                if v < inst.source_n {
                    let p = inst.cycle.position(f.get(v)).ok_or_else(|| {
                        Error::input(format!("image of vertex {v} is off the cycle"))
                    })?;
                    Ok(vec![p as u32])
                } else {
                    Ok((0..6).collect())
                }
            })
            .collect::<Result<_>>()?,
    );
    solve_list_hom(&inst.graph, &abstract_c6(), &lists, Surjectivity::Edge)?
        .ok_or_else(|| Error::falsification("retraction does not extend over the diagonal gadgets"))
}

/// Relabels the abstract cycle so that a compaction `f` of `gprime` fixes
/// `c`, and returns the resulting retraction with host-vertex images.
///
/// Fails with [`Error::Falsification`] when no automorphism of the 6-cycle
/// sends every `f(h_i)` to `i - 1`.
pub fn normalize_compaction(
    gprime: &BipartiteGraph,
    c: &C6Embedding,
    f: &VertexMapping,
) -> Result<VertexMapping> {
    validate_homomorphism(gprime, &abstract_c6(), f, Surjectivity::Edge)
        .map_err(|v| Error::input(format!("not a compaction: {v}")))?;
    let autos = (0..6).flat_map(|r| [(1, r), (5, r)]);
    let sigma = autos
        .map(|(s, r)| move |x: usize| (s * x + r) % 6)
        .find(|sigma| (0..6).all(|i| sigma(f.get(c.vertices()[i])) == i))
        .ok_or_else(|| {
            Error::falsification("no relabeling of the cycle makes the compaction fix it")
        })?;
    Ok(VertexMapping(
        f.images().iter().map(|&a| c.vertices()[sigma(a)]).collect(),
    ))
}

/// A retraction of the source read off a compaction of the extended graph.
pub fn compaction_to_retraction(
    inst: &CompactionInstance,
    f: &VertexMapping,
) -> Result<VertexMapping> {
    let r = normalize_compaction(&inst.graph, &inst.cycle, f)?;
    Ok(VertexMapping(r.images()[..inst.source_n].to_vec()))
}
