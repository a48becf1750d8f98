//! Cross-oracle verification: seeded corpora, per-reduction equivalence
//! sweeps, property suites and mutation checks.
//!
//! Every sweep is deterministic given its seed. Instances run in parallel
//! under [`Exec::Parallel`] and are reported in corpus order.

mod equivalence;
mod gen;
mod properties;
mod report;
mod rng;

pub use equivalence::{
    check_equivalence, compaction_chain, corpus, hyper_label, uncaught_mutations, CorpusSpec, Item,
    Reduction, RunConfig,
};
pub use gen::{
    exhaustive_h3, gen_bipartite, gen_compaction_source, gen_connected_bipartite, gen_h3,
    gen_planted_bicliques, gen_planted_fall, gen_precoloring, gen_side_lists, hypergraph_corpus,
    no_fixtures,
};
pub use properties::{
    b_coloring_fall_check, b_coloring_fall_suite, fall_sides_hold, flaw_suite, hitset_exhaustive,
    hitset_scaling, hitset_suite, surjective_compaction_check, surjective_compaction_suite,
    BColoringCount, CycleAnswers,
};
pub use report::{EquivalenceReport, InstanceVerdict};
pub use rng::Rng;

/// Every runnable suite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Equivalence(Reduction),
    SurjectiveCompaction,
    Flaw,
    BColoringFall,
    HitSet,
}

impl Suite {
    pub fn all() -> Vec<Suite> {
        let mut out: Vec<Suite> = Reduction::ALL.into_iter().map(Suite::Equivalence).collect();
        out.extend([
            Suite::SurjectiveCompaction,
            Suite::Flaw,
            Suite::BColoringFall,
            Suite::HitSet,
        ]);
        out
    }

    /// Command-line id.
    pub fn id(self) -> &'static str {
        match self {
            Suite::Equivalence(r) => r.id(),
            Suite::SurjectiveCompaction => "cor8",
            Suite::Flaw => "flaw",
            Suite::BColoringFall => "faik",
            Suite::HitSet => "hitset",
        }
    }

    pub fn from_id(id: &str) -> Option<Self> {
        Self::all().into_iter().find(|s| s.id() == id)
    }

    pub fn run(self, seed: u64, run: &RunConfig) -> EquivalenceReport {
        let spec = CorpusSpec::seeded(seed);
        match self {
            Suite::Equivalence(r) => check_equivalence(r, &spec, run),
            Suite::SurjectiveCompaction => surjective_compaction_suite(&spec, run),
            Suite::Flaw => flaw_suite(&spec, run),
            Suite::BColoringFall => b_coloring_fall_suite(&spec, run),
            Suite::HitSet => hitset_suite(&spec, run, true),
        }
    }
}

/// Runs every suite in registry order.
pub fn run_all(seed: u64, run: &RunConfig) -> Vec<EquivalenceReport> {
    Suite::all().into_iter().map(|s| s.run(seed, run)).collect()
}
