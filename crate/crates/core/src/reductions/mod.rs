//! Instance builders for the hardness reductions, with certificate
//! translators between the two sides.
//!
//! Builders check their structural guarantees (bipartiteness, diameter
//! bounds, domination, vertex counts) on every output. A failed guarantee
//! is reported as [`Error::Falsification`]; an input outside a builder's
//! hypotheses as [`Error::Precondition`].

mod biclique;
mod compaction;
mod fall;
mod lift;
mod listcol;
mod retract;

pub use biclique::{
    biclique_to_surjective, cycle_listcol_instance, parity_lists, surjective_to_biclique,
    CycleListInstance,
};
pub use compaction::{
    build_compaction, build_compaction_with, compaction_to_retraction, normalize_compaction,
    retraction_to_compaction, CompactionInstance, COMPACTION_GADGET,
};
pub use fall::{
    build_fall3_diam4, fall3_turing_queries, fall_preext_queries, FallInstance, TuringQueries,
    FALL_LABELING,
};
pub use lift::{fall_lift, lift_preext, Lift};
pub use listcol::{kmm_listcol3, ListColInstance};
pub use retract::{
    build_c6_retract, check_domination, complete_gadget_mapping, retract_to_preext3,
    PreExtInstance, RetractInstance, GADGET_SIZE,
};

use crate::error::{Error, Result};
use crate::graph::Graph;

fn ensure(cond: bool, what: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::falsification(what()))
    }
}

fn require(cond: bool, what: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::precondition(what()))
    }
}

fn require_connected(g: &Graph) -> Result<()> {
    require(g.n() > 0 && g.is_connected(), || {
        "graph must be connected".into()
    })?;
    require(g.isolated_vertices().next().is_none(), || {
        "graph must have no isolated vertex".into()
    })
}
