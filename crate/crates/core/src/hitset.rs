//! Complementary hitting sets over `[k]`, and list coloring of complete
//! bipartite graphs through them.
//!
//! A list coloring of a complete bipartite graph with parts `A`, `B` is a
//! choice of `S ⊆ [k]` such that every `A`-list meets `S` and every
//! `B`-list meets `[k] ∖ S`: no color can appear on both sides. Trying all
//! `2^k` subsets costs `O(2^k · k · |family|)` word operations.

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::graph::{BipartiteGraph, Part};
use crate::oracles::{Coloring, ListAssignment};

/// Largest supported palette.
pub const MAX_K: u32 = 63;

/// A multiset of subsets of `[k]`, stored as bitmasks (bit `c-1` for color `c`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SetFamily {
    k: u32,
    members: Vec<u64>,
}

impl SetFamily {
    pub fn new(k: u32, members: impl IntoIterator<Item = Vec<u32>>) -> Result<Self> {
        let mut masks = Vec::new();
        for set in members {
            let mut m = 0u64;
            for c in set {
                if c == 0 || c > k {
                    return Err(Error::input(format!("element {c} outside 1..={k}")));
                }
                m |= 1 << (c - 1);
            }
            masks.push(m);
        }
        Self::from_masks(k, masks)
    }

    pub fn from_masks(k: u32, members: Vec<u64>) -> Result<Self> {
        if k > MAX_K {
            return Err(Error::input(format!("k = {k} exceeds {MAX_K}")));
        }
        let full = full_mask(k);
        if members.iter().any(|&m| m & !full != 0) {
            return Err(Error::input(format!("member outside 1..={k}")));
        }
        Ok(Self { k, members })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn members(&self) -> &[u64] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Whether `s` meets every member.
    pub fn hit_by(&self, s: u64) -> bool {
        self.members.iter().all(|&m| m & s != 0)
    }
}

pub fn full_mask(k: u32) -> u64 {
    if k == 64 {
        u64::MAX
    } else {
        (1u64 << k) - 1
    }
}

/// Colors of a bitmask, ascending.
pub fn elements(mask: u64) -> Vec<u32> {
    (0..64)
        .filter(|i| mask >> i & 1 == 1)
        .map(|i| i + 1)
        .collect()
}

/// The smallest bitmask `S ⊆ [k]` hitting every member of `a` whose
/// complement hits every member of `b`.
pub fn complementary_hitting_sets(a: &SetFamily, b: &SetFamily, k: u32) -> Result<Option<u64>> {
    complementary_hitting_sets_with(Exec::default(), a, b, k)
}

pub fn complementary_hitting_sets_with(
    exec: Exec,
    a: &SetFamily,
    b: &SetFamily,
    k: u32,
) -> Result<Option<u64>> {
    if a.k != k || b.k != k {
        return Err(Error::input(format!(
            "families declared over [{}] and [{}], expected [{k}]",
            a.k, b.k
        )));
    }
    let full = full_mask(k);
    let found = exec.find_first(1usize << k, |s| {
        let s = s as u64;
        a.hit_by(s) && b.hit_by(full & !s)
    });
    Ok(found.map(|s| s as u64))
}

/// List coloring of a complete bipartite graph by complementary hitting
/// sets on the two sides' lists. Each vertex takes its smallest admissible
/// color.
pub fn listcol_complete_bipartite(
    b: &BipartiteGraph,
    lists: &ListAssignment,
    k: u32,
) -> Result<Option<Coloring>> {
    listcol_complete_bipartite_with(Exec::default(), b, lists, k)
}

pub fn listcol_complete_bipartite_with(
    exec: Exec,
    b: &BipartiteGraph,
    lists: &ListAssignment,
    k: u32,
) -> Result<Option<Coloring>> {
    if b.xs().is_empty() || b.ys().is_empty() || !b.is_complete() {
        return Err(Error::input(
            "graph is not complete bipartite with both parts nonempty",
        ));
    }
    if lists.len() != b.n() {
        return Err(Error::input(format!(
            "{} lists for {} vertices",
            lists.len(),
            b.n()
        )));
    }
    let side = |p: Part| {
        SetFamily::new(
            k,
            (0..b.n())
                .filter(|&v| b.part(v) == p)
                .map(|v| lists.get(v).to_vec()),
        )
    };
    let (fa, fb) = (side(Part::X)?, side(Part::Y)?);
    let Some(s) = complementary_hitting_sets_with(exec, &fa, &fb, k)? else {
        return Ok(None);
    };
    let full = full_mask(k);
    let colors = (0..b.n())
        .map(|v| {
            let allowed = if b.part(v) == Part::X { s } else { full & !s };
            *lists
                .get(v)
                .iter()
                .find(|&&c| allowed >> (c - 1) & 1 == 1)
                .expect("hitting set meets every list")
        })
        .collect();
    Ok(Some(Coloring(colors)))
}

/// A NO instance with per-subset cost proportional to `n`: `n - k` copies
/// of `[k]` then the singletons `{1}, …, {k}` against `{{1}}`.
pub fn scaling_family(k: u32, n: usize) -> (SetFamily, SetFamily) {
    let full = full_mask(k);
    let mut a = vec![full; n.saturating_sub(k as usize)];
    a.extend((0..k).map(|i| 1u64 << i));
    (
        SetFamily::from_masks(k, a).expect("within [k]"),
        SetFamily::from_masks(k, vec![1]).expect("within [k]"),
    )
}
