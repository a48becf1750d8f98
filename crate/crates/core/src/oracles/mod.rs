//! Exact, certificate-producing decision procedures.
//!
//! Every solver is complete: a `None` answer means no certificate exists.
//! Search orders are fixed (minimum remaining values, ties by vertex index,
//! values ascending) so certificates are reproducible.

mod biclique;
mod fall;
mod h2col;
mod hom;
mod listcol;
mod listhom;
mod twosat;
mod validate;

pub use biclique::{solve_biclique_partition, solve_biclique_partition_exact};
pub use fall::{enumerate_b_colorings, is_b_coloring, solve_fall_coloring};
pub use h2col::solve_h2col;
pub use listcol::{
    list_coloring_by_backtracking, list_coloring_by_two_sat, solve_list_coloring, solve_preext,
};
pub use listhom::{
    solve_c6_compaction, solve_c6_retraction, solve_c6_surjective, solve_list_hom, Surjectivity,
};
pub use twosat::TwoSat;
pub use validate::{
    validate, validate_biclique_partition, validate_coloring, validate_fall_coloring,
    validate_h2col, validate_homomorphism, validate_list_coloring, validate_preext,
    validate_retraction, Certificate, Condition, Instance, Violation, Witness,
};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Per-vertex finite sets of allowed values.
///
/// For coloring problems the values are colors (positive integers). For
/// list homomorphisms they are target-vertex indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ListAssignment {
    lists: Vec<Vec<u32>>,
}

impl ListAssignment {
    pub fn new(lists: Vec<Vec<u32>>) -> Self {
        let lists = lists
            .into_iter()
            .map(|mut l| {
                l.sort_unstable();
                l.dedup();
                l
            })
            .collect();
        Self { lists }
    }

    /// Every vertex gets `1..=k`.
    pub fn full(n: usize, k: u32) -> Self {
        Self {
            lists: vec![(1..=k).collect(); n],
        }
    }

    /// Every vertex gets `0..t`; the full list-homomorphism assignment
    /// for a target on `t` vertices.
    pub fn all_targets(n: usize, t: usize) -> Self {
        Self {
            lists: vec![(0..t as u32).collect(); n],
        }
    }

    pub fn len(&self) -> usize {
        self.lists.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lists.is_empty()
    }

    pub fn get(&self, v: usize) -> &[u32] {
        &self.lists[v]
    }

    pub fn set(&mut self, v: usize, mut list: Vec<u32>) {
        list.sort_unstable();
        list.dedup();
        self.lists[v] = list;
    }

    pub fn push(&mut self, list: Vec<u32>) {
        self.lists.push(list);
        let v = self.lists.len() - 1;
        let l = std::mem::take(&mut self.lists[v]);
        self.set(v, l);
    }

    pub fn max_len(&self) -> usize {
        self.lists.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn max_value(&self) -> Option<u32> {
        self.lists.iter().flatten().copied().max()
    }

    pub fn iter(&self) -> impl Iterator<Item = &[u32]> {
        self.lists.iter().map(Vec::as_slice)
    }
}

/// A map from a subset of the vertices to colors in `1..=k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PartialColoring {
    colors: Vec<Option<u32>>,
}

impl PartialColoring {
    pub fn empty(n: usize) -> Self {
        Self {
            colors: vec![None; n],
        }
    }

    pub fn from_pairs(n: usize, pairs: impl IntoIterator<Item = (usize, u32)>) -> Result<Self> {
        let mut p = Self::empty(n);
        for (v, c) in pairs {
            if v >= n {
                return Err(Error::input(format!("precolored vertex {v} out of range")));
            }
            if c == 0 {
                return Err(Error::input(format!("vertex {v} precolored with color 0")));
            }
            p.colors[v] = Some(c);
        }
        Ok(p)
    }

    pub fn n(&self) -> usize {
        self.colors.len()
    }

    pub fn get(&self, v: usize) -> Option<u32> {
        self.colors[v]
    }

    pub fn set(&mut self, v: usize, c: u32) {
        self.colors[v] = Some(c);
    }

    pub fn unset(&mut self, v: usize) {
        self.colors[v] = None;
    }

    /// Grows the vertex range, leaving new vertices uncolored.
    pub fn resize(&mut self, n: usize) {
        self.colors.resize(n, None);
    }

    /// `(vertex, color)` pairs in vertex order.
    pub fn assigned(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.colors
            .iter()
            .enumerate()
            .filter_map(|(v, c)| c.map(|c| (v, c)))
    }

    /// First edge of `g` inside the domain whose endpoints share a color.
    pub fn conflict(&self, g: &Graph) -> Option<(usize, usize)> {
        g.edges()
            .find(|&(u, v)| self.colors[u].is_some() && self.colors[u] == self.colors[v])
    }

    /// The list translation: singletons on precolored vertices, `1..=k`
    /// elsewhere.
    pub fn to_lists(&self, k: u32) -> ListAssignment {
        ListAssignment {
            lists: self
                .colors
                .iter()
                .map(|c| match c {
                    Some(c) => vec![*c],
                    None => (1..=k).collect(),
                })
                .collect(),
        }
    }
}

/// A total vertex coloring with colors starting at 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Coloring(pub Vec<u32>);

impl Coloring {
    pub fn colors(&self) -> &[u32] {
        &self.0
    }

    pub fn get(&self, v: usize) -> u32 {
        self.0[v]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Vertices of color `c`.
    pub fn class(&self, c: u32) -> Vec<usize> {
        (0..self.0.len()).filter(|&v| self.0[v] == c).collect()
    }
}

/// A total map from source vertices to target vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VertexMapping(pub Vec<usize>);

impl VertexMapping {
    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn get(&self, v: usize) -> usize {
        self.0[v]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Disjoint vertex blocks covering the graph, each inducing a biclique.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BicliquePartition {
    pub blocks: Vec<Vec<usize>>,
}

impl BicliquePartition {
    pub fn new(mut blocks: Vec<Vec<usize>>) -> Self {
        for b in &mut blocks {
            b.sort_unstable();
        }
        Self { blocks }
    }

    /// Block index of every vertex, `None` where uncovered.
    pub fn block_of(&self, n: usize) -> Vec<Option<usize>> {
        let mut out = vec![None; n];
        for (i, b) in self.blocks.iter().enumerate() {
            for &v in b {
                if v < n {
                    out[v] = Some(i);
                }
            }
        }
        out
    }
}
