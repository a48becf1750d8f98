use super::BicliquePartition;
use crate::graph::{BipartiteGraph, Part};

/// A partition of `V(b)` into at most `k` blocks, each inducing a complete
/// bipartite subgraph with at least one edge.
pub fn solve_biclique_partition(b: &BipartiteGraph, k: usize) -> Option<BicliquePartition> {
    BicliqueSearch::new(b, k, false).run()
}

/// As [`solve_biclique_partition`], but with exactly `k` blocks.
pub fn solve_biclique_partition_exact(b: &BipartiteGraph, k: usize) -> Option<BicliquePartition> {
    BicliqueSearch::new(b, k, true).run()
}

struct BicliqueSearch<'a> {
    b: &'a BipartiteGraph,
    k: usize,
    exact: bool,
    blocks: Vec<Vec<usize>>,
}

impl<'a> BicliqueSearch<'a> {
    fn new(b: &'a BipartiteGraph, k: usize, exact: bool) -> Self {
        Self {
            b,
            k,
            exact,
            blocks: Vec::new(),
        }
    }

    fn run(mut self) -> Option<BicliquePartition> {
        if self.b.n() == 0 {
            return (!self.exact || self.k == 0).then(|| BicliquePartition::new(Vec::new()));
        }
        if self.search(0) {
            Some(BicliquePartition::new(self.blocks))
        } else {
            None
        }
    }

    fn compatible(&self, block: &[usize], v: usize) -> bool {
        let p = self.b.part(v);
        block
            .iter()
            .all(|&w| self.b.part(w) == p || self.b.has_edge(v, w))
    }

    fn has_side(&self, block: &[usize], p: Part) -> bool {
        block.iter().any(|&w| self.b.part(w) == p)
    }

    /// Every block missing a side can still be completed by some vertex
    /// from `next` onwards.
    fn completable(&self, next: usize) -> bool {
        self.blocks.iter().all(|block| {
            [Part::X, Part::Y].into_iter().all(|p| {
                self.has_side(block, p)
                    || (next..self.b.n()).any(|w| self.b.part(w) == p && self.compatible(block, w))
            })
        })
    }

    fn search(&mut self, v: usize) -> bool {
        let n = self.b.n();
        if !self.completable(v) {
            return false;
        }
        if self.exact && self.blocks.len() + (n - v) / 2 < self.k {
            return false;
        }
        if v == n {
            return !self.exact || self.blocks.len() == self.k;
        }
        for i in 0..self.blocks.len() {
            if self.compatible(&self.blocks[i], v) {
                self.blocks[i].push(v);
                if self.search(v + 1) {
                    return true;
                }
                self.blocks[i].pop();
            }
        }
        if self.blocks.len() < self.k {
            self.blocks.push(vec![v]);
            if self.search(v + 1) {
                return true;
            }
            self.blocks.pop();
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{bipartition, Graph};
    use crate::oracles::validate_biclique_partition;

    #[test]
    fn single_edge() {
        let b = bipartition(&Graph::from_edges(2, [(0, 1)]).unwrap()).unwrap();
        let p = solve_biclique_partition(&b, 1).unwrap();
        assert_eq!(p.blocks, vec![vec![0, 1]]);
    }

    #[test]
    fn edgeless_pair_has_none() {
        let b = bipartition(&Graph::new(2)).unwrap();
        for k in 0..4 {
            assert!(solve_biclique_partition(&b, k).is_none());
        }
    }

    #[test]
    fn exact_versus_at_most() {
        // K_{1,2}: one block only, the center cannot be shared
        let b = bipartition(&Graph::from_edges(3, [(0, 1), (0, 2)]).unwrap()).unwrap();
        assert!(solve_biclique_partition(&b, 2).is_some());
        assert!(solve_biclique_partition_exact(&b, 2).is_none());
        assert!(solve_biclique_partition_exact(&b, 1).is_some());
    }

    fn brute_force(b: &BipartiteGraph, k: usize, exact: bool) -> bool {
        let n = b.n();
        let total = (k.max(1)).pow(n as u32);
        (0..total).any(|mut code| {
            let mut blocks = vec![Vec::new(); k];
            for v in 0..n {
                blocks[code % k].push(v);
                code /= k;
            }
            let used: Vec<Vec<usize>> = blocks.into_iter().filter(|bl| !bl.is_empty()).collect();
            if exact && used.len() != k {
                return false;
            }
            validate_biclique_partition(b, &BicliquePartition::new(used), k).is_ok()
        })
    }

    proptest::proptest! {
        #![proptest_config(proptest::prelude::ProptestConfig::with_cases(150))]
        #[test]
        fn agrees_with_brute_force(
            nx in 1usize..=4,
            ny in 1usize..=4,
            k in 1usize..=3,
            bits in proptest::collection::vec(proptest::bool::weighted(0.6), 16),
        ) {
            let mut g = Graph::new(nx + ny);
            for x in 0..nx {
                for y in 0..ny {
                    if bits[x * 4 + y] {
                        g.add_edge(x, nx + y);
                    }
                }
            }
            let part = (0..nx + ny).map(|v| if v < nx { Part::X } else { Part::Y }).collect();
            let b = BipartiteGraph::new(g, part).unwrap();
            for exact in [false, true] {
                let got = if exact { solve_biclique_partition_exact(&b, k) } else { solve_biclique_partition(&b, k) };
                proptest::prop_assert_eq!(got.is_some(), brute_force(&b, k, exact));
                if let Some(p) = got {
                    proptest::prop_assert!(validate_biclique_partition(&b, &p, k).is_ok());
                }
            }
        }
    }
}
