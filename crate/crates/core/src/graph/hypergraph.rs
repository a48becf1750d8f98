use crate::error::{Error, Result};

/// A 3-uniform hypergraph on vertices `0..n`.
///
/// Each triple is stored sorted; duplicate triples are rejected.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Hypergraph3 {
    n: usize,
    edges: Vec<[usize; 3]>,
}

impl Hypergraph3 {
    pub fn new(n: usize, edges: impl IntoIterator<Item = [usize; 3]>) -> Result<Self> {
        let mut out: Vec<[usize; 3]> = Vec::new();
        for mut e in edges {
            e.sort_unstable();
            if e[2] >= n {
                return Err(Error::input(format!(
                    "hyperedge {e:?} out of range for {n} vertices"
                )));
            }
            if e[0] == e[1] || e[1] == e[2] {
                return Err(Error::input(format!("hyperedge {e:?} repeats a vertex")));
            }
            if out.contains(&e) {
                return Err(Error::input(format!("duplicate hyperedge {e:?}")));
            }
            out.push(e);
        }
        Ok(Self { n, edges: out })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[[usize; 3]] {
        &self.edges
    }

    /// Vertices lying in no hyperedge.
    pub fn uncovered_vertices(&self) -> Vec<usize> {
        let mut covered = vec![false; self.n];
        for e in &self.edges {
            for &v in e {
                covered[v] = true;
            }
        }
        (0..self.n).filter(|&v| !covered[v]).collect()
    }

    /// Drops uncovered vertices and relabels the rest in increasing order.
    /// 2-colorability is unchanged.
    pub fn without_uncovered(&self) -> Self {
        let mut map = vec![usize::MAX; self.n];
        let mut next = 0;
        for e in &self.edges {
            for &v in e {
                map[v] = 0;
            }
        }
        for slot in map.iter_mut() {
            if *slot == 0 {
                *slot = next;
                next += 1;
            }
        }
        Self {
            n: next,
            edges: self.edges.iter().map(|e| e.map(|v| map[v])).collect(),
        }
    }

    /// Sorted edge list, the dedupe key used by the exhaustive corpus.
    pub fn canonical_edges(&self) -> Vec<[usize; 3]> {
        let mut e = self.edges.clone();
        e.sort_unstable();
        e
    }

    /// The Fano plane: 7 points, 7 lines; not 2-colorable.
    pub fn fano() -> Self {
        Self::new(
            7,
            [
                [0, 1, 2],
                [0, 3, 4],
                [0, 5, 6],
                [1, 3, 5],
                [1, 4, 6],
                [2, 3, 6],
                [2, 4, 5],
            ],
        )
        .unwrap()
    }

    /// All `C(n, 3)` triples on `n` vertices.
    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    edges.push([a, b, c]);
                }
            }
        }
        Self { n, edges }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(Hypergraph3::new(3, [[0, 1, 1]]).is_err());
        assert!(Hypergraph3::new(3, [[0, 1, 3]]).is_err());
        assert!(Hypergraph3::new(3, [[0, 1, 2], [2, 1, 0]]).is_err());
        let h = Hypergraph3::new(4, [[2, 0, 1]]).unwrap();
        assert_eq!(h.edges(), &[[0, 1, 2]]);
        assert_eq!(h.uncovered_vertices(), vec![3]);
    }

    #[test]
    fn fano_is_a_projective_plane() {
        let f = Hypergraph3::fano();
        for a in 0..7 {
            for b in a + 1..7 {
                let lines = f
                    .edges()
                    .iter()
                    .filter(|e| e.contains(&a) && e.contains(&b))
                    .count();
                assert_eq!(lines, 1);
            }
        }
    }

    #[test]
    fn drop_uncovered_relabels() {
        let h = Hypergraph3::new(5, [[1, 3, 4]]).unwrap();
        let c = h.without_uncovered();
        assert_eq!(c.n(), 3);
        assert_eq!(c.edges(), &[[0, 1, 2]]);
    }
}
