use super::Coloring;
use crate::graph::Hypergraph3;

/// A 2-coloring (colors 1 and 2) with no monochromatic hyperedge.
///
/// Branches on vertices in index order, color 1 first. Whenever two
/// vertices of a triple share a color the third is forced to the other.
pub fn solve_h2col(h: &Hypergraph3) -> Option<Coloring> {
    let mut incident = vec![Vec::new(); h.n()];
    for (j, e) in h.edges().iter().enumerate() {
        for &v in e {
            incident[v].push(j);
        }
    }
    let mut s = H2Search {
        h,
        incident,
        color: vec![0; h.n()],
        trail: Vec::new(),
    };
    if s.search(0) {
        Some(Coloring(s.color))
    } else {
        None
    }
}

struct H2Search<'a> {
    h: &'a Hypergraph3,
    incident: Vec<Vec<usize>>,
    color: Vec<u32>,
    trail: Vec<usize>,
}

impl H2Search<'_> {
    /// Assigns `v := c` and propagates; false on a monochromatic triple.
    fn assign(&mut self, v: usize, c: u32) -> bool {
        let mut queue = vec![(v, c)];
        while let Some((v, c)) = queue.pop() {
            match self.color[v] {
                0 => {
                    self.color[v] = c;
                    self.trail.push(v);
                }
                d if d == c => continue,
                _ => return false,
            }
            for &j in &self.incident[v] {
                let e = self.h.edges()[j];
                let others: Vec<usize> = e.iter().copied().filter(|&w| w != v).collect();
                let (a, b) = (self.color[others[0]], self.color[others[1]]);
                if a == c && b == c {
                    return false;
                }
                if a == c && b == 0 {
                    queue.push((others[1], 3 - c));
                } else if b == c && a == 0 {
                    queue.push((others[0], 3 - c));
                }
            }
        }
        true
    }

    fn undo(&mut self, mark: usize) {
        for v in self.trail.drain(mark..) {
            self.color[v] = 0;
        }
    }

    fn search(&mut self, from: usize) -> bool {
        let Some(v) = (from..self.h.n()).find(|&v| self.color[v] == 0) else {
            return true;
        };
        for c in [1, 2] {
            let mark = self.trail.len();
            if self.assign(v, c) && self.search(v + 1) {
                return true;
            }
            self.undo(mark);
        }
        false
    }
}
