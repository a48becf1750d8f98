use super::Coloring;
use crate::graph::Graph;

/// A `k`-fall-coloring of `g`: a proper coloring with colors `1..=k` in
/// which every closed neighborhood sees all `k` colors.
///
/// Vertices are colored in index order. A branch is cut as soon as some
/// vertex can no longer see every color in its closed neighborhood, given
/// the colors still available to its uncolored neighbors. Colors are
/// interchangeable, so a vertex never opens more than one new color.
///
/// Panics if `k > 64`.
pub fn solve_fall_coloring(g: &Graph, k: u32) -> Option<Coloring> {
    assert!((1..=64).contains(&k), "k must be in 1..=64");
    let n = g.n();
    if (0..n).any(|v| g.degree(v) + 1 < k as usize) {
        return None;
    }
    let mut s = FallSearch::new(g, k);
    if s.search(0, 0) {
        Some(Coloring(s.color))
    } else {
        None
    }
}

struct FallSearch<'a> {
    g: &'a Graph,
    k: u32,
    full: u64,
    color: Vec<u32>,
    /// number of colored neighbors of v with color c (index v * k + c - 1)
    nbr_count: Vec<u16>,
    /// vertices within distance 2, including v itself
    ball2: Vec<Vec<usize>>,
}

impl<'a> FallSearch<'a> {
    fn new(g: &'a Graph, k: u32) -> Self {
        let n = g.n();
        let ball2 = (0..n)
            .map(|v| {
                let mut b = vec![v];
                for &w in g.neighbors(v) {
                    b.push(w);
                    b.extend_from_slice(g.neighbors(w));
                }
                b.sort_unstable();
                b.dedup();
                b
            })
            .collect();
        Self {
            g,
            k,
            full: if k == 64 { u64::MAX } else { (1u64 << k) - 1 },
            color: vec![0; n],
            nbr_count: vec![0; n * k as usize],
            ball2,
        }
    }

    fn forbidden(&self, v: usize) -> u64 {
        let base = v * self.k as usize;
        (0..self.k as usize).fold(0, |m, c| {
            if self.nbr_count[base + c] > 0 {
                m | 1 << c
            } else {
                m
            }
        })
    }

    fn reachable(&self, v: usize) -> u64 {
        let mut seen = 0u64;
        for &w in std::iter::once(&v).chain(self.g.neighbors(v)) {
            seen |= match self.color[w] {
                0 => self.full & !self.forbidden(w),
                c => 1 << (c - 1),
            };
        }
        seen
    }

    fn set(&mut self, v: usize, c: u32) {
        self.color[v] = c;
        for &w in self.g.neighbors(v) {
            self.nbr_count[w * self.k as usize + c as usize - 1] += 1;
        }
    }

    fn clear(&mut self, v: usize) {
        let c = self.color[v];
        for &w in self.g.neighbors(v) {
            self.nbr_count[w * self.k as usize + c as usize - 1] -= 1;
        }
        self.color[v] = 0;
    }

    fn search(&mut self, v: usize, max_used: u32) -> bool {
        if v == self.g.n() {
            return true;
        }
        let forbidden = self.forbidden(v);
        let limit = self.k.min(max_used + 1);
        for c in 1..=limit {
            if forbidden >> (c - 1) & 1 == 1 {
                continue;
            }
            self.set(v, c);
            let ok = (0..self.ball2[v].len()).all(|i| {
                let w = self.ball2[v][i];
                self.reachable(w) == self.full
            });
            if ok && self.search(v + 1, max_used.max(c)) {
                return true;
            }
            self.clear(v);
        }
        false
    }
}

/// Whether `f` is a proper coloring into `1..=k` whose every color class
/// contains a b-vertex.
pub fn is_b_coloring(g: &Graph, f: &Coloring, k: u32) -> bool {
    if f.len() != g.n() || f.colors().iter().any(|&c| c == 0 || c > k) {
        return false;
    }
    if g.edges().any(|(u, v)| f.get(u) == f.get(v)) {
        return false;
    }
    let mut has_b_vertex = vec![false; k as usize + 1];
    for v in 0..g.n() {
        if sees_all(g, f, v, k) {
            has_b_vertex[f.get(v) as usize] = true;
        }
    }
    has_b_vertex[1..].iter().all(|&b| b)
}

pub(crate) fn sees_all(g: &Graph, f: &Coloring, v: usize, k: u32) -> bool {
    let mut seen = 1u128 << f.get(v);
    for &w in g.neighbors(v) {
        seen |= 1 << f.get(w);
    }
    (1..=k).all(|c| seen >> c & 1 == 1)
}

/// Visits every proper `k`-coloring of `g` that is a b-coloring; returns
/// `(proper colorings examined, b-colorings visited)`.
pub fn enumerate_b_colorings(g: &Graph, k: u32, mut visit: impl FnMut(&Coloring)) -> (u64, u64) {
    let n = g.n();
    let mut f = Coloring(vec![0; n]);
    let mut counts = (0, 0);
    fn rec(
        g: &Graph,
        k: u32,
        v: usize,
        f: &mut Coloring,
        counts: &mut (u64, u64),
        visit: &mut dyn FnMut(&Coloring),
    ) {
        if v == g.n() {
            counts.0 += 1;
            if is_b_coloring(g, f, k) {
                counts.1 += 1;
                visit(f);
            }
            return;
        }
        for c in 1..=k {
            if g.neighbors(v).iter().any(|&w| w < v && f.0[w] == c) {
                continue;
            }
            f.0[v] = c;
            rec(g, k, v + 1, f, counts, visit);
        }
        f.0[v] = 0;
    }
    rec(g, k, 0, &mut f, &mut counts, &mut visit);
    counts
}
