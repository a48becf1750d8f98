//! Line-oriented text formats. Vertex ids and colors are 1-based on disk.
//!
//! | file        | lines                                   |
//! |-------------|-----------------------------------------|
//! | graph       | `p edge <n> <m>`, `e <u> <v>`, `x <u>`  |
//! | hypergraph  | `p h3 <n> <m>`, `h <a> <b> <c>`         |
//! | lists       | `l <v> <c1> <c2> ...`                   |
//! | precoloring | `pc <v> <c>`                            |
//! | mapping     | `m <v> <image>`                         |
//! | partition   | `blk <i> <v1> <v2> ...`                 |
//! | family      | `p chs <k> <a> <b>`, `A ...`, `B ...`   |
//! | cycle       | `c6 <h1> ... <h6>`                      |
//! | names       | `name <v> <label>`                      |
//!
//! Blank lines and lines starting with `c ` are comments. `x` lines list
//! the X part of a bipartite graph; without them the part containing
//! vertex 1 of each component is X.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{bipartition, BipartiteGraph, C6Embedding, Graph, Hypergraph3, Part};
use crate::hitset::SetFamily;
use crate::oracles::{BicliquePartition, Coloring, ListAssignment, PartialColoring, VertexMapping};

struct Line<'a> {
    no: usize,
    tag: &'a str,
    rest: Vec<&'a str>,
}

impl Line<'_> {
    fn err(&self, msg: impl Into<String>) -> Error {
        Error::parse(self.no, msg)
    }

    fn num(&self, i: usize) -> Result<usize> {
        let tok = self
            .rest
            .get(i)
            .ok_or_else(|| self.err(format!("`{}` line is missing field {}", self.tag, i + 1)))?;
        tok.parse()
            .map_err(|_| self.err(format!("expected a nonnegative integer, got `{tok}`")))
    }

    fn nums(&self, from: usize) -> Result<Vec<usize>> {
        (from..self.rest.len()).map(|i| self.num(i)).collect()
    }

    fn arity(&self, k: usize) -> Result<()> {
        if self.rest.len() != k {
            return Err(self.err(format!(
                "`{}` line needs {k} fields, got {}",
                self.tag,
                self.rest.len()
            )));
        }
        Ok(())
    }

    /// A 1-based vertex id converted to 0-based.
    fn vertex(&self, i: usize, n: usize) -> Result<usize> {
        let v = self.num(i)?;
        if v == 0 || v > n {
            return Err(self.err(format!("vertex {v} outside 1..={n}")));
        }
        Ok(v - 1)
    }

    fn color(&self, i: usize) -> Result<u32> {
        let c = self.num(i)?;
        if c == 0 || c > u32::MAX as usize {
            return Err(self.err(format!("color {c} must be positive")));
        }
        Ok(c as u32)
    }
}

fn lines(text: &str) -> impl Iterator<Item = Line<'_>> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let mut it = l.split_whitespace();
        let tag = it.next()?;
        (tag != "c").then(|| Line {
            no: i + 1,
            tag,
            rest: it.collect(),
        })
    })
}

fn unknown(l: &Line<'_>) -> Error {
    l.err(format!("unexpected line tag `{}`", l.tag))
}

fn header<'a>(text: &'a str, kind: &str) -> Result<(Line<'a>, Vec<usize>)> {
    let first = lines(text)
        .next()
        .ok_or_else(|| Error::parse(0, "empty input"))?;
    if first.tag != "p" || first.rest.first() != Some(&kind) {
        return Err(first.err(format!("expected header `p {kind} ...`")));
    }
    let nums = first.nums(1)?;
    Ok((first, nums))
}

/// A graph plus the `x` lines, if any.
fn parse_graph_parts(text: &str) -> Result<(Graph, Option<Vec<Part>>)> {
    let (h, nums) = header(text, "edge")?;
    let [n, m] = nums[..] else {
        return Err(h.err("header needs `p edge <n> <m>`"));
    };
    let mut g = Graph::new(n);
    let mut xs: Option<Vec<Part>> = None;
    for l in lines(text).skip(1) {
        match l.tag {
            "e" => {
                l.arity(2)?;
                let (u, v) = (l.vertex(0, n)?, l.vertex(1, n)?);
                if u == v {
                    return Err(l.err("self-loop"));
                }
                if !g.add_edge(u, v) {
                    return Err(l.err(format!("duplicate edge {} {}", u + 1, v + 1)));
                }
            }
            "x" => {
                let part = xs.get_or_insert_with(|| vec![Part::Y; n]);
                for i in 0..l.rest.len() {
                    part[l.vertex(i, n)?] = Part::X;
                }
            }
            _ => return Err(unknown(&l)),
        }
    }
    if g.m() != m {
        return Err(h.err(format!("header declares {m} edges, found {}", g.m())));
    }
    Ok((g, xs))
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    parse_graph_parts(text).map(|(g, _)| g)
}

/// A bipartite graph; parts come from `x` lines or from a BFS 2-coloring.
pub fn parse_bipartite(text: &str) -> Result<BipartiteGraph> {
    match parse_graph_parts(text)? {
        (g, Some(part)) => BipartiteGraph::new(g, part),
        (g, None) => bipartition(&g).ok_or_else(|| Error::input("graph is not bipartite")),
    }
}

pub fn write_graph(g: &Graph) -> String {
    let mut s = format!("p edge {} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        let _ = writeln!(s, "e {} {}", u + 1, v + 1);
    }
    s
}

pub fn write_bipartite(b: &BipartiteGraph) -> String {
    let mut s = write_graph(b.graph());
    for x in b.xs() {
        let _ = writeln!(s, "x {}", x + 1);
    }
    s
}

pub fn parse_hypergraph(text: &str) -> Result<Hypergraph3> {
    let (h, nums) = header(text, "h3")?;
    let [n, m] = nums[..] else {
        return Err(h.err("header needs `p h3 <n> <m>`"));
    };
    let mut edges = Vec::new();
    for l in lines(text).skip(1) {
        if l.tag != "h" {
            return Err(unknown(&l));
        }
        l.arity(3)?;
        edges.push([l.vertex(0, n)?, l.vertex(1, n)?, l.vertex(2, n)?]);
    }
    if edges.len() != m {
        return Err(h.err(format!(
            "header declares {m} hyperedges, found {}",
            edges.len()
        )));
    }
    Hypergraph3::new(n, edges)
}

pub fn write_hypergraph(h: &Hypergraph3) -> String {
    let mut s = format!("p h3 {} {}\n", h.n(), h.m());
    for e in h.edges() {
        let _ = writeln!(s, "h {} {} {}", e[0] + 1, e[1] + 1, e[2] + 1);
    }
    s
}

/// Lists for an `n`-vertex graph; every vertex needs exactly one `l` line.
pub fn parse_lists(text: &str, n: usize) -> Result<ListAssignment> {
    let mut lists: Vec<Option<Vec<u32>>> = vec![None; n];
    for l in lines(text) {
        if l.tag != "l" {
            return Err(unknown(&l));
        }
        let v = l.vertex(0, n)?;
        if lists[v].is_some() {
            return Err(l.err(format!("second list for vertex {}", v + 1)));
        }
        lists[v] = Some(
            (1..l.rest.len())
                .map(|i| l.color(i))
                .collect::<Result<_>>()?,
        );
    }
    let lists = lists
        .into_iter()
        .enumerate()
        .map(|(v, l)| l.ok_or_else(|| Error::input(format!("no list for vertex {}", v + 1))))
        .collect::<Result<_>>()?;
    Ok(ListAssignment::new(lists))
}

pub fn write_lists(lists: &ListAssignment) -> String {
    let mut s = String::new();
    for (v, l) in lists.iter().enumerate() {
        let _ = write!(s, "l {}", v + 1);
        for c in l {
            let _ = write!(s, " {c}");
        }
        s.push('\n');
    }
    s
}

pub fn parse_precoloring(text: &str, n: usize) -> Result<PartialColoring> {
    let mut p = PartialColoring::empty(n);
    for l in lines(text) {
        if l.tag != "pc" {
            return Err(unknown(&l));
        }
        l.arity(2)?;
        let v = l.vertex(0, n)?;
        if p.get(v).is_some() {
            return Err(l.err(format!("vertex {} precolored twice", v + 1)));
        }
        p.set(v, l.color(1)?);
    }
    Ok(p)
}

pub fn write_precoloring(p: &PartialColoring) -> String {
    let mut s = String::new();
    for (v, c) in p.assigned() {
        let _ = writeln!(s, "pc {} {c}", v + 1);
    }
    s
}

/// Raw `m` lines: every vertex exactly once, images as written.
fn parse_m_lines(text: &str, n: usize) -> Result<Vec<usize>> {
    let mut out = vec![None; n];
    for l in lines(text) {
        if l.tag != "m" {
            return Err(unknown(&l));
        }
        l.arity(2)?;
        let v = l.vertex(0, n)?;
        if out[v].is_some() {
            return Err(l.err(format!("vertex {} mapped twice", v + 1)));
        }
        let img = l.num(1)?;
        if img == 0 {
            return Err(l.err("images are 1-based"));
        }
        out[v] = Some(img);
    }
    out.into_iter()
        .enumerate()
        .map(|(v, i)| i.ok_or_else(|| Error::input(format!("no image for vertex {}", v + 1))))
        .collect()
}

pub fn parse_coloring(text: &str, n: usize) -> Result<Coloring> {
    let raw = parse_m_lines(text, n)?;
    if let Some(&c) = raw.iter().find(|&&c| c > u32::MAX as usize) {
        return Err(Error::input(format!("color {c} too large")));
    }
    Ok(Coloring(raw.into_iter().map(|c| c as u32).collect()))
}

pub fn write_coloring(f: &Coloring) -> String {
    let mut s = String::new();
    for (v, c) in f.colors().iter().enumerate() {
        let _ = writeln!(s, "m {} {c}", v + 1);
    }
    s
}

/// A vertex mapping; images are 1-based target vertices on disk.
pub fn parse_mapping(text: &str, n: usize) -> Result<VertexMapping> {
    Ok(VertexMapping(
        parse_m_lines(text, n)?.into_iter().map(|i| i - 1).collect(),
    ))
}

pub fn write_mapping(f: &VertexMapping) -> String {
    let mut s = String::new();
    for (v, i) in f.images().iter().enumerate() {
        let _ = writeln!(s, "m {} {}", v + 1, i + 1);
    }
    s
}

pub fn parse_partition(text: &str, n: usize) -> Result<BicliquePartition> {
    let mut blocks: Vec<(usize, Vec<usize>)> = Vec::new();
    for l in lines(text) {
        if l.tag != "blk" {
            return Err(unknown(&l));
        }
        let i = l.num(0)?;
        if blocks.iter().any(|(j, _)| *j == i) {
            return Err(l.err(format!("block {i} listed twice")));
        }
        let vs = (1..l.rest.len())
            .map(|k| l.vertex(k, n))
            .collect::<Result<_>>()?;
        blocks.push((i, vs));
    }
    blocks.sort_by_key(|(i, _)| *i);
    Ok(BicliquePartition::new(
        blocks.into_iter().map(|(_, b)| b).collect(),
    ))
}

pub fn write_partition(p: &BicliquePartition) -> String {
    let mut s = String::new();
    for (i, b) in p.blocks.iter().enumerate() {
        let _ = write!(s, "blk {}", i + 1);
        for v in b {
            let _ = write!(s, " {}", v + 1);
        }
        s.push('\n');
    }
    s
}

/// Two families over `[k]` and `k`.
pub fn parse_family(text: &str) -> Result<(SetFamily, SetFamily, u32)> {
    let (h, nums) = header(text, "chs")?;
    let [k, na, nb] = nums[..] else {
        return Err(h.err("header needs `p chs <k> <|A|> <|B|>`"));
    };
    if k > crate::hitset::MAX_K as usize {
        return Err(h.err(format!("k = {k} exceeds {}", crate::hitset::MAX_K)));
    }
    let k = k as u32;
    let (mut a, mut b) = (Vec::new(), Vec::new());
    for l in lines(text).skip(1) {
        let set: Vec<u32> = (0..l.rest.len())
            .map(|i| l.color(i))
            .collect::<Result<_>>()?;
        if let Some(&c) = set.iter().find(|&&c| c > k) {
            return Err(l.err(format!("element {c} outside 1..={k}")));
        }
        match l.tag {
            "A" => a.push(set),
            "B" => b.push(set),
            _ => return Err(unknown(&l)),
        }
    }
    if a.len() != na || b.len() != nb {
        return Err(h.err(format!(
            "header declares {na} + {nb} members, found {} + {}",
            a.len(),
            b.len()
        )));
    }
    Ok((SetFamily::new(k, a)?, SetFamily::new(k, b)?, k))
}

pub fn write_family(a: &SetFamily, b: &SetFamily) -> String {
    let mut s = format!("p chs {} {} {}\n", a.k(), a.len(), b.len());
    for (tag, fam) in [("A", a), ("B", b)] {
        for &m in fam.members() {
            s.push_str(tag);
            for c in crate::hitset::elements(m) {
                let _ = write!(s, " {c}");
            }
            s.push('\n');
        }
    }
    s
}

/// The `c6` line of a sidecar file, checked against `host`. Other lines
/// are ignored.
pub fn parse_c6(text: &str, host: &BipartiteGraph) -> Result<C6Embedding> {
    let l = lines(text)
        .find(|l| l.tag == "c6")
        .ok_or_else(|| Error::input("no `c6` line"))?;
    l.arity(6)?;
    let mut cycle = [0; 6];
    for (i, h) in cycle.iter_mut().enumerate() {
        *h = l.vertex(i, host.n())?;
    }
    C6Embedding::new(host, cycle)
}

pub fn write_c6(c: &C6Embedding) -> String {
    let h = c.cycle();
    format!(
        "c6 {} {} {} {} {} {}\n",
        h[0] + 1,
        h[1] + 1,
        h[2] + 1,
        h[3] + 1,
        h[4] + 1,
        h[5] + 1
    )
}

pub fn write_names(names: &[String]) -> String {
    let mut s = String::new();
    for (v, name) in names.iter().enumerate() {
        let _ = writeln!(s, "name {} {name}", v + 1);
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::cycle;

    #[test]
    fn graph_round_trip() {
        let b = bipartition(&cycle(6)).unwrap();
        let text = write_bipartite(&b);
        assert!(text.starts_with("p edge 6 6\ne 1 2\n"));
        let back = parse_bipartite(&text).unwrap();
        assert_eq!(back, b);
        assert_eq!(parse_graph(&text).unwrap(), cycle(6));
    }

    #[test]
    fn explicit_parts_override_bfs() {
        let text = "c a path\np edge 3 2\ne 1 2\ne 2 3\nx 2\n";
        let b = parse_bipartite(text).unwrap();
        assert_eq!(b.xs(), vec![1]);
        assert!(parse_bipartite("p edge 3 2\ne 1 2\ne 2 3\nx 1 2\n").is_err());
    }

    #[test]
    fn malformed_graphs() {
        for bad in [
            "",
            "p edge 2\n",
            "p edge 2 1\ne 1 3\n",
            "p edge 2 1\ne 1 1\n",
            "p edge 2 2\ne 1 2\ne 2 1\n",
            "p edge 2 2\ne 1 2\n",
            "p edge 2 1\nq 1 2\n",
            "p edge 2 1\ne 1 x\n",
        ] {
            assert!(
                matches!(parse_graph(bad), Err(Error::Parse { .. })),
                "{bad:?}"
            );
        }
    }

    #[test]
    fn hypergraph_round_trip() {
        let h = Hypergraph3::fano();
        assert_eq!(parse_hypergraph(&write_hypergraph(&h)).unwrap(), h);
        assert!(parse_hypergraph("p h3 3 1\nh 1 2 2\n").is_err());
    }

    #[test]
    fn certificate_round_trips() {
        let lists = ListAssignment::new(vec![vec![1, 3], vec![2]]);
        assert_eq!(parse_lists(&write_lists(&lists), 2).unwrap(), lists);
        assert!(parse_lists("l 1 1\n", 2).is_err());

        let p = PartialColoring::from_pairs(3, [(0, 2), (2, 1)]).unwrap();
        assert_eq!(parse_precoloring(&write_precoloring(&p), 3).unwrap(), p);

        let f = Coloring(vec![2, 1, 3]);
        assert_eq!(parse_coloring(&write_coloring(&f), 3).unwrap(), f);
        let m = VertexMapping(vec![0, 5, 2]);
        assert_eq!(parse_mapping(&write_mapping(&m), 3).unwrap(), m);

        let part = BicliquePartition::new(vec![vec![0, 1], vec![2, 3]]);
        assert_eq!(parse_partition(&write_partition(&part), 4).unwrap(), part);
    }

    #[test]
    fn family_round_trip() {
        let text = "p chs 3 1 1\nA 1 2\nB 2 3\n";
        let (a, b, k) = parse_family(text).unwrap();
        assert_eq!(k, 3);
        assert_eq!(write_family(&a, &b), text);
        assert!(parse_family("p chs 3 1 0\nA 4\n").is_err());
        assert!(parse_family("p chs 3 2 0\nA 1\n").is_err());
    }

    #[test]
    fn c6_sidecar() {
        let b = bipartition(&cycle(6)).unwrap();
        let c = parse_c6("name 1 a\nc6 1 2 3 4 5 6\n", &b).unwrap();
        assert_eq!(write_c6(&c), "c6 1 2 3 4 5 6\n");
        assert!(parse_c6("c6 1 3 2 4 5 6\n", &b).is_err());
    }
}
