use super::hom::{HomSearch, MAX_TARGET};
use super::listhom::Surjectivity;
use super::twosat::TwoSat;
use super::{Coloring, ListAssignment, PartialColoring};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Proper coloring of `g` with `f(v) ∈ lists[v]`, colors drawn from `1..=k`.
///
/// Instances whose lists all have at most two colors go through 2-SAT;
/// everything else through backtracking with forward checking.
pub fn solve_list_coloring(g: &Graph, lists: &ListAssignment, k: u32) -> Result<Option<Coloring>> {
    check_lists(g, lists, k)?;
    if lists.iter().any(<[u32]>::is_empty) {
        return Ok(None);
    }
    if lists.max_len() <= 2 {
        two_sat(g, lists)
    } else {
        backtracking(g, lists)
    }
}

/// The backtracking route alone, regardless of list sizes.
pub fn list_coloring_by_backtracking(
    g: &Graph,
    lists: &ListAssignment,
    k: u32,
) -> Result<Option<Coloring>> {
    check_lists(g, lists, k)?;
    backtracking(g, lists)
}

/// The 2-SAT route alone; lists longer than two are an input error.
pub fn list_coloring_by_two_sat(
    g: &Graph,
    lists: &ListAssignment,
    k: u32,
) -> Result<Option<Coloring>> {
    check_lists(g, lists, k)?;
    if lists.max_len() > 2 {
        return Err(Error::input("2-SAT route needs lists of size at most 2"));
    }
    if lists.iter().any(<[u32]>::is_empty) {
        return Ok(None);
    }
    two_sat(g, lists)
}

/// A `k`-extension of the partial coloring `p`.
pub fn solve_preext(g: &Graph, k: u32, p: &PartialColoring) -> Result<Option<Coloring>> {
    if p.n() != g.n() {
        return Err(Error::input(format!(
            "precoloring covers {} vertices, graph has {}",
            p.n(),
            g.n()
        )));
    }
    if let Some((v, c)) = p.assigned().find(|&(_, c)| c > k) {
        return Err(Error::input(format!("vertex {v} precolored {c} > k = {k}")));
    }
    if let Some((u, v)) = p.conflict(g) {
        return Err(Error::precondition(format!(
            "precoloring is improper on edge ({u}, {v})"
        )));
    }
    solve_list_coloring(g, &p.to_lists(k), k)
}

fn check_lists(g: &Graph, lists: &ListAssignment, k: u32) -> Result<()> {
    if lists.len() != g.n() {
        return Err(Error::input(format!(
            "{} lists for {} vertices",
            lists.len(),
            g.n()
        )));
    }
    for (v, l) in lists.iter().enumerate() {
        if let Some(&c) = l.iter().find(|&&c| c == 0 || c > k) {
            return Err(Error::input(format!(
                "list of vertex {v} has color {c} outside 1..={k}"
            )));
        }
    }
    Ok(())
}

fn two_sat(g: &Graph, lists: &ListAssignment) -> Result<Option<Coloring>> {
    // variable v is true when v takes lists[v][0]
    let mut sat = TwoSat::new(g.n());
    for (v, l) in lists.iter().enumerate() {
        if l.len() == 1 {
            sat.add_unit(v, true);
        }
    }
    for (u, v) in g.edges() {
        for (iu, &c) in lists.get(u).iter().enumerate() {
            if let Some(iv) = lists.get(v).iter().position(|&d| d == c) {
                sat.add_clause(u, iu != 0, v, iv != 0);
            }
        }
    }
    Ok(sat.solve().map(|asg| {
        Coloring(
            asg.iter()
                .enumerate()
                .map(|(v, &first)| {
                    let l = lists.get(v);
                    if first {
                        l[0]
                    } else {
                        l[1]
                    }
                })
                .collect(),
        )
    }))
}

fn backtracking(g: &Graph, lists: &ListAssignment) -> Result<Option<Coloring>> {
    let mut palette: Vec<u32> = lists.iter().flatten().copied().collect();
    palette.sort_unstable();
    palette.dedup();
    if palette.len() > MAX_TARGET {
        return Err(Error::input(format!(
            "{} distinct colors; at most {MAX_TARGET} supported",
            palette.len()
        )));
    }
    let mut clique = Graph::new(palette.len());
    for a in 0..palette.len() {
        for b in a + 1..palette.len() {
            clique.add_edge(a, b);
        }
    }
    let domains = lists
        .iter()
        .map(|l| {
            l.iter()
                .map(|c| palette.binary_search(c).unwrap())
                .fold(0u64, |d, i| d | 1 << i)
        })
        .collect();
    Ok(HomSearch::new(g, &clique, domains, Surjectivity::Plain)
        .run()
        .map(|img| Coloring(img.into_iter().map(|i| palette[i]).collect())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;
    use crate::oracles::validate_list_coloring;

    fn brute_force(g: &Graph, lists: &ListAssignment, k: u32) -> bool {
        let n = g.n();
        let total = (k as usize).pow(n as u32);
        (0..total).any(|mut code| {
            let f: Vec<u32> = (0..n)
                .map(|_| {
                    let c = (code % k as usize) as u32 + 1;
                    code /= k as usize;
                    c
                })
                .collect();
            (0..n).all(|v| lists.get(v).contains(&f[v])) && g.edges().all(|(u, v)| f[u] != f[v])
        })
    }

    #[test]
    fn single_edge() {
        let g = path(2);
        let same = ListAssignment::new(vec![vec![1], vec![1]]);
        assert!(solve_list_coloring(&g, &same, 1).unwrap().is_none());
        let two = ListAssignment::new(vec![vec![1, 2], vec![1, 2]]);
        let f = solve_list_coloring(&g, &two, 2).unwrap().unwrap();
        assert_ne!(f.get(0), f.get(1));
    }

    #[test]
    fn odd_cycle_two_lists() {
        let g = cycle(5);
        let lists = ListAssignment::full(5, 2);
        assert!(!brute_force(&g, &lists, 2));
        assert!(solve_list_coloring(&g, &lists, 2).unwrap().is_none());
        assert!(list_coloring_by_backtracking(&g, &lists, 2)
            .unwrap()
            .is_none());
    }

    #[test]
    fn preext_examples() {
        let c6 = cycle(6);
        let p = PartialColoring::from_pairs(6, [(0, 1), (2, 2), (4, 3)]).unwrap();
        // oracle: 3^3 completions of the free part
        let mut found = false;
        for code in 0..27 {
            let mut f = [1, 0, 2, 0, 3, 0];
            f[1] = code % 3 + 1;
            f[3] = code / 3 % 3 + 1;
            f[5] = code / 9 + 1;
            if (0..6).all(|i| f[i] != f[(i + 1) % 6]) {
                found = true;
            }
        }
        assert!(found);
        assert!(solve_preext(&c6, 3, &p).unwrap().is_some());

        let k4 = complete(4);
        assert!(solve_preext(&k4, 3, &PartialColoring::empty(4))
            .unwrap()
            .is_none());
    }

    #[test]
    fn improper_precoloring_is_precondition_error() {
        let p = PartialColoring::from_pairs(2, [(0, 1), (1, 1)]).unwrap();
        assert!(matches!(
            solve_preext(&path(2), 2, &p),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn colors_outside_palette_rejected() {
        let lists = ListAssignment::new(vec![vec![3], vec![1]]);
        assert!(solve_list_coloring(&path(2), &lists, 2).is_err());
    }

    proptest::proptest! {
        #![proptest_config(proptest::prelude::ProptestConfig::with_cases(300))]
        #[test]
        fn agrees_with_enumeration(
            n in 1usize..=8,
            k in 1u32..=4,
            bits in proptest::collection::vec(proptest::bool::weighted(0.35), 28),
            raw_lists in proptest::collection::vec(1u32..16, 8),
        ) {
            let mut g = Graph::new(n);
            let mut it = bits.into_iter();
            for u in 0..n {
                for v in u + 1..n {
                    if it.next().unwrap() {
                        g.add_edge(u, v);
                    }
                }
            }
            let lists = ListAssignment::new(
                (0..n)
                    .map(|v| (1..=k).filter(|c| raw_lists[v] >> (c - 1) & 1 == 1).collect())
                    .collect(),
            );
            let expect = brute_force(&g, &lists, k);
            let got = solve_list_coloring(&g, &lists, k).unwrap();
            proptest::prop_assert_eq!(got.is_some(), expect);
            if let Some(f) = &got {
                proptest::prop_assert!(validate_list_coloring(&g, &lists, f).is_ok());
            }
            let bt = list_coloring_by_backtracking(&g, &lists, k).unwrap();
            proptest::prop_assert_eq!(bt.is_some(), expect);
            if lists.max_len() <= 2 {
                let ts = list_coloring_by_two_sat(&g, &lists, k).unwrap();
                proptest::prop_assert_eq!(ts.is_some(), expect);
            }
        }
    }
}
