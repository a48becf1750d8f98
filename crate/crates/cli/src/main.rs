use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use chromatic_core::graph::{bipartite_complement, BipartiteGraph, C6Embedding, Hypergraph3};
use chromatic_core::hitset::{complementary_hitting_sets, elements};
use chromatic_core::io;
use chromatic_core::oracles::{
    solve_biclique_partition, solve_c6_compaction, solve_c6_retraction, solve_c6_surjective,
    solve_fall_coloring, solve_h2col, solve_list_coloring, solve_preext, ListAssignment,
    PartialColoring,
};
use chromatic_core::reductions::{
    build_c6_retract, build_compaction, build_fall3_diam4, cycle_listcol_instance, fall_lift,
    fall_preext_queries, kmm_listcol3, lift_preext, parity_lists, retract_to_preext3,
    FALL_LABELING,
};
use chromatic_core::verify::{RunConfig, Suite};
use chromatic_core::{Error, Exec};
use clap::{Parser, Subcommand};

const INPUT_ERROR: u8 = 10;
const PRECONDITION: u8 = 11;
const FALSIFIED: u8 = 12;

/// Exact solvers, hardness reductions and equivalence sweeps for coloring
/// and C6-homomorphism problems on bipartite graphs.
#[derive(Parser)]
#[command(name = "chromatic", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide an instance and print a certificate.
    Solve {
        /// listcol, preext, fall, biclique, retract, compact, surjhom, h2col or chs.
        #[arg(long)]
        problem: String,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        k: Option<u32>,
        #[arg(long)]
        lists: Option<PathBuf>,
        #[arg(long)]
        pre: Option<PathBuf>,
        /// Sidecar file with a `c6` line.
        #[arg(long)]
        c6: Option<PathBuf>,
    },
    /// Build the target instance of a reduction.
    Reduce {
        /// prop1, thm7, cor3, lem7, cor9, prop10, prop12, thm13, appA or fmps.
        #[arg(long)]
        rule: String,
        #[arg(long = "in")]
        input: PathBuf,
        /// Output path prefix; without it only the summary is printed.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Palette size of the source instance.
        #[arg(long, default_value_t = 3)]
        k: u32,
        #[arg(long)]
        lists: Option<PathBuf>,
        #[arg(long)]
        pre: Option<PathBuf>,
        #[arg(long)]
        c6: Option<PathBuf>,
    },
    /// Run an equivalence or property suite.
    Verify {
        /// A suite id or `all`.
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Wall-clock budget in seconds.
        #[arg(long)]
        budget: Option<u64>,
    },
}

struct Failure {
    code: u8,
    msg: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. } | Error::Input(_) => INPUT_ERROR,
            Error::Precondition(_) => PRECONDITION,
            Error::Falsification(_) => FALSIFIED,
        };
        Failure {
            code,
            msg: e.to_string(),
        }
    }
}

fn input_error(msg: impl Into<String>) -> Failure {
    Failure {
        code: INPUT_ERROR,
        msg: msg.into(),
    }
}

type Outcome<T = ()> = Result<T, Failure>;

fn read(path: &Path) -> Outcome<String> {
    std::fs::read_to_string(path).map_err(|e| input_error(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Outcome {
    std::fs::write(path, text).map_err(|e| input_error(format!("{}: {e}", path.display())))?;
    println!("wrote {}", path.display());
    Ok(())
}

fn required<'a>(opt: &'a Option<PathBuf>, flag: &str) -> Outcome<&'a Path> {
    opt.as_deref()
        .ok_or_else(|| input_error(format!("--{flag} is required here")))
}

fn with_suffix(prefix: &Path, suffix: &str) -> PathBuf {
    let mut s = prefix.as_os_str().to_owned();
    s.push(suffix);
    PathBuf::from(s)
}

fn configure_threads() -> Outcome {
    let Ok(raw) = std::env::var("CHROMATIC_THREADS") else {
        return Ok(());
    };
    let n: usize = raw
        .trim()
        .parse()
        .map_err(|_| input_error(format!("CHROMATIC_THREADS={raw} is not a count")))?;
    #[cfg(feature = "parallel")]
    if n > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| input_error(e.to_string()))?;
    }
    #[cfg(not(feature = "parallel"))]
    let _ = n;
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = configure_threads().and_then(|()| match cli.command {
        Command::Solve {
            problem,
            input,
            k,
            lists,
            pre,
            c6,
        } => solve(&problem, &input, k, &lists, &pre, &c6).map(|()| 0),
        Command::Reduce {
            rule,
            input,
            out,
            k,
            lists,
            pre,
            c6,
        } => reduce(&rule, &input, out.as_deref(), k, &lists, &pre, &c6).map(|()| 0),
        Command::Verify {
            suite,
            seed,
            budget,
        } => verify(&suite, seed, budget),
    });
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}

fn answer(cert: Option<String>) {
    match cert {
        Some(lines) => print!("YES\n{lines}"),
        None => println!("NO"),
    }
}

fn rooted(graph: &Path, c6: &Option<PathBuf>) -> Outcome<(BipartiteGraph, C6Embedding)> {
    let b = io::parse_bipartite(&read(graph)?)?;
    let c = io::parse_c6(&read(required(c6, "c6")?)?, &b)?;
    Ok((b, c))
}

fn solve(
    problem: &str,
    input: &Path,
    k: Option<u32>,
    lists: &Option<PathBuf>,
    pre: &Option<PathBuf>,
    c6: &Option<PathBuf>,
) -> Outcome {
    let need_k = || k.ok_or_else(|| input_error("--k is required here"));
    let cert = match problem {
        "listcol" => {
            let g = io::parse_graph(&read(input)?)?;
            let l = io::parse_lists(&read(required(lists, "lists")?)?, g.n())?;
            let k = k.unwrap_or_else(|| l.max_value().unwrap_or(0));
            solve_list_coloring(&g, &l, k)?.map(|f| io::write_coloring(&f))
        }
        "preext" => {
            let g = io::parse_graph(&read(input)?)?;
            let p = io::parse_precoloring(&read(required(pre, "pre")?)?, g.n())?;
            solve_preext(&g, need_k()?, &p)?.map(|f| io::write_coloring(&f))
        }
        "fall" => {
            let g = io::parse_graph(&read(input)?)?;
            solve_fall_coloring(&g, need_k()?).map(|f| io::write_coloring(&f))
        }
        "biclique" => {
            let b = io::parse_bipartite(&read(input)?)?;
            solve_biclique_partition(&b, need_k()? as usize).map(|p| io::write_partition(&p))
        }
        "retract" => {
            let (b, c) = rooted(input, c6)?;
            solve_c6_retraction(&b, &c).map(|f| io::write_mapping(&f))
        }
        "compact" => {
            let g = io::parse_graph(&read(input)?)?;
            solve_c6_compaction(&g).map(|f| io::write_mapping(&f))
        }
        "surjhom" => {
            let g = io::parse_graph(&read(input)?)?;
            solve_c6_surjective(&g).map(|f| io::write_mapping(&f))
        }
        "h2col" => {
            let h = io::parse_hypergraph(&read(input)?)?;
            solve_h2col(&h).map(|f| io::write_coloring(&f))
        }
        "chs" => {
            let (a, b, k) = io::parse_family(&read(input)?)?;
            complementary_hitting_sets(&a, &b, k)?.map(|s| {
                let mut line = String::from("S");
                for c in elements(s) {
                    let _ = write!(line, " {c}");
                }
                line.push('\n');
                line
            })
        }
        other => return Err(input_error(format!("unknown problem `{other}`"))),
    };
    answer(cert);
    Ok(())
}

/// What a reduction produced, ready to print and write.
#[derive(Default)]
struct Built {
    graph: String,
    sidecar: String,
    extra: Vec<(String, String)>,
    summary: Vec<String>,
}

impl Built {
    fn of(b: &BipartiteGraph) -> Self {
        Built {
            graph: io::write_bipartite(b),
            summary: vec![
                format!("vertices {}", b.n()),
                format!("edges {}", b.m()),
                format!("diameter {}", b.diameter()),
            ],
            ..Built::default()
        }
    }

    fn line(mut self, s: String) -> Self {
        self.summary.push(s);
        self
    }

    fn sidecar(mut self, c: Option<&C6Embedding>, names: &[String]) -> Self {
        if let Some(c) = c {
            self.sidecar.push_str(&io::write_c6(c));
        }
        self.sidecar.push_str(&io::write_names(names));
        self
    }

    fn file(mut self, suffix: &str, text: String) -> Self {
        self.extra.push((suffix.to_string(), text));
        self
    }
}

fn hypergraph(input: &Path) -> Outcome<Hypergraph3> {
    Ok(io::parse_hypergraph(&read(input)?)?)
}

fn reduce(
    rule: &str,
    input: &Path,
    out: Option<&Path>,
    k: u32,
    lists: &Option<PathBuf>,
    pre: &Option<PathBuf>,
    c6: &Option<PathBuf>,
) -> Outcome {
    let built = match rule {
        "prop1" => {
            let b = io::parse_bipartite(&read(input)?)?;
            let p = match pre {
                Some(path) => io::parse_precoloring(&read(path)?, b.n())?,
                None => PartialColoring::empty(b.n()),
            };
            let lift = lift_preext(&b, &p, k)?;
            Built::of(&lift.graph)
                .line(format!("k {}", lift.k))
                .file(".pre", io::write_precoloring(&lift.precoloring))
        }
        "thm7" => {
            let h = hypergraph(input)?;
            let r = build_c6_retract(&h)?;
            Built::of(&r.graph)
                .line(format!("expected {}", h.n() + 13 * h.m() + 6))
                .sidecar(Some(&r.cycle), &r.names)
        }
        "cor3" => {
            let (b, c) = rooted(input, c6)?;
            let inst = retract_to_preext3(&b, &c)?;
            Built::of(&inst.graph)
                .line(format!("k {}", inst.k))
                .sidecar(Some(&inst.cycle), &[])
                .file(".pre", io::write_precoloring(&inst.precoloring))
        }
        "lem7" => {
            let (b, c) = rooted(input, c6)?;
            let inst = build_compaction(&b, &c)?;
            Built::of(&inst.graph)
                .line(format!("added {}", inst.added()))
                .sidecar(Some(&inst.cycle), &inst.names)
        }
        "cor9" => {
            let b = io::parse_bipartite(&read(input)?)?;
            let complement = bipartite_complement(&b);
            let shifted = ListAssignment::new(
                parity_lists(&b)
                    .iter()
                    .map(|l| l.iter().map(|&t| t + 1).collect())
                    .collect(),
            );
            Built::of(&complement).file(".lists", io::write_lists(&shifted))
        }
        "prop10" => {
            let b = io::parse_bipartite(&read(input)?)?;
            let lift = fall_lift(&b, k)?;
            Built::of(&lift.graph).line(format!("k {}", lift.k))
        }
        "prop12" => {
            let b = io::parse_bipartite(&read(input)?)?;
            let queries = fall_preext_queries(&b, FALL_LABELING)?;
            let mut built = Built::of(&b).line(format!("queries {}", queries.len()));
            for (i, (c, p)) in queries.iter().enumerate() {
                built = built
                    .file(&format!(".q{}.pre", i + 1), io::write_precoloring(p))
                    .file(&format!(".q{}.meta", i + 1), io::write_c6(c));
            }
            built
        }
        "thm13" => {
            let h = hypergraph(input)?;
            let inst = build_fall3_diam4(&h)?;
            Built::of(&inst.graph)
                .line(format!("expected {}", 2 * h.n() + h.m() + 2))
                .sidecar(None, &inst.names())
        }
        "appA" => {
            let h = hypergraph(input)?;
            let inst = kmm_listcol3(&h)?;
            Built::of(&inst.graph)
                .line(format!("k {}", inst.k))
                .file(".lists", io::write_lists(&inst.lists))
        }
        "fmps" => {
            let b = io::parse_bipartite(&read(input)?)?;
            let l = io::parse_lists(&read(required(lists, "lists")?)?, b.n())?;
            let inst = cycle_listcol_instance(&b, &l)?;
            Built::of(&inst.graph).sidecar(Some(&inst.cycle), &[])
        }
        other => return Err(input_error(format!("unknown rule `{other}`"))),
    };
    println!("rule {rule}");
    for line in &built.summary {
        println!("{line}");
    }
    if let Some(prefix) = out {
        write(&with_suffix(prefix, ".gr"), &built.graph)?;
        if !built.sidecar.is_empty() {
            write(&with_suffix(prefix, ".meta"), &built.sidecar)?;
        }
        for (suffix, text) in &built.extra {
            write(&with_suffix(prefix, suffix), text)?;
        }
    }
    Ok(())
}

fn verify(suite: &str, seed: u64, budget: Option<u64>) -> Outcome<u8> {
    let suites = if suite == "all" {
        Suite::all()
    } else {
        vec![Suite::from_id(suite).ok_or_else(|| input_error(format!("unknown suite `{suite}`")))?]
    };
    let run = RunConfig {
        exec: Exec::default(),
        deadline: budget.map(|s| Instant::now() + Duration::from_secs(s)),
        mutate: false,
    };
    let (mut failed, mut incomplete) = (false, false);
    let (mut instances, mut mismatches) = (0, 0);
    for s in suites {
        let report = s.run(seed, &run);
        println!("{report}");
        failed |= !report.passed();
        incomplete |= report.incomplete();
        instances += report.instances();
        mismatches += report.mismatches();
    }
    if suite == "all" {
        let verdict = if failed { "fail" } else { "pass" };
        println!("suite all {verdict} {instances} {mismatches}");
    }
    Ok(if failed {
        1
    } else if incomplete {
        2
    } else {
        0
    })
}
