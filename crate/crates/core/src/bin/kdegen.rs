use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use kdegen::approx::{
    max_clique_approx, vertex_cover_approx_with, CliqueSolver, ExactSolver, GreedySolver,
    VertexCoverOptions,
};
use kdegen::biclique::{list_maximal_bicliques_with, solve_induced_rl_biclique, solve_rl_biclique};
use kdegen::clique::{for_each_maximal_clique, CliqueOptions};
use kdegen::fixed::{count_l_cliques_with, for_each_l_clique, for_each_triangle, remove_triangles};
use kdegen::generate::{self, Family, GenParams};
use kdegen::graph::write_graph;
use kdegen::{decompose, degeneracy_ordering, load_graph, oracle, Error, Format, Graph};

#[derive(Parser)]
#[command(
    name = "kdegen",
    version,
    about = "Clique and biclique algorithms for sparse graphs"
)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Input graph, or - for stdin
    #[arg(long, global = true, default_value = "-")]
    input: String,
    /// edgelist or dimacs
    #[arg(long, global = true, default_value = "edgelist")]
    format: Format,
    /// Print counts only
    #[arg(long, global = true)]
    count: bool,
    /// Write results here instead of stdout
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Seed for generators
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads for parallel-eligible operations
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Cross-check the result against brute force (small inputs only)
    #[arg(long, global = true)]
    oracle: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Degeneracy and the degeneracy ordering
    Degeneracy,
    /// All maximal cliques
    MaximalCliques,
    /// All cliques of one size
    Cliques {
        #[arg(long)]
        size: usize,
    },
    Triangles,
    /// Drop every edge that lies in a triangle and write the graph
    RemoveTriangles,
    MaximalBicliques,
    /// Decide whether an (r, l)-biclique exists
    Biclique {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        l: usize,
        #[arg(long)]
        induced: bool,
    },
    VertexCover {
        /// Cover vertex-disjoint triangles first
        #[arg(long)]
        remove_triangles: bool,
    },
    MaxClique {
        #[arg(long, value_enum, default_value_t = SolverKind::Exact)]
        solver: SolverKind,
    },
    /// Write a generated graph
    Generate {
        #[arg(long)]
        family: Family,
        #[command(flatten)]
        params: GenArgs,
    },
    /// Time the main operations on generated graphs, as CSV
    Bench {
        #[arg(long)]
        family: Family,
        /// Comma-separated vertex counts
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        #[command(flatten)]
        params: GenArgs,
    },
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, default_value_t = 10)]
    n: usize,
    #[arg(long, default_value_t = 3)]
    k: usize,
    #[arg(long, default_value_t = 0.5)]
    p: f64,
    /// Part sizes for complete-multipartite, e.g. 3x3 or 2,3,4
    #[arg(long)]
    parts: Option<String>,
}

impl GenArgs {
    fn params(&self, seed: u64) -> Result<GenParams, Error> {
        Ok(GenParams {
            n: self.n,
            k: self.k,
            p: self.p,
            parts: match &self.parts {
                Some(s) => generate::parse_parts(s)?,
                None => Vec::new(),
            },
            seed,
        })
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SolverKind {
    Exact,
    Greedy,
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Input(#[from] Error),
    #[error("i/o: {0}")]
    Io(#[from] io::Error),
    #[error("oracle disagreement: {0}")]
    Oracle(String),
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("kdegen: {e}");
            ExitCode::from(1)
        }
    }
}

fn read_input(g: &Global) -> Result<Graph, CliError> {
    let reader: Box<dyn BufRead> = if g.input == "-" {
        Box::new(BufReader::new(io::stdin()))
    } else {
        Box::new(BufReader::new(File::open(&g.input)?))
    };
    let loaded = load_graph(reader, g.format)?;
    if loaded.dropped.total() > 0 {
        eprintln!(
            "kdegen: dropped {} self-loops and {} duplicate edges",
            loaded.dropped.self_loops, loaded.dropped.duplicates
        );
    }
    Ok(loaded.graph)
}

fn join(vs: &[usize]) -> String {
    vs.iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn check(agree: bool, what: &str) -> Result<(), CliError> {
    if agree {
        eprintln!("oracle: {what} agrees");
        Ok(())
    } else {
        Err(CliError::Oracle(what.to_string()))
    }
}

fn sorted(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable();
    v
}

fn run(cli: Cli) -> Result<(), CliError> {
    let g = &cli.global;
    let parallel = g.threads.is_some_and(|t| t > 1);
    if let Some(t) = g.threads {
        // only fails if a pool already exists
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global();
    }
    let mut out: Box<dyn Write> = match &g.output {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };

    match &cli.command {
        Command::Generate { family, params } => {
            let graph = generate::generate(*family, &params.params(g.seed)?)?;
            write_graph(&graph, g.format, &mut out)?;
        }
        Command::Bench {
            family,
            sizes,
            params,
        } => bench(*family, sizes, params, g.seed, parallel, &mut out)?,
        cmd => {
            let graph = read_input(g)?;
            analyze(cmd, &graph, g, parallel, &mut out)?;
        }
    }
    out.flush()?;
    Ok(())
}

fn analyze(
    cmd: &Command,
    graph: &Graph,
    g: &Global,
    parallel: bool,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    match cmd {
        Command::Degeneracy => {
            let ord = degeneracy_ordering(graph);
            writeln!(out, "k={}", ord.k())?;
            if !g.count {
                writeln!(out, "{}", join(ord.order()))?;
            }
            if g.oracle {
                check(oracle::degeneracy(graph)? == ord.k(), "degeneracy")?;
            }
        }
        Command::MaximalCliques => {
            let opts = CliqueOptions {
                parallel,
                ..CliqueOptions::default()
            };
            let mut count = 0u64;
            let mut seen = Vec::new();
            let mut failed = None;
            for_each_maximal_clique(graph, opts, |w| {
                count += 1;
                if g.oracle {
                    seen.push(sorted(w.to_vec()));
                }
                if !g.count && failed.is_none() {
                    failed = writeln!(out, "{}", join(w)).err();
                }
            });
            if let Some(e) = failed {
                return Err(e.into());
            }
            if g.count {
                writeln!(out, "{count}")?;
            }
            if g.oracle {
                let expect = oracle::maximal_cliques(graph)?;
                let got: std::collections::BTreeSet<_> = seen.iter().cloned().collect();
                check(
                    got == expect && seen.len() == expect.len(),
                    "maximal cliques",
                )?;
            }
        }
        Command::Cliques { size } => {
            if g.count {
                let c = count_l_cliques_with(graph, *size, parallel)?;
                writeln!(out, "{c}")?;
                if g.oracle {
                    let expect = if *size == 0 {
                        0
                    } else {
                        oracle::l_cliques(graph, *size)?.len()
                    };
                    check(expect as u64 == c, "clique count")?;
                }
            } else if *size == 1 || *size == 2 {
                let ord = degeneracy_ordering(graph);
                if *size == 1 {
                    for &v in ord.order() {
                        writeln!(out, "{v}")?;
                    }
                } else {
                    for (u, v) in graph.edges() {
                        let (a, b) = if ord.rank_of(u) < ord.rank_of(v) {
                            (u, v)
                        } else {
                            (v, u)
                        };
                        writeln!(out, "{a} {b}")?;
                    }
                }
            } else {
                let fam = decompose(graph);
                let mut seen = Vec::new();
                let mut failed = None;
                for_each_l_clique(&fam, *size, |w| {
                    if g.oracle {
                        seen.push(sorted(w.to_vec()));
                    }
                    if failed.is_none() {
                        failed = writeln!(out, "{}", join(w)).err();
                    }
                })?;
                if let Some(e) = failed {
                    return Err(e.into());
                }
                if g.oracle {
                    let expect = oracle::l_cliques(graph, *size)?;
                    let got: std::collections::BTreeSet<_> = seen.iter().cloned().collect();
                    check(got == expect && seen.len() == expect.len(), "cliques")?;
                }
            }
        }
        Command::Triangles => {
            let fam = decompose(graph);
            let mut count = 0usize;
            let mut seen = Vec::new();
            let mut failed = None;
            for_each_triangle(&fam, |t| {
                count += 1;
                if g.oracle {
                    let mut s = t;
                    s.sort_unstable();
                    seen.push(s);
                }
                if !g.count && failed.is_none() {
                    failed = writeln!(out, "{}", join(&t)).err();
                }
            });
            if let Some(e) = failed {
                return Err(e.into());
            }
            if g.count {
                writeln!(out, "{count}")?;
            }
            if g.oracle {
                let expect = oracle::triangles(graph)?;
                let got: std::collections::BTreeSet<_> = seen.iter().copied().collect();
                check(got == expect && count == expect.len(), "triangles")?;
            }
        }
        Command::RemoveTriangles => {
            let pruned = remove_triangles(graph);
            if g.count {
                writeln!(out, "{}", graph.m() - pruned.m())?;
            } else {
                write_graph(&pruned, g.format, &mut *out)?;
            }
            if g.oracle {
                check(
                    oracle::triangles(&pruned)?.is_empty(),
                    "triangle-free output",
                )?;
            }
        }
        Command::MaximalBicliques => {
            let found = list_maximal_bicliques_with(graph, parallel);
            if g.count {
                writeln!(out, "{}", found.len())?;
            } else {
                for b in &found {
                    writeln!(out, "{} | {}", join(&b.a), join(&b.b))?;
                }
            }
            if g.oracle {
                let expect = oracle::maximal_bicliques(graph)?;
                let got: std::collections::BTreeSet<_> = found
                    .iter()
                    .map(|b| oracle::canonical(b.a.clone(), b.b.clone()))
                    .collect();
                check(got == expect, "maximal bicliques")?;
            }
        }
        Command::Biclique { r, l, induced } => {
            let found = if *induced {
                solve_induced_rl_biclique(graph, *r, *l)?
            } else {
                solve_rl_biclique(graph, *r, *l)?
            };
            match &found {
                Some(b) => {
                    writeln!(out, "YES")?;
                    writeln!(
                        out,
                        "{} | {}",
                        join(&sorted(b.a.clone())),
                        join(&sorted(b.b.clone()))
                    )?;
                }
                None => writeln!(out, "NO")?,
            }
            if g.oracle {
                let expect = oracle::has_rl_biclique(graph, *r, *l, *induced)?;
                let valid = found.as_ref().is_none_or(|b| b.verify(graph, *induced));
                check(valid && found.is_some() == expect, "biclique decision")?;
            }
        }
        Command::VertexCover { remove_triangles } => {
            let opts = VertexCoverOptions {
                remove_triangles: *remove_triangles,
            };
            let res = vertex_cover_approx_with(graph, opts);
            writeln!(out, "size={}", res.cover.len())?;
            writeln!(out, "lp_bound={}", res.lp_lower_bound())?;
            if !g.count {
                writeln!(out, "{}", join(&res.cover))?;
            }
            if g.oracle {
                let opt = oracle::min_vertex_cover(graph)?;
                let k = degeneracy_ordering(graph).k();
                let within =
                    k == 0 || res.cover.len() as f64 <= (2.0 - 1.0 / k as f64) * opt as f64;
                let covers = graph.edges().all(|(u, v)| {
                    res.cover.binary_search(&u).is_ok() || res.cover.binary_search(&v).is_ok()
                });
                check(within && covers, "vertex cover ratio")?;
            }
        }
        Command::MaxClique { solver } => {
            let s: &dyn CliqueSolver = match solver {
                SolverKind::Exact => &ExactSolver,
                SolverKind::Greedy => &GreedySolver,
            };
            let c = max_clique_approx(graph, s)?;
            writeln!(out, "size={}", c.len())?;
            if !g.count {
                writeln!(out, "{}", join(&c))?;
            }
            if g.oracle {
                let best = oracle::max_clique(graph)?;
                let ok = graph.is_clique(&c)
                    && match solver {
                        SolverKind::Exact => c.len() == best,
                        SolverKind::Greedy => c.len() <= best,
                    };
                check(ok, "max clique")?;
            }
        }
        Command::Generate { .. } | Command::Bench { .. } => unreachable!("handled without input"),
    }
    Ok(())
}

fn bench(
    family: Family,
    sizes: &[usize],
    params: &GenArgs,
    seed: u64,
    parallel: bool,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    writeln!(out, "family,n,k,op,phase,millis")?;
    let ms = |d: std::time::Duration| d.as_secs_f64() * 1000.0;
    for &n in sizes {
        let mut p = params.params(seed)?;
        p.n = n;
        let graph = generate::generate(family, &p)?;
        let k = degeneracy_ordering(&graph).k();
        let name = family.name();
        let mut row = |op: &str, phase: &str, millis: f64| -> io::Result<()> {
            writeln!(out, "{name},{n},{k},{op},{phase},{millis:.3}")
        };

        let t = Instant::now();
        let stats = for_each_maximal_clique(
            &graph,
            CliqueOptions {
                parallel,
                ..CliqueOptions::default()
            },
            |_| {},
        );
        let total = ms(t.elapsed());
        row("maximal-cliques", "family", ms(stats.timings.family))?;
        row("maximal-cliques", "enumerate", ms(stats.timings.enumerate))?;
        row("maximal-cliques", "dedup", ms(stats.timings.dedup))?;
        row("maximal-cliques", "total", total)?;

        let t = Instant::now();
        let fam = decompose(&graph);
        let mut triangles = 0u64;
        for_each_triangle(&fam, |_| triangles += 1);
        row("triangles", "total", ms(t.elapsed()))?;

        let t = Instant::now();
        vertex_cover_approx_with(&graph, VertexCoverOptions::default());
        row("vertex-cover", "total", ms(t.elapsed()))?;
    }
    Ok(())
}
