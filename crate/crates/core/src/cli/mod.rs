//! Command-line front end: batch solve, verify, analyze, generate and the
//! self-check suite.
//!
//! Records go to stdout in input order, one per graph. Exit status is 0 on
//! success, 1 when any graph failed to parse or verify or a suite failed,
//! and 2 on usage or I/O errors.

mod input;
mod report;
mod suite;

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use crate::colouring::EdgeColouring;
use crate::graph::{
    enumerate_cubic, make_named, random_subcubic, to_edge_list, to_graph6, Graph, NamedGraph,
};
use crate::solver::{
    descend_from, find_two_factor, heuristic_descent, lemma1_colouring, solve_exact, Method,
    SolveResult,
};
use crate::structure::verify_theorem1;

pub use input::{read_graphs, GraphItem, InputError, EDGE_LIST_SEPARATOR};
pub use report::{to_dot, AnalyzeRecord, ErrorRecord, SolveRecord, VerifyRecord};
pub use suite::{run_suites, SuiteLine, Verdict, SUITE_ORDERS};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    Graph6,
    Edgelist,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
    Dot,
}

#[derive(Debug, Parser)]
#[command(
    name = "deltamin",
    version,
    about = "δ-minimum edge-colourings of subcubic graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Input graph encoding.
    #[arg(long, value_enum, default_value = "graph6", global = true)]
    pub format: InputFormat,
    /// Output format: JSON lines, CSV, or coloured DOT graphs.
    #[arg(long = "out", value_enum, default_value = "json", global = true)]
    pub output: OutputFormat,
    /// Largest order solved exactly; bigger graphs get an upper bound.
    #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u64).range(4..), global = true)]
    pub exact_limit: u64,
    #[arg(long, default_value_t = 0, global = true)]
    pub seed: u64,
    /// Worker threads; graphs are processed in parallel, output stays ordered.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..), global = true)]
    pub jobs: u64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute s(G) with a witness colouring for each input graph.
    Solve {
        /// Input file, `-` for stdin.
        #[arg(default_value = "-")]
        input: PathBuf,
    },
    /// Check colourings against the structure of δ-minimum colourings.
    Verify {
        #[arg(default_value = "-")]
        input: PathBuf,
        /// JSON lines with a `colours` array each, one per input graph.
        /// Output of `solve` works as is.
        #[arg(long)]
        colouring: PathBuf,
    },
    /// Solve, classify and verify each graph.
    Analyze {
        #[arg(default_value = "-")]
        input: PathBuf,
    },
    /// Write graphs in the input format.
    Generate {
        #[command(subcommand)]
        what: Generate,
    },
    /// Run the self-check suites on small cubic graphs.
    Suite,
}

#[derive(Debug, Subcommand)]
pub enum Generate {
    /// All connected cubic graphs of the given order, up to isomorphism.
    Cubic { n: usize },
    /// Random connected subcubic graphs; graph `i` uses seed `seed + i`.
    Random {
        n: usize,
        #[arg(long, default_value_t = 1)]
        count: u64,
    },
    /// A named graph: k4, k33, petersen, cycle<k>, flower<k>.
    Named { name: NamedGraph },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CommandKind {
    Solve,
    Verify,
    Analyze,
    Generate,
    Suite,
}

/// Validated settings shared by all commands.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub command: CommandKind,
    pub input_path: Option<PathBuf>,
    pub format: InputFormat,
    pub output: OutputFormat,
    pub exact_limit: usize,
    pub seed: u64,
    pub jobs: usize,
}

impl RunConfig {
    pub fn from_cli(cli: &Cli) -> RunConfig {
        let (command, input_path) = match &cli.command {
            Command::Solve { input } => (CommandKind::Solve, Some(input.clone())),
            Command::Verify { input, .. } => (CommandKind::Verify, Some(input.clone())),
            Command::Analyze { input } => (CommandKind::Analyze, Some(input.clone())),
            Command::Generate { .. } => (CommandKind::Generate, None),
            Command::Suite => (CommandKind::Suite, None),
        };
        RunConfig {
            command,
            input_path,
            format: cli.format,
            output: cli.output,
            exact_limit: cli.exact_limit as usize,
            seed: cli.seed,
            jobs: cli.jobs as usize,
        }
    }

    /// Seed used for graph `index`, independent of scheduling.
    fn graph_seed(&self, index: usize) -> u64 {
        self.seed.wrapping_add(index as u64)
    }
}

/// Local-search rounds for graphs above the exact limit.
fn descent_rounds(g: &Graph) -> usize {
    50 * g.edge_count().max(1)
}

/// Exact below the limit; above it, a 2-factor colouring improved by local
/// search when the graph is cubic with a perfect matching, and a pure local
/// search otherwise.
pub fn solve_graph<'g>(g: &'g Graph, cfg: &RunConfig, index: usize) -> SolveResult<'g> {
    let seed = cfg.graph_seed(index);
    if g.vertex_count() <= cfg.exact_limit {
        return solve_exact(g);
    }
    if let Some(f) = g.is_cubic().then(|| find_two_factor(g)).flatten() {
        let start = lemma1_colouring(g, &f).expect("2-factor of this graph");
        return descend_from(start, Method::TwoFactorUpperBound, seed, descent_rounds(g))
            .expect("2-factor colourings are proper");
    }
    heuristic_descent(g, seed, descent_rounds(g))
}

/// Parses `args` and runs the command with the process's stdio.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let _ = env_logger::Builder::from_env(env_logger::Env::new().filter("DELTAMIN_LOG")).try_init();
    let stdin = std::io::stdin();
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    match run(
        &cli,
        &mut stdin.lock(),
        &mut stdout.lock(),
        &mut stderr.lock(),
    ) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            2
        }
    }
}

fn read_source(path: &PathBuf, stdin: &mut dyn Read) -> Result<String> {
    let mut text = String::new();
    if path.as_os_str() == "-" {
        stdin.read_to_string(&mut text).context("reading stdin")?;
    } else {
        text =
            std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    }
    Ok(text)
}

/// Runs a parsed command line. Returns the exit status; `Err` is reserved
/// for I/O and usage problems.
pub fn run(
    cli: &Cli,
    stdin: &mut dyn Read,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32> {
    let cfg = RunConfig::from_cli(cli);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs)
        .build()
        .context("building worker pool")?;
    match &cli.command {
        Command::Solve { input } => {
            let text = read_source(input, stdin)?;
            cmd_solve(&pool, &cfg, &text, out, err)
        }
        Command::Verify { input, colouring } => {
            if input.as_os_str() == "-" && colouring.as_os_str() == "-" {
                bail!("graphs and colourings cannot both come from stdin");
            }
            let text = read_source(input, stdin)?;
            let colourings = read_source(colouring, stdin)?;
            cmd_verify(&pool, &cfg, &text, &colourings, out, err)
        }
        Command::Analyze { input } => {
            let text = read_source(input, stdin)?;
            cmd_analyze(&pool, &cfg, &text, out, err)
        }
        Command::Generate { what } => cmd_generate(&cfg, what, out),
        Command::Suite => cmd_suite(&pool, &cfg, out),
    }
}

/// One output chunk per input item, in order; errors are kept in the stream
/// for JSON and sent to `err` for the other formats.
enum Chunk {
    Record(String),
    Error(ErrorRecord),
}

fn emit(
    cfg: &RunConfig,
    chunks: Vec<Chunk>,
    header: Option<&str>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<bool> {
    let mut any_error = false;
    if let (OutputFormat::Csv, Some(h)) = (cfg.output, header) {
        writeln!(out, "{h}")?;
    }
    for chunk in chunks {
        match chunk {
            Chunk::Record(s) => out.write_all(s.as_bytes())?,
            Chunk::Error(e) => {
                any_error = true;
                log::warn!("input item {} (line {}): {}", e.index, e.line, e.error);
                if cfg.output == OutputFormat::Json {
                    out.write_all(report::json_line(&e).as_bytes())?;
                } else {
                    writeln!(err, "line {}: {}", e.line, e.error)?;
                }
            }
        }
    }
    out.flush()?;
    Ok(any_error)
}

fn cmd_solve(
    pool: &rayon::ThreadPool,
    cfg: &RunConfig,
    text: &str,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32> {
    let items = read_graphs(text, cfg.format);
    let chunks: Vec<Chunk> = pool.install(|| {
        items
            .par_iter()
            .map(|item| match item {
                Err(e) => Chunk::Error(e.into()),
                Ok(item) => {
                    let r = solve_graph(&item.graph, cfg, item.index);
                    log::info!("graph {}: s = {} ({:?})", item.index, r.s_value, r.method);
                    Chunk::Record(match cfg.output {
                        OutputFormat::Json => report::json_line(&SolveRecord {
                            index: item.index,
                            line: item.line,
                            name: item.name.clone(),
                            n: item.graph.vertex_count(),
                            m: item.graph.edge_count(),
                            s: r.s_value,
                            method: r.method,
                            colours: r.witness.colours().to_vec(),
                        }),
                        OutputFormat::Csv => {
                            csv_row(item, r.s_value, report::method_name(r.method))
                        }
                        OutputFormat::Dot => to_dot(&item.name, &r.witness),
                    })
                }
            })
            .collect()
    });
    let failed = emit(cfg, chunks, Some("name,n,m,s,method"), out, err)?;
    Ok(i32::from(failed))
}

fn csv_row(item: &GraphItem, s: usize, last: &str) -> String {
    format!(
        "{},{},{},{},{}\n",
        report::csv_field(&item.name),
        item.graph.vertex_count(),
        item.graph.edge_count(),
        s,
        last
    )
}

fn cmd_verify(
    pool: &rayon::ThreadPool,
    cfg: &RunConfig,
    text: &str,
    colourings: &str,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32> {
    let items = read_graphs(text, cfg.format);
    let lines: Vec<&str> = colourings
        .lines()
        .filter(|l| !l.trim().is_empty())
        .collect();
    let mut all_pass = true;
    let chunks: Vec<(Chunk, bool)> = pool.install(|| {
        items
            .par_iter()
            .enumerate()
            .map(|(k, item)| {
                let item = match item {
                    Err(e) => return (Chunk::Error(e.into()), false),
                    Ok(item) => item,
                };
                let fail = |msg: String| {
                    (
                        Chunk::Error(ErrorRecord {
                            index: item.index,
                            line: item.line,
                            error: msg,
                            offset: None,
                        }),
                        false,
                    )
                };
                let Some(text) = lines.get(k) else {
                    return fail("no colouring for this graph".into());
                };
                let c = match EdgeColouring::from_json(&item.graph, text) {
                    Ok(c) => c,
                    Err(e) => return fail(e.to_string()),
                };
                let s_known = (item.graph.vertex_count() <= cfg.exact_limit)
                    .then(|| solve_exact(&item.graph).s_value);
                let report = verify_theorem1(&c, s_known);
                let pass = report.all_pass();
                let chunk = match cfg.output {
                    OutputFormat::Json => Chunk::Record(report::json_line(&VerifyRecord {
                        index: item.index,
                        line: item.line,
                        name: item.name.clone(),
                        n: item.graph.vertex_count(),
                        m: item.graph.edge_count(),
                        pass,
                        report,
                    })),
                    OutputFormat::Csv => Chunk::Record(csv_row(
                        item,
                        c.delta_count(),
                        if pass { "pass" } else { "fail" },
                    )),
                    OutputFormat::Dot => Chunk::Record(to_dot(&item.name, &c)),
                };
                (chunk, pass)
            })
            .collect()
    });
    if lines.len() > items.len() {
        writeln!(
            err,
            "{} colourings for {} graphs; extra lines ignored",
            lines.len(),
            items.len()
        )?;
    }
    let chunks = chunks
        .into_iter()
        .map(|(chunk, pass)| {
            all_pass &= pass;
            chunk
        })
        .collect();
    let failed = emit(cfg, chunks, Some("name,n,m,s,verdict"), out, err)?;
    Ok(i32::from(failed || !all_pass))
}

fn cmd_analyze(
    pool: &rayon::ThreadPool,
    cfg: &RunConfig,
    text: &str,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32> {
    let items = read_graphs(text, cfg.format);
    let mut all_pass = true;
    let chunks: Vec<(Chunk, bool)> = pool.install(|| {
        items
            .par_iter()
            .map(|item| {
                let item = match item {
                    Err(e) => return (Chunk::Error(e.into()), false),
                    Ok(item) => item,
                };
                let g = &item.graph;
                let r = solve_graph(g, cfg, item.index);
                let s_known = (r.method == Method::Exact).then_some(r.s_value);
                let report = verify_theorem1(&r.witness, s_known);
                let verified = report.all_pass();
                let chunk = match cfg.output {
                    OutputFormat::Json => Chunk::Record(report::json_line(&AnalyzeRecord {
                        index: item.index,
                        line: item.line,
                        name: item.name.clone(),
                        n: g.vertex_count(),
                        m: g.edge_count(),
                        s: r.s_value,
                        method: r.method,
                        cubic: g.is_cubic(),
                        girth: g.girth(),
                        counts: report.counts,
                        strong_matching: r
                            .witness
                            .colour_class(crate::colouring::Colour::Delta)
                            .is_strong_matching(g),
                        verified,
                        failing: report.failures().map(|c| c.id).collect(),
                        colours: r.witness.colours().to_vec(),
                    })),
                    OutputFormat::Csv => {
                        Chunk::Record(csv_row(item, r.s_value, report::method_name(r.method)))
                    }
                    OutputFormat::Dot => Chunk::Record(to_dot(&item.name, &r.witness)),
                };
                // upper-bound witnesses need not be δ-minimum, so only exact
                // results decide the exit status
                (chunk, verified || r.method != Method::Exact)
            })
            .collect()
    });
    let chunks = chunks
        .into_iter()
        .map(|(chunk, pass)| {
            all_pass &= pass;
            chunk
        })
        .collect();
    let failed = emit(cfg, chunks, Some("name,n,m,s,method"), out, err)?;
    Ok(i32::from(failed || !all_pass))
}

fn cmd_generate(cfg: &RunConfig, what: &Generate, out: &mut dyn Write) -> Result<i32> {
    let graphs: Vec<Graph> = match what {
        Generate::Cubic { n } => enumerate_cubic(*n)?,
        Generate::Random { n, count } => (0..*count)
            .map(|i| random_subcubic(*n, cfg.seed.wrapping_add(i)))
            .collect(),
        Generate::Named { name } => vec![make_named(*name)?],
    };
    for (i, g) in graphs.iter().enumerate() {
        match cfg.format {
            InputFormat::Graph6 => writeln!(out, "{}", to_graph6(g))?,
            InputFormat::Edgelist => {
                if i > 0 {
                    writeln!(out, "{EDGE_LIST_SEPARATOR}")?;
                }
                out.write_all(to_edge_list(g).as_bytes())?;
            }
        }
    }
    out.flush()?;
    Ok(0)
}

fn cmd_suite(pool: &rayon::ThreadPool, cfg: &RunConfig, out: &mut dyn Write) -> Result<i32> {
    writeln!(out, "{}", suite::corpus_note())?;
    let lines = pool.install(|| run_suites(cfg.exact_limit, cfg.seed));
    for line in &lines {
        writeln!(out, "{line}")?;
    }
    let failed = lines.iter().any(|l| l.verdict == Verdict::Fail);
    writeln!(
        out,
        "{}",
        if failed { "suite: FAIL" } else { "suite: pass" }
    )?;
    out.flush()?;
    Ok(i32::from(failed))
}
