//! Command-line interface: `mine`, `gen` and `eval`.
//!
//! Exit codes: 0 on success, 1 for invalid arguments, configuration or
//! rule input, 2 for file and graph-format errors.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::approx::mine_pioneer_approx;
use crate::error::GraphError;
use crate::graph::{load_graph, save_graph, PropertyGraph};
use crate::matching::ReachBound;
use crate::measures::{evaluate_rule, Rule};
use crate::mining::baseline::mine_baseline;
use crate::mining::pioneer::mine_pioneer;
use crate::mining::{MiningConfig, StarMode, ThetaMode};
use crate::pattern::PathPattern;
use crate::report::{write_rules, RuleFormat, RunReport};
use crate::synthgen::{generate, EdgeDistribution, GenSpec};

/// Default approximation parameters for `--algo pioneer-approx`.
pub const DEFAULT_PSI: f64 = 0.4;
pub const DEFAULT_RHO: f64 = 0.4;
pub const MAX_DEFAULT_THREADS: usize = 32;

#[derive(Parser, Debug)]
#[command(
    name = "parm",
    version,
    about = "Path association rule mining on property graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Mine frequent path association rules.
    Mine(MineArgs),
    /// Generate a synthetic graph.
    Gen(GenArgs),
    /// Compute the measures of one rule.
    Eval(EvalArgs),
}

#[derive(Args, Debug)]
struct GraphArgs {
    /// Either a path prefix (`<prefix>.vertices.tsv`, `<prefix>.edges.tsv`)
    /// or the vertex file followed by the edge file.
    #[arg(required = true, num_args = 1..=2, value_name = "GRAPH")]
    graph: Vec<PathBuf>,
}

impl GraphArgs {
    fn files(&self) -> (PathBuf, PathBuf) {
        match self.graph.as_slice() {
            [v, e] => (v.clone(), e.clone()),
            [prefix] => (
                with_suffix(prefix, ".vertices.tsv"),
                with_suffix(prefix, ".edges.tsv"),
            ),
            _ => unreachable!("clap enforces one or two paths"),
        }
    }
}

fn with_suffix(prefix: &Path, suffix: &str) -> PathBuf {
    let mut s = prefix.as_os_str().to_owned();
    s.push(suffix);
    s.into()
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Algo {
    Baseline,
    Pioneer,
    PioneerApprox,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Star {
    Capped,
    Unbounded,
}

impl From<Star> for StarMode {
    fn from(s: Star) -> Self {
        match s {
            Star::Capped => StarMode::Capped,
            Star::Unbounded => StarMode::Unbounded,
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Tsv,
    Json,
}

#[derive(Args, Debug)]
struct MineArgs {
    #[command(flatten)]
    graph: GraphArgs,
    /// Minimum support; a vertex count, or a fraction of |V| with --relative.
    #[arg(long, default_value_t = 2.0)]
    theta: f64,
    #[arg(long)]
    relative: bool,
    /// Maximum simple pattern length.
    #[arg(long, default_value_t = 2)]
    k: usize,
    #[arg(long, value_enum, default_value_t = Algo::Pioneer)]
    algo: Algo,
    /// Candidate reduction factor (pioneer-approx only).
    #[arg(long)]
    psi: Option<f64>,
    /// Sampling rate (pioneer-approx only).
    #[arg(long)]
    rho: Option<f64>,
    /// Worker threads; defaults to the available cores, at most 32.
    #[arg(long)]
    threads: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// z-value for sampling confidence intervals.
    #[arg(long, default_value_t = 1.96)]
    z: f64,
    #[arg(long, value_enum, default_value_t = Star::Capped)]
    star_mode: Star,
    #[arg(long, value_enum, default_value_t = Format::Tsv)]
    format: Format,
    /// Rules file; standard output when absent.
    #[arg(long, short)]
    output: Option<PathBuf>,
    /// JSON run report.
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Dist {
    Uniform,
    Exponential,
}

#[derive(Args, Debug)]
struct GenArgs {
    #[arg(short = 'n', long)]
    vertices: usize,
    #[arg(short = 'm', long)]
    edges: usize,
    #[arg(long, value_enum, default_value_t = Dist::Uniform)]
    dist: Dist,
    /// Decay rate of the exponential target distribution.
    #[arg(long, default_value_t = EdgeDistribution::DEFAULT_LAMBDA)]
    lambda: f64,
    #[arg(long, default_value_t = 4)]
    labels: usize,
    #[arg(long, default_value_t = 10)]
    attrs: usize,
    #[arg(long, default_value_t = 2.0)]
    avg_attrs: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output prefix; writes `<prefix>.vertices.tsv` and `<prefix>.edges.tsv`.
    #[arg(long, short, default_value = "graph")]
    out: PathBuf,
}

#[derive(Args, Debug)]
struct EvalArgs {
    #[command(flatten)]
    graph: GraphArgs,
    /// Rule in canonical text, `<pattern> => <pattern>`.
    #[arg(long, short)]
    rule: String,
    /// Hop cap for `ℓ*` steps under --star-mode capped.
    #[arg(long, default_value_t = 2)]
    k: usize,
    #[arg(long, value_enum, default_value_t = Star::Capped)]
    star_mode: Star,
}

enum Failure {
    Usage(String),
    Io(String),
}

impl From<GraphError> for Failure {
    fn from(e: GraphError) -> Self {
        Failure::Io(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

fn usage(e: impl ToString) -> Failure {
    Failure::Usage(e.to_string())
}

/// Parses `args` (including the program name), runs the command and
/// returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(stderr, "{}", e.render());
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    let result = match cli.command {
        Command::Mine(a) => cmd_mine(&a, stdout, stderr),
        Command::Gen(a) => cmd_gen(&a, stderr),
        Command::Eval(a) => cmd_eval(&a, stdout),
    };
    match result {
        Ok(()) => 0,
        Err(Failure::Usage(m)) => {
            let _ = writeln!(stderr, "error: {m}");
            1
        }
        Err(Failure::Io(m)) => {
            let _ = writeln!(stderr, "error: {m}");
            2
        }
    }
}

fn load(args: &GraphArgs) -> Result<PropertyGraph, Failure> {
    let (v, e) = args.files();
    Ok(load_graph(&v, &e)?)
}

fn default_threads() -> usize {
    std::thread::available_parallelism()
        .map_or(1, |n| n.get())
        .min(MAX_DEFAULT_THREADS)
}

fn mine_config(a: &MineArgs) -> Result<MiningConfig, Failure> {
    let approx = a.algo == Algo::PioneerApprox;
    if !approx && (a.psi.is_some() || a.rho.is_some()) {
        return Err(usage("--psi and --rho require --algo pioneer-approx"));
    }
    let cfg = MiningConfig {
        theta: a.theta,
        theta_mode: if a.relative {
            ThetaMode::Relative
        } else {
            ThetaMode::Absolute
        },
        k: a.k,
        psi: if approx {
            a.psi.unwrap_or(DEFAULT_PSI)
        } else {
            1.0
        },
        rho: if approx {
            a.rho.unwrap_or(DEFAULT_RHO)
        } else {
            1.0
        },
        threads: a.threads.unwrap_or_else(default_threads),
        seed: a.seed,
        z: a.z,
        star_mode: a.star_mode.into(),
    };
    cfg.validate().map_err(usage)?;
    Ok(cfg)
}

fn cmd_mine(a: &MineArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<(), Failure> {
    let cfg = mine_config(a)?;
    let g = load(&a.graph)?;
    let start = Instant::now();
    let (name, mined) = match a.algo {
        Algo::Baseline => ("baseline", mine_baseline(&g, &cfg)),
        Algo::Pioneer => ("pioneer", mine_pioneer(&g, &cfg)),
        Algo::PioneerApprox => ("pioneer-approx", mine_pioneer_approx(&g, &cfg)),
    };
    let mined = mined.map_err(usage)?;
    let millis = start.elapsed().as_millis() as u64;
    let format = match a.format {
        Format::Tsv => RuleFormat::Tsv,
        Format::Json => RuleFormat::Json,
    };
    match &a.output {
        Some(path) => {
            let mut w = BufWriter::new(File::create(path)?);
            write_rules(&mut w, &g, &mined.sets.rules, format)?;
            w.flush()?;
        }
        None => write_rules(stdout, &g, &mined.sets.rules, format)?,
    }
    let report = RunReport::new(name, &cfg, &g, &mined.sets, mined.stats, millis);
    if let Some(path) = &a.report {
        let mut w = BufWriter::new(File::create(path)?);
        serde_json::to_writer_pretty(&mut w, &report).map_err(io::Error::from)?;
        writeln!(w)?;
        w.flush()?;
    }
    writeln!(
        stderr,
        "{name}: theta={} patterns={} rules={} in {} ms",
        report.effective_theta,
        report.simple_patterns + report.reachability_patterns,
        report.rule_count,
        millis
    )?;
    Ok(())
}

fn cmd_gen(a: &GenArgs, stderr: &mut dyn Write) -> Result<(), Failure> {
    let spec = GenSpec {
        n_vertices: a.vertices,
        n_edges: a.edges,
        distribution: match a.dist {
            Dist::Uniform => EdgeDistribution::Uniform,
            Dist::Exponential => EdgeDistribution::Exponential { lambda: a.lambda },
        },
        n_labels: a.labels,
        n_attrs: a.attrs,
        avg_attrs_per_vertex: a.avg_attrs,
        seed: a.seed,
    };
    let g = generate(&spec).map_err(usage)?;
    let (v, e) = (
        with_suffix(&a.out, ".vertices.tsv"),
        with_suffix(&a.out, ".edges.tsv"),
    );
    save_graph(&g, &v, &e)?;
    writeln!(stderr, "wrote {} and {}", v.display(), e.display())?;
    Ok(())
}

fn cmd_eval(a: &EvalArgs, stdout: &mut dyn Write) -> Result<(), Failure> {
    let g = load(&a.graph)?;
    let (x, y) = a
        .rule
        .split_once("=>")
        .ok_or_else(|| usage("expected `<pattern> => <pattern>`"))?;
    let px = PathPattern::parse(x.trim(), &g).map_err(|e| usage(format!("antecedent: {e}")))?;
    let py = PathPattern::parse(y.trim(), &g).map_err(|e| usage(format!("consequent: {e}")))?;
    let rule = Rule::new(px, py).map_err(usage)?;
    let bound = match a.star_mode {
        Star::Capped => ReachBound::Capped(a.k),
        Star::Unbounded => ReachBound::Unbounded,
    };
    let m = evaluate_rule(&g, &rule, bound).map_err(usage)?;
    writeln!(
        stdout,
        "asupp={} rsupp={:?} conf={:?} lift={:?}",
        m.asupp,
        m.rsupp(),
        m.conf(),
        m.lift()
    )?;
    Ok(())
}
