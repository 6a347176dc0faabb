//! Implementations of the single-shot subcommands.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::Context;
use clap::{Args, Subcommand, ValueEnum};
use frugal_core::bounds::{
    binomial_tail_bound_check, c_beta, erdos_gallai_bound, kst_bound, partial_exp_log_gap,
    randomgraph_k, sigma_bound_cycle, BoundReport,
};
use frugal_core::generators::{grid_graph, pg_incidence, prune, sample_gnp, GnpSpec};
use frugal_core::graph::Graph;
use frugal_core::hypergraph::{Colouring, Hypergraph};
use frugal_core::reduction::{
    build_basic, build_cycle_reduction, build_kbt_reduction, certify, ReductionParams,
};
use frugal_core::solvers::{
    exact_frugal_colouring_capped, exact_hypergraph_colouring_capped, greedy_colour,
    resample_colour, verify_avoiding, verify_frugal, FrugalVerdict, DEFAULT_EXACT_CAP,
};

use crate::Failure;

/// Girth is reported in generate summaries only up to this vertex count.
const GIRTH_REPORT_CAP: usize = 2048;

pub type CmdResult = Result<(), Failure>;

fn read_to_string(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))
        .map_err(Failure::Instance)
}

fn write_or_stdout(out: &Option<PathBuf>, data: &str) -> CmdResult {
    match out {
        Some(path) => {
            fs::write(path, data)
                .with_context(|| format!("writing {}", path.display()))
                .map_err(Failure::Instance)?;
        }
        None => {
            print!("{data}");
            std::io::stdout().flush().ok();
        }
    }
    Ok(())
}

fn load_graph(path: &Path) -> Result<Graph, Failure> {
    Ok(Graph::from_text(&read_to_string(path)?)?)
}

fn load_hypergraph(path: &Path) -> Result<Hypergraph, Failure> {
    Ok(Hypergraph::from_text(&read_to_string(path)?)?)
}

fn load_colouring(path: &Path) -> Result<Colouring, Failure> {
    Ok(Colouring::from_text(&read_to_string(path)?)?)
}

// ---------------------------------------------------------------------------
// generate

#[derive(Clone, Copy, ValueEnum)]
pub enum Kind {
    Grid,
    Pg,
    Gnp,
}

#[derive(Args)]
pub struct GenerateArgs {
    /// Instance family
    #[arg(long, value_enum)]
    kind: Kind,
    /// Coordinate range (grid) or vertex count (gnp)
    #[arg(long)]
    n: Option<usize>,
    /// Construction dimension parameter for grid and pg
    #[arg(long)]
    beta: Option<usize>,
    /// Prime field order for pg
    #[arg(long)]
    q: Option<usize>,
    /// Edge probability for gnp
    #[arg(long)]
    p: Option<f64>,
    /// RNG seed for gnp
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Prune the result: degree threshold d and girth target g as "d,g"
    #[arg(long, value_name = "D,G")]
    prune: Option<String>,
    /// Output path for the graph text format; stdout when omitted
    #[arg(long, short)]
    out: Option<PathBuf>,
}

fn require<T>(value: Option<T>, flag: &str) -> Result<T, Failure> {
    value.ok_or_else(|| Failure::Usage(format!("missing required flag {flag}")))
}

pub fn run_generate(args: GenerateArgs) -> CmdResult {
    let mut g = match args.kind {
        Kind::Grid => grid_graph(require(args.n, "--n")?, require(args.beta, "--beta")?)?,
        Kind::Pg => pg_incidence(require(args.q, "--q")?, require(args.beta, "--beta")?)?,
        Kind::Gnp => sample_gnp(&GnpSpec {
            n: require(args.n, "--n")?,
            p: require(args.p, "--p")?,
            seed: args.seed,
        })?,
    };
    if let Some(spec) = &args.prune {
        let (d, target) = parse_prune_spec(spec)?;
        let report = prune(&g, d, target);
        eprintln!(
            "pruned: kept {} of {} vertices ({} high degree, {} cycle breaking)",
            report.graph.n(),
            g.n(),
            report.removed_high_degree.len(),
            report.removed_cycle_break.len()
        );
        g = report.graph;
    }
    let girth = if g.n() <= GIRTH_REPORT_CAP {
        match g.girth() {
            Some(len) => len.to_string(),
            None => "inf".to_string(),
        }
    } else {
        "skipped".to_string()
    };
    eprintln!(
        "n={} m={} delta={} girth={girth}",
        g.n(),
        g.m(),
        g.max_degree()
    );
    write_or_stdout(&args.out, &g.to_text())
}

fn parse_prune_spec(spec: &str) -> Result<(f64, usize), Failure> {
    let parts: Vec<&str> = spec.split(',').collect();
    if parts.len() != 2 {
        return Err(Failure::Usage(format!("--prune expects \"d,g\", got {spec:?}")));
    }
    let d: f64 = parts[0]
        .trim()
        .parse()
        .map_err(|_| Failure::Usage(format!("bad prune degree threshold {:?}", parts[0])))?;
    let g: usize = parts[1]
        .trim()
        .parse()
        .map_err(|_| Failure::Usage(format!("bad prune girth target {:?}", parts[1])))?;
    Ok((d, g))
}

// ---------------------------------------------------------------------------
// reduce / certify

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
pub enum ReductionKind {
    Basic,
    Cycle,
    Kbt,
}

impl ReductionKind {
    pub fn build(self, g: &Graph, beta: usize, t: usize) -> Result<Hypergraph, Failure> {
        Ok(match self {
            ReductionKind::Basic => build_basic(g, beta),
            ReductionKind::Cycle => {
                build_cycle_reduction(g, &ReductionParams::for_graph(g, beta, t)?)
            }
            ReductionKind::Kbt => build_kbt_reduction(g, &ReductionParams::for_graph(g, beta, t)?),
        })
    }
}

/// The margin presets used by the three reductions.
#[derive(Clone, Copy, ValueEnum)]
pub enum FPreset {
    /// delta^(1/beta) / t
    K2t,
    /// delta^(1/beta) / (2t)
    Cycle,
    /// delta^(1/(4 beta^2))
    Kbt,
}

impl FPreset {
    pub fn evaluate(self, delta: usize, beta: usize, t: usize) -> f64 {
        let d = delta as f64;
        match self {
            FPreset::K2t => d.powf(1.0 / beta as f64) / t as f64,
            FPreset::Cycle => d.powf(1.0 / beta as f64) / (2 * t) as f64,
            FPreset::Kbt => d.powf(1.0 / (4 * beta * beta) as f64),
        }
    }
}

#[derive(Args)]
pub struct ReduceArgs {
    /// Input graph in the graph text format
    input: PathBuf,
    /// Frugality parameter
    #[arg(long)]
    beta: usize,
    /// Forbidden-pattern parameter for the cycle and kbt reductions
    #[arg(long, default_value_t = 2)]
    t: usize,
    /// Which reduction to build
    #[arg(long, value_enum, default_value_t = ReductionKind::Basic)]
    kind: ReductionKind,
    /// Output path for the hypergraph text format; stdout when omitted
    #[arg(long, short)]
    out: Option<PathBuf>,
    /// Also certify the result and print the report to stderr
    #[arg(long)]
    certify: bool,
    /// Explicit certificate margin f
    #[arg(long)]
    f: Option<f64>,
    /// Certificate margin preset, evaluated from the graph's delta
    #[arg(long, value_enum)]
    f_preset: Option<FPreset>,
}

pub fn run_reduce(args: ReduceArgs) -> CmdResult {
    let g = load_graph(&args.input)?;
    let h = args.kind.build(&g, args.beta, args.t)?;
    if args.certify {
        let f = match (args.f, args.f_preset) {
            (Some(f), _) => f,
            (None, Some(preset)) => preset.evaluate(g.max_degree(), args.beta, args.t),
            (None, None) => {
                return Err(Failure::Usage(
                    "--certify needs --f or --f-preset".to_string(),
                ))
            }
        };
        match certify(&h, f) {
            Ok(cert) => eprintln!("{cert}"),
            // the reduction is still emitted when the margin degenerates
            Err(e) => eprintln!("certificate skipped: {e}"),
        }
    }
    write_or_stdout(&args.out, &h.to_text())
}

#[derive(Args)]
pub struct CertifyArgs {
    /// Input hypergraph in the hypergraph text format
    input: PathBuf,
    /// Explicit margin f (> 1)
    #[arg(long)]
    f: Option<f64>,
    /// Margin preset; needs --delta and --beta
    #[arg(long, value_enum)]
    preset: Option<FPreset>,
    /// Maximum degree of the source graph, for presets
    #[arg(long)]
    delta: Option<usize>,
    /// Frugality parameter, for presets
    #[arg(long)]
    beta: Option<usize>,
    /// Forbidden-pattern parameter, for presets
    #[arg(long, default_value_t = 2)]
    t: usize,
}

pub fn run_certify(args: CertifyArgs) -> CmdResult {
    let h = load_hypergraph(&args.input)?;
    let f = match (args.f, args.preset) {
        (Some(f), _) => f,
        (None, Some(preset)) => preset.evaluate(
            require(args.delta, "--delta")?,
            require(args.beta, "--beta")?,
            args.t,
        ),
        (None, None) => return Err(Failure::Usage("need --f or --preset".to_string())),
    };
    let cert = certify(&h, f)?;
    println!("{cert}");
    Ok(())
}

// ---------------------------------------------------------------------------
// color

#[derive(Clone, Copy, ValueEnum)]
pub enum Algo {
    Greedy,
    Resample,
    Exact,
}

#[derive(Args)]
pub struct ColorArgs {
    /// Input file: a graph unless --hypergraph is given
    input: PathBuf,
    /// Treat the input as a hypergraph and colour it directly
    #[arg(long)]
    hypergraph: bool,
    /// Frugality parameter (graph mode: colours the basic reduction)
    #[arg(long)]
    beta: Option<usize>,
    #[arg(long, value_enum)]
    algo: Algo,
    /// Palette size for greedy and resample
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 10_000)]
    max_rounds: u64,
    /// Vertex cap for the exact solver
    #[arg(long, default_value_t = DEFAULT_EXACT_CAP)]
    exact_cap: usize,
    /// Output path for the colouring file; stdout when omitted
    #[arg(long, short)]
    out: Option<PathBuf>,
}

pub fn run_color(args: ColorArgs) -> CmdResult {
    let (h, graph_mode): (Hypergraph, Option<(Graph, usize)>) = if args.hypergraph {
        (load_hypergraph(&args.input)?, None)
    } else {
        let beta = require(args.beta, "--beta")?;
        let g = load_graph(&args.input)?;
        let h = build_basic(&g, beta);
        (h, Some((g, beta)))
    };

    let colouring = match args.algo {
        Algo::Greedy => {
            let k = require(args.k, "--k")?;
            let res = greedy_colour(&h, k)?;
            eprintln!("algo=greedy k={k} iterations=0");
            res.colouring
        }
        Algo::Resample => {
            let k = require(args.k, "--k")?;
            let res = resample_colour(&h, k, args.seed, args.max_rounds)?;
            eprintln!(
                "algo=resample k={k} seed={} iterations={}",
                args.seed, res.iterations
            );
            res.colouring
        }
        Algo::Exact => {
            let (chi, colouring) = match &graph_mode {
                Some((g, beta)) => {
                    let (chi, c) = exact_frugal_colouring_capped(g, *beta, args.exact_cap)?;
                    eprintln!("algo=exact chi_beta={chi}");
                    (chi, c)
                }
                None => {
                    let (chi, c) = exact_hypergraph_colouring_capped(&h, args.exact_cap)?;
                    eprintln!("algo=exact chi={chi}");
                    (chi, c)
                }
            };
            println!("{chi}");
            colouring
        }
    };

    if let Some((g, beta)) = &graph_mode {
        let verdict = verify_frugal(g, &colouring, *beta)?;
        if !verdict.is_frugal() {
            return Err(Failure::Verification(verdict.to_string()));
        }
        eprintln!("verified: {beta}-frugal");
    }
    match &args.out {
        Some(path) => write_or_stdout(&args.out, &colouring.to_text()).map(|()| {
            eprintln!("colouring written to {}", path.display());
        }),
        None => {
            if matches!(args.algo, Algo::Exact) {
                Ok(())
            } else {
                write_or_stdout(&None, &colouring.to_text())
            }
        }
    }
}

// ---------------------------------------------------------------------------
// verify

#[derive(Args)]
pub struct VerifyArgs {
    /// Graph file
    graph: PathBuf,
    /// Colouring file
    colouring: PathBuf,
    /// Check beta-frugality
    #[arg(long)]
    beta: Option<usize>,
    /// Check (2,pattern)-avoidance: "star:<m>" or "path:<t>"
    #[arg(long)]
    pattern: Option<String>,
}

pub fn run_verify(args: VerifyArgs) -> CmdResult {
    let g = load_graph(&args.graph)?;
    let c = load_colouring(&args.colouring)?;
    match (args.beta, &args.pattern) {
        (Some(beta), None) => {
            let verdict = verify_frugal(&g, &c, beta)?;
            match verdict {
                FrugalVerdict::Frugal => {
                    println!("frugal");
                    Ok(())
                }
                other => Err(Failure::Verification(other.to_string())),
            }
        }
        (None, Some(pattern)) => {
            let tree = parse_pattern(pattern)?;
            if verify_avoiding(&g, &c, &tree)? {
                println!("avoiding");
                Ok(())
            } else {
                Err(Failure::Verification(format!(
                    "a 2-coloured copy of {pattern} exists"
                )))
            }
        }
        _ => Err(Failure::Usage(
            "give exactly one of --beta or --pattern".to_string(),
        )),
    }
}

fn parse_pattern(spec: &str) -> Result<Graph, Failure> {
    let bad = || Failure::Usage(format!("bad pattern {spec:?}, want star:<m> or path:<t>"));
    let (kind, value) = spec.split_once(':').ok_or_else(bad)?;
    let value: usize = value.trim().parse().map_err(|_| bad())?;
    match kind {
        "star" => Ok(Graph::star(value)),
        "path" => Ok(Graph::path(value)),
        _ => Err(bad()),
    }
}

// ---------------------------------------------------------------------------
// bounds

#[derive(Args)]
pub struct BoundsArgs {
    /// Emit CSV instead of aligned text
    #[arg(long)]
    csv: bool,
    #[command(subcommand)]
    bound: BoundCmd,
}

#[derive(Subcommand)]
pub enum BoundCmd {
    /// Edge budget of P_t-free graphs: (t-2) n / 2
    ErdosGallai {
        #[arg(long)]
        t: usize,
        #[arg(long)]
        n: usize,
    },
    /// Zarankiewicz bound on K_{s,t}-free bipartite graphs
    Kst {
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        t: usize,
    },
    /// Gap of the partial-exponential log inequality at (x, n)
    ExpLogGap {
        #[arg(long)]
        x: f64,
        #[arg(long)]
        n: usize,
    },
    /// Exact binomial tail against its exponential bound
    BinomialTail {
        #[arg(long)]
        t: u64,
        #[arg(long)]
        p: f64,
        #[arg(long)]
        beta: usize,
        #[arg(long)]
        d: f64,
    },
    /// Random-graph palette scale k(d, beta)
    RandomgraphK {
        #[arg(long)]
        d: f64,
        #[arg(long)]
        beta: usize,
    },
    /// Girth-construction constant c_beta
    CBeta {
        #[arg(long)]
        beta: usize,
    },
    /// Simplified special-pair degree bound t*delta/(alpha-t) at alpha = 2t
    SigmaCycle {
        #[arg(long)]
        t: usize,
        #[arg(long)]
        delta: f64,
    },
}

pub fn run_bounds(args: BoundsArgs) -> CmdResult {
    let report = match args.bound {
        BoundCmd::ErdosGallai { t, n } => BoundReport {
            name: "erdos-gallai",
            inputs: vec![("t", t as f64), ("n", n as f64)],
            value: erdos_gallai_bound(t, n),
            satisfied: None,
        },
        BoundCmd::Kst { a, b, s, t } => BoundReport {
            name: "kst",
            inputs: vec![
                ("a", a as f64),
                ("b", b as f64),
                ("s", s as f64),
                ("t", t as f64),
            ],
            value: kst_bound(a, b, s, t)?,
            satisfied: None,
        },
        BoundCmd::ExpLogGap { x, n } => {
            let gap = partial_exp_log_gap(x, n)?;
            BoundReport {
                name: "exp-log-gap",
                inputs: vec![("x", x), ("n", n as f64)],
                value: gap,
                satisfied: Some(gap >= -1e-12),
            }
        }
        BoundCmd::BinomialTail { t, p, beta, d } => binomial_tail_bound_check(t, p, beta, d)?,
        BoundCmd::RandomgraphK { d, beta } => BoundReport {
            name: "randomgraph-k",
            inputs: vec![("d", d), ("beta", beta as f64)],
            value: randomgraph_k(d, beta)?,
            satisfied: None,
        },
        BoundCmd::CBeta { beta } => BoundReport {
            name: "c-beta",
            inputs: vec![("beta", beta as f64)],
            value: c_beta(beta),
            satisfied: None,
        },
        BoundCmd::SigmaCycle { t, delta } => BoundReport {
            name: "sigma-cycle",
            inputs: vec![("t", t as f64), ("delta", delta)],
            value: sigma_bound_cycle(t, delta),
            satisfied: None,
        },
    };
    print!("{}", format_report(&report, args.csv));
    Ok(())
}

/// Renders a report as aligned text or a CSV row with header.
pub fn format_report(report: &BoundReport, csv: bool) -> String {
    let inputs: Vec<String> = report
        .inputs
        .iter()
        .map(|(k, v)| format!("{k}={}", fmt_sig6(*v)))
        .collect();
    let satisfied = match report.satisfied {
        Some(true) => "yes",
        Some(false) => "no",
        None => "-",
    };
    if csv {
        format!(
            "name,value,satisfied,inputs\n{},{},{satisfied},{}\n",
            report.name,
            fmt_sig6(report.value),
            inputs.join(";")
        )
    } else {
        format!(
            "{:<14} value={:<14} satisfied={:<4} {}\n",
            report.name,
            fmt_sig6(report.value),
            satisfied,
            inputs.join(" ")
        )
    }
}

/// Six significant digits, enough to diff experiment artifacts.
pub fn fmt_sig6(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let magnitude = x.abs().log10().floor() as i32;
    if !(-4..=8).contains(&magnitude) {
        return format!("{x:.5e}");
    }
    let decimals = (5 - magnitude).max(0) as usize;
    let formatted = format!("{x:.decimals$}");
    // trim trailing zeros but keep at least one digit after the point
    if formatted.contains('.') {
        let trimmed = formatted.trim_end_matches('0');
        let trimmed = trimmed.strip_suffix('.').unwrap_or(trimmed);
        trimmed.to_string()
    } else {
        formatted
    }
}

// ---------------------------------------------------------------------------
// pipeline args (implementation in crate::pipeline)

#[derive(Args)]
pub struct PipelineArgs {
    /// Config file; falls back to the FRUGAL_CONFIG environment variable
    pub config: Option<PathBuf>,
}
