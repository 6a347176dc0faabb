//! The experiment pipeline: a flat key-value config describes instances,
//! seeds, and solver parameters; each (instance, seed) job builds the
//! configured reduction, certifies it, finds the least working palettes for
//! greedy and resampling, and emits CSV records in deterministic order.

use std::fs;
use std::path::PathBuf;
use std::time::Instant;

use anyhow::Context;
use rayon::prelude::*;

use frugal_core::generators::{grid_graph, pg_incidence, prune, sample_gnp, GnpSpec};
use frugal_core::graph::Graph;
use frugal_core::hypergraph::{Colouring, Hypergraph};
use frugal_core::reduction::certify;
use frugal_core::solvers::{
    exact_frugal_chromatic_capped, greedy_colour, resample_colour, verify_frugal,
};

use crate::cmds::{fmt_sig6, FPreset, PipelineArgs, ReductionKind};
use crate::Failure;

const CSV_HEADER: &str = "id,n,delta,beta,t,kind,algo,k,success,exact_chi_beta,wall_ms\n";

pub struct Config {
    beta: usize,
    t: usize,
    reduction: ReductionKind,
    seeds: Vec<u64>,
    max_rounds: u64,
    exact_cap: usize,
    timing: bool,
    out: Option<PathBuf>,
    colour_dir: Option<PathBuf>,
    instances: Vec<InstanceSpec>,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            beta: 2,
            t: 2,
            reduction: ReductionKind::Basic,
            seeds: vec![0],
            max_rounds: 20_000,
            exact_cap: 10,
            timing: true,
            out: None,
            colour_dir: None,
            instances: Vec::new(),
        }
    }
}

impl Config {
    /// Parses the flat `key = value` grammar; `#` starts a comment and the
    /// `instance` key may repeat.
    pub fn parse(text: &str) -> Result<Config, Failure> {
        let mut config = Config::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                Failure::Usage(format!("config line {}: expected key = value", lineno + 1))
            })?;
            let (key, value) = (key.trim(), value.trim());
            let bad = |what: &str| {
                Failure::Usage(format!("config line {}: {what}", lineno + 1))
            };
            match key {
                "beta" => config.beta = value.parse().map_err(|_| bad("bad beta"))?,
                "t" => config.t = value.parse().map_err(|_| bad("bad t"))?,
                "reduction" => {
                    config.reduction = match value {
                        "basic" => ReductionKind::Basic,
                        "cycle" => ReductionKind::Cycle,
                        "kbt" => ReductionKind::Kbt,
                        _ => return Err(bad("reduction must be basic, cycle, or kbt")),
                    }
                }
                "seeds" => {
                    config.seeds = value
                        .split([' ', ','])
                        .filter(|tok| !tok.is_empty())
                        .map(|tok| tok.parse::<u64>())
                        .collect::<Result<_, _>>()
                        .map_err(|_| bad("bad seeds list"))?;
                }
                "max_rounds" => {
                    config.max_rounds = value.parse().map_err(|_| bad("bad max_rounds"))?
                }
                "exact_cap" => {
                    config.exact_cap = value.parse().map_err(|_| bad("bad exact_cap"))?
                }
                "timing" => {
                    config.timing = match value {
                        "on" => true,
                        "off" => false,
                        _ => return Err(bad("timing must be on or off")),
                    }
                }
                "out" => config.out = Some(PathBuf::from(value)),
                "colour_dir" => config.colour_dir = Some(PathBuf::from(value)),
                "instance" => config.instances.push(InstanceSpec::parse(value, lineno + 1)?),
                _ => return Err(bad(&format!("unknown key {key:?}"))),
            }
        }
        if config.beta < 1 {
            return Err(Failure::Usage("beta must be at least 1".to_string()));
        }
        if config.exact_cap == 0 || config.max_rounds == 0 {
            return Err(Failure::Usage("caps must be positive".to_string()));
        }
        if config.seeds.is_empty() {
            return Err(Failure::Usage("seeds must be non-empty".to_string()));
        }
        if config.beta < 2 && !matches!(config.reduction, ReductionKind::Basic) {
            return Err(Failure::Usage(
                "cycle and kbt reductions need beta >= 2".to_string(),
            ));
        }
        Ok(config)
    }

    fn margin_preset(&self) -> FPreset {
        match self.reduction {
            ReductionKind::Basic => FPreset::K2t,
            ReductionKind::Cycle => FPreset::Cycle,
            ReductionKind::Kbt => FPreset::Kbt,
        }
    }
}

#[derive(Clone)]
pub enum InstanceSpec {
    Grid { n: usize, dim_beta: usize },
    Pg { q: usize, dim_beta: usize },
    Gnp { n: usize, p: f64 },
    /// G(n, d/n) with high-degree vertices and short cycles pruned away.
    PrunedGnp { n: usize, d: f64, girth: usize },
}

impl InstanceSpec {
    fn parse(value: &str, lineno: usize) -> Result<InstanceSpec, Failure> {
        let bad = |what: &str| Failure::Usage(format!("config line {lineno}: {what}"));
        let fields: Vec<&str> = value.split_whitespace().collect();
        match fields.as_slice() {
            ["grid", n, b] => Ok(InstanceSpec::Grid {
                n: n.parse().map_err(|_| bad("bad grid n"))?,
                dim_beta: b.parse().map_err(|_| bad("bad grid beta"))?,
            }),
            ["pg", q, b] => Ok(InstanceSpec::Pg {
                q: q.parse().map_err(|_| bad("bad pg q"))?,
                dim_beta: b.parse().map_err(|_| bad("bad pg beta"))?,
            }),
            ["gnp", n, p] => Ok(InstanceSpec::Gnp {
                n: n.parse().map_err(|_| bad("bad gnp n"))?,
                p: p.parse().map_err(|_| bad("bad gnp p"))?,
            }),
            ["pruned-gnp", n, d, g] => Ok(InstanceSpec::PrunedGnp {
                n: n.parse().map_err(|_| bad("bad pruned-gnp n"))?,
                d: d.parse().map_err(|_| bad("bad pruned-gnp d"))?,
                girth: g.parse().map_err(|_| bad("bad pruned-gnp girth"))?,
            }),
            _ => Err(bad(
                "instance must be `grid n beta`, `pg q beta`, `gnp n p`, or `pruned-gnp n d g`",
            )),
        }
    }

    fn id(&self) -> String {
        match self {
            InstanceSpec::Grid { n, dim_beta } => format!("grid-{n}-{dim_beta}"),
            InstanceSpec::Pg { q, dim_beta } => format!("pg-{q}-{dim_beta}"),
            InstanceSpec::Gnp { n, p } => format!("gnp-{n}-{p}"),
            InstanceSpec::PrunedGnp { n, d, girth } => format!("pruned-gnp-{n}-{d}-{girth}"),
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            InstanceSpec::Grid { .. } => "grid",
            InstanceSpec::Pg { .. } => "pg",
            InstanceSpec::Gnp { .. } => "gnp",
            InstanceSpec::PrunedGnp { .. } => "pruned-gnp",
        }
    }

    fn build(&self, seed: u64) -> frugal_core::Result<Graph> {
        match *self {
            InstanceSpec::Grid { n, dim_beta } => grid_graph(n, dim_beta),
            InstanceSpec::Pg { q, dim_beta } => pg_incidence(q, dim_beta),
            InstanceSpec::Gnp { n, p } => sample_gnp(&GnpSpec { n, p, seed }),
            InstanceSpec::PrunedGnp { n, d, girth } => {
                let g = sample_gnp(&GnpSpec {
                    n,
                    p: d / n as f64,
                    seed,
                })?;
                Ok(prune(&g, d, girth).graph)
            }
        }
    }
}

struct Record {
    id: String,
    n: usize,
    delta: usize,
    kind: &'static str,
    algo: &'static str,
    k: usize,
    success: bool,
    exact: Option<usize>,
    wall_ms: f64,
}

impl Record {
    fn csv_line(&self, config: &Config) -> String {
        let exact = self.exact.map(|v| v.to_string()).unwrap_or_default();
        let wall = if config.timing {
            fmt_sig6(self.wall_ms)
        } else {
            String::new()
        };
        format!(
            "{},{},{},{},{},{},{},{},{},{},{}\n",
            self.id,
            self.n,
            self.delta,
            config.beta,
            config.t,
            self.kind,
            self.algo,
            self.k,
            self.success,
            exact,
            wall
        )
    }
}

pub fn run(args: PipelineArgs) -> Result<(), Failure> {
    let path = args
        .config
        .or_else(|| std::env::var_os("FRUGAL_CONFIG").map(PathBuf::from))
        .ok_or_else(|| {
            Failure::Usage("pipeline needs a config path (or FRUGAL_CONFIG set)".to_string())
        })?;
    let text = fs::read_to_string(&path)
        .with_context(|| format!("reading {}", path.display()))
        .map_err(Failure::Instance)?;
    let config = Config::parse(&text)?;
    if let Some(dir) = &config.colour_dir {
        fs::create_dir_all(dir)
            .with_context(|| format!("creating {}", dir.display()))
            .map_err(Failure::Instance)?;
    }

    let jobs: Vec<(usize, u64)> = config
        .instances
        .iter()
        .enumerate()
        .flat_map(|(i, _)| config.seeds.iter().map(move |&s| (i, s)))
        .collect();
    let results: Vec<Vec<Record>> = jobs
        .par_iter()
        .map(|&(instance, seed)| run_job(&config, &config.instances[instance], seed))
        .collect();

    let mut csv = String::from(CSV_HEADER);
    for rows in &results {
        for row in rows {
            csv.push_str(&row.csv_line(&config));
        }
    }
    match &config.out {
        Some(path) => {
            fs::write(path, csv)
                .with_context(|| format!("writing {}", path.display()))
                .map_err(Failure::Instance)?;
        }
        None => print!("{csv}"),
    }
    Ok(())
}

fn run_job(config: &Config, spec: &InstanceSpec, seed: u64) -> Vec<Record> {
    let id = format!("{}-s{seed}", spec.id());
    let failed = |algo: &'static str| Record {
        id: id.clone(),
        n: 0,
        delta: 0,
        kind: spec.kind(),
        algo,
        k: 0,
        success: false,
        exact: None,
        wall_ms: 0.0,
    };

    let g = match spec.build(seed) {
        Ok(g) => g,
        Err(e) => {
            eprintln!("{id}: generation failed: {e}");
            return vec![failed("greedy"), failed("resample")];
        }
    };
    let h = match config.reduction.build(&g, config.beta, config.t) {
        Ok(h) => h,
        Err(failure) => {
            if let Failure::Instance(e) = failure {
                eprintln!("{id}: reduction failed: {e}");
            }
            return vec![failed("greedy"), failed("resample")];
        }
    };

    let f = config
        .margin_preset()
        .evaluate(g.max_degree(), config.beta, config.t);
    match certify(&h, f) {
        Ok(cert) => eprintln!(
            "{id}: certificate f={:.4} verdict_a={} verdict_b={}",
            f, cert.verdict_a, cert.verdict_b
        ),
        Err(e) => eprintln!("{id}: certificate skipped: {e}"),
    }

    let exact = if g.n() <= config.exact_cap {
        exact_frugal_chromatic_capped(&g, config.beta, config.exact_cap).ok()
    } else {
        None
    };

    let mut records = Vec::new();

    // greedy: success is monotone in k, so double then bisect
    let start = Instant::now();
    let greedy_k = least_greedy_palette(&h);
    let greedy_colouring = greedy_colour(&h, greedy_k).ok().map(|r| r.colouring);
    let greedy_ok = greedy_colouring
        .as_ref()
        .is_some_and(|c| verified(&g, c, config.beta));
    records.push(Record {
        id: id.clone(),
        n: g.n(),
        delta: g.max_degree(),
        kind: spec.kind(),
        algo: "greedy",
        k: greedy_k,
        success: greedy_ok,
        exact,
        wall_ms: start.elapsed().as_secs_f64() * 1e3,
    });
    if greedy_ok {
        store_colouring(config, &id, "greedy", greedy_colouring.as_ref().unwrap());
    }

    // resample: bisect from 2, starting the upper bound at the greedy
    // palette and doubling while the round budget is not enough there
    let start = Instant::now();
    let base = greedy_k.max(2);
    let succeeds = |k: usize| resample_colour(&h, k, seed, config.max_rounds).ok();
    let mut hi = base;
    let mut at_hi = succeeds(hi);
    while at_hi.is_none() && hi < 64 * base {
        hi *= 2;
        at_hi = succeeds(hi);
    }
    let (resample_k, resample_colouring) = match at_hi {
        None => (hi, None),
        Some(found) => {
            let (mut lo, mut hi_known) = (2usize, hi);
            let mut best = found;
            while lo < hi_known {
                let mid = (lo + hi_known) / 2;
                match succeeds(mid) {
                    Some(res) => {
                        best = res;
                        hi_known = mid;
                    }
                    None => lo = mid + 1,
                }
            }
            (hi_known, Some(best.colouring))
        }
    };
    let resample_ok = resample_colouring
        .as_ref()
        .is_some_and(|c| verified(&g, c, config.beta));
    records.push(Record {
        id: id.clone(),
        n: g.n(),
        delta: g.max_degree(),
        kind: spec.kind(),
        algo: "resample",
        k: resample_k,
        success: resample_ok,
        exact,
        wall_ms: start.elapsed().as_secs_f64() * 1e3,
    });
    if resample_ok {
        store_colouring(config, &id, "resample", resample_colouring.as_ref().unwrap());
    }
    records
}

fn verified(g: &Graph, c: &Colouring, beta: usize) -> bool {
    verify_frugal(g, c, beta).is_ok_and(|v| v.is_frugal())
}

fn store_colouring(config: &Config, id: &str, algo: &str, c: &Colouring) {
    if let Some(dir) = &config.colour_dir {
        let path = dir.join(format!("{id}-{algo}.col"));
        if let Err(e) = fs::write(&path, c.to_text()) {
            eprintln!("{id}: could not store colouring: {e}");
        }
    }
}

/// Smallest palette on which greedy succeeds: double an upper bound, then
/// binary search (greedy success is monotone in k).
fn least_greedy_palette(h: &Hypergraph) -> usize {
    if h.edge_count() == 0 {
        return 1;
    }
    let mut hi = 2usize;
    while greedy_colour(h, hi).is_err() {
        hi *= 2;
        debug_assert!(hi <= 2 * h.n().max(2));
    }
    let mut lo = 1usize;
    while lo < hi {
        let mid = (lo + hi) / 2;
        if greedy_colour(h, mid).is_ok() {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    hi
}
