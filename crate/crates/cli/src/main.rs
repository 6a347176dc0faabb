//! `frugal`: generate instances, build hypergraph reductions, certify them,
//! colour, verify, evaluate bounds, and run experiment pipelines.
//!
//! Exit codes: 0 success, 1 usage, 2 instance failure, 3 verification
//! failure.

mod cmds;
mod pipeline;

use clap::Parser;

#[derive(Parser)]
#[command(name = "frugal", version, about = "Frugal graph colouring toolkit")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(clap::Subcommand)]
enum Cmd {
    /// Generate an instance and write the graph text format
    Generate(cmds::GenerateArgs),
    /// Build an auxiliary hypergraph reduction of a graph
    Reduce(cmds::ReduceArgs),
    /// Evaluate the codegree/triangle certificate of a hypergraph
    Certify(cmds::CertifyArgs),
    /// Colour a graph (through its basic reduction) or a hypergraph
    Color(cmds::ColorArgs),
    /// Check a colouring for frugality or pattern avoidance
    Verify(cmds::VerifyArgs),
    /// Evaluate closed-form bounds and inequality checkers
    Bounds(cmds::BoundsArgs),
    /// Run the experiment pipeline described by a config file, emitting CSV
    Pipeline(cmds::PipelineArgs),
}

/// Failure classes mapped onto the exit codes.
pub enum Failure {
    Usage(String),
    Instance(anyhow::Error),
    Verification(String),
}

impl Failure {
    fn exit_code(&self) -> i32 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Instance(_) => 2,
            Failure::Verification(_) => 3,
        }
    }
}

impl From<frugal_core::Error> for Failure {
    fn from(e: frugal_core::Error) -> Self {
        Failure::Instance(e.into())
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Instance(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Instance(e.into())
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    let outcome = match cli.cmd {
        Cmd::Generate(args) => cmds::run_generate(args),
        Cmd::Reduce(args) => cmds::run_reduce(args),
        Cmd::Certify(args) => cmds::run_certify(args),
        Cmd::Color(args) => cmds::run_color(args),
        Cmd::Verify(args) => cmds::run_verify(args),
        Cmd::Bounds(args) => cmds::run_bounds(args),
        Cmd::Pipeline(args) => pipeline::run(args),
    };
    if let Err(failure) = outcome {
        match &failure {
            Failure::Usage(msg) => eprintln!("usage error: {msg}"),
            Failure::Instance(e) => eprintln!("error: {e:#}"),
            Failure::Verification(msg) => eprintln!("verification failed: {msg}"),
        }
        std::process::exit(failure.exit_code());
    }
}
