//! Command-line arguments.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(name = "primpoints", version, about = "Primitive points on imaginary hyperelliptic curves y^2 = h(x)")]
pub struct RunConfig {
    /// Write the JSON report here instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    /// Worker threads for parallel stages.
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(1..=1024))]
    pub jobs: Option<u16>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct CurveArg {
    /// Curve file: {"h": ["1", "0", "0", "1"]} for y^2 = x^3 + 1.
    pub curve: PathBuf,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Genus and model data of a curve.
    CurveInfo(CurveArg),
    /// Basis of the Riemann-Roch space L(D).
    RrBasis {
        #[command(flatten)]
        curve: CurveArg,
        #[arg(long)]
        divisor: String,
    },
    /// Degree and pole divisor of a function.
    FunctionDegree {
        #[command(flatten)]
        curve: CurveArg,
        #[arg(long = "f")]
        function: String,
    },
    /// Genus-0 contractions of an effective divisor.
    Contr {
        #[command(flatten)]
        curve: CurveArg,
        #[arg(long)]
        divisor: String,
    },
    /// Primitivity certificate for Q[x]/(m).
    Certify {
        #[arg(long)]
        poly: String,
        /// Also decide by principal subfields and require both verdicts to agree.
        #[arg(long)]
        paranoid: bool,
    },
    /// Specialize a function at height-ordered rationals.
    Prospect {
        #[command(flatten)]
        curve: CurveArg,
        #[arg(long = "f")]
        function: String,
        /// Number of t values.
        #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u32).range(1..=100_000))]
        t_count: u32,
        /// Only t of height at most this.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..=1_000_000))]
        t_height: Option<u64>,
        #[arg(long)]
        paranoid: bool,
    },
    /// Classify coefficient vectors of L(D) by locus.
    Density {
        #[command(flatten)]
        curve: CurveArg,
        #[arg(long, default_value = "4*inf")]
        divisor: String,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..=1000))]
        coeff_height: u32,
        /// Sample this many vectors instead of enumerating the box.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..=100_000_000))]
        samples: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Search L(d * inf) for a certified primitive function of degree d.
    FindFunction {
        #[command(flatten)]
        curve: CurveArg,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=64))]
        degree: u32,
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u32).range(1..=20))]
        coeff_height: u32,
        #[arg(long, default_value_t = 200, value_parser = clap::value_parser!(u32).range(1..=1_000_000))]
        max_candidates: u32,
        #[arg(long, default_value_t = 60, value_parser = clap::value_parser!(u32).range(1..=100_000))]
        t_count: u32,
        #[arg(long)]
        paranoid: bool,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::CurveInfo(_) => "curve-info",
            Command::RrBasis { .. } => "rr-basis",
            Command::FunctionDegree { .. } => "function-degree",
            Command::Contr { .. } => "contr",
            Command::Certify { .. } => "certify",
            Command::Prospect { .. } => "prospect",
            Command::Density { .. } => "density",
            Command::FindFunction { .. } => "find-function",
        }
    }
}
