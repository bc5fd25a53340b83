//! `lrbkit <command> --instance <file.json | builtin:name?k=v> [flags]`

mod commands;
mod report;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use lrb::algebra::SeedPolicy;

use crate::report::{CliError, Report};

#[derive(Parser, Debug)]
#[command(name = "lrbkit", version, about = "Exact computations on left regular band algebras with group symmetry")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Instance file (JSON) or `builtin:<name>?<params>`.
    #[arg(long)]
    pub instance: Option<String>,
    /// Coefficient field: `q` or `fp:<p>`.
    #[arg(long, default_value = "q")]
    pub field: FieldSpec,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[arg(long, default_value = "min")]
    pub seed_policy: SeedPolicy,
    /// Worker threads (0 = all cores).
    #[arg(long, default_value_t = 0)]
    pub parallel: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldSpec {
    Q,
    Fp(u64),
}

impl std::str::FromStr for FieldSpec {
    type Err = String;
    fn from_str(s: &str) -> Result<FieldSpec, String> {
        if s == "q" {
            return Ok(FieldSpec::Q);
        }
        let p = s.strip_prefix("fp:").ok_or_else(|| format!("unknown field `{s}` (q | fp:<p>)"))?;
        let p: u64 = p.parse().map_err(|_| format!("bad prime `{p}`"))?;
        if !lrb::field::is_prime(p) {
            return Err(format!("{p} is not prime"));
        }
        Ok(FieldSpec::Fp(p))
    }
}

impl std::fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FieldSpec::Q => write!(f, "q"),
            FieldSpec::Fp(p) => write!(f, "fp:{p}"),
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Sizes, structural flags and orbit counts.
    Info(Common),
    /// The cfpoi `E_X` (orbit-averaged seeds).
    Idempotents(Common),
    /// Cartan invariants of the fixed-point algebra.
    Cartan(Common),
    /// Dimensions of all Peirce components `E_Y·kB·E_X`.
    Peirce(Common),
    /// Semisimplicity, orbit counts and commutativity of the fixed-point algebra.
    TheoremA(Common),
    /// Peirce characters of a CW LRB against interval cohomology twisted by degrees.
    TheoremC(Common),
    /// Peirce characters of a hereditary LRB against chain sums.
    TheoremD(Common),
    /// Derangement representation identities of a geometric lattice.
    TheoremE(Common),
    /// Cartan invariants of a cube LRB as orbit counts of comparable pairs.
    Catzero(Common),
    /// Determinant twists of a rank-2 arrangement against degree twists.
    Det(Common),
    /// Derangement number (all formulas) and character.
    Derangement(Common),
    /// Spectrum of the random-to-top operator.
    Rtt(Common),
    /// Every applicable check on one instance, or on the builtin corpus.
    VerifyAll(Common),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (name, common) = match &cli.command {
        Command::Info(c) => ("info", c),
        Command::Idempotents(c) => ("idempotents", c),
        Command::Cartan(c) => ("cartan", c),
        Command::Peirce(c) => ("peirce", c),
        Command::TheoremA(c) => ("theorem-a", c),
        Command::TheoremC(c) => ("theorem-c", c),
        Command::TheoremD(c) => ("theorem-d", c),
        Command::TheoremE(c) => ("theorem-e", c),
        Command::Catzero(c) => ("catzero", c),
        Command::Det(c) => ("det", c),
        Command::Derangement(c) => ("derangement", c),
        Command::Rtt(c) => ("rtt", c),
        Command::VerifyAll(c) => ("verify-all", c),
    };
    if common.parallel > 0 {
        // ignore a second initialisation
        let _ = rayon::ThreadPoolBuilder::new().num_threads(common.parallel).build_global();
    }
    let result: Result<Vec<Report>, CliError> = if name == "verify-all" {
        commands::verify_all(common)
    } else {
        common
            .instance
            .as_deref()
            .ok_or_else(|| CliError::Usage("--instance is required".into()))
            .and_then(|spec| commands::run(name, spec, common).map(|r| vec![r]))
    };
    match result {
        Ok(reports) => report::emit(name, &reports, common.format),
        Err(e) => report::emit_error(name, &e, common.format),
    }
}
