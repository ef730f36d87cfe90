mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hypoh_core::poly::DEFAULT_SEED;

use output::{emit, emit_error};

/// Censuses of irreducible substitutions f(g(t)) over finite fields, with
/// wreath-product predictions and discriminant-class checks.
#[derive(Parser, Debug)]
#[command(name = "hypoh", version)]
pub struct Cli {
    #[command(flatten)]
    pub common: Common,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Characteristic of the field.
    #[arg(long, global = true)]
    pub p: Option<u64>,
    /// Extension degree; the field has p^k elements.
    #[arg(long, global = true, default_value_t = 1)]
    pub k: u32,
    /// Seed for every randomized step.
    #[arg(long, global = true, env = "HYPOH_SEED", default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Worker threads. Never changes any reported number.
    #[arg(long, global = true, default_value_t = 1)]
    pub threads: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write the document here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Omit the timestamp and timing fields.
    #[arg(long, global = true)]
    pub deterministic: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Args, Debug, Clone)]
pub struct CensusArgs {
    /// Degree of the substitution g.
    #[arg(long)]
    pub n: usize,
    /// Outer polynomial f_i, e.g. "X^2 + 1"; repeat for several.
    #[arg(long = "f", required = true)]
    pub fs: Vec<String>,
    /// Target factorization type per f_i, e.g. "1,2"; repeat in order.
    #[arg(long = "target")]
    pub targets: Vec<String>,
    /// Draw this many random substitutions instead of walking all q^n.
    #[arg(long)]
    pub sample: Option<u64>,
    /// Allow reducible f_i (histogram only, no prediction).
    #[arg(long)]
    pub raw: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Count g making every f_i(g) irreducible (or hit the targets).
    Census(CensusArgs),
    /// Census with explicit target factorization types.
    TypeCensus(CensusArgs),
    /// Wreath-product density of a tuple of orbit types.
    Predict {
        #[arg(long)]
        n: usize,
        /// Orbit sizes, e.g. "1,2"; alternative to --f.
        #[arg(long, value_delimiter = ',')]
        orbits: Vec<usize>,
        /// Irreducible f_i whose degrees give the orbit sizes.
        #[arg(long = "f")]
        fs: Vec<String>,
        /// Target orbit type per orbit, e.g. "1,2"; repeat in order.
        #[arg(long = "target")]
        targets: Vec<String>,
    },
    /// Count column-transitive wreath elements and conjugation orbits.
    Wreath {
        #[arg(long)]
        n: Option<usize>,
        /// Orbit sizes of sigma, e.g. "3" or "1,2".
        #[arg(long, value_delimiter = ',')]
        orbits: Vec<usize>,
        /// Check every setup with n <= max-n, |Ω| <= max-nu, (n!)^|Ω| <= limit.
        #[arg(long)]
        sweep: bool,
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        #[arg(long, default_value_t = 4)]
        max_nu: usize,
        #[arg(long, default_value_t = 1_000_000)]
        limit: u64,
    },
    /// Discriminant classes and the characteristic-2 parity law.
    Disc {
        /// Polynomial h in one variable over the field.
        #[arg(long)]
        h: Option<String>,
        /// Polynomial in X and T; prints Disc_X and its square class.
        #[arg(long)]
        sym: Option<String>,
        /// Run the parity-law check on random h.
        #[arg(long)]
        parity: bool,
        #[arg(long, default_value_t = 8)]
        deg_bound: usize,
        #[arg(long, default_value_t = 300)]
        samples: usize,
        /// Field elements for the even-sum criterion, e.g. "0,1,g^21".
        #[arg(long, value_delimiter = ',')]
        even_sum: Vec<String>,
    },
    /// Square-class independence over F_q(T), or the A_n/S_n lemma check.
    Indep {
        /// Nonzero polynomial in T; repeat for a family.
        #[arg(long = "class")]
        classes: Vec<String>,
        /// Run the random-subgroup check instead.
        #[arg(long)]
        lemma: bool,
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        r: usize,
        #[arg(long, default_value_t = 200)]
        trials: usize,
    },
    /// Look for g with g^8 + t^3 irreducible over F_2 (p, k default to 2, 1).
    Swan {
        #[arg(long, default_value_t = 10)]
        deg_bound: usize,
    },
    /// Joint irreducibility of g - ω over all monic quadratics g.
    Corr {
        #[arg(long, default_value_t = 2)]
        n: usize,
        /// Shift elements, e.g. "0,1,g^21,g^42".
        #[arg(long, value_delimiter = ',', required = true)]
        omega: Vec<String>,
    },
    /// Modulus, primitive element and sizes of F_{p^k}.
    FieldInfo,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Census(_) => "census",
            Command::TypeCensus(_) => "type-census",
            Command::Predict { .. } => "predict",
            Command::Wreath { .. } => "wreath",
            Command::Disc { .. } => "disc",
            Command::Indep { .. } => "indep",
            Command::Swan { .. } => "swan",
            Command::Corr { .. } => "corr",
            Command::FieldInfo => "field-info",
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(cli.common.threads.max(1))
        .build()
    {
        Ok(pool) => pool,
        Err(e) => {
            eprintln!("error: could not start worker pool: {e}");
            return ExitCode::from(1);
        }
    };
    let result = pool.install(|| commands::run(&cli));
    match result.and_then(|out| emit(&cli, out, start.elapsed())) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            emit_error(&cli, &e);
            ExitCode::from(1)
        }
    }
}
