use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;

use commands::Outcome;

#[derive(Parser)]
#[command(name = "bmwf", version, about = "Exact primitive idempotents of BMW algebras")]
struct Cli {
    /// Directory for cached rewrite tables (overridden by BMWF_CACHE).
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,

    /// Worker threads; output order does not depend on it.
    #[arg(long, global = true)]
    jobs: Option<usize>,

    /// Seed for the randomized suites.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct AlgebraArgs {
    #[arg(long, default_value_t = 2)]
    n: usize,
    /// Rational "p/q"; defaults to 6/5 or a certified suggestion.
    #[arg(long)]
    q: Option<String>,
    #[arg(long)]
    nu: Option<String>,
}

#[derive(Copy, Clone, ValueEnum)]
enum MethodArg {
    Fusion,
    Jm,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Suite {
    Relations,
    Fusion,
    Reflection,
    Hecke,
    Contraction,
    All,
}

#[derive(Copy, Clone, ValueEnum)]
enum ContentsArg {
    Quantum,
    Classical,
    TClassical,
}

#[derive(Copy, Clone, ValueEnum)]
enum ExportKind {
    Words,
    Hecke,
    Brauer,
}

#[derive(Subcommand)]
enum Command {
    /// Primitive idempotents of BMW_n with verification flags.
    Idempotents {
        #[command(flatten)]
        alg: AlgebraArgs,
        #[arg(long, value_enum, default_value = "fusion")]
        method: MethodArg,
        /// Restrict to these tableaux, e.g. "1;2;2,1"; repeatable.
        #[arg(long)]
        tableau: Vec<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run verification suites.
    Verify {
        #[command(flatten)]
        alg: AlgebraArgs,
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
        /// Random tuples per identity.
        #[arg(long, default_value_t = 10)]
        samples: usize,
        /// Brauer loop parameter for the contraction suite.
        #[arg(long, default_value = "5")]
        omega: String,
        /// Initial truncation order of Laurent series.
        #[arg(long, default_value_t = 4)]
        order: usize,
        /// Also write the reports as JSON.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// List up-down tableaux with their contents.
    Tableaux {
        #[command(flatten)]
        alg: AlgebraArgs,
        #[arg(long, value_enum, default_value = "quantum")]
        contents: ContentsArg,
        #[arg(long, default_value = "5")]
        omega: String,
        #[arg(long)]
        json: bool,
    },
    /// Symmetrizer and antisymmetrizer in chain, product and fusion form.
    Symmetrizers {
        #[command(flatten)]
        alg: AlgebraArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Parameter utilities.
    Params {
        #[command(subcommand)]
        action: ParamsAction,
    },
    /// Export bases and idempotents as JSON.
    Export {
        #[command(flatten)]
        alg: AlgebraArgs,
        #[arg(long, value_enum)]
        kind: ExportKind,
        #[arg(long, default_value = "5")]
        omega: String,
        /// Contraction regime for Brauer exports (1 or 2).
        #[arg(long, default_value_t = 1)]
        regime: u8,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Inspect or clear the rewrite-table cache.
    Cache {
        #[command(subcommand)]
        action: CacheAction,
    },
}

#[derive(Subcommand)]
enum ParamsAction {
    /// Certified q, nu for the given n.
    Suggest {
        #[arg(long, default_value_t = 2)]
        n: usize,
    },
}

#[derive(Subcommand)]
enum CacheAction {
    Info,
    Clear,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(k) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(k.max(1)).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(3);
        }
    }
    let outcome = commands::run(&cli);
    match outcome {
        Outcome::Pass => ExitCode::SUCCESS,
        Outcome::Fail => ExitCode::from(1),
        Outcome::Error(e) => {
            eprintln!("error: {e}");
            ExitCode::from(commands::exit_code(&e))
        }
    }
}
