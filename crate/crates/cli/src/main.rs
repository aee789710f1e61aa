use clap::{Parser, Subcommand, ValueEnum};
use gaussprime::lattice::PolarBox;
use gaussprime::sieve::THEOREM1_MAX_X;
use gaussprime_cli::commands::{self, Outcome, DEFAULT_BOX};
use gaussprime_cli::parse_count;
use gaussprime_cli::suites::{SuiteParams, SUITES};
use std::io::Write;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "gaussprime", version, about = "Experiments and identity suites for primes of the form a^2 + b^4")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Csv, global = true)]
    format: Format,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Record wall-clock runtimes instead of 0.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Prime-weighted count over a^2 + b^4 <= x against the asymptotic.
    Theorem1 {
        #[arg(long, value_parser = parse_count)]
        x: u64,
        /// Number of decades ending at x.
        #[arg(long, default_value_t = 1)]
        checkpoints: u32,
    },
    /// Spin sum over primes p = 1 (mod 4) up to x.
    Spin {
        #[arg(long, value_parser = parse_count)]
        x: u64,
        #[arg(long, default_value_t = 1)]
        checkpoints: u32,
    },
    /// Exhaustive and seeded identity checks; exits 1 on any violation.
    Identities {
        #[arg(long)]
        suite: String,
        #[arg(long, value_parser = parse_count)]
        bound: Option<u64>,
        #[arg(long, value_parser = parse_count)]
        cases: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Remainders r_d(x) over cubefree d <= D.
    Remainder {
        #[arg(long, value_parser = parse_count)]
        x: u64,
        /// Largest modulus (default: sqrt x).
        #[arg(long, value_parser = parse_count)]
        d_max: Option<u64>,
    },
    /// Lattice counts against their main term over a polar box.
    Lattice {
        #[arg(long, default_value_t = 10_000.0)]
        m: f64,
        #[arg(long, default_value_t = DEFAULT_BOX.norm_lo)]
        norm_lo: u64,
        #[arg(long, default_value_t = DEFAULT_BOX.norm_hi)]
        norm_hi: u64,
        #[arg(long, default_value_t = DEFAULT_BOX.arg_lo, allow_negative_numbers = true)]
        arg_lo: f64,
        #[arg(long, default_value_t = DEFAULT_BOX.arg_hi, allow_negative_numbers = true)]
        arg_hi: f64,
    },
    /// Numerical constants against closed forms.
    Constants {
        /// Prime cutoff for the partial Euler product.
        #[arg(long, value_parser = parse_count, default_value = "1000000")]
        p_max: u64,
    },
    /// Bilinear split of a seeded random sequence over squarefree l <= x.
    Decomp {
        #[arg(long, value_parser = parse_count, default_value = "10000")]
        x: u64,
        #[arg(long, default_value_t = 2)]
        r: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn run(command: Command, timing: bool) -> Result<Outcome, String> {
    let to_s = |e: gaussprime::Error| e.to_string();
    match command {
        Command::Theorem1 { x, checkpoints } => {
            if x > THEOREM1_MAX_X {
                return Err(format!("x = {x} exceeds {THEOREM1_MAX_X}"));
            }
            commands::theorem1(x, checkpoints, timing).map_err(to_s)
        }
        Command::Spin { x, checkpoints } => commands::spin(x, checkpoints).map_err(to_s),
        Command::Identities { suite, bound, cases, seed } => {
            commands::identities(&suite, SuiteParams { bound, cases, seed })
                .ok_or_else(|| format!("unknown suite `{suite}`; expected one of all, {}", SUITES.join(", ")))
        }
        Command::Remainder { x, d_max } => commands::remainder(x, d_max).map_err(to_s),
        Command::Lattice { m, norm_lo, norm_hi, arg_lo, arg_hi } => {
            if !(m.is_finite() && m > 0.0) {
                return Err(format!("M = {m} must be positive"));
            }
            commands::lattice(m, PolarBox { norm_lo, norm_hi, arg_lo, arg_hi }).map_err(to_s)
        }
        Command::Constants { p_max } => commands::constants(p_max).map_err(to_s),
        Command::Decomp { x, r, seed } => {
            if r < 2 {
                return Err(format!("r = {r} must be at least 2"));
            }
            commands::decomp(x, r, seed).map_err(to_s)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = cli.threads {
        if n == 0 {
            return usage("--threads must be positive");
        }
        builder = builder.num_threads(n);
    }
    let pool = match builder.build() {
        Ok(p) => p,
        Err(e) => return usage(e),
    };
    let timing = cli.timing;
    let outcome = match pool.install(|| run(cli.command, timing)) {
        Ok(o) => o,
        Err(e) => return usage(e),
    };
    let text = match cli.format {
        Format::Csv => outcome.report.to_csv(),
        Format::Json => outcome.report.to_json(),
    };
    if std::io::stdout().write_all(text.as_bytes()).is_err() {
        return ExitCode::from(2);
    }
    if outcome.identities_hold {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
