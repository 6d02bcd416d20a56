use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hankel_hurwitz::perturb::EntryKind;
use hankel_hurwitz::Tolerances;
use hankel_hurwitz_cli::commands::{self, Command, Format, Options};
use hankel_hurwitz_cli::error::EXIT_USAGE;
use hankel_hurwitz_cli::{input, CliError};

#[derive(Parser)]
#[command(
    name = "hankel-hurwitz",
    version,
    about = "Hurwitz stability of matrix polynomials via block Hankel matrices"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    #[command(flatten)]
    common: Common,
}

#[derive(Subcommand)]
enum Cmd {
    /// Stability verdict (exit 0 stable, 1 not stable, 2 indeterminate)
    Check { file: PathBuf },
    /// Markov parameters of the normalized polynomial
    Markov { file: PathBuf },
    /// Hankel pair and index sets
    Hankel { file: PathBuf },
    /// Inertia with respect to the imaginary axis
    Inertia { file: PathBuf },
    /// Finite spectrum from the companion pencil
    Eig { file: PathBuf },
    /// Compare the Bezoutian inertia with that of diag(H0, H1)
    BezoutVerify { file: PathBuf },
    /// Random perturbation experiment
    Perturb { file: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
}

#[derive(Args)]
struct Common {
    /// Zero and inertia tolerance
    #[arg(long, global = true)]
    tol: Option<f64>,
    #[arg(long, global = true)]
    hermitian_tol: Option<f64>,
    #[arg(long, global = true)]
    axis_tol: Option<f64>,
    /// Replace each Markov parameter by its Hermitian part
    #[arg(long, global = true)]
    symmetrize: bool,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Samples per eps
    #[arg(long, global = true, default_value_t = 200)]
    samples: usize,
    /// Comma-separated list; `1e-3.5` means 10^-3.5
    #[arg(long, global = true, value_parser = parse_eps)]
    eps: Option<EpsList>,
    #[arg(long, global = true, value_enum)]
    format: Option<FormatArg>,
    /// Append the eigenvalue cross-check to `check`
    #[arg(long, global = true)]
    oracle: bool,
    /// Complex perturbation entries instead of real ones
    #[arg(long, global = true)]
    complex: bool,
}

#[derive(Clone)]
struct EpsList(Vec<f64>);

fn parse_eps(s: &str) -> Result<EpsList, String> {
    commands::parse_eps_list(s).map(EpsList)
}

fn positive(name: &str, v: Option<f64>) -> Result<Option<f64>, CliError> {
    match v {
        Some(x) if !(x.is_finite() && x > 0.0) => Err(CliError::Usage(format!(
            "--{name} must be a positive number"
        ))),
        other => Ok(other),
    }
}

fn options(c: &Common) -> Result<Options, CliError> {
    let mut tol = Tolerances::default();
    if let Some(t) = positive("tol", c.tol)? {
        tol.zero_tol = t;
        tol.inertia_tol = t;
    }
    if let Some(t) = positive("hermitian-tol", c.hermitian_tol)? {
        tol.hermitian_tol = t;
    }
    if let Some(t) = positive("axis-tol", c.axis_tol)? {
        tol.axis_tol = t;
    }
    tol.symmetrize = c.symmetrize;
    let eps = c
        .eps
        .clone()
        .map_or_else(commands::default_eps_grid, |e| e.0);
    Ok(Options {
        tol,
        format: c.format.map(|f| match f {
            FormatArg::Json => Format::Json,
            FormatArg::Csv => Format::Csv,
        }),
        oracle: c.oracle,
        seed: c.seed,
        samples: c.samples,
        eps,
        entry_kind: if c.complex {
            EntryKind::Complex
        } else {
            EntryKind::Real
        },
        threads: None,
    })
}

fn run(cli: Cli) -> Result<i32, CliError> {
    let opts = options(&cli.common)?;
    let (cmd, file) = match cli.cmd {
        Cmd::Check { file } => (Command::Check, file),
        Cmd::Markov { file } => (Command::Markov, file),
        Cmd::Hankel { file } => (Command::Hankel, file),
        Cmd::Inertia { file } => (Command::Inertia, file),
        Cmd::Eig { file } => (Command::Eig, file),
        Cmd::BezoutVerify { file } => (Command::BezoutVerify, file),
        Cmd::Perturb { file } => (Command::Perturb, file),
    };
    let f = input::parse_input_path(&file)?;
    let out = commands::run_command(cmd, &f, &opts)?;
    print!("{}", out.body);
    Ok(out.code)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE as u8 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("hankel-hurwitz: {e}");
            if !matches!(e, CliError::Usage(_)) {
                println!("{}", e.to_json());
            }
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
