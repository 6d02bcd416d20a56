use hankel_hurwitz::bezout::{self, BezoutCheck};
use hankel_hurwitz::eig_oracle::{self, SpectrumReport};
use hankel_hurwitz::hankel::IndexSets;
use hankel_hurwitz::perturb::{self, EntryKind, PerturbConfig, PerturbResult};
use hankel_hurwitz::stability::{self, PolynomialInertia};
use hankel_hurwitz::{CMat, Inertia, MatrixPolynomial, StabilityReport, Tolerances, Verdict};
use serde::Serialize;

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Check,
    Markov,
    Hankel,
    Inertia,
    Eig,
    BezoutVerify,
    Perturb,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Check => "check",
            Command::Markov => "markov",
            Command::Hankel => "hankel",
            Command::Inertia => "inertia",
            Command::Eig => "eig",
            Command::BezoutVerify => "bezout-verify",
            Command::Perturb => "perturb",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone)]
pub struct Options {
    pub tol: Tolerances,
    /// `None` picks the command's default (CSV for `perturb`, JSON otherwise).
    pub format: Option<Format>,
    pub oracle: bool,
    pub seed: u64,
    pub samples: usize,
    pub eps: Vec<f64>,
    pub entry_kind: EntryKind,
    pub threads: Option<usize>,
}

/// `10^-3.5, 10^-3.4, …, 10^-3.0`
pub fn default_eps_grid() -> Vec<f64> {
    (0..6).map(|k| 10f64.powf(-3.5 + 0.1 * k as f64)).collect()
}

impl Default for Options {
    fn default() -> Self {
        Options {
            tol: Tolerances::default(),
            format: None,
            oracle: false,
            seed: 0,
            samples: 200,
            eps: default_eps_grid(),
            entry_kind: EntryKind::Real,
            threads: None,
        }
    }
}

/// Exit status and the text written to stdout.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub body: String,
}

/// The `check` exit status: 0 stable, 1 not stable, 2 indeterminate.
pub fn verdict_exit_code(v: Verdict) -> i32 {
    match v {
        Verdict::Stable => 0,
        Verdict::NotStable => 1,
        Verdict::Indeterminate => 2,
    }
}

type JsonMatrix = Vec<Vec<[f64; 2]>>;

fn matrix(m: &CMat) -> JsonMatrix {
    m.rows()
        .into_iter()
        .map(|r| r.iter().map(|z| [z.re, z.im]).collect())
        .collect()
}

#[derive(Serialize)]
struct OracleSection {
    #[serde(flatten)]
    spectrum: SpectrumReport,
    verdict: Verdict,
    /// `null` when the Hankel verdict is indeterminate.
    agrees: Option<bool>,
}

#[derive(Serialize)]
struct CheckBody {
    command: &'static str,
    exit_code: i32,
    #[serde(flatten)]
    report: StabilityReport,
    tolerances: Tolerances,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle: Option<OracleSection>,
}

#[derive(Serialize)]
struct MarkovBody {
    command: &'static str,
    l: usize,
    hermitian_deviation: f64,
    is_hermitian: bool,
    sa_residual: f64,
    /// Unitary `Q` with the parameters computed for `Q*·F`.
    normalizer: JsonMatrix,
    params: Vec<JsonMatrix>,
}

#[derive(Serialize)]
struct HankelBody {
    command: &'static str,
    h0: JsonMatrix,
    h1: JsonMatrix,
    block_offsets_h0: Vec<usize>,
    block_offsets_h1: Vec<usize>,
    all_even: bool,
    /// One-based.
    index_sets: IndexSets,
}

#[derive(Serialize)]
struct InertiaBody {
    command: &'static str,
    triple: Option<(usize, usize, usize)>,
    #[serde(flatten)]
    inertia: PolynomialInertia,
    h0_inertia: Inertia,
    h1_inertia: Inertia,
}

#[derive(Serialize)]
struct EigBody {
    command: &'static str,
    #[serde(flatten)]
    spectrum: SpectrumReport,
    hurwitz: bool,
}

#[derive(Serialize)]
struct BezoutBody {
    command: &'static str,
    #[serde(flatten)]
    check: BezoutCheck,
}

#[derive(Serialize)]
struct PerturbBody<'a> {
    command: &'static str,
    eps_grid: &'a [f64],
    samples_per_eps: usize,
    #[serde(flatten)]
    result: &'a PerturbResult,
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("reports serialize");
    s.push('\n');
    s
}

fn json_only(cmd: Command, opts: &Options) -> Result<(), CliError> {
    match opts.format {
        Some(Format::Csv) => Err(CliError::Usage(format!(
            "--format csv is only available for perturb, not {}",
            cmd.name()
        ))),
        _ => Ok(()),
    }
}

/// Runs one subcommand on `f`.
pub fn run_command(
    cmd: Command,
    f: &MatrixPolynomial,
    opts: &Options,
) -> Result<Outcome, CliError> {
    if cmd != Command::Perturb {
        json_only(cmd, opts)?;
    }
    let tol = &opts.tol;
    match cmd {
        Command::Check => {
            let report = stability::hurwitz_check(f, tol)?;
            let code = verdict_exit_code(report.verdict);
            let oracle = if opts.oracle {
                let spectrum = eig_oracle::finite_spectrum_with(f, tol.axis_tol, tol.infinite_tol)?;
                let verdict = if spectrum.is_hurwitz() {
                    Verdict::Stable
                } else {
                    Verdict::NotStable
                };
                let agrees =
                    (report.verdict != Verdict::Indeterminate).then(|| report.verdict == verdict);
                Some(OracleSection {
                    spectrum,
                    verdict,
                    agrees,
                })
            } else {
                None
            };
            let body = CheckBody {
                command: cmd.name(),
                exit_code: code,
                report,
                tolerances: *tol,
                oracle,
            };
            Ok(Outcome {
                code,
                body: to_json(&body),
            })
        }
        Command::Markov => {
            let a = stability::analyze(f, tol)?;
            let seq = &a.sequence;
            let body = MarkovBody {
                command: cmd.name(),
                l: seq.l,
                hermitian_deviation: seq.hermitian_deviation,
                is_hermitian: seq.is_hermitian,
                sa_residual: hankel_hurwitz::markov::sa_residual(seq, &a.split),
                normalizer: matrix(&a.normalized.q),
                params: seq.params.iter().map(matrix).collect(),
            };
            Ok(Outcome {
                code: 0,
                body: to_json(&body),
            })
        }
        Command::Hankel => {
            let a = stability::analyze(f, tol)?;
            let body = HankelBody {
                command: cmd.name(),
                h0: matrix(&a.hankel.h0),
                h1: matrix(&a.hankel.h1),
                block_offsets_h0: a.hankel.block_offsets_h0.clone(),
                block_offsets_h1: a.hankel.block_offsets_h1.clone(),
                all_even: a.hankel.all_even,
                index_sets: a.index_sets.one_based(),
            };
            Ok(Outcome {
                code: 0,
                body: to_json(&body),
            })
        }
        Command::Inertia => {
            let a = stability::analyze(f, tol)?;
            if !a.sequence.is_hermitian {
                return Err(hankel_hurwitz::Error::NotHermitianSequence {
                    deviation: a.sequence.hermitian_deviation,
                }
                .into());
            }
            let ((i0, _), (i1, _)) = a.hankel_spectra(tol)?;
            let inertia = PolynomialInertia::from_hankel(&i0, &i1);
            let body = InertiaBody {
                command: cmd.name(),
                triple: inertia.triple(),
                inertia,
                h0_inertia: i0,
                h1_inertia: i1,
            };
            Ok(Outcome {
                code: 0,
                body: to_json(&body),
            })
        }
        Command::Eig => {
            let spectrum = eig_oracle::finite_spectrum_with(f, tol.axis_tol, tol.infinite_tol)?;
            let body = EigBody {
                command: cmd.name(),
                hurwitz: spectrum.is_hurwitz(),
                spectrum,
            };
            Ok(Outcome {
                code: 0,
                body: to_json(&body),
            })
        }
        Command::BezoutVerify => {
            let check = bezout::bezout_inertia_check(f, tol)?;
            let code = if check.matches { 0 } else { 1 };
            Ok(Outcome {
                code,
                body: to_json(&BezoutBody {
                    command: cmd.name(),
                    check,
                }),
            })
        }
        Command::Perturb => {
            let mut config = PerturbConfig::new(opts.eps.clone(), opts.samples, opts.seed);
            config.entry_kind = opts.entry_kind;
            config.threads = opts.threads;
            let result = perturb::run_experiment(f, &config, tol)?;
            let body = match opts.format.unwrap_or(Format::Csv) {
                Format::Csv => perturb_csv(&result)?,
                Format::Json => to_json(&PerturbBody {
                    command: cmd.name(),
                    eps_grid: &opts.eps,
                    samples_per_eps: opts.samples,
                    result: &result,
                }),
            };
            Ok(Outcome { code: 0, body })
        }
    }
}

/// Column order of the `perturb` CSV.
pub const PERTURB_COLUMNS: [&str; 10] = [
    "eps",
    "sample_index",
    "f_unstable",
    "h_escaped",
    "cat_i",
    "cat_ii",
    "cat_iii",
    "r_f_mean",
    "r_h0_mean",
    "r_h1_mean",
];

fn float_field(x: f64) -> String {
    if x.is_finite() {
        format!("{x:e}")
    } else {
        String::new()
    }
}

/// One row per sample. Failed samples keep their row with empty error fields.
pub fn perturb_csv(result: &PerturbResult) -> Result<String, CliError> {
    let io = |e: csv::Error| CliError::Io {
        path: "<stdout>".into(),
        message: e.to_string(),
    };
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(PERTURB_COLUMNS).map_err(io)?;
    for r in &result.records {
        let ok = r.failure.is_none();
        let pick = |x: f64| if ok { float_field(x) } else { String::new() };
        w.write_record([
            float_field(r.eps),
            r.sample_index.to_string(),
            r.f_unstable.to_string(),
            r.h_escaped.to_string(),
            r.cat_i.to_string(),
            r.cat_ii.to_string(),
            r.cat_iii.to_string(),
            pick(r.r_f_mean()),
            pick(r.r_h0_mean()),
            pick(r.r_h1_mean()),
        ])
        .map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Io {
        path: "<stdout>".into(),
        message: e.to_string(),
    })?;
    Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
}

/// Parses one `--eps` value. Besides ordinary floats, `1e-3.5` is read as
/// `10^-3.5`.
pub fn parse_eps(s: &str) -> Result<f64, String> {
    let s = s.trim();
    if let Ok(x) = s.parse::<f64>() {
        return Ok(x);
    }
    let (mant, exp) = s
        .split_once(['e', 'E'])
        .ok_or_else(|| format!("not a number: {s:?}"))?;
    let mant: f64 = mant.parse().map_err(|_| format!("not a number: {s:?}"))?;
    let exp: f64 = exp.parse().map_err(|_| format!("not a number: {s:?}"))?;
    let x = mant * 10f64.powf(exp);
    if x.is_finite() {
        Ok(x)
    } else {
        Err(format!("out of range: {s:?}"))
    }
}

/// Comma-separated `--eps` list.
pub fn parse_eps_list(s: &str) -> Result<Vec<f64>, String> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(parse_eps)
        .collect()
}
