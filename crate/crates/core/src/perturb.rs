//! Structured random perturbations of the coefficients and the resulting
//! agreement between the perturbed spectrum and the Hankel eigenvalues.
//!
//! The Hermitian requirement is dropped here: the Hankel matrices of the
//! perturbed polynomial are generally not Hermitian, and their eigenvalues
//! are taken from a general eigensolver. "In the right half-plane" means a
//! positive real part.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::config::Tolerances;
use crate::eig_oracle;
use crate::error::{Error, Result};
use crate::linalg;
use crate::matpoly::{self, MatrixPolynomial};
use crate::stability;

/// Environment variable capping the worker count.
pub const THREADS_ENV: &str = "HANKEL_HURWITZ_THREADS";

/// How perturbed eigenvalues are paired with unperturbed ones.
pub const MATCHING: &str = "greedy-nearest";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EntryKind {
    /// Real entries uniform in `(−1, 1)`.
    Real,
    /// Real and imaginary parts independently uniform in `(−1, 1)`.
    Complex,
}

#[derive(Debug, Clone, Serialize)]
pub struct PerturbConfig {
    pub eps_grid: Vec<f64>,
    pub samples_per_eps: usize,
    pub seed: u64,
    pub entry_kind: EntryKind,
    /// Worker cap; falls back to the environment variable, then to rayon's default.
    pub threads: Option<usize>,
}

impl PerturbConfig {
    pub fn new(eps_grid: Vec<f64>, samples_per_eps: usize, seed: u64) -> Self {
        Self {
            eps_grid,
            samples_per_eps,
            seed,
            entry_kind: EntryKind::Real,
            threads: None,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.samples_per_eps == 0 {
            return Err(Error::InvalidConfig(
                "at least one sample per eps is required".into(),
            ));
        }
        if self.eps_grid.iter().any(|e| !e.is_finite() || *e < 0.0) {
            return Err(Error::InvalidConfig(
                "eps values must be finite and nonnegative".into(),
            ));
        }
        if self.eps_grid.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidConfig(
                "eps grid must be sorted ascending".into(),
            ));
        }
        Ok(())
    }
}

/// `F + ε·ΔP` where column `k` of the coefficient `ΔP_i` of `λⁱ` is random
/// when `cdeg[k] ≥ i` and zero otherwise.
pub fn sample_perturbation<R: Rng + ?Sized>(
    f: &MatrixPolynomial,
    cdeg: &[usize],
    eps: f64,
    kind: EntryKind,
    rng: &mut R,
) -> MatrixPolynomial {
    let p = f.size();
    f.map_coefficients(|power, c| {
        let mut out = c.clone();
        for k in 0..p {
            if cdeg[k] < power {
                continue;
            }
            for r in 0..p {
                let re = rng.random_range(-1.0..1.0);
                let im = match kind {
                    EntryKind::Real => 0.0,
                    EntryKind::Complex => rng.random_range(-1.0..1.0),
                };
                out[[r, k]] += Complex64::new(re, im) * eps;
            }
        }
        out
    })
    .expect("perturbation keeps entries finite")
}

/// Eigenvalues of `F` and of the two Hankel matrices.
#[derive(Debug, Clone, Serialize)]
pub struct Spectra {
    pub f: Vec<Complex64>,
    pub h0: Vec<Complex64>,
    pub h1: Vec<Complex64>,
    pub f_unstable: bool,
}

fn sort_descending(v: &mut [Complex64]) {
    v.sort_by(|a, b| b.re.total_cmp(&a.re).then(b.im.total_cmp(&a.im)));
}

/// Oracle spectrum of `F` and general-eigensolver spectra of `H₀`, `H₁`.
pub fn relaxed_spectra(f: &MatrixPolynomial, tol: &Tolerances) -> Result<Spectra> {
    let oracle = eig_oracle::finite_spectrum_with(f, tol.axis_tol, tol.infinite_tol)?;
    let analysis = stability::analyze(f, tol)?;
    let mut h0 = linalg::eigenvalues(&analysis.hankel.h0)?;
    let mut h1 = linalg::eigenvalues(&analysis.hankel.h1)?;
    sort_descending(&mut h0);
    sort_descending(&mut h1);
    Ok(Spectra {
        f_unstable: !oracle.is_hurwitz(),
        f: oracle.finite_eigs,
        h0,
        h1,
    })
}

fn relative_errors(reference: &[Complex64], perturbed: &[Complex64]) -> Option<Vec<f64>> {
    if reference.len() != perturbed.len() {
        return None;
    }
    eig_oracle::greedy_match(reference, perturbed)
        .iter()
        .enumerate()
        .map(|(i, j)| {
            j.map(|j| {
                (perturbed[j] - reference[i]).norm() / reference[i].norm().max(f64::MIN_POSITIVE)
            })
        })
        .collect()
}

fn mean(v: &[f64]) -> f64 {
    if v.is_empty() {
        0.0
    } else {
        v.iter().sum::<f64>() / v.len() as f64
    }
}

/// Outcome of one perturbed sample.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SampleRecord {
    pub eps: f64,
    pub sample_index: usize,
    /// Set when the pipeline or the oracle failed; all other fields are then
    /// zero and the sample is left out of every tally.
    pub failure: Option<String>,
    pub f_unstable: bool,
    /// Some Hankel eigenvalue has real part `≤ 0`.
    pub h_escaped: bool,
    /// Unstable although every Hankel eigenvalue stays right of the axis.
    pub cat_i: bool,
    /// Stable although some Hankel eigenvalue left the right half-plane.
    pub cat_ii: bool,
    /// Unstable and some Hankel eigenvalue left the right half-plane.
    pub cat_iii: bool,
    pub r_f: Vec<f64>,
    pub r_h0: Vec<f64>,
    pub r_h1: Vec<f64>,
}

impl SampleRecord {
    pub fn r_f_mean(&self) -> f64 {
        mean(&self.r_f)
    }
    pub fn r_h0_mean(&self) -> f64 {
        mean(&self.r_h0)
    }
    pub fn r_h1_mean(&self) -> f64 {
        mean(&self.r_h1)
    }

    fn failed(eps: f64, sample_index: usize, why: String) -> Self {
        Self {
            eps,
            sample_index,
            failure: Some(why),
            f_unstable: false,
            h_escaped: false,
            cat_i: false,
            cat_ii: false,
            cat_iii: false,
            r_f: Vec::new(),
            r_h0: Vec::new(),
            r_h1: Vec::new(),
        }
    }
}

/// Per-ε tallies and mean relative errors per eigenvalue index.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EpsSummary {
    pub eps: f64,
    pub samples: usize,
    pub failures: usize,
    pub f_unstable: usize,
    pub h_escaped: usize,
    pub cat_i: usize,
    pub cat_ii: usize,
    pub cat_iii: usize,
    pub r_f: Vec<f64>,
    pub r_h0: Vec<f64>,
    pub r_h1: Vec<f64>,
}

impl EpsSummary {
    /// Samples where stability of `F` and the Hankel location disagree.
    pub fn violations(&self) -> usize {
        self.cat_i + self.cat_ii
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PerturbResult {
    pub matching: &'static str,
    pub entry_kind: EntryKind,
    pub seed: u64,
    pub baseline_f: Vec<Complex64>,
    pub baseline_h0: Vec<Complex64>,
    pub baseline_h1: Vec<Complex64>,
    pub summaries: Vec<EpsSummary>,
    pub records: Vec<SampleRecord>,
}

#[allow(clippy::too_many_arguments)]
fn run_sample(
    f: &MatrixPolynomial,
    cdeg: &[usize],
    base: &Spectra,
    eps: f64,
    rng: &mut ChaCha8Rng,
    config: &PerturbConfig,
    tol: &Tolerances,
    sample_index: usize,
) -> SampleRecord {
    let ft = sample_perturbation(f, cdeg, eps, config.entry_kind, rng);
    let spectra = match relaxed_spectra(&ft, tol) {
        Ok(s) => s,
        Err(e) => return SampleRecord::failed(eps, sample_index, e.to_string()),
    };
    let errors = (
        relative_errors(&base.f, &spectra.f),
        relative_errors(&base.h0, &spectra.h0),
        relative_errors(&base.h1, &spectra.h1),
    );
    let (r_f, r_h0, r_h1) = match errors {
        (Some(a), Some(b), Some(c)) => (a, b, c),
        _ => return SampleRecord::failed(eps, sample_index, "eigenvalue count changed".into()),
    };
    let h_escaped = spectra.h0.iter().chain(&spectra.h1).any(|z| z.re <= 0.0);
    let f_unstable = spectra.f_unstable;
    SampleRecord {
        eps,
        sample_index,
        failure: None,
        f_unstable,
        h_escaped,
        cat_i: f_unstable && !h_escaped,
        cat_ii: !f_unstable && h_escaped,
        cat_iii: f_unstable && h_escaped,
        r_f,
        r_h0,
        r_h1,
    }
}

fn summarize(eps: f64, records: &[SampleRecord], base: &Spectra) -> EpsSummary {
    let ok: Vec<&SampleRecord> = records.iter().filter(|r| r.failure.is_none()).collect();
    let count = |pred: fn(&SampleRecord) -> bool| ok.iter().filter(|r| pred(r)).count();
    let column_means = |len: usize, pick: fn(&SampleRecord) -> &Vec<f64>| -> Vec<f64> {
        (0..len)
            .map(|k| mean(&ok.iter().map(|r| pick(r)[k]).collect::<Vec<_>>()))
            .collect()
    };
    EpsSummary {
        eps,
        samples: records.len(),
        failures: records.len() - ok.len(),
        f_unstable: count(|r| r.f_unstable),
        h_escaped: count(|r| r.h_escaped),
        cat_i: count(|r| r.cat_i),
        cat_ii: count(|r| r.cat_ii),
        cat_iii: count(|r| r.cat_iii),
        r_f: column_means(base.f.len(), |r| &r.r_f),
        r_h0: column_means(base.h0.len(), |r| &r.r_h0),
        r_h1: column_means(base.h1.len(), |r| &r.r_h1),
    }
}

fn thread_count(config: &PerturbConfig) -> Option<usize> {
    config.threads.or_else(|| {
        std::env::var(THREADS_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
            .filter(|&n| n > 0)
    })
}

/// Runs every sample for every ε. Sample `j` at grid position `i` draws from
/// its own stream `(i << 32) | j` of a generator seeded with `config.seed`,
/// so the result does not depend on the worker count.
pub fn run_experiment(
    f: &MatrixPolynomial,
    config: &PerturbConfig,
    tol: &Tolerances,
) -> Result<PerturbResult> {
    config.validate()?;
    let profile = matpoly::column_profile(f, tol.zero_tol)?;
    if !profile.column_reduced {
        return Err(Error::NotColumnReduced {
            condition: profile.hcdc_condition,
        });
    }
    let f = matpoly::truncate_to_profile(f, &profile)?;
    let tol = Tolerances {
        symmetrize: false,
        ..*tol
    };
    let base = relaxed_spectra(&f, &tol)?;

    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = thread_count(config) {
        builder = builder.num_threads(n);
    }
    let pool = builder
        .build()
        .map_err(|e| Error::SolverFailure(format!("thread pool: {e}")))?;

    let mut summaries = Vec::with_capacity(config.eps_grid.len());
    let mut all = Vec::with_capacity(config.eps_grid.len() * config.samples_per_eps);
    for (ei, &eps) in config.eps_grid.iter().enumerate() {
        let records: Vec<SampleRecord> = pool.install(|| {
            (0..config.samples_per_eps)
                .into_par_iter()
                .map(|j| {
                    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
                    rng.set_stream(((ei as u64) << 32) | j as u64);
                    run_sample(&f, &profile.cdeg, &base, eps, &mut rng, config, &tol, j)
                })
                .collect()
        });
        summaries.push(summarize(eps, &records, &base));
        all.extend(records);
    }
    Ok(PerturbResult {
        matching: MATCHING,
        entry_kind: config.entry_kind,
        seed: config.seed,
        baseline_f: base.f,
        baseline_h0: base.h0,
        baseline_h1: base.h1,
        summaries,
        records: all,
    })
}
