//! Inertia of Hermitian matrices, the Hurwitz verdict and the inertia of `F`.

use serde::Serialize;

use crate::config::Tolerances;
use crate::error::{Error, Result};
use crate::hankel::{self, HankelPair, IndexSets};
use crate::linalg::{self, CMat};
use crate::markov::{self, MarkovSequence};
use crate::matpoly::{self, ColumnProfile, MatrixPolynomial};
use crate::normalize::{self, NormalizedPolynomial};
use crate::split::{self, SplitResult};

/// Eigenvalue sign counts `(π, ν, δ)`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Inertia {
    pub pi: usize,
    pub nu: usize,
    pub delta: usize,
}

impl Inertia {
    pub fn size(&self) -> usize {
        self.pi + self.nu + self.delta
    }

    /// Vacuously true for the empty matrix.
    pub fn is_positive_definite(&self) -> bool {
        self.nu == 0 && self.delta == 0
    }

    pub fn sum(&self, other: &Inertia) -> Inertia {
        Inertia {
            pi: self.pi + other.pi,
            nu: self.nu + other.nu,
            delta: self.delta + other.delta,
        }
    }
}

/// Inertia of the Hermitian part of `m` and its eigenvalues in descending
/// order. No Hermitian check is made.
///
/// Signs are counted on the congruent matrix `D·H·D` with
/// `D = diag(|h_ii|^{-1/2})` (unit where `h_ii = 0`); by Sylvester's law it
/// has the same inertia, and it removes the diagonal scaling that otherwise
/// makes small but well-determined eigenvalues look like zeros. An
/// eigenvalue counts as zero when its modulus is at most `tol` times the
/// spectral radius of the equilibrated matrix.
pub fn hermitian_spectrum(m: &CMat, tol: f64) -> Result<(Inertia, Vec<f64>)> {
    if m.is_empty() {
        return Ok((Inertia::default(), Vec::new()));
    }
    let h = linalg::hermitian_part(m);
    let n = h.nrows();
    let d: Vec<f64> = (0..n)
        .map(|i| {
            let a = h[[i, i]].re.abs();
            if a > 0.0 {
                a.sqrt().recip()
            } else {
                1.0
            }
        })
        .collect();
    let scaled = CMat::from_shape_fn((n, n), |(i, j)| h[[i, j]] * (d[i] * d[j]));
    let eq = linalg::hermitian_eigenvalues(&scaled)?;
    let radius = eq.iter().fold(0.0_f64, |a, x| a.max(x.abs()));
    let cut = tol * radius;
    let mut inertia = Inertia::default();
    for &x in &eq {
        if x > cut {
            inertia.pi += 1;
        } else if x < -cut {
            inertia.nu += 1;
        } else {
            inertia.delta += 1;
        }
    }
    let mut eigs = linalg::hermitian_eigenvalues(&h)?;
    eigs.reverse();
    Ok((inertia, eigs))
}

/// Inertia of a Hermitian matrix; fails when `max|m − m*|` exceeds
/// `hermitian_tol · max(1, max|m|)`.
pub fn hermitian_inertia(m: &CMat, tol: f64, hermitian_tol: f64) -> Result<Inertia> {
    let deviation = linalg::hermitian_deviation(m);
    if deviation > hermitian_tol * linalg::max_abs(m).max(1.0) {
        return Err(Error::NotHermitian { deviation });
    }
    Ok(hermitian_spectrum(m, tol)?.0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Stable,
    NotStable,
    Indeterminate,
}

/// Closed range `[lo, hi]` for one component of the inertia of `F`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Bounds {
    pub lo: usize,
    pub hi: usize,
}

/// Counts of finite eigenvalues of `F` in the open right half-plane
/// (`plus`), the open left half-plane (`minus`) and on the imaginary axis
/// (`zero`). Exact when `determinate`; otherwise only ranges are known.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PolynomialInertia {
    pub plus: Bounds,
    pub minus: Bounds,
    pub zero: Bounds,
    pub determinate: bool,
}

impl PolynomialInertia {
    /// From the Hankel inertias. The unknown common divisor contributes at
    /// most `δ₀ + δ₁` eigenvalues off the axis.
    pub fn from_hankel(h0: &Inertia, h1: &Inertia) -> Self {
        let t = h0.sum(h1);
        PolynomialInertia {
            plus: Bounds {
                lo: t.nu,
                hi: t.nu + t.delta,
            },
            minus: Bounds {
                lo: t.pi,
                hi: t.pi + t.delta,
            },
            zero: Bounds { lo: 0, hi: t.delta },
            determinate: t.delta == 0,
        }
    }

    /// `(γ₊, γ₋, γ₀)` when determinate.
    pub fn triple(&self) -> Option<(usize, usize, usize)> {
        self.determinate
            .then_some((self.plus.lo, self.minus.lo, self.zero.lo))
    }
}

/// Every intermediate stage of the pipeline.
#[derive(Debug, Clone)]
pub struct Analysis {
    pub profile: ColumnProfile,
    pub normalized: NormalizedPolynomial,
    pub split: SplitResult,
    pub sequence: MarkovSequence,
    pub index_sets: IndexSets,
    pub hankel: HankelPair,
}

/// Runs normalize → split → Markov parameters → Hankel assembly.
/// The sequence is symmetrized first when `tol.symmetrize` is set.
pub fn analyze(f: &MatrixPolynomial, tol: &Tolerances) -> Result<Analysis> {
    let profile = matpoly::column_profile(f, tol.zero_tol)?;
    let normalized = normalize::normalize_with_profile(f, &profile)?;
    let split = split::split(&normalized.f_norm, &normalized.profile)?;
    let mut sequence = markov::markov_parameters(&split, tol)?;
    if tol.symmetrize {
        sequence = sequence.symmetrized(tol.hermitian_tol);
    }
    let index_sets = hankel::index_sets(&split);
    let hankel = hankel::assemble_hankel(&sequence, &index_sets, &split)?;
    Ok(Analysis {
        profile,
        normalized,
        split,
        sequence,
        index_sets,
        hankel,
    })
}

/// Inertia and descending eigenvalues of one Hankel matrix.
pub type Spectrum = (Inertia, Vec<f64>);

#[derive(Debug, Clone, Serialize)]
pub struct StabilityReport {
    pub verdict: Verdict,
    pub inertia_f: Option<PolynomialInertia>,
    pub h0_inertia: Inertia,
    pub h1_inertia: Inertia,
    pub h0_eigs: Vec<f64>,
    pub h1_eigs: Vec<f64>,
    pub hermitian_deviation: f64,
    pub column_degrees: Vec<usize>,
    pub diagnostics: Vec<String>,
}

impl Analysis {
    /// Spectra of both Hankel matrices, computed concurrently.
    pub fn hankel_spectra(&self, tol: &Tolerances) -> Result<(Spectrum, Spectrum)> {
        let (a, b) = rayon::join(
            || hermitian_spectrum(&self.hankel.h0, tol.inertia_tol),
            || hermitian_spectrum(&self.hankel.h1, tol.inertia_tol),
        );
        Ok((a?, b?))
    }

    pub fn report(&self, tol: &Tolerances) -> Result<StabilityReport> {
        let ((h0_inertia, h0_eigs), (h1_inertia, h1_eigs)) = self.hankel_spectra(tol)?;
        let mut diagnostics = Vec::new();
        let (verdict, inertia_f) = if self.sequence.is_hermitian {
            let verdict = if h0_inertia.nu + h1_inertia.nu > 0 {
                Verdict::NotStable
            } else if h0_inertia.delta + h1_inertia.delta > 0 {
                diagnostics.push(
                    "a Hankel matrix is singular within tolerance; the criterion cannot decide, \
                     compare with the eigenvalue oracle"
                        .to_string(),
                );
                Verdict::Indeterminate
            } else {
                Verdict::Stable
            };
            (
                verdict,
                Some(PolynomialInertia::from_hankel(&h0_inertia, &h1_inertia)),
            )
        } else {
            diagnostics.push(format!(
                "Markov sequence is not Hermitian (deviation {:.3e}); inertias shown are of the \
                 Hermitian parts and carry no guarantee",
                self.sequence.hermitian_deviation
            ));
            (Verdict::Indeterminate, None)
        };
        Ok(StabilityReport {
            verdict,
            inertia_f,
            h0_inertia,
            h1_inertia,
            h0_eigs,
            h1_eigs,
            hermitian_deviation: self.sequence.hermitian_deviation,
            column_degrees: self.profile.cdeg.clone(),
            diagnostics,
        })
    }
}

/// Hurwitz verdict for a column-reduced `F` of positive degree.
///
/// With a Hermitian Markov sequence, `F` is stable exactly when `H₀` and
/// `H₁` are both positive definite. A negative eigenvalue gives
/// `NotStable`; zero eigenvalues alone give `Indeterminate`, as does a
/// non-Hermitian sequence.
pub fn hurwitz_check(f: &MatrixPolynomial, tol: &Tolerances) -> Result<StabilityReport> {
    analyze(f, tol)?.report(tol)
}

/// Inertia of `F` with respect to the imaginary axis from the Hankel pair.
pub fn polynomial_inertia(f: &MatrixPolynomial, tol: &Tolerances) -> Result<PolynomialInertia> {
    let analysis = analyze(f, tol)?;
    if !analysis.sequence.is_hermitian {
        return Err(Error::NotHermitianSequence {
            deviation: analysis.sequence.hermitian_deviation,
        });
    }
    let ((i0, _), (i1, _)) = analysis.hankel_spectra(tol)?;
    Ok(PolynomialInertia::from_hankel(&i0, &i1))
}
