//! Finite spectrum of a matrix polynomial from its companion pencil.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{self, CMat};
use crate::matpoly::MatrixPolynomial;

/// Counts of finite eigenvalues right of, left of and on the imaginary axis.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct AxisInertia {
    pub plus: usize,
    pub minus: usize,
    pub zero: usize,
}

impl AxisInertia {
    pub fn triple(&self) -> (usize, usize, usize) {
        (self.plus, self.minus, self.zero)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SpectrumReport {
    /// Sorted by real part ascending, then imaginary part descending.
    pub finite_eigs: Vec<Complex64>,
    pub gamma_infinity: usize,
    pub inertia_imag_axis: AxisInertia,
}

impl SpectrumReport {
    /// True when every finite eigenvalue has real part below `−axis_tol`.
    pub fn is_hurwitz(&self) -> bool {
        self.inertia_imag_axis.plus == 0 && self.inertia_imag_axis.zero == 0
    }
}

/// Relative `|β|` below which a generalized eigenvalue counts as infinite.
pub const DEFAULT_INFINITE_TOL: f64 = 1e-12;

/// Orders eigenvalues by real part, ties broken by larger imaginary part first.
///
/// Real parts within `1e-9·max(1, |re|)` of their neighbour count as tied, so
/// a conjugate pair whose real parts differ by rounding keeps `+im` first.
pub fn sort_eigenvalues(v: &mut [Complex64]) {
    v.sort_by(|a, b| a.re.total_cmp(&b.re).then(b.im.total_cmp(&a.im)));
    let mut start = 0;
    while start < v.len() {
        let mut end = start + 1;
        while end < v.len() && (v[end].re - v[end - 1].re).abs() <= 1e-9 * v[end].re.abs().max(1.0)
        {
            end += 1;
        }
        v[start..end].sort_by(|a, b| b.im.total_cmp(&a.im));
        start = end;
    }
}

/// `λ·diag(A₀, I, …, I) − C` with first block row `[−A₁ … −A_n]` and identity
/// blocks below the diagonal, for `F` of degree `n ≥ 1`.
pub fn companion_pencil(f: &MatrixPolynomial) -> (CMat, CMat) {
    let f = f.trimmed();
    let p = f.size();
    let n = f.nominal_degree();
    let np = n * p;
    let mut e = linalg::identity(np);
    let mut c = linalg::zeros(np, np);
    let coeffs = f.coeffs();
    e.slice_mut(ndarray::s![..p, ..p]).assign(&coeffs[0]);
    for k in 1..=n {
        c.slice_mut(ndarray::s![..p, (k - 1) * p..k * p])
            .assign(&coeffs[k].mapv(|z| -z));
    }
    for k in 1..n {
        c.slice_mut(ndarray::s![k * p..(k + 1) * p, (k - 1) * p..k * p])
            .assign(&linalg::identity(p));
    }
    (c, e)
}

/// Finite eigenvalues, their count by half-plane, and the number of
/// eigenvalues at infinity.
pub fn finite_spectrum(f: &MatrixPolynomial, axis_tol: f64) -> Result<SpectrumReport> {
    finite_spectrum_with(f, axis_tol, DEFAULT_INFINITE_TOL)
}

pub fn finite_spectrum_with(
    f: &MatrixPolynomial,
    axis_tol: f64,
    infinite_tol: f64,
) -> Result<SpectrumReport> {
    if f.is_zero() {
        return Err(Error::NotRegular);
    }
    let f = f.trimmed();
    if f.nominal_degree() == 0 {
        let sigma = linalg::singular_values(&f.coeffs()[0])?;
        if sigma[sigma.len() - 1] <= infinite_tol * sigma[0] {
            return Err(Error::NotRegular);
        }
        return Ok(SpectrumReport {
            finite_eigs: Vec::new(),
            gamma_infinity: 0,
            inertia_imag_axis: AxisInertia::default(),
        });
    }
    let (c, e) = companion_pencil(&f);
    let scale = linalg::max_abs(&c).max(linalg::max_abs(&e));
    let pairs = linalg::generalized_eigenvalues(&c, &e)?;
    let mut finite = Vec::new();
    let mut gamma_infinity = 0;
    for (alpha, beta) in pairs {
        if alpha.norm() <= 1e-14 * scale && beta.norm() <= 1e-14 * scale {
            return Err(Error::NotRegular);
        }
        let lam = alpha / beta;
        if beta.norm() <= infinite_tol * alpha.norm()
            || !lam.re.is_finite()
            || !lam.im.is_finite()
            || lam.norm() > 1e12
        {
            gamma_infinity += 1;
        } else {
            finite.push(lam);
        }
    }
    sort_eigenvalues(&mut finite);
    let mut inertia = AxisInertia::default();
    for lam in &finite {
        if lam.re > axis_tol {
            inertia.plus += 1;
        } else if lam.re < -axis_tol {
            inertia.minus += 1;
        } else {
            inertia.zero += 1;
        }
    }
    Ok(SpectrumReport {
        finite_eigs: finite,
        gamma_infinity,
        inertia_imag_axis: inertia,
    })
}

/// Greedy nearest matching: repeatedly pairs the globally closest remaining
/// reference and candidate. Returns, for each reference index, the index of
/// its candidate (`None` when candidates run out).
pub fn greedy_match(reference: &[Complex64], candidates: &[Complex64]) -> Vec<Option<usize>> {
    let mut pairs: Vec<(f64, usize, usize)> =
        Vec::with_capacity(reference.len() * candidates.len());
    for (i, a) in reference.iter().enumerate() {
        for (j, b) in candidates.iter().enumerate() {
            pairs.push(((a - b).norm(), i, j));
        }
    }
    pairs.sort_by(|x, y| x.0.total_cmp(&y.0).then(x.1.cmp(&y.1)).then(x.2.cmp(&y.2)));
    let mut out = vec![None; reference.len()];
    let mut used = vec![false; candidates.len()];
    for (_, i, j) in pairs {
        if out[i].is_none() && !used[j] {
            out[i] = Some(j);
            used[j] = true;
        }
    }
    out
}

/// Largest relative distance `|a − b| / max(1, |a|)` after greedy matching;
/// infinite if the lists differ in length.
pub fn matched_distance(a: &[Complex64], b: &[Complex64]) -> f64 {
    if a.len() != b.len() {
        return f64::INFINITY;
    }
    greedy_match(a, b)
        .iter()
        .enumerate()
        .map(|(i, j)| (a[i] - b[j.expect("equal lengths")]).norm() / a[i].norm().max(1.0))
        .fold(0.0, f64::max)
}
