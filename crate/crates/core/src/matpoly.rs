//! Dense complex matrix polynomials and their column structure.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{self, CMat};

/// Parity of a column degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(degree: usize) -> Self {
        if degree.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// `F(λ) = A₀λⁿ + A₁λⁿ⁻¹ + … + Aₙ` with square complex coefficients.
///
/// The coefficient list is stored as given (highest power first), so `n` is
/// the nominal degree; [`MatrixPolynomial::degree`] reports the actual one.
/// An optional list of column degrees overrides tolerance-based detection.
#[derive(Debug, Clone, PartialEq)]
pub struct MatrixPolynomial {
    p: usize,
    coeffs: Vec<CMat>,
    column_degrees: Option<Vec<usize>>,
}

impl MatrixPolynomial {
    /// Builds a polynomial from coefficients listed from the highest power down.
    pub fn new(coeffs: Vec<CMat>) -> Result<Self> {
        let first = coeffs.first().ok_or(Error::EmptyPolynomial)?;
        let p = first.nrows();
        if p == 0 {
            return Err(Error::EmptyPolynomial);
        }
        for (index, c) in coeffs.iter().enumerate() {
            if c.nrows() != p || c.ncols() != p {
                return Err(Error::ShapeMismatch {
                    index,
                    rows: c.nrows(),
                    cols: c.ncols(),
                    expected: p,
                });
            }
            if c.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
                return Err(Error::NonFinite { index });
            }
        }
        Ok(Self {
            p,
            coeffs,
            column_degrees: None,
        })
    }

    /// Builds a polynomial from coefficients listed from the constant term up.
    pub fn from_ascending(mut coeffs: Vec<CMat>) -> Result<Self> {
        coeffs.reverse();
        Self::new(coeffs)
    }

    /// Scalar polynomial from real coefficients, highest power first.
    pub fn scalar(coeffs: &[f64]) -> Result<Self> {
        Self::new(
            coeffs
                .iter()
                .map(|&c| CMat::from_elem((1, 1), Complex64::new(c, 0.0)))
                .collect(),
        )
    }

    /// Diagonal polynomial whose entries are the given scalar polynomials
    /// (each listed highest power first, possibly of different lengths).
    pub fn diagonal(entries: &[Vec<Complex64>]) -> Result<Self> {
        let p = entries.len();
        let n = entries.iter().map(|e| e.len()).max().unwrap_or(0);
        if n == 0 {
            return Err(Error::EmptyPolynomial);
        }
        let mut coeffs = vec![linalg::zeros(p, p); n];
        for (k, e) in entries.iter().enumerate() {
            let shift = n - e.len();
            for (i, &c) in e.iter().enumerate() {
                coeffs[shift + i][[k, k]] = c;
            }
        }
        Self::new(coeffs)
    }

    /// Fixes the column degrees explicitly. Entries of column `k` above
    /// `degrees[k]` are discarded.
    pub fn with_column_degrees(mut self, degrees: Vec<usize>) -> Result<Self> {
        if degrees.len() != self.p {
            return Err(Error::InvalidColumnDegrees(format!(
                "expected {} column degrees, got {}",
                self.p,
                degrees.len()
            )));
        }
        let n = self.nominal_degree();
        for (k, &d) in degrees.iter().enumerate() {
            if d > n {
                return Err(Error::InvalidColumnDegrees(format!(
                    "column {} has degree {} above the polynomial degree {}",
                    k + 1,
                    d,
                    n
                )));
            }
            if self
                .coefficient(d)
                .column(k)
                .iter()
                .all(|z| *z == linalg::ZERO)
            {
                return Err(Error::InvalidColumnDegrees(format!(
                    "column {} has a zero coefficient at its declared degree {}",
                    k + 1,
                    d
                )));
            }
            for e in d + 1..=n {
                let idx = n - e;
                self.coeffs[idx].column_mut(k).fill(linalg::ZERO);
            }
        }
        self.column_degrees = Some(degrees);
        Ok(self)
    }

    pub fn column_degrees_override(&self) -> Option<&[usize]> {
        self.column_degrees.as_deref()
    }

    pub fn size(&self) -> usize {
        self.p
    }

    /// Length of the coefficient list minus one.
    pub fn nominal_degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Highest power with a nonzero coefficient (0 for the zero polynomial).
    pub fn degree(&self) -> usize {
        let n = self.nominal_degree();
        self.coeffs
            .iter()
            .position(|c| c.iter().any(|z| *z != linalg::ZERO))
            .map_or(0, |i| n - i)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs
            .iter()
            .all(|c| c.iter().all(|z| *z == linalg::ZERO))
    }

    /// Coefficients from the highest power down.
    pub fn coeffs(&self) -> &[CMat] {
        &self.coeffs
    }

    /// Coefficient of `λ^power` (zero above the nominal degree).
    pub fn coefficient(&self, power: usize) -> CMat {
        let n = self.nominal_degree();
        if power > n {
            linalg::zeros(self.p, self.p)
        } else {
            self.coeffs[n - power].clone()
        }
    }

    /// Horner evaluation at `z`.
    pub fn evaluate(&self, z: Complex64) -> CMat {
        let mut acc = linalg::zeros(self.p, self.p);
        for c in &self.coeffs {
            acc = acc.mapv(|x| x * z) + c;
        }
        acc
    }

    /// `F^∨(λ) = Σ Aₖ* λ^{n−k}`, so that `F^∨(z) = F(z̄)*`.
    pub fn adjoint_vee(&self) -> Self {
        Self {
            p: self.p,
            coeffs: self.coeffs.iter().map(linalg::adjoint).collect(),
            column_degrees: None,
        }
    }

    /// `λⁿ F(1/λ)` with `n` the nominal degree.
    pub fn reversal(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Self {
            p: self.p,
            coeffs,
            column_degrees: None,
        }
    }

    /// `c · F` for a scalar `c`.
    pub fn scale(&self, c: Complex64) -> Self {
        Self {
            p: self.p,
            coeffs: self.coeffs.iter().map(|a| a.mapv(|z| z * c)).collect(),
            column_degrees: self.column_degrees.clone(),
        }
    }

    /// `U · F` for a constant matrix `U`. Column degrees are kept when set.
    pub fn left_mul(&self, u: &CMat) -> Self {
        Self {
            p: self.p,
            coeffs: self.coeffs.iter().map(|a| u.dot(a)).collect(),
            column_degrees: self.column_degrees.clone(),
        }
    }

    /// Applies `f` to every coefficient, given its power.
    pub fn map_coefficients(&self, mut f: impl FnMut(usize, &CMat) -> CMat) -> Result<Self> {
        let n = self.nominal_degree();
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| f(n - i, c))
            .collect();
        let mut out = Self::new(coeffs)?;
        out.column_degrees = self.column_degrees.clone();
        Ok(out)
    }

    /// Polynomial with coefficients listed highest first, trimmed so the
    /// leading coefficient is nonzero.
    pub fn trimmed(&self) -> Self {
        let n = self.nominal_degree();
        let d = self.degree();
        Self {
            p: self.p,
            coeffs: self.coeffs[n - d..].to_vec(),
            column_degrees: self.column_degrees.clone(),
        }
    }

    /// The substitution `λ ↦ iλ`: coefficient of `λʲ` gets the factor `iʲ`.
    pub fn rotate_argument(&self) -> Self {
        let n = self.nominal_degree();
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| {
                let f = linalg::I.powu((n - i) as u32);
                c.mapv(|z| z * f)
            })
            .collect();
        Self {
            p: self.p,
            coeffs,
            column_degrees: self.column_degrees.clone(),
        }
    }
}

/// Degrees and leading coefficients of the columns of a polynomial.
#[derive(Debug, Clone, PartialEq)]
pub struct ColumnProfile {
    pub cdeg: Vec<usize>,
    /// Column `k` is the coefficient of `λ^{cdeg[k]}` in column `k`.
    pub hcdc: CMat,
    pub column_reduced: bool,
    /// `σ_max / σ_min` of the leading column coefficient matrix.
    pub hcdc_condition: f64,
    pub parity: Vec<Parity>,
}

impl ColumnProfile {
    pub fn degree_sum(&self) -> usize {
        self.cdeg.iter().sum()
    }

    pub fn all_even(&self) -> bool {
        self.parity.iter().all(|&p| p == Parity::Even)
    }
}

/// Column degrees, leading column coefficients and column-reducedness.
///
/// An entry counts as nonzero when its modulus exceeds `zero_tol` times the
/// largest modulus in its column. Explicit column degrees stored on `f` take
/// precedence over detection.
pub fn column_profile(f: &MatrixPolynomial, zero_tol: f64) -> Result<ColumnProfile> {
    let p = f.size();
    let n = f.nominal_degree();
    let cdeg = match f.column_degrees_override() {
        Some(d) => d.to_vec(),
        None => {
            let mut cdeg = Vec::with_capacity(p);
            for k in 0..p {
                let col_max = f
                    .coeffs()
                    .iter()
                    .flat_map(|c| c.column(k).to_vec())
                    .fold(0.0_f64, |acc, z| acc.max(z.norm()));
                if col_max == 0.0 {
                    return Err(Error::ZeroColumn { column: k });
                }
                let threshold = zero_tol * col_max;
                let d = (0..=n)
                    .rev()
                    .find(|&e| {
                        f.coefficient(e)
                            .column(k)
                            .iter()
                            .any(|z| z.norm() > threshold)
                    })
                    .ok_or(Error::ZeroColumn { column: k })?;
                cdeg.push(d);
            }
            cdeg
        }
    };
    let mut hcdc = linalg::zeros(p, p);
    for (k, &d) in cdeg.iter().enumerate() {
        hcdc.column_mut(k).assign(&f.coefficient(d).column(k));
    }
    let sigma = linalg::singular_values(&hcdc)?;
    let smax = sigma.first().copied().unwrap_or(0.0);
    let smin = sigma.last().copied().unwrap_or(0.0);
    let column_reduced = smax > 0.0 && smin > zero_tol * smax;
    let hcdc_condition = if smin > 0.0 {
        smax / smin
    } else {
        f64::INFINITY
    };
    let parity = cdeg.iter().map(|&d| Parity::of(d)).collect();
    Ok(ColumnProfile {
        cdeg,
        hcdc,
        column_reduced,
        hcdc_condition,
        parity,
    })
}

/// Copy of `f` with every entry above its column degree set to zero and the
/// degrees pinned, so later stages see exactly the detected structure.
pub fn truncate_to_profile(
    f: &MatrixPolynomial,
    profile: &ColumnProfile,
) -> Result<MatrixPolynomial> {
    f.clone().with_column_degrees(profile.cdeg.clone())
}
