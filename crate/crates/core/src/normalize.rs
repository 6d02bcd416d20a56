//! Unitary left normalization making the leading column coefficient matrix
//! upper triangular with a positive real diagonal.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{self, CMat};
use crate::matpoly::{self, ColumnProfile, MatrixPolynomial};

/// `f_norm = q* · F` together with the column profile of `f_norm`.
#[derive(Debug, Clone)]
pub struct NormalizedPolynomial {
    pub q: CMat,
    pub f_norm: MatrixPolynomial,
    pub profile: ColumnProfile,
}

/// Householder QR of the leading column coefficient matrix, `hcdc = Q·R`,
/// with the phases of `R`'s diagonal moved into `Q`; every coefficient is
/// then multiplied by `Q*`.
///
/// Entries of `f_norm` strictly below the diagonal of its leading column
/// coefficient matrix are set to exact zeros (they are rounding residue).
pub fn qr_normalize(f: &MatrixPolynomial, zero_tol: f64) -> Result<NormalizedPolynomial> {
    let profile = matpoly::column_profile(f, zero_tol)?;
    normalize_with_profile(f, &profile)
}

pub(crate) fn normalize_with_profile(
    f: &MatrixPolynomial,
    profile: &ColumnProfile,
) -> Result<NormalizedPolynomial> {
    if !profile.column_reduced {
        return Err(Error::NotColumnReduced {
            condition: profile.hcdc_condition,
        });
    }
    let p = f.size();
    let f = matpoly::truncate_to_profile(f, profile)?;
    let (mut q, r) = linalg::householder_qr(&profile.hcdc)?;
    for j in 0..p {
        let d = r[[j, j]];
        let phase = d / d.norm();
        q.column_mut(j).mapv_inplace(|x| x * phase);
    }
    let qh = linalg::adjoint(&q);
    let mut f_norm = f.left_mul(&qh);
    let cdeg = profile.cdeg.clone();
    f_norm = f_norm.map_coefficients(|power, c| {
        let mut c = c.clone();
        for (k, &d) in cdeg.iter().enumerate() {
            if d == power {
                for i in k + 1..p {
                    c[[i, k]] = linalg::ZERO;
                }
                c[[k, k]] = Complex64::new(c[[k, k]].norm(), 0.0);
            }
        }
        c
    })?;
    let mut hcdc = linalg::zeros(p, p);
    for (k, &d) in cdeg.iter().enumerate() {
        hcdc.column_mut(k).assign(&f_norm.coefficient(d).column(k));
    }
    let out_profile = ColumnProfile {
        cdeg,
        hcdc,
        column_reduced: true,
        hcdc_condition: profile.hcdc_condition,
        parity: profile.parity.clone(),
    };
    Ok(NormalizedPolynomial {
        q,
        f_norm,
        profile: out_profile,
    })
}
