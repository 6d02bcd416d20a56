//! Dense complex matrix helpers on top of `ndarray` and LAPACK.

use ndarray::{s, Array2};
use ndarray_linalg::{EigGeneralized, EigVals, EigValsh, Inverse, QRSquare, SVD, UPLO};
use num_complex::Complex64;

use crate::error::{Error, Result};

/// Dense complex matrix.
pub type CMat = Array2<Complex64>;

pub const ZERO: Complex64 = Complex64::new(0.0, 0.0);
pub const ONE: Complex64 = Complex64::new(1.0, 0.0);
pub const I: Complex64 = Complex64::new(0.0, 1.0);

pub fn zeros(rows: usize, cols: usize) -> CMat {
    Array2::from_elem((rows, cols), ZERO)
}

pub fn identity(n: usize) -> CMat {
    Array2::from_shape_fn((n, n), |(i, j)| if i == j { ONE } else { ZERO })
}

/// Conjugate transpose.
pub fn adjoint(m: &CMat) -> CMat {
    m.t().mapv(|z| z.conj())
}

pub fn max_abs(m: &CMat) -> f64 {
    m.iter().fold(0.0, |acc, z| acc.max(z.norm()))
}

pub fn frobenius(m: &CMat) -> f64 {
    m.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// Largest entry modulus of `m − m*`.
pub fn hermitian_deviation(m: &CMat) -> f64 {
    let (rows, cols) = m.dim();
    if rows != cols {
        return f64::INFINITY;
    }
    let mut dev = 0.0_f64;
    for i in 0..rows {
        for j in i..cols {
            dev = dev.max((m[[i, j]] - m[[j, i]].conj()).norm());
        }
    }
    dev
}

/// Hermitian part `(m + m*) / 2`.
pub fn hermitian_part(m: &CMat) -> CMat {
    (m + &adjoint(m)).mapv(|z| z * 0.5)
}

/// Rows `rows` and columns `cols` of `m`, both in the given order.
pub fn submatrix(m: &CMat, rows: &[usize], cols: &[usize]) -> CMat {
    Array2::from_shape_fn((rows.len(), cols.len()), |(i, j)| m[[rows[i], cols[j]]])
}

/// Singular values in descending order.
pub fn singular_values(m: &CMat) -> Result<Vec<f64>> {
    if m.is_empty() {
        return Ok(Vec::new());
    }
    let (_, sigma, _) = m.svd(false, false)?;
    Ok(sigma.to_vec())
}

/// Eigenvalues of a Hermitian matrix in ascending order. Only the lower
/// triangle is referenced.
pub fn hermitian_eigenvalues(m: &CMat) -> Result<Vec<f64>> {
    if m.is_empty() {
        return Ok(Vec::new());
    }
    Ok(m.eigvalsh(UPLO::Lower)?.to_vec())
}

/// Eigenvalues of a general square matrix, unordered.
pub fn eigenvalues(m: &CMat) -> Result<Vec<Complex64>> {
    if m.is_empty() {
        return Ok(Vec::new());
    }
    Ok(m.eigvals()?.to_vec())
}

/// Generalized eigenvalues of the pencil `λ·b − a` as homogeneous pairs `(α, β)`
/// with `λ = α/β`.
pub fn generalized_eigenvalues(a: &CMat, b: &CMat) -> Result<Vec<(Complex64, Complex64)>> {
    if a.is_empty() {
        return Ok(Vec::new());
    }
    let (values, _) = (a, b).eig_generalized(None)?;
    Ok(values
        .iter()
        .map(|v| match v {
            ndarray_linalg::GeneralizedEigenvalue::Finite(_, pair) => *pair,
            ndarray_linalg::GeneralizedEigenvalue::Indeterminate(pair) => *pair,
        })
        .collect())
}

/// Householder QR of a square matrix (LAPACK `geqrf`/`ungqr`).
pub fn householder_qr(m: &CMat) -> Result<(CMat, CMat)> {
    if m.is_empty() {
        return Ok((zeros(0, 0), zeros(0, 0)));
    }
    Ok(m.qr_square()?)
}

pub fn inverse(m: &CMat) -> Result<CMat> {
    if m.is_empty() {
        return Ok(zeros(0, 0));
    }
    Ok(m.inv()?)
}

/// Solves `x · u = b` for `x` where `u` is upper triangular. Fails when a
/// diagonal entry of `u` has modulus at most `tol · max|u|`.
pub fn solve_upper_right(b: &CMat, u: &CMat, tol: f64) -> Result<CMat> {
    let n = u.nrows();
    let scale = max_abs(u);
    for j in 0..n {
        if u[[j, j]].norm() <= tol * scale || u[[j, j]].norm() == 0.0 {
            return Err(Error::SingularLeadingBlock { index: j });
        }
    }
    let mut x = zeros(b.nrows(), n);
    for r in 0..b.nrows() {
        for j in 0..n {
            let mut acc = b[[r, j]];
            for i in 0..j {
                acc -= x[[r, i]] * u[[i, j]];
            }
            x[[r, j]] = acc / u[[j, j]];
        }
    }
    Ok(x)
}

/// True when every entry strictly below the diagonal is at most
/// `tol · max|m|` in modulus.
pub fn is_upper_triangular(m: &CMat, tol: f64) -> bool {
    let scale = max_abs(m);
    m.indexed_iter()
        .all(|((i, j), z)| i <= j || z.norm() <= tol * scale)
}

/// Block-diagonal matrix `diag(a, b)`.
pub fn block_diag(a: &CMat, b: &CMat) -> CMat {
    let (ra, ca) = a.dim();
    let (rb, cb) = b.dim();
    let mut out = zeros(ra + rb, ca + cb);
    out.slice_mut(s![..ra, ..ca]).assign(a);
    out.slice_mut(s![ra.., ca..]).assign(b);
    out
}
