//! Test and demo instances: the 4×4 worked example and random generators
//! whose Markov sequences are Hermitian by construction.

use ndarray::Array2;
use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;

use crate::linalg::{self, CMat};
use crate::matpoly::MatrixPolynomial;

fn z(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// The 4×4 cubic with singular non-Hermitian leading coefficient and column
/// degrees `[3, 2, 2, 1]`. It is Hurwitz stable.
pub fn worked_example() -> MatrixPolynomial {
    // entries[r][c] lists the coefficients of λ³, λ², λ, 1
    let entries: [[[Complex64; 4]; 4]; 4] = [
        [
            [z(1., 0.), z(1., -1.), z(-4., 9.), z(-57., 43.)],
            [z(0., 0.), z(0., 0.), z(2., 1.), z(2., -3.)],
            [z(0., 0.), z(0., 0.), z(-1., 3.), z(-6., -4.)],
            [z(0., 0.), z(0., 0.), z(-2., 0.), z(-2., -2.)],
        ],
        [
            [z(0., 0.), z(0., -2.), z(12., 17.), z(-39., 76.)],
            [z(0., 0.), z(1., 0.), z(4., 0.), z(-2., 4.)],
            [z(0., 0.), z(0., 1.), z(0., 5.), z(-2., 0.)],
            [z(0., 0.), z(0., 0.), z(1., -1.), z(-1., -3.)],
        ],
        [
            [z(1., 0.), z(1., 1.), z(36., -1.), z(29., -51.)],
            [z(0., 0.), z(0., 0.), z(-2., 1.), z(-6., 7.)],
            [z(0., 0.), z(0., 0.), z(-1., -3.), z(-12., 4.)],
            [z(0., 0.), z(0., 0.), z(0., 0.), z(2., 2.)],
        ],
        [
            [z(0., 0.), z(0., 0.), z(-5., 2.), z(12., 17.)],
            [z(0., 0.), z(0., 1.), z(0., 0.), z(10., 16.)],
            [z(0., 0.), z(1., 0.), z(1., 0.), z(14., 8.)],
            [z(0., 0.), z(0., 0.), z(-1., 1.), z(-1., 1.)],
        ],
    ];
    let coeffs = (0..4)
        .map(|k| Array2::from_shape_fn((4, 4), |(r, c)| entries[r][c][k]))
        .collect();
    MatrixPolynomial::new(coeffs).expect("worked example is well formed")
}

/// Real scalar polynomial together with its roots.
#[derive(Debug, Clone)]
pub struct ScalarInstance {
    pub poly: MatrixPolynomial,
    /// Coefficients, highest power first.
    pub coeffs: Vec<f64>,
    pub roots: Vec<Complex64>,
}

impl ScalarInstance {
    pub fn is_stable(&self) -> bool {
        self.roots.iter().all(|r| r.re < 0.0)
    }
}

fn mul_linear(poly: &[f64], a1: f64, a0: f64) -> Vec<f64> {
    // poly · (a1·λ + a0), highest power first
    let mut out = vec![0.0; poly.len() + 1];
    for (i, &c) in poly.iter().enumerate() {
        out[i] += c * a1;
        out[i + 1] += c * a0;
    }
    out
}

fn mul_quadratic(poly: &[f64], b: f64, c: f64) -> Vec<f64> {
    // poly · (λ² + bλ + c)
    let mut out = vec![0.0; poly.len() + 2];
    for (i, &x) in poly.iter().enumerate() {
        out[i] += x;
        out[i + 1] += x * b;
        out[i + 2] += x * c;
    }
    out
}

/// Roots of a random real polynomial of the given degree. Real parts have
/// modulus in `[1e-3, 3]`, imaginary parts of complex pairs in `[0.1, 3]`.
/// With `stable` all real parts are negative; otherwise signs are random.
pub fn random_real_roots<R: Rng + ?Sized>(
    rng: &mut R,
    degree: usize,
    stable: bool,
) -> Vec<Complex64> {
    let mut roots = Vec::with_capacity(degree);
    while roots.len() < degree {
        let mag = rng.random_range(1e-3..3.0);
        let re = if !stable && rng.random_bool(0.5) {
            mag
        } else {
            -mag
        };
        if degree - roots.len() >= 2 && rng.random_bool(0.5) {
            let im = rng.random_range(0.1..3.0);
            roots.push(z(re, im));
            roots.push(z(re, -im));
        } else {
            roots.push(z(re, 0.0));
        }
    }
    roots
}

/// Real coefficients (highest first) of `lead · Π (λ − r)` for a
/// conjugation-closed root list.
pub fn real_poly_from_roots(lead: f64, roots: &[Complex64]) -> Vec<f64> {
    let mut poly = vec![lead];
    let mut i = 0;
    while i < roots.len() {
        let r = roots[i];
        if r.im != 0.0 {
            poly = mul_quadratic(&poly, -2.0 * r.re, r.norm_sqr());
            i += 2;
        } else {
            poly = mul_linear(&poly, 1.0, -r.re);
            i += 1;
        }
    }
    poly
}

fn random_lead<R: Rng + ?Sized>(rng: &mut R) -> f64 {
    let mag = rng.random_range(0.5..2.0);
    if rng.random_bool(0.5) {
        mag
    } else {
        -mag
    }
}

/// Random real scalar polynomial of degree in `1..=max_degree`, stable with
/// probability one half.
pub fn random_scalar<R: Rng + ?Sized>(rng: &mut R, max_degree: usize) -> ScalarInstance {
    let degree = rng.random_range(1..=max_degree.max(1));
    let stable = rng.random_bool(0.5);
    let roots = random_real_roots(rng, degree, stable);
    let coeffs = real_poly_from_roots(random_lead(rng), &roots);
    let poly = MatrixPolynomial::scalar(&coeffs).expect("finite coefficients");
    ScalarInstance {
        poly,
        coeffs,
        roots,
    }
}

/// Haar-like random unitary from the QR factorization of a complex Gaussian.
pub fn random_unitary<R: Rng + ?Sized>(rng: &mut R, p: usize) -> CMat {
    let g = Array2::from_shape_fn((p, p), |_| {
        z(rng.sample(StandardNormal), rng.sample(StandardNormal))
    });
    let (q, r) = linalg::householder_qr(&g).expect("QR of a Gaussian matrix");
    let mut q = q;
    for j in 0..p {
        let d = r[[j, j]];
        let phase = if d.norm() > 0.0 {
            d / d.norm()
        } else {
            linalg::ONE
        };
        q.column_mut(j).mapv_inplace(|x| x * phase);
    }
    q
}

/// Diagonal instance with real scalar entries and its exact spectrum.
#[derive(Debug, Clone)]
pub struct DiagonalInstance {
    pub poly: MatrixPolynomial,
    pub roots: Vec<Complex64>,
    pub column_degrees: Vec<usize>,
}

impl DiagonalInstance {
    pub fn is_stable(&self) -> bool {
        self.roots.iter().all(|r| r.re < 0.0)
    }
}

/// `diag(f₁,…,f_p)` with real `fᵢ` of heterogeneous degrees in
/// `0..=max_degree` (at least one positive), optionally mixed on the left by
/// a random unitary. The Markov sequence is real diagonal, hence Hermitian.
pub fn random_diagonal<R: Rng + ?Sized>(
    rng: &mut R,
    p: usize,
    max_degree: usize,
    mix: bool,
) -> DiagonalInstance {
    let stable = rng.random_bool(0.5);
    let mut degrees: Vec<usize> = (0..p).map(|_| rng.random_range(0..=max_degree)).collect();
    if degrees.iter().all(|&d| d == 0) {
        let k = rng.random_range(0..p);
        degrees[k] = rng.random_range(1..=max_degree.max(1));
    }
    let mut all_roots = Vec::new();
    let mut entries = Vec::with_capacity(p);
    for &d in &degrees {
        let roots = random_real_roots(rng, d, stable);
        let coeffs = real_poly_from_roots(random_lead(rng), &roots);
        entries.push(coeffs.iter().map(|&c| z(c, 0.0)).collect::<Vec<_>>());
        all_roots.extend(roots);
    }
    let mut poly = MatrixPolynomial::diagonal(&entries).expect("finite coefficients");
    if mix {
        poly = poly.left_mul(&random_unitary(rng, p));
    }
    DiagonalInstance {
        poly,
        roots: all_roots,
        column_degrees: degrees,
    }
}

/// Monic `V·diag(f₁,…,f_p)·V*` with real monic `fᵢ` of a common degree and a
/// random unitary `V`. The Markov sequence is Hermitian and generally not
/// diagonal.
pub fn random_monic_hermitian<R: Rng + ?Sized>(
    rng: &mut R,
    p: usize,
    degree: usize,
) -> DiagonalInstance {
    let stable = rng.random_bool(0.5);
    let v = random_unitary(rng, p);
    let vh = linalg::adjoint(&v);
    let mut all_roots = Vec::new();
    let mut entries = Vec::with_capacity(p);
    for _ in 0..p {
        let roots = random_real_roots(rng, degree, stable);
        let coeffs = real_poly_from_roots(1.0, &roots);
        entries.push(coeffs.iter().map(|&c| z(c, 0.0)).collect::<Vec<_>>());
        all_roots.extend(roots);
    }
    let diag = MatrixPolynomial::diagonal(&entries).expect("finite coefficients");
    let coeffs = diag.coeffs().iter().map(|a| v.dot(a).dot(&vh)).collect();
    let mut poly = MatrixPolynomial::new(coeffs).expect("finite coefficients");
    // the leading coefficient is V·V* = I up to rounding
    poly = poly
        .map_coefficients(|power, c| {
            if power == degree {
                linalg::identity(p)
            } else {
                c.clone()
            }
        })
        .expect("finite coefficients");
    DiagonalInstance {
        poly,
        roots: all_roots,
        column_degrees: vec![degree; p],
    }
}

/// Random complex polynomial with the given column degrees and a
/// well-conditioned leading column coefficient matrix.
pub fn random_column_reduced<R: Rng + ?Sized>(rng: &mut R, cdeg: &[usize]) -> MatrixPolynomial {
    let p = cdeg.len();
    let n = cdeg.iter().copied().max().unwrap_or(0);
    loop {
        let mut coeffs = vec![linalg::zeros(p, p); n + 1];
        for (k, &d) in cdeg.iter().enumerate() {
            for e in 0..=d {
                for r in 0..p {
                    coeffs[n - e][[r, k]] =
                        z(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
                }
            }
        }
        let f = MatrixPolynomial::new(coeffs).expect("finite coefficients");
        let prof = crate::matpoly::column_profile(&f, 1e-12).expect("no zero columns");
        if prof.cdeg == cdeg && prof.hcdc_condition < 1e3 {
            return f;
        }
    }
}
