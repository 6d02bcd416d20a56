//! Anderson–Jury Bézoutian and the finite Bézoutian, used as an independent
//! inertia check on the Hankel pair.

use serde::Serialize;

use crate::config::Tolerances;
use crate::error::{Error, Result};
use crate::linalg::{self, CMat};
use crate::matpoly::MatrixPolynomial;
use crate::stability::{self, Analysis, Inertia};

/// Full Bézoutian and its finite core.
#[derive(Debug, Clone)]
pub struct BezoutMatrix {
    /// Block `(j, k)` (rows `j·p..`, columns `k·p..`) is the coefficient of
    /// `λʲμᵏ` in the generating function.
    pub full: CMat,
    /// Relative size of `Σ_{a+b=c} C_{a,b}` over all `c`.
    pub precondition_residual: f64,
}

// C_{a,b} = M̃_a L̃_b − M_a L_b with ascending coefficient indices.
fn numerator(
    mt: &MatrixPolynomial,
    lt: &MatrixPolynomial,
    m: &MatrixPolynomial,
    l: &MatrixPolynomial,
    a: usize,
    b: usize,
) -> CMat {
    mt.coefficient(a).dot(&lt.coefficient(b)) - m.coefficient(a).dot(&l.coefficient(b))
}

/// The block matrix `B` with `Σ λʲ B_{jk} μᵏ = (M̃(λ)L̃(μ) − M(λ)L(μ)) / (λ − μ)`.
///
/// Computed by exact synthetic division: writing the numerator as
/// `Σ C_{a,b} λᵃ μᵇ`, the quotient blocks are `B_{j,k} = Σ_{r=0}^{k} C_{j+1+r, k−r}`.
/// The division is exact only when `M̃L̃ = ML`; the relative defect of that
/// identity must not exceed `tol`.
pub fn anderson_jury(
    mt: &MatrixPolynomial,
    lt: &MatrixPolynomial,
    m: &MatrixPolynomial,
    l: &MatrixPolynomial,
    tol: f64,
) -> Result<BezoutMatrix> {
    let p = mt.size();
    let n1 = mt.nominal_degree().max(m.nominal_degree()).max(1);
    let n2 = lt.nominal_degree().max(l.nominal_degree()).max(1);
    let c = |a: usize, b: usize| numerator(mt, lt, m, l, a, b);

    let mut scale = 0.0_f64;
    let mut defect = 0.0_f64;
    for total in 0..=n1 + n2 {
        let mut sum = linalg::zeros(p, p);
        for a in 0..=total.min(n1) {
            let b = total - a;
            if b > n2 {
                continue;
            }
            let left = mt.coefficient(a).dot(&lt.coefficient(b));
            let right = m.coefficient(a).dot(&l.coefficient(b));
            scale = scale
                .max(linalg::max_abs(&left))
                .max(linalg::max_abs(&right));
            sum = sum + left - right;
        }
        defect = defect.max(linalg::max_abs(&sum));
    }
    let residual = defect / scale.max(f64::MIN_POSITIVE);
    if defect > 0.0 && residual > tol {
        return Err(Error::NotACommonMultiple { residual });
    }

    let mut full = linalg::zeros(n1 * p, n2 * p);
    for j in 0..n1 {
        for k in 0..n2 {
            let mut block = linalg::zeros(p, p);
            for r in 0..=k {
                block = block + c(j + 1 + r, k - r);
            }
            full.slice_mut(ndarray::s![j * p..(j + 1) * p, k * p..(k + 1) * p])
                .assign(&block);
        }
    }
    Ok(BezoutMatrix {
        full,
        precondition_residual: if defect == 0.0 { 0.0 } else { residual },
    })
}

/// Row or column positions `j·p + c` with `j < degrees[c]`.
pub fn core_positions(degrees: &[usize], blocks: usize) -> Vec<usize> {
    let p = degrees.len();
    (0..blocks)
        .flat_map(|j| {
            (0..p)
                .filter(move |&c| j < degrees[c])
                .map(move |c| j * p + c)
        })
        .collect()
}

/// `L(λ) = F(iλ)` and `L₁(λ) = D(iλ) − S(iλ)` for the normalized `F`.
pub fn quadruple_polynomials(analysis: &Analysis) -> (MatrixPolynomial, MatrixPolynomial) {
    let d = analysis.split.d_poly();
    let s = analysis.split.s_poly();
    let l = d
        .map_coefficients(|power, c| c + &s.coefficient(power))
        .expect("finite")
        .rotate_argument();
    let l1 = d
        .map_coefficients(|power, c| c - &s.coefficient(power))
        .expect("finite")
        .rotate_argument();
    (l, l1)
}

/// Result of comparing the Bézoutian inertia with that of `diag(H₀, H₁)`.
#[derive(Debug, Clone, Serialize)]
pub struct BezoutCheck {
    pub inertia_bezout: Inertia,
    pub inertia_hankel_direct_sum: Inertia,
    pub matches: bool,
    /// Hermitian deviation of `−i·B_finite`, relative to its largest entry.
    pub hermitian_deviation: f64,
    /// Largest entry outside the finite core, relative to the largest entry.
    pub off_core_max: f64,
    pub precondition_residual: f64,
}

/// Bézoutian of `(L₁^∨, L₁; L^∨, L)` for the pipeline stages in `analysis`.
pub fn bezout_of(analysis: &Analysis, tol: f64) -> Result<(BezoutMatrix, CMat, f64)> {
    let (l, l1) = quadruple_polynomials(analysis);
    let bez = anderson_jury(&l1.adjoint_vee(), &l1, &l.adjoint_vee(), &l, tol)?;
    let cdeg = &analysis.profile.cdeg;
    let p = cdeg.len();
    let rows = core_positions(cdeg, bez.full.nrows() / p);
    let cols = core_positions(cdeg, bez.full.ncols() / p);
    let finite = linalg::submatrix(&bez.full, &rows, &cols);
    let scale = linalg::max_abs(&bez.full).max(f64::MIN_POSITIVE);
    let mut off = 0.0_f64;
    for ((i, j), z) in bez.full.indexed_iter() {
        if !rows.contains(&i) || !cols.contains(&j) {
            off = off.max(z.norm());
        }
    }
    Ok((bez, finite, off / scale))
}

/// Inertia of `−i·B_finite` against the inertia of `diag(H₀, H₁)`.
pub fn bezout_inertia_check(f: &MatrixPolynomial, tol: &Tolerances) -> Result<BezoutCheck> {
    let analysis = stability::analyze(f, tol)?;
    if !analysis.sequence.is_hermitian {
        return Err(Error::NotHermitianSequence {
            deviation: analysis.sequence.hermitian_deviation,
        });
    }
    let (bez, finite, off_core_max) = bezout_of(&analysis, 1e-10)?;
    let rotated = finite.mapv(|z| z * -linalg::I);
    let hermitian_deviation =
        linalg::hermitian_deviation(&rotated) / linalg::max_abs(&rotated).max(f64::MIN_POSITIVE);
    let (inertia_bezout, _) = stability::hermitian_spectrum(&rotated, tol.inertia_tol)?;
    let direct_sum = linalg::block_diag(&analysis.hankel.h0, &analysis.hankel.h1);
    let (inertia_hankel_direct_sum, _) =
        stability::hermitian_spectrum(&direct_sum, tol.inertia_tol)?;
    Ok(BezoutCheck {
        inertia_bezout,
        inertia_hankel_direct_sum,
        matches: inertia_bezout == inertia_hankel_direct_sum,
        hermitian_deviation,
        off_core_max,
        precondition_residual: bez.precondition_residual,
    })
}
