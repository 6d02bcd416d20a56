//! Markov parameters of `F_s(λ) F_d(λ)⁻¹` at infinity.

use serde::Serialize;

use crate::config::Tolerances;
use crate::error::{Error, Result};
use crate::linalg::{self, CMat};
use crate::split::SplitResult;

/// The sequence `s₀..s_l`.
#[derive(Debug, Clone)]
pub struct MarkovSequence {
    pub params: Vec<CMat>,
    pub l: usize,
    /// `max_k max|s_k − s_k*| / max(1, max|s_k|)`.
    pub hermitian_deviation: f64,
    pub is_hermitian: bool,
}

#[derive(Serialize)]
struct Summary {
    l: usize,
    hermitian_deviation: f64,
    is_hermitian: bool,
}

impl MarkovSequence {
    pub fn from_params(params: Vec<CMat>, hermitian_tol: f64) -> Self {
        let hermitian_deviation = params
            .iter()
            .map(|s| linalg::hermitian_deviation(s) / linalg::max_abs(s).max(1.0))
            .fold(0.0, f64::max);
        Self {
            l: params.len().saturating_sub(1),
            params,
            hermitian_deviation,
            is_hermitian: hermitian_deviation < hermitian_tol,
        }
    }

    /// Replaces every `s_k` by its Hermitian part.
    pub fn symmetrized(&self, hermitian_tol: f64) -> Self {
        Self::from_params(
            self.params.iter().map(linalg::hermitian_part).collect(),
            hermitian_tol,
        )
    }

    pub fn get(&self, k: usize) -> Option<&CMat> {
        self.params.get(k)
    }
}

// acc += sign · s · a, touching only the listed columns of `a`.
fn add_product(acc: &mut CMat, s: &CMat, a: &CMat, cols: &[usize], sign: f64) {
    let p = s.nrows();
    for &c in cols {
        for r in 0..p {
            let mut v = linalg::ZERO;
            for i in 0..p {
                v += s[[r, i]] * a[[i, c]];
            }
            acc[[r, c]] += v * sign;
        }
    }
}

fn sign(k: usize) -> f64 {
    if k.is_multiple_of(2) {
        1.0
    } else {
        -1.0
    }
}

/// Markov parameters by the block recurrence.
///
/// `s₀ = B₀A₀⁻¹`; for `k ≤ t`,
/// `s_k = ((−1)ᵏB_k − Σ_{j=1}^{k} s_{k−j}(−1)ʲA_j) A₀⁻¹`; for `t < k ≤ l`,
/// `s_k = −Σ_{j=1}^{m} s_{k−j}(−1)ʲA_j A₀⁻¹`. `A₀` must be upper triangular
/// (see [`crate::normalize`]); it is applied by triangular solve.
pub fn markov_parameters(sr: &SplitResult, tol: &Tolerances) -> Result<MarkovSequence> {
    let p = sr.size();
    let a0 = &sr.a[0];
    if !linalg::is_upper_triangular(a0, tol.zero_tol) {
        return Err(Error::NotNormalized);
    }
    let active: Vec<Vec<usize>> = (0..=sr.m).map(|j| sr.active_columns(j)).collect();
    let mut s: Vec<CMat> = Vec::with_capacity(sr.l + 1);
    for k in 0..=sr.l {
        let mut acc = if k <= sr.t {
            sr.b[k].mapv(|z| z * sign(k))
        } else {
            linalg::zeros(p, p)
        };
        for j in 1..=k.min(sr.m) {
            add_product(&mut acc, &s[k - j], &sr.a[j], &active[j], -sign(j));
        }
        s.push(linalg::solve_upper_right(&acc, a0, tol.zero_tol)?);
    }
    Ok(MarkovSequence::from_params(s, tol.hermitian_tol))
}

/// Independent route to `s₀..s_{k_max}` by power-series inversion.
///
/// With `Â(z) = Σ A_k zᵏ` and `B̂(z) = Σ B_k zᵏ`, the signed parameters
/// `(−1)ᵏ s_k` are the coefficients of `B̂(z) Â(z)⁻¹`. `A₀` is inverted by a
/// general LU factorization, so no triangular structure is assumed.
pub fn laurent_oracle(sr: &SplitResult, k_max: usize) -> Result<Vec<CMat>> {
    let p = sr.size();
    let a0_inv = linalg::inverse(&sr.a[0]).map_err(|_| Error::SingularLeadingBlock { index: 0 })?;
    if a0_inv
        .iter()
        .any(|z| !z.re.is_finite() || !z.im.is_finite())
    {
        return Err(Error::SingularLeadingBlock { index: 0 });
    }
    let mut c: Vec<CMat> = vec![a0_inv.clone()];
    for k in 1..=k_max {
        let mut acc = linalg::zeros(p, p);
        for i in 1..=k.min(sr.m) {
            acc = acc + sr.a[i].dot(&c[k - i]);
        }
        c.push(-a0_inv.dot(&acc));
    }
    Ok((0..=k_max)
        .map(|k| {
            let mut acc = linalg::zeros(p, p);
            for i in 0..=k.min(sr.t) {
                acc = acc + sr.b[i].dot(&c[k - i]);
            }
            acc.mapv(|z| z * sign(k))
        })
        .collect())
}

/// Largest relative residual of the two defining identities
///
/// `Σ_{k=0}^{r} (−1)ᵏ s_k A_{r−k} = B_r` for `r = 0..t`, and
/// `Σ_{j=1}^{m} s_{t+1+i−j}(−1)ʲA_j = −s_{t+1+i}A₀` for `i = 0..m−1`.
///
/// Each defect is multiplied by `A₀⁻¹` and divided by `max(1, max|s_r|)`,
/// where `s_r` is the parameter that identity determines, so the residual is
/// measured on the scale of the sequence itself.
pub fn sa_residual(seq: &MarkovSequence, sr: &SplitResult) -> f64 {
    let p = sr.size();
    if seq.params.len() < sr.l + 1 {
        return f64::INFINITY;
    }
    let a0_inv = match linalg::inverse(&sr.a[0]) {
        Ok(inv) => inv,
        Err(_) => return f64::INFINITY,
    };
    let s = &seq.params;
    let scaled = |defect: CMat, r: usize| {
        linalg::max_abs(&defect.dot(&a0_inv)) / linalg::max_abs(&s[r]).max(1.0)
    };
    let mut worst = 0.0_f64;
    for r in 0..=sr.t {
        let mut lhs = linalg::zeros(p, p);
        for k in 0..=r.min(sr.l) {
            if r - k <= sr.m {
                lhs = lhs + s[k].dot(&sr.a[r - k]).mapv(|z| z * sign(k));
            }
        }
        worst = worst.max(scaled(lhs - &sr.b[r], r));
    }
    for i in 0..sr.m {
        let target = sr.t + 1 + i;
        let mut lhs = s[target].dot(&sr.a[0]);
        for j in 1..=sr.m {
            lhs = lhs + s[target - j].dot(&sr.a[j]).mapv(|z| z * sign(j));
        }
        worst = worst.max(scaled(lhs, target));
    }
    worst
}

impl Serialize for MarkovSequence {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        Summary {
            l: self.l,
            hermitian_deviation: self.hermitian_deviation,
            is_hermitian: self.is_hermitian,
        }
        .serialize(serializer)
    }
}
