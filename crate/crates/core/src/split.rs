//! Column-wise even/odd splitting into dominant and subordinated parts.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{self, CMat};
use crate::matpoly::{ColumnProfile, MatrixPolynomial, Parity};

/// A vector polynomial as a list of coefficient vectors, constant term first.
pub type VecPoly = Vec<Vec<Complex64>>;

/// Splits one column `f(λ) = f_e(λ²) + λ f_o(λ²)`.
///
/// Even degree: dominant `f_e`, subordinated `λ f_o`. Odd degree: dominant
/// `f_o`, subordinated `f_e`. Inputs and outputs list the constant term first.
pub fn split_column(f: &[Vec<Complex64>]) -> Result<(VecPoly, VecPoly)> {
    let degree = f
        .iter()
        .rposition(|c| c.iter().any(|z| *z != linalg::ZERO))
        .ok_or(Error::ZeroColumn { column: 0 })?;
    let len = f[0].len();
    let even: VecPoly = f[..=degree].iter().step_by(2).cloned().collect();
    let odd: VecPoly = f[..=degree].iter().skip(1).step_by(2).cloned().collect();
    if degree % 2 == 0 {
        let mut sub = vec![vec![linalg::ZERO; len]];
        sub.extend(odd);
        if sub.len() == 1 {
            sub.clear();
        }
        Ok((even, sub))
    } else {
        Ok((odd, even))
    }
}

/// Output of the column-wise split.
#[derive(Debug, Clone)]
pub struct SplitResult {
    /// Dominant part `F_d` with nominal degree `m`.
    pub fd: MatrixPolynomial,
    /// Subordinated part `F_s` with nominal degree `m`.
    pub fs: MatrixPolynomial,
    pub cdeg: Vec<usize>,
    /// `⌊cdeg[k] / 2⌋`, the column degrees of `F_d`.
    pub cdeg_fd: Vec<usize>,
    pub parity: Vec<Parity>,
    pub all_even: bool,
    pub m: usize,
    pub t: usize,
    pub l: usize,
    /// `A₀..A_m`: column `j` of `A_k` is the coefficient of `λ^{cdeg[j]−2k}`.
    pub a: Vec<CMat>,
    /// `B₀..B_t`: column `j` of `B_k` is the coefficient of `λ^{cdeg[j]−2k−1}`.
    pub b: Vec<CMat>,
}

impl SplitResult {
    pub fn size(&self) -> usize {
        self.cdeg.len()
    }

    /// Columns whose `k`-th column-degree coefficient may be nonzero.
    pub fn active_columns(&self, k: usize) -> Vec<usize> {
        (0..self.size()).filter(|&j| k <= self.cdeg_fd[j]).collect()
    }

    fn degree(&self) -> usize {
        self.cdeg.iter().copied().max().unwrap_or(0)
    }

    /// `D(λ) = F_d(λ²) α(λ)`, nominal degree `deg F`.
    pub fn d_poly(&self) -> MatrixPolynomial {
        self.lift(&self.fd, |parity, e| match parity {
            Parity::Even => Some(2 * e),
            Parity::Odd => Some(2 * e + 1),
        })
    }

    /// `S(λ) = λ⁻¹ F_s(λ²) α(λ)`, nominal degree `deg F`.
    pub fn s_poly(&self) -> MatrixPolynomial {
        self.lift(&self.fs, |parity, e| match parity {
            Parity::Even => (2 * e).checked_sub(1),
            Parity::Odd => Some(2 * e),
        })
    }

    // Places the coefficient of μᵉ in column k of `part` at power `shift(parity, e)`.
    fn lift(
        &self,
        part: &MatrixPolynomial,
        shift: impl Fn(Parity, usize) -> Option<usize>,
    ) -> MatrixPolynomial {
        let p = self.size();
        let n = self.degree();
        let mut coeffs = vec![linalg::zeros(p, p); n + 1];
        for k in 0..p {
            for e in 0..=part.nominal_degree() {
                let col = part.coefficient(e).column(k).to_owned();
                if col.iter().all(|z| *z == linalg::ZERO) {
                    continue;
                }
                let power = shift(self.parity[k], e).expect("no negative powers");
                coeffs[n - power].column_mut(k).assign(&col);
            }
        }
        MatrixPolynomial::new(coeffs).expect("well formed")
    }
}

/// Splits a column-reduced `F` of positive degree with known column profile.
///
/// Entries above each column degree are ignored. No triangularity is
/// required here; [`crate::markov::markov_parameters`] checks it.
pub fn split(f: &MatrixPolynomial, profile: &ColumnProfile) -> Result<SplitResult> {
    let p = f.size();
    let cdeg = profile.cdeg.clone();
    let n = cdeg.iter().copied().max().unwrap_or(0);
    if n == 0 {
        return Err(Error::DegreeZero);
    }
    let parity = profile.parity.clone();
    let all_even = profile.all_even();
    let m = n / 2;
    let l = if all_even { 2 * m - 1 } else { 2 * m };
    let t = l / 2;
    let cdeg_fd: Vec<usize> = cdeg.iter().map(|d| d / 2).collect();

    let mut fd = vec![linalg::zeros(p, p); m + 1];
    let mut fs = vec![linalg::zeros(p, p); m + 1];
    for k in 0..p {
        let column: VecPoly = (0..=cdeg[k])
            .map(|e| f.coefficient(e).column(k).to_vec())
            .collect();
        let (dom, sub) = split_column(&column).map_err(|_| Error::ZeroColumn { column: k })?;
        for (e, v) in dom.iter().enumerate() {
            for r in 0..p {
                fd[m - e][[r, k]] = v[r];
            }
        }
        for (e, v) in sub.iter().enumerate() {
            for r in 0..p {
                fs[m - e][[r, k]] = v[r];
            }
        }
    }

    let column_coefficient = |power: Option<usize>, k: usize| -> Vec<Complex64> {
        match power {
            Some(e) => f.coefficient(e).column(k).to_vec(),
            None => vec![linalg::ZERO; p],
        }
    };
    let a = (0..=m)
        .map(|i| {
            let mut ai = linalg::zeros(p, p);
            for k in 0..p {
                let col = column_coefficient(cdeg[k].checked_sub(2 * i), k);
                for r in 0..p {
                    ai[[r, k]] = col[r];
                }
            }
            ai
        })
        .collect();
    let b = (0..=t)
        .map(|i| {
            let mut bi = linalg::zeros(p, p);
            for k in 0..p {
                let col = column_coefficient(cdeg[k].checked_sub(2 * i + 1), k);
                for r in 0..p {
                    bi[[r, k]] = col[r];
                }
            }
            bi
        })
        .collect();

    Ok(SplitResult {
        fd: MatrixPolynomial::new(fd)?,
        fs: MatrixPolynomial::new(fs)?,
        cdeg,
        cdeg_fd,
        parity,
        all_even,
        m,
        t,
        l,
        a,
        b,
    })
}
