//! Hurwitz stability of column-reduced, possibly nonmonic, complex matrix
//! polynomials.
//!
//! A matrix polynomial `F(λ)` is split column by column into a dominant part
//! `F_d` and a subordinated part `F_s`. The Laurent coefficients of
//! `F_s(λ) F_d(λ)⁻¹` at infinity (the Markov parameters) are compressed into two
//! rectangular block Hankel matrices `H₀` and `H₁`. When the Markov sequence is
//! Hermitian, `F` is Hurwitz stable exactly when both matrices are positive
//! definite, and their inertias give the inertia of `F` in the determinate case.
//!
//! The pipeline is
//! [`normalize`] → [`split`] → [`markov`] → [`hankel`] → [`stability`].
//! [`bezout`] and [`eig_oracle`] are independent verification routes, and
//! [`perturb`] runs the structured perturbation experiment.
//!
//! ```no_run
//! use hankel_hurwitz::{instances, stability, Tolerances, Verdict};
//!
//! let f = instances::worked_example();
//! let report = stability::hurwitz_check(&f, &Tolerances::default()).unwrap();
//! assert_eq!(report.verdict, Verdict::Stable);
//! ```

pub mod bezout;
pub mod config;
pub mod eig_oracle;
pub mod error;
#[cfg(test)]
mod golden;
pub mod hankel;
pub mod instances;
pub mod linalg;
pub mod markov;
pub mod matpoly;
pub mod normalize;
pub mod perturb;
pub mod split;
pub mod stability;

pub use config::Tolerances;
pub use error::{Error, Result};
pub use linalg::CMat;
pub use matpoly::{ColumnProfile, MatrixPolynomial, Parity};
pub use num_complex::Complex64;
pub use stability::{Inertia, StabilityReport, Verdict};
