use serde::Serialize;

/// Numerical thresholds shared by every stage of the pipeline.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Tolerances {
    /// Relative threshold for column-degree detection and for the
    /// column-reducedness test `σ_min(hcdc) > zero_tol · σ_max(hcdc)`.
    pub zero_tol: f64,
    /// A Markov sequence is Hermitian when
    /// `max_k ‖s_k − s_k*‖ / max(1, ‖s_k‖) < hermitian_tol`.
    pub hermitian_tol: f64,
    /// Relative eigenvalue threshold used for inertia counts. Applied to the
    /// diagonally equilibrated matrix, see [`crate::stability::hermitian_inertia`].
    pub inertia_tol: f64,
    /// Absolute distance from the imaginary axis under which a polynomial
    /// eigenvalue counts as lying on it.
    pub axis_tol: f64,
    /// A generalized eigenvalue `α/β` is infinite when `|β| ≤ infinite_tol · |α|`.
    pub infinite_tol: f64,
    /// Replace every Markov parameter by its Hermitian part before assembling
    /// the Hankel matrices.
    pub symmetrize: bool,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            zero_tol: 1e-12,
            hermitian_tol: 1e-8,
            inertia_tol: 1e-12,
            axis_tol: 1e-9,
            infinite_tol: 1e-12,
            symmetrize: false,
        }
    }
}
