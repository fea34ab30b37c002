//! Error types shared across the library.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CoreError {
    /// Model parameters violate a documented constraint.
    #[error("invalid model parameters: {0}")]
    InvalidParams(String),

    /// A matrix handed in as a quantum state fails its invariants.
    #[error("invalid state: {0}")]
    InvalidState(String),

    /// The closed-form spectrum (or closed-form propagation) divides by a
    /// quantity that is below the degeneracy threshold; use the numeric path.
    #[error("closed form unavailable: {0}")]
    DegenerateClosedForm(String),

    /// The Kraus series would need more terms than the configured cap.
    #[error("kraus series needs more than {cap} terms (defect {defect:.3e})")]
    TruncationFailure { cap: usize, defect: f64 },

    /// Fixed-step integration asked for a step violating the stability guard.
    #[error("integration step too large: dt*|H| = {0:.3e} exceeds 0.1")]
    StepTooLarge(f64),

    /// gamma = 0 evolves unitarily forever; there is no dephased limit.
    #[error("no dephasing at gamma = 0: asymptotic state undefined")]
    NoDephasing,

    /// An operation requiring the X sparsity pattern got a non-X matrix.
    #[error("not an X state: {0}")]
    NotXState(String),
}
