//! Negativity of two-qubit states via partial transposition.
//!
//! Normalization: N = 2 max(-lambda_min(rho^T_A), 0), which maps Bell states
//! to 1. The transpose acts on the first qubit; for two qubits the negativity
//! is the same for either choice, the convention just pins the PT matrix
//! byte-for-byte in tests.

use crate::error::CoreError;
use crate::linalg::{hermitian_eigen4, CMatrix4};
use crate::state::DensityMatrix4;

/// Partial transpose over the first qubit: entry ((i,j),(k,l)) moves to
/// ((k,j),(i,l)). Hermitian and unit-trace whenever the input is.
pub fn partial_transpose(rho: &DensityMatrix4) -> CMatrix4 {
    let m = rho.matrix();
    CMatrix4::from_fn(|r, c| {
        let (i, j) = (r / 2, r % 2);
        let (k, l) = (c / 2, c % 2);
        m[(2 * k + j, 2 * i + l)]
    })
}

/// Negativity through the numeric eigensolver; works for any state.
pub fn negativity(rho: &DensityMatrix4) -> f64 {
    let pt = partial_transpose(rho);
    let min = hermitian_eigen4(&pt).values[0];
    (-2.0 * min).max(0.0)
}

/// Closed-form negativity for X-shaped states. The partially transposed
/// matrix is X-shaped too, with the coherences swapped between sectors, so
/// its eigenvalues come from two quadratic branches:
///
/// ```text
/// lambda_{1,2} = [(rho22 + rho33) +/- sqrt((rho22 - rho33)^2 + 4|rho14|^2)]/2
/// lambda_{3,4} = [(rho11 + rho44) +/- sqrt((rho11 - rho44)^2 + 4|rho23|^2)]/2
/// ```
///
/// Rejects inputs without the X sparsity pattern.
pub fn negativity_xstate(rho: &DensityMatrix4) -> Result<f64, CoreError> {
    if !rho.is_x_shaped(1e-12) {
        return Err(CoreError::NotXState(
            "negativity_xstate requires the X pattern".into(),
        ));
    }
    let p00 = rho.entry(0, 0).re;
    let p01 = rho.entry(1, 1).re;
    let p10 = rho.entry(2, 2).re;
    let p11 = rho.entry(3, 3).re;
    let outer = rho.entry(0, 3).norm_sqr();
    let inner = rho.entry(1, 2).norm_sqr();

    let root_inner_sector = ((p01 - p10).powi(2) + 4.0 * outer).sqrt();
    let root_outer_sector = ((p00 - p11).powi(2) + 4.0 * inner).sqrt();
    let lambdas = [
        0.5 * ((p01 + p10) + root_inner_sector),
        0.5 * ((p01 + p10) - root_inner_sector),
        0.5 * ((p00 + p11) + root_outer_sector),
        0.5 * ((p00 + p11) - root_outer_sector),
    ];
    let min = lambdas.iter().cloned().fold(f64::INFINITY, f64::min);
    Ok((-2.0 * min).max(0.0))
}
