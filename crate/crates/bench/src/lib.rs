//! Shared fixtures for the criterion benchmarks.

use spintel_core::{Bell, DensityMatrix4, ModelParams};

/// The standard figure couplings: J = 1, chi = 0.9, Jz = 0.5, b = 1,
/// gamma = 0.09 with the mean field off.
pub fn figure_params() -> ModelParams {
    ModelParams {
        xy_coupling: 1.0,
        anisotropy: 0.9,
        z_coupling: 0.5,
        field: 0.0,
        field_imbalance: 1.0,
        spin_orbit: 0.0,
        dephasing_rate: 0.09,
    }
}

pub fn bell_channel() -> DensityMatrix4 {
    Bell::PsiPlus.density()
}
