//! Simulation of a two-qubit anisotropic Heisenberg XYZ chain under
//! intrinsic decoherence, and its quality as a resource for quantum
//! teleportation.
//!
//! The chain couples two spins through an anisotropic in-plane exchange, a
//! z-axis exchange, a z-axis Dzyaloshinski-Moriya spin-orbit term, and an
//! inhomogeneous magnetic field. Decoherence is pure dephasing in the energy
//! eigenbasis at a rate proportional to the squared energy gap; populations
//! never relax.
//!
//! Module map:
//!
//! * [`model`] - parameters, Hamiltonian, closed-form and numeric spectra;
//! * [`dynamics`] - the dephasing channel through four independent
//!   evaluators, plus its fully dephased limit;
//! * [`entanglement`] - negativity via partial transposition;
//! * [`teleport`] - standard teleportation (T0) figures of merit;
//! * [`enttel`] - entanglement teleportation (T1) through two channel copies.

pub mod dynamics;
pub mod entanglement;
pub mod enttel;
mod error;
pub mod linalg;
pub mod model;
pub mod state;
pub mod teleport;

pub use dynamics::{
    asymptotic_state, integrate_master_equation, kraus_operators, kraus_operators_with_cap,
    long_time_horizon, propagate, propagate_kraus, propagate_with_spectrum,
    propagate_xstate_closed_form, KrausSet, KRAUS_TERM_CAP,
};
pub use entanglement::{negativity, negativity_xstate, partial_transpose};
pub use enttel::{
    t1_average_fidelity, t1_fidelity, t1_fidelity_law, t1_output_components, t1_output_negativity,
    teleport_t1, FidelityLaw, T1Input, T1Output,
};
pub use error::CoreError;
pub use linalg::{c64, CMatrix2, CMatrix4, CVector4, C64};
pub use model::{
    build_hamiltonian, closed_form_spectrum, numeric_spectrum, thermal_state, Branch, EigenPair,
    Hamiltonian, ModelParams, Spectrum,
};
pub use state::{Bell, DensityMatrix2, DensityMatrix4, XState};
pub use teleport::{
    bell_probabilities, max_fidelity_t0, phi_max_asymptotic, phi_max_case, teleport_t0,
    BellProbabilities, QubitAngles, T0Case,
};
