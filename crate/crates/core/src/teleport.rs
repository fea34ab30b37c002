//! Standard teleportation (protocol T0) through one copy of the two-qubit
//! resource.
//!
//! With a mixed resource the protocol acts as a generalized depolarizing
//! channel: rho_out = sum_mu p_mu sigma^mu rho_in sigma^mu, where p_mu is the
//! overlap of the resource with the Bell projectors
//! E^0 = |Psi-><Psi-|, E^1 = |Phi-><Phi-|, E^2 = |Phi+><Phi+|,
//! E^3 = |Psi+><Psi+| paired with corrections I, X, Y, Z in that order (the
//! pairing that teleports perfectly through a |Psi-> resource).

use crate::error::CoreError;
use crate::linalg::{c64, CMatrix2, PAULI};
use crate::model::ModelParams;
use crate::state::{Bell, DensityMatrix2, DensityMatrix4};

/// Bloch angles of a single-qubit pure state
/// cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QubitAngles {
    pub theta: f64,
    pub phi: f64,
}

impl QubitAngles {
    pub fn new(theta: f64, phi: f64) -> Result<Self, CoreError> {
        if !(0.0..=std::f64::consts::PI).contains(&theta) {
            return Err(CoreError::InvalidParams("theta out of [0, pi]".into()));
        }
        if !(0.0..2.0 * std::f64::consts::PI).contains(&phi) {
            return Err(CoreError::InvalidParams("phi out of [0, 2*pi)".into()));
        }
        Ok(QubitAngles { theta, phi })
    }

    pub fn density(&self) -> DensityMatrix2 {
        let half = 0.5 * self.theta;
        let (s_phi, c_phi) = self.phi.sin_cos();
        DensityMatrix2::pure(c64(half.cos(), 0.0), c64(c_phi, s_phi) * half.sin())
    }
}

/// Bell-measurement probabilities of a resource state, in the E^0..E^3 order.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BellProbabilities {
    /// Tr[|Psi-><Psi-| rho]; correction sigma^0 = I.
    pub p0: f64,
    /// Tr[|Phi-><Phi-| rho]; correction sigma^x.
    pub p1: f64,
    /// Tr[|Phi+><Phi+| rho]; correction sigma^y.
    pub p2: f64,
    /// Tr[|Psi+><Psi+| rho]; correction sigma^z.
    pub p3: f64,
}

impl BellProbabilities {
    pub fn as_array(&self) -> [f64; 4] {
        [self.p0, self.p1, self.p2, self.p3]
    }

    pub fn max(&self) -> f64 {
        self.as_array()
            .iter()
            .cloned()
            .fold(f64::NEG_INFINITY, f64::max)
    }
}

/// Bell overlaps written out on the matrix entries:
/// p_{0,3} = (rho22 + rho33)/2 -/+ Re rho23 and
/// p_{1,2} = (rho11 + rho44)/2 -/+ Re rho14.
/// This is exactly Tr[E^mu rho] for any state, X-shaped or not.
pub fn bell_probabilities(rho: &DensityMatrix4) -> BellProbabilities {
    let inner_pop = 0.5 * (rho.entry(1, 1).re + rho.entry(2, 2).re);
    let outer_pop = 0.5 * (rho.entry(0, 0).re + rho.entry(3, 3).re);
    let inner_coh = rho.entry(1, 2).re;
    let outer_coh = rho.entry(0, 3).re;
    BellProbabilities {
        p0: inner_pop - inner_coh,
        p1: outer_pop - outer_coh,
        p2: outer_pop + outer_coh,
        p3: inner_pop + inner_coh,
    }
}

/// Output of the generalized depolarizing channel on a pure input.
pub fn teleport_t0(channel: &DensityMatrix4, input: &QubitAngles) -> DensityMatrix2 {
    let p = bell_probabilities(channel).as_array();
    let rho_in = *input.density().matrix();
    let mut out = CMatrix2::zeros();
    for mu in 0..4 {
        let twirled = PAULI[mu] * rho_in * PAULI[mu];
        for i in 0..2 {
            for j in 0..2 {
                out[(i, j)] += twirled[(i, j)] * p[mu];
            }
        }
    }
    DensityMatrix2::from_matrix_unchecked(out)
}

/// Maximal teleportation fidelity (2F + 1)/3 where F = max_mu p_mu is the
/// fully entangled fraction of the resource.
pub fn max_fidelity_t0(channel: &DensityMatrix4) -> f64 {
    (2.0 * bell_probabilities(channel).max() + 1.0) / 3.0
}

/// The channel initial states studied case by case: the Bell pairs and the
/// four computational kets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum T0Case {
    /// case i: (|01> + |10>)/sqrt(2)
    PsiPlus,
    /// case i: (|01> - |10>)/sqrt(2)
    PsiMinus,
    /// case ii: (|00> + |11>)/sqrt(2)
    PhiPlus,
    /// case ii: (|00> - |11>)/sqrt(2)
    PhiMinus,
    /// case iii: |01>
    Ket01,
    /// case iii: |10>
    Ket10,
    /// case iv: |00>
    Ket00,
    /// case iv: |11>
    Ket11,
}

impl T0Case {
    pub fn initial_state(&self) -> DensityMatrix4 {
        match self {
            T0Case::PsiPlus => Bell::PsiPlus.density(),
            T0Case::PsiMinus => Bell::PsiMinus.density(),
            T0Case::PhiPlus => Bell::PhiPlus.density(),
            T0Case::PhiMinus => Bell::PhiMinus.density(),
            T0Case::Ket01 => DensityMatrix4::basis_ket(1),
            T0Case::Ket10 => DensityMatrix4::basis_ket(2),
            T0Case::Ket00 => DensityMatrix4::basis_ket(0),
            T0Case::Ket11 => DensityMatrix4::basis_ket(3),
        }
    }

    pub const ALL: [T0Case; 8] = [
        T0Case::PsiPlus,
        T0Case::PsiMinus,
        T0Case::PhiPlus,
        T0Case::PhiMinus,
        T0Case::Ket01,
        T0Case::Ket10,
        T0Case::Ket00,
        T0Case::Ket11,
    ];
}

/// e^{-2 g^2 gamma t} cos(2 g t): the oscillating envelope shared by the case
/// formulas (Phi for the eta sector, Phi' for the xi sector).
fn envelope(gap: f64, gamma: f64, t: f64) -> f64 {
    (-2.0 * gap * gap * gamma * t).exp() * (2.0 * gap * t).cos()
}

/// Closed-form maximal fidelity at time t for the case's initial channel.
///
/// All four formulas come from the Bell probabilities of the evolved channel,
/// so the case term sits inside an absolute value: the fully entangled
/// fraction is (1 + 2|Re coh|)/2 whichever sign the coherence takes.
/// (The transient oscillation can drive the bracket negative; asymptotically
/// the absolute value is inert and the published limits hold verbatim.)
pub fn phi_max_case(case: T0Case, p: &ModelParams, t: f64) -> f64 {
    let xi_sq = p.xi().powi(2);
    let eta_sq = p.eta().powi(2);
    let j = p.xy_coupling;
    let b = p.field_imbalance;
    let big_b = p.field;
    let jchi = p.double_flip_coupling();
    let gamma = p.dephasing_rate;

    match case {
        T0Case::PsiPlus | T0Case::PsiMinus => {
            // Frozen sector: the channel never dephases, teleports perfectly.
            if xi_sq == 0.0 {
                return 1.0;
            }
            // xi^2 - J^2 = b^2 + (Jz D)^2.
            let phi_p = envelope(p.xi(), gamma, t);
            2.0 / 3.0 + (j * j + (xi_sq - j * j) * phi_p).abs() / (3.0 * xi_sq)
        }
        T0Case::PhiPlus | T0Case::PhiMinus => {
            if eta_sq == 0.0 {
                return 1.0;
            }
            let phi = envelope(p.eta(), gamma, t);
            2.0 / 3.0 + (jchi * jchi + big_b * big_b * phi).abs() / (3.0 * eta_sq)
        }
        T0Case::Ket01 | T0Case::Ket10 => {
            if xi_sq == 0.0 {
                return 2.0 / 3.0;
            }
            let xi = p.xi();
            let phi_p = envelope(xi, gamma, t);
            let ringing = p.z_coupling
                * p.spin_orbit
                * xi
                * (2.0 * xi * t).sin()
                * (-2.0 * xi_sq * gamma * t).exp();
            2.0 / 3.0 + (b * j * (1.0 - phi_p) - ringing).abs() / (3.0 * xi_sq)
        }
        T0Case::Ket00 | T0Case::Ket11 => {
            if eta_sq == 0.0 {
                return 2.0 / 3.0;
            }
            let phi = envelope(p.eta(), gamma, t);
            2.0 / 3.0 + (big_b * jchi * (1.0 - phi)).abs() / (3.0 * eta_sq)
        }
    }
}

/// Asymptotic (fully dephased) maximal fidelity per case:
///
/// * case i:   2/3 + (J/xi)^2 / 3        (1 at D = b = 0; 2/3 at J = 0)
/// * case ii:  2/3 + (J chi/eta)^2 / 3   (1 at B = 0)
/// * case iii: 2/3 + |b J| / (3 xi^2)    (strictly below 1)
/// * case iv:  2/3 + B |J chi| / (3 eta^2)
///
/// Every value is >= 2/3: the dephased channel still beats classical
/// teleportation whenever the relevant coupling survives.
pub fn phi_max_asymptotic(case: T0Case, p: &ModelParams) -> f64 {
    let xi_sq = p.xi().powi(2);
    let eta_sq = p.eta().powi(2);
    match case {
        T0Case::PsiPlus | T0Case::PsiMinus => {
            if xi_sq == 0.0 {
                return 1.0;
            }
            2.0 / 3.0 + p.xy_coupling.powi(2) / (3.0 * xi_sq)
        }
        T0Case::PhiPlus | T0Case::PhiMinus => {
            if eta_sq == 0.0 {
                return 1.0;
            }
            2.0 / 3.0 + p.double_flip_coupling().powi(2) / (3.0 * eta_sq)
        }
        T0Case::Ket01 | T0Case::Ket10 => {
            if xi_sq == 0.0 {
                return 2.0 / 3.0;
            }
            2.0 / 3.0 + (p.field_imbalance * p.xy_coupling).abs() / (3.0 * xi_sq)
        }
        T0Case::Ket00 | T0Case::Ket11 => {
            if eta_sq == 0.0 {
                return 2.0 / 3.0;
            }
            2.0 / 3.0 + p.field * p.double_flip_coupling().abs() / (3.0 * eta_sq)
        }
    }
}
