//! Entanglement teleportation (protocol T1) through two independent copies
//! of the resource.
//!
//! The joint measurement decomposes into two Bell measurements and the
//! correction into two local Pauli rotations, so the whole protocol is the
//! two-fold depolarizing channel
//!
//! ```text
//! rho_out = sum_{mu,nu} p_mu p_nu (sigma_mu (x) sigma_nu) rho_in (sigma_mu (x) sigma_nu)
//! ```
//!
//! with the same Bell probabilities as protocol T0 on each copy.

use crate::error::CoreError;
use crate::linalg::{c64, kron, CMatrix4, CVector4, C64, PAULI};
use crate::state::{DensityMatrix4, XState};
use crate::teleport::bell_probabilities;

/// The two-qubit input cos(theta/2)|10> + e^{i phi} sin(theta/2)|01>,
/// whose negativity is sin(theta).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct T1Input {
    pub theta: f64,
    pub phi: f64,
}

impl T1Input {
    pub fn new(theta: f64, phi: f64) -> Result<Self, CoreError> {
        if !(0.0..=std::f64::consts::PI).contains(&theta) {
            return Err(CoreError::InvalidParams("theta out of [0, pi]".into()));
        }
        if !(0.0..2.0 * std::f64::consts::PI).contains(&phi) {
            return Err(CoreError::InvalidParams("phi out of [0, 2*pi)".into()));
        }
        Ok(T1Input { theta, phi })
    }

    pub fn state_vector(&self) -> CVector4 {
        let half = 0.5 * self.theta;
        let (s_phi, c_phi) = self.phi.sin_cos();
        let mut v = CVector4::zeros();
        v[2] = c64(half.cos(), 0.0);
        v[1] = c64(c_phi, s_phi) * half.sin();
        v
    }

    pub fn density(&self) -> DensityMatrix4 {
        DensityMatrix4::pure(&self.state_vector())
    }

    /// N_in = sin(theta).
    pub fn input_negativity(&self) -> f64 {
        self.theta.sin()
    }
}

/// Canonical 16-term evaluator of the doubled depolarizing channel. Valid
/// for any channel state.
pub fn teleport_t1(channel: &DensityMatrix4, input: &T1Input) -> DensityMatrix4 {
    let p = bell_probabilities(channel).as_array();
    let rho_in = *input.density().matrix();
    let mut out = CMatrix4::zeros();
    for mu in 0..4 {
        for nu in 0..4 {
            let op = kron(&PAULI[mu], &PAULI[nu]);
            out = out + (op * rho_in * op).scale_re(p[mu] * p[nu]);
        }
    }
    DensityMatrix4::from_matrix_unchecked(out.hermitized())
}

/// The X-structured output assembled from closed-form components.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct T1Output {
    /// Common population of |00> and |11> (alpha).
    pub corner_pop: f64,
    /// Real |00><11| coherence (kappa).
    pub outer_coherence: f64,
    /// Population of |01> (a').
    pub pop_01: f64,
    /// Population of |10> (b').
    pub pop_10: f64,
    /// Complex |01><10| coherence (c').
    pub inner_coherence: C64,
}

impl T1Output {
    pub fn assemble(&self) -> DensityMatrix4 {
        let mut m = CMatrix4::zeros();
        m[(0, 0)] = c64(self.corner_pop, 0.0);
        m[(3, 3)] = c64(self.corner_pop, 0.0);
        m[(0, 3)] = c64(self.outer_coherence, 0.0);
        m[(3, 0)] = c64(self.outer_coherence, 0.0);
        m[(1, 1)] = c64(self.pop_01, 0.0);
        m[(2, 2)] = c64(self.pop_10, 0.0);
        m[(1, 2)] = self.inner_coherence;
        m[(2, 1)] = self.inner_coherence.conj();
        DensityMatrix4::from_matrix_unchecked(m)
    }
}

/// Conserved sector sums and real coherences of an X channel; the only four
/// numbers the T1 output depends on.
struct ChannelSummary {
    /// rho22 + rho33 (the conserved w1 + w2).
    inner_pop: f64,
    /// rho11 + rho44 (the conserved mu+ + mu-).
    outer_pop: f64,
    /// Re rho23.
    inner_coh: f64,
    /// Re rho14.
    outer_coh: f64,
}

fn summarize_channel(channel: &DensityMatrix4) -> Result<ChannelSummary, CoreError> {
    let x = XState::from_density(channel)?;
    Ok(ChannelSummary {
        inner_pop: x.pop_01 + x.pop_10,
        outer_pop: x.pop_00 + x.pop_11,
        inner_coh: x.inner_coherence.re,
        outer_coh: x.outer_coherence.re,
    })
}

/// Closed-form output components for an X channel:
///
/// ```text
/// alpha  = (w1 + w2)(mu+ + mu-)
/// kappa  = 4 Re[rho23] Re[rho14] cos(phi) sin(theta)
/// a'     = (mu+ + mu-)^2 cos^2(theta/2) + (w1 + w2)^2 sin^2(theta/2)
/// b'     = (w1 + w2)^2 cos^2(theta/2) + (mu+ + mu-)^2 sin^2(theta/2)
/// c'     = 2 e^{-i phi} (Re[rho14]^2 + e^{2 i phi} Re[rho23]^2) sin(theta)
/// ```
///
/// c' carries the exchange-sector coherence on the phase-carrying term
/// `e^{2 i phi} Re[rho23]^2`: that is the orientation the 16-term sum
/// produces, and the one consistent with the fidelity law below. A perfect
/// |Psi-> channel must reproduce the input coherence e^{+i phi} sin(theta)/2.
pub fn t1_output_components(
    channel: &DensityMatrix4,
    input: &T1Input,
) -> Result<T1Output, CoreError> {
    let ch = summarize_channel(channel)?;
    let half = 0.5 * input.theta;
    let (sin_half_sq, cos_half_sq) = (half.sin().powi(2), half.cos().powi(2));
    let sin_theta = input.theta.sin();
    let (s2phi, c2phi) = (2.0 * input.phi).sin_cos();
    let (s_phi, c_phi) = input.phi.sin_cos();

    let r_inner = ch.inner_coh;
    let r_outer = ch.outer_coh;
    let inner_sq = r_inner * r_inner;
    let outer_sq = r_outer * r_outer;

    let corner_pop = ch.inner_pop * ch.outer_pop;
    let outer_coherence = 4.0 * r_inner * r_outer * c_phi * sin_theta;
    let pop_01 = ch.outer_pop.powi(2) * cos_half_sq + ch.inner_pop.powi(2) * sin_half_sq;
    let pop_10 = ch.inner_pop.powi(2) * cos_half_sq + ch.outer_pop.powi(2) * sin_half_sq;
    // 2 e^{-i phi} (r14^2 + e^{2 i phi} r23^2) sin(theta)
    let inner_coherence = (c64(c_phi, -s_phi) * outer_sq
        + c64(c_phi, -s_phi) * c64(c2phi, s2phi) * inner_sq)
        * (2.0 * sin_theta);

    Ok(T1Output {
        corner_pop,
        outer_coherence,
        pop_01,
        pop_10,
        inner_coherence,
    })
}

/// Output negativity from the closed-form eigenvalues of the partially
/// transposed output:
///
/// ```text
/// lambda'_{1,2} = [(a' + b') +/- sqrt((a' - b')^2 + 4 kappa^2)]/2
/// lambda'_{3,4} = alpha +/- |c'|
/// ```
pub fn t1_output_negativity(out: &T1Output) -> f64 {
    let sum = out.pop_01 + out.pop_10;
    let root = ((out.pop_01 - out.pop_10).powi(2)
        + 4.0 * out.outer_coherence * out.outer_coherence)
        .sqrt();
    let c_norm = out.inner_coherence.norm();
    let lambdas = [
        0.5 * (sum + root),
        0.5 * (sum - root),
        out.corner_pop + c_norm,
        out.corner_pop - c_norm,
    ];
    let min = lambdas.iter().cloned().fold(f64::INFINITY, f64::min);
    (-2.0 * min).max(0.0)
}

/// Fidelity <psi_in| rho_out |psi_in> computed directly against the 16-term
/// canonical output.
pub fn t1_fidelity(channel: &DensityMatrix4, input: &T1Input) -> f64 {
    let out = teleport_t1(channel, input);
    let psi = input.state_vector();
    psi.dot(&out.matrix().mul_vec(&psi)).re
}

/// The fidelity law F = f1 + f2 * N_in^2 of an X channel.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FidelityLaw {
    /// f1 = (w1 + w2)^2.
    pub offset: f64,
    /// `f2 = 1/2 - (w1 + w2) + 2 (Re[rho14]^2 cos(2 phi) + Re[rho23]^2)`.
    pub slope: f64,
}

impl FidelityLaw {
    pub fn evaluate(&self, input_negativity: f64) -> f64 {
        self.offset + self.slope * input_negativity * input_negativity
    }
}

/// Closed-form fidelity coefficients for a given input phase phi. For
/// phi in {0, pi} they depend on the channel alone.
pub fn t1_fidelity_law(channel: &DensityMatrix4, phi: f64) -> Result<FidelityLaw, CoreError> {
    let ch = summarize_channel(channel)?;
    let offset = ch.inner_pop * ch.inner_pop;
    let slope = 0.5 - ch.inner_pop
        + 2.0 * (ch.outer_coh * ch.outer_coh * (2.0 * phi).cos() + ch.inner_coh * ch.inner_coh);
    Ok(FidelityLaw { offset, slope })
}

/// Average fidelity over the uniform input measure (1/4pi) sin(theta)
/// d(theta) d(phi):
///
/// ```text
/// F_A = [2 (w1 + w2)^2 + (mu+ + mu-)^2 + 4 Re[rho23]^2] / 3
/// ```
pub fn t1_average_fidelity(channel: &DensityMatrix4) -> Result<f64, CoreError> {
    let ch = summarize_channel(channel)?;
    Ok((2.0 * ch.inner_pop * ch.inner_pop
        + ch.outer_pop * ch.outer_pop
        + 4.0 * ch.inner_coh * ch.inner_coh)
        / 3.0)
}
