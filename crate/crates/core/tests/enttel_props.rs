//! Protocol T1 invariants: component assembly against the 16-term sum,
//! closed-form negativity against the generic eigensolver, the fidelity law
//! against direct expectation, and the average-fidelity closed form against
//! sphere quadrature.

mod common;

use common::{gauss_legendre, random_params, random_xstate, rng};
use rand::Rng;
use spintel_core::{
    asymptotic_state, negativity, propagate, t1_average_fidelity, t1_fidelity, t1_fidelity_law,
    t1_output_components, t1_output_negativity, teleport_t1, Bell, DensityMatrix4, ModelParams,
    T1Input,
};
use std::f64::consts::{FRAC_PI_2, PI, TAU};

fn random_input(rng: &mut rand_chacha::ChaCha8Rng) -> T1Input {
    T1Input::new(rng.random_range(0.0..PI), rng.random_range(0.0..TAU)).unwrap()
}

/// 96x96 product quadrature of the average fidelity: Gauss-Legendre in
/// cos(theta), uniform in phi.
fn average_fidelity_quadrature(channel: &DensityMatrix4) -> f64 {
    let n_phi = 96;
    let (nodes, weights) = gauss_legendre(96);
    let mut total = 0.0;
    for j in 0..n_phi {
        let phi = TAU * j as f64 / n_phi as f64;
        for (x, w) in nodes.iter().zip(&weights) {
            let theta = x.acos();
            let input = T1Input { theta, phi };
            total += w * t1_fidelity(channel, &input);
        }
    }
    total / (2.0 * n_phi as f64)
}

#[test]
fn components_equal_canonical_sum_on_random_draws() {
    let mut rng = rng(0xE7_0001);
    for _ in 0..150 {
        let channel = random_xstate(&mut rng).to_density();
        let input = random_input(&mut rng);
        let components = t1_output_components(&channel, &input).unwrap();
        let canonical = teleport_t1(&channel, &input);
        assert!(
            common::max_entry_diff(&components.assemble(), &canonical) < 1e-10,
            "input {input:?}"
        );
    }
}

#[test]
fn closed_form_output_negativity_equals_generic() {
    let mut rng = rng(0xE7_0002);
    for _ in 0..150 {
        let channel = random_xstate(&mut rng).to_density();
        let input = random_input(&mut rng);
        let out = t1_output_components(&channel, &input).unwrap();
        let closed = t1_output_negativity(&out);
        let generic = negativity(&out.assemble());
        assert!((closed - generic).abs() < 1e-12);
    }
}

#[test]
fn fidelity_law_equals_direct_expectation() {
    let mut rng = rng(0xE7_0003);
    for _ in 0..150 {
        let channel = random_xstate(&mut rng).to_density();
        let input = random_input(&mut rng);
        let law = t1_fidelity_law(&channel, input.phi).unwrap();
        let direct = t1_fidelity(&channel, &input);
        assert!((law.evaluate(input.input_negativity()) - direct).abs() < 1e-12);
    }
}

#[test]
fn fidelity_law_coefficients_do_not_depend_on_theta() {
    // f1 and f2 come from the channel (and phi) alone; sweeping theta at
    // fixed phi traces the parabola f1 + f2 N^2 exactly.
    let mut rng = rng(0xE7_0004);
    for _ in 0..25 {
        let channel = random_xstate(&mut rng).to_density();
        for phi in [0.0, PI] {
            let law = t1_fidelity_law(&channel, phi).unwrap();
            for step in 0..9 {
                let theta = PI * step as f64 / 8.0;
                let input = T1Input::new(theta, phi).unwrap();
                let direct = t1_fidelity(&channel, &input);
                assert!((law.evaluate(theta.sin()) - direct).abs() < 1e-12);
            }
        }
    }
}

#[test]
fn average_fidelity_matches_quadrature() {
    let mut rng = rng(0xE7_0005);
    for _ in 0..12 {
        let channel = random_xstate(&mut rng).to_density();
        let closed = t1_average_fidelity(&channel).unwrap();
        let quad = average_fidelity_quadrature(&channel);
        assert!(
            (closed - quad).abs() < 1e-6,
            "closed {closed} vs quadrature {quad}"
        );
    }
}

#[test]
fn output_state_is_physical() {
    let mut rng = rng(0xE7_0006);
    for _ in 0..60 {
        let p = random_params(&mut rng);
        let channel = propagate(
            &random_xstate(&mut rng).to_density(),
            &p,
            rng.random_range(0.0..10.0),
        );
        let out = teleport_t1(&channel, &random_input(&mut rng));
        assert!((out.matrix().trace().re - 1.0).abs() < 1e-12);
        assert!(out.matrix().hermiticity_defect() < 1e-12);
        assert!(out.min_eigenvalue() >= -1e-10);
    }
}

#[test]
fn asymptotic_output_negativity_monotone_in_input_and_spin_orbit() {
    // Fig. 5's claims for the |Psi+> channel: N_out grows with N_in at fixed
    // D and shrinks as D grows at N_in = 1.
    let base = ModelParams {
        xy_coupling: 1.0,
        anisotropy: 0.9,
        z_coupling: 0.5,
        field: 3.0,
        field_imbalance: 1.0,
        spin_orbit: 0.0,
        dephasing_rate: 0.02,
    };
    for step_d in 0..11 {
        let mut p = base;
        p.spin_orbit = 0.5 * step_d as f64;
        let channel = asymptotic_state(&Bell::PsiPlus.density(), &p).unwrap();
        let mut last = -1.0;
        for step_t in 0..11 {
            let theta = FRAC_PI_2 * step_t as f64 / 10.0;
            let out = t1_output_components(&channel, &T1Input::new(theta, 0.0).unwrap()).unwrap();
            let n_out = t1_output_negativity(&out);
            assert!(n_out >= last - 1e-9);
            last = n_out;
        }
    }
    let mut last = f64::INFINITY;
    for step_d in 0..11 {
        let mut p = base;
        p.spin_orbit = 0.5 * step_d as f64;
        let channel = asymptotic_state(&Bell::PsiPlus.density(), &p).unwrap();
        let out = t1_output_components(&channel, &T1Input::new(FRAC_PI_2, 0.0).unwrap()).unwrap();
        let n_out = t1_output_negativity(&out);
        assert!(n_out <= last + 1e-9);
        last = n_out;
    }
}

#[test]
fn perfect_channel_scenario() {
    // D = b = 0 robust |Psi+> channel: unit average fidelity and lossless
    // entanglement transmission.
    let p = ModelParams {
        xy_coupling: 1.0,
        anisotropy: 0.9,
        z_coupling: 0.5,
        field: 0.0,
        field_imbalance: 0.0,
        spin_orbit: 0.0,
        dephasing_rate: 0.09,
    };
    let channel = asymptotic_state(&Bell::PsiPlus.density(), &p).unwrap();
    assert!((t1_average_fidelity(&channel).unwrap() - 1.0).abs() < 1e-9);
    for step in 0..9 {
        let theta = PI * step as f64 / 8.0;
        let input = T1Input::new(theta, 0.0).unwrap();
        let out = t1_output_components(&channel, &input).unwrap();
        assert!((t1_output_negativity(&out) - input.input_negativity()).abs() < 1e-9);
    }
}
