//! Seeded samplers and the quadrature oracle for the acceptance suite.
#![allow(dead_code)]

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use spintel_core::{c64, ModelParams, XState};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_params(rng: &mut ChaCha8Rng) -> ModelParams {
    ModelParams {
        xy_coupling: rng.random_range(-1.5..1.5),
        anisotropy: rng.random_range(-1.0..1.0),
        z_coupling: rng.random_range(-1.5..1.5),
        field: rng.random_range(-2.0..2.0),
        field_imbalance: rng.random_range(-2.0..2.0),
        spin_orbit: rng.random_range(-1.5..1.5),
        dephasing_rate: rng.random_range(0.01..0.3),
    }
}

pub fn random_nondegenerate_params(rng: &mut ChaCha8Rng) -> ModelParams {
    loop {
        let p = random_params(rng);
        if p.double_flip_coupling().abs() > 0.05 && p.exchange_coupling().norm() > 0.05 {
            return p;
        }
    }
}

pub fn random_xstate(rng: &mut ChaCha8Rng) -> XState {
    let raw: [f64; 4] = [
        rng.random_range(0.02..1.0),
        rng.random_range(0.02..1.0),
        rng.random_range(0.02..1.0),
        rng.random_range(0.02..1.0),
    ];
    let total: f64 = raw.iter().sum();
    let [p00, p01, p10, p11] = raw.map(|x| x / total);
    let outer_mag = rng.random_range(0.0..1.0) * (p00 * p11).sqrt();
    let inner_mag = rng.random_range(0.0..1.0) * (p01 * p10).sqrt();
    let outer_arg = rng.random_range(0.0..std::f64::consts::TAU);
    let inner_arg = rng.random_range(0.0..std::f64::consts::TAU);
    XState::new(
        p00,
        p01,
        p10,
        p11,
        c64(outer_arg.cos(), outer_arg.sin()) * outer_mag,
        c64(inner_arg.cos(), inner_arg.sin()) * inner_mag,
    )
    .expect("sampler respects block positivity")
}

/// Gauss-Legendre nodes and weights on [-1, 1].
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..n {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        for _ in 0..100 {
            let (p, dp) = legendre_with_derivative(n, x);
            let dx = p / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        let (_, dp) = legendre_with_derivative(n, x);
        nodes[i] = x;
        weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    (nodes, weights)
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let k = k as f64;
        let p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, dp)
}
