//! Shared oracles and samplers for the integration tests. Everything is
//! seeded and deterministic, and none of it reuses the library's evolution
//! or spectral code paths beyond plain matrix arithmetic.
//!
//! Each test target compiles its own copy and uses a subset.
#![allow(dead_code)]

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use spintel_core::{c64, CMatrix2, CMatrix4, CVector4, DensityMatrix4, ModelParams, XState, C64};

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

/// Parameters with both sector couplings safely away from the degenerate
/// manifold, so the closed forms apply.
pub fn random_nondegenerate_params(rng: &mut ChaCha8Rng) -> ModelParams {
    loop {
        let p = random_params(rng);
        if p.double_flip_coupling().abs() > 0.05 && p.exchange_coupling().norm() > 0.05 {
            return p;
        }
    }
}

pub fn random_complex(rng: &mut ChaCha8Rng) -> C64 {
    c64(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
}

pub fn random_pure_vector(rng: &mut ChaCha8Rng) -> CVector4 {
    loop {
        let v = CVector4::new([
            random_complex(rng),
            random_complex(rng),
            random_complex(rng),
            random_complex(rng),
        ]);
        if v.norm() > 1e-3 {
            return v.normalized();
        }
    }
}

/// Random full-rank-ish density matrix: a weighted mixture of four random
/// pure states.
pub fn random_density(rng: &mut ChaCha8Rng) -> DensityMatrix4 {
    let mut weights = [0.0f64; 4];
    let mut total = 0.0;
    for w in weights.iter_mut() {
        *w = rng.random_range(0.01..1.0);
        total += *w;
    }
    let mut m = CMatrix4::zeros();
    for w in weights {
        let v = random_pure_vector(rng);
        m = m + v.outer(&v).scale_re(w / total);
    }
    DensityMatrix4::from_matrix_unchecked(m.hermitized())
}

/// Random valid X state: exponential population weights plus coherences
/// drawn inside the positivity disks of the two 2x2 blocks.
pub fn random_xstate(rng: &mut ChaCha8Rng) -> XState {
    let raw: [f64; 4] = [
        rng.random_range(0.02..1.0),
        rng.random_range(0.02..1.0),
        rng.random_range(0.02..1.0),
        rng.random_range(0.02..1.0),
    ];
    let total: f64 = raw.iter().sum();
    let [p00, p01, p10, p11] = raw.map(|x| x / total);
    let outer_cap = (p00 * p11).sqrt();
    let inner_cap = (p01 * p10).sqrt();
    let outer_mag = rng.random_range(0.0..1.0) * outer_cap;
    let inner_mag = rng.random_range(0.0..1.0) * inner_cap;
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
    .expect("sampler respects the block positivity bounds")
}

/// Random single-qubit density matrix from a Bloch vector of length <= r_max.
pub fn random_qubit(rng: &mut ChaCha8Rng, r_max: f64) -> CMatrix2 {
    let r = rng.random_range(0.0..r_max);
    let costheta: f64 = rng.random_range(-1.0..1.0);
    let sintheta = (1.0 - costheta * costheta).sqrt();
    let phi = rng.random_range(0.0..std::f64::consts::TAU);
    let (x, y, z) = (
        r * sintheta * phi.cos(),
        r * sintheta * phi.sin(),
        r * costheta,
    );
    CMatrix2::new([
        [c64(0.5 * (1.0 + z), 0.0), c64(0.5 * x, -0.5 * y)],
        [c64(0.5 * x, 0.5 * y), c64(0.5 * (1.0 - z), 0.0)],
    ])
}

/// Random 2x2 unitary (up to global phase).
pub fn random_unitary2(rng: &mut ChaCha8Rng) -> CMatrix2 {
    let alpha = rng.random_range(0.0..std::f64::consts::TAU);
    let gamma = rng.random_range(0.0..std::f64::consts::TAU);
    let beta = rng.random_range(0.0..std::f64::consts::FRAC_PI_2);
    let (cb, sb) = (beta.cos(), beta.sin());
    CMatrix2::new([
        [
            c64(alpha.cos(), alpha.sin()) * cb,
            c64(gamma.cos(), gamma.sin()) * sb,
        ],
        [
            c64(gamma.cos(), -gamma.sin()) * (-sb),
            c64(alpha.cos(), -alpha.sin()) * cb,
        ],
    ])
}

/// Matrix exponential by scaling-and-squaring on a Taylor series; the oracle
/// for Gibbs states and short-time unitaries.
pub fn matrix_exp(m: &CMatrix4) -> CMatrix4 {
    let norm = m.frobenius_norm();
    let squarings = if norm > 0.5 {
        (norm / 0.5).log2().ceil() as u32
    } else {
        0
    };
    let scaled = m.scale_re(0.5f64.powi(squarings as i32));
    let mut term = CMatrix4::identity();
    let mut sum = CMatrix4::identity();
    for k in 1..=24 {
        term = term * scaled;
        term = term.scale_re(1.0 / k as f64);
        sum = sum + term;
    }
    let mut out = sum;
    for _ in 0..squarings {
        out = out * out;
    }
    out
}

/// Gauss-Legendre nodes and weights on [-1, 1].
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..n {
        // Newton iteration from the Chebyshev-like initial guess.
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

#[allow(dead_code)]
pub fn max_entry_diff(a: &DensityMatrix4, b: &DensityMatrix4) -> f64 {
    (*a.matrix() - *b.matrix()).max_abs_entry()
}
