//! Two-qubit anisotropic Heisenberg XYZ model: parameters, Hamiltonian,
//! and its spectrum (closed form and numeric).
//!
//! Basis convention: standard product basis |00>, |01>, |10>, |11> with |0>
//! the +1 eigenstate of sigma_z; hbar = 1 and every parameter dimensionless.

use crate::error::CoreError;
use crate::linalg::{c64, hermitian_eigen4, CMatrix4, CVector4, C64};
use crate::state::DensityMatrix4;

/// Physical parameters of the chain plus the dephasing rate of the channel.
///
/// The two qubits couple through a mean in-plane exchange `xy_coupling` (J)
/// with anisotropy `anisotropy` (chi, the normalized Jx-Jy imbalance), a
/// z-axis exchange `z_coupling` (Jz), and a z-axis spin-orbit term of
/// strength `z_coupling * spin_orbit` (Jz*D). The magnetic field is
/// `field + field_imbalance` on the first site and `field - field_imbalance`
/// on the second. `dephasing_rate` (gamma) drives the intrinsic-decoherence
/// channel; gamma = 0 is purely unitary evolution.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelParams {
    pub xy_coupling: f64,
    pub anisotropy: f64,
    pub z_coupling: f64,
    pub field: f64,
    pub field_imbalance: f64,
    pub spin_orbit: f64,
    pub dephasing_rate: f64,
}

impl ModelParams {
    pub fn validate(&self) -> Result<(), CoreError> {
        let all = [
            self.xy_coupling,
            self.anisotropy,
            self.z_coupling,
            self.field,
            self.field_imbalance,
            self.spin_orbit,
            self.dephasing_rate,
        ];
        if all.iter().any(|x| !x.is_finite()) {
            return Err(CoreError::InvalidParams("non-finite parameter".into()));
        }
        if !(-1.0..=1.0).contains(&self.anisotropy) {
            return Err(CoreError::InvalidParams("chi out of [-1,1]".into()));
        }
        if self.dephasing_rate < 0.0 {
            return Err(CoreError::InvalidParams("gamma must be >= 0".into()));
        }
        Ok(())
    }

    /// Coefficient of the double-flip term |00><11| in the Hamiltonian: J*chi.
    pub fn double_flip_coupling(&self) -> f64 {
        self.xy_coupling * self.anisotropy
    }

    /// Coefficient of the exchange term |01><10|: J + i*Jz*D.
    pub fn exchange_coupling(&self) -> C64 {
        c64(self.xy_coupling, self.z_coupling * self.spin_orbit)
    }

    /// Half-splitting of the |01>/|10> sector: xi = sqrt(b^2 + J^2 + (Jz*D)^2).
    pub fn xi(&self) -> f64 {
        (self.field_imbalance.powi(2) + self.exchange_coupling().norm_sqr()).sqrt()
    }

    /// Half-splitting of the |00>/|11> sector: eta = sqrt(B^2 + (J*chi)^2).
    pub fn eta(&self) -> f64 {
        (self.field.powi(2) + self.double_flip_coupling().powi(2)).sqrt()
    }
}

/// The 4x4 Hamiltonian in the standard product basis.
///
/// Nonzero entries sit only on the diagonal and anti-diagonal positions
/// (the X pattern), which is what guarantees X-state closure under the
/// dephased evolution.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Hamiltonian {
    matrix: CMatrix4,
}

impl Hamiltonian {
    pub fn matrix(&self) -> &CMatrix4 {
        &self.matrix
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.matrix.frobenius_norm()
    }

    /// Eigenvalue gaps below this are treated as degenerate: the closed
    /// forms divide by quantities that vanish exactly at degeneracy.
    pub fn degeneracy_threshold(&self) -> f64 {
        1e-12 * (1.0 + self.frobenius_norm())
    }
}

/// Builds the Hamiltonian entry by entry:
/// diagonal (Jz/2 + B, -Jz/2 + b, -Jz/2 - b, Jz/2 - B), anti-diagonal corner
/// J*chi from the double-flip term, and inner block J +/- i*Jz*D from the
/// exchange plus z-axis spin-orbit term.
pub fn build_hamiltonian(p: &ModelParams) -> Hamiltonian {
    let half_jz = 0.5 * p.z_coupling;
    let mut m = CMatrix4::zeros();
    m[(0, 0)] = c64(half_jz + p.field, 0.0);
    m[(1, 1)] = c64(-half_jz + p.field_imbalance, 0.0);
    m[(2, 2)] = c64(-half_jz - p.field_imbalance, 0.0);
    m[(3, 3)] = c64(half_jz - p.field, 0.0);
    m[(0, 3)] = c64(p.double_flip_coupling(), 0.0);
    m[(3, 0)] = c64(p.double_flip_coupling(), 0.0);
    m[(1, 2)] = p.exchange_coupling();
    m[(2, 1)] = p.exchange_coupling().conj();
    Hamiltonian { matrix: m }
}

/// Which closed-form eigenstate family an eigenpair belongs to. The psi pair
/// lives in the |01>/|10> sector, the sigma pair in |00>/|11>.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    PsiPlus,
    PsiMinus,
    SigmaPlus,
    SigmaMinus,
}

impl Branch {
    pub fn label(&self) -> &'static str {
        match self {
            Branch::PsiPlus => "psi+",
            Branch::PsiMinus => "psi-",
            Branch::SigmaPlus => "sigma+",
            Branch::SigmaMinus => "sigma-",
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct EigenPair {
    pub energy: f64,
    pub state: CVector4,
    /// Set when the pair came from the closed form.
    pub branch: Option<Branch>,
}

/// Four orthonormal eigenpairs of the Hamiltonian.
#[derive(Debug, Clone, Copy)]
pub struct Spectrum {
    pairs: [EigenPair; 4],
}

impl Spectrum {
    pub fn pairs(&self) -> &[EigenPair; 4] {
        &self.pairs
    }

    pub fn energies(&self) -> [f64; 4] {
        [
            self.pairs[0].energy,
            self.pairs[1].energy,
            self.pairs[2].energy,
            self.pairs[3].energy,
        ]
    }

    /// Unitary whose k-th column is the k-th eigenvector.
    pub fn basis_matrix(&self) -> CMatrix4 {
        CMatrix4::from_fn(|i, k| self.pairs[k].state.components()[i])
    }

    /// Smallest eigenvalue gap strictly above `threshold`, if any.
    pub fn min_nonzero_gap(&self, threshold: f64) -> Option<f64> {
        let e = self.energies();
        let mut best: Option<f64> = None;
        for m in 0..4 {
            for n in (m + 1)..4 {
                let gap = (e[m] - e[n]).abs();
                if gap > threshold {
                    best = Some(best.map_or(gap, |cur: f64| cur.min(gap)));
                }
            }
        }
        best
    }
}

/// Stable evaluation of x - r where r = sqrt(x^2 + s2): rewrites the
/// cancelling branch as -s2/(x + r).
fn minus_branch(x: f64, r: f64, s2: f64) -> f64 {
    if x > 0.0 {
        -s2 / (x + r)
    } else {
        x - r
    }
}

/// Analytic spectrum: psi+/- at -Jz/2 +/- xi in the exchange sector and
/// sigma+/- at Jz/2 +/- eta in the double-flip sector.
///
/// Fails with `DegenerateClosedForm` when |J*chi| or |J + i*Jz*D| is below
/// the degeneracy threshold, because the eigenvector expressions divide by
/// them; callers fall back to `numeric_spectrum`.
pub fn closed_form_spectrum(p: &ModelParams) -> Result<Spectrum, CoreError> {
    let h = build_hamiltonian(p);
    let threshold = h.degeneracy_threshold();
    let exchange = p.exchange_coupling();
    let double_flip = p.double_flip_coupling();
    if exchange.norm() <= threshold {
        return Err(CoreError::DegenerateClosedForm(
            "|J + i*Jz*D| below degeneracy threshold".into(),
        ));
    }
    if double_flip.abs() <= threshold {
        return Err(CoreError::DegenerateClosedForm(
            "|J*chi| below degeneracy threshold".into(),
        ));
    }

    let xi = p.xi();
    let eta = p.eta();
    let b = p.field_imbalance;
    let big_b = p.field;
    let half_jz = 0.5 * p.z_coupling;

    // psi+/-: proportional to ((b +/- xi)/(J - i*Jz*D)) |01> + |10>.
    let psi = |plus: bool| -> CVector4 {
        let num = if plus {
            b + xi
        } else {
            minus_branch(b, xi, exchange.norm_sqr())
        };
        let coeff = c64(num, 0.0) / exchange.conj();
        let mut v = CVector4::zeros();
        v[1] = coeff;
        v[2] = c64(1.0, 0.0);
        v.normalized()
    };
    // sigma+/-: proportional to ((B +/- eta)/(J*chi)) |00> + |11>.
    let sigma = |plus: bool| -> CVector4 {
        let num = if plus {
            big_b + eta
        } else {
            minus_branch(big_b, eta, double_flip * double_flip)
        };
        let mut v = CVector4::zeros();
        v[0] = c64(num / double_flip, 0.0);
        v[3] = c64(1.0, 0.0);
        v.normalized()
    };

    Ok(Spectrum {
        pairs: [
            EigenPair {
                energy: -half_jz + xi,
                state: psi(true),
                branch: Some(Branch::PsiPlus),
            },
            EigenPair {
                energy: -half_jz - xi,
                state: psi(false),
                branch: Some(Branch::PsiMinus),
            },
            EigenPair {
                energy: half_jz + eta,
                state: sigma(true),
                branch: Some(Branch::SigmaPlus),
            },
            EigenPair {
                energy: half_jz - eta,
                state: sigma(false),
                branch: Some(Branch::SigmaMinus),
            },
        ],
    })
}

/// Numeric spectrum via the deterministic Jacobi eigensolver. Works at every
/// parameter value, including the degenerate points the closed form rejects.
pub fn numeric_spectrum(h: &Hamiltonian) -> Spectrum {
    let eig = hermitian_eigen4(h.matrix());
    let pair = |k: usize| EigenPair {
        energy: eig.values[k],
        state: eig.vectors[k],
        branch: None,
    };
    Spectrum {
        pairs: [pair(0), pair(1), pair(2), pair(3)],
    }
}

/// Gibbs state exp(-beta H)/Z over the numeric spectrum.
///
/// Thermal states commute with H, so they are fixed points of the dephased
/// evolution at every temperature.
pub fn thermal_state(p: &ModelParams, beta: f64) -> Result<DensityMatrix4, CoreError> {
    if !beta.is_finite() {
        return Err(CoreError::InvalidParams("beta must be finite".into()));
    }
    let sp = numeric_spectrum(&build_hamiltonian(p));
    let energies = sp.energies();
    let ground = energies.iter().cloned().fold(f64::INFINITY, f64::min);
    let weights: Vec<f64> = energies
        .iter()
        .map(|e| (-beta * (e - ground)).exp())
        .collect();
    let z: f64 = weights.iter().sum();
    let mut m = CMatrix4::zeros();
    for (k, w) in weights.iter().enumerate() {
        m = m + sp.pairs[k].state.outer(&sp.pairs[k].state).scale_re(w / z);
    }
    Ok(DensityMatrix4::from_matrix_unchecked(m.hermitized()))
}
