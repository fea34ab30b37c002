//! Two-qubit (and single-qubit) density matrices, the X-state class, and the
//! standard entangled states used as channels throughout.

use crate::error::CoreError;
use crate::linalg::{c64, hermitian_eigen4, trace_distance, CMatrix2, CMatrix4, CVector4, C64};

const HERMITICITY_TOL: f64 = 1e-12;
const TRACE_TOL: f64 = 1e-12;
const PSD_TOL: f64 = 1e-10;
const X_PATTERN_TOL: f64 = 1e-12;

/// A 4x4 density matrix: Hermitian, unit trace, positive semidefinite up to
/// numerical noise.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityMatrix4 {
    m: CMatrix4,
}

impl DensityMatrix4 {
    /// Validates the three state invariants before wrapping.
    pub fn new(m: CMatrix4) -> Result<Self, CoreError> {
        let defect = m.hermiticity_defect();
        if defect > HERMITICITY_TOL {
            return Err(CoreError::InvalidState(format!(
                "hermiticity defect {defect:.3e}"
            )));
        }
        let tr = m.trace();
        if (tr - c64(1.0, 0.0)).norm() > TRACE_TOL {
            return Err(CoreError::InvalidState(format!("trace {tr}")));
        }
        let min_eig = hermitian_eigen4(&m).values[0];
        if min_eig < -PSD_TOL {
            return Err(CoreError::InvalidState(format!(
                "negative eigenvalue {min_eig:.3e}"
            )));
        }
        Ok(DensityMatrix4 { m })
    }

    /// Wraps a matrix known (by construction) to satisfy the invariants.
    pub fn from_matrix_unchecked(m: CMatrix4) -> Self {
        DensityMatrix4 { m }
    }

    /// Projector onto a (normalized) pure state.
    pub fn pure(v: &CVector4) -> Self {
        let v = v.normalized();
        DensityMatrix4 { m: v.outer(&v) }
    }

    /// Projector onto a computational basis ket, k in 0..4.
    pub fn basis_ket(k: usize) -> Self {
        DensityMatrix4::pure(&CVector4::basis(k))
    }

    pub fn maximally_mixed() -> Self {
        DensityMatrix4 {
            m: CMatrix4::identity().scale_re(0.25),
        }
    }

    pub fn matrix(&self) -> &CMatrix4 {
        &self.m
    }

    pub fn entry(&self, i: usize, j: usize) -> C64 {
        self.m[(i, j)]
    }

    pub fn trace_distance(&self, other: &DensityMatrix4) -> f64 {
        trace_distance(&self.m, &other.m)
    }

    pub fn min_eigenvalue(&self) -> f64 {
        hermitian_eigen4(&self.m).values[0]
    }

    /// True when every entry off the diagonal and anti-diagonal is below tol.
    pub fn is_x_shaped(&self, tol: f64) -> bool {
        for i in 0..4 {
            for j in 0..4 {
                if i != j && i + j != 3 && self.m[(i, j)].norm() > tol {
                    return false;
                }
            }
        }
        true
    }
}

/// A single-qubit density matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityMatrix2 {
    m: CMatrix2,
}

impl DensityMatrix2 {
    pub fn new(m: CMatrix2) -> Result<Self, CoreError> {
        if m.hermiticity_defect() > HERMITICITY_TOL {
            return Err(CoreError::InvalidState("2x2: not Hermitian".into()));
        }
        if (m.trace() - c64(1.0, 0.0)).norm() > TRACE_TOL {
            return Err(CoreError::InvalidState("2x2: trace != 1".into()));
        }
        // PSD for a Hermitian 2x2: nonnegative trace and determinant.
        let det = (m[(0, 0)] * m[(1, 1)] - m[(0, 1)] * m[(1, 0)]).re;
        if det < -PSD_TOL || m[(0, 0)].re < -PSD_TOL || m[(1, 1)].re < -PSD_TOL {
            return Err(CoreError::InvalidState("2x2: not PSD".into()));
        }
        Ok(DensityMatrix2 { m })
    }

    pub fn from_matrix_unchecked(m: CMatrix2) -> Self {
        DensityMatrix2 { m }
    }

    pub fn pure(amp0: C64, amp1: C64) -> Self {
        let norm = (amp0.norm_sqr() + amp1.norm_sqr()).sqrt();
        let a0 = amp0 / norm;
        let a1 = amp1 / norm;
        DensityMatrix2 {
            m: CMatrix2::new([
                [a0 * a0.conj(), a0 * a1.conj()],
                [a1 * a0.conj(), a1 * a1.conj()],
            ]),
        }
    }

    pub fn matrix(&self) -> &CMatrix2 {
        &self.m
    }

    pub fn entry(&self, i: usize, j: usize) -> C64 {
        self.m[(i, j)]
    }
}

/// The four Bell states.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Bell {
    /// (|00> + |11>)/sqrt(2)
    PhiPlus,
    /// (|00> - |11>)/sqrt(2)
    PhiMinus,
    /// (|01> + |10>)/sqrt(2)
    PsiPlus,
    /// (|01> - |10>)/sqrt(2)
    PsiMinus,
}

impl Bell {
    pub fn vector(&self) -> CVector4 {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let mut v = CVector4::zeros();
        match self {
            Bell::PhiPlus => {
                v[0] = c64(s, 0.0);
                v[3] = c64(s, 0.0);
            }
            Bell::PhiMinus => {
                v[0] = c64(s, 0.0);
                v[3] = c64(-s, 0.0);
            }
            Bell::PsiPlus => {
                v[1] = c64(s, 0.0);
                v[2] = c64(s, 0.0);
            }
            Bell::PsiMinus => {
                v[1] = c64(s, 0.0);
                v[2] = c64(-s, 0.0);
            }
        }
        v
    }

    pub fn density(&self) -> DensityMatrix4 {
        DensityMatrix4::pure(&self.vector())
    }
}

/// The seven-parameter X class: populations on the diagonal plus the two
/// anti-diagonal coherences. Closed under the dephased evolution.
///
/// The |00>/|11> coherence is kept complex even though the initial states of
/// interest have it real: evolution puts a phase on it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct XState {
    /// Population of |00> (mu_plus).
    pub pop_00: f64,
    /// Population of |01> (w_1).
    pub pop_01: f64,
    /// Population of |10> (w_2).
    pub pop_10: f64,
    /// Population of |11> (mu_minus).
    pub pop_11: f64,
    /// <00|rho|11> (nu).
    pub outer_coherence: C64,
    /// <01|rho|10> (z).
    pub inner_coherence: C64,
}

impl XState {
    pub fn new(
        pop_00: f64,
        pop_01: f64,
        pop_10: f64,
        pop_11: f64,
        outer_coherence: C64,
        inner_coherence: C64,
    ) -> Result<Self, CoreError> {
        let x = XState {
            pop_00,
            pop_01,
            pop_10,
            pop_11,
            outer_coherence,
            inner_coherence,
        };
        x.validate()?;
        Ok(x)
    }

    pub fn validate(&self) -> Result<(), CoreError> {
        let pops = [self.pop_00, self.pop_01, self.pop_10, self.pop_11];
        if pops.iter().any(|p| *p < -PSD_TOL) {
            return Err(CoreError::InvalidState("negative population".into()));
        }
        let total: f64 = pops.iter().sum();
        if (total - 1.0).abs() > TRACE_TOL {
            return Err(CoreError::InvalidState(format!("populations sum {total}")));
        }
        // Positivity of the two 2x2 blocks.
        if self.outer_coherence.norm_sqr() > self.pop_00 * self.pop_11 + PSD_TOL {
            return Err(CoreError::InvalidState(
                "|nu|^2 exceeds mu_plus*mu_minus".into(),
            ));
        }
        if self.inner_coherence.norm_sqr() > self.pop_01 * self.pop_10 + PSD_TOL {
            return Err(CoreError::InvalidState("|z|^2 exceeds w1*w2".into()));
        }
        Ok(())
    }

    /// Reads the seven components off a density matrix, rejecting inputs
    /// whose non-X entries exceed the pattern tolerance.
    pub fn from_density(rho: &DensityMatrix4) -> Result<Self, CoreError> {
        if !rho.is_x_shaped(X_PATTERN_TOL) {
            return Err(CoreError::NotXState(
                "entries off the diagonal and anti-diagonal exceed 1e-12".into(),
            ));
        }
        Ok(XState {
            pop_00: rho.entry(0, 0).re,
            pop_01: rho.entry(1, 1).re,
            pop_10: rho.entry(2, 2).re,
            pop_11: rho.entry(3, 3).re,
            outer_coherence: rho.entry(0, 3),
            inner_coherence: rho.entry(1, 2),
        })
    }

    pub fn to_density(&self) -> DensityMatrix4 {
        let mut m = CMatrix4::zeros();
        m[(0, 0)] = c64(self.pop_00, 0.0);
        m[(1, 1)] = c64(self.pop_01, 0.0);
        m[(2, 2)] = c64(self.pop_10, 0.0);
        m[(3, 3)] = c64(self.pop_11, 0.0);
        m[(0, 3)] = self.outer_coherence;
        m[(3, 0)] = self.outer_coherence.conj();
        m[(1, 2)] = self.inner_coherence;
        m[(2, 1)] = self.inner_coherence.conj();
        DensityMatrix4::from_matrix_unchecked(m)
    }
}
