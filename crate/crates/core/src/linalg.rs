//! Fixed-size complex linear algebra for the two-qubit (4x4) problem.
//!
//! Everything here is stack-allocated and deterministic: the same input
//! produces bitwise-identical output within one build, which the golden
//! tests and the CSV reproducibility guarantee rely on.

use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

pub use num_complex::Complex64 as C64;

/// Shorthand complex constructor.
#[inline]
pub const fn c64(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

const ZERO: C64 = c64(0.0, 0.0);
const ONE: C64 = c64(1.0, 0.0);

// ---------------------------------------------------------------------------
// 2x2 complex matrices (single-qubit operators)
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CMatrix2([[C64; 2]; 2]);

impl CMatrix2 {
    pub const fn new(rows: [[C64; 2]; 2]) -> Self {
        CMatrix2(rows)
    }

    pub const fn zeros() -> Self {
        CMatrix2([[ZERO; 2]; 2])
    }

    pub const fn identity() -> Self {
        CMatrix2([[ONE, ZERO], [ZERO, ONE]])
    }

    pub fn trace(&self) -> C64 {
        self.0[0][0] + self.0[1][1]
    }

    pub fn adjoint(&self) -> Self {
        let mut out = CMatrix2::zeros();
        for i in 0..2 {
            for j in 0..2 {
                out.0[i][j] = self.0[j][i].conj();
            }
        }
        out
    }

    pub fn hermiticity_defect(&self) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..2 {
            for j in 0..2 {
                worst = worst.max((self.0[i][j] - self.0[j][i].conj()).norm());
            }
        }
        worst
    }
}

impl Index<(usize, usize)> for CMatrix2 {
    type Output = C64;
    fn index(&self, (i, j): (usize, usize)) -> &C64 {
        &self.0[i][j]
    }
}

impl IndexMut<(usize, usize)> for CMatrix2 {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C64 {
        &mut self.0[i][j]
    }
}

impl Mul for CMatrix2 {
    type Output = CMatrix2;
    fn mul(self, rhs: CMatrix2) -> CMatrix2 {
        let mut out = CMatrix2::zeros();
        for i in 0..2 {
            for k in 0..2 {
                let aik = self.0[i][k];
                for j in 0..2 {
                    out.0[i][j] += aik * rhs.0[k][j];
                }
            }
        }
        out
    }
}

impl Add for CMatrix2 {
    type Output = CMatrix2;
    fn add(self, rhs: CMatrix2) -> CMatrix2 {
        let mut out = self;
        for i in 0..2 {
            for j in 0..2 {
                out.0[i][j] += rhs.0[i][j];
            }
        }
        out
    }
}

impl Mul<CMatrix2> for C64 {
    type Output = CMatrix2;
    fn mul(self, rhs: CMatrix2) -> CMatrix2 {
        let mut out = rhs;
        for i in 0..2 {
            for j in 0..2 {
                out.0[i][j] *= self;
            }
        }
        out
    }
}

/// Pauli matrices in the order used by the depolarizing channels:
/// sigma^0 = I, sigma^1 = X, sigma^2 = Y, sigma^3 = Z.
pub const PAULI: [CMatrix2; 4] = [
    CMatrix2::new([[ONE, ZERO], [ZERO, ONE]]),
    CMatrix2::new([[ZERO, ONE], [ONE, ZERO]]),
    CMatrix2::new([[ZERO, c64(0.0, -1.0)], [c64(0.0, 1.0), ZERO]]),
    CMatrix2::new([[ONE, ZERO], [ZERO, c64(-1.0, 0.0)]]),
];

/// Kronecker product of two single-qubit operators in the product basis
/// |00>, |01>, |10>, |11> (first factor acts on the first qubit).
pub fn kron(a: &CMatrix2, b: &CMatrix2) -> CMatrix4 {
    let mut out = CMatrix4::zeros();
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                for l in 0..2 {
                    out.0[2 * i + k][2 * j + l] = a.0[i][j] * b.0[k][l];
                }
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Complex 4-vectors
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CVector4([C64; 4]);

impl CVector4 {
    pub const fn new(components: [C64; 4]) -> Self {
        CVector4(components)
    }

    pub const fn zeros() -> Self {
        CVector4([ZERO; 4])
    }

    /// Standard basis ket |k> for k in 0..4 (|00>, |01>, |10>, |11>).
    pub fn basis(k: usize) -> Self {
        let mut v = CVector4::zeros();
        v.0[k] = ONE;
        v
    }

    pub fn components(&self) -> &[C64; 4] {
        &self.0
    }

    /// Conjugating inner product <self|other>.
    pub fn dot(&self, other: &CVector4) -> C64 {
        let mut acc = ZERO;
        for k in 0..4 {
            acc += self.0[k].conj() * other.0[k];
        }
        acc
    }

    pub fn norm(&self) -> f64 {
        self.dot(self).re.sqrt()
    }

    pub fn scale(&self, s: C64) -> Self {
        let mut out = *self;
        for k in 0..4 {
            out.0[k] *= s;
        }
        out
    }

    pub fn normalized(&self) -> Self {
        self.scale(c64(1.0 / self.norm(), 0.0))
    }

    /// Outer product |self><other|.
    pub fn outer(&self, other: &CVector4) -> CMatrix4 {
        let mut out = CMatrix4::zeros();
        for i in 0..4 {
            for j in 0..4 {
                out.0[i][j] = self.0[i] * other.0[j].conj();
            }
        }
        out
    }
}

impl Index<usize> for CVector4 {
    type Output = C64;
    fn index(&self, k: usize) -> &C64 {
        &self.0[k]
    }
}

impl IndexMut<usize> for CVector4 {
    fn index_mut(&mut self, k: usize) -> &mut C64 {
        &mut self.0[k]
    }
}

// ---------------------------------------------------------------------------
// 4x4 complex matrices
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CMatrix4([[C64; 4]; 4]);

impl CMatrix4 {
    pub const fn new(rows: [[C64; 4]; 4]) -> Self {
        CMatrix4(rows)
    }

    pub const fn zeros() -> Self {
        CMatrix4([[ZERO; 4]; 4])
    }

    pub fn identity() -> Self {
        let mut out = CMatrix4::zeros();
        for k in 0..4 {
            out.0[k][k] = ONE;
        }
        out
    }

    pub fn from_fn(mut f: impl FnMut(usize, usize) -> C64) -> Self {
        let mut out = CMatrix4::zeros();
        for i in 0..4 {
            for j in 0..4 {
                out.0[i][j] = f(i, j);
            }
        }
        out
    }

    pub fn diagonal(d: [f64; 4]) -> Self {
        let mut out = CMatrix4::zeros();
        for (k, x) in d.into_iter().enumerate() {
            out.0[k][k] = c64(x, 0.0);
        }
        out
    }

    pub fn trace(&self) -> C64 {
        self.0[0][0] + self.0[1][1] + self.0[2][2] + self.0[3][3]
    }

    pub fn adjoint(&self) -> Self {
        CMatrix4::from_fn(|i, j| self.0[j][i].conj())
    }

    pub fn transpose(&self) -> Self {
        CMatrix4::from_fn(|i, j| self.0[j][i])
    }

    pub fn scale(&self, s: C64) -> Self {
        CMatrix4::from_fn(|i, j| self.0[i][j] * s)
    }

    pub fn scale_re(&self, s: f64) -> Self {
        CMatrix4::from_fn(|i, j| self.0[i][j] * s)
    }

    pub fn mul_vec(&self, v: &CVector4) -> CVector4 {
        let mut out = CVector4::zeros();
        for i in 0..4 {
            let mut acc = ZERO;
            for j in 0..4 {
                acc += self.0[i][j] * v.0[j];
            }
            out.0[i] = acc;
        }
        out
    }

    pub fn frobenius_norm(&self) -> f64 {
        let mut acc = 0.0;
        for i in 0..4 {
            for j in 0..4 {
                acc += self.0[i][j].norm_sqr();
            }
        }
        acc.sqrt()
    }

    pub fn max_abs_entry(&self) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..4 {
            for j in 0..4 {
                worst = worst.max(self.0[i][j].norm());
            }
        }
        worst
    }

    /// Largest deviation from conjugate symmetry, entrywise.
    pub fn hermiticity_defect(&self) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..4 {
            for j in 0..4 {
                worst = worst.max((self.0[i][j] - self.0[j][i].conj()).norm());
            }
        }
        worst
    }

    /// (M + M^dag)/2; folds floating-point drift back onto the Hermitian cone.
    pub fn hermitized(&self) -> Self {
        CMatrix4::from_fn(|i, j| (self.0[i][j] + self.0[j][i].conj()) * 0.5)
    }
}

impl Index<(usize, usize)> for CMatrix4 {
    type Output = C64;
    fn index(&self, (i, j): (usize, usize)) -> &C64 {
        &self.0[i][j]
    }
}

impl IndexMut<(usize, usize)> for CMatrix4 {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C64 {
        &mut self.0[i][j]
    }
}

impl Add for CMatrix4 {
    type Output = CMatrix4;
    fn add(self, rhs: CMatrix4) -> CMatrix4 {
        CMatrix4::from_fn(|i, j| self.0[i][j] + rhs.0[i][j])
    }
}

impl Sub for CMatrix4 {
    type Output = CMatrix4;
    fn sub(self, rhs: CMatrix4) -> CMatrix4 {
        CMatrix4::from_fn(|i, j| self.0[i][j] - rhs.0[i][j])
    }
}

impl Neg for CMatrix4 {
    type Output = CMatrix4;
    fn neg(self) -> CMatrix4 {
        CMatrix4::from_fn(|i, j| -self.0[i][j])
    }
}

impl Mul for CMatrix4 {
    type Output = CMatrix4;
    fn mul(self, rhs: CMatrix4) -> CMatrix4 {
        let mut out = CMatrix4::zeros();
        for i in 0..4 {
            for k in 0..4 {
                let aik = self.0[i][k];
                for j in 0..4 {
                    out.0[i][j] += aik * rhs.0[k][j];
                }
            }
        }
        out
    }
}

impl Mul<CMatrix4> for C64 {
    type Output = CMatrix4;
    fn mul(self, rhs: CMatrix4) -> CMatrix4 {
        rhs.scale(self)
    }
}

/// Commutator [a, b] = ab - ba.
pub fn commutator(a: &CMatrix4, b: &CMatrix4) -> CMatrix4 {
    *a * *b - *b * *a
}

// ---------------------------------------------------------------------------
// Hermitian eigendecomposition (cyclic Jacobi)
// ---------------------------------------------------------------------------

/// Eigendecomposition of a Hermitian 4x4 matrix.
///
/// Eigenvalues ascend; exact ties are broken by lexicographic comparison of
/// the phase-normalized eigenvectors, so identical inputs always produce
/// identical output.
#[derive(Debug, Clone, Copy)]
pub struct HermitianEigen {
    pub values: [f64; 4],
    pub vectors: [CVector4; 4],
}

/// Cyclic Jacobi diagonalization specialized for 4x4 Hermitian matrices.
///
/// Each rotation exactly diagonalizes one 2x2 principal block with a unitary
/// built from the analytic eigenpair of that block; sweeps repeat until the
/// off-diagonal mass is at rounding level.
pub fn hermitian_eigen4(m: &CMatrix4) -> HermitianEigen {
    let mut a = *m;
    // Work on the Hermitian part only; callers pass Hermitian inputs but the
    // sweep arithmetic must not see the asymmetric rounding noise.
    a = a.hermitized();
    let mut v = CMatrix4::identity();

    let scale = a.frobenius_norm().max(f64::MIN_POSITIVE);
    let stop = scale * 1e-15;

    for _sweep in 0..60 {
        let mut off = 0.0f64;
        for p in 0..4 {
            for q in (p + 1)..4 {
                off += a.0[p][q].norm_sqr();
            }
        }
        if off.sqrt() <= stop {
            break;
        }
        for p in 0..3 {
            for q in (p + 1)..4 {
                jacobi_rotate(&mut a, &mut v, p, q);
            }
        }
    }

    // Phase-normalize: first component above noise made real and positive.
    let mut pairs: Vec<(f64, CVector4)> = (0..4)
        .map(|k| {
            let mut vec = CVector4::zeros();
            for i in 0..4 {
                vec.0[i] = v.0[i][k];
            }
            let mut phase = ONE;
            for i in 0..4 {
                if vec.0[i].norm() > 1e-9 {
                    phase = vec.0[i].conj() / vec.0[i].norm();
                    break;
                }
            }
            (a.0[k][k].re, vec.scale(phase))
        })
        .collect();

    pairs.sort_by(|(ea, va), (eb, vb)| {
        ea.total_cmp(eb).then_with(|| {
            for i in 0..4 {
                let ord = va.0[i]
                    .re
                    .total_cmp(&vb.0[i].re)
                    .then(va.0[i].im.total_cmp(&vb.0[i].im));
                if ord != std::cmp::Ordering::Equal {
                    return ord;
                }
            }
            std::cmp::Ordering::Equal
        })
    });

    let mut values = [0.0; 4];
    let mut vectors = [CVector4::zeros(); 4];
    for (k, (e, vec)) in pairs.into_iter().enumerate() {
        values[k] = e;
        vectors[k] = vec;
    }
    HermitianEigen { values, vectors }
}

/// One complex Jacobi rotation zeroing a[(p,q)], accumulated into v.
fn jacobi_rotate(a: &mut CMatrix4, v: &mut CMatrix4, p: usize, q: usize) {
    let z = a.0[p][q];
    let zn = z.norm();
    if zn == 0.0 {
        return;
    }
    let app = a.0[p][p].re;
    let aqq = a.0[q][q].re;
    let half_gap = 0.5 * (app - aqq);
    let hyp = (half_gap * half_gap + zn * zn).sqrt();
    // d = lambda_plus - app, computed without cancellation.
    let d = if half_gap >= 0.0 {
        zn * zn / (hyp + half_gap)
    } else {
        hyp - half_gap
    };
    let norm = (zn * zn + d * d).sqrt();
    // Unitary with columns (z, d)/n and (-d, conj(z))/n: the eigenvectors of
    // the 2x2 block [[app, z], [conj(z), aqq]].
    let u00 = z / norm;
    let u10 = c64(d / norm, 0.0);
    let u01 = c64(-d / norm, 0.0);
    let u11 = z.conj() / norm;

    // Columns: A <- A U.
    for k in 0..4 {
        let akp = a.0[k][p];
        let akq = a.0[k][q];
        a.0[k][p] = akp * u00 + akq * u10;
        a.0[k][q] = akp * u01 + akq * u11;
    }
    // Rows: A <- U^dag A.
    for k in 0..4 {
        let apk = a.0[p][k];
        let aqk = a.0[q][k];
        a.0[p][k] = u00.conj() * apk + u10.conj() * aqk;
        a.0[q][k] = u01.conj() * apk + u11.conj() * aqk;
    }
    // Eigenbasis accumulator: V <- V U.
    for k in 0..4 {
        let vkp = v.0[k][p];
        let vkq = v.0[k][q];
        v.0[k][p] = vkp * u00 + vkq * u10;
        v.0[k][q] = vkp * u01 + vkq * u11;
    }
    // The rotation zeroes these exactly in exact arithmetic; enforce it.
    a.0[p][q] = ZERO;
    a.0[q][p] = ZERO;
    a.0[p][p] = c64(a.0[p][p].re, 0.0);
    a.0[q][q] = c64(a.0[q][q].re, 0.0);
}

/// Trace distance (1/2)*||a - b||_1 between two Hermitian matrices.
pub fn trace_distance(a: &CMatrix4, b: &CMatrix4) -> f64 {
    let diff = *a - *b;
    let eig = hermitian_eigen4(&diff);
    0.5 * eig.values.iter().map(|x| x.abs()).sum::<f64>()
}
