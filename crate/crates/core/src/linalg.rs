//! Small dense linear-algebra helpers shared by the oracles and the exact
//! evolution path.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};

pub type CMatrix = DMatrix<Complex64>;

pub const C0: Complex64 = Complex64::new(0.0, 0.0);
pub const C1: Complex64 = Complex64::new(1.0, 0.0);
pub const CI: Complex64 = Complex64::new(0.0, 1.0);

/// Largest register for which dense `2^n x 2^n` operators are built.
pub const MAX_DENSE_QUBITS: usize = 10;

pub fn kron(a: &CMatrix, b: &CMatrix) -> CMatrix {
    let (ar, ac) = a.shape();
    let (br, bc) = b.shape();
    let mut out = CMatrix::zeros(ar * br, ac * bc);
    for i in 0..ar {
        for j in 0..ac {
            let s = a[(i, j)];
            if s == C0 {
                continue;
            }
            for k in 0..br {
                for l in 0..bc {
                    out[(i * br + k, j * bc + l)] = s * b[(k, l)];
                }
            }
        }
    }
    out
}

/// Maximum entrywise modulus.
pub fn max_abs(m: &CMatrix) -> f64 {
    m.iter().fold(0.0_f64, |acc, z| acc.max(z.norm()))
}

pub fn hermiticity_residual(m: &CMatrix) -> f64 {
    max_abs(&(m - m.adjoint()))
}

/// `exp(-i t H)` for Hermitian `H`, via eigendecomposition so the result is
/// unitary up to rounding.
pub fn hermitian_expm(h: &CMatrix, t: f64) -> Result<CMatrix> {
    let scale = max_abs(h).max(1.0);
    if hermiticity_residual(h) > 1e-12 * scale {
        return Err(Error::NotHermitian("dense generator".into()));
    }
    let eig = h.clone().symmetric_eigen();
    let phases = CMatrix::from_diagonal(
        &eig.eigenvalues
            .map(|lambda| Complex64::from_polar(1.0, -lambda * t)),
    );
    Ok(&eig.eigenvectors * phases * eig.eigenvectors.adjoint())
}

/// Smallest eigenvalue of a Hermitian matrix.
pub fn min_eigenvalue(h: &CMatrix) -> f64 {
    h.clone()
        .symmetric_eigen()
        .eigenvalues
        .iter()
        .fold(f64::INFINITY, |acc, &v| acc.min(v))
}
