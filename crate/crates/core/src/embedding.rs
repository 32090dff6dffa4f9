//! One-ancilla embedding of an `N`-qubit system.
//!
//! A simulated state `ψ` lifts to the real vector `Ψ = (Re ψ, Im ψ)` on
//! `N + 1` qubits, with the ancilla (qubit 0) selecting the block. The
//! projector `M = (1, i) ⊗ 𝕀` recovers `ψ`, and `σ^z` on the ancilla maps the
//! lifted state to the lift of `ψ*`, which turns the antilinear quantity
//! `<ψ|Θ|ψ*>` into ordinary expectations in the enlarged space.

use num_complex::Complex64;

use crate::error::{ensure_qubits, Error, Result};
use crate::hilbert::{QuantumState, StateVector};
use crate::linalg::{CMatrix, C0, C1, CI};
use crate::pauli::{Pauli, PauliString, PauliSum};

/// Index of the ancilla in the enlarged register.
pub const ANCILLA: usize = 0;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EmbeddingMap {
    simulated_qubits: usize,
}

impl EmbeddingMap {
    pub fn new(simulated_qubits: usize) -> Result<Self> {
        if simulated_qubits == 0 {
            return Err(Error::InvalidArgument("embedding of zero qubits".into()));
        }
        Ok(EmbeddingMap { simulated_qubits })
    }

    pub fn simulated_qubits(&self) -> usize {
        self.simulated_qubits
    }

    pub fn enlarged_qubits(&self) -> usize {
        self.simulated_qubits + 1
    }

    pub fn simulated_dim(&self) -> usize {
        1 << self.simulated_qubits
    }

    pub fn enlarged_dim(&self) -> usize {
        2 * self.simulated_dim()
    }

    /// Dense `M = (1, i) ⊗ 𝕀_{2^N}`, shape `2^N x 2^(N+1)`.
    pub fn projector_matrix(&self) -> CMatrix {
        let d = self.simulated_dim();
        let mut m = CMatrix::from_element(d, 2 * d, C0);
        for i in 0..d {
            m[(i, i)] = C1;
            m[(i, d + i)] = CI;
        }
        m
    }
}

/// Lifts `ψ` to `(Re ψ, Im ψ)` with the ancilla in front.
pub fn embed_state(psi: &StateVector) -> Result<StateVector> {
    let amps = psi.amplitudes();
    let mut out = Vec::with_capacity(2 * amps.len());
    out.extend(amps.iter().map(|a| Complex64::new(a.re, 0.0)));
    out.extend(amps.iter().map(|a| Complex64::new(a.im, 0.0)));
    StateVector::new(out)
}

/// `M Ψ`, returned without renormalization.
pub fn project(big_psi: &StateVector) -> Vec<Complex64> {
    project_amplitudes(big_psi.amplitudes())
}

pub fn project_amplitudes(amps: &[Complex64]) -> Vec<Complex64> {
    let d = amps.len() / 2;
    (0..d).map(|i| amps[i] + CI * amps[d + i]).collect()
}

/// Applies `σ^z` to the ancilla; on embedded states this realizes complex
/// conjugation of the simulated state.
pub fn conjugation_gate(big_psi: &StateVector) -> StateVector {
    let n = big_psi.qubit_count();
    let d = big_psi.amplitudes().len() / 2;
    let amps = big_psi
        .amplitudes()
        .iter()
        .enumerate()
        .map(|(i, a)| if i >= d { -a } else { *a })
        .collect();
    StateVector::from_raw(amps, n)
}

/// Enlarged-space images `σ^z ⊗ Θ` and `σ^x ⊗ Θ`.
pub fn antilinear_observables(theta: &PauliSum) -> (PauliSum, PauliSum) {
    (theta.prepend(Pauli::Z), theta.prepend(Pauli::X))
}

/// `<ψ|Θ|ψ*> = <Ψ|σ^z⊗Θ|Ψ> − i <Ψ|σ^x⊗Θ|Ψ>`, evaluated on any register
/// (pure or mixed) in the enlarged space.
pub fn antilinear_expectation<S: QuantumState>(big_psi: &S, theta: &PauliSum) -> Result<Complex64> {
    ensure_qubits(big_psi.qubit_count(), theta.qubit_count() + 1)?;
    theta.ensure_hermitian("Θ")?;
    let (z_obs, x_obs) = antilinear_observables(theta);
    let re = big_psi.expectation(&z_obs)?;
    let im = big_psi.expectation(&x_obs)?;
    Ok(Complex64::new(re, -im))
}

/// Brute-force `<ψ|Θ|conj(ψ)>` directly in the simulated space.
pub fn direct_antilinear(psi: &[Complex64], theta: &PauliSum) -> Result<Complex64> {
    let d = 1usize << theta.qubit_count();
    if psi.len() != d {
        return Err(Error::DimensionMismatch {
            expected: theta.qubit_count(),
            found: psi.len().trailing_zeros() as usize,
        });
    }
    let conj: Vec<Complex64> = psi.iter().map(|a| a.conj()).collect();
    let mut total = Complex64::new(0.0, 0.0);
    for (c, s) in theta.terms() {
        let applied = apply_string(s, &conj);
        let overlap: Complex64 = psi.iter().zip(&applied).map(|(a, b)| a.conj() * b).sum();
        total += c * overlap;
    }
    Ok(total)
}

/// `P v` for an unnormalized vector, via the dense matrix of `P`.
fn apply_string(p: &PauliString, v: &[Complex64]) -> Vec<Complex64> {
    let m = p.to_dense();
    let x = nalgebra::DVector::from_column_slice(v);
    (m * x).iter().copied().collect()
}
