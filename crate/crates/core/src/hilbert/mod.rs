//! Dense numerical engine: state vectors, density matrices, Pauli
//! exponentials, exact evolution and finite-shot sampling.

mod density;
mod exact;
mod sampling;
mod state;

pub use density::DensityMatrix;
pub use exact::{evolve_exact, exact_propagator};
pub use sampling::{sample_observable, sample_observable_with, Estimate, Shots, RNG_ALGORITHM};
pub use state::StateVector;

use num_complex::Complex64;

use crate::error::{ensure_qubits, Error, Result};
use crate::pauli::{PauliString, PauliSum};

pub const MAX_STATE_QUBITS: usize = 20;
pub const MAX_DENSITY_QUBITS: usize = 10;

/// Operations shared by pure and mixed registers.
pub trait QuantumState: Clone + Send + Sync {
    fn qubit_count(&self) -> usize;

    /// Applies `exp(-i angle P)` for a Hermitian string `P`.
    fn apply_pauli_exponential(&mut self, p: &PauliString, angle: f64) -> Result<()>;

    /// Multiplies by a global phase; a no-op on density matrices.
    fn apply_global_phase(&mut self, phase: Complex64);

    /// `<P>` including the string's own phase. Complex in general.
    fn pauli_expectation(&self, p: &PauliString) -> Result<Complex64>;

    /// `rho -> epsilon rho + (1 - epsilon) I / 2^n`.
    fn depolarize(&mut self, epsilon: f64) -> Result<()>;

    /// Real expectation of a Hermitian Pauli sum.
    fn expectation(&self, obs: &PauliSum) -> Result<f64> {
        obs.ensure_hermitian("observable")?;
        let z = self.complex_expectation(obs)?;
        let scale: f64 = 1.0 + obs.terms().iter().map(|(c, _)| c.norm()).sum::<f64>();
        if z.im.abs() > 1e-10 * scale {
            return Err(Error::NotHermitian(format!(
                "expectation has imaginary residue {:e}",
                z.im
            )));
        }
        Ok(z.re)
    }

    /// `sum_k c_k <P_k>` without any Hermiticity requirement.
    fn complex_expectation(&self, obs: &PauliSum) -> Result<Complex64> {
        ensure_qubits(self.qubit_count(), obs.qubit_count())?;
        obs.terms()
            .iter()
            .try_fold(Complex64::new(0.0, 0.0), |acc, (c, s)| {
                Ok(acc + c * self.pauli_expectation(s)?)
            })
    }
}

/// Per-basis-state action of a Pauli string: `P|b> = factor(b) |b ^ flip>`.
#[derive(Clone, Copy)]
pub(crate) struct PauliAction {
    pub flip: usize,
    sign: usize,
    base: Complex64,
}

impl PauliAction {
    pub fn new(p: &PauliString) -> Self {
        let (flip, sign, ys) = p.masks();
        let base = p.phase().to_complex() * crate::pauli::Phase::from_exponent(ys).to_complex();
        PauliAction {
            flip: flip as usize,
            sign: sign as usize,
            base,
        }
    }

    #[inline]
    pub fn factor(&self, b: usize) -> Complex64 {
        if (b & self.sign).count_ones().is_multiple_of(2) {
            self.base
        } else {
            -self.base
        }
    }
}

pub(crate) fn require_hermitian_string(p: &PauliString) -> Result<()> {
    if p.is_hermitian() {
        Ok(())
    } else {
        Err(Error::NotHermitian(format!(
            "generator {p} has an imaginary phase"
        )))
    }
}

pub(crate) fn check_capacity(what: &'static str, limit: usize, requested: usize) -> Result<()> {
    if requested > limit {
        Err(Error::Capacity {
            what,
            limit,
            requested,
        })
    } else {
        Ok(())
    }
}
