//! Seeded random instances for property checks.

use num_complex::Complex64;
use rand::Rng;

use crate::error::Result;
use crate::hilbert::StateVector;
use crate::pauli::{Pauli, PauliString, PauliSum};

/// Haar-like pure state from normalized Gaussian amplitudes.
pub fn state<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<StateVector> {
    let amps = (0..1usize << n)
        .map(|_| Complex64::new(gaussian(rng), gaussian(rng)))
        .collect();
    StateVector::normalized(amps)
}

/// Box-Muller standard normal.
pub fn gaussian<R: Rng + ?Sized>(rng: &mut R) -> f64 {
    let u: f64 = 1.0 - rng.random::<f64>();
    let v: f64 = rng.random::<f64>();
    (-2.0 * u.ln()).sqrt() * (2.0 * std::f64::consts::PI * v).cos()
}

pub fn pauli<R: Rng + ?Sized>(rng: &mut R) -> Pauli {
    Pauli::ALL[rng.random_range(0..4)]
}

pub fn pauli_string<R: Rng + ?Sized>(n: usize, rng: &mut R) -> PauliString {
    PauliString::new((0..n).map(|_| pauli(rng)).collect())
}

/// Non-identity string.
pub fn nontrivial_string<R: Rng + ?Sized>(n: usize, rng: &mut R) -> PauliString {
    loop {
        let p = pauli_string(n, rng);
        if !p.is_identity() {
            return p;
        }
    }
}

/// Hermitian sum of `terms` strings with coefficients in `[-1, 1)`.
pub fn hermitian_sum<R: Rng + ?Sized>(n: usize, terms: usize, rng: &mut R) -> Result<PauliSum> {
    let list: Vec<(Complex64, PauliString)> = (0..terms)
        .map(|_| {
            (
                Complex64::new(rng.random_range(-1.0..1.0), 0.0),
                pauli_string(n, rng),
            )
        })
        .collect();
    PauliSum::from_terms(n, list)
}

/// Every string on `n` qubits, identity first.
pub fn all_strings(n: usize) -> Vec<PauliString> {
    (0..4usize.pow(n as u32))
        .map(|mut code| {
            let mut axes = vec![Pauli::I; n];
            for q in (0..n).rev() {
                axes[q] = Pauli::ALL[code % 4];
                code /= 4;
            }
            PauliString::new(axes)
        })
        .collect()
}
