use num_complex::Complex64;

use super::{check_capacity, StateVector};
use crate::error::{ensure_qubits, Result};
use crate::linalg::{hermitian_expm, CMatrix, MAX_DENSE_QUBITS};
use crate::pauli::PauliSum;

/// Dense `exp(-i H t)`.
pub fn exact_propagator(h: &PauliSum, t: f64) -> Result<CMatrix> {
    check_capacity("dense propagator", MAX_DENSE_QUBITS, h.qubit_count())?;
    h.ensure_hermitian("Hamiltonian")?;
    hermitian_expm(&h.to_dense(), t)
}

/// `exp(-i H t) |state>` by Hermitian eigendecomposition.
pub fn evolve_exact(state: &StateVector, h: &PauliSum, t: f64) -> Result<StateVector> {
    ensure_qubits(state.qubit_count(), h.qubit_count())?;
    if t == 0.0 {
        h.ensure_hermitian("Hamiltonian")?;
        return Ok(state.clone());
    }
    let u = exact_propagator(h, t)?;
    let v = nalgebra::DVector::from_column_slice(state.amplitudes());
    let out: Vec<Complex64> = (u * v).iter().copied().collect();
    Ok(StateVector::from_raw(out, state.qubit_count()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_1_SQRT_2, PI};

    #[test]
    fn zero_time_is_identity() {
        let psi = StateVector::from_bits("01").unwrap();
        let h = PauliSum::from_real_labels(&[(1.0, "XY")]).unwrap();
        assert_eq!(evolve_exact(&psi, &h, 0.0).unwrap(), psi);
    }

    #[test]
    fn z_rotation_of_plus_state() {
        let omega = 1.7;
        let plus = StateVector::normalized(vec![Complex64::new(1.0, 0.0); 2]).unwrap();
        let h = PauliSum::from_real_labels(&[(omega, "Z")]).unwrap();
        let out = evolve_exact(&plus, &h, PI / (2.0 * omega)).unwrap();
        let a = out.amplitudes();
        assert!((a[0] - Complex64::new(0.0, -FRAC_1_SQRT_2)).norm() < 1e-12);
        assert!((a[1] - Complex64::new(0.0, FRAC_1_SQRT_2)).norm() < 1e-12);
        assert!((out.norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn non_hermitian_is_rejected() {
        let psi = StateVector::from_bits("0").unwrap();
        let h = PauliSum::from_real_labels(&[(1.0, "X")])
            .unwrap()
            .scale(Complex64::new(0.0, 1.0));
        assert!(evolve_exact(&psi, &h, 1.0).is_err());
    }
}
