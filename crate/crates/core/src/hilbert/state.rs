use std::fmt::Write as _;

use num_complex::Complex64;

use super::{
    check_capacity, require_hermitian_string, PauliAction, QuantumState, MAX_STATE_QUBITS,
};
use crate::error::{ensure_qubits, Error, Result};
use crate::pauli::PauliString;

const NORM_TOL: f64 = 1e-10;

/// A normalized pure state on `n` qubits; qubit 0 is the most significant
/// bit of the basis index.
#[derive(Clone, Debug, PartialEq)]
pub struct StateVector {
    amplitudes: Vec<Complex64>,
    qubit_count: usize,
}

impl StateVector {
    pub fn new(amplitudes: Vec<Complex64>) -> Result<Self> {
        let len = amplitudes.len();
        if len < 2 || !len.is_power_of_two() {
            return Err(Error::InvalidArgument(format!(
                "state length {len} is not a power of two >= 2"
            )));
        }
        let n = len.trailing_zeros() as usize;
        check_capacity("state vector", MAX_STATE_QUBITS, n)?;
        let norm = amplitudes.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
        if (norm - 1.0).abs() > NORM_TOL {
            return Err(Error::NotNormalized(norm));
        }
        Ok(StateVector {
            amplitudes,
            qubit_count: n,
        })
    }

    /// Normalizes an arbitrary nonzero vector.
    pub fn normalized(mut amplitudes: Vec<Complex64>) -> Result<Self> {
        let norm = amplitudes.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
        if norm == 0.0 {
            return Err(Error::NotNormalized(0.0));
        }
        amplitudes.iter_mut().for_each(|a| *a /= norm);
        Self::new(amplitudes)
    }

    pub fn basis(n: usize, index: usize) -> Result<Self> {
        check_capacity("state vector", MAX_STATE_QUBITS, n)?;
        if n == 0 || index >= 1 << n {
            return Err(Error::InvalidArgument(format!(
                "basis index {index} out of range for {n} qubits"
            )));
        }
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); 1 << n];
        amplitudes[index] = Complex64::new(1.0, 0.0);
        Ok(StateVector {
            amplitudes,
            qubit_count: n,
        })
    }

    /// Basis state from a bit label such as `"010"` (qubit 0 first).
    pub fn from_bits(bits: &str) -> Result<Self> {
        let n = bits.len();
        let index = bits.chars().try_fold(0usize, |acc, c| match c {
            '0' => Ok(acc << 1),
            '1' => Ok((acc << 1) | 1),
            _ => Err(Error::InvalidArgument(format!("bad bit '{c}' in '{bits}'"))),
        })?;
        Self::basis(n, index)
    }

    pub fn qubit_count(&self) -> usize {
        self.qubit_count
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn into_amplitudes(self) -> Vec<Complex64> {
        self.amplitudes
    }

    pub fn norm(&self) -> f64 {
        self.amplitudes
            .iter()
            .map(|a| a.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// `<self|other>`.
    pub fn inner(&self, other: &StateVector) -> Result<Complex64> {
        ensure_qubits(self.qubit_count, other.qubit_count)?;
        Ok(self
            .amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    /// Euclidean distance between amplitude vectors.
    pub fn distance(&self, other: &StateVector) -> Result<f64> {
        ensure_qubits(self.qubit_count, other.qubit_count)?;
        Ok(self
            .amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| (a - b).norm_sqr())
            .sum::<f64>()
            .sqrt())
    }

    pub fn fidelity(&self, other: &StateVector) -> Result<f64> {
        Ok(self.inner(other)?.norm_sqr())
    }

    /// Tensor product `self ⊗ other`.
    pub fn tensor(&self, other: &StateVector) -> Result<StateVector> {
        let mut amps = Vec::with_capacity(self.amplitudes.len() * other.amplitudes.len());
        for a in &self.amplitudes {
            for b in &other.amplitudes {
                amps.push(a * b);
            }
        }
        StateVector::new(amps)
    }

    /// Debug dump: one `index,re,im` row per amplitude.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("index,re,im\n");
        for (i, a) in self.amplitudes.iter().enumerate() {
            let _ = writeln!(out, "{i},{:.16e},{:.16e}", a.re, a.im);
        }
        out
    }

    pub(crate) fn from_raw(amplitudes: Vec<Complex64>, qubit_count: usize) -> Self {
        StateVector {
            amplitudes,
            qubit_count,
        }
    }
}

impl QuantumState for StateVector {
    fn qubit_count(&self) -> usize {
        self.qubit_count
    }

    fn apply_pauli_exponential(&mut self, p: &PauliString, angle: f64) -> Result<()> {
        ensure_qubits(self.qubit_count, p.qubit_count())?;
        require_hermitian_string(p)?;
        if angle == 0.0 {
            return Ok(());
        }
        let (s, c) = angle.sin_cos();
        let mis = Complex64::new(0.0, -s);
        let act = PauliAction::new(p);
        let amps = &mut self.amplitudes;
        if act.flip == 0 {
            for (b, a) in amps.iter_mut().enumerate() {
                *a = *a * c + mis * act.factor(b) * *a;
            }
        } else {
            let top = 1usize << (usize::BITS - 1 - act.flip.leading_zeros());
            for b in 0..amps.len() {
                if b & top != 0 {
                    continue;
                }
                let b2 = b ^ act.flip;
                let (x, y) = (amps[b], amps[b2]);
                amps[b] = x * c + mis * act.factor(b2) * y;
                amps[b2] = y * c + mis * act.factor(b) * x;
            }
        }
        debug_assert!((self.norm() - 1.0).abs() < NORM_TOL, "norm drift");
        Ok(())
    }

    fn apply_global_phase(&mut self, phase: Complex64) {
        self.amplitudes.iter_mut().for_each(|a| *a *= phase);
    }

    fn pauli_expectation(&self, p: &PauliString) -> Result<Complex64> {
        ensure_qubits(self.qubit_count, p.qubit_count())?;
        let act = PauliAction::new(p);
        let amps = &self.amplitudes;
        Ok((0..amps.len())
            .map(|b| amps[b ^ act.flip].conj() * act.factor(b) * amps[b])
            .sum())
    }

    fn depolarize(&mut self, epsilon: f64) -> Result<()> {
        if epsilon == 1.0 {
            Ok(())
        } else {
            Err(Error::RequiresDensityMatrix)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, FRAC_PI_4};

    fn s(l: &str) -> PauliString {
        PauliString::from_label(l).unwrap()
    }

    #[test]
    fn zero_angle_is_identity() {
        let mut psi =
            StateVector::normalized(vec![Complex64::new(0.3, 0.1), Complex64::new(-0.2, 0.9)])
                .unwrap();
        let before = psi.clone();
        psi.apply_pauli_exponential(&s("Y"), 0.0).unwrap();
        assert_eq!(psi, before);
    }

    #[test]
    fn pi_half_x_flips_with_minus_i() {
        let mut psi = StateVector::from_bits("0").unwrap();
        psi.apply_pauli_exponential(&s("X"), FRAC_PI_2).unwrap();
        assert!(psi.amplitudes()[0].norm() < 1e-16);
        assert!((psi.amplitudes()[1] - Complex64::new(0.0, -1.0)).norm() < 1e-15);
    }

    #[test]
    fn yyy_quarter_turn_makes_ghz_like_state() {
        let mut psi = StateVector::from_bits("000").unwrap();
        psi.apply_pauli_exponential(&s("YYY"), FRAC_PI_4).unwrap();
        let a = psi.amplitudes();
        assert!((a[0] - Complex64::new(FRAC_1_SQRT_2, 0.0)).norm() < 1e-15);
        assert!((a[7] - Complex64::new(-FRAC_1_SQRT_2, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn expectation_examples() {
        let zero = StateVector::from_bits("0").unwrap();
        assert_eq!(
            zero.pauli_expectation(&s("Z")).unwrap(),
            Complex64::new(1.0, 0.0)
        );
        let ghz = StateVector::normalized({
            let mut v = vec![Complex64::new(0.0, 0.0); 8];
            v[0] = Complex64::new(1.0, 0.0);
            v[7] = Complex64::new(1.0, 0.0);
            v
        })
        .unwrap();
        let xxx = crate::pauli::PauliSum::from_string(s("XXX"));
        assert!((ghz.expectation(&xxx).unwrap() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn rejects_non_hermitian_generator() {
        let mut psi = StateVector::from_bits("0").unwrap();
        let p = PauliString::with_phase(vec![crate::pauli::Pauli::X], crate::pauli::Phase::I);
        assert!(psi.apply_pauli_exponential(&p, 0.2).is_err());
    }

    #[test]
    fn capacity_and_normalization_errors() {
        assert!(matches!(
            StateVector::basis(21, 0),
            Err(Error::Capacity { limit: 20, .. })
        ));
        assert!(matches!(
            StateVector::new(vec![Complex64::new(1.0, 0.0); 2]),
            Err(Error::NotNormalized(_))
        ));
    }

    #[test]
    fn csv_dump_has_one_row_per_amplitude() {
        let psi = StateVector::from_bits("10").unwrap();
        let csv = psi.to_csv();
        assert_eq!(csv.lines().count(), 5);
        assert!(csv
            .lines()
            .nth(3)
            .unwrap()
            .starts_with("2,1.0000000000000000e0"));
    }
}
