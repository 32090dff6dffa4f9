use num_complex::Complex64;

use super::{
    check_capacity, require_hermitian_string, PauliAction, QuantumState, StateVector,
    MAX_DENSITY_QUBITS,
};
use crate::error::{ensure_qubits, Error, Result};
use crate::linalg::{hermiticity_residual, min_eigenvalue, CMatrix};
use crate::pauli::PauliString;

/// A mixed state stored as a dense row-major `2^n x 2^n` matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct DensityMatrix {
    entries: Vec<Complex64>,
    qubit_count: usize,
}

impl DensityMatrix {
    /// Validates Hermiticity, unit trace and positivity.
    pub fn new(entries: CMatrix) -> Result<Self> {
        let (rows, cols) = entries.shape();
        if rows != cols || rows < 2 || !rows.is_power_of_two() {
            return Err(Error::InvalidArgument(format!(
                "density matrix shape {rows}x{cols} is not a square power of two"
            )));
        }
        let n = rows.trailing_zeros() as usize;
        check_capacity("density matrix", MAX_DENSITY_QUBITS, n)?;
        if hermiticity_residual(&entries) > 1e-10 {
            return Err(Error::NotHermitian("density matrix".into()));
        }
        let tr = entries.trace();
        if (tr.re - 1.0).abs() > 1e-10 || tr.im.abs() > 1e-10 {
            return Err(Error::InvalidArgument(format!("trace {tr} is not 1")));
        }
        let lowest = min_eigenvalue(&entries);
        if lowest < -1e-8 {
            return Err(Error::InvalidArgument(format!(
                "negative eigenvalue {lowest:e}"
            )));
        }
        let entries = (0..rows)
            .flat_map(|r| (0..rows).map(move |c| (r, c)))
            .map(|(r, c)| entries[(r, c)])
            .collect();
        Ok(DensityMatrix {
            entries,
            qubit_count: n,
        })
    }

    pub fn from_pure(psi: &StateVector) -> Result<Self> {
        let n = psi.qubit_count();
        check_capacity("density matrix", MAX_DENSITY_QUBITS, n)?;
        let a = psi.amplitudes();
        let entries = a
            .iter()
            .flat_map(|x| a.iter().map(move |y| x * y.conj()))
            .collect();
        Ok(DensityMatrix {
            entries,
            qubit_count: n,
        })
    }

    pub fn maximally_mixed(n: usize) -> Result<Self> {
        check_capacity("density matrix", MAX_DENSITY_QUBITS, n)?;
        let dim = 1usize << n;
        let mut entries = vec![Complex64::new(0.0, 0.0); dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = Complex64::new(1.0 / dim as f64, 0.0);
        }
        Ok(DensityMatrix {
            entries,
            qubit_count: n,
        })
    }

    pub fn dim(&self) -> usize {
        1 << self.qubit_count
    }

    pub fn entry(&self, row: usize, col: usize) -> Complex64 {
        self.entries[row * self.dim() + col]
    }

    pub fn trace(&self) -> Complex64 {
        let d = self.dim();
        (0..d).map(|i| self.entries[i * d + i]).sum()
    }

    /// `Tr(rho^2)`.
    pub fn purity(&self) -> f64 {
        let d = self.dim();
        let mut acc = 0.0;
        for r in 0..d {
            for c in 0..d {
                acc += (self.entries[r * d + c] * self.entries[c * d + r]).re;
            }
        }
        acc
    }

    pub fn to_dense(&self) -> CMatrix {
        let d = self.dim();
        CMatrix::from_row_slice(d, d, &self.entries)
    }

    /// Largest deviation from Hermiticity, unit trace, and the most negative
    /// eigenvalue, for channel sanity checks.
    pub fn validity_residuals(&self) -> (f64, f64, f64) {
        let dense = self.to_dense();
        (
            hermiticity_residual(&dense),
            (self.trace() - Complex64::new(1.0, 0.0)).norm(),
            min_eigenvalue(&dense),
        )
    }
}

impl QuantumState for DensityMatrix {
    fn qubit_count(&self) -> usize {
        self.qubit_count
    }

    /// `U rho U†` with `U = cos(angle) - i sin(angle) P`, expanded as
    /// `c² rho + i c s (rho P - P rho) + s² P rho P`.
    fn apply_pauli_exponential(&mut self, p: &PauliString, angle: f64) -> Result<()> {
        ensure_qubits(self.qubit_count, p.qubit_count())?;
        require_hermitian_string(p)?;
        if angle == 0.0 {
            return Ok(());
        }
        let (s, c) = angle.sin_cos();
        let act = PauliAction::new(p);
        let d = self.dim();
        let f = act.flip;
        let rho = &self.entries;
        let ics = Complex64::new(0.0, c * s);
        let mut out = vec![Complex64::new(0.0, 0.0); d * d];
        for r in 0..d {
            let kr = act.factor(r ^ f);
            for col in 0..d {
                let kc = act.factor(col);
                let rho_p = rho[r * d + (col ^ f)] * kc;
                let p_rho = kr * rho[(r ^ f) * d + col];
                let p_rho_p = kr * rho[(r ^ f) * d + (col ^ f)] * kc;
                out[r * d + col] =
                    rho[r * d + col] * (c * c) + ics * (rho_p - p_rho) + p_rho_p * (s * s);
            }
        }
        self.entries = out;
        Ok(())
    }

    fn apply_global_phase(&mut self, _phase: Complex64) {}

    fn pauli_expectation(&self, p: &PauliString) -> Result<Complex64> {
        ensure_qubits(self.qubit_count, p.qubit_count())?;
        let act = PauliAction::new(p);
        let d = self.dim();
        Ok((0..d)
            .map(|col| self.entries[col * d + (col ^ act.flip)] * act.factor(col))
            .sum())
    }

    fn depolarize(&mut self, epsilon: f64) -> Result<()> {
        if !(0.0..=1.0).contains(&epsilon) {
            return Err(Error::InvalidArgument(format!(
                "depolarizing fidelity {epsilon} outside [0, 1]"
            )));
        }
        if epsilon == 1.0 {
            return Ok(());
        }
        let d = self.dim();
        let mix = (1.0 - epsilon) / d as f64;
        self.entries.iter_mut().for_each(|z| *z *= epsilon);
        for i in 0..d {
            self.entries[i * d + i] += mix;
        }
        Ok(())
    }
}
