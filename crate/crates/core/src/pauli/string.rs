use std::fmt;

use num_complex::Complex64;

use super::{Pauli, Phase};
use crate::error::{ensure_qubits, Error, Result};
use crate::linalg::{kron, CMatrix, C0, C1, CI};

/// A tensor product of single-site Paulis with an accumulated `i^k` phase.
///
/// The axis list is fixed at construction; products and tensor extensions
/// return new strings.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PauliString {
    axes: Vec<Pauli>,
    phase: Phase,
}

impl PauliString {
    pub fn new(axes: Vec<Pauli>) -> Self {
        PauliString {
            axes,
            phase: Phase::ONE,
        }
    }

    pub fn with_phase(axes: Vec<Pauli>, phase: Phase) -> Self {
        PauliString { axes, phase }
    }

    pub fn identity(n: usize) -> Self {
        Self::new(vec![Pauli::I; n])
    }

    /// `n`-qubit string with the given non-identity sites.
    pub fn from_sites(n: usize, sites: &[(usize, Pauli)]) -> Result<Self> {
        let mut axes = vec![Pauli::I; n];
        for &(q, p) in sites {
            if q >= n {
                return Err(Error::InvalidArgument(format!(
                    "qubit {q} out of range for {n}-qubit string"
                )));
            }
            axes[q] = p;
        }
        Ok(Self::new(axes))
    }

    /// Parses a compact label such as `"YXX"` or `"Y_X_X"`.
    pub fn from_label(label: &str) -> Result<Self> {
        let axes = label
            .chars()
            .filter(|c| *c != '_')
            .map(|c| {
                Pauli::from_char(c).ok_or_else(|| Error::Parse {
                    line: 1,
                    message: format!("unknown Pauli axis '{c}' in '{label}'"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        if axes.is_empty() {
            return Err(Error::Parse {
                line: 1,
                message: "empty Pauli label".into(),
            });
        }
        Ok(Self::new(axes))
    }

    pub fn qubit_count(&self) -> usize {
        self.axes.len()
    }

    pub fn axes(&self) -> &[Pauli] {
        &self.axes
    }

    pub fn axis(&self, q: usize) -> Pauli {
        self.axes[q]
    }

    pub fn phase(&self) -> Phase {
        self.phase
    }

    /// Same axes with phase reset to `+1`.
    pub fn unsigned(&self) -> PauliString {
        Self::new(self.axes.clone())
    }

    pub fn negated(&self) -> PauliString {
        Self::with_phase(self.axes.clone(), self.phase * Phase::MINUS_ONE)
    }

    pub fn is_identity(&self) -> bool {
        self.axes.iter().all(|p| p.is_identity())
    }

    /// Count of non-identity sites.
    pub fn weight(&self) -> usize {
        self.axes.iter().filter(|p| !p.is_identity()).count()
    }

    pub fn support(&self) -> Vec<usize> {
        self.axes
            .iter()
            .enumerate()
            .filter(|(_, p)| !p.is_identity())
            .map(|(q, _)| q)
            .collect()
    }

    pub fn y_count(&self) -> usize {
        self.axes.iter().filter(|&&p| p == Pauli::Y).count()
    }

    /// Hermitian iff the phase is real.
    pub fn is_hermitian(&self) -> bool {
        self.phase.is_real()
    }

    pub fn multiply(&self, other: &PauliString) -> Result<PauliString> {
        ensure_qubits(self.qubit_count(), other.qubit_count())?;
        let mut phase = self.phase * other.phase;
        let axes = self
            .axes
            .iter()
            .zip(&other.axes)
            .map(|(&a, &b)| {
                let (ph, p) = a.product(b);
                phase = phase * ph;
                p
            })
            .collect();
        Ok(PauliString { axes, phase })
    }

    /// True iff the two strings commute: an even number of sites carry
    /// distinct non-identity axes.
    pub fn commutes(&self, other: &PauliString) -> Result<bool> {
        ensure_qubits(self.qubit_count(), other.qubit_count())?;
        let clashes = self
            .axes
            .iter()
            .zip(&other.axes)
            .filter(|(a, b)| a.anticommutes_with(**b))
            .count();
        Ok(clashes % 2 == 0)
    }

    /// `p ⊗ self`, with `p` becoming qubit 0.
    pub fn prepend(&self, p: Pauli) -> PauliString {
        let mut axes = Vec::with_capacity(self.axes.len() + 1);
        axes.push(p);
        axes.extend_from_slice(&self.axes);
        PauliString {
            axes,
            phase: self.phase,
        }
    }

    /// Bit masks for kernel application on a `2^n` basis where qubit `q`
    /// is bit `n - 1 - q` of the basis index.
    ///
    /// Returns `(flip, sign, y_count)`: `P|b> = phase * i^y_count *
    /// (-1)^popcount(b & sign) |b ^ flip>`.
    pub fn masks(&self) -> (u64, u64, u32) {
        let n = self.axes.len();
        let mut flip = 0u64;
        let mut sign = 0u64;
        let mut ys = 0u32;
        for (q, p) in self.axes.iter().enumerate() {
            let bit = 1u64 << (n - 1 - q);
            match p {
                Pauli::I => {}
                Pauli::X => flip |= bit,
                Pauli::Y => {
                    flip |= bit;
                    sign |= bit;
                    ys += 1;
                }
                Pauli::Z => sign |= bit,
            }
        }
        (flip, sign, ys)
    }

    /// Dense matrix by explicit Kronecker products, including the phase.
    pub fn to_dense(&self) -> CMatrix {
        let mut out = CMatrix::from_element(1, 1, self.phase.to_complex());
        for &p in &self.axes {
            out = kron(&out, &single_site_matrix(p));
        }
        out
    }
}

pub(crate) fn single_site_matrix(p: Pauli) -> CMatrix {
    let m = |a: Complex64, b: Complex64, c: Complex64, d: Complex64| {
        CMatrix::from_row_slice(2, 2, &[a, b, c, d])
    };
    match p {
        Pauli::I => m(C1, C0, C0, C1),
        Pauli::X => m(C0, C1, C1, C0),
        Pauli::Y => m(C0, -CI, CI, C0),
        Pauli::Z => m(C1, C0, C0, -C1),
    }
}

impl fmt::Display for PauliString {
    /// `Y_X_X`, prefixed by the phase when it is not `+1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.phase != Phase::ONE {
            write!(f, "{}", self.phase)?;
        }
        for (q, p) in self.axes.iter().enumerate() {
            if q > 0 {
                f.write_str("_")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(label: &str) -> PauliString {
        PauliString::from_label(label).unwrap()
    }

    #[test]
    fn x_times_y_is_i_z() {
        let r = s("X").multiply(&s("Y")).unwrap();
        assert_eq!(r, PauliString::with_phase(vec![Pauli::Z], Phase::I));
    }

    #[test]
    fn x_squared_is_identity() {
        let r = s("X").multiply(&s("X")).unwrap();
        assert_eq!(r, PauliString::identity(1));
    }

    #[test]
    fn xx_times_yy_is_minus_zz() {
        let r = s("XX").multiply(&s("YY")).unwrap();
        assert_eq!(
            r,
            PauliString::with_phase(vec![Pauli::Z, Pauli::Z], Phase::MINUS_ONE)
        );
        let dense = s("XX").to_dense() * s("YY").to_dense();
        assert!(crate::linalg::max_abs(&(dense - r.to_dense())) == 0.0);
    }

    #[test]
    fn commutation_examples() {
        assert!(!s("X").commutes(&s("Y")).unwrap());
        assert!(s("XX").commutes(&s("YY")).unwrap());
        assert!(!s("XYY").commutes(&s("ZIY")).unwrap());
    }

    #[test]
    fn mismatched_lengths_error() {
        assert!(matches!(
            s("XX").multiply(&s("X")),
            Err(Error::DimensionMismatch {
                expected: 2,
                found: 1
            })
        ));
        assert!(s("XX").commutes(&s("XXX")).is_err());
    }

    #[test]
    fn masks_follow_big_endian_qubit_order() {
        let (flip, sign, ys) = s("YIZ").masks();
        assert_eq!(flip, 0b100);
        assert_eq!(sign, 0b101);
        assert_eq!(ys, 1);
    }

    #[test]
    fn display_uses_underscores() {
        assert_eq!(s("YXX").to_string(), "Y_X_X");
        assert_eq!(s("Z").negated().to_string(), "-Z");
    }
}
