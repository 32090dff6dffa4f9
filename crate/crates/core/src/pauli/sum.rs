use std::collections::BTreeMap;

use num_complex::Complex64;

use super::{Pauli, PauliString, Phase};
use crate::error::{ensure_qubits, Error, Result};
use crate::linalg::{hermiticity_residual, max_abs, CMatrix, C0, CI};

/// Coefficients at or below this modulus are dropped on canonicalization.
pub const COEFF_DROP_TOL: f64 = 1e-15;

/// Registers up to this size are checked for Hermiticity against the dense
/// matrix; larger ones use the symbolic criterion.
const DENSE_HERMITIAN_CHECK_QUBITS: usize = 8;

/// A linear combination of Pauli strings on a fixed register.
///
/// Terms are canonical: every string carries phase `+1` (phases are folded
/// into the coefficient), strings are unique and sorted lexicographically
/// by axes, and near-zero coefficients are dropped.
#[derive(Clone, Debug, PartialEq)]
pub struct PauliSum {
    qubit_count: usize,
    terms: Vec<(Complex64, PauliString)>,
}

impl PauliSum {
    pub fn zero(qubit_count: usize) -> Self {
        PauliSum {
            qubit_count,
            terms: Vec::new(),
        }
    }

    pub fn from_terms<I>(qubit_count: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Complex64, PauliString)>,
    {
        if qubit_count == 0 {
            return Err(Error::InvalidArgument("Pauli sum on zero qubits".into()));
        }
        let mut merged: BTreeMap<Vec<Pauli>, Complex64> = BTreeMap::new();
        for (c, s) in terms {
            ensure_qubits(qubit_count, s.qubit_count())?;
            let c = c * s.phase().to_complex();
            *merged.entry(s.axes().to_vec()).or_insert(C0) += c;
        }
        let terms = merged
            .into_iter()
            .filter(|(_, c)| c.norm() > COEFF_DROP_TOL)
            .map(|(axes, c)| (c, PauliString::new(axes)))
            .collect();
        Ok(PauliSum { qubit_count, terms })
    }

    /// Real-coefficient convenience constructor from `(coefficient, label)`.
    pub fn from_real_labels(terms: &[(f64, &str)]) -> Result<Self> {
        let parsed = terms
            .iter()
            .map(|&(c, l)| Ok((Complex64::new(c, 0.0), PauliString::from_label(l)?)))
            .collect::<Result<Vec<_>>>()?;
        let n = parsed
            .first()
            .map(|(_, s)| s.qubit_count())
            .ok_or_else(|| Error::InvalidArgument("empty term list".into()))?;
        Self::from_terms(n, parsed)
    }

    pub fn from_string(s: PauliString) -> Self {
        let n = s.qubit_count();
        Self::from_terms(n, [(Complex64::new(1.0, 0.0), s)]).expect("consistent sizes")
    }

    pub fn qubit_count(&self) -> usize {
        self.qubit_count
    }

    pub fn terms(&self) -> &[(Complex64, PauliString)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, factor: Complex64) -> PauliSum {
        Self::from_terms(
            self.qubit_count,
            self.terms.iter().map(|(c, s)| (c * factor, s.clone())),
        )
        .expect("same register")
    }

    pub fn add(&self, other: &PauliSum) -> Result<PauliSum> {
        ensure_qubits(self.qubit_count, other.qubit_count)?;
        Self::from_terms(
            self.qubit_count,
            self.terms.iter().chain(&other.terms).cloned(),
        )
    }

    /// `p ⊗ self`, with `p` as the new qubit 0.
    pub fn prepend(&self, p: Pauli) -> PauliSum {
        PauliSum {
            qubit_count: self.qubit_count + 1,
            terms: self.terms.iter().map(|(c, s)| (*c, s.prepend(p))).collect(),
        }
        .recanonicalized()
    }

    fn recanonicalized(self) -> PauliSum {
        let n = self.qubit_count;
        Self::from_terms(n, self.terms).expect("same register")
    }

    pub fn to_dense(&self) -> CMatrix {
        let dim = 1usize << self.qubit_count;
        let mut out = CMatrix::zeros(dim, dim);
        for (c, s) in &self.terms {
            out += s.to_dense() * *c;
        }
        out
    }

    /// Hermiticity: dense check on small registers, real coefficients
    /// otherwise (the two agree because phase-free strings are Hermitian
    /// and linearly independent).
    pub fn is_hermitian(&self) -> bool {
        if self.qubit_count <= DENSE_HERMITIAN_CHECK_QUBITS {
            let dense = self.to_dense();
            let scale = max_abs(&dense).max(1.0);
            hermiticity_residual(&dense) <= 1e-12 * scale
        } else {
            self.has_real_coefficients()
        }
    }

    pub fn has_real_coefficients(&self) -> bool {
        self.terms
            .iter()
            .all(|(c, _)| c.im.abs() <= 1e-12 * c.norm().max(1.0))
    }

    pub(crate) fn ensure_hermitian(&self, what: &str) -> Result<()> {
        if self.is_hermitian() {
            Ok(())
        } else {
            Err(Error::NotHermitian(what.to_string()))
        }
    }
}

/// Splits Hermitian `h` into `A + iB` with both dense matrices entrywise real.
///
/// A phase-free string is `i^(#Y)` times a real matrix, so each term lands in
/// `A` (even `Y` count) or contributes `coefficient / i` to `B` (odd count).
pub fn split_real_imag(h: &PauliSum) -> Result<(PauliSum, PauliSum)> {
    h.ensure_hermitian("split_real_imag input")?;
    let n = h.qubit_count();
    let mut real_part = Vec::new();
    let mut imag_part = Vec::new();
    for (c, s) in h.terms() {
        let phase = Phase::from_exponent(s.y_count() as u32).to_complex();
        let w = c * phase;
        let back = phase.conj();
        if w.re != 0.0 {
            real_part.push((back * w.re, s.clone()));
        }
        if w.im != 0.0 {
            imag_part.push((back * w.im, s.clone()));
        }
    }
    Ok((
        PauliSum::from_terms(n, real_part)?,
        PauliSum::from_terms(n, imag_part)?,
    ))
}

/// Enlarged-space Hamiltonian `i 𝕀₂⊗B − σ^y⊗A` on `n + 1` qubits, ancilla at
/// qubit 0. Preserves the term count.
pub fn embed_hamiltonian(h: &PauliSum) -> Result<PauliSum> {
    let (a, b) = split_real_imag(h)?;
    let n = h.qubit_count() + 1;
    let from_b = b.terms().iter().map(|(c, s)| (c * CI, s.prepend(Pauli::I)));
    let from_a = a.terms().iter().map(|(c, s)| (-c, s.prepend(Pauli::Y)));
    PauliSum::from_terms(n, from_b.chain(from_a))
}
