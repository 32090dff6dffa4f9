use crate::error::{Error, Result};
use crate::pauli::{PauliString, PauliSum};

/// First-order product formula: `steps` repetitions of
/// `Π_k exp(-i c_k (t/steps) P_k)`, in the sum's canonical term order.
///
/// Returns the flat list of `(P_k, c_k t / steps)` factors.
pub fn trotterize(h: &PauliSum, t: f64, steps: usize) -> Result<Vec<(PauliString, f64)>> {
    if steps == 0 {
        return Err(Error::InvalidArgument(
            "Trotter step count must be positive".into(),
        ));
    }
    if !t.is_finite() {
        return Err(Error::InvalidArgument(format!("time {t} is not finite")));
    }
    h.ensure_hermitian("Hamiltonian")?;
    let dt = t / steps as f64;
    let one_step: Vec<(PauliString, f64)> = h
        .terms()
        .iter()
        .filter(|(c, s)| !s.is_identity() && c.re != 0.0)
        .map(|(c, s)| (s.clone(), c.re * dt))
        .collect();
    Ok((0..steps).flat_map(|_| one_step.iter().cloned()).collect())
}

/// Rigorous first-order bound on `‖U_trotter − exp(-iHt)‖`:
/// `t²/(2 steps) Σ_{j<k} ‖[c_j P_j, c_k P_k]‖`.
pub fn trotter_error_bound(h: &PauliSum, t: f64, steps: usize) -> Result<f64> {
    if steps == 0 {
        return Err(Error::InvalidArgument(
            "Trotter step count must be positive".into(),
        ));
    }
    let terms = h.terms();
    let mut acc = 0.0;
    for (i, (ci, pi)) in terms.iter().enumerate() {
        for (cj, pj) in &terms[i + 1..] {
            if !pi.commutes(pj)? {
                acc += 2.0 * (ci * cj).norm();
            }
        }
    }
    Ok(t * t / (2.0 * steps as f64) * acc)
}
