use std::f64::consts::FRAC_PI_2;

use super::gate::{CountingConfig, Decoupling, GateOp, GateSequence};
use super::trotter::trotterize;
use crate::error::{Error, Result};
use crate::pauli::{Pauli, PauliString, PauliSum};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct CompileOptions {
    pub counting: CountingConfig,
    /// Used whenever an MS gate acts on a strict subset of the register.
    pub decoupling: Decoupling,
}

/// Middle rotation of the MS sandwich for a weight-`k` canonical string.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CentralRotation {
    pub axis: Pauli,
    pub sign: i8,
}

/// `MS(-π/2) R_axis(β) MS(π/2) = exp(-i (β sign/2) Z X…X)` on `k` qubits,
/// where the `Z` sits on the pivot qubit.
///
/// Conjugating by `MS(π/2)` sends `σ^z_pivot` to `±Z X…X` when `k` is odd
/// and `σ^y_pivot` to `±Z X…X` when `k` is even.
pub fn central_rotation(k: usize) -> CentralRotation {
    assert!(k >= 2, "sandwich needs at least two qubits");
    if k % 2 == 1 {
        CentralRotation {
            axis: Pauli::Z,
            sign: if ((k - 1) / 2).is_multiple_of(2) {
                1
            } else {
                -1
            },
        }
    } else {
        CentralRotation {
            axis: Pauli::Y,
            sign: if (k / 2).is_multiple_of(2) { 1 } else { -1 },
        }
    }
}

/// `(qubit, actual axis, canonical axis)`.
pub type BasisFix = (usize, Pauli, Pauli);

/// Pivot qubit and the per-site basis changes `(qubit, actual, canonical)`
/// that bring `p` to `Z` on the pivot and `X` elsewhere on its support.
///
/// The pivot is the first `Z` site if there is one, else the first support
/// site, which keeps the number of basis changes minimal.
pub fn canonical_form(p: &PauliString) -> Option<(usize, Vec<BasisFix>)> {
    let support = p.support();
    let first = *support.first()?;
    let pivot = support
        .iter()
        .copied()
        .find(|&q| p.axis(q) == Pauli::Z)
        .unwrap_or(first);
    let changes = support
        .iter()
        .filter_map(|&q| {
            let want = if q == pivot { Pauli::Z } else { Pauli::X };
            let have = p.axis(q);
            (have != want).then_some((q, have, want))
        })
        .collect();
    Some((pivot, changes))
}

/// Compiles `exp(-i angle P)` for a Hermitian string `P`.
///
/// Weight one becomes a single local rotation. Weight `k ≥ 2` becomes
/// basis changes, `MS(π/2)`, a rotation on the pivot, `MS(-π/2)` and the
/// inverse basis changes. MS gates on a strict subset carry the configured
/// decoupling.
pub fn compile_pauli_exponential(
    p: &PauliString,
    angle: f64,
    options: &CompileOptions,
) -> Result<GateSequence> {
    let n = p.qubit_count();
    let sign = p
        .phase()
        .sign()
        .ok_or_else(|| Error::NotHermitian(format!("generator {p} has an imaginary phase")))?;
    let angle = angle * f64::from(sign);
    let mut seq = GateSequence::new(n, options.counting);
    if angle == 0.0 || p.is_identity() {
        return Ok(seq);
    }
    let support = p.support();
    if support.len() == 1 {
        let q = support[0];
        seq.push(GateOp::rotation(q, p.axis(q), 2.0 * angle)?)?;
        return Ok(seq);
    }
    let (pivot, changes) = canonical_form(p).expect("non-identity string");
    let central = central_rotation(support.len());
    let decoupling = (support.len() < n).then_some(options.decoupling);
    let ms = |theta: f64| -> Result<GateOp> {
        let mut op = GateOp::ms(support.clone(), 0.0, theta)?;
        if let GateOp::Ms { decoupling: d, .. } = &mut op {
            *d = decoupling;
        }
        Ok(op)
    };
    for &(q, have, want) in &changes {
        seq.push(GateOp::basis_change(q, have, want)?)?;
    }
    seq.push(ms(FRAC_PI_2)?)?;
    seq.push(GateOp::rotation(
        pivot,
        central.axis,
        2.0 * angle * f64::from(central.sign),
    )?)?;
    seq.push(ms(-FRAC_PI_2)?)?;
    for &(q, have, want) in &changes {
        seq.push(GateOp::basis_change(q, want, have)?)?;
    }
    Ok(seq)
}

/// Trotterized `exp(-i H t)` compiled term by term.
pub fn compile_evolution(
    h: &PauliSum,
    t: f64,
    steps: usize,
    options: &CompileOptions,
) -> Result<GateSequence> {
    let factors = trotterize(h, t, steps)?;
    let mut seq = GateSequence::new(h.qubit_count(), options.counting);
    for (p, a) in &factors {
        seq.extend(&compile_pauli_exponential(p, *a, options)?)?;
    }
    Ok(seq)
}
