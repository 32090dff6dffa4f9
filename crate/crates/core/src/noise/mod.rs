//! Gate-level noise: a global depolarizing channel after every gate,
//! nearest-neighbour crosstalk on single-ion rotations, the matching
//! mitigation estimator, and repetition-cost formulas.

mod cost;

pub use cost::{
    cost_ratio, repetitions_embedding, repetitions_tomography, tomography_observable_count,
    CostInputs,
};

use crate::compiler::{GateOp, GateSequence};
use crate::error::{Error, Result};
use crate::hilbert::QuantumState;
use crate::pauli::{Pauli, PauliString};

/// Smallest `ε^n` the mitigation estimator will divide by.
pub const MITIGATION_FLOOR: f64 = 1e-300;

/// Immutable noise configuration.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NoiseModel {
    epsilon: f64,
    delta0: f64,
    depolarizing_enabled: bool,
    crosstalk_enabled: bool,
}

impl Default for NoiseModel {
    fn default() -> Self {
        Self::ideal()
    }
}

impl NoiseModel {
    pub fn ideal() -> Self {
        NoiseModel {
            epsilon: 1.0,
            delta0: 0.0,
            depolarizing_enabled: false,
            crosstalk_enabled: false,
        }
    }

    /// Both channels enabled; either may still be trivial (`ε = 1`, `Δ₀ = 0`).
    pub fn new(epsilon: f64, delta0: f64) -> Result<Self> {
        if !(epsilon > 0.0 && epsilon <= 1.0) {
            return Err(Error::InvalidArgument(format!(
                "gate fidelity {epsilon} outside (0, 1]"
            )));
        }
        if !(0.0..=0.5).contains(&delta0) {
            return Err(Error::InvalidArgument(format!(
                "crosstalk strength {delta0} outside [0, 0.5]"
            )));
        }
        Ok(NoiseModel {
            epsilon,
            delta0,
            depolarizing_enabled: epsilon < 1.0,
            crosstalk_enabled: delta0 > 0.0,
        })
    }

    pub fn depolarizing(epsilon: f64) -> Result<Self> {
        Self::new(epsilon, 0.0)
    }

    pub fn crosstalk(delta0: f64) -> Result<Self> {
        Self::new(1.0, delta0)
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    pub fn delta0(&self) -> f64 {
        self.delta0
    }

    pub fn depolarizing_enabled(&self) -> bool {
        self.depolarizing_enabled
    }

    pub fn crosstalk_enabled(&self) -> bool {
        self.crosstalk_enabled
    }

    pub fn is_ideal(&self) -> bool {
        !self.depolarizing_enabled && !self.crosstalk_enabled
    }
}

/// Crosstalk matrix `Δ_{k,j} = δ_{k,j} + Δ₀ δ_{k±1,j}` on a linear chain.
pub fn crosstalk_matrix(n: usize, delta0: f64) -> Vec<Vec<f64>> {
    (0..n)
        .map(|k| {
            (0..n)
                .map(|j| {
                    if k == j {
                        1.0
                    } else if k.abs_diff(j) == 1 {
                        delta0
                    } else {
                        0.0
                    }
                })
                .collect()
        })
        .collect()
}

/// `exp(-i (θ/2) Σ_k Δ_{k,j} σ^axis_k)`: the intended rotation on `j` plus
/// a parasitic `Δ₀ θ` rotation on each chain neighbour.
pub fn crosstalk_rotation<S: QuantumState>(
    state: &mut S,
    qubit: usize,
    axis: Pauli,
    theta: f64,
    delta0: f64,
) -> Result<()> {
    let n = state.qubit_count();
    if qubit >= n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: qubit + 1,
        });
    }
    if axis == Pauli::I {
        return Err(Error::InvalidArgument("rotation about the identity".into()));
    }
    state.apply_pauli_exponential(&PauliString::from_sites(n, &[(qubit, axis)])?, theta / 2.0)?;
    if delta0 != 0.0 {
        let neighbours = [qubit.checked_sub(1), (qubit + 1 < n).then_some(qubit + 1)];
        for k in neighbours.into_iter().flatten() {
            let p = PauliString::from_sites(n, &[(k, axis)])?;
            state.apply_pauli_exponential(&p, delta0 * theta / 2.0)?;
        }
    }
    Ok(())
}

/// Applies one gate through the model: the (possibly crosstalk-distorted)
/// unitary, then `repeats` rounds of `ρ → ερ + (1−ε) 𝕀/2^n`.
pub fn apply_noisy_gate<S: QuantumState>(
    state: &mut S,
    gate: &GateOp,
    model: &NoiseModel,
    repeats: usize,
) -> Result<()> {
    match gate.as_single_qubit_rotation() {
        Some((q, axis, angle)) if model.crosstalk_enabled => {
            crosstalk_rotation(state, q, axis, angle, model.delta0)?
        }
        _ => gate.apply(state)?,
    }
    if model.depolarizing_enabled {
        for _ in 0..repeats {
            state.depolarize(model.epsilon)?;
        }
    }
    Ok(())
}

/// Runs a sequence under the model. Each op depolarizes as many times as it
/// contributes to the sequence's gate count, so a whole run contracts
/// traceless expectations by exactly `ε^gate_count`.
pub fn run_sequence<S: QuantumState>(
    state: &mut S,
    seq: &GateSequence,
    model: &NoiseModel,
) -> Result<()> {
    let counting = seq.counting();
    for op in seq.ops() {
        apply_noisy_gate(state, op, model, op.cost(&counting))?;
    }
    Ok(())
}

/// Inverts `n` rounds of global depolarizing for an observable whose
/// normalized trace `Tr(O)/2^N` is `trace_obs`.
pub fn mitigate(measured: f64, epsilon: f64, n: usize, trace_obs: f64) -> Result<f64> {
    if !(epsilon > 0.0 && epsilon <= 1.0) {
        return Err(Error::InvalidArgument(format!(
            "gate fidelity {epsilon} outside (0, 1]"
        )));
    }
    let n = i32::try_from(n).map_err(|_| Error::Unmitigable(0.0))?;
    let f = epsilon.powi(n);
    if f < MITIGATION_FLOOR {
        return Err(Error::Unmitigable(f));
    }
    Ok(measured / f - (1.0 - f) / f * trace_obs)
}
