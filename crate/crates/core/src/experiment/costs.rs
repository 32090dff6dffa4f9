use super::config::CostSweep;
use crate::error::Result;
use crate::noise::{
    cost_ratio, repetitions_embedding, repetitions_tomography, tomography_observable_count,
    CostInputs,
};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CostRow {
    pub inputs: CostInputs,
    pub n_emb: f64,
    pub n_oto: f64,
    pub ratio: f64,
    pub tomography_observables: u128,
}

impl CostRow {
    pub fn below_one(&self) -> bool {
        self.ratio < 1.0
    }
}

/// Cost table over the qubit range with `n = N_qubit` gates per run.
pub fn run_costs(sweep: &CostSweep) -> Result<Vec<CostRow>> {
    (sweep.n_qubits[0]..=sweep.n_qubits[1])
        .map(|n_qubits| {
            let inputs = CostInputs {
                k: sweep.k,
                n_gates: n_qubits,
                epsilon: sweep.epsilon,
                delta: sweep.delta,
                n_qubits,
                l: sweep.l,
            };
            let ratio = cost_ratio(&inputs)?;
            Ok(CostRow {
                inputs,
                n_emb: repetitions_embedding(sweep.k, sweep.epsilon, n_qubits),
                n_oto: repetitions_tomography(sweep.k, sweep.delta, n_qubits, n_qubits),
                ratio,
                tomography_observables: tomography_observable_count(n_qubits)?,
            })
        })
        .collect()
}

/// Smallest qubit count from which the ratio stays below one.
pub fn crossover(rows: &[CostRow]) -> Option<usize> {
    let last_above = rows.iter().rposition(|r| !r.below_one());
    match last_above {
        None => rows.first().map(|r| r.inputs.n_qubits),
        Some(i) => rows.get(i + 1).map(|r| r.inputs.n_qubits),
    }
}
