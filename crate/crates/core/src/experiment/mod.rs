//! Config-driven runs behind the command-line tool: monotone curves under
//! depolarizing or crosstalk noise, repetition-cost tables, property
//! verification, and gate-sequence dumps.

mod config;
mod costs;
pub mod output;
mod sweep;
mod verify;

pub use config::{preset_names, preset_text, CostSweep, ExperimentConfig, TimeGrid};
pub use costs::{crossover, run_costs, CostRow};
pub use sweep::{
    run_crosstalk, run_simulate, run_sweep, shape_distance, CurvePoint, Distortion, SweepReport,
};
pub use verify::{run_verify, SuiteResult, VerifyReport};

use crate::compiler::{compile_evolution, GateSequence};
use crate::error::Result;
use crate::pauli::embed_hamiltonian;

/// Enlarged-space preparation circuit of a config at time `t`.
pub fn compile_for(cfg: &ExperimentConfig, t: f64) -> Result<GateSequence> {
    let h_big = embed_hamiltonian(&cfg.hamiltonian)?;
    compile_evolution(&h_big, t, cfg.trotter_steps, &cfg.compile)
}
