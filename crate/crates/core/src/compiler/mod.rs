//! Compilation of Pauli-string exponentials into the trapped-ion native set
//! (MS gates, local rotations, basis changes), Trotterization, and the
//! measurement planner for string expectations with a one-qubit readout.

mod dump;
mod gate;
mod ms;
mod planner;
mod trotter;

pub use crate::hilbert::Shots;
pub use dump::parse_sequence;
pub use gate::{wrap_angle, CountingConfig, Decoupling, GateKind, GateOp, GateSequence};
pub use ms::{
    canonical_form, central_rotation, compile_evolution, compile_pauli_exponential, BasisFix,
    CentralRotation, CompileOptions,
};
pub use planner::{
    conjugate_through_quarter_turn, execute_plan, plan_measurement, MeasurementPlan, PlanOutcome,
    PlannedUnitary, PLAN_ANGLE,
};
pub use trotter::{trotter_error_bound, trotterize};
