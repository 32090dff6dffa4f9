//! Read a many-body correlation off one or two qubits after at most two
//! planned unitaries.

use eqsim::compiler::{execute_plan, plan_measurement, CompileOptions, Shots};
use eqsim::hilbert::{QuantumState, StateVector};
use eqsim::noise::NoiseModel;
use eqsim::pauli::PauliString;
use eqsim::random;
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;

fn main() -> eqsim::Result<()> {
    let mut rng = ChaCha20Rng::seed_from_u64(7);
    let psi: StateVector = random::state(5, &mut rng)?;
    for label in ["ZYYII", "XIZYY", "YXXXI", "IZIXI"] {
        let target = PauliString::from_label(label)?;
        let plan = plan_measurement(&target, &CompileOptions::default())?;
        let gens: Vec<String> = plan.generators().iter().map(|g| g.to_string()).collect();
        let out = execute_plan(&psi, &plan, &NoiseModel::ideal(), Shots::Exact, &mut rng)?;
        println!(
            "{label}: generators [{}] observable {} sign {:+} -> {:.12} (direct {:.12})",
            gens.join(", "),
            plan.observable(),
            plan.sign(),
            out.estimate.mean,
            psi.pauli_expectation(&target)?.re,
        );
    }
    Ok(())
}
