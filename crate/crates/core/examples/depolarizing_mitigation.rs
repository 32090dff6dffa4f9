//! Depolarizing gates contract every traceless expectation by eps^n; the
//! mitigated protocol recovers the noiseless monotone.

use eqsim::compiler::CompileOptions;
use eqsim::hilbert::StateVector;
use eqsim::monotones::{
    evaluate_embedded_protocol, three_tangle_spec, Preparation, ProtocolOptions,
};
use eqsim::noise::NoiseModel;
use eqsim::pauli::PauliSum;

fn main() -> eqsim::Result<()> {
    let h: PauliSum = "1.0 * Y_I_I\n1.0 * I_Y_I\n1.0 * I_I_Y\n2.0 * X_X_X".parse()?;
    let prep = Preparation::trotter(
        &h,
        &StateVector::from_bits("000")?,
        1.2,
        5,
        &CompileOptions::default(),
    )?;
    let spec = three_tangle_spec();
    let ideal = evaluate_embedded_protocol(&prep, &spec, &ProtocolOptions::default())?.value;
    println!(
        "circuit gates n = {}, ideal tau3 = {ideal:.10}",
        prep.circuit.gate_count()
    );
    for eps in [0.99, 0.97, 0.95] {
        let noise = NoiseModel::depolarizing(eps)?;
        let raw = ProtocolOptions {
            noise,
            mitigate: false,
            ..Default::default()
        };
        let fixed = ProtocolOptions {
            noise,
            ..Default::default()
        };
        let r = evaluate_embedded_protocol(&prep, &spec, &raw)?.value;
        let m = evaluate_embedded_protocol(&prep, &spec, &fixed)?.value;
        println!("eps={eps}: raw {r:.10}  mitigated {m:.10}");
    }
    Ok(())
}
