//! Concurrence of two qubits under a transverse Ising coupling, through the
//! full embedded protocol and directly.

use eqsim::compiler::CompileOptions;
use eqsim::hilbert::{evolve_exact, StateVector};
use eqsim::monotones::{
    concurrence_spec, evaluate_direct, evaluate_embedded_protocol, Preparation, ProtocolOptions,
};
use eqsim::pauli::PauliSum;

fn main() -> eqsim::Result<()> {
    let h: PauliSum = "1.0 * X_X\n0.5 * Z_I\n0.5 * I_Z".parse()?;
    let psi0 = StateVector::from_bits("00")?;
    let spec = concurrence_spec();
    println!("C = {}", spec.enlarged_expression());
    println!("{:>5} {:>12} {:>12}", "t", "protocol", "exact");
    for i in 0..=8 {
        let t = 0.2 * f64::from(i);
        let prep = Preparation::trotter(&h, &psi0, t, 40, &CompileOptions::default())?;
        let res = evaluate_embedded_protocol(&prep, &spec, &ProtocolOptions::default())?;
        let exact = evaluate_direct(&evolve_exact(&psi0, &h, t)?, &spec)?;
        println!("{t:>5.2} {:>12.8} {:>12.8}", res.value, exact);
    }
    Ok(())
}
