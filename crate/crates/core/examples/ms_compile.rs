//! Compile exp(-i a P) into MS gates and local rotations and check it
//! against the dense exponential.

use eqsim::compiler::{central_rotation, compile_pauli_exponential, CompileOptions, Decoupling};
use eqsim::linalg::{hermitian_expm, max_abs};
use eqsim::pauli::PauliString;

fn main() -> eqsim::Result<()> {
    for k in 2..=6 {
        let c = central_rotation(k);
        println!("k={k}: central axis {} sign {:+}", c.axis, c.sign);
    }
    let options = CompileOptions {
        decoupling: Decoupling::Shelve,
        ..Default::default()
    };
    for label in ["XYZ", "YIXZ", "ZZZZZ"] {
        let p = PauliString::from_label(label)?;
        let seq = compile_pauli_exponential(&p, 0.3, &options)?;
        let err = max_abs(&(seq.dense_unitary()? - hermitian_expm(&p.to_dense(), 0.3)?));
        println!(
            "\nexp(-i 0.3 {label}): {} gates, error {err:.1e}",
            seq.gate_count()
        );
        print!("{seq}");
    }
    Ok(())
}
