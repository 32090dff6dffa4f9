//! Lift a state, evolve under the enlarged Hamiltonian, and read an
//! antilinear expectation off two ordinary ones.

use eqsim::embedding::{antilinear_expectation, direct_antilinear, embed_state, project};
use eqsim::hilbert::{evolve_exact, StateVector};
use eqsim::pauli::{embed_hamiltonian, PauliSum};

fn main() -> eqsim::Result<()> {
    let h: PauliSum = "1.0 * Y_I\n0.5 * X_Z\n-0.3 * Z_Y".parse()?;
    let h_big = embed_hamiltonian(&h)?;
    println!("H      = {}", h.to_string().replace('\n', "  "));
    println!("H_emb  = {}", h_big.to_string().replace('\n', "  "));

    let psi0 = StateVector::from_bits("01")?;
    let t = 0.8;
    let direct = evolve_exact(&psi0, &h, t)?;
    let lifted = evolve_exact(&embed_state(&psi0)?, &h_big, t)?;
    let back = project(&lifted);
    let err = back
        .iter()
        .zip(direct.amplitudes())
        .map(|(a, b)| (a - b).norm())
        .fold(0.0, f64::max);
    println!("max |M psi_emb(t) - psi(t)| = {err:.2e}");

    let theta: PauliSum = "1.0 * Y_Y".parse()?;
    let want = direct_antilinear(direct.amplitudes(), &theta)?;
    let got = antilinear_expectation(&lifted, &theta)?;
    println!("<psi|YY|psi*> direct   = {want:.12}");
    println!("<Z YY> - i<X YY>       = {got:.12}");
    Ok(())
}
