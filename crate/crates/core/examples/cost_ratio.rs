//! Repetitions needed by the embedding versus full tomography.

use eqsim::experiment::{crossover, run_costs, CostSweep};

fn main() -> eqsim::Result<()> {
    let sweep = CostSweep::preset("costs")?;
    let rows = run_costs(&sweep)?;
    println!(
        "{:>3} {:>12} {:>12} {:>10} {:>16}",
        "N", "N_emb", "N_oto", "ratio", "tomo observables"
    );
    for r in &rows {
        println!(
            "{:>3} {:>12.4e} {:>12.4e} {:>10.3e} {:>16}",
            r.inputs.n_qubits, r.n_emb, r.n_oto, r.ratio, r.tomography_observables
        );
    }
    println!("ratio < 1 from N = {:?}", crossover(&rows));
    Ok(())
}
