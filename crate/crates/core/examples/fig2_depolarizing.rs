//! Three-tangle under the GHZ-class Hamiltonian with depolarizing gates, for
//! 5, 10 and 20 Trotter steps.

use eqsim::experiment::{run_simulate, ExperimentConfig};

fn main() -> eqsim::Result<()> {
    for preset in ["fig2a", "fig2b", "fig2c"] {
        let cfg = ExperimentConfig::preset(preset)?;
        let report = run_simulate(&cfg)?;
        println!("{preset}: {} Trotter steps", cfg.trotter_steps);
        for &eps in &cfg.epsilons {
            let curve = report.curve(eps, 0.0);
            let peak = curve.iter().map(|p| p.value).fold(0.0, f64::max);
            let trotter = curve
                .iter()
                .map(|p| (p.value - p.ideal_value).abs())
                .fold(0.0, f64::max);
            let d = report.distortion_for(eps, 0.0).expect("swept");
            println!(
                "  eps={eps:<5} peak {peak:.4}  max|v-ideal| {trotter:.2e}  D {:.1e}",
                d.distance
            );
        }
    }
    Ok(())
}
