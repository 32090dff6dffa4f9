//! Crosstalk distorts the shape of the three-tangle curve, not only its
//! amplitude.

use eqsim::experiment::{run_crosstalk, ExperimentConfig};

fn main() -> eqsim::Result<()> {
    let cfg = ExperimentConfig::preset("fig2d")?;
    let report = run_crosstalk(&cfg)?;
    for d in &report.distortion {
        println!(
            "delta0={:<5} scale {:.4}  D {:.4e}",
            d.delta0, d.scale, d.distance
        );
    }
    Ok(())
}
