//! Three-tangle of GHZ and W states from 6 enlarged-space settings, with
//! finite shots.

use std::f64::consts::FRAC_1_SQRT_2;

use eqsim::compiler::{GateSequence, Shots};
use eqsim::embedding::embed_state;
use eqsim::hilbert::StateVector;
use eqsim::monotones::{
    evaluate_embedded_protocol, three_tangle_spec, Preparation, ProtocolOptions,
};
use num_complex::Complex64;

fn main() -> eqsim::Result<()> {
    let spec = three_tangle_spec();
    println!("tau3 = {}", spec.enlarged_expression());
    let ghz = StateVector::new(
        (0..8)
            .map(|i| Complex64::new(if i == 0 || i == 7 { FRAC_1_SQRT_2 } else { 0.0 }, 0.0))
            .collect(),
    )?;
    let w = StateVector::normalized(
        (0..8)
            .map(|i: usize| Complex64::new(if i.count_ones() == 1 { 1.0 } else { 0.0 }, 0.0))
            .collect(),
    )?;
    for (name, psi) in [("GHZ", ghz), ("W", w)] {
        let prep = Preparation::new(embed_state(&psi)?, GateSequence::new(4, Default::default()))?;
        for shots in [Shots::Exact, Shots::Count(2000)] {
            let options = ProtocolOptions {
                shots,
                seed: 3,
                ..Default::default()
            };
            let res = evaluate_embedded_protocol(&prep, &spec, &options)?;
            println!(
                "{name:>3} shots={shots:<5} tau3 = {:.4} +/- {:.4}",
                res.value, res.stderr
            );
        }
    }
    Ok(())
}
