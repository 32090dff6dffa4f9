use std::collections::HashMap;

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;

use super::MonotoneSpec;
use crate::compiler::{
    compile_evolution, execute_plan, plan_measurement, CompileOptions, GateSequence,
};
use crate::embedding::{antilinear_expectation, direct_antilinear, embed_state};
use crate::error::{ensure_qubits, Result};
use crate::hilbert::{DensityMatrix, Estimate, QuantumState, Shots, StateVector};
use crate::noise::{mitigate, run_sequence, NoiseModel};
use crate::pauli::{embed_hamiltonian, Pauli, PauliString, PauliSum};

/// Component values `<ψ|Θ_c|ψ*>` by explicit conjugation of `ψ`.
pub fn direct_components(psi: &StateVector, spec: &MonotoneSpec) -> Result<Vec<Complex64>> {
    ensure_qubits(spec.qubit_count(), psi.qubit_count())?;
    spec.components()
        .iter()
        .map(|c| direct_antilinear(psi.amplitudes(), &c.theta))
        .collect()
}

pub fn evaluate_direct(psi: &StateVector, spec: &MonotoneSpec) -> Result<f64> {
    spec.combine_values(&direct_components(psi, spec)?)
}

/// Component values from exact `σ^z⊗Θ` and `σ^x⊗Θ` expectations on the
/// enlarged register.
pub fn embedded_components<S: QuantumState>(
    big: &S,
    spec: &MonotoneSpec,
) -> Result<Vec<Complex64>> {
    ensure_qubits(spec.qubit_count() + 1, big.qubit_count())?;
    spec.components()
        .iter()
        .map(|c| antilinear_expectation(big, &c.theta))
        .collect()
}

pub fn evaluate_embedded_exact<S: QuantumState>(big: &S, spec: &MonotoneSpec) -> Result<f64> {
    spec.combine_values(&embedded_components(big, spec)?)
}

/// An enlarged-space initial state plus the circuit that evolves it.
#[derive(Clone, Debug, PartialEq)]
pub struct Preparation {
    pub initial: StateVector,
    pub circuit: GateSequence,
}

impl Preparation {
    pub fn new(initial: StateVector, circuit: GateSequence) -> Result<Self> {
        ensure_qubits(initial.qubit_count(), circuit.qubit_count())?;
        Ok(Preparation { initial, circuit })
    }

    /// Embeds `psi0` and compiles the Trotterized enlarged-space evolution
    /// of the simulated Hamiltonian `h`.
    pub fn trotter(
        h: &PauliSum,
        psi0: &StateVector,
        t: f64,
        steps: usize,
        options: &CompileOptions,
    ) -> Result<Self> {
        ensure_qubits(h.qubit_count(), psi0.qubit_count())?;
        let h_big = embed_hamiltonian(h)?;
        let circuit = compile_evolution(&h_big, t, steps, options)?;
        Preparation::new(embed_state(psi0)?, circuit)
    }

    pub fn simulated_qubits(&self) -> usize {
        self.initial.qubit_count() - 1
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ProtocolOptions {
    pub noise: NoiseModel,
    pub shots: Shots,
    pub seed: u64,
    /// Run the readout unitaries through the noise model as well.
    pub noisy_readout: bool,
    /// Undo depolarizing with the `ε^n` estimator.
    pub mitigate: bool,
    pub compile: CompileOptions,
}

impl Default for ProtocolOptions {
    fn default() -> Self {
        ProtocolOptions {
            noise: NoiseModel::ideal(),
            shots: Shots::Exact,
            seed: 0,
            noisy_readout: true,
            mitigate: true,
            compile: CompileOptions::default(),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ProtocolResult {
    pub value: f64,
    /// First-order (delta-method) propagation of the per-setting errors;
    /// only meaningful when it is small next to `value`.
    pub stderr: f64,
    pub components: Vec<Complex64>,
    /// Per-target estimates in measurement order.
    pub settings: Vec<(PauliString, Estimate)>,
    pub preparation_gates: usize,
}

/// Full pipeline: prepare (through noise), plan and execute one readout per
/// enlarged-space target, optionally mitigate, assemble and combine.
///
/// Target `j` samples from its own ChaCha20 stream `j` under `seed`, so the
/// result does not depend on evaluation order.
pub fn evaluate_embedded_protocol(
    prep: &Preparation,
    spec: &MonotoneSpec,
    options: &ProtocolOptions,
) -> Result<ProtocolResult> {
    ensure_qubits(spec.qubit_count() + 1, prep.initial.qubit_count())?;
    if options.noise.depolarizing_enabled() {
        run_protocol(
            DensityMatrix::from_pure(&prep.initial)?,
            prep,
            spec,
            options,
        )
    } else {
        run_protocol(prep.initial.clone(), prep, spec, options)
    }
}

fn run_protocol<S: QuantumState>(
    mut state: S,
    prep: &Preparation,
    spec: &MonotoneSpec,
    options: &ProtocolOptions,
) -> Result<ProtocolResult> {
    run_sequence(&mut state, &prep.circuit, &options.noise)?;
    let readout_noise = if options.noisy_readout {
        options.noise
    } else {
        NoiseModel::ideal()
    };
    let mut settings = Vec::new();
    for (j, target) in spec.enlarged_targets().into_iter().enumerate() {
        let plan = plan_measurement(&target, &options.compile)?;
        let mut rng = ChaCha20Rng::seed_from_u64(options.seed);
        rng.set_stream(j as u64);
        let outcome = execute_plan(&state, &plan, &readout_noise, options.shots, &mut rng)?;
        let mut est = outcome.estimate;
        if options.mitigate && options.noise.depolarizing_enabled() {
            let n = prep.circuit.gate_count()
                + if options.noisy_readout {
                    outcome.readout_gates
                } else {
                    0
                };
            let trace = if target.is_identity() { 1.0 } else { 0.0 };
            let eps = options.noise.epsilon();
            est.mean = mitigate(est.mean, eps, n, trace)?;
            est.stderr /= eps.powi(n as i32);
        }
        settings.push((target, est));
    }
    let (value, stderr, components) = assemble(spec, &settings)?;
    Ok(ProtocolResult {
        value,
        stderr,
        components,
        settings,
        preparation_gates: prep.circuit.gate_count(),
    })
}

/// Combines per-target estimates into the monotone value and its
/// delta-method standard error.
fn assemble(
    spec: &MonotoneSpec,
    settings: &[(PauliString, Estimate)],
) -> Result<(f64, f64, Vec<Complex64>)> {
    let lookup: HashMap<&PauliString, Estimate> = settings.iter().map(|(t, e)| (t, *e)).collect();

    let components: Vec<Complex64> = spec
        .components()
        .iter()
        .map(|c| {
            c.theta
                .terms()
                .iter()
                .map(|(coef, p)| {
                    let re = lookup[&p.prepend(Pauli::Z)].mean;
                    let im = lookup[&p.prepend(Pauli::X)].mean;
                    coef * Complex64::new(re, -im)
                })
                .sum()
        })
        .collect();
    let total = spec.inner_sum(&components)?;
    let value = total.norm();

    // d|S|/dv = Re(conj(S)/|S| · dS/dv); at S = 0 fall back to |dS/dv|
    let unit = (value > 0.0).then(|| total.conj() / value);
    let mut grad: HashMap<&PauliString, f64> = HashMap::new();
    let targets: Vec<(PauliString, PauliString)> = spec
        .components()
        .iter()
        .flat_map(|c| {
            c.theta
                .terms()
                .iter()
                .map(|(_, p)| (p.prepend(Pauli::Z), p.prepend(Pauli::X)))
        })
        .collect();
    let mut k = 0;
    for (c, z) in spec.components().iter().zip(&components) {
        let dz = match spec.combine() {
            super::Combine::AbsValue => Complex64::new(1.0, 0.0),
            super::Combine::AbsSumOfSquares => 2.0 * z,
        } * f64::from(c.sign);
        for (coef, _) in c.theta.terms() {
            let (zt, xt) = &targets[k];
            k += 1;
            for (t, dv) in [(zt, dz * coef), (xt, dz * coef * Complex64::new(0.0, -1.0))] {
                let g = match unit {
                    Some(u) => (u * dv).re,
                    None => dv.norm(),
                };
                *grad
                    .entry(lookup.get_key_value(t).expect("measured").0)
                    .or_default() += g;
            }
        }
    }
    let variance: f64 = grad
        .iter()
        .map(|(t, g)| (g * lookup[*t].stderr).powi(2))
        .sum();

    Ok((value, variance.sqrt(), components))
}
