use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;

use crate::compiler::{
    compile_evolution, compile_pauli_exponential, plan_measurement, CompileOptions,
};
use crate::embedding::{
    antilinear_expectation, direct_antilinear, embed_state, project, EmbeddingMap,
};
use crate::error::Result;
use crate::hilbert::{evolve_exact, DensityMatrix, QuantumState};
use crate::linalg::{hermitian_expm, max_abs};
use crate::monotones::{
    concurrence_spec, evaluate_direct, evaluate_embedded_exact, three_tangle_spec,
};
use crate::noise::{mitigate, run_sequence, NoiseModel};
use crate::pauli::{embed_hamiltonian, PauliSum};
use crate::random;

#[derive(Clone, Debug, PartialEq)]
pub struct SuiteResult {
    pub name: &'static str,
    pub cases: usize,
    pub worst_residual: f64,
    pub tolerance: f64,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.worst_residual <= self.tolerance
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct VerifyReport {
    pub suites: Vec<SuiteResult>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(SuiteResult::passed)
    }
}

impl std::fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(
            f,
            "{:<24} {:>6} {:>12} {:>10}  status",
            "suite", "cases", "worst", "tolerance"
        )?;
        for s in &self.suites {
            writeln!(
                f,
                "{:<24} {:>6} {:>12.3e} {:>10.0e}  {}",
                s.name,
                s.cases,
                s.worst_residual,
                s.tolerance,
                if s.passed() { "PASS" } else { "FAIL" }
            )?;
        }
        Ok(())
    }
}

fn suite(name: &'static str, tolerance: f64, residuals: Vec<f64>) -> SuiteResult {
    SuiteResult {
        name,
        cases: residuals.len(),
        worst_residual: residuals.into_iter().fold(0.0, f64::max),
        tolerance,
    }
}

fn ghz_model() -> PauliSum {
    PauliSum::from_real_labels(&[(1.0, "YII"), (1.0, "IYI"), (1.0, "IIY"), (2.0, "XXX")])
        .expect("valid labels")
}

fn intertwining<R: Rng>(rng: &mut R) -> Result<SuiteResult> {
    let mut res = Vec::new();
    for i in 0..20 {
        let n = 1 + i % 3;
        let h = random::hermitian_sum(n, 1 + i % 5, rng)?;
        let h_big = embed_hamiltonian(&h)?;
        let m = EmbeddingMap::new(n)?.projector_matrix();
        res.push(max_abs(&(&m * h_big.to_dense() - h.to_dense() * &m)));
        let psi = random::state(n, rng)?;
        let big = embed_state(&psi)?;
        for t in [0.1, 1.0, 3.0] {
            let lifted = project(&evolve_exact(&big, &h_big, t)?);
            let direct = evolve_exact(&psi, &h, t)?;
            let d: f64 = lifted
                .iter()
                .zip(direct.amplitudes())
                .map(|(a, b)| (a - b).norm_sqr())
                .sum::<f64>()
                .sqrt();
            res.push(d);
        }
    }
    Ok(suite("embedding_intertwining", 1e-10, res))
}

fn antilinear<R: Rng>(rng: &mut R) -> Result<SuiteResult> {
    let mut res = Vec::new();
    for i in 0..200 {
        let n = 1 + i % 4;
        let psi = random::state(n, rng)?;
        let theta = random::hermitian_sum(n, 1 + i % 3, rng)?;
        let direct = direct_antilinear(psi.amplitudes(), &theta)?;
        let big = embed_state(&psi)?;
        res.push((direct - antilinear_expectation(&big, &theta)?).norm());
    }
    Ok(suite("antilinear_identity", 1e-12, res))
}

fn compiler<R: Rng>(rng: &mut R) -> Result<SuiteResult> {
    let mut res = Vec::new();
    let opts = CompileOptions::default();
    let mut strings: Vec<_> = (2..=3).flat_map(random::all_strings).collect();
    strings.extend((0..20).map(|i| random::nontrivial_string(4 + i % 2, rng)));
    for p in strings.into_iter().filter(|p| !p.is_identity()) {
        let angle = rng.random_range(-3.0..3.0);
        let seq = compile_pauli_exponential(&p, angle, &opts)?;
        let want = hermitian_expm(&p.to_dense(), angle)?;
        res.push(max_abs(&(seq.dense_unitary()? - want)));
    }
    Ok(suite("compiler_soundness", 1e-10, res))
}

fn planner() -> Result<SuiteResult> {
    let mut res = Vec::new();
    let opts = CompileOptions::default();
    for n in 1..=4 {
        for target in random::all_strings(n) {
            let plan = plan_measurement(&target, &opts)?;
            let h = plan.conjugated_observable()?;
            let ok = h.axes() == target.axes() && h.phase().sign() == Some(plan.sign());
            res.push(if ok { 0.0 } else { 1.0 });
        }
    }
    Ok(suite("planner_soundness", 0.0, res))
}

/// ε^n law plus mitigation on the compiled GHZ-model circuit. The negative
/// control mitigates with `n - 1` and must fail.
fn contraction(negative_control: bool) -> Result<SuiteResult> {
    let eps = 0.97;
    let h_big = embed_hamiltonian(&ghz_model())?;
    let seq = compile_evolution(&h_big, 1.0, 5, &CompileOptions::default())?;
    let n = seq.gate_count();
    let psi0 = embed_state(&crate::hilbert::StateVector::from_bits("000")?)?;
    let mut ideal = DensityMatrix::from_pure(&psi0)?;
    run_sequence(&mut ideal, &seq, &NoiseModel::ideal())?;
    let mut noisy = DensityMatrix::from_pure(&psi0)?;
    run_sequence(&mut noisy, &seq, &NoiseModel::depolarizing(eps)?)?;
    let exponent = if negative_control { n - 1 } else { n };
    let mut res = Vec::new();
    for p in random::all_strings(4).into_iter().skip(1) {
        let v_ideal = ideal.pauli_expectation(&p)?.re;
        let v_noisy = noisy.pauli_expectation(&p)?.re;
        res.push((v_noisy - eps.powi(n as i32) * v_ideal).abs());
        res.push((mitigate(v_noisy, eps, exponent, 0.0)? - v_ideal).abs());
    }
    let name = if negative_control {
        "contraction_law[n-1]"
    } else {
        "contraction_law"
    };
    Ok(suite(name, 1e-9, res))
}

fn path_equivalence<R: Rng>(rng: &mut R) -> Result<SuiteResult> {
    let mut res = Vec::new();
    for (spec, n) in [(concurrence_spec(), 2), (three_tangle_spec(), 3)] {
        for _ in 0..100 {
            let psi = random::state(n, rng)?;
            let big = embed_state(&psi)?;
            res.push((evaluate_direct(&psi, &spec)? - evaluate_embedded_exact(&big, &spec)?).abs());
        }
    }
    Ok(suite("path_equivalence", 1e-10, res))
}

/// Runs every cross-module property suite.
pub fn run_verify(seed: u64, negative_control: bool) -> Result<VerifyReport> {
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    let mut suites = vec![
        intertwining(&mut rng)?,
        antilinear(&mut rng)?,
        compiler(&mut rng)?,
        planner()?,
        contraction(false)?,
        path_equivalence(&mut rng)?,
    ];
    if negative_control {
        suites.push(contraction(true)?);
    }
    Ok(VerifyReport { suites })
}
