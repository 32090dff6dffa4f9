//! One pass/fail line per acceptance criterion. Runs without the libtest
//! harness so the lines always reach stdout.

mod common;

use std::f64::consts::PI;
use std::time::Instant;

use common::*;
use eqsim::compiler::{
    central_rotation, compile_pauli_exponential, plan_measurement, trotter_error_bound,
    CompileOptions, MeasurementPlan, Shots,
};
use eqsim::embedding::{antilinear_expectation, embed_state, project};
use eqsim::experiment::{run_crosstalk, run_simulate, ExperimentConfig, SweepReport};
use eqsim::hilbert::{evolve_exact, DensityMatrix, QuantumState, StateVector};
use eqsim::monotones::{
    concurrence_spec, evaluate_direct, evaluate_embedded_exact, three_tangle_spec,
};
use eqsim::noise::{
    cost_ratio, mitigate, repetitions_embedding, repetitions_tomography, run_sequence,
    tomography_observable_count, CostInputs, NoiseModel,
};
use eqsim::pauli::{embed_hamiltonian, PauliString, PauliSum};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        passed,
        detail: detail.into(),
    }
}

fn random_labels<R: Rng>(n: usize, terms: usize, rng: &mut R) -> Vec<(f64, String)> {
    (0..terms)
        .map(|_| {
            let l: String = (0..n)
                .map(|_| ['I', 'X', 'Y', 'Z'][rng.random_range(0..4)])
                .collect();
            (rng.random_range(-1.0..1.0), l)
        })
        .collect()
}

fn to_sum(terms: &[(f64, String)]) -> PauliSum {
    let refs: Vec<(f64, &str)> = terms.iter().map(|(c, l)| (*c, l.as_str())).collect();
    PauliSum::from_real_labels(&refs).unwrap()
}

fn random_amps<R: Rng>(n: usize, rng: &mut R) -> Vec<Complex64> {
    let v: Vec<Complex64> = (0..1 << n)
        .map(|_| c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
        .collect();
    let nrm = norm(&v);
    v.into_iter().map(|z| z / nrm).collect()
}

fn criterion_1() -> Outcome {
    let mut rng = ChaCha20Rng::seed_from_u64(1);
    let mut worst: f64 = 0.0;
    let mut oracle_worst: f64 = 0.0;
    for i in 0..50 {
        let n = 1 + i % 3;
        let terms = random_labels(n, 1 + i % 4, &mut rng);
        let h = to_sum(&terms);
        let h_big = embed_hamiltonian(&h).unwrap();
        let amps = random_amps(n, &mut rng);
        let psi = StateVector::new(amps.clone()).unwrap();
        let big = embed_state(&psi).unwrap();
        let hd = sum(&terms);
        let hb = enlarged(&hd);
        for t in [0.1, 1.0, 3.0] {
            let got = project(&evolve_exact(&big, &h_big, t).unwrap());
            let want = evolve(&hd, t, &amps);
            worst = worst.max(diff(&got, &want));
            oracle_worst = oracle_worst.max(diff(&lower(&evolve(&hb, t, &lift(&amps))), &want));
        }
    }
    outcome(
        worst <= 1e-10 && oracle_worst <= 1e-10,
        format!("worst {worst:.2e}, oracle self-check {oracle_worst:.2e}, tol 1e-10"),
    )
}

fn criterion_2() -> Outcome {
    let mut rng = ChaCha20Rng::seed_from_u64(2);
    let mut worst: f64 = 0.0;
    for i in 0..1000 {
        let n = 1 + i % 4;
        let terms = random_labels(n, 1 + i % 3, &mut rng);
        let amps = random_amps(n, &mut rng);
        let want = antilinear(&sum(&terms), &amps);
        let big = embed_state(&StateVector::new(amps).unwrap()).unwrap();
        let got = antilinear_expectation(&big, &to_sum(&terms)).unwrap();
        worst = worst.max((got - want).norm());
    }
    outcome(
        worst <= 1e-12,
        format!("1000 cases, worst {worst:.2e}, tol 1e-12"),
    )
}

fn criterion_3() -> Outcome {
    // The central-rotation table is searched, not trusted: for each k the
    // unique (axis, sign) whose sandwich gives exp(-i a Z X..X) must match.
    let mut table_ok = true;
    for k in 2..=6 {
        let label: String = std::iter::once('Z')
            .chain(std::iter::repeat_n('X', k - 1))
            .collect();
        let want = pauli_exp(&label, 0.37);
        let ms = |theta: f64| {
            // exp(-i θ/4 S²) with S = Σ X_j, dense.
            let mut s = M::zeros(1 << k, 1 << k);
            for j in 0..k {
                let l: String = (0..k).map(|q| if q == j { 'X' } else { 'I' }).collect();
                s += string(&l);
            }
            expm(&(&s * &s * c(0.0, -theta / 4.0)))
        };
        let mut hits = Vec::new();
        for axis in ['X', 'Y', 'Z'] {
            for sign in [1i8, -1] {
                let l: String = (0..k).map(|q| if q == 0 { axis } else { 'I' }).collect();
                let r = pauli_exp(&l, 0.37 * f64::from(sign));
                let u = ms(-PI / 2.0) * r * ms(PI / 2.0);
                if phase_distance(&u, &want) < 1e-10 {
                    hits.push((axis, sign));
                }
            }
        }
        let table = central_rotation(k);
        table_ok &= hits == vec![(table.axis.as_char(), table.sign)];
    }

    let opts = CompileOptions::default();
    let mut worst: f64 = 0.0;
    let mut cases = 0;
    for n in 2..=5 {
        for (i, label) in labels(n).into_iter().enumerate().skip(1) {
            let angle = 0.1 + 0.013 * i as f64;
            let p = PauliString::from_label(&label).unwrap();
            let seq = compile_pauli_exponential(&p, angle, &opts).unwrap();
            worst = worst.max(phase_distance(
                &seq.dense_unitary().unwrap(),
                &pauli_exp(&label, angle),
            ));
            cases += 1;
        }
    }
    outcome(
        table_ok && worst <= 1e-10,
        format!("{cases} strings, worst {worst:.2e} up to phase, tol 1e-10; MS table search agrees: {table_ok}"),
    )
}

fn criterion_4() -> Outcome {
    let opts = CompileOptions::default();
    let mut exhaustive = true;
    let mut count = 0;
    for n in 1..=5 {
        for label in labels(n) {
            let target = PauliString::from_label(&label).unwrap();
            let plan = plan_measurement(&target, &opts).unwrap();
            let h = plan.conjugated_observable().unwrap();
            exhaustive &= h.axes() == target.axes() && h.phase().sign() == Some(plan.sign());
            let w = target.weight();
            let expect_weight = match (w, w == n) {
                (0, _) => 0,
                (1, _) | (_, true) => 1,
                _ if w % 2 == 1 => 1,
                _ => 2,
            };
            exhaustive &= plan.observable().weight() == expect_weight;
            count += 1;
        }
    }

    // Single-unitary N=4 case, taken verbatim: generator XXXX, measure Z₁.
    let p = |s: &str| PauliString::from_label(s).unwrap();
    let n4 = MeasurementPlan::from_parts(&p("YXXX"), vec![p("XXXX")], p("ZIII"), &opts);
    let n4_ok = n4
        .as_ref()
        .map(|m| m.conjugated_observable().unwrap() == p("YXXX"))
        .unwrap_or(false);
    let planned = plan_measurement(&p("YXXX"), &opts).unwrap();
    let n4_planner = planned.generators() == vec![&p("XXXX")] && planned.observable() == &p("ZIII");

    // Even case with identities. The literal generators X Y Y Y Y.. and
    // X Y Z Z Y.. commute with the observable Y₁X₂, so they cannot work;
    // the check is that this is detected and the planner's plan is sound.
    let mut even_literal_rejected = true;
    let mut even_planner_ok = true;
    for n in 5..=8 {
        let target = format!("YXXX{}", "I".repeat(n - 4));
        let g1 = format!("XYYY{}", "Y".repeat(n - 4));
        let g2 = format!("XYZZ{}", "Y".repeat(n - 4));
        let obs = format!("YX{}", "I".repeat(n - 2));
        even_literal_rejected &=
            MeasurementPlan::from_parts(&p(&target), vec![p(&g1), p(&g2)], p(&obs), &opts).is_err();
        let plan = plan_measurement(&p(&target), &opts).unwrap();
        even_planner_ok &= plan.observable() == &p(&obs)
            && plan.generators()
                == vec![
                    &p(&format!("XXYY{}", "Y".repeat(n - 4))),
                    &p(&format!("XXZZ{}", "Y".repeat(n - 4))),
                ]
            && plan.conjugated_observable().unwrap().axes() == p(&target).axes();
    }
    outcome(
        exhaustive && n4_ok && n4_planner && even_literal_rejected && even_planner_ok,
        format!(
            "{count} targets exact; N=4 example verbatim {}; even example: literal generators rejected {}, corrected plan sound {}",
            n4_ok && n4_planner,
            even_literal_rejected,
            even_planner_ok
        ),
    )
}

fn from_amps(a: &[f64]) -> StateVector {
    StateVector::normalized(a.iter().map(|x| c(*x, 0.0)).collect()).unwrap()
}

fn criterion_5() -> Outcome {
    let bell = from_amps(&[1.0, 0.0, 0.0, 1.0]);
    let prod2 = from_amps(&[1.0, 1.0, 0.0, 0.0]);
    let ghz = from_amps(&[1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0]);
    let w = from_amps(&[0.0, 1.0, 1.0, 0.0, 1.0, 0.0, 0.0, 0.0]);
    let prod3 = from_amps(&[0.6, 0.0, 0.8, 0.0, 0.0, 0.0, 0.0, 0.0]);
    let cases = [
        (concurrence_spec(), bell, 1.0),
        (concurrence_spec(), prod2, 0.0),
        (three_tangle_spec(), ghz, 1.0),
        (three_tangle_spec(), w, 0.0),
        (three_tangle_spec(), prod3, 0.0),
    ];
    let mut worst: f64 = 0.0;
    for (spec, psi, want) in &cases {
        let big = embed_state(psi).unwrap();
        worst = worst.max((evaluate_direct(psi, spec).unwrap() - want).abs());
        worst = worst.max((evaluate_embedded_exact(&big, spec).unwrap() - want).abs());
        // Oracle: Θ = Y⊗Y for the concurrence.
        if spec.qubit_count() == 2 {
            let o = antilinear(&string("YY"), psi.amplitudes()).norm();
            worst = worst.max((o - want).abs());
        }
    }
    outcome(
        worst <= 1e-10,
        format!("5 states, both paths, worst {worst:.2e}, tol 1e-10"),
    )
}

fn ghz_model() -> PauliSum {
    "1.0 * Y_I_I\n1.0 * I_Y_I\n1.0 * I_I_Y\n2.0 * X_X_X"
        .parse()
        .unwrap()
}

fn criterion_6() -> Outcome {
    let eps = 0.97;
    let h_big = embed_hamiltonian(&ghz_model()).unwrap();
    let seq =
        eqsim::compiler::compile_evolution(&h_big, 1.0, 5, &CompileOptions::default()).unwrap();
    let n = seq.gate_count();
    let psi0 = embed_state(&StateVector::from_bits("000").unwrap()).unwrap();
    let mut ideal = DensityMatrix::from_pure(&psi0).unwrap();
    run_sequence(&mut ideal, &seq, &NoiseModel::ideal()).unwrap();
    let mut noisy = DensityMatrix::from_pure(&psi0).unwrap();
    run_sequence(&mut noisy, &seq, &NoiseModel::depolarizing(eps).unwrap()).unwrap();
    let f = eps.powi(n as i32);

    let mut contraction: f64 = 0.0;
    let mut recovery: f64 = 0.0;
    for label in labels(4).into_iter().skip(1) {
        let p = PauliString::from_label(&label).unwrap();
        let vi = ideal.pauli_expectation(&p).unwrap().re;
        let vn = noisy.pauli_expectation(&p).unwrap().re;
        contraction = contraction.max((vn - f * vi).abs());
        recovery = recovery.max((mitigate(vn, eps, n, 0.0).unwrap() - vi).abs());
    }

    let k = 0.02;
    let shots = repetitions_embedding(k, eps, n).ceil() as u64;
    let mut worst_hits = 100;
    for label in ["ZIYY", "XIYY", "ZXYY", "XXYY", "ZZYY", "XZYY"] {
        let p = PauliString::from_label(label).unwrap();
        let vi = ideal.pauli_expectation(&p).unwrap().re;
        let vn = noisy.pauli_expectation(&p).unwrap().re;
        let mut hits = 0;
        for trial in 0..100 {
            let mut rng = ChaCha20Rng::seed_from_u64(trial);
            let est = Shots::Count(shots).estimate(vn, &mut rng).unwrap();
            if (mitigate(est.mean, eps, n, 0.0).unwrap() - vi).abs() <= 4.0 * k {
                hits += 1;
            }
        }
        worst_hits = worst_hits.min(hits);
    }
    outcome(
        contraction <= 1e-10 && recovery <= 1e-9 && worst_hits >= 95,
        format!(
            "n={n}, 255 observables: |noisy-eps^n ideal| {contraction:.2e}, mitigated {recovery:.2e}; {shots} shots: worst {worst_hits}/100 within 4k"
        ),
    )
}

fn criterion_7() -> Outcome {
    let (eps, delta, l, k) = (0.97, 0.98, 2, 0.01);
    let mut below = true;
    let mut decreasing = true;
    let mut closed: f64 = 0.0;
    let mut prev = f64::INFINITY;
    for nq in 2..=30 {
        let inputs = CostInputs {
            k,
            n_gates: nq,
            epsilon: eps,
            delta,
            n_qubits: nq,
            l,
        };
        let r = cost_ratio(&inputs).unwrap();
        below &= r < 1.0;
        decreasing &= r < prev;
        prev = r;
        let quotient =
            l as f64 * repetitions_embedding(k, eps, nq) / repetitions_tomography(k, delta, nq, nq);
        let formula = l as f64 * (delta / (3f64.sqrt() * eps)).powi(2 * nq as i32);
        closed = closed
            .max((r / quotient - 1.0).abs())
            .max((r / formula - 1.0).abs());
    }
    let unit = CostInputs {
        k,
        n_gates: 4,
        epsilon: 0.5,
        delta: 3f64.sqrt() * 0.5,
        n_qubits: 4,
        l: 1,
    };
    let unit_ratio = cost_ratio(&unit).unwrap();
    let count = tomography_observable_count(10).unwrap();
    outcome(
        below && decreasing && closed < 1e-12 && (unit_ratio - 1.0).abs() < 1e-12 && count == 1_048_575,
        format!(
            "N=2..30 below 1 {below}, decreasing {decreasing}, closed-form rel {closed:.1e}; l=1 unit ratio {unit_ratio}; 2^20-1 = {count}"
        ),
    )
}

fn rms_error(r: &SweepReport, eps: f64) -> f64 {
    let c = r.curve(eps, 0.0);
    (c.iter()
        .map(|p| (p.value - p.ideal_value).powi(2))
        .sum::<f64>()
        / c.len() as f64)
        .sqrt()
}

fn with_steps(steps: usize) -> ExperimentConfig {
    let mut cfg = ExperimentConfig::preset("fig2a").unwrap();
    cfg.trotter_steps = steps;
    cfg.epsilons = vec![1.0];
    cfg
}

fn criterion_8() -> Outcome {
    // (a)
    let cfg = ExperimentConfig::preset("fig2a").unwrap();
    let a = run_simulate(&cfg).unwrap();
    let ideal = a.curve(1.0, 0.0);
    let h_big = embed_hamiltonian(&cfg.hamiltonian).unwrap();
    // τ₃ is 12-Lipschitz in the state (three squared components, each
    // moving by at most 2‖δψ‖).
    let within_bound = ideal.iter().all(|p| {
        (p.value - p.ideal_value).abs()
            <= 12.0 * trotter_error_bound(&h_big, p.t, 5).unwrap() + 1e-12
    });
    let vals: Vec<f64> = ideal.iter().map(|p| p.value).collect();
    let turns = vals
        .windows(3)
        .filter(|w| (w[1] - w[0]) * (w[2] - w[1]) < 0.0)
        .count();
    let e5 = rms_error(&a, 1.0);
    let e20 = rms_error(&run_simulate(&with_steps(20)).unwrap(), 1.0);
    let e50 = rms_error(&run_simulate(&with_steps(50)).unwrap(), 1.0);
    let e100 = rms_error(&run_simulate(&with_steps(100)).unwrap(), 1.0);
    let order = e50 / e100;
    let part_a = within_bound && turns >= 2 && e20 < e5 && (1.7..2.3).contains(&order);

    // (b)
    let mut shape: f64 = 0.0;
    let mut ordered = true;
    for preset in ["fig2a", "fig2b", "fig2c"] {
        let cfg = ExperimentConfig::preset(preset).unwrap();
        let r = run_simulate(&cfg).unwrap();
        let mut prev = f64::INFINITY;
        for &eps in &cfg.epsilons {
            shape = shape.max(r.distortion_for(eps, 0.0).unwrap().distance);
            let peak = r
                .curve(eps, 0.0)
                .iter()
                .map(|p| p.value)
                .fold(0.0, f64::max);
            ordered &= peak < prev;
            prev = peak;
        }
    }
    let part_b = shape <= 1e-9 && ordered;

    // (c)
    let d = run_crosstalk(&ExperimentConfig::preset("fig2d").unwrap()).unwrap();
    let d01 = d.distortion_for(1.0, 0.01).unwrap().distance;
    let d05 = d.distortion_for(1.0, 0.05).unwrap().distance;
    let d00 = d.distortion_for(1.0, 0.0).unwrap().distance;
    let part_c = d05 > d01 && d00 == 0.0;

    outcome(
        part_a && part_b && part_c,
        format!(
            "(a) {turns} turning points, within Trotter bound {within_bound}, rms err 5/20 steps {e5:.3e}/{e20:.3e}, 50/100 ratio {order:.3}; \
             (b) max D {shape:.1e}, ordered {ordered}; (c) D(0.01) {d01:.3e} < D(0.05) {d05:.3e}"
        ),
    )
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 8] = [
        ("embedding dynamics identity", criterion_1),
        ("antilinear expectation identity", criterion_2),
        ("compiler soundness", criterion_3),
        ("measurement protocol soundness", criterion_4),
        ("monotone values", criterion_5),
        ("eps^n contraction and mitigation", criterion_6),
        ("cost ratio", criterion_7),
        ("noisy three-tangle curves", criterion_8),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = run();
        println!(
            "criterion {} {:<34} {} ({:.2}s) {}",
            i + 1,
            name,
            if o.passed { "PASS" } else { "FAIL" },
            start.elapsed().as_secs_f64(),
            o.detail
        );
        failed += usize::from(!o.passed);
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
