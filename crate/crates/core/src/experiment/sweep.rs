use rayon::prelude::*;

use super::config::ExperimentConfig;
use crate::error::{Error, Result};
use crate::hilbert::evolve_exact;
use crate::monotones::{evaluate_direct, evaluate_embedded_protocol, Preparation, ProtocolOptions};
use crate::noise::NoiseModel;

/// One sample of a monotone curve.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CurvePoint {
    pub t: f64,
    pub epsilon: f64,
    pub delta0: f64,
    pub trotter_steps: usize,
    pub value: f64,
    pub stderr: f64,
    /// Exact evolution, direct evaluation.
    pub ideal_value: f64,
    /// Gate count of the preparation circuit at this `t`.
    pub n_gates: usize,
}

/// Shape distance of one noisy curve from the noiseless Trotter curve.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Distortion {
    pub epsilon: f64,
    pub delta0: f64,
    pub trotter_steps: usize,
    /// Least-squares factor `s` mapping the curve onto the reference.
    pub scale: f64,
    /// `‖s·v − v₀‖ / ‖v₀‖`.
    pub distance: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepReport {
    pub rows: Vec<CurvePoint>,
    pub distortion: Vec<Distortion>,
}

impl SweepReport {
    /// Rows of one `(ε, Δ₀)` curve in time order.
    pub fn curve(&self, epsilon: f64, delta0: f64) -> Vec<CurvePoint> {
        self.rows
            .iter()
            .filter(|r| r.epsilon == epsilon && r.delta0 == delta0)
            .copied()
            .collect()
    }

    pub fn distortion_for(&self, epsilon: f64, delta0: f64) -> Option<Distortion> {
        self.distortion
            .iter()
            .find(|d| d.epsilon == epsilon && d.delta0 == delta0)
            .copied()
    }
}

/// Best-fit rescaling distance `min_s ‖s·v − v₀‖ / ‖v₀‖`.
pub fn shape_distance(v: &[f64], reference: &[f64]) -> (f64, f64) {
    let vv: f64 = v.iter().map(|x| x * x).sum();
    let vr: f64 = v.iter().zip(reference).map(|(a, b)| a * b).sum();
    let rr: f64 = reference.iter().map(|x| x * x).sum();
    let scale = if vv > 0.0 { vr / vv } else { 0.0 };
    if rr == 0.0 {
        return (scale, 0.0);
    }
    let resid: f64 = v
        .iter()
        .zip(reference)
        .map(|(a, b)| (scale * a - b).powi(2))
        .sum();
    (scale, (resid / rr).sqrt())
}

/// Per-job seed: `seed` mixed with the job index (SplitMix64 increment).
fn job_seed(seed: u64, job: usize) -> u64 {
    seed.wrapping_add((job as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

fn pool(workers: usize) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::Config(format!("cannot start {workers} workers: {e}")))
}

/// Evaluates the monotone on every grid point for every noise model, each
/// point from a fresh preparation. Rows come back in `(model, t)` order
/// whatever the worker count.
pub fn run_sweep(cfg: &ExperimentConfig, models: &[(f64, f64)]) -> Result<SweepReport> {
    let times = cfg.time.values();
    let mut all_models: Vec<(f64, f64)> = models.to_vec();
    let reference = (1.0, 0.0);
    if !all_models.contains(&reference) {
        all_models.push(reference);
    }
    let jobs: Vec<(usize, usize)> = (0..all_models.len())
        .flat_map(|m| (0..times.len()).map(move |i| (m, i)))
        .collect();

    let pool = pool(cfg.workers)?;
    let ideal: Vec<f64> = pool.install(|| {
        times
            .par_iter()
            .map(|&t| {
                let psi = evolve_exact(&cfg.initial_state, &cfg.hamiltonian, t)?;
                evaluate_direct(&psi, &cfg.monotone)
            })
            .collect::<Result<Vec<_>>>()
    })?;

    let values: Vec<CurvePoint> = pool.install(|| {
        jobs.par_iter()
            .enumerate()
            .map(|(job, &(m, i))| {
                let (epsilon, delta0) = all_models[m];
                let t = times[i];
                let prep = Preparation::trotter(
                    &cfg.hamiltonian,
                    &cfg.initial_state,
                    t,
                    cfg.trotter_steps,
                    &cfg.compile,
                )?;
                let options = ProtocolOptions {
                    noise: NoiseModel::new(epsilon, delta0)?,
                    shots: cfg.shots,
                    seed: job_seed(cfg.seed, job),
                    noisy_readout: cfg.noisy_readout,
                    mitigate: cfg.mitigate,
                    compile: cfg.compile,
                };
                let res = evaluate_embedded_protocol(&prep, &cfg.monotone, &options)?;
                Ok(CurvePoint {
                    t,
                    epsilon,
                    delta0,
                    trotter_steps: cfg.trotter_steps,
                    value: res.value,
                    stderr: res.stderr,
                    ideal_value: ideal[i],
                    n_gates: res.preparation_gates,
                })
            })
            .collect::<Result<Vec<_>>>()
    })?;

    let curve_of = |m: usize| -> Vec<f64> {
        values[m * times.len()..(m + 1) * times.len()]
            .iter()
            .map(|p| p.value)
            .collect()
    };
    let ref_index = all_models
        .iter()
        .position(|&x| x == reference)
        .expect("present");
    let ref_curve = curve_of(ref_index);
    let distortion = models
        .iter()
        .map(|&(epsilon, delta0)| {
            let m = all_models
                .iter()
                .position(|&x| x == (epsilon, delta0))
                .expect("present");
            let (scale, distance) = shape_distance(&curve_of(m), &ref_curve);
            Distortion {
                epsilon,
                delta0,
                trotter_steps: cfg.trotter_steps,
                scale,
                distance,
            }
        })
        .collect();
    let rows = values[..models.len() * times.len()].to_vec();
    Ok(SweepReport { rows, distortion })
}

fn dedup(values: &[f64]) -> Vec<f64> {
    let mut out: Vec<f64> = Vec::new();
    for &v in values {
        if !out.contains(&v) {
            out.push(v);
        }
    }
    out
}

/// Depolarizing (and, if configured, crosstalk) sweep over `ε × Δ₀`.
pub fn run_simulate(cfg: &ExperimentConfig) -> Result<SweepReport> {
    let models: Vec<(f64, f64)> = dedup(&cfg.epsilons)
        .into_iter()
        .flat_map(|e| dedup(&cfg.delta0s).into_iter().map(move |d| (e, d)))
        .collect();
    run_sweep(cfg, &models)
}

/// Crosstalk-only sweep over `Δ₀` with depolarizing disabled.
pub fn run_crosstalk(cfg: &ExperimentConfig) -> Result<SweepReport> {
    let models: Vec<(f64, f64)> = dedup(&cfg.delta0s).into_iter().map(|d| (1.0, d)).collect();
    run_sweep(cfg, &models)
}
