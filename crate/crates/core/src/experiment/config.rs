use std::ops::Range;
use std::path::{Path, PathBuf};

use num_complex::Complex64;
use serde::Deserialize;
use toml::Spanned;

use crate::compiler::{CompileOptions, CountingConfig, Decoupling, Shots};
use crate::error::{Error, Result};
use crate::hilbert::StateVector;
use crate::monotones::{self, MonotoneSpec};
use crate::pauli::PauliSum;

const PRESETS: [(&str, &str); 5] = [
    ("fig2a", include_str!("../../presets/fig2a.toml")),
    ("fig2b", include_str!("../../presets/fig2b.toml")),
    ("fig2c", include_str!("../../presets/fig2c.toml")),
    ("fig2d", include_str!("../../presets/fig2d.toml")),
    ("costs", include_str!("../../presets/costs.toml")),
];

/// Names of the shipped presets.
pub fn preset_names() -> Vec<&'static str> {
    PRESETS.iter().map(|(n, _)| *n).collect()
}

/// Raw TOML of a shipped preset.
pub fn preset_text(name: &str) -> Result<&'static str> {
    PRESETS
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, text)| *text)
        .ok_or_else(|| {
            Error::Config(format!(
                "unknown preset '{name}' (available: {})",
                preset_names().join(", ")
            ))
        })
}

fn line_of(text: &str, offset: usize) -> usize {
    text[..offset.min(text.len())].matches('\n').count() + 1
}

fn config_error(text: &str, span: Option<Range<usize>>, message: impl std::fmt::Display) -> Error {
    match span {
        Some(span) => Error::Config(format!("line {}: {message}", line_of(text, span.start))),
        None => Error::Config(message.to_string()),
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    model: RawModel,
    time: TimeGrid,
    trotter: RawTrotter,
    #[serde(default)]
    noise: RawNoise,
    #[serde(default)]
    run: RawRun,
    #[serde(default)]
    costs: Option<toml::Value>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawModel {
    hamiltonian: Spanned<String>,
    initial_state: Spanned<RawInitial>,
    #[serde(default = "default_monotone")]
    monotone: Spanned<String>,
}

fn default_monotone() -> Spanned<String> {
    Spanned::new(0..0, "three_tangle".to_string())
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawInitial {
    Bits(String),
    Amplitudes(Vec<[f64; 2]>),
}

/// Evenly spaced sample times, endpoints included.
#[derive(Clone, Copy, Debug, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TimeGrid {
    pub start: f64,
    pub end: f64,
    pub points: usize,
}

impl TimeGrid {
    pub fn validate(&self) -> Result<()> {
        if self.points < 2
            || !self.start.is_finite()
            || !self.end.is_finite()
            || self.end <= self.start
        {
            return Err(Error::Config(format!(
                "time grid needs end > start and points >= 2, got {self:?}"
            )));
        }
        Ok(())
    }

    pub fn values(&self) -> Vec<f64> {
        let step = (self.end - self.start) / (self.points - 1) as f64;
        (0..self.points)
            .map(|i| {
                if i + 1 == self.points {
                    self.end
                } else {
                    self.start + step * i as f64
                }
            })
            .collect()
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTrotter {
    steps: usize,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawNoise {
    #[serde(default = "default_epsilons")]
    epsilon: Vec<f64>,
    #[serde(default = "default_delta0s")]
    delta0: Vec<f64>,
}

fn default_epsilons() -> Vec<f64> {
    vec![1.0]
}

fn default_delta0s() -> Vec<f64> {
    vec![0.0]
}

impl Default for RawNoise {
    fn default() -> Self {
        RawNoise {
            epsilon: default_epsilons(),
            delta0: default_delta0s(),
        }
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawShots {
    Word(String),
    Count(u64),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields, default)]
struct RawRun {
    shots: Spanned<RawShots>,
    seed: u64,
    output: Option<String>,
    workers: usize,
    count_basis_changes: bool,
    decoupling: Spanned<String>,
    noisy_readout: bool,
    mitigate: bool,
}

impl Default for RawRun {
    fn default() -> Self {
        RawRun {
            shots: Spanned::new(0..0, RawShots::Word("exact".into())),
            seed: 0,
            output: None,
            workers: 1,
            count_basis_changes: true,
            decoupling: Spanned::new(0..0, "refocus".into()),
            noisy_readout: false,
            mitigate: false,
        }
    }
}

/// A validated experiment description.
#[derive(Clone, Debug, PartialEq)]
pub struct ExperimentConfig {
    /// Simulated-space Hamiltonian.
    pub hamiltonian: PauliSum,
    pub initial_state: StateVector,
    pub monotone: MonotoneSpec,
    pub time: TimeGrid,
    pub trotter_steps: usize,
    pub epsilons: Vec<f64>,
    pub delta0s: Vec<f64>,
    pub shots: Shots,
    pub seed: u64,
    pub output: Option<PathBuf>,
    pub workers: usize,
    pub compile: CompileOptions,
    /// Readout unitaries also pass through the noise model.
    pub noisy_readout: bool,
    /// Apply the `ε^n` mitigation estimator to every setting.
    pub mitigate: bool,
}

impl ExperimentConfig {
    /// Parses TOML. Relative monotone-file paths resolve against `base_dir`.
    pub fn from_toml_str(text: &str, base_dir: Option<&Path>) -> Result<Self> {
        let raw: RawConfig =
            toml::from_str(text).map_err(|e| config_error(text, e.span(), e.message()))?;
        let _ = raw.costs;

        let h_span = raw.model.hamiltonian.span();
        let mut first_line = line_of(text, h_span.start);
        let opener = &text[h_span.start..];
        if (opener.starts_with("\"\"\"") || opener.starts_with("'''"))
            && opener[3..].starts_with(['\n', '\r'])
        {
            first_line += 1;
        }
        let hamiltonian = PauliSum::parse_at(raw.model.hamiltonian.get_ref(), first_line)
            .map_err(|e| Error::Config(e.to_string()))?;
        if hamiltonian.qubit_count() == 0 {
            return Err(config_error(text, Some(h_span), "empty Hamiltonian"));
        }
        hamiltonian
            .ensure_hermitian("Hamiltonian")
            .map_err(|e| config_error(text, Some(h_span.clone()), e))?;

        let init_span = raw.model.initial_state.span();
        let initial_state = match raw.model.initial_state.into_inner() {
            RawInitial::Bits(bits) => StateVector::from_bits(&bits),
            RawInitial::Amplitudes(amps) => StateVector::new(
                amps.iter()
                    .map(|[re, im]| Complex64::new(*re, *im))
                    .collect(),
            ),
        }
        .map_err(|e| config_error(text, Some(init_span.clone()), e))?;
        if initial_state.qubit_count() != hamiltonian.qubit_count() {
            return Err(config_error(
                text,
                Some(init_span),
                format!(
                    "initial state has {} qubits, Hamiltonian has {}",
                    initial_state.qubit_count(),
                    hamiltonian.qubit_count()
                ),
            ));
        }

        let mono_span = raw.model.monotone.span();
        let monotone = load_monotone(raw.model.monotone.get_ref(), base_dir).map_err(|e| {
            config_error(
                text,
                (!mono_span.is_empty()).then_some(mono_span.clone()),
                e,
            )
        })?;
        if monotone.qubit_count() != hamiltonian.qubit_count() {
            return Err(config_error(
                text,
                Some(mono_span),
                format!(
                    "monotone '{}' acts on {} qubits, model has {}",
                    monotone.name(),
                    monotone.qubit_count(),
                    hamiltonian.qubit_count()
                ),
            ));
        }

        raw.time.validate()?;
        if raw.trotter.steps == 0 {
            return Err(Error::Config("trotter.steps must be positive".into()));
        }
        for &e in &raw.noise.epsilon {
            if !(e > 0.0 && e <= 1.0) {
                return Err(Error::Config(format!(
                    "noise.epsilon value {e} outside (0, 1]"
                )));
            }
        }
        for &d in &raw.noise.delta0 {
            if !(0.0..=0.5).contains(&d) {
                return Err(Error::Config(format!(
                    "noise.delta0 value {d} outside [0, 0.5]"
                )));
            }
        }
        if raw.noise.epsilon.is_empty() || raw.noise.delta0.is_empty() {
            return Err(Error::Config("noise lists must not be empty".into()));
        }

        let shots_span = raw.run.shots.span();
        let shots = match raw.run.shots.into_inner() {
            RawShots::Word(w) => w.parse::<Shots>(),
            RawShots::Count(n) => n.to_string().parse::<Shots>(),
        }
        .map_err(|e| config_error(text, Some(shots_span), e))?;
        let dec_span = raw.run.decoupling.span();
        let decoupling = Decoupling::parse(raw.run.decoupling.get_ref())
            .map_err(|e| config_error(text, Some(dec_span), e))?;
        if raw.run.workers == 0 {
            return Err(Error::Config("run.workers must be at least 1".into()));
        }

        Ok(ExperimentConfig {
            hamiltonian,
            initial_state,
            monotone,
            time: raw.time,
            trotter_steps: raw.trotter.steps,
            epsilons: raw.noise.epsilon,
            delta0s: raw.noise.delta0,
            shots,
            seed: raw.run.seed,
            output: raw.run.output.map(PathBuf::from),
            workers: raw.run.workers,
            compile: CompileOptions {
                counting: CountingConfig {
                    count_basis_changes: raw.run.count_basis_changes,
                },
                decoupling,
            },
            noisy_readout: raw.run.noisy_readout,
            mitigate: raw.run.mitigate,
        })
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))?;
        Self::from_toml_str(&text, path.parent())
    }

    pub fn preset(name: &str) -> Result<Self> {
        Self::from_toml_str(preset_text(name)?, None)
    }
}

fn load_monotone(name: &str, base_dir: Option<&Path>) -> Result<MonotoneSpec> {
    if let Ok(spec) = monotones::preset(name) {
        return Ok(spec);
    }
    let path = match base_dir {
        Some(dir) if Path::new(name).is_relative() => dir.join(name),
        _ => PathBuf::from(name),
    };
    let text = std::fs::read_to_string(&path).map_err(|_| {
        Error::Config(format!(
            "monotone '{name}' is neither a preset nor a readable spec file"
        ))
    })?;
    text.parse()
}

/// Sweep for the repetition-cost report.
#[derive(Clone, Copy, Debug, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CostSweep {
    pub k: f64,
    pub epsilon: f64,
    pub delta: f64,
    pub l: usize,
    /// Inclusive qubit-count range.
    pub n_qubits: [usize; 2],
}

impl CostSweep {
    /// Reads the `[costs]` table; other tables are ignored.
    pub fn from_toml_str(text: &str) -> Result<Self> {
        #[derive(Deserialize)]
        struct Wrapper {
            costs: Option<CostSweep>,
        }
        let w: Wrapper =
            toml::from_str(text).map_err(|e| config_error(text, e.span(), e.message()))?;
        let sweep = w
            .costs
            .ok_or_else(|| Error::Config("missing [costs] table".into()))?;
        if sweep.n_qubits[0] == 0 || sweep.n_qubits[0] > sweep.n_qubits[1] {
            return Err(Error::Config(format!(
                "costs.n_qubits must be an increasing range starting at 1 or more, got {:?}",
                sweep.n_qubits
            )));
        }
        Ok(sweep)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))?;
        Self::from_toml_str(&text)
    }

    pub fn preset(name: &str) -> Result<Self> {
        Self::from_toml_str(preset_text(name)?)
    }
}
