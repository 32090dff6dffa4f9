use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;

use super::{require_hermitian_string, QuantumState};
use crate::error::{Error, Result};
use crate::pauli::PauliString;

/// Identifier written into every output that depends on sampling.
pub const RNG_ALGORITHM: &str = "chacha20-rand_chacha-0.9-seed_from_u64";

/// A sample mean with its standard error.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Estimate {
    pub mean: f64,
    pub stderr: f64,
}

impl Estimate {
    pub fn exact(value: f64) -> Self {
        Estimate {
            mean: value,
            stderr: 0.0,
        }
    }
}

/// Exact expectations or a finite number of independent repetitions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Shots {
    #[default]
    Exact,
    Count(u64),
}

impl Shots {
    /// `Exact` passes the value through; `Count` draws ±1 outcomes.
    pub fn estimate<R: Rng + ?Sized>(self, expectation: f64, rng: &mut R) -> Result<Estimate> {
        match self {
            Shots::Exact => Ok(Estimate::exact(expectation)),
            Shots::Count(0) => Err(Error::InvalidArgument("shots must be positive".into())),
            Shots::Count(n) => Ok(draw_pm_one(expectation, n, rng)),
        }
    }
}

impl std::fmt::Display for Shots {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Shots::Exact => f.write_str("exact"),
            Shots::Count(n) => write!(f, "{n}"),
        }
    }
}

impl std::str::FromStr for Shots {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "exact" => Ok(Shots::Exact),
            other => match other.parse::<u64>() {
                Ok(0) | Err(_) => Err(Error::InvalidArgument(format!(
                    "shots must be 'exact' or a positive integer, got '{other}'"
                ))),
                Ok(n) => Ok(Shots::Count(n)),
            },
        }
    }
}

/// Draws `shots` independent ±1 outcomes of a Pauli observable.
///
/// Each shot is an independent preparation, so outcomes are Bernoulli draws
/// with `p(+1) = (1 + <P>) / 2` rather than collapse simulation.
pub fn sample_observable<S: QuantumState>(
    state: &S,
    obs: &PauliString,
    shots: u64,
    seed: u64,
) -> Result<Estimate> {
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    sample_observable_with(state, obs, shots, &mut rng)
}

pub fn sample_observable_with<S: QuantumState, R: Rng + ?Sized>(
    state: &S,
    obs: &PauliString,
    shots: u64,
    rng: &mut R,
) -> Result<Estimate> {
    if shots == 0 {
        return Err(Error::InvalidArgument("shots must be positive".into()));
    }
    require_hermitian_string(obs)?;
    let exact = state.pauli_expectation(obs)?.re;
    Ok(draw_pm_one(exact, shots, rng))
}

pub(crate) fn draw_pm_one<R: Rng + ?Sized>(expectation: f64, shots: u64, rng: &mut R) -> Estimate {
    let p_plus = ((1.0 + expectation) / 2.0).clamp(0.0, 1.0);
    let plus = (0..shots).filter(|_| rng.random::<f64>() < p_plus).count() as f64;
    let n = shots as f64;
    let mean = (2.0 * plus - n) / n;
    // outcomes are ±1, so the sample second moment is exactly 1
    let variance = if shots > 1 {
        ((1.0 - mean * mean) * n / (n - 1.0)).max(0.0)
    } else {
        0.0
    };
    Estimate {
        mean,
        stderr: (variance / n).sqrt(),
    }
}
