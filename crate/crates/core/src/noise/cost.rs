use crate::error::{Error, Result};

/// Inputs to the repetition-cost comparison.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CostInputs {
    /// Target standard error of one estimate.
    pub k: f64,
    /// Gate count per run.
    pub n_gates: usize,
    /// Embedding-simulator gate fidelity.
    pub epsilon: f64,
    /// One-to-one simulator gate fidelity.
    pub delta: f64,
    pub n_qubits: usize,
    /// Enlarged-space observables to estimate.
    pub l: usize,
}

impl CostInputs {
    pub fn validate(&self) -> Result<()> {
        if !(self.k > 0.0 && self.k.is_finite()) {
            return Err(Error::InvalidArgument(format!(
                "k = {} must be positive",
                self.k
            )));
        }
        for (name, f) in [("epsilon", self.epsilon), ("delta", self.delta)] {
            if !(f > 0.0 && f <= 1.0) {
                return Err(Error::InvalidArgument(format!(
                    "{name} = {f} outside (0, 1]"
                )));
            }
        }
        if self.l == 0 || self.n_qubits == 0 {
            return Err(Error::InvalidArgument(
                "l and n_qubits must be at least 1".into(),
            ));
        }
        Ok(())
    }
}

/// `N_emb = (1/(k ε^n))²`.
pub fn repetitions_embedding(k: f64, epsilon: f64, n: usize) -> f64 {
    (1.0 / (k * epsilon.powi(n as i32))).powi(2)
}

/// `N_oto = 3^N (1/(k δ^n))²`.
pub fn repetitions_tomography(k: f64, delta: f64, n: usize, n_qubits: usize) -> f64 {
    3f64.powi(n_qubits as i32) * (1.0 / (k * delta.powi(n as i32))).powi(2)
}

/// `l (δ/(√3 ε))^{2N}`, the closed form under `n = N`.
pub fn cost_ratio(inputs: &CostInputs) -> Result<f64> {
    inputs.validate()?;
    let base = inputs.delta / (3f64.sqrt() * inputs.epsilon);
    Ok(inputs.l as f64 * base.powi(2 * inputs.n_qubits as i32))
}

/// Observables needed by full tomography: `4^N − 1`.
pub fn tomography_observable_count(n_qubits: usize) -> Result<u128> {
    if n_qubits == 0 || n_qubits > 63 {
        return Err(Error::InvalidArgument(format!(
            "tomography count for {n_qubits} qubits"
        )));
    }
    Ok((1u128 << (2 * n_qubits)) - 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embedding_repetitions() {
        assert!((repetitions_embedding(0.01, 1.0, 50) - 1e4).abs() < 1e-9);
        let v = repetitions_embedding(0.01, 0.97, 30);
        assert!((v / 6.22e4 - 1.0).abs() < 1e-3, "{v}");
    }

    #[test]
    fn tomography_counts() {
        assert_eq!(tomography_observable_count(1).unwrap(), 3);
        assert_eq!(tomography_observable_count(2).unwrap(), 15);
        assert_eq!(tomography_observable_count(10).unwrap(), 1_048_575);
    }

    #[test]
    fn ratio_example() {
        let inputs = CostInputs {
            k: 0.01,
            n_gates: 10,
            epsilon: 0.97,
            delta: 0.98,
            n_qubits: 10,
            l: 2,
        };
        let r = cost_ratio(&inputs).unwrap();
        assert!(r < 1e-4 && r > 1e-5, "{r}");
    }
}
