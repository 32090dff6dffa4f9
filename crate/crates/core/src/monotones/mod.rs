//! Pure-state entanglement monotones of the form `|<ψ|Θ|ψ*>|` and their
//! multi-component generalizations, evaluated directly, through exact
//! enlarged-space expectations, or through the full measurement protocol.

mod eval;
mod text;

pub use eval::{
    evaluate_direct, evaluate_embedded_exact, evaluate_embedded_protocol, Preparation,
    ProtocolOptions, ProtocolResult,
};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::pauli::{Pauli, PauliString, PauliSum};

/// How component values `z_c = <ψ|Θ_c|ψ*>` become one number.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Combine {
    /// `|sign · z|`; exactly one component.
    AbsValue,
    /// `|Σ_c sign_c z_c²|`.
    AbsSumOfSquares,
}

impl Combine {
    pub fn as_str(self) -> &'static str {
        match self {
            Combine::AbsValue => "abs_value",
            Combine::AbsSumOfSquares => "abs_sum_of_squares",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "abs_value" => Ok(Combine::AbsValue),
            "abs_sum_of_squares" => Ok(Combine::AbsSumOfSquares),
            other => Err(Error::InvalidArgument(format!(
                "unknown combine rule '{other}'"
            ))),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Component {
    pub theta: PauliSum,
    pub sign: i8,
}

#[derive(Clone, Debug, PartialEq)]
pub struct MonotoneSpec {
    name: String,
    components: Vec<Component>,
    combine: Combine,
}

impl MonotoneSpec {
    pub fn new(
        name: impl Into<String>,
        components: Vec<Component>,
        combine: Combine,
    ) -> Result<Self> {
        let name = name.into();
        if components.is_empty() {
            return Err(Error::InvalidArgument(format!(
                "monotone '{name}' has no components"
            )));
        }
        if combine == Combine::AbsValue && components.len() != 1 {
            return Err(Error::InvalidArgument(
                "abs_value needs exactly one component".into(),
            ));
        }
        let n = components[0].theta.qubit_count();
        for c in &components {
            if c.theta.qubit_count() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: c.theta.qubit_count(),
                });
            }
            if c.sign != 1 && c.sign != -1 {
                return Err(Error::InvalidArgument(format!("sign {} is not ±1", c.sign)));
            }
            c.theta.ensure_hermitian("Θ")?;
        }
        Ok(MonotoneSpec {
            name,
            components,
            combine,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn combine(&self) -> Combine {
        self.combine
    }

    /// Simulated-space qubit count.
    pub fn qubit_count(&self) -> usize {
        self.components[0].theta.qubit_count()
    }

    /// `S = Σ_c sign_c h(z_c)` with `h` the identity or the square.
    pub fn inner_sum(&self, values: &[Complex64]) -> Result<Complex64> {
        if values.len() != self.components.len() {
            return Err(Error::InvalidArgument(format!(
                "{} component values for {} components",
                values.len(),
                self.components.len()
            )));
        }
        Ok(self
            .components
            .iter()
            .zip(values)
            .map(|(c, z)| {
                let h = match self.combine {
                    Combine::AbsValue => *z,
                    Combine::AbsSumOfSquares => z * z,
                };
                h * f64::from(c.sign)
            })
            .sum())
    }

    pub fn combine_values(&self, values: &[Complex64]) -> Result<f64> {
        Ok(self.inner_sum(values)?.norm())
    }

    /// Enlarged-space strings measured for this monotone: `σ^z⊗P` and
    /// `σ^x⊗P` for every term `P` of every component, deduplicated.
    pub fn enlarged_targets(&self) -> Vec<PauliString> {
        let mut out: Vec<PauliString> = Vec::new();
        for c in &self.components {
            for (_, p) in c.theta.terms() {
                for a in [Pauli::Z, Pauli::X] {
                    let t = p.prepend(a);
                    if !out.contains(&t) {
                        out.push(t);
                    }
                }
            }
        }
        out
    }

    /// The monotone written in enlarged-space expectations, e.g.
    /// `|-<Z_I_Y_Y - i X_I_Y_Y>^2 + ...|`.
    pub fn enlarged_expression(&self) -> String {
        let power = match self.combine {
            Combine::AbsValue => "",
            Combine::AbsSumOfSquares => "^2",
        };
        let mut out = String::from("|");
        for (i, c) in self.components.iter().enumerate() {
            match (i, c.sign) {
                (0, -1) => out.push('-'),
                (0, _) => {}
                (_, -1) => out.push_str(" - "),
                _ => out.push_str(" + "),
            }
            let inner: Vec<String> = c
                .theta
                .terms()
                .iter()
                .map(|(coef, p)| {
                    let scale = if coef.re == 1.0 {
                        String::new()
                    } else {
                        format!("{:?} ", coef.re)
                    };
                    format!(
                        "{scale}{} - i {scale}{}",
                        p.prepend(Pauli::Z),
                        p.prepend(Pauli::X)
                    )
                })
                .collect();
            out.push_str(&format!("<{}>{power}", inner.join(" + ")));
        }
        out.push('|');
        out
    }
}

/// Two-qubit concurrence, `Θ = σ^y⊗σ^y`.
pub fn concurrence_spec() -> MonotoneSpec {
    let theta = PauliSum::from_real_labels(&[(1.0, "YY")]).expect("valid label");
    MonotoneSpec::new(
        "concurrence",
        vec![Component { theta, sign: 1 }],
        Combine::AbsValue,
    )
    .expect("valid spec")
}

/// Three-tangle as `|−z_{IYY}² + z_{XYY}² + z_{ZYY}²|`.
pub fn three_tangle_spec() -> MonotoneSpec {
    let comp = |label: &str, sign: i8| Component {
        theta: PauliSum::from_real_labels(&[(1.0, label)]).expect("valid label"),
        sign,
    };
    MonotoneSpec::new(
        "three_tangle",
        vec![comp("IYY", -1), comp("XYY", 1), comp("ZYY", 1)],
        Combine::AbsSumOfSquares,
    )
    .expect("valid spec")
}

/// Shipped specs by name.
pub fn preset(name: &str) -> Result<MonotoneSpec> {
    match name {
        "concurrence" => Ok(concurrence_spec()),
        "three_tangle" | "tau3" => Ok(three_tangle_spec()),
        other => Err(Error::InvalidArgument(format!(
            "unknown monotone preset '{other}'"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tangle_expression_matches_the_displayed_formula() {
        // transcribed from the published expression, σ_a ⊗ ... as A_..._
        let published =
            "|-<Z_I_Y_Y - i X_I_Y_Y>^2 + <Z_X_Y_Y - i X_X_Y_Y>^2 + <Z_Z_Y_Y - i X_Z_Y_Y>^2|";
        assert_eq!(three_tangle_spec().enlarged_expression(), published);
    }

    #[test]
    fn target_count() {
        assert_eq!(concurrence_spec().enlarged_targets().len(), 2);
        assert_eq!(three_tangle_spec().enlarged_targets().len(), 6);
    }

    #[test]
    fn validation() {
        let theta = PauliSum::from_real_labels(&[(1.0, "YY")]).unwrap();
        let c = Component { theta, sign: 1 };
        assert!(MonotoneSpec::new("x", vec![c.clone(), c.clone()], Combine::AbsValue).is_err());
        assert!(MonotoneSpec::new("x", vec![], Combine::AbsSumOfSquares).is_err());
        let bad = Component {
            theta: c.theta.scale(Complex64::new(0.0, 1.0)),
            sign: 1,
        };
        assert!(MonotoneSpec::new("x", vec![bad], Combine::AbsValue).is_err());
    }
}
