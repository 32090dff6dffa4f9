//! Text form of a monotone spec:
//!
//! ```text
//! name: three_tangle
//! combine: abs_sum_of_squares
//! component:
//!   sign: -1
//!   1.0 * I_Y_Y
//! component:
//!   sign: 1
//!   1.0 * X_Y_Y
//! ```
//!
//! Term lines use the Pauli-sum notation and accumulate into the most
//! recent `component:`.

use std::fmt;
use std::str::FromStr;

use super::{Combine, Component, MonotoneSpec};
use crate::error::{Error, Result};
use crate::pauli::PauliSum;

impl fmt::Display for MonotoneSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "name: {}", self.name)?;
        writeln!(f, "combine: {}", self.combine.as_str())?;
        for c in &self.components {
            writeln!(f, "component:")?;
            writeln!(f, "  sign: {}", c.sign)?;
            for line in c.theta.to_string().lines() {
                writeln!(f, "  {line}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for MonotoneSpec {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut name = None;
        let mut combine = None;
        let mut components: Vec<(i8, Option<PauliSum>)> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let perr = |message: String| Error::Parse { line, message };
            if let Some((key, value)) = content.split_once(':') {
                let value = value.trim();
                match key.trim() {
                    "name" => name = Some(value.to_string()),
                    "combine" => {
                        combine = Some(Combine::parse(value).map_err(|e| perr(e.to_string()))?)
                    }
                    "component" => components.push((1, None)),
                    "sign" => {
                        let sign = match value {
                            "1" | "+1" => 1,
                            "-1" => -1,
                            other => return Err(perr(format!("sign must be ±1, got '{other}'"))),
                        };
                        components
                            .last_mut()
                            .ok_or_else(|| perr("sign outside a component".into()))?
                            .0 = sign;
                    }
                    other => return Err(perr(format!("unknown key '{other}'"))),
                }
                continue;
            }
            let term = PauliSum::parse_at(content, line)?;
            let slot = &mut components
                .last_mut()
                .ok_or_else(|| perr("term outside a component".into()))?
                .1;
            *slot = Some(match slot.take() {
                None => term,
                Some(acc) => acc.add(&term).map_err(|e| perr(e.to_string()))?,
            });
        }
        let missing = |what: &str| Error::Parse {
            line: text.lines().count().max(1),
            message: format!("missing {what}"),
        };
        let components = components
            .into_iter()
            .map(|(sign, theta)| {
                Ok(Component {
                    theta: theta.ok_or_else(|| missing("terms in component"))?,
                    sign,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        MonotoneSpec::new(
            name.ok_or_else(|| missing("'name:'"))?,
            components,
            combine.ok_or_else(|| missing("'combine:'"))?,
        )
    }
}
