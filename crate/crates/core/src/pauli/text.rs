//! Textual Pauli-sum notation: one `coeff * AXIS_AXIS_..._AXIS` term per
//! line (or `;`-separated), qubit 0 leftmost. Real coefficients print in the
//! shortest round-trip form, complex ones as `(re,im)`.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use super::{PauliString, PauliSum};
use crate::error::{Error, Result};

pub(crate) fn format_coefficient(c: Complex64) -> String {
    if c.im == 0.0 {
        format!("{:?}", c.re)
    } else {
        format!("({:?},{:?})", c.re, c.im)
    }
}

fn parse_real(s: &str, line: usize) -> Result<f64> {
    s.trim().parse::<f64>().map_err(|_| Error::Parse {
        line,
        message: format!("invalid coefficient '{}'", s.trim()),
    })
}

fn parse_coefficient(s: &str, line: usize) -> Result<Complex64> {
    let s = s.trim();
    if let Some(inner) = s.strip_prefix('(').and_then(|r| r.strip_suffix(')')) {
        let (re, im) = inner.split_once(',').ok_or_else(|| Error::Parse {
            line,
            message: format!("complex coefficient '{s}' must be '(re,im)'"),
        })?;
        Ok(Complex64::new(parse_real(re, line)?, parse_real(im, line)?))
    } else {
        Ok(Complex64::new(parse_real(s, line)?, 0.0))
    }
}

impl PauliSum {
    /// Parses the textual notation; `first_line` offsets reported line
    /// numbers when the text is embedded in a larger file.
    pub fn parse_at(text: &str, first_line: usize) -> Result<PauliSum> {
        let mut terms = Vec::new();
        let mut width: Option<usize> = None;
        for (idx, raw) in text.lines().enumerate() {
            let line = first_line + idx;
            let content = raw.split('#').next().unwrap_or("");
            for chunk in content.split(';') {
                let chunk = chunk.trim();
                if chunk.is_empty() {
                    continue;
                }
                let (coeff, label) = chunk.rsplit_once('*').ok_or_else(|| Error::Parse {
                    line,
                    message: format!("term '{chunk}' must look like 'coeff * AXES'"),
                })?;
                let c = parse_coefficient(coeff, line)?;
                let s = PauliString::from_label(label.trim()).map_err(|e| match e {
                    Error::Parse { message, .. } => Error::Parse { line, message },
                    other => other,
                })?;
                match width {
                    None => width = Some(s.qubit_count()),
                    Some(w) if w != s.qubit_count() => {
                        return Err(Error::Parse {
                            line,
                            message: format!(
                                "term acts on {} qubits, earlier terms on {w}",
                                s.qubit_count()
                            ),
                        })
                    }
                    _ => {}
                }
                terms.push((c, s));
            }
        }
        let n = width.ok_or(Error::Parse {
            line: first_line,
            message: "no terms found".into(),
        })?;
        PauliSum::from_terms(n, terms)
    }
}

impl FromStr for PauliSum {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        PauliSum::parse_at(s, 1)
    }
}

impl fmt::Display for PauliSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            let zero = PauliString::identity(self.qubit_count());
            return write!(f, "0.0 * {zero}");
        }
        for (k, (c, s)) in self.terms().iter().enumerate() {
            if k > 0 {
                f.write_str("\n")?;
            }
            write!(f, "{} * {}", format_coefficient(*c), s)?;
        }
        Ok(())
    }
}
