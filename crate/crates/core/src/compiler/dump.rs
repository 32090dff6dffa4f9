//! One-op-per-line text form of a gate sequence.
//!
//! ```text
//! # qubits=4 count_basis_changes=true
//! BC q=0 from=y to=z
//! MS mask=0,1,2,3 axis=0.0 angle=1.5707963267948966
//! RY q=0 angle=-0.4
//! ```
//!
//! Floats use the shortest representation that parses back bit-exactly.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use super::gate::{CountingConfig, Decoupling, GateOp, GateSequence};
use crate::error::{Error, Result};
use crate::pauli::Pauli;

fn axis_letter(p: Pauli) -> char {
    p.as_char().to_ascii_lowercase()
}

impl fmt::Display for GateOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GateOp::Ms {
                mask,
                phase,
                angle,
                decoupling,
            } => {
                let mask: Vec<String> = mask.iter().map(|q| q.to_string()).collect();
                write!(
                    f,
                    "MS mask={} axis={phase:?} angle={angle:?}",
                    mask.join(",")
                )?;
                if let Some(d) = decoupling {
                    write!(f, " decoupling={}", d.as_str())?;
                }
                Ok(())
            }
            GateOp::LocalRotation { qubit, axis, angle } => {
                write!(f, "R{} q={qubit} angle={angle:?}", axis.as_char())
            }
            GateOp::BasisChange { qubit, from, to } => write!(
                f,
                "BC q={qubit} from={} to={}",
                axis_letter(*from),
                axis_letter(*to)
            ),
        }
    }
}

impl fmt::Display for GateSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "# qubits={} count_basis_changes={}",
            self.qubit_count(),
            self.counting().count_basis_changes
        )?;
        for op in self.ops() {
            writeln!(f, "{op}")?;
        }
        Ok(())
    }
}

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn fields(rest: &str, line: usize) -> Result<HashMap<&str, &str>> {
    rest.split_whitespace()
        .map(|kv| {
            kv.split_once('=')
                .ok_or_else(|| parse_error(line, format!("expected key=value, got '{kv}'")))
        })
        .collect()
}

fn get<'a>(map: &HashMap<&str, &'a str>, key: &str, line: usize) -> Result<&'a str> {
    map.get(key)
        .copied()
        .ok_or_else(|| parse_error(line, format!("missing '{key}'")))
}

fn number<T: FromStr>(s: &str, line: usize) -> Result<T> {
    s.parse()
        .map_err(|_| parse_error(line, format!("invalid number '{s}'")))
}

fn axis(s: &str, line: usize) -> Result<Pauli> {
    let mut chars = s.chars();
    match (
        chars
            .next()
            .and_then(|c| Pauli::from_char(c.to_ascii_uppercase())),
        chars.next(),
    ) {
        (Some(p), None) if p != Pauli::I => Ok(p),
        _ => Err(parse_error(line, format!("invalid axis '{s}'"))),
    }
}

fn parse_op(text: &str, line: usize) -> Result<GateOp> {
    let (head, rest) = text.split_once(char::is_whitespace).unwrap_or((text, ""));
    let map = fields(rest, line)?;
    let op = match head {
        "MS" => {
            let mask = get(&map, "mask", line)?
                .split(',')
                .map(|q| number::<usize>(q, line))
                .collect::<Result<Vec<_>>>()?;
            let phase = number(get(&map, "axis", line)?, line)?;
            let angle = number(get(&map, "angle", line)?, line)?;
            let mut op = GateOp::ms(mask, phase, angle)?;
            if let Some(d) = map.get("decoupling") {
                let parsed = Decoupling::parse(d).map_err(|e| parse_error(line, e.to_string()))?;
                if let GateOp::Ms { decoupling, .. } = &mut op {
                    *decoupling = Some(parsed);
                }
            }
            op
        }
        "BC" => GateOp::basis_change(
            number(get(&map, "q", line)?, line)?,
            axis(get(&map, "from", line)?, line)?,
            axis(get(&map, "to", line)?, line)?,
        )?,
        r if r.len() == 2 && r.starts_with('R') => GateOp::rotation(
            number(get(&map, "q", line)?, line)?,
            axis(&r[1..], line)?,
            number(get(&map, "angle", line)?, line)?,
        )?,
        other => return Err(parse_error(line, format!("unknown op '{other}'"))),
    };
    Ok(op)
}

/// Parses the text dump. The `# qubits=` header is required.
pub fn parse_sequence(text: &str) -> Result<GateSequence> {
    let mut seq: Option<GateSequence> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() {
            continue;
        }
        if let Some(comment) = trimmed.strip_prefix('#') {
            let map = fields(comment, line).unwrap_or_default();
            if let Some(q) = map.get("qubits") {
                if seq.is_some() {
                    return Err(parse_error(line, "repeated header"));
                }
                let counting = CountingConfig {
                    count_basis_changes: map
                        .get("count_basis_changes")
                        .map(|v| number::<bool>(v, line))
                        .transpose()?
                        .unwrap_or(true),
                };
                seq = Some(GateSequence::new(number(q, line)?, counting));
            }
            continue;
        }
        let s = seq
            .as_mut()
            .ok_or_else(|| parse_error(line, "gate before '# qubits=' header"))?;
        parse_op(trimmed, line)
            .and_then(|op| s.push(op))
            .map_err(|e| match e {
                Error::Parse { .. } => e,
                other => parse_error(line, other.to_string()),
            })?;
    }
    seq.ok_or_else(|| parse_error(1, "missing '# qubits=' header"))
}

impl FromStr for GateSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_sequence(s)
    }
}
