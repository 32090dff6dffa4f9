//! CSV writers. Floats carry 17 significant digits; each file opens with
//! `#` lines naming the format version and the RNG.

use std::io::Write;

use super::costs::CostRow;
use super::sweep::{CurvePoint, Distortion};
use crate::error::{Error, Result};
use crate::hilbert::RNG_ALGORITHM;

pub const FORMAT_VERSION: u32 = 1;

pub fn float(x: f64) -> String {
    format!("{x:.16e}")
}

fn csv_error(e: csv::Error) -> Error {
    Error::Io(e.to_string())
}

fn preamble<W: Write>(out: &mut W, kind: &str, meta: &[(&str, String)]) -> Result<()> {
    write!(
        out,
        "# eqsim {kind} format={FORMAT_VERSION} rng={RNG_ALGORITHM}"
    )?;
    for (k, v) in meta {
        write!(out, " {k}={v}")?;
    }
    writeln!(out)?;
    Ok(())
}

fn write_rows<W: Write>(
    out: W,
    header: &[&str],
    rows: impl Iterator<Item = Vec<String>>,
) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(header).map_err(csv_error)?;
    for row in rows {
        w.write_record(&row).map_err(csv_error)?;
    }
    w.flush()?;
    Ok(())
}

pub const CURVE_HEADER: [&str; 8] = [
    "t",
    "epsilon",
    "delta0",
    "trotter_steps",
    "value",
    "stderr",
    "ideal_value",
    "n_gates",
];

pub fn write_curve<W: Write>(
    mut out: W,
    kind: &str,
    meta: &[(&str, String)],
    rows: &[CurvePoint],
) -> Result<()> {
    preamble(&mut out, kind, meta)?;
    write_rows(
        out,
        &CURVE_HEADER,
        rows.iter().map(|r| {
            vec![
                float(r.t),
                float(r.epsilon),
                float(r.delta0),
                r.trotter_steps.to_string(),
                float(r.value),
                float(r.stderr),
                float(r.ideal_value),
                r.n_gates.to_string(),
            ]
        }),
    )
}

pub const DISTORTION_HEADER: [&str; 5] =
    ["epsilon", "delta0", "trotter_steps", "scale", "distortion"];

pub fn write_distortion<W: Write>(
    mut out: W,
    meta: &[(&str, String)],
    rows: &[Distortion],
) -> Result<()> {
    preamble(&mut out, "distortion", meta)?;
    write_rows(
        out,
        &DISTORTION_HEADER,
        rows.iter().map(|d| {
            vec![
                float(d.epsilon),
                float(d.delta0),
                d.trotter_steps.to_string(),
                float(d.scale),
                float(d.distance),
            ]
        }),
    )
}

pub const COST_HEADER: [&str; 12] = [
    "n_qubits",
    "l",
    "k",
    "epsilon",
    "delta",
    "n_gates",
    "N_emb",
    "N_oto",
    "ratio",
    "tomography_observables",
    "embedding_observables",
    "below_one",
];

pub fn write_costs<W: Write>(mut out: W, meta: &[(&str, String)], rows: &[CostRow]) -> Result<()> {
    preamble(&mut out, "costs", meta)?;
    write_rows(
        out,
        &COST_HEADER,
        rows.iter().map(|r| {
            vec![
                r.inputs.n_qubits.to_string(),
                r.inputs.l.to_string(),
                float(r.inputs.k),
                float(r.inputs.epsilon),
                float(r.inputs.delta),
                r.inputs.n_gates.to_string(),
                float(r.n_emb),
                float(r.n_oto),
                float(r.ratio),
                r.tomography_observables.to_string(),
                r.inputs.l.to_string(),
                r.below_one().to_string(),
            ]
        }),
    )
}
