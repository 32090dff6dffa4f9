use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::hilbert::{QuantumState, StateVector};
use crate::linalg::CMatrix;
use crate::pauli::{Pauli, PauliString};

/// How a subset-restricted MS gate hides the spectator ions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Decoupling {
    /// Split the MS pulse and refocus spectators; doubles the MS cost.
    #[default]
    Refocus,
    /// Shelve spectators out of the interaction; two extra pulses.
    Shelve,
}

impl Decoupling {
    pub fn as_str(self) -> &'static str {
        match self {
            Decoupling::Refocus => "refocus",
            Decoupling::Shelve => "shelve",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "refocus" => Ok(Decoupling::Refocus),
            "shelve" => Ok(Decoupling::Shelve),
            other => Err(Error::InvalidArgument(format!(
                "unknown decoupling '{other}'"
            ))),
        }
    }
}

/// Gate-counting convention for the `n` that enters the noise and
/// mitigation formulas.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CountingConfig {
    pub count_basis_changes: bool,
}

impl Default for CountingConfig {
    fn default() -> Self {
        CountingConfig {
            count_basis_changes: true,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GateKind {
    Ms,
    LocalRotation,
    BasisChange,
}

/// One native trapped-ion instruction.
#[derive(Clone, Debug, PartialEq)]
pub enum GateOp {
    /// `exp(-i (angle/4) S²)` with `S = Σ_j cos(phase) σ^x_j + sin(phase) σ^y_j`
    /// over the qubits in `mask`.
    Ms {
        mask: Vec<usize>,
        phase: f64,
        angle: f64,
        decoupling: Option<Decoupling>,
    },
    /// `exp(-i (angle/2) σ^axis_qubit)`.
    LocalRotation {
        qubit: usize,
        axis: Pauli,
        angle: f64,
    },
    /// Quarter-turn Clifford `V` on one qubit with `V σ^from V† = σ^to`.
    BasisChange {
        qubit: usize,
        from: Pauli,
        to: Pauli,
    },
}

/// Maps an angle into `(-2π, 2π]`; rotations are 4π-periodic.
pub fn wrap_angle(theta: f64) -> f64 {
    let period = 4.0 * PI;
    let mut t = theta % period;
    if t <= -2.0 * PI {
        t += period;
    } else if t > 2.0 * PI {
        t -= period;
    }
    t
}

impl GateOp {
    pub fn ms(mask: Vec<usize>, phase: f64, angle: f64) -> Result<GateOp> {
        if mask.len() < 2 {
            return Err(Error::InvalidArgument(
                "MS gate needs at least two qubits".into(),
            ));
        }
        let mut sorted = mask.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != mask.len() {
            return Err(Error::InvalidArgument("MS mask has repeated qubits".into()));
        }
        Ok(GateOp::Ms {
            mask: sorted,
            phase,
            angle: wrap_angle(angle),
            decoupling: None,
        })
    }

    pub fn rotation(qubit: usize, axis: Pauli, angle: f64) -> Result<GateOp> {
        if axis == Pauli::I {
            return Err(Error::InvalidArgument("rotation about the identity".into()));
        }
        Ok(GateOp::LocalRotation {
            qubit,
            axis,
            angle: wrap_angle(angle),
        })
    }

    pub fn basis_change(qubit: usize, from: Pauli, to: Pauli) -> Result<GateOp> {
        if from.third(to).is_none() {
            return Err(Error::InvalidArgument(format!(
                "basis change {from}->{to} needs two distinct non-identity axes"
            )));
        }
        Ok(GateOp::BasisChange { qubit, from, to })
    }

    pub fn kind(&self) -> GateKind {
        match self {
            GateOp::Ms { .. } => GateKind::Ms,
            GateOp::LocalRotation { .. } => GateKind::LocalRotation,
            GateOp::BasisChange { .. } => GateKind::BasisChange,
        }
    }

    pub fn qubits(&self) -> Vec<usize> {
        match self {
            GateOp::Ms { mask, .. } => mask.clone(),
            GateOp::LocalRotation { qubit, .. } | GateOp::BasisChange { qubit, .. } => vec![*qubit],
        }
    }

    pub fn max_qubit(&self) -> usize {
        self.qubits().into_iter().max().unwrap_or(0)
    }

    /// Single-qubit rotation equivalent `(qubit, axis, angle)` for
    /// rotations and basis changes; `None` for MS.
    pub fn as_single_qubit_rotation(&self) -> Option<(usize, Pauli, f64)> {
        match *self {
            GateOp::LocalRotation { qubit, axis, angle } => Some((qubit, axis, angle)),
            GateOp::BasisChange { qubit, from, to } => {
                let axis = from.third(to).expect("validated on construction");
                // (from, to, axis) cyclic means a +90° turn about `axis`
                let cyclic = from.product(to).0 == crate::pauli::Phase::I;
                let angle = if cyclic { PI / 2.0 } else { -PI / 2.0 };
                Some((qubit, axis, angle))
            }
            GateOp::Ms { .. } => None,
        }
    }

    /// Cost of this op under the counting convention.
    pub fn cost(&self, counting: &CountingConfig) -> usize {
        match self {
            GateOp::LocalRotation { .. } => 1,
            GateOp::BasisChange { .. } => usize::from(counting.count_basis_changes),
            GateOp::Ms { decoupling, .. } => match decoupling {
                None => 1,
                Some(Decoupling::Refocus) => 2,
                Some(Decoupling::Shelve) => 3,
            },
        }
    }

    /// The op as a global phase times an ordered product of Pauli
    /// exponentials `exp(-i angle P)`, listed in application order.
    pub fn pauli_factors(&self, n: usize) -> Result<(Complex64, Vec<(PauliString, f64)>)> {
        if self.max_qubit() >= n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: self.max_qubit() + 1,
            });
        }
        let single = |q: usize, p: Pauli| PauliString::from_sites(n, &[(q, p)]);
        match self {
            GateOp::Ms {
                mask, phase, angle, ..
            } => {
                let k = mask.len() as f64;
                let global = Complex64::from_polar(1.0, -angle * k / 4.0);
                let mut factors = Vec::new();
                if *phase != 0.0 {
                    for &q in mask {
                        factors.push((single(q, Pauli::Z)?, -phase / 2.0));
                    }
                }
                for (i, &a) in mask.iter().enumerate() {
                    for &b in &mask[i + 1..] {
                        let xx = PauliString::from_sites(n, &[(a, Pauli::X), (b, Pauli::X)])?;
                        factors.push((xx, angle / 2.0));
                    }
                }
                if *phase != 0.0 {
                    for &q in mask {
                        factors.push((single(q, Pauli::Z)?, phase / 2.0));
                    }
                }
                Ok((global, factors))
            }
            _ => {
                let (q, axis, angle) = self.as_single_qubit_rotation().expect("single-qubit op");
                Ok((
                    Complex64::new(1.0, 0.0),
                    vec![(single(q, axis)?, angle / 2.0)],
                ))
            }
        }
    }

    /// Applies the ideal unitary.
    pub fn apply<S: QuantumState>(&self, state: &mut S) -> Result<()> {
        let (global, factors) = self.pauli_factors(state.qubit_count())?;
        for (p, a) in &factors {
            state.apply_pauli_exponential(p, *a)?;
        }
        state.apply_global_phase(global);
        Ok(())
    }
}

/// An ordered, immutable instruction stream with a cached gate count.
#[derive(Clone, Debug, PartialEq)]
pub struct GateSequence {
    qubit_count: usize,
    ops: Vec<GateOp>,
    counting: CountingConfig,
    gate_count: usize,
}

impl GateSequence {
    pub fn new(qubit_count: usize, counting: CountingConfig) -> Self {
        GateSequence {
            qubit_count,
            ops: Vec::new(),
            counting,
            gate_count: 0,
        }
    }

    pub fn from_ops(
        qubit_count: usize,
        counting: CountingConfig,
        ops: Vec<GateOp>,
    ) -> Result<Self> {
        let mut seq = Self::new(qubit_count, counting);
        for op in ops {
            seq.push(op)?;
        }
        Ok(seq)
    }

    pub fn push(&mut self, op: GateOp) -> Result<()> {
        if op.max_qubit() >= self.qubit_count {
            return Err(Error::DimensionMismatch {
                expected: self.qubit_count,
                found: op.max_qubit() + 1,
            });
        }
        self.gate_count += op.cost(&self.counting);
        self.ops.push(op);
        Ok(())
    }

    pub fn extend(&mut self, other: &GateSequence) -> Result<()> {
        for op in &other.ops {
            self.push(op.clone())?;
        }
        Ok(())
    }

    pub fn qubit_count(&self) -> usize {
        self.qubit_count
    }

    pub fn ops(&self) -> &[GateOp] {
        &self.ops
    }

    pub fn counting(&self) -> CountingConfig {
        self.counting
    }

    /// Gate count `n` under the sequence's counting convention.
    pub fn gate_count(&self) -> usize {
        self.gate_count
    }

    pub fn is_empty(&self) -> bool {
        self.ops.is_empty()
    }

    pub fn count_kind(&self, kind: GateKind) -> usize {
        self.ops.iter().filter(|op| op.kind() == kind).count()
    }

    pub fn apply<S: QuantumState>(&self, state: &mut S) -> Result<()> {
        for op in &self.ops {
            op.apply(state)?;
        }
        Ok(())
    }

    /// Dense unitary of the whole sequence, column by column.
    pub fn dense_unitary(&self) -> Result<CMatrix> {
        let n = self.qubit_count;
        crate::hilbert::check_capacity("dense unitary", crate::linalg::MAX_DENSE_QUBITS, n)?;
        let d = 1usize << n;
        let mut u = CMatrix::zeros(d, d);
        for col in 0..d {
            let mut psi = StateVector::basis(n, col)?;
            self.apply(&mut psi)?;
            for (row, a) in psi.amplitudes().iter().enumerate() {
                u[(row, col)] = *a;
            }
        }
        Ok(u)
    }
}
