use std::f64::consts::FRAC_PI_4;

use rand::Rng;

use super::gate::GateSequence;
use super::ms::{compile_pauli_exponential, CompileOptions};
use crate::error::{Error, Result};
use crate::hilbert::{Estimate, QuantumState, Shots};
use crate::noise::{run_sequence, NoiseModel};
use crate::pauli::{Pauli, PauliString, Phase};

/// Evolution angle `φ` of every planned unitary `exp(-i φ G)`.
pub const PLAN_ANGLE: f64 = FRAC_PI_4;

#[derive(Clone, Debug, PartialEq)]
pub struct PlannedUnitary {
    pub generator: PauliString,
    pub circuit: GateSequence,
}

/// How to read a multi-qubit correlation off one or two qubits.
///
/// Applying the unitaries in order and measuring `observable` gives
/// `sign · <target>`.
#[derive(Clone, Debug, PartialEq)]
pub struct MeasurementPlan {
    target: PauliString,
    unitaries: Vec<PlannedUnitary>,
    observable: PauliString,
    sign: i8,
}

/// `U† X U` for `U = exp(-i π/4 G)`: `X` if they commute, else `i G X`.
pub fn conjugate_through_quarter_turn(x: &PauliString, g: &PauliString) -> Result<PauliString> {
    if x.commutes(g)? {
        return Ok(x.clone());
    }
    let gx = g.multiply(x)?;
    Ok(PauliString::with_phase(
        gx.axes().to_vec(),
        gx.phase() * Phase::I,
    ))
}

/// The two axes other than `p`, in cyclic order after `p`.
fn cyclic_pair(p: Pauli) -> (Pauli, Pauli) {
    match p {
        Pauli::X => (Pauli::Y, Pauli::Z),
        Pauli::Y => (Pauli::Z, Pauli::X),
        Pauli::Z => (Pauli::X, Pauli::Y),
        Pauli::I => unreachable!("identity has no cyclic pair"),
    }
}

fn anti(p: Pauli) -> Pauli {
    cyclic_pair(p).1
}

impl MeasurementPlan {
    /// Assembles a plan from explicit generators and checks it: every
    /// generator anticommutes with the observable, generators commute with
    /// each other, and the Heisenberg-picture observable is `±target`.
    pub fn from_parts(
        target: &PauliString,
        generators: Vec<PauliString>,
        observable: PauliString,
        options: &CompileOptions,
    ) -> Result<Self> {
        let target_sign = target
            .phase()
            .sign()
            .ok_or_else(|| Error::Planner(format!("target {target} is not Hermitian")))?;
        for (i, g) in generators.iter().enumerate() {
            if g.commutes(&observable)? {
                return Err(Error::Planner(format!(
                    "generator {g} commutes with observable {observable}"
                )));
            }
            for h in &generators[i + 1..] {
                if !g.commutes(h)? {
                    return Err(Error::Planner(format!(
                        "generators {g} and {h} anticommute"
                    )));
                }
            }
        }
        let heisenberg = heisenberg(&observable, &generators)?;
        if heisenberg.axes() != target.axes() {
            return Err(Error::Planner(format!(
                "plan yields {heisenberg}, not the target {target}"
            )));
        }
        let residual = heisenberg
            .phase()
            .sign()
            .ok_or_else(|| Error::Planner(format!("plan yields non-Hermitian {heisenberg}")))?;
        let unitaries = generators
            .into_iter()
            .map(|g| {
                let circuit = compile_pauli_exponential(&g, PLAN_ANGLE, options)?;
                Ok(PlannedUnitary {
                    generator: g,
                    circuit,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(MeasurementPlan {
            target: target.clone(),
            unitaries,
            observable,
            sign: residual * target_sign,
        })
    }

    pub fn target(&self) -> &PauliString {
        &self.target
    }

    pub fn unitaries(&self) -> &[PlannedUnitary] {
        &self.unitaries
    }

    pub fn generators(&self) -> Vec<&PauliString> {
        self.unitaries.iter().map(|u| &u.generator).collect()
    }

    pub fn observable(&self) -> &PauliString {
        &self.observable
    }

    /// `<target> = sign · <observable>` after the unitaries.
    pub fn sign(&self) -> i8 {
        self.sign
    }

    /// The measured observable pulled back through the unitaries.
    pub fn conjugated_observable(&self) -> Result<PauliString> {
        let gens: Vec<PauliString> = self.unitaries.iter().map(|u| u.generator.clone()).collect();
        heisenberg(&self.observable, &gens)
    }

    /// All planned unitaries concatenated in application order.
    pub fn readout_circuit(&self) -> Result<GateSequence> {
        let n = self.target.qubit_count();
        let counting = self
            .unitaries
            .first()
            .map(|u| u.circuit.counting())
            .unwrap_or_default();
        let mut seq = GateSequence::new(n, counting);
        for u in &self.unitaries {
            seq.extend(&u.circuit)?;
        }
        Ok(seq)
    }
}

fn heisenberg(observable: &PauliString, generators: &[PauliString]) -> Result<PauliString> {
    generators
        .iter()
        .rev()
        .try_fold(observable.clone(), |x, g| {
            conjugate_through_quarter_turn(&x, g)
        })
}

/// Plans the readout of a Hermitian Pauli-string target.
///
/// * weight 0 or 1, or weight 2 with identities present: measure directly;
/// * no identities: one unitary, single-qubit observable on the first site;
/// * identities present, odd weight: two unitaries, single-qubit observable;
/// * identities present, even weight: two unitaries, two-qubit observable.
///
/// Identity sites get `σ^y` in both generators so every MS gate spans the
/// whole register.
pub fn plan_measurement(target: &PauliString, options: &CompileOptions) -> Result<MeasurementPlan> {
    let n = target.qubit_count();
    let support = target.support();
    let w = support.len();
    let full = w == n;
    let axis = |q: usize| target.axis(q);

    if w <= 1 || (w == 2 && !full) {
        return MeasurementPlan::from_parts(target, Vec::new(), target.unsigned(), options);
    }

    if full {
        let a = support[0];
        let o_a = if axis(a) == Pauli::Z {
            Pauli::X
        } else {
            Pauli::Z
        };
        let mut g = target.unsigned().axes().to_vec();
        g[a] = o_a.third(axis(a)).expect("distinct axes");
        let observable = PauliString::from_sites(n, &[(a, o_a)])?;
        return MeasurementPlan::from_parts(target, vec![PauliString::new(g)], observable, options);
    }

    let mut g1 = vec![Pauli::Y; n];
    let mut g2 = vec![Pauli::Y; n];
    let a = support[0];
    g1[a] = anti(axis(a));
    g2[a] = anti(axis(a));
    let mut observed = vec![(a, axis(a))];
    let rest = if w.is_multiple_of(2) {
        let b = support[1];
        g1[b] = axis(b);
        g2[b] = axis(b);
        observed.push((b, axis(b)));
        &support[2..]
    } else {
        &support[1..]
    };
    for &j in rest {
        let (p, q) = cyclic_pair(axis(j));
        g1[j] = p;
        g2[j] = q;
    }
    let observable = PauliString::from_sites(n, &observed)?;
    MeasurementPlan::from_parts(
        target,
        vec![PauliString::new(g1), PauliString::new(g2)],
        observable,
        options,
    )
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PlanOutcome {
    /// Estimate of `<target>`, sign already undone, unmitigated.
    pub estimate: Estimate,
    /// Gate count of the readout unitaries.
    pub readout_gates: usize,
}

/// Runs the plan's unitaries on a copy of `state` through `noise`, then
/// measures the observable.
pub fn execute_plan<S: QuantumState, R: Rng + ?Sized>(
    state: &S,
    plan: &MeasurementPlan,
    noise: &NoiseModel,
    shots: Shots,
    rng: &mut R,
) -> Result<PlanOutcome> {
    let circuit = plan.readout_circuit()?;
    let mut work = state.clone();
    run_sequence(&mut work, &circuit, noise)?;
    let value = work.pauli_expectation(&plan.observable)?.re;
    let mut estimate = shots.estimate(value, rng)?;
    estimate.mean *= f64::from(plan.sign);
    Ok(PlanOutcome {
        estimate,
        readout_gates: circuit.gate_count(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn plan(label: &str) -> MeasurementPlan {
        plan_measurement(
            &PauliString::from_label(label).unwrap(),
            &CompileOptions::default(),
        )
        .unwrap()
    }

    #[test]
    fn single_unitary_examples() {
        let p = plan("ZYY");
        assert_eq!(
            p.generators(),
            vec![&PauliString::from_label("YYY").unwrap()]
        );
        assert_eq!(p.observable(), &PauliString::from_label("XII").unwrap());
        assert_eq!(p.sign(), 1);

        let p = plan("XYY");
        assert_eq!(
            p.generators(),
            vec![&PauliString::from_label("YYY").unwrap()]
        );
        assert_eq!(p.observable(), &PauliString::from_label("ZII").unwrap());
        assert_eq!(p.sign(), -1);

        let p = plan("YXXX");
        assert_eq!(
            p.generators(),
            vec![&PauliString::from_label("XXXX").unwrap()]
        );
        assert_eq!(p.observable(), &PauliString::from_label("ZIII").unwrap());
    }

    #[test]
    fn parity_of_observable() {
        for label in ["ZIYY", "YXXXII", "XIZ", "IXY", "ZXIYYI", "IIX", "XIIIIZ"] {
            let p = plan(label);
            let t = PauliString::from_label(label).unwrap();
            let expected = if t.weight() % 2 == 1 { 1 } else { 2 };
            assert_eq!(p.observable().weight(), expected, "{label}");
            let h = p.conjugated_observable().unwrap();
            assert_eq!(h.axes(), t.axes());
        }
    }

    #[test]
    fn identity_target_reads_one() {
        let p = plan("III");
        assert!(p.unitaries().is_empty());
        let psi = crate::hilbert::StateVector::from_bits("010").unwrap();
        let mut rng = <rand_chacha::ChaCha20Rng as rand::SeedableRng>::seed_from_u64(0);
        let out = execute_plan(&psi, &p, &NoiseModel::ideal(), Shots::Exact, &mut rng).unwrap();
        assert_eq!(out.estimate.mean, 1.0);
    }
}
