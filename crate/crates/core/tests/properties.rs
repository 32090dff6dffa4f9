mod common;

use common::*;
use eqsim::compiler::{compile_pauli_exponential, parse_sequence, CompileOptions, Decoupling};
use eqsim::embedding::{antilinear_expectation, embed_state};
use eqsim::hilbert::{DensityMatrix, QuantumState, StateVector};
use eqsim::monotones::{concurrence_spec, three_tangle_spec, MonotoneSpec};
use eqsim::pauli::{embed_hamiltonian, PauliString, PauliSum};
use proptest::prelude::*;

fn label(max: usize) -> impl Strategy<Value = String> {
    (1..=max)
        .prop_flat_map(|n| {
            proptest::collection::vec(prop::sample::select(vec!['I', 'X', 'Y', 'Z']), n)
        })
        .prop_map(|v| v.into_iter().collect())
}

fn pair(max: usize) -> impl Strategy<Value = (String, String)> {
    (1..=max).prop_flat_map(|n| {
        let axis = || proptest::collection::vec(prop::sample::select(vec!['I', 'X', 'Y', 'Z']), n);
        (axis(), axis()).prop_map(|(a, b)| (a.into_iter().collect(), b.into_iter().collect()))
    })
}

fn hamiltonian(n: usize) -> impl Strategy<Value = Vec<(f64, String)>> {
    proptest::collection::vec(
        (
            -2.0..2.0f64,
            proptest::collection::vec(prop::sample::select(vec!['I', 'X', 'Y', 'Z']), n)
                .prop_map(|v| v.into_iter().collect::<String>()),
        ),
        1..5,
    )
}

fn amplitudes(n: usize) -> impl Strategy<Value = Vec<num_complex::Complex64>> {
    proptest::collection::vec((-1.0..1.0f64, -1.0..1.0f64), 1 << n).prop_filter_map(
        "zero vector",
        |v| {
            let v: Vec<_> = v.into_iter().map(|(a, b)| c(a, b)).collect();
            let nrm = norm(&v);
            (nrm > 1e-3).then(|| v.into_iter().map(|z| z / nrm).collect())
        },
    )
}

fn to_sum(terms: &[(f64, String)]) -> PauliSum {
    let refs: Vec<(f64, &str)> = terms.iter().map(|(k, l)| (*k, l.as_str())).collect();
    PauliSum::from_real_labels(&refs).unwrap()
}

fn dist(a: &M, b: &M) -> f64 {
    (a - b).iter().map(|z| z.norm()).fold(0.0, f64::max)
}

proptest! {
    #[test]
    fn product_matches_dense((a, b) in pair(4)) {
        let pa = PauliString::from_label(&a).unwrap();
        let pb = PauliString::from_label(&b).unwrap();
        let prod = pa.multiply(&pb).unwrap();
        let want = string(&a) * string(&b);
        let got = string(&prod.unsigned().to_string()) * prod.phase().to_complex();
        prop_assert!(dist(&got, &want) < 1e-14);
    }

    #[test]
    fn commutation_matches_dense((a, b) in pair(4)) {
        let pa = PauliString::from_label(&a).unwrap();
        let pb = PauliString::from_label(&b).unwrap();
        let comm = string(&a) * string(&b) - string(&b) * string(&a);
        let zero = comm.iter().all(|z| z.norm() < 1e-14);
        prop_assert_eq!(pa.commutes(&pb).unwrap(), zero);
    }

    #[test]
    fn sum_text_round_trips(terms in hamiltonian(3)) {
        let h = to_sum(&terms);
        let text = h.to_string();
        let back: PauliSum = text.parse().unwrap();
        prop_assert_eq!(back.to_string(), text);
    }

    #[test]
    fn embedded_hamiltonian_matches_block_form(terms in hamiltonian(3)) {
        let big = embed_hamiltonian(&to_sum(&terms)).unwrap();
        prop_assert!(dist(&big.to_dense(), &enlarged(&sum(&terms))) < 1e-13);
    }

    #[test]
    fn antilinear_identity(psi in amplitudes(3), terms in hamiltonian(3)) {
        let want = antilinear(&sum(&terms), &psi);
        let big = embed_state(&StateVector::new(psi).unwrap()).unwrap();
        let got = antilinear_expectation(&big, &to_sum(&terms)).unwrap();
        prop_assert!((got - want).norm() < 1e-12);
    }

    #[test]
    fn compiled_exponential_matches_dense(l in label(5), angle in -3.0..3.0f64, shelve in any::<bool>()) {
        prop_assume!(l.chars().any(|ch| ch != 'I'));
        let options = CompileOptions {
            decoupling: if shelve { Decoupling::Shelve } else { Decoupling::Refocus },
            ..Default::default()
        };
        let seq = compile_pauli_exponential(&PauliString::from_label(&l).unwrap(), angle, &options).unwrap();
        prop_assert!(phase_distance(&seq.dense_unitary().unwrap(), &pauli_exp(&l, angle)) < 1e-10);
    }

    #[test]
    fn sequence_dump_round_trips(l in label(4), angle in -3.0..3.0f64) {
        prop_assume!(l.chars().any(|ch| ch != 'I'));
        let seq = compile_pauli_exponential(&PauliString::from_label(&l).unwrap(), angle, &CompileOptions::default()).unwrap();
        let back = parse_sequence(&seq.to_string()).unwrap();
        prop_assert_eq!(back, seq);
    }

    #[test]
    fn depolarizing_contracts_traceless(psi in amplitudes(2), eps in 0.5..1.0f64, l in label(2)) {
        prop_assume!(l.len() == 2 && l != "II");
        let p = PauliString::from_label(&l).unwrap();
        let mut rho = DensityMatrix::from_pure(&StateVector::new(psi).unwrap()).unwrap();
        let before = rho.pauli_expectation(&p).unwrap();
        rho.depolarize(eps).unwrap();
        prop_assert!((rho.pauli_expectation(&p).unwrap() - before * eps).norm() < 1e-14);
    }
}

#[test]
fn monotone_presets_round_trip() {
    for spec in [concurrence_spec(), three_tangle_spec()] {
        let back: MonotoneSpec = spec.to_string().parse().unwrap();
        assert_eq!(back, spec);
    }
}
