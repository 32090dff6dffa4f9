//! Dense oracles written from textbook definitions. Nothing here calls into
//! the library's own matrix code.
#![allow(dead_code)]

use nalgebra::DMatrix;
use num_complex::Complex64;

pub type M = DMatrix<Complex64>;

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub fn pauli(ch: char) -> M {
    let (o, l, i) = (c(0.0, 0.0), c(1.0, 0.0), c(0.0, 1.0));
    match ch {
        'I' => M::from_row_slice(2, 2, &[l, o, o, l]),
        'X' => M::from_row_slice(2, 2, &[o, l, l, o]),
        'Y' => M::from_row_slice(2, 2, &[o, -i, i, o]),
        'Z' => M::from_row_slice(2, 2, &[l, o, o, -l]),
        _ => panic!("bad axis {ch}"),
    }
}

/// Qubit 0 leftmost, most significant.
pub fn string(label: &str) -> M {
    label
        .chars()
        .filter(|ch| *ch != '_')
        .fold(M::identity(1, 1), |acc, ch| acc.kronecker(&pauli(ch)))
}

/// `Σ c_k P_k` from `(c, label)` pairs.
pub fn sum(terms: &[(f64, String)]) -> M {
    let n = terms[0].1.chars().filter(|ch| *ch != '_').count();
    terms.iter().fold(M::zeros(1 << n, 1 << n), |acc, (k, l)| {
        acc + string(l) * c(*k, 0.0)
    })
}

/// Scaling and squaring with a Taylor core.
pub fn expm(a: &M) -> M {
    let norm: f64 = a.iter().map(|z| z.norm()).sum();
    let mut s = 0;
    while norm / f64::from(1u32 << s) > 0.25 {
        s += 1;
    }
    let b = a / c(f64::from(1u32 << s), 0.0);
    let dim = a.nrows();
    let mut term = M::identity(dim, dim);
    let mut out = M::identity(dim, dim);
    for k in 1..30 {
        term = &term * &b / c(k as f64, 0.0);
        out += &term;
    }
    for _ in 0..s {
        out = &out * &out;
    }
    out
}

pub fn evolve(h: &M, t: f64, psi: &[Complex64]) -> Vec<Complex64> {
    let u = expm(&(h * c(0.0, -t)));
    (&u * DMatrix::from_column_slice(psi.len(), 1, psi))
        .iter()
        .copied()
        .collect()
}

/// `[[iB, iA], [-iA, iB]]` with `A = Re H`, `B = Im H` entrywise.
pub fn enlarged(h: &M) -> M {
    let d = h.nrows();
    let mut out = M::zeros(2 * d, 2 * d);
    for r in 0..d {
        for col in 0..d {
            let a = c(h[(r, col)].re, 0.0);
            let b = c(h[(r, col)].im, 0.0);
            let i = c(0.0, 1.0);
            out[(r, col)] = i * b;
            out[(r, col + d)] = i * a;
            out[(r + d, col)] = -i * a;
            out[(r + d, col + d)] = i * b;
        }
    }
    out
}

/// `(Re ψ; Im ψ)`.
pub fn lift(psi: &[Complex64]) -> Vec<Complex64> {
    psi.iter()
        .map(|z| c(z.re, 0.0))
        .chain(psi.iter().map(|z| c(z.im, 0.0)))
        .collect()
}

/// `(1, i) ⊗ I`.
pub fn lower(big: &[Complex64]) -> Vec<Complex64> {
    let d = big.len() / 2;
    (0..d).map(|k| big[k] + c(0.0, 1.0) * big[k + d]).collect()
}

pub fn expect(op: &M, psi: &[Complex64]) -> Complex64 {
    let v = DMatrix::from_column_slice(psi.len(), 1, psi);
    (v.adjoint() * op * &v)[(0, 0)]
}

/// `<ψ|Θ|ψ*>`.
pub fn antilinear(op: &M, psi: &[Complex64]) -> Complex64 {
    let v = DMatrix::from_column_slice(psi.len(), 1, psi);
    (v.adjoint() * op * v.map(|z| z.conj()))[(0, 0)]
}

/// Sandwich `exp(-i a P) = cos a − i sin a P`.
pub fn pauli_exp(label: &str, a: f64) -> M {
    let p = string(label);
    let dim = p.nrows();
    M::identity(dim, dim) * c(a.cos(), 0.0) - p * c(0.0, a.sin())
}

/// `min_φ max|e^{iφ} U − V|` with φ from the largest entry of `V`.
pub fn phase_distance(u: &M, v: &M) -> f64 {
    let (idx, _) = v
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.norm().total_cmp(&b.1.norm()))
        .expect("non-empty");
    let phase = v.as_slice()[idx] / u.as_slice()[idx];
    let phase = phase / phase.norm();
    (u * phase - v).iter().map(|z| z.norm()).fold(0.0, f64::max)
}

pub fn norm(v: &[Complex64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

pub fn diff(a: &[Complex64], b: &[Complex64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).norm_sqr())
        .sum::<f64>()
        .sqrt()
}

/// Every label on `n` qubits, identity first.
pub fn labels(n: usize) -> Vec<String> {
    (0..4usize.pow(n as u32))
        .map(|mut code| {
            let mut s = vec!['I'; n];
            for q in (0..n).rev() {
                s[q] = ['I', 'X', 'Y', 'Z'][code % 4];
                code /= 4;
            }
            s.into_iter().collect()
        })
        .collect()
}
