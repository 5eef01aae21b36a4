//! Fixtures and independent oracles shared by the integration tests.
#![allow(dead_code)]

use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, FRAC_PI_4, FRAC_PI_6, PI};

use cfsm::{CandidateSignal, ComplexFuzzyMatrix, ComplexValue, MagnitudeMatrix};
use num_complex::Complex64;

pub fn fixture_path(name: &str) -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

/// 3×3 operands of the fuzzy addition / max-min product example.
pub fn complex_a() -> ComplexFuzzyMatrix {
    ComplexFuzzyMatrix::from_polar_rows(&[
        vec![(0.6, FRAC_PI_2), (0.4, FRAC_PI_2), (0.1, 0.0)],
        vec![(0.0, 0.0), (0.1, PI), (0.3, FRAC_PI_4)],
        vec![(1.0, 0.0), (0.2, FRAC_PI_3), (0.0, 0.0)],
    ])
    .unwrap()
}

pub fn complex_b() -> ComplexFuzzyMatrix {
    ComplexFuzzyMatrix::from_polar_rows(&[
        vec![(0.1, FRAC_PI_6), (0.2, PI), (0.5, 0.0)],
        vec![(0.8, 0.0), (0.4, FRAC_PI_4), (0.7, PI)],
        vec![(0.3, FRAC_PI_4), (0.0, 0.0), (1.0, PI)],
    ])
    .unwrap()
}

/// Printed A+B: (amplitude, phase) per entry.
pub const PRINTED_SUM: [[(f64, f64); 3]; 3] = [
    [(0.6, FRAC_PI_2), (0.4, FRAC_PI_2), (0.5, 0.0)],
    [(0.8, 0.0), (0.4, FRAC_PI_4), (0.7, PI)],
    [(1.0, FRAC_PI_4), (0.2, FRAC_PI_3), (1.0, PI)],
];

/// Printed AB.
pub const PRINTED_PRODUCT: [[(f64, f64); 3]; 3] = [
    [(0.4, FRAC_PI_2), (0.4, FRAC_PI_2), (0.5, 0.0)],
    [(0.3, 0.0), (0.1, FRAC_PI_4), (0.3, PI)],
    [(0.2, FRAC_PI_4), (0.2, FRAC_PI_3), (0.5, PI)],
];

/// Zero-based entries of the printed A+B whose phase agrees with max-amplitude/max-phase.
pub const SUM_PHASE_CONSISTENT: [(usize, usize); 7] = [(0, 0), (0, 2), (1, 0), (1, 2), (2, 0), (2, 1), (2, 2)];

/// Zero-based entries of the printed AB whose phase agrees with the componentwise rule.
pub const PRODUCT_PHASE_CONSISTENT: [(usize, usize); 3] = [(0, 1), (1, 1), (1, 2)];

pub fn soft_a() -> MagnitudeMatrix {
    MagnitudeMatrix::from_rows(vec![
        vec![0.1, 0.4, 0.0, 0.2],
        vec![0.2, 0.6, 0.0, 0.3],
        vec![0.7, 0.2, 0.0, 0.5],
        vec![0.4, 0.3, 0.0, 0.9],
    ])
    .unwrap()
}

pub fn soft_b() -> MagnitudeMatrix {
    MagnitudeMatrix::from_rows(vec![
        vec![0.2, 0.4, 0.0, 0.1],
        vec![0.3, 0.7, 0.0, 0.2],
        vec![0.8, 0.8, 0.0, 0.4],
        vec![0.5, 0.3, 0.0, 0.7],
    ])
    .unwrap()
}

pub const PRINTED_COMPLEMENT: [[f64; 4]; 4] = [
    [0.9, 0.6, 1.0, 0.8],
    [0.8, 0.4, 1.0, 0.7],
    [0.3, 0.8, 1.0, 0.5],
    [0.6, 0.7, 1.0, 0.1],
];

pub const PRINTED_UNION: [[f64; 4]; 4] = [
    [0.2, 0.4, 0.0, 0.2],
    [0.3, 0.7, 0.0, 0.3],
    [0.8, 0.8, 0.0, 0.5],
    [0.5, 0.3, 0.0, 0.9],
];

pub const PRINTED_INTERSECTION: [[f64; 4]; 4] = [
    [0.1, 0.4, 0.0, 0.1],
    [0.2, 0.6, 0.0, 0.2],
    [0.7, 0.2, 0.0, 0.4],
    [0.4, 0.3, 0.0, 0.7],
];

/// Samples × signals magnitude matrices of the max-min decision example.
pub fn decision_a() -> MagnitudeMatrix {
    MagnitudeMatrix::from_rows(vec![
        vec![0.1, 0.0, 0.3, 0.3],
        vec![0.3, 0.0, 0.2, 0.1],
        vec![0.2, 0.0, 0.3, 0.2],
        vec![0.3, 0.0, 0.1, 0.3],
    ])
    .unwrap()
}

pub fn decision_b() -> MagnitudeMatrix {
    MagnitudeMatrix::from_rows(vec![
        vec![0.0, 0.2, 0.1, 0.4],
        vec![0.0, 0.1, 0.3, 0.3],
        vec![0.0, 0.4, 0.1, 0.2],
        vec![0.0, 0.3, 0.2, 0.1],
    ])
    .unwrap()
}

/// The printed usual product A∗B, as published.
pub const PRINTED_DECISION_PRODUCT: [[f64; 4]; 4] = [
    [0.00, 0.23, 0.01, 0.13],
    [0.00, 0.17, 0.07, 0.17],
    [0.00, 0.22, 0.09, 0.18],
    [0.00, 0.19, 0.10, 0.18],
];

pub const SIGNAL_LABELS: [&str; 4] = ["ν1", "ν2", "ν3", "ν4"];

pub fn reference_signal() -> CandidateSignal {
    CandidateSignal::from_amplitudes("r", vec![vec![0.1, 0.9], vec![0.6, 0.5]]).unwrap()
}

pub fn candidate_x1() -> CandidateSignal {
    CandidateSignal::from_amplitudes("x1", vec![vec![0.7, 0.4], vec![1.0, 0.3]]).unwrap()
}

pub fn candidate_x2() -> CandidateSignal {
    CandidateSignal::from_amplitudes("x2", vec![vec![0.9, 0.6], vec![0.8, 0.1]]).unwrap()
}

// ---- oracles ----

/// Definition-literal DFT, summing from the last index down.
pub fn oracle_dft(x: &[ComplexValue]) -> Vec<ComplexValue> {
    let n_len = x.len();
    (0..n_len)
        .map(|k| {
            let mut acc = Complex64::new(0.0, 0.0);
            for n in (0..n_len).rev() {
                let angle = -2.0 * PI * (k as f64) * (n as f64) / n_len as f64;
                acc += x[n] * Complex64::new(angle.cos(), angle.sin());
            }
            acc
        })
        .collect()
}

/// Definition-literal inverse DFT, summing from the last index down.
pub fn oracle_idft(spectrum: &[ComplexValue]) -> Vec<ComplexValue> {
    let n_len = spectrum.len();
    (0..n_len)
        .map(|n| {
            let mut acc = Complex64::new(0.0, 0.0);
            for k in (0..n_len).rev() {
                let angle = 2.0 * PI * (k as f64) * (n as f64) / n_len as f64;
                acc += spectrum[k] * Complex64::new(angle.cos(), angle.sin());
            }
            acc / n_len as f64
        })
        .collect()
}

/// Triple-loop sum of products on plain row vectors.
pub fn oracle_usual_product(a: &[Vec<f64>], b: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let mut out = vec![vec![0.0; b[0].len()]; a.len()];
    for i in 0..a.len() {
        for j in 0..b[0].len() {
            let mut s = 0.0;
            for k in 0..b.len() {
                s += a[i][k] * b[k][j];
            }
            out[i][j] = s;
        }
    }
    out
}

/// Exhaustive column scan.
pub fn oracle_column_min(m: &[Vec<f64>]) -> Vec<f64> {
    let mut out = Vec::new();
    for j in 0..m[0].len() {
        let mut best = m[0][j];
        for row in m {
            if row[j] < best {
                best = row[j];
            }
        }
        out.push(best);
    }
    out
}

/// Block products written straight from `c_{i,p}` with `p = n(j−1)+k`, 1-based.
pub fn oracle_block_product(a: &[Vec<f64>], b: &[Vec<f64>], f: impl Fn(f64, f64) -> f64) -> Vec<Vec<f64>> {
    let n = a[0].len();
    let mut out = vec![vec![f64::NAN; n * n]; a.len()];
    for i in 1..=a.len() {
        for j in 1..=n {
            for k in 1..=n {
                let p = n * (j - 1) + k;
                out[i - 1][p - 1] = f(a[i - 1][j - 1], b[i - 1][k - 1]);
            }
        }
    }
    out
}

pub fn max_abs_diff(a: &[Vec<f64>], b: &[Vec<f64>]) -> f64 {
    a.iter()
        .flatten()
        .zip(b.iter().flatten())
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}
