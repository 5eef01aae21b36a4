//! Discrete Fourier transform pair and the expansion of amplitude-restricted
//! spectra into per-sample term lists.
//!
//! Forward kernel `e^{-i2πkn/N}`, inverse kernel `e^{+i2πkn/N}` with the `1/N`
//! scale on the inverse. Evaluation is the direct O(N²) sum.

use std::f64::consts::TAU;

use num_complex::Complex64;

use crate::complex_fuzzy::{ComplexFuzzyNumber, ComplexValue};
use crate::error::{Error, Result};

// Angle 2π·(kn mod N)/N, reduced before scaling so large products stay exact.
fn kernel_angle(k: usize, n: usize, big_n: usize) -> f64 {
    TAU * ((k * n) % big_n) as f64 / big_n as f64
}

fn transform(input: &[ComplexValue], sign: f64) -> Result<Vec<ComplexValue>> {
    let big_n = input.len();
    if big_n == 0 {
        return Err(Error::Argument("transform of an empty sequence".into()));
    }
    Ok((0..big_n)
        .map(|k| {
            input
                .iter()
                .enumerate()
                .map(|(n, &x)| x * Complex64::from_polar(1.0, sign * kernel_angle(k, n, big_n)))
                .sum()
        })
        .collect())
}

/// `X[k] = Σ_n x[n]·e^{-i2πkn/N}`.
pub fn dft(x: &[ComplexValue]) -> Result<Vec<ComplexValue>> {
    transform(x, -1.0)
}

/// `x[n] = (1/N)·Σ_k X[k]·e^{i2πkn/N}`.
pub fn idft(spectrum: &[ComplexValue]) -> Result<Vec<ComplexValue>> {
    let scale = 1.0 / spectrum.len().max(1) as f64;
    Ok(transform(spectrum, 1.0)?
        .into_iter()
        .map(|v| v * scale)
        .collect())
}

/// Amplitude terms `X[0..N-1]`, each restricted to `[0, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct AmplitudeSpectrum(Vec<f64>);

impl AmplitudeSpectrum {
    pub fn new(amplitudes: Vec<f64>) -> Result<Self> {
        if amplitudes.is_empty() {
            return Err(Error::Argument("amplitude spectrum must be non-empty".into()));
        }
        if let Some(k) = amplitudes
            .iter()
            .position(|a| !a.is_finite() || !(0.0..=1.0).contains(a))
        {
            return Err(Error::OutOfRange {
                what: format!("X[{k}]"),
                value: amplitudes[k],
            });
        }
        Ok(AmplitudeSpectrum(amplitudes))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn amplitudes(&self) -> &[f64] {
        &self.0
    }

    /// The spectrum as real-valued complex coefficients.
    pub fn to_complex(&self) -> Vec<ComplexValue> {
        self.0.iter().map(|&a| Complex64::new(a, 0.0)).collect()
    }
}

/// One expanded sample `x(n) = (1/N)·Σ_k X[k]e^{iφ_k}` kept as its term list.
#[derive(Debug, Clone, PartialEq)]
pub struct SampleTermList {
    sample_index: usize,
    big_n: usize,
    terms: Vec<ComplexFuzzyNumber>,
}

impl SampleTermList {
    /// Builds a term list with explicit phases; `terms` must have length `big_n`.
    pub fn from_terms(sample_index: usize, big_n: usize, terms: Vec<ComplexFuzzyNumber>) -> Result<Self> {
        if big_n == 0 {
            return Err(Error::Argument("N must be positive".into()));
        }
        if terms.len() != big_n {
            return Err(Error::Argument(format!(
                "sample {sample_index} has {} terms, expected N = {big_n}",
                terms.len()
            )));
        }
        if sample_index >= big_n {
            return Err(Error::Argument(format!(
                "sample index {sample_index} out of range 0..{big_n}"
            )));
        }
        Ok(SampleTermList {
            sample_index,
            big_n,
            terms,
        })
    }

    pub fn sample_index(&self) -> usize {
        self.sample_index
    }

    pub fn big_n(&self) -> usize {
        self.big_n
    }

    pub fn terms(&self) -> &[ComplexFuzzyNumber] {
        &self.terms
    }

    pub fn scale(&self) -> f64 {
        1.0 / self.big_n as f64
    }

    pub fn amplitudes(&self) -> Vec<f64> {
        self.terms.iter().map(ComplexFuzzyNumber::amplitude).collect()
    }
}

/// Expands sample `n` of an N-point spectrum: term `k` is `(X[k], 2πkn/N mod 2π)`.
pub fn expand_sample(spectrum: &AmplitudeSpectrum, n: usize, big_n: usize) -> Result<SampleTermList> {
    if spectrum.len() != big_n {
        return Err(Error::Argument(format!(
            "spectrum has {} amplitudes, expected N = {big_n}",
            spectrum.len()
        )));
    }
    if n >= big_n {
        return Err(Error::Argument(format!("sample index {n} out of range 0..{big_n}")));
    }
    let terms = spectrum
        .amplitudes()
        .iter()
        .enumerate()
        .map(|(k, &a)| ComplexFuzzyNumber::new(a, kernel_angle(k, n, big_n)))
        .collect::<Result<Vec<_>>>()?;
    SampleTermList::from_terms(n, big_n, terms)
}

/// Evaluates the sample: `(1/N)·Σ_k a_k·e^{iφ_k}`.
pub fn sample_value(s: &SampleTermList) -> ComplexValue {
    s.terms.iter().map(ComplexFuzzyNumber::eval).sum::<Complex64>() * s.scale()
}

/// A received signal: `N` samples, each with its own amplitude list.
#[derive(Debug, Clone, PartialEq)]
pub struct CandidateSignal {
    id: String,
    big_n: usize,
    samples: Vec<SampleTermList>,
}

impl CandidateSignal {
    pub fn new(id: impl Into<String>, samples: Vec<SampleTermList>) -> Result<Self> {
        let id = id.into();
        let big_n = samples.len();
        if big_n == 0 {
            return Err(Error::Argument(format!("signal {id:?} has no samples")));
        }
        for (n, s) in samples.iter().enumerate() {
            if s.big_n != big_n || s.sample_index != n {
                return Err(Error::Argument(format!(
                    "signal {id:?}: sample {n} has N = {} and index {}, expected N = {big_n} and index {n}",
                    s.big_n, s.sample_index
                )));
            }
        }
        Ok(CandidateSignal { id, big_n, samples })
    }

    /// Expands one amplitude list per sample index; phases follow `2πkn/N`.
    pub fn from_amplitudes(id: impl Into<String>, amplitudes: Vec<Vec<f64>>) -> Result<Self> {
        let id = id.into();
        let big_n = amplitudes.len();
        let samples = amplitudes
            .into_iter()
            .enumerate()
            .map(|(n, a)| {
                let spectrum = AmplitudeSpectrum::new(a).map_err(|e| match e {
                    Error::OutOfRange { what, value } => Error::OutOfRange {
                        what: format!("signal {id:?} sample {n} {what}"),
                        value,
                    },
                    other => other,
                })?;
                expand_sample(&spectrum, n, big_n)
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(id, samples)
    }

    /// Every sample expanded from the same spectrum.
    pub fn from_spectrum(id: impl Into<String>, spectrum: &AmplitudeSpectrum) -> Result<Self> {
        let big_n = spectrum.len();
        let samples = (0..big_n)
            .map(|n| expand_sample(spectrum, n, big_n))
            .collect::<Result<Vec<_>>>()?;
        Self::new(id, samples)
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn big_n(&self) -> usize {
        self.big_n
    }

    pub fn samples(&self) -> &[SampleTermList] {
        &self.samples
    }

    /// Per-sample amplitude lists, in sample order.
    pub fn amplitude_lists(&self) -> Vec<Vec<f64>> {
        self.samples.iter().map(SampleTermList::amplitudes).collect()
    }

    /// `|x(n)|` for every sample.
    pub fn sample_magnitudes(&self) -> Vec<f64> {
        self.samples.iter().map(|s| sample_value(s).norm()).collect()
    }
}
