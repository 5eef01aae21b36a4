//! Reference-signal identification.
//!
//! Two procedures are provided:
//!
//! - [`maxmin_decision`]: multiply two magnitude matrices (samples × signals),
//!   take column minima and pick the signal with the largest minimum.
//! - [`fourier_identify`]: pair every candidate sample with the matching
//!   reference sample through [`cross_product`], keep the largest term modulus
//!   per sample and pick the candidate whose best sample scores highest.
//!
//! Ties go to the earliest index and are flagged in the result.

use crate::complex_fuzzy::ComplexFuzzyNumber;
use crate::error::{Error, Result};
use crate::signal::{sample_value, CandidateSignal, SampleTermList};
use crate::soft_matrix::{MagnitudeMatrix, RealMatrix};

/// One term `min(a_k, b_l)·e^{i·min(α_k, β_l)}` of a sample cross product.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CrossTerm {
    pub value: ComplexFuzzyNumber,
    /// Term index in the left sample.
    pub k: usize,
    /// Term index in the right sample.
    pub l: usize,
}

impl CrossTerm {
    pub fn amplitude(&self) -> f64 {
        self.value.amplitude()
    }

    pub fn phase(&self) -> f64 {
        self.value.phase()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CrossProduct {
    /// Terms in `(k, l)` order, `k` outer.
    pub terms: Vec<CrossTerm>,
    /// `1/(K·L)`.
    pub scale: f64,
}

pub fn cross_product(s: &SampleTermList, t: &SampleTermList) -> Result<CrossProduct> {
    let (left, right) = (s.terms(), t.terms());
    if left.is_empty() || right.is_empty() {
        return Err(Error::Argument("cross product of an empty term list".into()));
    }
    let terms = left
        .iter()
        .enumerate()
        .flat_map(|(k, &a)| {
            right.iter().enumerate().map(move |(l, &b)| CrossTerm {
                value: a.min(b),
                k,
                l,
            })
        })
        .collect::<Vec<_>>();
    let scale = 1.0 / terms.len() as f64;
    Ok(CrossProduct { terms, scale })
}

/// Largest term modulus of the cross product divided by `K·L`.
///
/// The modulus of `r·e^{iθ}` is `r`, so only amplitudes enter the score.
pub fn sample_score(s: &SampleTermList, t: &SampleTermList) -> Result<f64> {
    let cp = cross_product(s, t)?;
    let count = cp.terms.len() as f64;
    Ok(cp
        .terms
        .iter()
        .map(|term| term.value.abs() / count)
        .fold(0.0, f64::max))
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScoreVector {
    pub signal_id: String,
    /// One score per sample index.
    pub scores: Vec<f64>,
    pub best: f64,
}

pub fn score_vector(candidate: &CandidateSignal, reference: &CandidateSignal) -> Result<ScoreVector> {
    if candidate.big_n() != reference.big_n() {
        return Err(Error::Argument(format!(
            "signal {:?} has N = {} but reference {:?} has N = {}",
            candidate.id(),
            candidate.big_n(),
            reference.id(),
            reference.big_n()
        )));
    }
    let scores = candidate
        .samples()
        .iter()
        .zip(reference.samples())
        .map(|(s, r)| sample_score(s, r))
        .collect::<Result<Vec<_>>>()?;
    let best = scores.iter().copied().fold(0.0, f64::max);
    Ok(ScoreVector {
        signal_id: candidate.id().to_string(),
        scores,
        best,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct FourierIdentification {
    pub winner: String,
    pub winner_index: usize,
    pub best: f64,
    /// Another candidate reached exactly the same best score.
    pub tie: bool,
    /// Score vectors in candidate order.
    pub scores: Vec<ScoreVector>,
}

pub fn fourier_identify(
    candidates: &[CandidateSignal],
    reference: &CandidateSignal,
) -> Result<FourierIdentification> {
    if candidates.is_empty() {
        return Err(Error::Argument("no candidate signals".into()));
    }
    let scores = candidates
        .iter()
        .map(|c| score_vector(c, reference))
        .collect::<Result<Vec<_>>>()?;
    let (winner_index, best) = argmax_first(scores.iter().map(|s| s.best));
    let tie = scores.iter().filter(|s| s.best == best).count() > 1;
    Ok(FourierIdentification {
        winner: scores[winner_index].signal_id.clone(),
        winner_index,
        best,
        tie,
        scores,
    })
}

// First index of the maximum.
fn argmax_first(values: impl Iterator<Item = f64>) -> (usize, f64) {
    values
        .enumerate()
        .fold((0, f64::NEG_INFINITY), |(bi, bv), (i, v)| if v > bv { (i, v) } else { (bi, bv) })
}

/// Minimum of each column.
pub fn column_min(m: &RealMatrix) -> Vec<f64> {
    (0..m.cols())
        .map(|j| (0..m.rows()).map(|i| m.get(i, j)).fold(f64::INFINITY, f64::min))
        .collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct OptimumFuzzySet {
    /// Objects with a positive degree, in universe order.
    pub memberships: Vec<(String, f64)>,
    /// Full decision column, one degree per object.
    pub degrees: Vec<f64>,
    pub winner: String,
    pub winner_degree: f64,
    pub tie: bool,
}

impl OptimumFuzzySet {
    /// Every degree is zero; the winner is only the first label.
    pub fn is_degenerate(&self) -> bool {
        self.winner_degree == 0.0
    }
}

/// Max-min decision over the usual product of two square magnitude matrices.
pub fn maxmin_decision<S: AsRef<str>>(
    a: &MagnitudeMatrix,
    b: &MagnitudeMatrix,
    universe: &[S],
) -> Result<OptimumFuzzySet> {
    if a.rows() != a.cols() {
        return Err(Error::NotSquare {
            op: "max-min decision",
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    if a.shape() != b.shape() {
        return Err(Error::shape("max-min decision", a.shape(), b.shape()));
    }
    if universe.len() != a.cols() {
        return Err(Error::Argument(format!(
            "{} labels given for {} signals",
            universe.len(),
            a.cols()
        )));
    }
    let degrees = column_min(&a.usual_product(b)?);
    let (winner_index, winner_degree) = argmax_first(degrees.iter().copied());
    let tie = degrees.iter().filter(|&&d| d == winner_degree).count() > 1;
    let memberships = universe
        .iter()
        .zip(&degrees)
        .filter(|(_, &d)| d > 0.0)
        .map(|(u, &d)| (u.as_ref().to_string(), d))
        .collect();
    Ok(OptimumFuzzySet {
        memberships,
        degrees,
        winner: universe[winner_index].as_ref().to_string(),
        winner_degree,
        tie,
    })
}

/// Samples × signals matrix of `|x_j(n)|`, the magnitude input of [`maxmin_decision`].
pub fn magnitude_matrix_from_signals(signals: &[CandidateSignal]) -> Result<MagnitudeMatrix> {
    let first = signals
        .first()
        .ok_or_else(|| Error::Argument("no signals".into()))?;
    let big_n = first.big_n();
    if let Some(s) = signals.iter().find(|s| s.big_n() != big_n) {
        return Err(Error::Argument(format!(
            "signal {:?} has N = {}, expected {big_n}",
            s.id(),
            s.big_n()
        )));
    }
    let columns: Vec<Vec<f64>> = signals
        .iter()
        .map(|s| s.samples().iter().map(|x| sample_value(x).norm().min(1.0)).collect())
        .collect();
    let entries = (0..big_n)
        .flat_map(|n| columns.iter().map(move |c| c[n]))
        .collect();
    MagnitudeMatrix::new(big_n, signals.len(), entries)
}
