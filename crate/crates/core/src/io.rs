//! File formats.
//!
//! - Matrix files: comma-separated, no header, no quoting, LF line endings. Magnitude cells are
//!   plain decimals. Complex cells are `amplitude@phase`, where the phase is
//!   a decimal in radians or a multiple of pi such as `pi/2`, `3pi/4`, `2pi`;
//!   a bare decimal means phase 0.
//! - Sequence files (transform input): one `re` or `re,im` per line.
//! - Signal files: JSON with an explicit `N`; phases are never stored and are
//!   always derived as `2πkn/N`.
//! - Plot series: TSV with header `n<TAB>id1<TAB>id2…`.

use std::collections::HashSet;
use std::f64::consts::PI;
use std::path::Path;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::complex_fuzzy::{ComplexFuzzyMatrix, ComplexFuzzyNumber, ComplexValue};
use crate::error::{Error, Result};
use crate::format;
use crate::identify::ScoreVector;
use crate::signal::CandidateSignal;
use crate::soft_matrix::{MagnitudeMatrix, RealMatrix};

// Splits `text` into non-blank lines of trimmed comma-separated fields, each
// tagged with its 1-based line and column.
fn fields(text: &str) -> impl Iterator<Item = (usize, Vec<(usize, &str)>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        if line.trim().is_empty() {
            return None;
        }
        let mut col = 0;
        let row = line
            .split(',')
            .map(|raw| {
                let lead = raw.len() - raw.trim_start().len();
                let field = (col + lead + 1, raw.trim());
                col += raw.len() + 1;
                field
            })
            .collect();
        Some((i + 1, row))
    })
}

fn parse_grid<T>(text: &str, parse_cell: impl Fn(&str) -> std::result::Result<T, String>) -> Result<Vec<Vec<T>>> {
    let mut rows: Vec<Vec<T>> = Vec::new();
    for (line, cells) in fields(text) {
        let row = cells
            .into_iter()
            .map(|(column, cell)| parse_cell(cell).map_err(|message| Error::Parse { line, column, message }))
            .collect::<Result<Vec<T>>>()?;
        if let Some(first) = rows.first() {
            if row.len() != first.len() {
                return Err(Error::Validation(format!(
                    "line {line}: {} fields, expected {} (matrix must be rectangular)",
                    row.len(),
                    first.len()
                )));
            }
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(Error::Validation("matrix file is empty".into()));
    }
    Ok(rows)
}

fn parse_decimal(s: &str) -> std::result::Result<f64, String> {
    let v: f64 = s.parse().map_err(|_| format!("expected a number, found {s:?}"))?;
    if v.is_finite() {
        Ok(v)
    } else {
        Err(format!("non-finite number {s:?}"))
    }
}

/// Parses a phase token: a decimal in radians, or `[c]pi[/d]`.
pub fn parse_phase(token: &str) -> std::result::Result<f64, String> {
    let t = token.trim();
    let Some((coef, rest)) = t.split_once("pi") else {
        return parse_decimal(t);
    };
    let coef = match coef.trim() {
        "" => 1.0,
        "-" => -1.0,
        c => parse_decimal(c.trim_end_matches('*'))?,
    };
    let denom = match rest.trim() {
        "" => 1.0,
        r => match r.strip_prefix('/') {
            Some(d) => parse_decimal(d.trim())?,
            None => return Err(format!("malformed phase {token:?}")),
        },
    };
    if denom == 0.0 {
        return Err(format!("zero denominator in phase {token:?}"));
    }
    Ok(coef * PI / denom)
}

fn split_cell(cell: &str) -> std::result::Result<(f64, f64), String> {
    match cell.split_once('@') {
        Some((a, p)) => Ok((parse_decimal(a.trim())?, parse_phase(p)?)),
        None => Ok((parse_decimal(cell)?, 0.0)),
    }
}

fn located(cols: usize, flat_index: usize) -> String {
    format!("entry ({}, {})", flat_index / cols + 1, flat_index % cols + 1)
}

/// Magnitude matrix. `amplitude@phase` cells contribute their amplitude.
pub fn parse_magnitude_matrix(text: &str) -> Result<MagnitudeMatrix> {
    let rows = parse_grid(text, |c| split_cell(c).map(|(a, _)| a))?;
    MagnitudeMatrix::from_rows(rows)
}

pub fn parse_complex_matrix(text: &str) -> Result<ComplexFuzzyMatrix> {
    let rows = parse_grid(text, split_cell)?;
    let (m, n) = (rows.len(), rows[0].len());
    let entries = rows
        .into_iter()
        .flatten()
        .enumerate()
        .map(|(idx, (a, p))| {
            ComplexFuzzyNumber::new(a, p).map_err(|e| match e {
                Error::OutOfRange { value, .. } => Error::OutOfRange {
                    what: format!("amplitude of {}", located(n, idx)),
                    value,
                },
                other => other,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    ComplexFuzzyMatrix::new(m, n, entries)
}

fn write_rows(rows: impl Iterator<Item = Vec<String>>) -> String {
    let mut out = String::new();
    for row in rows {
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

/// CSV of a real grid; `display` selects 2-decimal values instead of full precision.
pub fn grid_csv(rows: &[Vec<f64>], display: bool) -> String {
    let fmt = if display { format::display } else { format::full };
    write_rows(rows.iter().map(|r| r.iter().map(|&v| fmt(v)).collect()))
}

pub fn magnitude_csv(m: &MagnitudeMatrix, display: bool) -> String {
    grid_csv(&m.to_rows(), display)
}

pub fn real_csv(m: &RealMatrix, display: bool) -> String {
    grid_csv(&m.to_rows(), display)
}

pub fn complex_cell(x: &ComplexFuzzyNumber, display: bool) -> String {
    let fmt = if display { format::display } else { format::full };
    format!("{}@{}", fmt(x.amplitude()), fmt(x.phase()))
}

pub fn complex_csv(m: &ComplexFuzzyMatrix, display: bool) -> String {
    write_rows(
        m.entries()
            .chunks(m.cols())
            .map(|r| r.iter().map(|x| complex_cell(x, display)).collect()),
    )
}

/// Transform input: one `re` or `re,im` per line.
pub fn parse_sequence(text: &str) -> Result<Vec<ComplexValue>> {
    let mut out = Vec::new();
    for (line, cells) in fields(text) {
        if cells.len() > 2 {
            return Err(Error::Validation(format!(
                "line {line}: expected `re` or `re,im`, found {} fields",
                cells.len()
            )));
        }
        let parsed = cells
            .iter()
            .map(|&(column, cell)| parse_decimal(cell).map_err(|message| Error::Parse { line, column, message }))
            .collect::<Result<Vec<f64>>>()?;
        out.push(Complex64::new(parsed[0], parsed.get(1).copied().unwrap_or(0.0)));
    }
    if out.is_empty() {
        return Err(Error::Validation("sequence file is empty".into()));
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SampleRecord {
    pub amplitudes: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SignalRecord {
    pub id: String,
    pub samples: Vec<SampleRecord>,
}

/// On-disk signal set.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SignalFile {
    #[serde(rename = "N")]
    pub big_n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reference: Option<SignalRecord>,
    pub signals: Vec<SignalRecord>,
}

/// Validated contents of a signal file.
#[derive(Debug, Clone, PartialEq)]
pub struct SignalSet {
    pub big_n: usize,
    pub reference: Option<CandidateSignal>,
    pub candidates: Vec<CandidateSignal>,
}

impl SignalRecord {
    fn from_signal(s: &CandidateSignal) -> Self {
        SignalRecord {
            id: s.id().to_string(),
            samples: s
                .amplitude_lists()
                .into_iter()
                .map(|amplitudes| SampleRecord { amplitudes })
                .collect(),
        }
    }

    fn validate(&self, big_n: usize) -> Result<CandidateSignal> {
        if self.samples.len() != big_n {
            return Err(Error::Validation(format!(
                "signal {:?}: {} samples, expected N = {big_n}",
                self.id,
                self.samples.len()
            )));
        }
        for (n, s) in self.samples.iter().enumerate() {
            if s.amplitudes.len() != big_n {
                return Err(Error::Validation(format!(
                    "signal {:?} sample {n}: {} amplitudes, expected N = {big_n}",
                    self.id,
                    s.amplitudes.len()
                )));
            }
            if let Some(k) = s
                .amplitudes
                .iter()
                .position(|a| !a.is_finite() || !(0.0..=1.0).contains(a))
            {
                return Err(Error::Validation(format!(
                    "signal {:?} sample {n} amplitude {k} = {} is outside [0, 1]",
                    self.id, s.amplitudes[k]
                )));
            }
        }
        CandidateSignal::from_amplitudes(
            self.id.clone(),
            self.samples.iter().map(|s| s.amplitudes.clone()).collect(),
        )
    }
}

impl SignalFile {
    pub fn from_signals(reference: Option<&CandidateSignal>, candidates: &[CandidateSignal]) -> Self {
        SignalFile {
            big_n: candidates.first().or(reference).map_or(0, CandidateSignal::big_n),
            reference: reference.map(SignalRecord::from_signal),
            signals: candidates.iter().map(SignalRecord::from_signal).collect(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data serializes");
        s.push('\n');
        s
    }

    pub fn validate(&self) -> Result<SignalSet> {
        if self.big_n == 0 {
            return Err(Error::Validation("N must be positive".into()));
        }
        if self.signals.is_empty() {
            return Err(Error::Validation("signal list is empty".into()));
        }
        let mut seen = HashSet::new();
        for id in self.reference.iter().chain(&self.signals).map(|r| r.id.as_str()) {
            if !seen.insert(id) {
                return Err(Error::Validation(format!("duplicate signal id {id:?}")));
            }
        }
        let reference = self
            .reference
            .as_ref()
            .map(|r| r.validate(self.big_n))
            .transpose()?;
        let candidates = self
            .signals
            .iter()
            .map(|r| r.validate(self.big_n))
            .collect::<Result<Vec<_>>>()?;
        Ok(SignalSet {
            big_n: self.big_n,
            reference,
            candidates,
        })
    }
}

pub fn parse_signal_file(text: &str) -> Result<SignalSet> {
    let file: SignalFile = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    file.validate()
}

/// TSV: header `n` plus one column per signal, then one row per sample index.
pub fn plot_series(scores: &[ScoreVector]) -> Result<String> {
    let first = scores
        .first()
        .ok_or_else(|| Error::Argument("no score vectors to plot".into()))?;
    let len = first.scores.len();
    if let Some(s) = scores.iter().find(|s| s.scores.len() != len) {
        return Err(Error::Argument(format!(
            "score vector {:?} has {} entries, expected {len}",
            s.signal_id,
            s.scores.len()
        )));
    }
    let mut out = String::from("n");
    for s in scores {
        out.push('\t');
        out.push_str(&s.signal_id);
    }
    out.push('\n');
    for n in 0..len {
        out.push_str(&n.to_string());
        for s in scores {
            out.push('\t');
            out.push_str(&format::full(s.scores[n]));
        }
        out.push('\n');
    }
    Ok(out)
}

pub fn emit_plot_series(scores: &[ScoreVector], path: &Path) -> Result<()> {
    let text = plot_series(scores)?;
    std::fs::write(path, text)?;
    Ok(())
}
