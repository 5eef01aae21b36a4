//! Complex fuzzy numbers `r·e^{iω}` and matrices built from them.
//!
//! Amplitudes live in `[0, 1]` and phases are kept normalized to `[0, 2π)`.
//! The lattice operations act componentwise: `max` takes the larger amplitude
//! together with the larger phase, `min` the smaller of each.

use std::f64::consts::TAU;
use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Evaluated complex value `re + i·im`.
pub type ComplexValue = Complex64;

/// Reduces a finite angle into `[0, 2π)`.
pub(crate) fn normalize_phase(phase: f64) -> f64 {
    let p = phase.rem_euclid(TAU);
    // rem_euclid of a tiny negative angle rounds up to exactly TAU
    if p >= TAU {
        0.0
    } else {
        p
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexFuzzyNumber {
    amplitude: f64,
    phase: f64,
}

impl ComplexFuzzyNumber {
    pub const ZERO: ComplexFuzzyNumber = ComplexFuzzyNumber {
        amplitude: 0.0,
        phase: 0.0,
    };

    /// Builds `amplitude·e^{i·phase}`. The amplitude must lie in `[0, 1]`; the
    /// phase may be any finite angle and is reduced modulo 2π.
    pub fn new(amplitude: f64, phase: f64) -> Result<Self> {
        if !amplitude.is_finite() || !(0.0..=1.0).contains(&amplitude) {
            return Err(Error::OutOfRange {
                what: "amplitude".into(),
                value: amplitude,
            });
        }
        if !phase.is_finite() {
            return Err(Error::Argument(format!("phase must be finite, got {phase}")));
        }
        Ok(ComplexFuzzyNumber {
            amplitude,
            phase: normalize_phase(phase),
        })
    }

    /// A real membership degree (phase 0).
    pub fn real(amplitude: f64) -> Result<Self> {
        Self::new(amplitude, 0.0)
    }

    pub fn amplitude(&self) -> f64 {
        self.amplitude
    }

    pub fn phase(&self) -> f64 {
        self.phase
    }

    /// Modulus `|r·e^{iω}| = r`.
    pub fn abs(&self) -> f64 {
        self.amplitude
    }

    pub fn max(self, other: Self) -> Self {
        ComplexFuzzyNumber {
            amplitude: self.amplitude.max(other.amplitude),
            phase: self.phase.max(other.phase),
        }
    }

    pub fn min(self, other: Self) -> Self {
        ComplexFuzzyNumber {
            amplitude: self.amplitude.min(other.amplitude),
            phase: self.phase.min(other.phase),
        }
    }

    /// `r·e^{-iω}`, with the phase mapped back into `[0, 2π)`. Phase 0 stays 0.
    pub fn conjugate(self) -> Self {
        let phase = if self.phase == 0.0 {
            0.0
        } else {
            normalize_phase(TAU - self.phase)
        };
        ComplexFuzzyNumber {
            amplitude: self.amplitude,
            phase,
        }
    }

    /// `r·(cos ω + i sin ω)`.
    pub fn eval(&self) -> ComplexValue {
        Complex64::from_polar(self.amplitude, self.phase)
    }
}

impl Default for ComplexFuzzyNumber {
    fn default() -> Self {
        Self::ZERO
    }
}

impl fmt::Display for ComplexFuzzyNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}e^(i{})", self.amplitude, self.phase)
    }
}

/// Row-major `rows × cols` grid of complex fuzzy numbers.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexFuzzyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<ComplexFuzzyNumber>,
}

impl ComplexFuzzyMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<ComplexFuzzyNumber>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::Argument(format!(
                "matrix dimensions must be positive, got {rows}x{cols}"
            )));
        }
        if entries.len() != rows * cols {
            return Err(Error::Argument(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        Ok(ComplexFuzzyMatrix { rows, cols, entries })
    }

    pub fn from_rows(rows: Vec<Vec<ComplexFuzzyNumber>>) -> Result<Self> {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().position(|r| r.len() != n_cols) {
            return Err(Error::Argument(format!(
                "ragged rows: row {} has {} entries, expected {n_cols}",
                bad + 1,
                rows[bad].len()
            )));
        }
        Self::new(n_rows, n_cols, rows.into_iter().flatten().collect())
    }

    /// Builds a matrix from `(amplitude, phase)` pairs.
    pub fn from_polar_rows(rows: &[Vec<(f64, f64)>]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|&(a, p)| ComplexFuzzyNumber::new(a, p))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(rows)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn entries(&self) -> &[ComplexFuzzyNumber] {
        &self.entries
    }

    /// Entry at zero-based `(row, col)`.
    pub fn get(&self, row: usize, col: usize) -> ComplexFuzzyNumber {
        assert!(row < self.rows && col < self.cols, "index out of bounds");
        self.entries[row * self.cols + col]
    }

    pub fn amplitudes(&self) -> Vec<Vec<f64>> {
        self.entries
            .chunks(self.cols)
            .map(|r| r.iter().map(ComplexFuzzyNumber::abs).collect())
            .collect()
    }

    pub fn phases(&self) -> Vec<Vec<f64>> {
        self.entries
            .chunks(self.cols)
            .map(|r| r.iter().map(ComplexFuzzyNumber::phase).collect())
            .collect()
    }

    /// Fuzzy addition: elementwise `max`.
    pub fn fuzzy_add(&self, other: &Self) -> Result<Self> {
        if self.shape() != other.shape() {
            return Err(Error::shape("fuzzy addition", self.shape(), other.shape()));
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(&a, &b)| a.max(b))
            .collect();
        Ok(ComplexFuzzyMatrix {
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    /// Max-min composition: `c_ij = max_k min(a_ik, b_kj)`.
    pub fn maxmin_product(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::shape("max-min product", self.shape(), other.shape()));
        }
        let mut entries = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let cell = (0..self.cols)
                    .map(|k| self.get(i, k).min(other.get(k, j)))
                    .reduce(ComplexFuzzyNumber::max)
                    .expect("inner dimension is positive");
                entries.push(cell);
            }
        }
        Ok(ComplexFuzzyMatrix {
            rows: self.rows,
            cols: other.cols,
            entries,
        })
    }

    /// `max` folded over the diagonal.
    pub fn trace(&self) -> Result<ComplexFuzzyNumber> {
        if self.rows != self.cols {
            return Err(Error::NotSquare {
                op: "trace",
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok((0..self.rows)
            .map(|i| self.get(i, i))
            .reduce(ComplexFuzzyNumber::max)
            .expect("matrix is non-empty"))
    }

    pub fn conjugate_transpose(&self) -> Self {
        let mut entries = Vec::with_capacity(self.entries.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                entries.push(self.get(i, j).conjugate());
            }
        }
        ComplexFuzzyMatrix {
            rows: self.cols,
            cols: self.rows,
            entries,
        }
    }
}
