//! Magnitude-valued fuzzy soft matrices.
//!
//! A [`MagnitudeMatrix`] holds membership degrees in `[0, 1]`. It is both the
//! matrix form of a fuzzy soft set and the magnitude form `[|a_ij|]` of a
//! complex fuzzy soft matrix. [`RealMatrix`] carries ordinary products whose
//! entries may exceed one.

use std::collections::{BTreeMap, HashSet};

use crate::complex_fuzzy::ComplexFuzzyMatrix;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct MagnitudeMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<f64>,
}

fn check_dims(rows: usize, cols: usize, len: usize) -> Result<()> {
    if rows == 0 || cols == 0 {
        return Err(Error::Argument(format!(
            "matrix dimensions must be positive, got {rows}x{cols}"
        )));
    }
    if len != rows * cols {
        return Err(Error::Argument(format!(
            "{rows}x{cols} matrix needs {} entries, got {len}",
            rows * cols
        )));
    }
    Ok(())
}

fn rows_to_flat(rows: Vec<Vec<f64>>) -> Result<(usize, usize, Vec<f64>)> {
    let n_rows = rows.len();
    let n_cols = rows.first().map_or(0, Vec::len);
    if let Some(bad) = rows.iter().position(|r| r.len() != n_cols) {
        return Err(Error::Argument(format!(
            "ragged rows: row {} has {} entries, expected {n_cols}",
            bad + 1,
            rows[bad].len()
        )));
    }
    Ok((n_rows, n_cols, rows.into_iter().flatten().collect()))
}

impl MagnitudeMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<f64>) -> Result<Self> {
        check_dims(rows, cols, entries.len())?;
        if let Some(pos) = entries
            .iter()
            .position(|v| !v.is_finite() || !(0.0..=1.0).contains(v))
        {
            return Err(Error::OutOfRange {
                what: format!("entry ({}, {})", pos / cols + 1, pos % cols + 1),
                value: entries[pos],
            });
        }
        Ok(MagnitudeMatrix { rows, cols, entries })
    }

    pub fn from_rows(rows: Vec<Vec<f64>>) -> Result<Self> {
        let (r, c, e) = rows_to_flat(rows)?;
        Self::new(r, c, e)
    }

    /// Magnitude form `[|a_ij|]` of a complex fuzzy matrix.
    pub fn from_complex(m: &ComplexFuzzyMatrix) -> Self {
        MagnitudeMatrix {
            rows: m.rows(),
            cols: m.cols(),
            entries: m.entries().iter().map(|e| e.abs()).collect(),
        }
    }

    pub fn zero(rows: usize, cols: usize) -> Result<Self> {
        Self::new(rows, cols, vec![0.0; rows * cols])
    }

    pub fn universal(rows: usize, cols: usize) -> Result<Self> {
        Self::new(rows, cols, vec![1.0; rows * cols])
    }

    /// A-universal matrix: ones in the given 1-based parameter columns, zeros elsewhere.
    pub fn a_universal(rows: usize, cols: usize, parameters: &[usize]) -> Result<Self> {
        let mut m = Self::zero(rows, cols)?;
        for &j in parameters {
            if j == 0 || j > cols {
                return Err(Error::Index { index: j, bound: cols });
            }
            for i in 0..rows {
                m.entries[i * cols + j - 1] = 1.0;
            }
        }
        Ok(m)
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

    pub fn entries(&self) -> &[f64] {
        &self.entries
    }

    pub fn get(&self, row: usize, col: usize) -> f64 {
        assert!(row < self.rows && col < self.cols, "index out of bounds");
        self.entries[row * self.cols + col]
    }

    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        self.entries.chunks(self.cols).map(<[f64]>::to_vec).collect()
    }

    /// Applies `f` to every entry. `f` must map `[0, 1]` into `[0, 1]`.
    pub fn map(&self, f: impl Fn(f64) -> f64) -> Result<Self> {
        Self::new(self.rows, self.cols, self.entries.iter().map(|&v| f(v)).collect())
    }

    fn zip_with(&self, other: &Self, op: &'static str, f: impl Fn(f64, f64) -> f64) -> Result<Self> {
        if self.shape() != other.shape() {
            return Err(Error::shape(op, self.shape(), other.shape()));
        }
        Ok(MagnitudeMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        })
    }

    pub fn union(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, "union", f64::max)
    }

    pub fn intersection(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, "intersection", f64::min)
    }

    pub fn complement(&self) -> Self {
        MagnitudeMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|&v| 1.0 - v).collect(),
        }
    }

    // c_{i,p} = f(a_ij, b_ik) with p = n(j-1)+k in 1-based indices,
    // i.e. column j*n + k in 0-based storage.
    fn block_product(&self, other: &Self, op: &'static str, f: impl Fn(f64, f64) -> f64) -> Result<Self> {
        if self.shape() != other.shape() {
            return Err(Error::shape(op, self.shape(), other.shape()));
        }
        let (m, n) = self.shape();
        let mut entries = Vec::with_capacity(m * n * n);
        for i in 0..m {
            for j in 0..n {
                let a = self.get(i, j);
                for k in 0..n {
                    entries.push(f(a, other.get(i, k)));
                }
            }
        }
        Ok(MagnitudeMatrix {
            rows: m,
            cols: n * n,
            entries,
        })
    }

    pub fn and_product(&self, other: &Self) -> Result<Self> {
        self.block_product(other, "and product", f64::min)
    }

    pub fn or_product(&self, other: &Self) -> Result<Self> {
        self.block_product(other, "or product", f64::max)
    }

    pub fn and_not_product(&self, other: &Self) -> Result<Self> {
        self.block_product(other, "and-not product", |a, b| a.min(1.0 - b))
    }

    pub fn or_not_product(&self, other: &Self) -> Result<Self> {
        self.block_product(other, "or-not product", |a, b| a.max(1.0 - b))
    }

    fn check_same_shape(&self, other: &Self, op: &'static str) -> Result<()> {
        if self.shape() != other.shape() {
            Err(Error::shape(op, self.shape(), other.shape()))
        } else {
            Ok(())
        }
    }

    /// `self ⊆ other`: every entry is at most the matching entry of `other`.
    pub fn is_submatrix(&self, other: &Self) -> Result<bool> {
        self.check_same_shape(other, "submatrix test")?;
        Ok(self.entries.iter().zip(&other.entries).all(|(a, b)| a <= b))
    }

    /// `self ⊂ other`: submatrix with at least one strict inequality.
    pub fn is_proper_submatrix(&self, other: &Self) -> Result<bool> {
        Ok(self.is_submatrix(other)?
            && self.entries.iter().zip(&other.entries).any(|(a, b)| a < b))
    }

    pub fn equals(&self, other: &Self) -> Result<bool> {
        self.check_same_shape(other, "equality test")?;
        Ok(self.entries == other.entries)
    }

    /// Ordinary sum-of-products matrix multiplication. Not clamped.
    pub fn usual_product(&self, other: &Self) -> Result<RealMatrix> {
        if self.cols != other.rows {
            return Err(Error::shape("usual product", self.shape(), other.shape()));
        }
        let mut entries = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                entries.push((0..self.cols).map(|k| self.get(i, k) * other.get(k, j)).sum());
            }
        }
        Ok(RealMatrix {
            rows: self.rows,
            cols: other.cols,
            entries,
        })
    }
}

/// Non-negative real matrix, e.g. the result of [`MagnitudeMatrix::usual_product`].
#[derive(Debug, Clone, PartialEq)]
pub struct RealMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<f64>,
}

impl RealMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<f64>) -> Result<Self> {
        check_dims(rows, cols, entries.len())?;
        if let Some(pos) = entries.iter().position(|v| !v.is_finite() || *v < 0.0) {
            return Err(Error::Argument(format!(
                "entry ({}, {}) = {} must be finite and non-negative",
                pos / cols + 1,
                pos % cols + 1,
                entries[pos]
            )));
        }
        Ok(RealMatrix { rows, cols, entries })
    }

    pub fn from_rows(rows: Vec<Vec<f64>>) -> Result<Self> {
        let (r, c, e) = rows_to_flat(rows)?;
        Self::new(r, c, e)
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

    pub fn entries(&self) -> &[f64] {
        &self.entries
    }

    pub fn get(&self, row: usize, col: usize) -> f64 {
        assert!(row < self.rows && col < self.cols, "index out of bounds");
        self.entries[row * self.cols + col]
    }

    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        self.entries.chunks(self.cols).map(<[f64]>::to_vec).collect()
    }
}

/// Membership table of a fuzzy soft set: objects × parameters, default degree 0.
#[derive(Debug, Clone, PartialEq)]
pub struct FuzzySoftSetTable {
    universe: Vec<String>,
    parameters: Vec<String>,
    memberships: BTreeMap<(usize, usize), f64>,
}

fn unique_labels(labels: &[String], kind: &str) -> Result<()> {
    let mut seen = HashSet::new();
    for l in labels {
        if !seen.insert(l.as_str()) {
            return Err(Error::Validation(format!("duplicate {kind} label {l:?}")));
        }
    }
    Ok(())
}

impl FuzzySoftSetTable {
    pub fn new<S: Into<String>>(
        universe: impl IntoIterator<Item = S>,
        parameters: impl IntoIterator<Item = S>,
    ) -> Result<Self> {
        let universe: Vec<String> = universe.into_iter().map(Into::into).collect();
        let parameters: Vec<String> = parameters.into_iter().map(Into::into).collect();
        if universe.is_empty() || parameters.is_empty() {
            return Err(Error::Argument("universe and parameter set must be non-empty".into()));
        }
        unique_labels(&universe, "object")?;
        unique_labels(&parameters, "parameter")?;
        Ok(FuzzySoftSetTable {
            universe,
            parameters,
            memberships: BTreeMap::new(),
        })
    }

    pub fn universe(&self) -> &[String] {
        &self.universe
    }

    pub fn parameters(&self) -> &[String] {
        &self.parameters
    }

    fn object_index(&self, object: &str) -> Result<usize> {
        self.universe
            .iter()
            .position(|u| u == object)
            .ok_or_else(|| Error::Argument(format!("unknown object {object:?}")))
    }

    fn parameter_index(&self, parameter: &str) -> Result<usize> {
        self.parameters
            .iter()
            .position(|x| x == parameter)
            .ok_or_else(|| Error::Argument(format!("unknown parameter {parameter:?}")))
    }

    /// Sets `μ(object, parameter) = degree`.
    pub fn set(&mut self, object: &str, parameter: &str, degree: f64) -> Result<()> {
        if !degree.is_finite() || !(0.0..=1.0).contains(&degree) {
            return Err(Error::OutOfRange {
                what: format!("membership of {object:?} under {parameter:?}"),
                value: degree,
            });
        }
        let key = (self.object_index(object)?, self.parameter_index(parameter)?);
        self.memberships.insert(key, degree);
        Ok(())
    }

    /// Assigns the whole fuzzy set `φ(parameter)` as `(object, degree)` pairs.
    pub fn set_parameter(&mut self, parameter: &str, set: &[(&str, f64)]) -> Result<()> {
        for &(object, degree) in set {
            self.set(object, parameter, degree)?;
        }
        Ok(())
    }

    /// `φ(parameter) = U`: every object with degree 1.
    pub fn set_parameter_universal(&mut self, parameter: &str) -> Result<()> {
        let j = self.parameter_index(parameter)?;
        for i in 0..self.universe.len() {
            self.memberships.insert((i, j), 1.0);
        }
        Ok(())
    }

    pub fn membership(&self, object: &str, parameter: &str) -> Result<f64> {
        let key = (self.object_index(object)?, self.parameter_index(parameter)?);
        Ok(self.memberships.get(&key).copied().unwrap_or(0.0))
    }

    /// Matrix form: rows follow the universe, columns follow the parameters.
    pub fn to_matrix(&self) -> MagnitudeMatrix {
        let (m, n) = (self.universe.len(), self.parameters.len());
        let mut entries = vec![0.0; m * n];
        for (&(i, j), &v) in &self.memberships {
            entries[i * n + j] = v;
        }
        MagnitudeMatrix {
            rows: m,
            cols: n,
            entries,
        }
    }
}

impl From<&FuzzySoftSetTable> for MagnitudeMatrix {
    fn from(t: &FuzzySoftSetTable) -> Self {
        t.to_matrix()
    }
}
