//! Complex fuzzy soft matrix algebra and reference-signal identification.
//!
//! - [`complex_fuzzy`]: complex fuzzy numbers `r·e^{iω}` and matrices of them
//!   (fuzzy addition, max-min product, trace, conjugate transpose).
//! - [`soft_matrix`]: magnitude matrices, soft-set ingestion, block products,
//!   set operations, order relations and the usual product.
//! - [`signal`]: DFT/IDFT and the per-sample expansion of amplitude spectra.
//! - [`identify`]: the max-min decision and the Fourier cross-product
//!   identification.
//! - [`oracle`]: independent recomputations and law checkers.
//! - [`io`], [`format`], [`cli`]: file formats, report formatting, CLI.

pub mod cli;
pub mod complex_fuzzy;
pub mod error;
pub mod format;
pub mod identify;
pub mod io;
pub mod oracle;
pub mod signal;
pub mod soft_matrix;

pub use complex_fuzzy::{ComplexFuzzyMatrix, ComplexFuzzyNumber, ComplexValue};
pub use error::{Error, Result};
pub use identify::{
    column_min, cross_product, fourier_identify, maxmin_decision, sample_score, score_vector, CrossTerm,
    FourierIdentification, OptimumFuzzySet, ScoreVector,
};
pub use signal::{dft, expand_sample, idft, sample_value, AmplitudeSpectrum, CandidateSignal, SampleTermList};
pub use soft_matrix::{FuzzySoftSetTable, MagnitudeMatrix, RealMatrix};
