//! Exact t-shuffle products on the word algebra of interpolated multiple
//! zeta values, closed-form product formulas checked against a recursive
//! reference, and floating-point evaluation for numerical witnesses.

pub mod closedforms;
pub mod coeffs;
pub mod compositions;
pub mod halg;
pub mod imzv;
pub mod mzvnum;
pub mod tshuffle;
pub mod verify;
pub mod words;

pub use coeffs::{binom, QtPoly, Rational};
pub use halg::HElement;
pub use imzv::{zt_map, Interpretation, ZetaCombo};
pub use tshuffle::{shuffle_combinatorial, tshuffle, tshuffle_words};
pub use words::{index_from_word, word_from_index, Index, Letter, Word};
