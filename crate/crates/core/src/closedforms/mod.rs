//! Closed-form product formulas, each an independent route to a t-shuffle
//! product that is compared against [`crate::tshuffle::tshuffle_words`].
//!
//! Where a typeset formula needed repair, the repaired form is the main
//! entry point and the literal transcription is kept alongside
//! (`*_printed`) so the mismatch stays reproducible; see [`discrepancy`].

mod alternating;
pub mod discrepancy;
mod general;
mod height_one;
mod height_two;

pub use alternating::{
    alternating_sum_lhs, alternating_sum_rhs, alternating_sum_rhs_printed, cor42_rhs,
    prop43_identity, AlternatingError,
};
pub use general::{
    euler_decomposition, general_formula, general_formula_printed, theorem1_decomposition,
};
pub use height_one::{
    eq48_word_formula, eq48_word_formula_printed, height_one_word_formula,
    theorem2_decomposition,
};
pub use height_two::{height_two_case_formula, height_two_families};

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::halg::HElement;
use crate::words::{Letter, Word};

/// Small builder for words written as runs of letters.
#[derive(Debug, Clone, Default)]
pub(crate) struct Wb(Word);

impl Wb {
    pub fn new() -> Wb {
        Wb(Word::empty())
    }

    pub fn x(mut self, n: usize) -> Wb {
        self.0.push_n(Letter::X, n);
        self
    }

    pub fn y(mut self, n: usize) -> Wb {
        self.0.push_n(Letter::Y, n);
        self
    }

    /// Appends `x^{e1} y x^{e2} y ... x^{ek} y`.
    pub fn ys(mut self, exps: &[usize]) -> Wb {
        for &e in exps {
            self.0.push_n(Letter::X, e);
            self.0.push(Letter::Y);
        }
        self
    }

    pub fn done(self) -> Word {
        self.0
    }
}

pub(crate) fn add_int(out: &mut HElement, w: Word, c: &BigInt, tdeg: u32) {
    out.add_monomial(w, &BigRational::from_integer(c.clone()), tdeg);
}

/// `x^{e1} y ... x^{eN} y` with the `pos`-th `y` (1-based) turned into `x`.
pub(crate) fn merged_at(exps: &[usize], pos: usize) -> Word {
    let mut w = Word::empty();
    for (i, &e) in exps.iter().enumerate() {
        w.push_n(Letter::X, e);
        w.push(if i + 1 == pos { Letter::X } else { Letter::Y });
    }
    w
}
