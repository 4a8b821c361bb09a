//! The algebra H_t of Q[t]-linear combinations of words.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::coeffs::{QtPoly, Rational};
use crate::words::{Letter, Word, WordError};

/// Finite Q[t]-combination of words; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct HElement(BTreeMap<Word, QtPoly>);

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord {
    pub word: String,
    pub coeff: String,
}

impl HElement {
    pub fn zero() -> HElement {
        HElement(BTreeMap::new())
    }

    pub fn one() -> HElement {
        HElement::word(Word::empty())
    }

    pub fn word(w: Word) -> HElement {
        HElement::term(w, QtPoly::one())
    }

    pub fn term(w: Word, c: QtPoly) -> HElement {
        let mut out = HElement::zero();
        out.add_term(w, &c);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coeff(&self, w: &Word) -> QtPoly {
        self.0.get(w).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, &QtPoly)> {
        self.0.iter()
    }

    pub fn add_term(&mut self, w: Word, c: &QtPoly) {
        if c.is_zero() {
            return;
        }
        match self.0.get_mut(&w) {
            Some(e) => {
                *e += c;
                if e.is_zero() {
                    self.0.remove(&w);
                }
            }
            None => {
                self.0.insert(w, c.clone());
            }
        }
    }

    /// Adds `c * t^deg * w` for a rational `c`.
    pub fn add_monomial(&mut self, w: Word, c: &Rational, deg: u32) {
        if num_traits::Zero::is_zero(c) {
            return;
        }
        match self.0.get_mut(&w) {
            Some(e) => {
                e.add_term(deg, c);
                if e.is_zero() {
                    self.0.remove(&w);
                }
            }
            None => {
                self.0.insert(w, QtPoly::monomial(c.clone(), deg));
            }
        }
    }

    pub fn add_scaled(&mut self, other: &HElement, c: &QtPoly) {
        if c.is_zero() {
            return;
        }
        for (w, v) in &other.0 {
            self.add_term(w.clone(), &(v * c));
        }
    }

    pub fn scale(&self, c: &QtPoly) -> HElement {
        let mut out = HElement::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn scale_rational(&self, c: &Rational) -> HElement {
        self.scale(&QtPoly::constant(c.clone()))
    }

    /// Bilinear extension of concatenation.
    pub fn concat(&self, other: &HElement) -> HElement {
        let mut out = HElement::zero();
        for (w1, c1) in &self.0 {
            for (w2, c2) in &other.0 {
                out.add_term(w1.concat(w2), &(c1 * c2));
            }
        }
        out
    }

    /// Left-multiply every word by `prefix`.
    pub fn prepend(&self, prefix: &Word) -> HElement {
        HElement(
            self.0
                .iter()
                .map(|(w, c)| (prefix.concat(w), c.clone()))
                .collect(),
        )
    }

    /// Right-multiply every word by `suffix`.
    pub fn append(&self, suffix: &Word) -> HElement {
        HElement(
            self.0
                .iter()
                .map(|(w, c)| (w.concat(suffix), c.clone()))
                .collect(),
        )
    }

    pub fn in_h0(&self) -> bool {
        self.0.keys().all(|w| w.is_admissible())
    }

    pub fn in_h1(&self) -> bool {
        self.0.keys().all(|w| w.in_h1())
    }

    /// Substitute a rational value for `t` in every coefficient.
    pub fn at_t(&self, t0: &Rational) -> HElement {
        let mut out = HElement::zero();
        for (w, c) in &self.0 {
            out.add_term(w.clone(), &QtPoly::constant(c.eval(t0)));
        }
        out
    }

    /// Terms whose words differ between `self` and `other`, as `(word, self, other)`.
    pub fn diff(&self, other: &HElement) -> Vec<(Word, QtPoly, QtPoly)> {
        let d = self - other;
        d.0.keys()
            .map(|w| (w.clone(), self.coeff(w), other.coeff(w)))
            .collect()
    }

    pub fn to_records(&self) -> Vec<TermRecord> {
        self.0
            .iter()
            .rev()
            .map(|(w, c)| TermRecord {
                word: w.to_string(),
                coeff: c.to_string(),
            })
            .collect()
    }

    pub fn from_records(recs: &[TermRecord]) -> Result<HElement, HParseError> {
        let mut out = HElement::zero();
        for r in recs {
            let w: Word = r.word.parse()?;
            let c: QtPoly = r
                .coeff
                .parse()
                .map_err(|_| HParseError::Coeff(r.coeff.clone()))?;
            out.add_term(w, &c);
        }
        Ok(out)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self.to_records()).expect("records serialize")
    }
}

#[derive(Debug, thiserror::Error)]
pub enum HParseError {
    #[error(transparent)]
    Word(#[from] WordError),
    #[error("bad coefficient {0:?}")]
    Coeff(String),
}

impl From<Word> for HElement {
    fn from(w: Word) -> Self {
        HElement::word(w)
    }
}

impl From<Letter> for HElement {
    fn from(l: Letter) -> Self {
        HElement::word(Word::from_letters(vec![l]))
    }
}

impl AddAssign<&HElement> for HElement {
    fn add_assign(&mut self, rhs: &HElement) {
        for (w, c) in &rhs.0 {
            self.add_term(w.clone(), c);
        }
    }
}

impl Add for &HElement {
    type Output = HElement;
    fn add(self, rhs: &HElement) -> HElement {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Neg for &HElement {
    type Output = HElement;
    fn neg(self) -> HElement {
        HElement(self.0.iter().map(|(w, c)| (w.clone(), -c)).collect())
    }
}

impl Sub for &HElement {
    type Output = HElement;
    fn sub(self, rhs: &HElement) -> HElement {
        let mut out = self.clone();
        out += &(-rhs);
        out
    }
}

/// Terms print from the top of the graded-lex order down, e.g.
/// `2*xyxy + 4*xxyy + (-6*t)*xxxy`.
impl fmt::Display for HElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        for (i, (w, c)) in self.0.iter().rev().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            match c.to_factor_string() {
                None => write!(f, "{w}")?,
                Some(s) if w.is_empty() => write!(f, "{s}")?,
                Some(s) => write!(f, "{s}*{w}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::w;

    fn hw(s: &str) -> HElement {
        HElement::word(w(s))
    }

    fn p(s: &str) -> QtPoly {
        s.parse().unwrap()
    }

    #[test]
    fn add_examples() {
        assert!((&hw("xy") + &hw("xy").scale(&p("-1"))).is_zero());
        assert_eq!(&HElement::zero() + &hw("yx"), hw("yx"));
        let s = &hw("xy") + &hw("yx");
        assert_eq!(s.len(), 2);
        assert_eq!(s.coeff(&w("xy")), QtPoly::one());
    }

    #[test]
    fn scale_examples() {
        assert_eq!(hw("xy").scale(&QtPoly::t()).coeff(&w("xy")), QtPoly::t());
        assert!(hw("xy").scale(&QtPoly::zero()).is_zero());
        assert_eq!(hw("y").scale(&p("1 - t")).to_string(), "(1 - t)*y");
    }

    #[test]
    fn concat_examples() {
        assert_eq!(hw("x").concat(&hw("y")), hw("xy"));
        assert_eq!(hw("xy").concat(&hw("y")), hw("xyy"));
        let v = &hw("xy") + &hw("yx").scale(&QtPoly::t());
        assert_eq!(HElement::one().concat(&v), v);
    }

    #[test]
    fn subalgebra_predicates() {
        let a = &hw("xy") + &HElement::one().scale(&QtPoly::t());
        assert!(a.in_h0());
        assert!(!hw("yx").in_h0());
        assert!(hw("yy").in_h1());
        assert!(!hw("yy").in_h0());
    }

    #[test]
    fn display_and_json() {
        let mut e = HElement::zero();
        e.add_term(w("xyxy"), &p("2"));
        e.add_term(w("xxyy"), &p("4"));
        e.add_term(w("xxxy"), &p("-6*t"));
        assert_eq!(e.to_string(), "2*xyxy + 4*xxyy + (-6*t)*xxxy");
        let back = HElement::from_records(&e.to_records()).unwrap();
        assert_eq!(back, e);
        assert_eq!(HElement::zero().to_string(), "0");
        assert_eq!(HElement::one().scale(&p("3")).to_string(), "3");
    }
}
