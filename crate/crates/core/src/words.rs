//! Words over the alphabet {x, y}, zeta indices and the z_k encoding.
//!
//! A word `x^{l1-1} y x^{l2-1} y ... x^{ln-1} y` corresponds to the index
//! `(l1, ..., ln)`. Words print as lowercase strings with the empty word
//! written `1`; indices print as `(3,1,2)`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WordError {
    #[error("invalid letter {0:?} in word (expected x or y)")]
    BadLetter(char),
    #[error("word must be nonempty and end in y to have an index")]
    NotInH1,
    #[error("word {0} is not admissible")]
    NotAdmissible(String),
    #[error("malformed index {0:?}")]
    BadIndex(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    X,
    Y,
}

impl Letter {
    pub fn swap(self) -> Letter {
        match self {
            Letter::X => Letter::Y,
            Letter::Y => Letter::X,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::X => 'x',
            Letter::Y => 'y',
        }
    }
}

/// A finite word. Ordered graded-lexicographically: shorter words first,
/// then letter by letter with `x < y`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Word {
        Word(Vec::new())
    }

    pub fn from_letters(letters: Vec<Letter>) -> Word {
        Word(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn count(&self, l: Letter) -> usize {
        self.0.iter().filter(|&&c| c == l).count()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// `x^a y^b`-style builder helper.
    pub fn power(l: Letter, n: usize) -> Word {
        Word(vec![l; n])
    }

    pub fn push(&mut self, l: Letter) {
        self.0.push(l);
    }

    pub fn push_n(&mut self, l: Letter, n: usize) {
        self.0.extend(std::iter::repeat_n(l, n));
    }

    pub fn extend(&mut self, other: &Word) {
        self.0.extend_from_slice(&other.0);
    }

    /// True iff the word ends in `y` (monomials of H^1) or is empty.
    pub fn in_h1(&self) -> bool {
        self.0.last().is_none_or(|&l| l == Letter::Y)
    }

    pub fn is_admissible(&self) -> bool {
        match (self.0.first(), self.0.last()) {
            (None, _) => true,
            (Some(&f), Some(&l)) => f == Letter::X && l == Letter::Y,
            _ => unreachable!(),
        }
    }

    /// Duality: reverse and exchange x and y. Only defined on nonempty admissible words.
    pub fn dual(&self) -> Result<Word, WordError> {
        if self.is_empty() || !self.is_admissible() {
            return Err(WordError::NotAdmissible(self.to_string()));
        }
        Ok(self.dual_unchecked())
    }

    /// Reverse and swap without the admissibility check.
    pub fn dual_unchecked(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.swap()).collect())
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for l in &self.0 {
            write!(f, "{}", l.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() || s == "1" {
            return Ok(Word::empty());
        }
        s.chars()
            .map(|c| match c {
                'x' => Ok(Letter::X),
                'y' => Ok(Letter::Y),
                other => Err(WordError::BadLetter(other)),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Word)
    }
}

/// Parse a word literal in tests and examples. Panics on bad input.
pub fn w(s: &str) -> Word {
    s.parse().expect("valid word literal")
}

/// Argument list `(l1, ..., ln)` of a zeta symbol. Parts are positive.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Index(Vec<u32>);

impl Index {
    pub fn new(parts: Vec<u32>) -> Result<Index, WordError> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(WordError::BadIndex(format!("{parts:?}")));
        }
        Ok(Index(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn depth(&self) -> usize {
        self.0.len()
    }

    pub fn height(&self) -> usize {
        self.0.iter().filter(|&&l| l > 1).count()
    }

    pub fn is_admissible(&self) -> bool {
        self.0[0] >= 2
    }

    /// All indices of the given weight, in lexicographic order of parts.
    pub fn all_of_weight(weight: u32) -> Vec<Index> {
        crate::compositions::positive_compositions_any_length(weight as usize)
            .into_iter()
            .map(|c| Index(c.into_iter().map(|p| p as u32).collect()))
            .collect()
    }
}

impl fmt::Display for Index {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

impl FromStr for Index {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let inner = t
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .unwrap_or(t);
        let parts = inner
            .split(',')
            .map(|p| p.trim().parse::<u32>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| WordError::BadIndex(s.to_string()))?;
        Index::new(parts).map_err(|_| WordError::BadIndex(s.to_string()))
    }
}

/// z_k = x^{k-1} y.
pub fn z(k: u32) -> Word {
    let mut v = Word::power(Letter::X, k as usize - 1);
    v.push(Letter::Y);
    v
}

pub fn word_from_index(idx: &Index) -> Word {
    let mut out = Word::empty();
    for &l in idx.parts() {
        out.push_n(Letter::X, l as usize - 1);
        out.push(Letter::Y);
    }
    out
}

pub fn index_from_word(word: &Word) -> Result<Index, WordError> {
    if word.is_empty() || !word.in_h1() {
        return Err(WordError::NotInH1);
    }
    let mut parts = Vec::new();
    let mut run = 1u32;
    for &l in word.letters() {
        match l {
            Letter::X => run += 1,
            Letter::Y => {
                parts.push(run);
                run = 1;
            }
        }
    }
    Ok(Index(parts))
}

/// Word `x^{e1} y x^{e2} y ... x^{er} y` for a vector of x-exponents.
pub fn word_from_exponents(exps: &[usize]) -> Word {
    let mut out = Word::empty();
    for &e in exps {
        out.push_n(Letter::X, e);
        out.push(Letter::Y);
    }
    out
}

/// Every word of exactly the given length, in graded-lex order.
pub fn all_words_of_length(n: usize) -> Vec<Word> {
    (0..1usize << n)
        .map(|bits| {
            Word(
                (0..n)
                    .map(|i| {
                        if bits >> (n - 1 - i) & 1 == 1 {
                            Letter::Y
                        } else {
                            Letter::X
                        }
                    })
                    .collect(),
            )
        })
        .collect()
}

pub fn all_words_up_to(n: usize) -> Vec<Word> {
    (0..=n).flat_map(all_words_of_length).collect()
}
