//! Product engines: the recursive t-shuffle (the reference everything else
//! is checked against), the plain combinatorial shuffle, and the small
//! closed forms and recursive splittings built on them.

use itertools::Itertools;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::coeffs::{binom_q, QtPoly, Rational};
use crate::compositions::weak_compositions;
use crate::halg::HElement;
use crate::words::{Letter, Word};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ShuffleError {
    #[error("split position k={k} out of range 1..={len}")]
    SplitOutOfRange { k: usize, len: usize },
}

/// `w1 ⧢ w2` by direct recursion on
/// `aw1 ⧢ bw2 = a(w1 ⧢ bw2) + b(aw1 ⧢ w2) - δ(w1)ρ(a)bw2 - δ(w2)ρ(b)aw1`.
///
/// The table holds `w1[i..] ⧢ w2[j..]` and is local to the call.
pub fn tshuffle_words(w1: &Word, w2: &Word) -> HElement {
    let a = w1.letters();
    let b = w2.letters();
    let (n1, n2) = (a.len(), b.len());
    let mut table: Vec<Vec<HElement>> = vec![vec![HElement::zero(); n2 + 1]; n1 + 1];
    for i in (0..=n1).rev() {
        for j in (0..=n2).rev() {
            let cell = if i == n1 {
                HElement::word(Word::from_letters(b[j..].to_vec()))
            } else if j == n2 {
                HElement::word(Word::from_letters(a[i..].to_vec()))
            } else {
                let mut acc = table[i + 1][j].prepend(&Word::from_letters(vec![a[i]]));
                acc += &table[i][j + 1].prepend(&Word::from_letters(vec![b[j]]));
                if i + 1 == n1 && a[i] == Letter::Y {
                    let mut v = vec![Letter::X];
                    v.extend_from_slice(&b[j..]);
                    acc.add_term(Word::from_letters(v), &-&QtPoly::t());
                }
                if j + 1 == n2 && b[j] == Letter::Y {
                    let mut v = vec![Letter::X];
                    v.extend_from_slice(&a[i..]);
                    acc.add_term(Word::from_letters(v), &-&QtPoly::t());
                }
                acc
            };
            table[i][j] = cell;
        }
    }
    std::mem::take(&mut table[0][0])
}

/// Bilinear extension of [`tshuffle_words`].
pub fn tshuffle(u: &HElement, v: &HElement) -> HElement {
    let mut out = HElement::zero();
    for (w1, c1) in u.terms() {
        for (w2, c2) in v.terms() {
            out.add_scaled(&tshuffle_words(w1, w2), &(c1 * c2));
        }
    }
    out
}

/// Sum over all order-preserving interleavings of the two letter sequences.
pub fn shuffle_combinatorial(w1: &Word, w2: &Word) -> HElement {
    let (n1, n2) = (w1.len(), w2.len());
    let mut out = HElement::zero();
    let one = Rational::one();
    for pos in (0..n1 + n2).combinations(n1) {
        let mut letters = Vec::with_capacity(n1 + n2);
        let (mut i, mut j) = (0, 0);
        let mut next = pos.iter().peekable();
        for slot in 0..n1 + n2 {
            if next.peek() == Some(&&slot) {
                next.next();
                letters.push(w1.letters()[i]);
                i += 1;
            } else {
                letters.push(w2.letters()[j]);
                j += 1;
            }
        }
        out.add_monomial(Word::from_letters(letters), &one, 0);
    }
    out
}

/// Bilinear plain shuffle.
pub fn shuffle(u: &HElement, v: &HElement) -> HElement {
    let mut out = HElement::zero();
    for (w1, c1) in u.terms() {
        for (w2, c2) in v.terms() {
            out.add_scaled(&shuffle_combinatorial(w1, w2), &(c1 * c2));
        }
    }
    out
}

fn y_pow(n: usize) -> Word {
    Word::power(Letter::Y, n)
}

fn x_pow(n: usize) -> Word {
    Word::power(Letter::X, n)
}

/// `y^i x y^j`.
pub(crate) fn yxy(i: usize, j: usize) -> Word {
    let mut w = y_pow(i);
    w.push(Letter::X);
    w.push_n(Letter::Y, j);
    w
}

/// Closed form of `y^m ⧢ y^n` for `m, n >= 1`.
pub fn yy_closed_form(m: usize, n: usize) -> HElement {
    let (mi, ni) = (m as i64, n as i64);
    let mut out = HElement::zero();
    out.add_monomial(y_pow(m + n), &binom_q(mi + ni, ni), 0);
    let lo = (mi.min(ni) - 1).max(0);
    for i in lo..=mi + ni - 2 {
        let c = binom_q(i, mi - 1) + binom_q(i, ni - 1);
        out.add_monomial(yxy(i as usize, (mi + ni - i - 1) as usize), &-c, 1);
    }
    out
}

/// `B_{n+1}^m`: sum of `x^{m1} y ... x^{mn} y x^{m_{n+1}}` over compositions of `m`.
pub fn block_b(n_plus_1: usize, m: usize) -> HElement {
    let mut out = HElement::zero();
    if n_plus_1 == 0 {
        return out;
    }
    let one = Rational::one();
    for c in weak_compositions(m, n_plus_1) {
        let mut w = Word::empty();
        for (idx, &e) in c.iter().enumerate() {
            if idx > 0 {
                w.push(Letter::Y);
            }
            w.push_n(Letter::X, e);
        }
        out.add_monomial(w, &one, 0);
    }
    out
}

/// `C_n^{m-1}`: sum over `0 <= i <= m-1` and compositions of `i` into `n`
/// parts of `x^{m1} y ... x^{m_{n-1}} y x^{m_n + m - i + 1}`. Zero when `n = 0`
/// or `m = 0`.
pub fn block_c(n: usize, m_minus_1: i64) -> HElement {
    let mut out = HElement::zero();
    if n == 0 || m_minus_1 < 0 {
        return out;
    }
    let m = (m_minus_1 + 1) as usize;
    let one = Rational::one();
    for i in 0..m {
        for c in weak_compositions(i, n) {
            let mut w = Word::empty();
            for (idx, &e) in c.iter().enumerate() {
                if idx + 1 < n {
                    w.push_n(Letter::X, e);
                    w.push(Letter::Y);
                } else {
                    w.push_n(Letter::X, e + m - i + 1);
                }
            }
            out.add_monomial(w, &one, 0);
        }
    }
    out
}

/// `x^m ⧢ y^n = B_{n+1}^m - t C_n^{m-1}`.
pub fn xm_shuffle_yn(m: usize, n: usize) -> HElement {
    let mut out = block_b(n + 1, m);
    out.add_scaled(&block_c(n, m as i64 - 1), &-&QtPoly::t());
    out
}

/// `ρ` applied to the last letter of `w`, as a coefficient and a word.
/// Returns `None` when the last letter is `x` (so the term vanishes).
fn rho_last(w: &[Letter]) -> Option<Word> {
    match w.last() {
        Some(Letter::Y) => {
            let mut v = w[..w.len() - 1].to_vec();
            v.push(Letter::X);
            Some(Word::from_letters(v))
        }
        _ => None,
    }
}

fn slice_word(s: &[Letter]) -> Word {
    Word::from_letters(s.to_vec())
}

/// The three-part splitting at a fixed position `k` of `a`:
/// prefix shuffles around `a_k`, the `ρ(b_n)` correction and, when `k` is
/// the last position, the `ρ(a_m)` correction. Inner t-shuffles of the
/// suffixes are evaluated by the same splitting at `k = 1`, so the result
/// never consults [`tshuffle_words`].
pub fn split_formula(a_word: &Word, b_word: &Word, k: usize) -> Result<HElement, ShuffleError> {
    let m = a_word.len();
    if k == 0 || k > m {
        return Err(ShuffleError::SplitOutOfRange { k, len: m });
    }
    Ok(split_inner(a_word.letters(), b_word.letters(), k))
}

fn split_product(a: &[Letter], b: &[Letter]) -> HElement {
    if a.is_empty() {
        return HElement::word(slice_word(b));
    }
    if b.is_empty() {
        return HElement::word(slice_word(a));
    }
    split_inner(a, b, 1)
}

fn split_inner(a: &[Letter], b: &[Letter], k: usize) -> HElement {
    let (m, n) = (a.len(), b.len());
    let prefix = slice_word(&a[..k - 1]);
    let ak = Word::from_letters(vec![a[k - 1]]);
    let neg_t = -&QtPoly::t();
    let mut out = HElement::zero();
    for i in 0..=n {
        let left = shuffle_combinatorial(&prefix, &slice_word(&b[..i]));
        let right = split_product(&a[k..], &b[i..]);
        out += &left.concat(&HElement::word(ak.clone())).concat(&right);
    }
    if n > 0 {
        if let Some(rb) = rho_last(b) {
            let tail = slice_word(&a[k - 1..]);
            out.add_scaled(&shuffle_combinatorial(&prefix, &rb).append(&tail), &neg_t);
        }
    }
    if k == m && a[m - 1] == Letter::Y {
        for i in 0..n {
            let mut tail = Word::from_letters(vec![Letter::X]);
            tail.extend(&slice_word(&b[i..]));
            let left = shuffle_combinatorial(&slice_word(&a[..m - 1]), &slice_word(&b[..i]));
            out.add_scaled(&left.append(&tail), &neg_t);
        }
    }
    out
}

/// A word given as a run-length list of `(letter, exponent)` blocks.
pub type Blocks = Vec<(Letter, usize)>;

fn expand_blocks(blocks: &[(Letter, usize)]) -> Word {
    let mut w = Word::empty();
    for &(l, e) in blocks {
        w.push_n(l, e);
    }
    w
}

fn normalize_blocks(blocks: &[(Letter, usize)]) -> Blocks {
    blocks.iter().copied().filter(|&(_, e)| e > 0).collect()
}

/// The block-recursive expansion of
/// `(a_1^{m_1} ... a_k^{m_k}) ⧢ (b_1^{n_1} ... b_l^{n_l})`, splitting after
/// the first block of the left factor. Zero-exponent blocks are dropped
/// first; the remaining t-shuffles recurse through this function.
pub fn block_recursive(blocks_a: &[(Letter, usize)], blocks_b: &[(Letter, usize)]) -> HElement {
    block_rec(blocks_a, blocks_b, false)
}

/// The same expansion with the `δ_{k,1}` sum over `j < l` only and
/// `a_1^{m_1}` in the last term, as typeset. Not equal to the product in
/// general; kept for the discrepancy report.
pub fn block_recursive_printed(blocks_a: &[(Letter, usize)], blocks_b: &[(Letter, usize)]) -> HElement {
    block_rec(blocks_a, blocks_b, true)
}

fn block_rec(blocks_a: &[(Letter, usize)], blocks_b: &[(Letter, usize)], printed: bool) -> HElement {
    let a = normalize_blocks(blocks_a);
    let b = normalize_blocks(blocks_b);
    if a.is_empty() {
        return HElement::word(expand_blocks(&b));
    }
    if b.is_empty() {
        return HElement::word(expand_blocks(&a));
    }
    let (a1, m1) = a[0];
    let rest_a = &a[1..];
    let head = x_or_y(a1, m1 - 1);
    let a1w = Word::from_letters(vec![a1]);
    let l = b.len();
    let neg_t = -&QtPoly::t();
    let mut out = HElement::zero();

    // prefix of b ending inside block j, then a_1 placed, then the remainder
    for j in 0..l {
        let (bj, nj) = b[j];
        for nj1 in 1..=nj {
            let mut bpre = b[..j].to_vec();
            bpre.push((bj, nj1));
            let mut bsuf = vec![(bj, nj - nj1)];
            bsuf.extend_from_slice(&b[j + 1..]);
            let left = shuffle_combinatorial(&head, &expand_blocks(&bpre));
            let right = block_rec(rest_a, &bsuf, printed);
            out += &left.append(&a1w).concat(&right);

            let last = if printed { j + 1 == l } else { j + 1 == l && nj1 == nj };
            if rest_a.is_empty() && a1 == Letter::Y && !last {
                let mut tail = Word::from_letters(vec![Letter::X]);
                tail.extend(&expand_blocks(&bsuf));
                out.add_scaled(&left.append(&tail), &neg_t);
            }
        }
    }
    out += &block_rec(rest_a, &b, printed).prepend(&x_or_y(a1, m1));

    if rest_a.is_empty() && a1 == Letter::Y {
        let mut w = head.clone();
        w.push(Letter::X);
        w.extend(&expand_blocks(&b));
        out.add_term(w, &neg_t);
    }

    let (bl, _) = b[l - 1];
    if bl == Letter::Y {
        let bw = expand_blocks(&b);
        let rb = rho_last(bw.letters()).expect("ends in y");
        let mut tail = a1w.clone();
        tail.extend(&expand_blocks(rest_a));
        let lead = if printed { x_or_y(a1, m1) } else { head.clone() };
        out.add_scaled(&shuffle_combinatorial(&lead, &rb).append(&tail), &neg_t);
    }
    out
}

fn x_or_y(l: Letter, n: usize) -> Word {
    match l {
        Letter::X => x_pow(n),
        Letter::Y => y_pow(n),
    }
}

/// Coefficient of `t^0` with every coefficient cut to its constant term.
pub fn t_zero_part(v: &HElement) -> HElement {
    v.at_t(&Rational::zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::{all_words_up_to, w};

    fn p(s: &str) -> QtPoly {
        s.parse().unwrap()
    }

    fn elem(pairs: &[(&str, &str)]) -> HElement {
        let mut out = HElement::zero();
        for (word, c) in pairs {
            out.add_term(w(word), &p(c));
        }
        out
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(tshuffle_words(&w("x"), &Word::empty()), elem(&[("x", "1")]));
        assert_eq!(
            tshuffle_words(&w("x"), &w("y")),
            elem(&[("xy", "1"), ("yx", "1"), ("xx", "-t")])
        );
        assert_eq!(
            tshuffle_words(&w("y"), &w("y")),
            elem(&[("yy", "2"), ("xy", "-2*t")])
        );
        assert_eq!(
            tshuffle_words(&w("xy"), &w("xy")),
            elem(&[("xyxy", "2"), ("xxyy", "4"), ("xxxy", "-6*t")])
        );
        assert!(tshuffle(&HElement::word(w("xy")), &HElement::zero()).is_zero());
        let v = elem(&[("xy", "t"), ("yy", "1 - t")]);
        assert_eq!(tshuffle(&HElement::one(), &v), v);
    }

    #[test]
    fn combinatorial_examples() {
        assert_eq!(
            shuffle_combinatorial(&w("x"), &w("y")),
            elem(&[("xy", "1"), ("yx", "1")])
        );
        assert_eq!(
            shuffle_combinatorial(&w("xy"), &w("y")),
            elem(&[("xyy", "2"), ("yxy", "1")])
        );
        assert_eq!(
            shuffle_combinatorial(&Word::empty(), &w("xyx")),
            elem(&[("xyx", "1")])
        );
    }

    #[test]
    fn yy_examples() {
        assert_eq!(yy_closed_form(1, 1), elem(&[("yy", "2"), ("xy", "-2*t")]));
        assert_eq!(
            yy_closed_form(2, 1),
            elem(&[("yyy", "3"), ("xyy", "-t"), ("yxy", "-2*t")])
        );
        assert_eq!(yy_closed_form(2, 2).coeff(&w("yyyy")), p("6"));
    }

    #[test]
    fn block_examples() {
        assert_eq!(block_b(2, 1), elem(&[("xy", "1"), ("yx", "1")]));
        assert_eq!(block_c(1, 0), elem(&[("xx", "1")]));
        assert_eq!(
            xm_shuffle_yn(1, 1),
            elem(&[("xy", "1"), ("yx", "1"), ("xx", "-t")])
        );
        assert_eq!(block_b(4, 0), elem(&[("yyy", "1")]));
        assert!(block_c(3, -1).is_zero());
        assert_eq!(xm_shuffle_yn(3, 0), elem(&[("xxx", "1")]));
    }

    #[test]
    fn split_examples() {
        assert_eq!(
            split_formula(&w("x"), &w("y"), 1).unwrap(),
            elem(&[("xy", "1"), ("yx", "1"), ("xx", "-t")])
        );
        assert_eq!(
            split_formula(&w("xy"), &w("y"), 2).unwrap(),
            tshuffle_words(&w("xy"), &w("y"))
        );
        assert_eq!(split_formula(&w("yy"), &w("y"), 1).unwrap(), yy_closed_form(2, 1));
        assert!(split_formula(&w("xy"), &w("y"), 3).is_err());
        assert!(split_formula(&w("xy"), &w("y"), 0).is_err());
    }

    #[test]
    fn split_independent_of_k() {
        for a in all_words_up_to(4) {
            for b in all_words_up_to(3) {
                let want = tshuffle_words(&a, &b);
                for k in 1..=a.len() {
                    assert_eq!(split_formula(&a, &b, k).unwrap(), want, "{a} {b} k={k}");
                }
            }
        }
    }

    #[test]
    fn block_recursive_examples() {
        use Letter::{X, Y};
        assert_eq!(
            block_recursive(&[(X, 1)], &[(Y, 1)]),
            elem(&[("xy", "1"), ("yx", "1"), ("xx", "-t")])
        );
        assert_eq!(
            block_recursive(&[(X, 1), (Y, 1)], &[(X, 1), (Y, 1)]),
            elem(&[("xyxy", "2"), ("xxyy", "4"), ("xxxy", "-6*t")])
        );
        assert_eq!(block_recursive(&[(Y, 2)], &[(Y, 1)]), yy_closed_form(2, 1));
    }

    #[test]
    fn block_recursive_matches_oracle() {
        use Letter::{X, Y};
        let blocks = |word: &Word| -> Blocks {
            word.letters()
                .iter()
                .copied()
                .chunk_by(|&l| l)
                .into_iter()
                .map(|(l, g)| (l, g.count()))
                .collect()
        };
        for a in all_words_up_to(5) {
            for b in all_words_up_to(4) {
                let got = block_recursive(&blocks(&a), &blocks(&b));
                assert_eq!(got, tshuffle_words(&a, &b), "{a} {b}");
            }
        }
        // zero-exponent blocks are ignored
        assert_eq!(
            block_recursive(&[(X, 0), (Y, 2)], &[(X, 1), (Y, 0), (Y, 1)]),
            tshuffle_words(&w("yy"), &w("xy"))
        );
    }
}
