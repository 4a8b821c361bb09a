//! Products of two height-one words `x^a y^r ⧢ x^b y^s`.

use num_bigint::BigInt;
use num_traits::Zero;

use super::{add_int, Wb};
use crate::coeffs::binom;
use crate::compositions::weak_compositions;
use crate::halg::HElement;
use crate::imzv::{zt_map, ZetaCombo};
use crate::words::{word_from_exponents, Word};

fn c(n: i64, k: i64) -> BigInt {
    binom(n, k)
}

/// `x^{α1} y ... y x^{αl}` with no trailing `y`.
fn pre(al: &[usize]) -> Wb {
    let (last, head) = al.split_last().expect("nonempty");
    Wb::new().ys(head).x(*last)
}

fn push(out: &mut HElement, w: Word, coef: &BigInt, tdeg: u32) {
    if !coef.is_zero() {
        add_int(out, w, coef, tdeg);
    }
}

/// `x^a y^r ⧢ x^b y^s` as a shuffle part plus the `-t` families, two of
/// them present only when `s = 1` or `r = 1`.
pub fn height_one_word_formula(a: usize, r: usize, b: usize, s: usize) -> HElement {
    assert!(a >= 1 && r >= 1 && b >= 1 && s >= 1);
    let (ai, ri, bi, si) = (a as i64, r as i64, b as i64, s as i64);
    let n = r + s;
    let mut out = HElement::zero();

    for al in weak_compositions(a + b, n) {
        let mut coef = BigInt::zero();
        for l in 1..=r {
            if (l + 2..=n).all(|j| al[j - 1] == 0) {
                let l = l as i64;
                coef += c(al[0] as i64, ai) * c(ri + si - l - 1, ri - l);
            }
        }
        for l in 1..=s {
            if (l + 2..=n).all(|j| al[j - 1] == 0) {
                let l = l as i64;
                coef += c(al[0] as i64, bi) * c(ri + si - l - 1, si - l);
            }
        }
        push(&mut out, word_from_exponents(&al), &coef, 0);
    }

    // y^{i+1} x y^{r+s-l-i-2} tails after a prefix ending in x
    let mut tails = |l: usize, first: i64, lead_own: i64, own: i64, other: i64| {
        let li = l as i64;
        for al in weak_compositions(a + b, l + 1) {
            let base = c(al[0] as i64, lead_own);
            if base.is_zero() {
                continue;
            }
            for i in first.max(0)..=ri + si - li - 3 {
                let k = &base * (c(i, own) + c(i, other));
                let w = pre(&al)
                    .y((i + 1) as usize)
                    .x(1)
                    .y((ri + si - li - i - 2) as usize)
                    .done();
                push(&mut out, w, &-k, 1);
            }
        }
    };
    for l in 1..r {
        let li = l as i64;
        tails(l, (ri - li).min(si - 1) - 1, ai, ri - li - 1, si - 2);
    }
    for l in 1..s {
        let li = l as i64;
        tails(l, (ri - 1).min(si - li) - 1, bi, si - li - 1, ri - 2);
    }

    let mut tail_x = |l: usize, lead: i64, ys: usize| {
        for al in weak_compositions(a + b, l + 1) {
            let w = Wb::new().ys(&al[..l]).x(al[l] + 1).y(ys).done();
            push(&mut out, w, &-c(al[0] as i64, lead), 1);
        }
    };
    if s == 1 {
        for l in 1..r {
            tail_x(l, ai, r - l);
        }
    }
    if r == 1 {
        for l in 1..s {
            tail_x(l, bi, s - l);
        }
    }

    let mut joined = |parts: usize, lead: i64, ys: usize| {
        for al in weak_compositions(a + b, parts + 1) {
            let w = Wb::new()
                .ys(&al[..parts - 1])
                .x(al[parts - 1] + al[parts] + 1)
                .y(ys)
                .done();
            push(&mut out, w, &-c(al[0] as i64, lead), 1);
        }
    };
    joined(r, ai, s);
    joined(s, bi, r);
    out
}

/// `ζ^t(a+1, 1,...,1) ζ^t(b+1, 1,...,1)` with `r-1` and `s-1` ones.
pub fn theorem2_decomposition(a: usize, b: usize, r: usize, s: usize) -> ZetaCombo {
    zt_map(&height_one_word_formula(a, r, b, s)).expect("admissible factors give an H0 product")
}

fn eq48_core(m: usize, j: usize, n: usize, k: usize, with_k1_family: bool) -> HElement {
    assert!(m >= 1 && j >= 1 && n >= 1 && k >= 1);
    let (mi, ji, ni, ki) = (m as i64, j as i64, n as i64, k as i64);
    let mut out = HElement::zero();

    for n1 in 0..=n {
        let c0 = c(mi + n1 as i64 - 1, mi - 1);
        for m1 in 0..=j {
            let m2 = (j - m1) as i64;
            for mut al in weak_compositions(n - n1, m1 + 1) {
                al[0] += m + n1;
                push(&mut out, pre(&al).y((m2 + ki) as usize).done(), &(&c0 * c(m2 + ki - 1, ki - 1)), 0);
                for i in (m2.min(ki - 1) - 1).max(0)..=m2 + ki - 3 {
                    let coef = &c0 * (c(i, m2 - 1) + c(i, ki - 2));
                    let w = pre(&al)
                        .y((i + 1) as usize)
                        .x(1)
                        .y((m2 + ki - i - 2) as usize)
                        .done();
                    push(&mut out, w, &-coef, 1);
                }
            }
        }
        for j1 in 0..=n - n1 {
            let j2 = n - n1 - j1;
            for al in weak_compositions(j1, j) {
                let w = if j == 1 {
                    Wb::new().x(al[0] + m + n1 + j2 + 1).y(k).done()
                } else {
                    let mut head = al[..j - 1].to_vec();
                    head[0] += m + n1;
                    Wb::new().ys(&head).x(al[j - 1] + j2 + 1).y(k).done()
                };
                push(&mut out, w, &-&c0, 1);
            }
        }
        if with_k1_family && k == 1 {
            for i in 0..j {
                for mut al in weak_compositions(n - n1, i + 1) {
                    al[0] += m + n1;
                    let w = pre(&al).x(1).y(j - i).done();
                    push(&mut out, w, &-&c0, 1);
                }
            }
        }
    }

    for k1 in 1..=k {
        let k1i = k1 as i64;
        for m1 in 0..m {
            let m2 = m - 1 - m1;
            let c0 = c(m1 as i64 + ni - 1, ni - 1);
            for mut bb in weak_compositions(m2, k1 + 1) {
                bb[0] += n + m1;
                let head = Wb::new().ys(&bb[..k1]).x(bb[k1] + 1);
                let e = ji + ki - k1i;
                push(&mut out, head.clone().y(e as usize).done(), &(&c0 * c(e, ji)), 0);
                for i in (ji.min(ki - k1i) - 1).max(0)..=e - 2 {
                    let coef = &c0 * (c(i, ji - 1) + c(i, ki - k1i - 1));
                    let w = head.clone().y(i as usize).x(1).y((e - i - 1) as usize).done();
                    push(&mut out, w, &-coef, 1);
                }
            }
        }
    }

    for m1 in 0..m {
        let c0 = c(m1 as i64 + ni - 1, ni - 1);
        for m2 in 0..m - m1 {
            let m3 = m - 1 - m1 - m2;
            for mut al in weak_compositions(m2, k) {
                al[0] += n + m1;
                let (last, head) = al.split_last().unwrap();
                let w = Wb::new().ys(head).x(last + m3 + 2).y(j).done();
                push(&mut out, w, &-&c0, 1);
            }
        }
    }
    out
}

/// `x^m y^j ⧢ x^n y^k` via the block recursion, fully expanded. For `k = 1`
/// this includes the family `-t x^{α1+m+n1} y ... x^{α_{i+1}} x y^{j-i}`
/// that the typeset version omits.
pub fn eq48_word_formula(m: usize, j: usize, n: usize, k: usize) -> HElement {
    eq48_core(m, j, n, k, true)
}

/// The typeset expansion as printed; differs from the product when `k = 1`.
pub fn eq48_word_formula_printed(m: usize, j: usize, n: usize, k: usize) -> HElement {
    eq48_core(m, j, n, k, false)
}
