//! `x^a y^r ⧢ x^{b1} y^{s1} x^{b2} y^{s2}`, split by which word supplies
//! the first and the last `y`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use super::{add_int, Wb};
use crate::coeffs::binom;
use crate::compositions::weak_compositions;
use crate::halg::HElement;
use crate::words::Word;

fn c(n: usize, k: usize) -> BigInt {
    binom(n as i64, k as i64)
}

/// `-t` part of `y^m ⧢ y^n` for `m, n >= 1`: pairs `(i, c)` standing for
/// `c * y^i x y^{m+n-i-1}`.
fn yy_t(m: usize, n: usize) -> Vec<(usize, BigInt)> {
    let lo = m.min(n).saturating_sub(1);
    (lo..m + n - 1)
        .map(|i| (i, c(i, m - 1) + c(i, n - 1)))
        .filter(|(_, k)| !k.is_zero())
        .collect()
}

/// Ways to place `r2` letters `y` of the first word among the `s1 - 1` inner
/// `y`s of the second word's first block, ahead of its last one.
fn region(s1: usize, r2: usize) -> BigInt {
    if s1 == 1 {
        BigInt::from((r2 == 0) as u8)
    } else {
        c(r2 + s1 - 2, r2)
    }
}

#[derive(Default)]
struct Families(BTreeMap<&'static str, HElement>);

impl Families {
    fn add(&mut self, label: &'static str, w: Word, k: &BigInt, tdeg: u32) {
        if !k.is_zero() {
            add_int(self.0.entry(label).or_default(), w, k, tdeg);
        }
    }
    fn t(&mut self, label: &'static str, w: Word, k: &BigInt) {
        self.add(label, w, &-k, 1);
    }
}

fn ys(al: &[usize]) -> Wb {
    Wb::new().ys(al)
}

fn cat(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut v = a.to_vec();
    v.extend_from_slice(b);
    v
}

/// The shuffle part (label `"shuffle"`) and each `-t` correction family,
/// labelled by case and subcase (`"i.a"`, ..., `"iv.c"`).
pub fn height_two_families(
    a: usize,
    r: usize,
    b1: usize,
    s1: usize,
    b2: usize,
    s2: usize,
) -> BTreeMap<&'static str, HElement> {
    assert!(r >= 1 && s1 >= 1 && s2 >= 1);
    let mut f = Families::default();

    // (i) the first y is from x^a y^r, which finishes inside the second block
    // or before it
    for r1 in 1..=r {
        for r2 in 0..=r - r1 {
            for r3 in 0..=r - r1 - r2 {
                let r4 = r - r1 - r2 - r3;
                let g = region(s1, r2);
                if g.is_zero() {
                    continue;
                }
                let np = r1 + r2 + r3 + s1 + 1;
                let zeros = vec![0; r2 + s1 - 1];
                for p in weak_compositions(a + b1, r1 + 1) {
                    let cp = c(p[0], a) * &g;
                    if cp.is_zero() {
                        continue;
                    }
                    for q in weak_compositions(b2, r3 + 1) {
                        let pre = cat(&cat(&p, &zeros), &q);
                        f.add("shuffle", ys(&pre).y(r4 + s2 - 1).done(), &(&cp * c(r4 + s2 - 1, r4)), 0);
                        if r4 >= 1 && s2 >= 2 {
                            for (i, k) in yy_t(r4, s2 - 1) {
                                f.t("i.a", ys(&pre).y(i).x(1).y(r4 + s2 - i - 2).done(), &(&cp * k));
                            }
                        }
                        if r4 == 0 && r3 >= 1 {
                            let w = ys(&pre[..np - 2]).x(pre[np - 2] + pre[np - 1] + 1).y(s2).done();
                            f.t("i.b", w, &cp);
                        }
                        if s2 == 1 && r4 >= 1 {
                            f.t("i.c", ys(&pre[..np - 1]).x(pre[np - 1] + 1).y(r4).done(), &cp);
                        }
                        if r4 == 0 && r3 == 0 && r2 == 0 {
                            let w = ys(&pre[..r - 1])
                                .x(pre[r - 1] + pre[r] + 1)
                                .y(1)
                                .ys(&pre[r + 1..])
                                .y(s2 - 1)
                                .done();
                            f.t("i.e", w, &c(p[0], a));
                        }
                    }
                }
                if r3 == 0 && r4 == 0 && r2 >= 1 {
                    for p in weak_compositions(a + b1, r1 + 1) {
                        for i in r2 - 1..r2 + s1 - 2 {
                            let w = ys(&p)
                                .y(i)
                                .x(1)
                                .y(r2 + s1 - 3 - i)
                                .y(1)
                                .x(b2)
                                .y(s2)
                                .done();
                            f.t("i.d", w, &(c(p[0], a) * c(i, r2 - 1)));
                        }
                    }
                }
            }
        }
    }

    // (ii) the first y is from the second word, x^a y^r starts inside its
    // first block
    for l in 1..s1 {
        for r1 in 1..=r {
            for r2 in 0..=r - r1 {
                let r3 = r - r1 - r2;
                let g = c(r1 + s1 - l - 2, r1 - 1);
                let np = r1 + r2 + s1 + 1;
                let zeros = vec![0; r1 + s1 - l - 1];
                for p in weak_compositions(a + b1, l + 1) {
                    let cp = c(p[0], b1) * &g;
                    if cp.is_zero() {
                        continue;
                    }
                    for q in weak_compositions(b2, r2 + 1) {
                        let pre = cat(&cat(&p, &zeros), &q);
                        f.add("shuffle", ys(&pre).y(r3 + s2 - 1).done(), &(&cp * c(r3 + s2 - 1, r3)), 0);
                        if r3 >= 1 && s2 >= 2 {
                            for (i, k) in yy_t(r3, s2 - 1) {
                                f.t("ii.a", ys(&pre).y(i).x(1).y(r3 + s2 - 2 - i).done(), &(&cp * k));
                            }
                        }
                        if r3 == 0 && r2 >= 1 {
                            let w = ys(&pre[..np - 2]).x(pre[np - 2] + pre[np - 1] + 1).y(s2).done();
                            f.t("ii.b", w, &cp);
                        }
                        if s2 == 1 && r3 >= 1 {
                            f.t("ii.c", ys(&pre[..np - 1]).x(pre[np - 1] + 1).y(r3).done(), &cp);
                        }
                        if r2 == 0 && r3 == 0 && r1 == 1 {
                            let w = ys(&pre[..l]).x(pre[l] + 1).y(s1 - l).x(b2).y(s2).done();
                            f.t("ii.e", w, &cp);
                        }
                    }
                }
                if r2 == 0 && r3 == 0 && r1 >= 2 {
                    for p in weak_compositions(a + b1, l + 1) {
                        for i in r1 - 2..r1 + s1 - l - 2 {
                            let w = ys(&p)
                                .y(i)
                                .x(1)
                                .y(r1 + s1 - l - 3 - i)
                                .y(1)
                                .x(b2)
                                .y(s2)
                                .done();
                            f.t("ii.d", w, &(c(p[0], b1) * c(i, r1 - 2)));
                        }
                    }
                }
            }
        }
    }

    // (iii) x^a y^r starts after the first block and is the first to finish
    for r1 in 1..=r {
        let r2 = r - r1;
        let np = s1 + r1 + 1;
        for e in 0..=a {
            let rem = a - e;
            for p in weak_compositions(b1 + e, s1) {
                for q in weak_compositions(b2, r1 + 1) {
                    let mut pre = p.clone();
                    pre.push(q[0] + rem);
                    pre.extend_from_slice(&q[1..]);
                    let cp = c(p[0], b1) * c(q[0] + rem, rem);
                    if cp.is_zero() {
                        continue;
                    }
                    f.add("shuffle", ys(&pre).y(r2 + s2 - 1).done(), &(&cp * c(r2 + s2 - 1, r2)), 0);
                    if r2 >= 1 && s2 >= 2 {
                        for (i, k) in yy_t(r2, s2 - 1) {
                            f.t("iii.a", ys(&pre).y(i).x(1).y(r2 + s2 - 2 - i).done(), &(&cp * k));
                        }
                    }
                    if r2 == 0 {
                        let w = ys(&pre[..np - 2]).x(pre[np - 2] + pre[np - 1] + 1).y(s2).done();
                        f.t("iii.b", w, &cp);
                    }
                    if s2 == 1 && r2 >= 1 {
                        f.t("iii.c", ys(&pre[..np - 1]).x(pre[np - 1] + 1).y(r2).done(), &cp);
                    }
                }
            }
        }
    }

    // (iv) x^a y^r starts after the first block and finishes last
    for l in 1..=s2 {
        let np = s1 + l + 1;
        for e in 0..=a {
            let rem = a - e;
            for p in weak_compositions(b1 + e, s1) {
                for q in weak_compositions(rem, l + 1) {
                    let mut pre = p.clone();
                    pre.push(q[0] + b2);
                    pre.extend_from_slice(&q[1..]);
                    let cp = c(p[0], b1) * c(q[0] + b2, b2);
                    if cp.is_zero() {
                        continue;
                    }
                    f.add("shuffle", ys(&pre).y(r + s2 - l - 1).done(), &(&cp * c(r + s2 - l - 1, r - 1)), 0);
                    if r >= 2 && l < s2 {
                        for (i, k) in yy_t(r - 1, s2 - l) {
                            f.t("iv.a", ys(&pre).y(i).x(1).y(r + s2 - l - 2 - i).done(), &(&cp * k));
                        }
                    }
                    if r == 1 && l < s2 {
                        f.t("iv.b", ys(&pre[..np - 1]).x(pre[np - 1] + 1).y(s2 - l).done(), &cp);
                    }
                    if l == s2 {
                        let w = ys(&pre[..np - 2]).x(pre[np - 2] + pre[np - 1] + 1).y(r).done();
                        f.t("iv.c", w, &cp);
                    }
                }
            }
        }
    }
    f.0.retain(|_, v| !v.is_zero());
    f.0
}

/// Sum of [`height_two_families`].
pub fn height_two_case_formula(a: usize, r: usize, b1: usize, s1: usize, b2: usize, s2: usize) -> HElement {
    let mut out = HElement::zero();
    for part in height_two_families(a, r, b1, s1, b2, s2).values() {
        out += part;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tshuffle::tshuffle_words;
    use crate::words::w;

    fn words(a: usize, r: usize, b1: usize, s1: usize, b2: usize, s2: usize) -> (Word, Word) {
        (
            Wb::new().x(a).y(r).done(),
            Wb::new().x(b1).y(s1).x(b2).y(s2).done(),
        )
    }

    #[test]
    fn examples() {
        let got = height_two_case_formula(0, 1, 0, 1, 0, 1);
        assert_eq!(got, tshuffle_words(&w("y"), &w("yy")));
        assert_eq!(got.to_string(), "3*yyy + (-2*t)*yxy + (-t)*xyy");
        for args in [(1, 1, 1, 1, 0, 1), (0, 2, 1, 1, 1, 1), (2, 2, 1, 2, 2, 1)] {
            let (a, r, b1, s1, b2, s2) = args;
            let (u, v) = words(a, r, b1, s1, b2, s2);
            assert_eq!(height_two_case_formula(a, r, b1, s1, b2, s2), tshuffle_words(&u, &v), "{args:?}");
        }
    }

    #[test]
    fn families_are_labelled() {
        let fams = height_two_families(1, 2, 1, 2, 1, 1);
        assert!(fams.contains_key("shuffle"));
        assert!(fams.keys().any(|k| k.starts_with("iv.")));
        assert!(fams.iter().all(|(k, v)| *k == "shuffle" || v.terms().all(|(_, c)| c.coeff(0).is_zero())));
    }
}
