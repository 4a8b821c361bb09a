//! The general product `x^{a1}y...x^{ar}y ⧢ x^{b1}y...x^{bs}y`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{add_int, merged_at};
use crate::coeffs::{binom, QtPoly};
use crate::compositions::{compositions, weak_compositions};
use crate::halg::HElement;
use crate::imzv::{zt_map, Interpretation, ZetaCombo};
use crate::words::word_from_exponents;

/// Which factor a `y` of the product comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Src {
    A,
    B,
}

/// Interleaving patterns of the `y`s, grouped by how the pattern starts
/// and ends. Each entry is the `y` pattern plus the position (1-based) of
/// the last `y` of the factor that finishes first; that `y` is the one
/// replaced by `-tx`.
fn case_patterns(r: usize, s: usize) -> Vec<(Vec<Src>, usize)> {
    let mut out = Vec::new();
    let runs = |first: &[usize], second: &[usize], fa: Src, fb: Src| -> Vec<Src> {
        let mut pat = Vec::new();
        for i in 0..first.len().max(second.len()) {
            if let Some(&k) = first.get(i) {
                pat.extend(std::iter::repeat_n(fa, k));
            }
            if let Some(&k) = second.get(i) {
                pat.extend(std::iter::repeat_n(fb, k));
            }
        }
        pat
    };
    for p in 1..=r + s {
        // (i) starts and ends with A: B finishes first
        for l in compositions(r, p + 1) {
            for n in compositions(s, p) {
                out.push((runs(&l, &n, Src::A, Src::B), r - l[p] + s));
            }
        }
        // (ii) starts with A, ends with B: A finishes first
        for l in compositions(r, p) {
            for n in compositions(s, p) {
                out.push((runs(&l, &n, Src::A, Src::B), r + s - n[p - 1]));
            }
        }
        // (iii) starts and ends with B: A finishes first
        for l in compositions(r, p) {
            for n in compositions(s, p + 1) {
                out.push((runs(&n, &l, Src::B, Src::A), r + s - n[p]));
            }
        }
        // (iv) starts with B, ends with A: B finishes first
        for l in compositions(r, p) {
            for n in compositions(s, p) {
                out.push((runs(&n, &l, Src::B, Src::A), r + s - l[p - 1]));
            }
        }
    }
    out
}

struct Walk<'a> {
    a: &'a [usize],
    b: &'a [usize],
    pattern: &'a [Src],
    replaced: usize,
    out: &'a mut HElement,
}

impl Walk<'_> {
    /// At each `y`, the owning factor must place all of its pending `x`s;
    /// the other factor may slip in `e` of its pending `x`s, in `C(α, e)` ways.
    fn go(&mut self, q: usize, ia: usize, ra: usize, ib: usize, rb: usize, exps: &mut Vec<usize>, mult: BigInt) {
        if q == self.pattern.len() {
            add_int(self.out, word_from_exponents(exps), &mult, 0);
            add_int(self.out, merged_at(exps, self.replaced), &-mult, 1);
            return;
        }
        let (own, other) = match self.pattern[q] {
            Src::A => (ra, rb),
            Src::B => (rb, ra),
        };
        for e in 0..=other {
            let alpha = own + e;
            let m = &mult * binom(alpha as i64, e as i64);
            exps.push(alpha);
            match self.pattern[q] {
                Src::A => {
                    let next = self.a.get(ia + 1).copied().unwrap_or(0);
                    self.go(q + 1, ia + 1, next, ib, rb - e, exps, m);
                }
                Src::B => {
                    let next = self.b.get(ib + 1).copied().unwrap_or(0);
                    self.go(q + 1, ia, ra - e, ib + 1, next, exps, m);
                }
            }
            exps.pop();
        }
    }
}

/// `x^{a1}y...x^{ar}y ⧢ x^{b1}y...x^{bs}y` built from the four interleaving
/// cases of the `y`s, each interleaving contributing its word and the word
/// with one `y` replaced by `-tx`.
///
/// Panics if `a` or `b` is empty.
pub fn general_formula(a: &[usize], b: &[usize]) -> HElement {
    assert!(!a.is_empty() && !b.is_empty(), "r, s >= 1");
    let mut out = HElement::zero();
    for (pattern, replaced) in case_patterns(a.len(), b.len()) {
        let mut walk = Walk {
            a,
            b,
            pattern: &pattern,
            replaced,
            out: &mut out,
        };
        walk.go(0, 0, a[0], 0, b[0], &mut Vec::new(), BigInt::one());
    }
    out
}

/// Partial sums `[0, v1, v1+v2, ...]`.
fn prefix(v: &[usize]) -> Vec<usize> {
    let mut p = vec![0];
    for &x in v {
        p.push(p.last().unwrap() + x);
    }
    p
}

/// Literal transcription of the `Σ1 + Σ2 + Σ3 + Σ4` coefficient sums with
/// the `β`/`γ` exponent systems, summed over all `α` of the right total.
pub fn general_formula_printed(a: &[usize], b: &[usize]) -> HElement {
    let (r, s) = (a.len(), b.len());
    let nn = r + s;
    let asum = prefix(a);
    let bsum = prefix(b);
    let av = |i: usize| a[i - 1] as i64;
    let bv = |i: usize| b[i - 1] as i64;
    let total = asum[r] + bsum[s];
    let mut out = HElement::zero();

    // β/γ as maps from position (1-based) to exponent
    let beta = |l: &[usize], n: &[usize], p: usize, al: &[usize]| -> Vec<Option<i64>> {
        let ll = prefix(l);
        let nl = prefix(n);
        let sa = prefix(al);
        let mut be = vec![None; nn + 2];
        for j in 0..=p {
            if j >= l.len() || j >= nl.len() {
                continue;
            }
            let base = ll[j] + nl[j];
            be[base + 1] = Some((asum[ll[j] + 1] + bsum[nl[j]]) as i64 - sa[base] as i64);
            for d in 2..=l[j] {
                be[base + d] = Some(av(ll[j] + d));
            }
        }
        for j in 0..p {
            if j >= n.len() || j >= l.len() {
                continue;
            }
            let base = ll[j + 1] + nl[j];
            be[base + 1] = Some((asum[ll[j + 1]] + bsum[nl[j] + 1]) as i64 - sa[base] as i64);
            for d in 2..=n[j] {
                be[base + d] = Some(bv(nl[j] + d));
            }
        }
        be
    };
    let gamma = |l: &[usize], n: &[usize], p: usize, al: &[usize]| -> Vec<Option<i64>> {
        let ll = prefix(l);
        let nl = prefix(n);
        let sa = prefix(al);
        let mut ga = vec![None; nn + 2];
        for j in 0..=p {
            if j >= n.len() || j >= ll.len() {
                continue;
            }
            let base = ll[j] + nl[j];
            ga[base + 1] = Some((asum[ll[j]] + bsum[nl[j] + 1]) as i64 - sa[base] as i64);
            for d in 2..=n[j] {
                ga[base + d] = Some(bv(nl[j] + d));
            }
        }
        for j in 0..p {
            if j >= l.len() || j >= n.len() {
                continue;
            }
            let base = ll[j] + nl[j + 1];
            ga[base + 1] = Some((asum[ll[j] + 1] + bsum[nl[j + 1]]) as i64 - sa[base] as i64);
            for d in 2..=l[j] {
                ga[base + d] = Some(av(ll[j] + d));
            }
        }
        ga
    };
    let binprod = |al: &[usize], e: &[Option<i64>], upto: usize| -> BigInt {
        let mut c = BigInt::one();
        for i in 1..=upto {
            match e[i] {
                None => return BigInt::zero(),
                Some(k) => c *= binom(al[i - 1] as i64, k),
            }
            if c.is_zero() {
                break;
            }
        }
        c
    };
    let mut emit = |al: &[usize], c: &BigInt, pos: usize| {
        if c.is_zero() {
            return;
        }
        add_int(&mut out, word_from_exponents(al), c, 0);
        add_int(&mut out, merged_at(al, pos), &-c, 1);
    };

    for al in weak_compositions(total, nn) {
        for p in 1..=nn {
            for l in compositions(r, p + 1) {
                for n in compositions(s, p) {
                    let ll = prefix(&l);
                    let c = binprod(&al, &beta(&l, &n, p, &al), ll[p] + s);
                    let tail = (ll[p] + s + 2..=nn).all(|j| al[j - 1] as i64 == av(j - s));
                    if tail {
                        emit(&al, &c, r - l[p] + s);
                    }
                }
            }
            for l in compositions(r, p) {
                for n in compositions(s, p) {
                    let nl = prefix(&n);
                    let ll = prefix(&l);
                    let c = binprod(&al, &beta(&l, &n, p, &al), r + nl[p - 1]);
                    if (r + nl[p - 1] + 2..=nn).all(|j| al[j - 1] as i64 == bv(j - r)) {
                        emit(&al, &c, r + s - n[p - 1]);
                    }
                    let c = binprod(&al, &gamma(&l, &n, p, &al), s + ll[p - 1]);
                    if (s + ll[p - 1] + 2..=nn).all(|j| al[j - 1] as i64 == av(j - s)) {
                        emit(&al, &c, r + s - l[p - 1]);
                    }
                }
            }
            for l in compositions(r, p) {
                for n in compositions(s, p + 1) {
                    let nl = prefix(&n);
                    let c = binprod(&al, &gamma(&l, &n, p, &al), nl[p] + r);
                    if (nl[p] + r + 2..=nn).all(|j| al[j - 1] as i64 == bv(j - r)) {
                        emit(&al, &c, r + s - n[p]);
                    }
                }
            }
        }
    }
    out
}

/// `ζ^t(m, p,...,p) ζ^t(u, p,...,p)` with `n` and `v` trailing `p`s, as the
/// `Z^t` image of [`general_formula`].
pub fn theorem1_decomposition(m: usize, p: usize, n: usize, u: usize, v: usize) -> ZetaCombo {
    assert!(m >= 2 && u >= 2 && p >= 1, "m, u >= 2 and p >= 1");
    let mut a = vec![m - 1];
    a.extend(std::iter::repeat_n(p - 1, n));
    let mut b = vec![u - 1];
    b.extend(std::iter::repeat_n(p - 1, v));
    zt_map(&general_formula(&a, &b)).expect("admissible factors give an H0 product")
}

/// Euler's `ζ(i)ζ(j) = Σ_k C(i+j-k-1, j-1) ζ(i+j-k, k) + Σ_k C(i+j-k-1, i-1) ζ(i+j-k, k)`.
pub fn euler_decomposition(i: usize, j: usize) -> ZetaCombo {
    assert!(i >= 2 && j >= 2);
    let mut out = ZetaCombo::zero(Interpretation::Plain);
    let (ii, jj) = (i as i64, j as i64);
    let mut push = |k: i64, c: BigInt| {
        let idx = vec![(ii + jj - k) as u32, k as u32];
        let term = ZetaCombo::symbol(
            Interpretation::Plain,
            &crate::words::Index::new(idx).expect("positive parts"),
        )
        .expect("admissible");
        out = out
            .add(&term.scale(&QtPoly::constant(num_rational::BigRational::from_integer(c))))
            .expect("same kind");
    };
    for k in 1..=ii {
        push(k, binom(ii + jj - k - 1, jj - 1));
    }
    for k in 1..=jj {
        push(k, binom(ii + jj - k - 1, ii - 1));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tshuffle::{tshuffle_words, yy_closed_form};
    use crate::words::w;

    fn p(s: &str) -> QtPoly {
        s.parse().unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(general_formula(&[0], &[0]), yy_closed_form(1, 1));
        let mut want = HElement::zero();
        want.add_term(w("yxy"), &p("1"));
        want.add_term(w("xyy"), &p("2"));
        want.add_term(w("xxy"), &p("-3*t"));
        assert_eq!(general_formula(&[1], &[0]), want);
        assert_eq!(general_formula(&[1], &[1]), tshuffle_words(&w("xy"), &w("xy")));
        assert_eq!(general_formula(&[1], &[1]).to_string(), "2*xyxy + 4*xxyy + (-6*t)*xxxy");
    }

    #[test]
    fn both_routes_agree_small() {
        for a in [vec![0], vec![1, 0], vec![2, 1], vec![0, 2, 1]] {
            for b in [vec![1], vec![0, 1], vec![2, 2]] {
                let want = tshuffle_words(&word_from_exponents(&a), &word_from_exponents(&b));
                assert_eq!(general_formula(&a, &b), want, "{a:?} {b:?}");
                assert_eq!(general_formula_printed(&a, &b), want, "{a:?} {b:?}");
            }
        }
    }

    #[test]
    fn general_decomposition_examples() {
        let z = theorem1_decomposition(2, 1, 0, 2, 0);
        assert_eq!(z.to_string(), "2*zt(2,2) + 4*zt(3,1) - 6*t*zt(4)");
        assert_eq!(
            z.t_zero_part().with_interpretation(Interpretation::Plain),
            "2*z(2,2) + 4*z(3,1)".parse().unwrap()
        );
        let direct = zt_map(&tshuffle_words(&w("xyxy"), &w("xy"))).unwrap();
        assert_eq!(theorem1_decomposition(2, 2, 1, 2, 0), direct);
    }

    #[test]
    fn euler_small() {
        assert_eq!(
            euler_decomposition(2, 2),
            "2*z(2,2) + 4*z(3,1)".parse().unwrap()
        );
    }
}
