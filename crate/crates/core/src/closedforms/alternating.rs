//! The alternating sums `Σ_i (-1)^i z_p z_1^i ⧢ z_p z_1^{k-i}`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::add_int;
use crate::coeffs::{binom, QtPoly};
use crate::compositions::weak_compositions;
use crate::halg::HElement;
use crate::imzv::{zt_map, Interpretation, ZetaCombo};
use crate::tshuffle::tshuffle_words;
use crate::words::{word_from_index, Index, Word};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlternatingError {
    #[error("k must be even, got {0}")]
    OddK(usize),
    #[error("need k >= 1 and p >= 1")]
    BadParams,
}

fn zw(parts: &[usize]) -> Word {
    word_from_index(&Index::new(parts.iter().map(|&q| q as u32).collect()).expect("positive parts"))
}

fn ones(n: usize) -> impl Iterator<Item = usize> {
    std::iter::repeat_n(1, n)
}

fn sign(i: usize) -> i64 {
    if i % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `Σ_{i=0}^{k} (-1)^i z_p z_1^i ⧢ z_p z_1^{k-i}` via the oracle.
pub fn alternating_sum_lhs(k: usize, p: usize) -> HElement {
    assert!(k >= 1 && p >= 1);
    let mut out = HElement::zero();
    for i in 0..=k {
        let u: Vec<usize> = std::iter::once(p).chain(ones(i)).collect();
        let v: Vec<usize> = std::iter::once(p).chain(ones(k - i)).collect();
        let term = tshuffle_words(&zw(&u), &zw(&v));
        out.add_scaled(&term, &QtPoly::from_int(sign(i)));
    }
    out
}

struct Rhs {
    k: usize,
    p: usize,
    out: HElement,
}

impl Rhs {
    fn new(k: usize, p: usize) -> Rhs {
        Rhs { k, p, out: HElement::zero() }
    }

    /// `c Σ_{α ⊢ 2(p-1), l+1 parts} C(α1, p-1) z_{α1+1}...z_{α_{l+1}+1} z_1^{k+1-l}`.
    fn s_l(&mut self, l: usize, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        for al in weak_compositions(2 * (self.p - 1), l + 1) {
            let parts: Vec<usize> = al.iter().map(|q| q + 1).chain(ones(self.k + 1 - l)).collect();
            add_int(&mut self.out, zw(&parts), &(c * binom(al[0] as i64, self.p as i64 - 1)), 0);
        }
    }

    /// `-2t c Σ_α C(α1, p-1) z(shape(α))` over compositions into `n` parts.
    fn t_family(&mut self, n: usize, c: i64, shape: impl Fn(&[usize]) -> Vec<usize>) {
        if c == 0 {
            return;
        }
        for al in weak_compositions(2 * (self.p - 1), n) {
            let coef = binom(al[0] as i64, self.p as i64 - 1) * (-2 * c);
            add_int(&mut self.out, zw(&shape(&al)), &coef, 1);
        }
    }

    /// The `-t` families; `delta_k2` keeps the extra `δ_{k,2}` piece of the
    /// last family.
    fn t_part(&mut self, delta_k2: bool) {
        let (k, h) = (self.k, self.k / 2);
        let inc = |al: &[usize]| al.iter().map(|q| q + 1).collect::<Vec<_>>();
        for l in 1..=k {
            self.t_family(l + 1, 1, |al| {
                let mut v = inc(&al[..l]);
                v.push(al[l] + 2);
                v.extend(ones(k - l));
                v
            });
        }
        self.t_family(2, 1, |al| std::iter::once(al[0] + al[1] + 2).chain(ones(k)).collect());
        self.t_family(k + 2, 1, |al| {
            let mut v = inc(&al[..k]);
            v.push(al[k] + al[k + 1] + 2);
            v
        });
        for i in 1..=h {
            self.t_family(i + 2, sign(i), |al| {
                let mut v = inc(&al[..i]);
                v.push(al[i] + al[i + 1] + 2);
                v.extend(ones(k - i));
                v
            });
        }
        for i in 1..h {
            self.t_family(k - i + 2, sign(i), |al| {
                let mut v = inc(&al[..k - i]);
                v.push(al[k - i] + al[k - i + 1] + 2);
                v.extend(ones(i));
                v
            });
        }
        for l in 1..k {
            let extra = (delta_k2 && k == 2 && l <= h) as i64;
            self.t_family(l + 1, -1 + sign(l) - extra, |al| {
                let mut v = inc(al);
                v.push(2);
                v.extend(ones(k - l - 1));
                v
            });
        }
    }
}

fn check(k: usize, p: usize) -> Result<(), AlternatingError> {
    if k == 0 || p == 0 {
        Err(AlternatingError::BadParams)
    } else if k % 2 == 1 {
        Err(AlternatingError::OddK(k))
    } else {
        Ok(())
    }
}

/// Closed form of [`alternating_sum_lhs`] for even `k`.
///
/// The `t^0` part is written through
/// `S_l = Σ_α C(α1, p-1) z_{α1+1}...z_{α_{l+1}+1} z_1^{k+1-l}` as
/// `Σ_{i=0}^{h-1} 2(-1)^i [Σ_l C(k+1-l, i+1-l) S_l + Σ_l C(k+1-l, k-i-l+1) S_l]
///  + 2(-1)^h Σ_l C(k+1-l, h+1-l) S_l` with `h = k/2`.
pub fn alternating_sum_rhs(k: usize, p: usize) -> Result<HElement, AlternatingError> {
    check(k, p)?;
    let h = k / 2;
    let (ki, hi) = (k as i64, h as i64);
    let mut rhs = Rhs::new(k, p);
    for i in 0..h {
        let ii = i as i64;
        for l in 1..=i + 1 {
            let li = l as i64;
            rhs.s_l(l, &(binom(ki + 1 - li, ii + 1 - li) * 2 * sign(i)));
        }
        for l in 1..=k - i + 1 {
            let li = l as i64;
            rhs.s_l(l, &(binom(ki + 1 - li, ki - ii - li + 1) * 2 * sign(i)));
        }
    }
    for l in 1..=h + 1 {
        let li = l as i64;
        rhs.s_l(l, &(binom(ki + 1 - li, hi + 1 - li) * 2 * sign(h)));
    }
    rhs.t_part(false);
    Ok(rhs.out)
}

/// The typeset right-hand side, kept for the discrepancy report. Its
/// `t^0` part starts the alternating sum at `i = 1` and its last `-t`
/// family carries an extra `δ_{k,2}` piece.
pub fn alternating_sum_rhs_printed(k: usize, p: usize) -> Result<HElement, AlternatingError> {
    check(k, p)?;
    let h = k / 2;
    let (ki, hi) = (k as i64, h as i64);
    let mut rhs = Rhs::new(k, p);
    let mut c1 = (binom(ki, hi) * sign(h)) as BigInt;
    for d in 1..h {
        c1 += binom(ki, d as i64) * 2 * sign(d);
    }
    rhs.s_l(1, &(c1 * 2));
    for l in 2..=k {
        let li = l as i64;
        let cl = if l <= h + 1 {
            let mut s = BigInt::zero();
            for d in l - 1..=h {
                s += binom(ki + 1 - li, d as i64 + 1 - li) * sign(d);
            }
            for d in 1..h {
                s += binom(ki + 1 - li, d as i64) * sign(d);
            }
            s
        } else {
            BigInt::from(-1)
        };
        rhs.s_l(l, &(cl * 2));
    }
    rhs.t_part(true);
    Ok(rhs.out)
}

/// The `p = 2` shape
/// `2(Σ_a (a_{k+2}+1) z_{a_{k+2}+2} z_{a1+1}...z_{a_{k+1}+1}
///  + t Σ_i (2(-1)^i - 1) z_2 z_1^i z_3 z_1^{k-i-1} - 3t z_4 z_1^k)`.
pub fn cor42_rhs(k: usize) -> Result<HElement, AlternatingError> {
    check(k, 2)?;
    let mut out = HElement::zero();
    for a in weak_compositions(1, k + 2) {
        let mut parts = vec![a[k + 1] + 2];
        parts.extend(a[..k + 1].iter().map(|q| q + 1));
        add_int(&mut out, zw(&parts), &BigInt::from(2 * (a[k + 1] + 1)), 0);
    }
    for i in 0..k {
        let parts: Vec<usize> = std::iter::once(2)
            .chain(ones(i))
            .chain(std::iter::once(3))
            .chain(ones(k - i - 1))
            .collect();
        add_int(&mut out, zw(&parts), &BigInt::from(2 * (2 * sign(i) - 1)), 1);
    }
    let parts: Vec<usize> = std::iter::once(4).chain(ones(k)).collect();
    add_int(&mut out, zw(&parts), &BigInt::from(-6), 1);
    Ok(out)
}

/// Both sides of `Σ_j (-1)^j ζ^t(2,{1}^j) ζ^t(2,{1}^{k-j})`: the left via
/// the product, the right from the index-level closed form (zero for odd `k`).
pub fn prop43_identity(k: usize) -> (ZetaCombo, ZetaCombo) {
    assert!(k >= 1);
    let lhs = zt_map(&alternating_sum_lhs(k, 2)).expect("admissible");
    let mut rhs = ZetaCombo::zero(Interpretation::Interpolated);
    if k % 2 == 1 {
        return (lhs, rhs);
    }
    let mut add = |parts: Vec<usize>, c: QtPoly| {
        let idx = Index::new(parts.into_iter().map(|q| q as u32).collect()).expect("positive");
        let sym = ZetaCombo::symbol(Interpretation::Interpolated, &idx).expect("admissible");
        rhs = rhs.add(&sym.scale(&c)).expect("same kind");
    };
    let t_times = |c: i64| QtPoly::monomial(BigRational::from_integer(c.into()), 1);
    for a in weak_compositions(1, k + 2) {
        let mut parts = vec![a[k + 1] + 2];
        parts.extend(a[..k + 1].iter().map(|q| q + 1));
        add(parts, QtPoly::from_int(2 * (a[k + 1] as i64 + 1)));
    }
    for i in 0..k {
        let parts = std::iter::once(2)
            .chain(ones(i))
            .chain(std::iter::once(3))
            .chain(ones(k - i - 1))
            .collect();
        add(parts, t_times(2 * (2 * sign(i) - 1)));
    }
    add(std::iter::once(4).chain(ones(k)).collect(), t_times(-6));
    (lhs, rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn odd_k_vanishes() {
        for k in [1, 3, 5] {
            assert!(alternating_sum_lhs(k, 2).is_zero());
            assert_eq!(alternating_sum_rhs(k, 2), Err(AlternatingError::OddK(k)));
        }
    }

    #[test]
    fn even_k_matches() {
        for (k, p) in [(2, 2), (4, 2), (2, 3), (2, 1), (4, 3)] {
            let lhs = alternating_sum_lhs(k, p);
            assert!(!lhs.is_zero());
            assert_eq!(alternating_sum_rhs(k, p).unwrap(), lhs, "k={k} p={p}");
        }
        for k in [2, 4] {
            assert_eq!(cor42_rhs(k).unwrap(), alternating_sum_lhs(k, 2));
        }
    }

    #[test]
    fn printed_form_differs() {
        for k in [2, 4] {
            assert_ne!(alternating_sum_rhs_printed(k, 2).unwrap(), alternating_sum_lhs(k, 2));
        }
    }

    #[test]
    fn alternating_zeta_identity_small() {
        let (l, r) = prop43_identity(3);
        assert!(l.is_zero() && r.is_zero());
        for k in [2, 4] {
            let (l, r) = prop43_identity(k);
            assert!(!l.is_zero());
            assert_eq!(l, r);
        }
    }
}
