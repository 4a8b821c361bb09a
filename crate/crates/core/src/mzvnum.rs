//! Double-precision evaluation of multiple zeta values.
//!
//! Two independent routes: truncated nested series with one power-law
//! extrapolation step ([`eval_mzv`]), and the Hölder convolution at 1/2
//! ([`eval_mzv_holder`]), which converges geometrically.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::coeffs::{rational_to_f64, Rational};
use crate::imzv::{star_to_plain, to_plain_at, Interpretation, ZetaCombo, ZetaError};
use crate::words::{index_from_word, word_from_index, Index, Letter, Word};

pub const DEFAULT_CUTOFF: usize = 100_000;
pub const MAX_CUTOFF: usize = 64_000_000;
/// Tolerances below this are raised to it.
pub const TOL_FLOOR: f64 = 1e-9;
const MAX_WEIGHT: u32 = 12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EvalResult {
    pub value: f64,
    pub error_estimate: f64,
    pub cutoff_used: usize,
    pub tolerance_met: bool,
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum EvalError {
    #[error("index {0} is not admissible")]
    NotAdmissible(Index),
    #[error("index {0} is outside the evaluation envelope (weight <= 12)")]
    TooLarge(Index),
    #[error(transparent)]
    Zeta(#[from] ZetaError),
    #[error("tolerance {target:e} not met, best estimate {got:e}")]
    ToleranceNotMet { target: f64, got: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Method {
    #[default]
    Series,
    Holder,
}

fn check(idx: &Index) -> Result<(), EvalError> {
    if !idx.is_admissible() || idx.depth() == 0 {
        return Err(EvalError::NotAdmissible(idx.clone()));
    }
    if idx.weight() > MAX_WEIGHT {
        return Err(EvalError::TooLarge(idx.clone()));
    }
    Ok(())
}

/// Partial sums `Σ_{N ≥ m1 > ... > mn ≥ 1} Π m_i^{-l_i}` at each of `stops`
/// (ascending). The innermost sums are accumulated once per outer step.
fn partial_sums(parts: &[u32], stops: &[usize]) -> Vec<f64> {
    let d = parts.len();
    let nmax = *stops.last().unwrap();
    // acc[j] = Σ over m_{j+1} > ... > m_d with m_{j+1} < current m, for the
    // tail parts[j..]; acc[d] = 1
    let mut acc = vec![0.0f64; d + 1];
    acc[d] = 1.0;
    let mut comp = 0.0f64;
    let mut out = Vec::with_capacity(stops.len());
    let mut next = 0;
    for m in 1..=nmax {
        let mf = m as f64;
        // update from the outermost level inwards so each level sees the
        // inner sums over strictly smaller m
        for j in 0..d {
            let term = acc[j + 1] * mf.powi(-(parts[j] as i32));
            if j == 0 {
                // Neumaier summation on the outermost level
                let t = acc[0] + term;
                if acc[0].abs() >= term.abs() {
                    comp += (acc[0] - t) + term;
                } else {
                    comp += (term - t) + acc[0];
                }
                acc[0] = t;
            } else {
                acc[j] += term;
            }
        }
        if m == stops[next] {
            out.push(acc[0] + comp);
            next += 1;
        }
    }
    out
}

/// Number of `1`s directly after the leading part; the truncation error of
/// the series carries powers of `log N` up to this order.
fn leading_ones(parts: &[u32]) -> usize {
    parts[1..].iter().take_while(|&&q| q == 1).count()
}

/// Least-squares fit of `S(N) = v + Σ_{k ≤ logs} c_k u^k (N0/N)^p
/// + Σ_{k < extra} e_k u^k (N0/N)^{p+1}`, `u = log(N / N_mid)`; returns `v`.
fn fit(stops: &[usize], sums: &[f64], p: u32, logs: usize, extra: usize) -> f64 {
    let n0 = stops[0] as f64;
    let mid = (stops[0] as f64 * *stops.last().unwrap() as f64).sqrt();
    let cols = 1 + (logs + 1) + extra;
    let a = nalgebra::DMatrix::from_fn(stops.len(), cols, |i, j| {
        let n = stops[i] as f64;
        let u = (n / mid).ln();
        let lead = (n0 / n).powi(p as i32);
        match j {
            0 => 1.0,
            j if j <= logs + 1 => u.powi(j as i32 - 1) * lead,
            j => u.powi((j - logs - 2) as i32) * lead * (n0 / n),
        }
    });
    let b = nalgebra::DVector::from_column_slice(sums);
    let sol = a.svd(true, true).solve(&b, 1e-14).expect("svd with u and v");
    sol[0]
}

/// Fits of three model orders on cutoffs `n0 * 2^i`; the middle one is the
/// value and its disagreement with the neighbours the error estimate.
fn series_at(parts: &[u32], n0: usize) -> EvalResult {
    let logs = leading_ones(parts);
    let p = parts[0] - 1;
    let count = logs + 5;
    let stops: Vec<usize> = (0..count).map(|i| n0 << i).collect();
    let sums = partial_sums(parts, &stops);
    let k0 = logs + 3;
    let v0 = fit(&stops[..k0], &sums[..k0], p, logs, 0);
    let v1 = fit(&stops[..k0 + 1], &sums[..k0 + 1], p, logs, 1);
    let v2 = fit(&stops, &sums, p, logs, 2);
    let rounding = 1e-12 * v1.abs().max(1.0);
    EvalResult {
        value: v1,
        error_estimate: (v1 - v0).abs() + (v1 - v2).abs() + rounding,
        cutoff_used: *stops.last().unwrap(),
        tolerance_met: false,
    }
}

/// Starting `N0` for an index: the ladder of cutoffs is longer when the
/// error carries more powers of `log N`, so it starts lower.
fn base_cutoff(parts: &[u32]) -> usize {
    (2 * DEFAULT_CUTOFF >> (leading_ones(parts) + 4)).max(2000)
}

/// Series evaluation at a fixed starting cutoff, without the adaptive loop.
pub fn eval_mzv_at(idx: &Index, n0: usize) -> Result<EvalResult, EvalError> {
    check(idx)?;
    Ok(series_at(idx.parts(), n0.max(16)))
}

/// Series evaluation of `ζ(idx)` from nested partial sums at cutoffs
/// `N0, 2N0, 4N0, ...`, extrapolated with leading error `∝ log^k N / N^{l1-1}`.
/// `N0` doubles until the error estimate meets `target_abs_err` or the
/// largest cutoff would pass [`MAX_CUTOFF`]; then `tolerance_met` is false.
pub fn eval_mzv(idx: &Index, target_abs_err: f64) -> Result<EvalResult, EvalError> {
    check(idx)?;
    let target = target_abs_err.max(TOL_FLOOR);
    let mut n0 = base_cutoff(idx.parts());
    loop {
        let mut r = series_at(idx.parts(), n0);
        r.tolerance_met = r.error_estimate <= target;
        if r.tolerance_met || 2 * r.cutoff_used > MAX_CUTOFF {
            return Ok(r);
        }
        n0 *= 2;
    }
}

/// `Li_{s1,...,sk}(1/2) = Σ_{n1 > ... > nk ≥ 1} 2^{-n1} / Π n_i^{s_i}`,
/// summed to `m` outer terms.
fn li_half(parts: &[u32], m: usize) -> f64 {
    if parts.is_empty() {
        return 1.0;
    }
    let d = parts.len();
    let mut acc = vec![0.0f64; d + 1];
    acc[d] = 1.0;
    let mut pow = 1.0f64;
    for n in 1..=m {
        let nf = n as f64;
        pow *= 0.5;
        for j in 0..d {
            let w = nf.powi(-(parts[j] as i32));
            acc[j] += acc[j + 1] * w * if j == 0 { pow } else { 1.0 };
        }
    }
    acc[0]
}

fn li_word(w: &Word, m: usize) -> f64 {
    if w.is_empty() {
        return 1.0;
    }
    let idx = index_from_word(w).expect("word ends in y");
    li_half(idx.parts(), m)
}

fn holder_sum(w: &Word, m: usize) -> f64 {
    let letters = w.letters();
    (0..=letters.len())
        .map(|j| {
            let head = Word::from_letters(letters[..j].iter().rev().map(|l| l.swap()).collect());
            let tail = Word::from_letters(letters[j..].to_vec());
            li_word(&head, m) * li_word(&tail, m)
        })
        .sum()
}

/// `ζ(w) = Σ_j Li_{τ(w[..j])}(1/2) Li_{w[j..]}(1/2)` where `τ` reverses the
/// word and swaps `x` and `y`: the integral over `[0,1]` split at 1/2.
pub fn eval_mzv_holder(idx: &Index) -> Result<EvalResult, EvalError> {
    check(idx)?;
    let w = word_from_index(idx);
    debug_assert_eq!(w.letters().first(), Some(&Letter::X));
    let m = 120;
    let v = holder_sum(&w, m);
    let v2 = holder_sum(&w, m - 30);
    Ok(EvalResult {
        value: v,
        error_estimate: (v - v2).abs() + 64.0 * f64::EPSILON * v.abs(),
        cutoff_used: m,
        tolerance_met: true,
    })
}

/// Evaluates a combination of `ζ`, `ζ*` or `ζ^t` symbols at `t = t0`:
/// interpolated and star symbols are first rewritten as plain ones.
/// Errors add up as `Σ |c| · error`.
pub fn eval_combo(zc: &ZetaCombo, t0: &Rational, target_abs_err: f64) -> Result<EvalResult, EvalError> {
    eval_combo_with(zc, t0, target_abs_err, Method::Series)
}

pub fn eval_combo_with(
    zc: &ZetaCombo,
    t0: &Rational,
    target_abs_err: f64,
    method: Method,
) -> Result<EvalResult, EvalError> {
    let plain = match zc.interpretation() {
        Interpretation::Plain => zc.at_t(t0),
        Interpretation::Interpolated => to_plain_at(zc, t0)?,
        Interpretation::Star => star_to_plain(&zc.at_t(t0))?,
    };
    let terms: BTreeMap<Vec<u32>, f64> = plain
        .terms()
        .map(|(k, c)| (k.to_vec(), rational_to_f64(&c.coeff(0))))
        .collect();
    let total_weight: f64 = terms.values().map(|c| c.abs()).sum::<f64>().max(1.0);
    let per_term = target_abs_err / total_weight;
    let evals: Vec<(f64, Result<EvalResult, EvalError>)> = terms
        .par_iter()
        .map(|(k, &c)| {
            if k.is_empty() {
                return (
                    c,
                    Ok(EvalResult {
                        value: 1.0,
                        error_estimate: 0.0,
                        cutoff_used: 1,
                        tolerance_met: true,
                    }),
                );
            }
            let idx = Index::new(k.clone()).expect("stored indices are valid");
            let r = match method {
                Method::Series => eval_mzv(&idx, per_term),
                Method::Holder => eval_mzv_holder(&idx),
            };
            (c, r)
        })
        .collect();
    let mut out = EvalResult {
        value: 0.0,
        error_estimate: 0.0,
        cutoff_used: 1,
        tolerance_met: true,
    };
    for (c, r) in evals {
        let r = r?;
        out.value += c * r.value;
        out.error_estimate += c.abs() * r.error_estimate;
        out.cutoff_used = out.cutoff_used.max(r.cutoff_used);
    }
    out.tolerance_met = out.error_estimate <= target_abs_err.max(TOL_FLOOR);
    Ok(out)
}

/// Reference constants from single-series routines independent of the
/// evaluators above.
pub mod reference {
    fn arctan_inv(n: f64) -> f64 {
        // arctan(1/n) = Σ (-1)^k / ((2k+1) n^{2k+1})
        let mut sum = 0.0;
        let mut p = 1.0 / n;
        let mut k = 0;
        while p > 1e-20 {
            let term = p / (2 * k + 1) as f64;
            sum += if k % 2 == 0 { term } else { -term };
            p /= n * n;
            k += 1;
        }
        sum
    }

    /// Machin: `π = 16 arctan(1/5) - 4 arctan(1/239)`.
    pub fn pi() -> f64 {
        16.0 * arctan_inv(5.0) - 4.0 * arctan_inv(239.0)
    }

    pub fn zeta2() -> f64 {
        pi().powi(2) / 6.0
    }

    pub fn zeta4() -> f64 {
        pi().powi(4) / 90.0
    }

    pub fn zeta6() -> f64 {
        pi().powi(6) / 945.0
    }

    pub fn zeta8() -> f64 {
        pi().powi(8) / 9450.0
    }

    /// Apéry: `ζ(3) = 5/2 Σ (-1)^{n+1} / (n^3 C(2n, n))`.
    pub fn zeta3() -> f64 {
        let mut sum = 0.0;
        let mut central = 1.0f64;
        for n in 1..=40u32 {
            let nf = n as f64;
            central *= (2.0 * nf) * (2.0 * nf - 1.0) / (nf * nf);
            let term = 1.0 / (nf.powi(3) * central);
            sum += if n % 2 == 1 { term } else { -term };
        }
        2.5 * sum
    }

    /// `ζ(5) = Σ n^{-5}` with the Euler–Maclaurin tail
    /// `N^{-4}/4 + N^{-5}/2 + 5 N^{-6}/12`.
    pub fn zeta5() -> f64 {
        let n = 2000u32;
        let mut sum = 0.0;
        for k in (1..n).rev() {
            sum += (k as f64).powi(-5);
        }
        let nf = n as f64;
        sum + nf.powi(-4) / 4.0 + nf.powi(-5) / 2.0 + 5.0 * nf.powi(-6) / 12.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn idx(s: &str) -> Index {
        s.parse().unwrap()
    }

    #[test]
    fn reference_constants() {
        assert!((reference::pi() - 3.141_592_653_589_793).abs() < 1e-14);
        assert!((reference::zeta3() - 1.202_056_903_159_594).abs() < 1e-13);
        assert!((reference::zeta5() - 1.036_927_755_143_37).abs() < 1e-12);
    }

    #[test]
    fn series_examples() {
        let r = eval_mzv(&idx("(2)"), 1e-8).unwrap();
        assert!(r.tolerance_met, "{r:?}");
        assert!((r.value - reference::zeta2()).abs() < 1e-8);
        let r = eval_mzv(&idx("(2,1)"), 1e-7).unwrap();
        assert!((r.value - reference::zeta3()).abs() < 1e-7, "{r:?}");
        let r = eval_mzv(&idx("(4)"), 1e-8).unwrap();
        assert!((r.value - reference::zeta4()).abs() < 1e-8);
    }

    #[test]
    fn holder_examples() {
        for (s, want) in [
            ("(2)", reference::zeta2()),
            ("(3)", reference::zeta3()),
            ("(2,1)", reference::zeta3()),
            ("(4)", reference::zeta4()),
            ("(3,1)", reference::zeta4() / 4.0),
            ("(2,1,1)", reference::zeta4()),
        ] {
            let r = eval_mzv_holder(&idx(s)).unwrap();
            assert!((r.value - want).abs() < 1e-13, "{s}: {r:?}");
        }
    }

    #[test]
    fn error_estimates_cover_actual_error() {
        for s in ["(2,1,1)", "(3,1,1)", "(2,2,1)", "(2,1,1,1,1)"] {
            let i = idx(s);
            let exact = eval_mzv_holder(&i).unwrap().value;
            let r = eval_mzv_at(&i, base_cutoff(i.parts())).unwrap();
            assert!((r.value - exact).abs() <= r.error_estimate, "{s}: {r:?} vs {exact}");
        }
    }

    #[test]
    fn deep_trailing_ones() {
        let r = eval_mzv(&idx("(2,1,1,1,1,1,1)"), 1e-9).unwrap();
        let exact = reference::zeta8();
        assert!((r.value - exact).abs() <= r.error_estimate, "{r:?}");
        assert!((r.value - exact).abs() < 1e-8, "{r:?}");
    }

    #[test]
    fn refinement_does_not_inflate_estimate() {
        for s in ["(2)", "(2,1)", "(3,1,1)", "(2,2,1)", "(2,1,1,1)"] {
            let i = idx(s);
            let n0 = base_cutoff(i.parts());
            let coarse = eval_mzv_at(&i, n0).unwrap();
            let fine = eval_mzv_at(&i, 2 * n0).unwrap();
            assert!(fine.error_estimate <= 2.0 * coarse.error_estimate, "{s}: {coarse:?} {fine:?}");
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(eval_mzv(&idx("(1,2)"), 1e-6), Err(EvalError::NotAdmissible(_))));
        assert!(matches!(eval_mzv(&idx("(13)"), 1e-6), Err(EvalError::TooLarge(_))));
    }

    #[test]
    fn combos() {
        let zero = ZetaCombo::zero(Interpretation::Plain);
        let r = eval_combo(&zero, &Rational::from_integer(0.into()), 1e-6).unwrap();
        assert_eq!(r.value, 0.0);
        let zc: ZetaCombo = "2*z(2,2) + 4*z(3,1)".parse().unwrap();
        let r = eval_combo(&zc, &Rational::from_integer(0.into()), 1e-6).unwrap();
        assert!((r.value - reference::zeta2().powi(2)).abs() < 1e-6);
    }
}
