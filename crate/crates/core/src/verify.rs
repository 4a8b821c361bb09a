//! Verification suites: each runs a parameter grid comparing a closed form
//! (or a numeric identity) against its reference and returns a report.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::closedforms::{
    alternating_sum_lhs, alternating_sum_rhs, cor42_rhs, eq48_word_formula, euler_decomposition,
    general_formula, height_one_word_formula, height_two_case_formula, prop43_identity,
    theorem1_decomposition,
};
use crate::coeffs::{rat_frac, Rational};
use crate::halg::HElement;
use crate::imzv::{zt_map, Interpretation, ZetaCombo};
use crate::mzvnum::{eval_combo, eval_mzv};
use crate::tshuffle::{tshuffle_words, xm_shuffle_yn, yy_closed_form};
use crate::words::{index_from_word, word_from_exponents, word_from_index, Index, Letter, Word};

pub const SCHEMA: u32 = 1;
pub const DEFAULT_SEED: u64 = 20_240_601;

pub const SUITES: &[&str] = &[
    "lemma31",
    "eq42",
    "theorem22",
    "prop32",
    "eq48",
    "height2",
    "prop41",
    "cor42",
    "prop43",
    "euler",
    "homomorphism-numeric",
    "duality-numeric",
];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Failure {
    pub params: Value,
    pub lhs: String,
    pub rhs: String,
    pub diff: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub schema: u32,
    pub suite: String,
    pub cases_total: usize,
    pub cases_passed: usize,
    pub failures: Vec<Failure>,
    pub wall_time_s: f64,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Grid bounds; `None` means the suite's default.
#[derive(Debug, Clone, Default)]
pub struct GridOptions {
    pub max: Option<usize>,
    pub k: Option<usize>,
    pub p: Option<usize>,
    pub r: Option<usize>,
    pub s: Option<usize>,
    pub max_exp: Option<usize>,
    pub seed: Option<u64>,
    pub tol: Option<f64>,
    pub pairs: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum VerifyError {
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
}

type Case = Box<dyn Fn() -> Option<Failure> + Send + Sync>;

fn exact(params: Value, lhs: HElement, rhs: HElement) -> Option<Failure> {
    if lhs == rhs {
        return None;
    }
    let d = &lhs - &rhs;
    Some(Failure {
        params,
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
        diff: d.to_string(),
    })
}

fn exact_zeta(params: Value, lhs: ZetaCombo, rhs: ZetaCombo) -> Option<Failure> {
    if lhs == rhs {
        return None;
    }
    let diff = lhs.sub(&rhs).map(|d| d.to_string()).unwrap_or_else(|e| e.to_string());
    Some(Failure {
        params,
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
        diff,
    })
}

fn numeric(params: Value, lhs: f64, rhs: f64, bound: f64) -> Option<Failure> {
    let d = (lhs - rhs).abs();
    (d > bound || !d.is_finite()).then(|| Failure {
        params,
        lhs: format!("{lhs:.15e}"),
        rhs: format!("{rhs:.15e}"),
        diff: format!("{d:.3e} > {bound:.3e}"),
    })
}

fn xy(a: usize, r: usize) -> Word {
    let mut w = Word::power(Letter::X, a);
    w.push_n(Letter::Y, r);
    w
}

/// All vectors of length `n` with entries in `0..=max`.
fn vectors(n: usize, max: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..=max).map(move |e| {
                    let mut v = v.clone();
                    v.push(e);
                    v
                })
            })
            .collect();
    }
    out
}

fn cases_for(suite: &str, o: &GridOptions) -> Result<Vec<Case>, VerifyError> {
    let mut cases: Vec<Case> = Vec::new();
    match suite {
        "lemma31" => {
            let max = o.max.unwrap_or(7);
            for m in 1..=max {
                for n in 1..=max {
                    cases.push(Box::new(move || {
                        exact(
                            json!({"m": m, "n": n}),
                            yy_closed_form(m, n),
                            tshuffle_words(&xy(0, m), &xy(0, n)),
                        )
                    }));
                }
            }
        }
        "eq42" => {
            let max = o.max.unwrap_or(6);
            for m in 0..=max {
                for n in 0..=max {
                    cases.push(Box::new(move || {
                        exact(
                            json!({"m": m, "n": n}),
                            xm_shuffle_yn(m, n),
                            tshuffle_words(&Word::power(Letter::X, m), &Word::power(Letter::Y, n)),
                        )
                    }));
                }
            }
        }
        "theorem22" => {
            let (rmax, smax) = (o.r.or(o.max).unwrap_or(3), o.s.or(o.max).unwrap_or(3));
            let e = o.max_exp.unwrap_or(2);
            for r in 1..=rmax {
                for s in 1..=smax {
                    for a in vectors(r, e) {
                        for b in vectors(s, e) {
                            let a = a.clone();
                            cases.push(Box::new(move || {
                                exact(
                                    json!({"a": a, "b": b}),
                                    general_formula(&a, &b),
                                    tshuffle_words(&word_from_exponents(&a), &word_from_exponents(&b)),
                                )
                            }));
                        }
                    }
                }
            }
        }
        "prop32" => {
            let e = o.max_exp.unwrap_or(3);
            let len = o.max.unwrap_or(4);
            for a in 1..=e {
                for b in 1..=e {
                    for r in 1..=len {
                        for s in 1..=len {
                            cases.push(Box::new(move || {
                                exact(
                                    json!({"a": a, "r": r, "b": b, "s": s}),
                                    height_one_word_formula(a, r, b, s),
                                    tshuffle_words(&xy(a, r), &xy(b, s)),
                                )
                            }));
                        }
                    }
                }
            }
        }
        "eq48" => {
            let e = o.max_exp.unwrap_or(3);
            let len = o.max.unwrap_or(3);
            for m in 1..=e {
                for n in 1..=e {
                    for j in 1..=len {
                        for k in 1..=len {
                            cases.push(Box::new(move || {
                                let params = json!({"m": m, "j": j, "n": n, "k": k});
                                let got = eq48_word_formula(m, j, n, k);
                                exact(params.clone(), got.clone(), tshuffle_words(&xy(m, j), &xy(n, k))).or_else(
                                    || exact(params, got, height_one_word_formula(m, j, n, k)),
                                )
                            }));
                        }
                    }
                }
            }
        }
        "height2" => {
            let e = o.max_exp.unwrap_or(2);
            let len = o.max.unwrap_or(2);
            for v in vectors(3, e) {
                for l in vectors(3, len - 1) {
                    let (a, b1, b2) = (v[0], v[1], v[2]);
                    let (r, s1, s2) = (l[0] + 1, l[1] + 1, l[2] + 1);
                    cases.push(Box::new(move || {
                        let mut w2 = xy(b1, s1);
                        w2.extend(&xy(b2, s2));
                        exact(
                            json!({"a": a, "r": r, "b1": b1, "s1": s1, "b2": b2, "s2": s2}),
                            height_two_case_formula(a, r, b1, s1, b2, s2),
                            tshuffle_words(&xy(a, r), &w2),
                        )
                    }));
                }
            }
        }
        "prop41" => {
            let ks: Vec<usize> = o.k.map(|k| vec![k]).unwrap_or_else(|| (1..=o.max.unwrap_or(6)).collect());
            let ps: Vec<usize> = o.p.map(|p| vec![p]).unwrap_or_else(|| vec![2, 3]);
            for &k in &ks {
                for &p in &ps {
                    cases.push(Box::new(move || {
                        let params = json!({"k": k, "p": p});
                        let lhs = alternating_sum_lhs(k, p);
                        let rhs = alternating_sum_rhs(k, p).unwrap_or_else(|_| HElement::zero());
                        exact(params, lhs, rhs)
                    }));
                }
            }
        }
        "cor42" => {
            let ks: Vec<usize> = o
                .k
                .map(|k| vec![k])
                .unwrap_or_else(|| (2..=o.max.unwrap_or(6)).step_by(2).collect());
            for k in ks {
                cases.push(Box::new(move || {
                    let rhs = cor42_rhs(k).unwrap_or_else(|_| HElement::zero());
                    exact(json!({"k": k}), alternating_sum_lhs(k, 2), rhs)
                }));
            }
        }
        "prop43" => {
            let ks: Vec<usize> = o.k.map(|k| vec![k]).unwrap_or_else(|| (1..=o.max.unwrap_or(6)).collect());
            for k in ks {
                cases.push(Box::new(move || {
                    let (l, r) = prop43_identity(k);
                    exact_zeta(json!({"k": k}), l, r)
                }));
            }
        }
        "euler" => {
            let max = o.max.unwrap_or(6);
            for i in 2..=max {
                for j in 2..=max {
                    cases.push(Box::new(move || {
                        let got = theorem1_decomposition(i, 1, 0, j, 0)
                            .t_zero_part()
                            .with_interpretation(Interpretation::Plain);
                        exact_zeta(json!({"i": i, "j": j}), got, euler_decomposition(i, j))
                    }));
                }
            }
        }
        "homomorphism-numeric" => {
            let tol = o.tol.unwrap_or(1e-5);
            let pairs = sample_word_pairs(o.seed.unwrap_or(DEFAULT_SEED), o.pairs.unwrap_or(20), o.max.unwrap_or(8));
            for (w1, w2) in pairs {
                for t0 in [rat_frac(0, 1), rat_frac(1, 2), rat_frac(1, 1)] {
                    let (w1, w2) = (w1.clone(), w2.clone());
                    cases.push(Box::new(move || homomorphism_case(&w1, &w2, &t0, tol)));
                }
            }
        }
        "duality-numeric" => {
            let max = o.max.unwrap_or(8) as u32;
            for weight in 2..=max {
                for idx in Index::all_of_weight(weight).into_iter().filter(Index::is_admissible) {
                    cases.push(Box::new(move || duality_case(&idx)));
                }
            }
        }
        other => return Err(VerifyError::UnknownSuite(other.to_string())),
    }
    Ok(cases)
}

/// Random admissible index of the given weight (at least 2).
fn random_index(rng: &mut ChaCha8Rng, weight: usize) -> Index {
    // a word of length `weight` starting with x and ending with y; inner
    // letters free
    let mut letters = vec![Letter::X];
    for _ in 0..weight.saturating_sub(2) {
        letters.push(if rng.random_bool(0.5) { Letter::X } else { Letter::Y });
    }
    letters.push(Letter::Y);
    index_from_word(&Word::from_letters(letters)).expect("ends in y")
}

/// `count` admissible word pairs with total weight at most `max_weight`.
pub fn sample_word_pairs(seed: u64, count: usize, max_weight: usize) -> Vec<(Word, Word)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let max_weight = max_weight.max(4);
    (0..count)
        .map(|_| {
            let total = rng.random_range(4..=max_weight);
            let w1 = rng.random_range(2..=total - 2);
            let a = random_index(&mut rng, w1);
            let b = random_index(&mut rng, total - w1);
            (word_from_index(&a), word_from_index(&b))
        })
        .collect()
}

fn homomorphism_case(w1: &Word, w2: &Word, t0: &Rational, tol: f64) -> Option<Failure> {
    let params = json!({"w1": w1.to_string(), "w2": w2.to_string(), "t": t0.to_string()});
    let fail = |msg: String| {
        Some(Failure {
            params: params.clone(),
            lhs: msg.clone(),
            rhs: String::new(),
            diff: msg,
        })
    };
    let prod = match zt_map(&tshuffle_words(w1, w2)) {
        Ok(p) => p,
        Err(e) => return fail(e.to_string()),
    };
    let z1 = zt_map(&HElement::word(w1.clone())).expect("admissible");
    let z2 = zt_map(&HElement::word(w2.clone())).expect("admissible");
    // each side to a tenth of the tolerance
    let target = tol / 10.0;
    let (l, a, b) = match (
        eval_combo(&prod, t0, target),
        eval_combo(&z1, t0, target),
        eval_combo(&z2, t0, target),
    ) {
        (Ok(l), Ok(a), Ok(b)) => (l, a, b),
        (l, a, b) => return fail(format!("{:?}", [l.err(), a.err(), b.err()])),
    };
    numeric(params, l.value, a.value * b.value, tol)
}

fn duality_case(idx: &Index) -> Option<Failure> {
    let dual = word_from_index(idx).dual().expect("admissible");
    let didx = index_from_word(&dual).expect("admissible");
    let params = json!({"index": idx.to_string(), "dual": didx.to_string()});
    match (eval_mzv(idx, 1e-8), eval_mzv(&didx, 1e-8)) {
        (Ok(a), Ok(b)) => numeric(params, a.value, b.value, a.error_estimate + b.error_estimate),
        (a, b) => Some(Failure {
            params,
            lhs: format!("{a:?}"),
            rhs: format!("{b:?}"),
            diff: "evaluation failed".into(),
        }),
    }
}

/// Runs a suite; cases run in parallel and failures keep the grid order.
pub fn run_suite(suite: &str, opts: &GridOptions) -> Result<VerifyReport, VerifyError> {
    let start = Instant::now();
    let cases = cases_for(suite, opts)?;
    let failures: Vec<Failure> = cases.par_iter().filter_map(|c| c()).collect();
    Ok(VerifyReport {
        schema: SCHEMA,
        suite: suite.to_string(),
        cases_total: cases.len(),
        cases_passed: cases.len() - failures.len(),
        failures,
        wall_time_s: start.elapsed().as_secs_f64(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn split_grid_default() {
        let rep = run_suite("lemma31", &GridOptions::default()).unwrap();
        assert_eq!((rep.cases_total, rep.cases_passed), (49, 49));
        let text = serde_json::to_string(&rep).unwrap();
        let back: VerifyReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, rep);
    }

    #[test]
    fn unknown_suite() {
        assert!(matches!(
            run_suite("nope", &GridOptions::default()),
            Err(VerifyError::UnknownSuite(_))
        ));
    }

    #[test]
    fn odd_k_alternating_rejected() {
        let opts = GridOptions {
            k: Some(3),
            p: Some(2),
            ..Default::default()
        };
        assert!(run_suite("prop41", &opts).unwrap().passed());
    }

    #[test]
    fn sampled_pairs_are_deterministic_and_admissible() {
        let a = sample_word_pairs(7, 20, 8);
        assert_eq!(a, sample_word_pairs(7, 20, 8));
        for (u, v) in &a {
            assert!(u.is_admissible() && v.is_admissible());
            assert!(u.len() + v.len() <= 8);
        }
    }

    #[test]
    fn failure_reports_diff() {
        let f = exact(json!({}), HElement::word(Word::empty()), HElement::zero()).unwrap();
        assert_eq!(f.diff, "1");
    }
}
