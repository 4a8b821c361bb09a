//! Acceptance criteria, one line each. Runs without the libtest harness so
//! the lines always print; exits non-zero if any criterion fails.

use std::time::Instant;

use imzv::closedforms::{
    alternating_sum_lhs, alternating_sum_rhs, cor42_rhs, eq48_word_formula, euler_decomposition,
    general_formula, height_one_word_formula, height_two_case_formula, prop43_identity,
    theorem1_decomposition,
};
use imzv::coeffs::{rat_frac, QtPoly, Rational};
use imzv::imzv::{expand_interpolated, zt_map, Interpretation, ZetaCombo};
use imzv::mzvnum::{eval_combo, eval_mzv, reference};
use imzv::tshuffle::{block_b, block_c, shuffle_combinatorial, tshuffle, yy_closed_form};
use imzv::verify::{sample_word_pairs, DEFAULT_SEED};
use imzv::words::{all_words_up_to, index_from_word, word_from_exponents, word_from_index};
use imzv::{tshuffle_words, HElement, Index, Letter, Word};

fn xy(a: usize, r: usize) -> Word {
    let mut w = Word::power(Letter::X, a);
    w.push_n(Letter::Y, r);
    w
}

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

/// `(cases, failures, first failure description)`.
#[derive(Default)]
struct Tally {
    cases: usize,
    failed: usize,
    first: Option<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failed += 1;
            if self.first.is_none() {
                self.first = Some(what());
            }
        }
    }
}

fn zeta(parts: &[u32]) -> ZetaCombo {
    ZetaCombo::symbol(Interpretation::Plain, &Index::new(parts.to_vec()).unwrap()).unwrap()
}

fn c1_algebra_laws(t: &mut Tally) {
    let words = all_words_up_to(4);
    for a in &words {
        for b in &words {
            t.check(tshuffle_words(a, b) == tshuffle_words(b, a), || format!("commutativity {a} {b}"));
        }
    }
    let words = all_words_up_to(3);
    for a in &words {
        let ha = HElement::word(a.clone());
        for b in &words {
            let hb = HElement::word(b.clone());
            let ab = tshuffle(&ha, &hb);
            for c in &words {
                let hc = HElement::word(c.clone());
                let left = tshuffle(&ab, &hc);
                let right = tshuffle(&ha, &tshuffle(&hb, &hc));
                t.check(left == right, || format!("associativity {a} {b} {c}"));
            }
        }
    }
}

fn c2_shuffle_consistency(t: &mut Tally) {
    let words = all_words_up_to(5);
    let zero = Rational::from_integer(0.into());
    for a in &words {
        for b in &words {
            let ok = tshuffle_words(a, b).at_t(&zero) == shuffle_combinatorial(a, b);
            t.check(ok, || format!("{a} {b}"));
        }
    }
}

fn c3_yy_products(t: &mut Tally) {
    for m in 1..=7 {
        for n in 1..=7 {
            let ok = yy_closed_form(m, n) == tshuffle_words(&xy(0, m), &xy(0, n));
            t.check(ok, || format!("m={m} n={n}"));
        }
    }
}

fn c4_blocks(t: &mut Tally) {
    for m in 0..=6usize {
        for n in 0..=6usize {
            let mut got = block_b(n + 1, m);
            got.add_scaled(&block_c(n, m as i64 - 1), &-&QtPoly::t());
            let want = tshuffle_words(&Word::power(Letter::X, m), &Word::power(Letter::Y, n));
            t.check(got == want, || format!("m={m} n={n}"));
        }
    }
}

fn c5_general(t: &mut Tally) {
    for r in 1..=3 {
        for s in 1..=3 {
            for a in vectors(r, 2) {
                for b in vectors(s, 2) {
                    let want = tshuffle_words(&word_from_exponents(&a), &word_from_exponents(&b));
                    t.check(general_formula(&a, &b) == want, || format!("a={a:?} b={b:?}"));
                }
            }
        }
    }
}

fn c6_height_one(t: &mut Tally) {
    for a in 1..=3 {
        for b in 1..=3 {
            for r in 1..=4 {
                for s in 1..=4 {
                    let ok = height_one_word_formula(a, r, b, s) == tshuffle_words(&xy(a, r), &xy(b, s));
                    t.check(ok, || format!("a={a} r={r} b={b} s={s}"));
                }
            }
        }
    }
}

fn c7_block_expansion(t: &mut Tally) {
    for m in 1..=3 {
        for n in 1..=3 {
            for j in 1..=3 {
                for k in 1..=3 {
                    let got = eq48_word_formula(m, j, n, k);
                    t.check(got == tshuffle_words(&xy(m, j), &xy(n, k)), || {
                        format!("oracle m={m} j={j} n={n} k={k}")
                    });
                    t.check(got == height_one_word_formula(m, j, n, k), || {
                        format!("height-one m={m} j={j} n={n} k={k}")
                    });
                }
            }
        }
    }
}

fn c8_height_two(t: &mut Tally) {
    for e in vectors(3, 2) {
        for l in vectors(3, 1) {
            let (a, b1, b2) = (e[0], e[1], e[2]);
            let (r, s1, s2) = (l[0] + 1, l[1] + 1, l[2] + 1);
            let mut w2 = xy(b1, s1);
            w2.extend(&xy(b2, s2));
            let ok = height_two_case_formula(a, r, b1, s1, b2, s2) == tshuffle_words(&xy(a, r), &w2);
            t.check(ok, || format!("a={a} r={r} b1={b1} s1={s1} b2={b2} s2={s2}"));
        }
    }
}

fn c9_alternating(t: &mut Tally) {
    for k in [1, 3, 5] {
        for p in [2, 3] {
            t.check(alternating_sum_lhs(k, p).is_zero(), || format!("odd k={k} p={p}"));
        }
        let (l, r) = prop43_identity(k);
        t.check(l.is_zero() && r.is_zero(), || format!("zeta odd k={k}"));
    }
    for k in [2, 4, 6] {
        for p in [2, 3] {
            let lhs = alternating_sum_lhs(k, p);
            let ok = !lhs.is_zero() && alternating_sum_rhs(k, p).ok() == Some(lhs);
            t.check(ok, || format!("even k={k} p={p}"));
        }
        t.check(cor42_rhs(k).ok() == Some(alternating_sum_lhs(k, 2)), || format!("p=2 shape k={k}"));
        let (l, r) = prop43_identity(k);
        t.check(!l.is_zero() && l == r, || format!("zeta k={k}"));
    }
}

fn c10_euler(t: &mut Tally) {
    for i in 2..=6 {
        for j in 2..=6 {
            let got = theorem1_decomposition(i, 1, 0, j, 0)
                .t_zero_part()
                .with_interpretation(Interpretation::Plain);
            t.check(got == euler_decomposition(i, j), || format!("i={i} j={j}"));
        }
    }
}

fn c11_numeric_square(t: &mut Tally) {
    let zero = Rational::from_integer(0.into());
    let combo = zeta(&[2, 2])
        .scale(&QtPoly::from_int(2))
        .add(&zeta(&[3, 1]).scale(&QtPoly::from_int(4)))
        .unwrap();
    let lhs = eval_combo(&combo, &zero, 1e-8).unwrap().value;
    let z2 = eval_mzv(&Index::new(vec![2]).unwrap(), 1e-9).unwrap().value;
    t.check((lhs - z2 * z2).abs() <= 1e-6, || format!("{lhs} vs {}", z2 * z2));
    let r = reference::zeta2().powi(2);
    t.check((lhs - r).abs() <= 1e-6, || format!("{lhs} vs reference {r}"));
}

fn c12_star_relations(t: &mut Tally) {
    let one = Rational::from_integer(1.into());
    let star = |parts: &[u32]| {
        let sym = ZetaCombo::symbol(Interpretation::Interpolated, &Index::new(parts.to_vec()).unwrap()).unwrap();
        let plain = expand_interpolated(&sym).unwrap().at_t(&one);
        eval_combo(&plain, &one, 1e-9).unwrap().value
    };
    let (z2, z3, z4, z5, z6) = (
        reference::zeta2(),
        reference::zeta3(),
        reference::zeta4(),
        reference::zeta5(),
        reference::zeta6(),
    );
    let s51 = star(&[5, 1]);
    let want = z2 * z4 - 0.5 * z3 * z3;
    t.check((s51 - want).abs() <= 1e-6, || format!("(5,1): {s51} vs {want}"));
    let s71 = star(&[7, 1]);
    let want = z2 * z6 - z3 * z5 + 0.5 * z4 * z4;
    t.check((s71 - want).abs() <= 1e-6, || format!("(7,1): {s71} vs {want}"));
}

fn c13_homomorphism(t: &mut Tally) {
    let pairs = sample_word_pairs(DEFAULT_SEED, 20, 8);
    assert_eq!(pairs.len(), 20);
    for (w1, w2) in &pairs {
        let prod = zt_map(&tshuffle_words(w1, w2)).unwrap();
        let z1 = zt_map(&HElement::word(w1.clone())).unwrap();
        let z2 = zt_map(&HElement::word(w2.clone())).unwrap();
        for t0 in [rat_frac(0, 1), rat_frac(1, 2), rat_frac(1, 1)] {
            let l = eval_combo(&prod, &t0, 1e-6).unwrap().value;
            let a = eval_combo(&z1, &t0, 1e-6).unwrap().value;
            let b = eval_combo(&z2, &t0, 1e-6).unwrap().value;
            t.check((l - a * b).abs() <= 1e-5, || format!("{w1} {w2} t={t0}: {l} vs {}", a * b));
        }
    }
}

fn c14_duality(t: &mut Tally) {
    for weight in 2..=8 {
        for idx in Index::all_of_weight(weight).into_iter().filter(Index::is_admissible) {
            let didx = index_from_word(&word_from_index(&idx).dual().unwrap()).unwrap();
            let a = eval_mzv(&idx, 1e-8).unwrap();
            let b = eval_mzv(&didx, 1e-8).unwrap();
            let bound = a.error_estimate + b.error_estimate;
            t.check((a.value - b.value).abs() <= bound, || {
                format!("{idx} vs {didx}: {} vs {} (bound {bound:.1e})", a.value, b.value)
            });
        }
    }
}

fn main() {
    type Crit = (u32, &'static str, f64, fn(&mut Tally));
    let criteria: [Crit; 14] = [
        (1, "t-shuffle commutativity (len <= 4) and associativity (len <= 3)", 30.0, c1_algebra_laws),
        (2, "t = 0 part equals the ordinary shuffle (len <= 5)", 30.0, c2_shuffle_consistency),
        (3, "y^m t-shuffle y^n closed form, 1 <= m,n <= 7", 5.0, c3_yy_products),
        (4, "x^m t-shuffle y^n = B - tC, 0 <= m,n <= 6", 5.0, c4_blocks),
        (5, "general formula, r,s <= 3, exponents <= 2", 60.0, c5_general),
        (6, "x^a y^r t-shuffle x^b y^s, a,b <= 3, r,s <= 4", 60.0, c6_height_one),
        (7, "block-recursive expansion, m,n,j,k <= 3, and agreement with the height-one form", 60.0, c7_block_expansion),
        (8, "height-two case formula, a,b1,b2 <= 2, r,s1,s2 <= 2", 60.0, c8_height_two),
        (9, "alternating sums: odd k vanish, even k match the closed forms", 30.0, c9_alternating),
        (10, "Euler decomposition at t = 0, 2 <= i,j <= 6", 5.0, c10_euler),
        (11, "zeta(2)^2 = 2 zeta(2,2) + 4 zeta(3,1) numerically (1e-6)", 5.0, c11_numeric_square),
        (12, "zeta-star (5,1) and (7,1) relations numerically (1e-6)", 20.0, c12_star_relations),
        (13, "numeric homomorphism, 20 seeded pairs, t in {0, 1/2, 1} (1e-5)", 60.0, c13_homomorphism),
        (14, "duality, all admissible indices of weight <= 8", 60.0, c14_duality),
    ];
    let mut all_ok = true;
    for (n, name, limit, run) in criteria {
        let start = Instant::now();
        let mut t = Tally::default();
        run(&mut t);
        let secs = start.elapsed().as_secs_f64();
        let ok = t.failed == 0 && t.cases > 0 && secs < limit;
        all_ok &= ok;
        println!(
            "[{}] criterion {n:>2}: {name} - {}/{} cases, {secs:.2} s (limit {limit} s)",
            if ok { "PASS" } else { "FAIL" },
            t.cases - t.failed,
            t.cases
        );
        if let Some(f) = t.first {
            println!("      first failure: {f}");
        }
    }
    if !all_ok {
        std::process::exit(1);
    }
}
