//! Machine-readable record of where a typeset formula and the product
//! disagree. Each entry names the formula, the parameters and the words
//! whose coefficients differ.

use serde::{Deserialize, Serialize};

use super::{alternating_sum_lhs, alternating_sum_rhs_printed, eq48_word_formula_printed};
use crate::halg::HElement;
use crate::tshuffle::{block_recursive_printed, tshuffle_words};
use crate::words::Letter;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermDiff {
    pub word: String,
    pub formula: String,
    pub oracle: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Discrepancy {
    pub formula: String,
    pub params: serde_json::Value,
    pub terms: Vec<TermDiff>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiscrepancyReport {
    pub kind: String,
    pub entries: Vec<Discrepancy>,
}

/// `None` when the two sides agree.
pub fn compare(formula: &str, params: serde_json::Value, got: &HElement, oracle: &HElement) -> Option<Discrepancy> {
    let terms: Vec<TermDiff> = got
        .diff(oracle)
        .into_iter()
        .map(|(w, f, o)| TermDiff {
            word: w.to_string(),
            formula: f.to_string(),
            oracle: o.to_string(),
        })
        .collect();
    (!terms.is_empty()).then(|| Discrepancy {
        formula: formula.to_string(),
        params,
        terms,
    })
}

/// Runs each typeset variant on a small grid and records every mismatch.
pub fn formula_discrepancy_report() -> DiscrepancyReport {
    use serde_json::json;
    let mut entries = Vec::new();

    for m in 1..=2usize {
        for j in 1..=2usize {
            for n in 1..=2usize {
                let oracle = tshuffle_words(
                    &super::Wb::new().x(m).y(j).done(),
                    &super::Wb::new().x(n).y(1).done(),
                );
                entries.extend(compare(
                    "eq48_word_formula_printed",
                    json!({"m": m, "j": j, "n": n, "k": 1}),
                    &eq48_word_formula_printed(m, j, n, 1),
                    &oracle,
                ));
            }
        }
    }

    let cases: [(&[(Letter, usize)], &[(Letter, usize)]); 3] = [
        (&[(Letter::Y, 1)], &[(Letter::Y, 1)]),
        (&[(Letter::X, 1), (Letter::Y, 1)], &[(Letter::Y, 2)]),
        (&[(Letter::Y, 2)], &[(Letter::X, 1), (Letter::Y, 1)]),
    ];
    for (a, b) in cases {
        let wa = blocks_word(a);
        let wb = blocks_word(b);
        entries.extend(compare(
            "block_recursive_printed",
            json!({"a": wa.to_string(), "b": wb.to_string()}),
            &block_recursive_printed(a, b),
            &tshuffle_words(&wa, &wb),
        ));
    }

    for (k, p) in [(2, 2), (4, 2), (2, 3)] {
        entries.extend(compare(
            "alternating_sum_rhs_printed",
            json!({"k": k, "p": p}),
            &alternating_sum_rhs_printed(k, p).expect("even k"),
            &alternating_sum_lhs(k, p),
        ));
    }

    DiscrepancyReport {
        kind: "formula-discrepancy".to_string(),
        entries,
    }
}

fn blocks_word(blocks: &[(Letter, usize)]) -> crate::words::Word {
    let mut w = crate::words::Word::empty();
    for &(l, e) in blocks {
        w.push_n(l, e);
    }
    w
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_lists_each_typeset_variant() {
        let rep = formula_discrepancy_report();
        for name in ["eq48_word_formula_printed", "block_recursive_printed", "alternating_sum_rhs_printed"] {
            assert!(rep.entries.iter().any(|e| e.formula == name), "{name}");
        }
        assert!(rep.entries.iter().all(|e| !e.terms.is_empty()));
        let json = serde_json::to_string(&rep).unwrap();
        assert!(json.contains("\"kind\":\"formula-discrepancy\""));
    }
}
