//! Zeta symbols: the map `Z^t` from admissible words to interpolated zeta
//! symbols and the expansion of `ζ^t` into plain `ζ` symbols.
//!
//! Text forms: `zt(2,1)` for `ζ^t`, `z(2,1)` for `ζ`, `zs(2,1)` for `ζ*`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coeffs::{PolyParseError, QtPoly, Rational};
use crate::halg::HElement;
use crate::words::{index_from_word, Index, WordError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ZetaError {
    #[error("cannot combine {0:?} and {1:?} symbols")]
    MixedInterpretation(Interpretation, Interpretation),
    #[error("element is not in H0: word {0} is not admissible")]
    NotInH0(String),
    #[error("index {0} is not admissible")]
    NotAdmissible(String),
    #[error("expected {expected:?} symbols, found {found:?}")]
    WrongInterpretation {
        expected: Interpretation,
        found: Interpretation,
    },
    #[error("cannot parse zeta combination: {0}")]
    Parse(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Interpretation {
    /// `ζ^t` symbols.
    Interpolated,
    /// `ζ` symbols.
    Plain,
    /// `ζ*` symbols (the `t = 1` view of `ζ^t`).
    Star,
}

impl Interpretation {
    fn symbol(self) -> &'static str {
        match self {
            Interpretation::Interpolated => "zt",
            Interpretation::Plain => "z",
            Interpretation::Star => "zs",
        }
    }
}

/// A Q[t]-combination of zeta symbols. The key `[]` is the scalar term.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZetaCombo {
    interpretation: Interpretation,
    terms: BTreeMap<Vec<u32>, QtPoly>,
}

impl ZetaCombo {
    pub fn zero(interpretation: Interpretation) -> ZetaCombo {
        ZetaCombo {
            interpretation,
            terms: BTreeMap::new(),
        }
    }

    pub fn symbol(interpretation: Interpretation, idx: &Index) -> Result<ZetaCombo, ZetaError> {
        let mut out = ZetaCombo::zero(interpretation);
        out.add_term(idx.parts().to_vec(), &QtPoly::one())?;
        Ok(out)
    }

    pub fn scalar(interpretation: Interpretation, c: QtPoly) -> ZetaCombo {
        let mut out = ZetaCombo::zero(interpretation);
        out.terms.insert(Vec::new(), c);
        out.terms.retain(|_, v| !v.is_zero());
        out
    }

    pub fn interpretation(&self) -> Interpretation {
        self.interpretation
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms as `(parts, coefficient)`; empty `parts` is the scalar term.
    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &QtPoly)> {
        self.terms.iter().map(|(k, v)| (k.as_slice(), v))
    }

    pub fn coeff(&self, parts: &[u32]) -> QtPoly {
        self.terms.get(parts).cloned().unwrap_or_default()
    }

    fn add_term(&mut self, parts: Vec<u32>, c: &QtPoly) -> Result<(), ZetaError> {
        if let Some(&first) = parts.first() {
            if first < 2 || parts.contains(&0) {
                return Err(ZetaError::NotAdmissible(format!("{parts:?}")));
            }
        }
        if c.is_zero() {
            return Ok(());
        }
        let e = self.terms.entry(parts.clone()).or_default();
        *e += c;
        if e.is_zero() {
            self.terms.remove(&parts);
        }
        Ok(())
    }

    pub fn add(&self, other: &ZetaCombo) -> Result<ZetaCombo, ZetaError> {
        if self.interpretation != other.interpretation {
            return Err(ZetaError::MixedInterpretation(
                self.interpretation,
                other.interpretation,
            ));
        }
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.add_term(k.clone(), v)?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &ZetaCombo) -> Result<ZetaCombo, ZetaError> {
        self.add(&other.scale(&QtPoly::from_int(-1)))
    }

    pub fn scale(&self, c: &QtPoly) -> ZetaCombo {
        let mut out = ZetaCombo::zero(self.interpretation);
        for (k, v) in &self.terms {
            let p = v * c;
            if !p.is_zero() {
                out.terms.insert(k.clone(), p);
            }
        }
        out
    }

    /// Substitute `t = t0` in every coefficient.
    pub fn at_t(&self, t0: &Rational) -> ZetaCombo {
        let mut out = ZetaCombo::zero(self.interpretation);
        for (k, v) in &self.terms {
            let c = v.eval(t0);
            if !c.is_zero() {
                out.terms.insert(k.clone(), QtPoly::constant(c));
            }
        }
        out
    }

    /// Keep only the constant term in `t` of each coefficient.
    pub fn t_zero_part(&self) -> ZetaCombo {
        self.at_t(&Rational::zero())
    }

    pub fn with_interpretation(&self, interpretation: Interpretation) -> ZetaCombo {
        ZetaCombo {
            interpretation,
            terms: self.terms.clone(),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(k, v)| serde_json::json!({"index": k, "coeff": v.to_string()}))
            .collect();
        serde_json::json!({"interpretation": self.interpretation, "terms": terms})
    }
}

/// `Z^t`: admissible words to `ζ^t` symbols, the empty word to the scalar 1.
pub fn zt_map(v: &HElement) -> Result<ZetaCombo, ZetaError> {
    let mut out = ZetaCombo::zero(Interpretation::Interpolated);
    for (w, c) in v.terms() {
        if !w.is_admissible() {
            return Err(ZetaError::NotInH0(w.to_string()));
        }
        let parts = if w.is_empty() {
            Vec::new()
        } else {
            index_from_word(w)
                .map_err(|e: WordError| ZetaError::NotInH0(e.to_string()))?
                .parts()
                .to_vec()
        };
        out.add_term(parts, c)?;
    }
    Ok(out)
}

/// All `2^{n-1}` comma/plus merges of `parts`, each with the number of
/// plus signs used.
pub fn merges(parts: &[u32]) -> Vec<(Vec<u32>, u32)> {
    if parts.is_empty() {
        return vec![(Vec::new(), 0)];
    }
    let n = parts.len();
    let mut out = Vec::with_capacity(1 << (n - 1));
    for mask in 0..1u32 << (n - 1) {
        let mut merged = vec![parts[0]];
        for (i, &p) in parts.iter().enumerate().skip(1) {
            if mask >> (i - 1) & 1 == 1 {
                *merged.last_mut().expect("nonempty") += p;
            } else {
                merged.push(p);
            }
        }
        out.push((merged, mask.count_ones()));
    }
    out
}

/// Replace each `ζ^t(l)` by `Σ t^{n - dep(p)} ζ(p)` over comma/plus merges.
pub fn expand_interpolated(zc: &ZetaCombo) -> Result<ZetaCombo, ZetaError> {
    if zc.interpretation != Interpretation::Interpolated {
        return Err(ZetaError::WrongInterpretation {
            expected: Interpretation::Interpolated,
            found: zc.interpretation,
        });
    }
    let mut out = ZetaCombo::zero(Interpretation::Plain);
    for (k, c) in &zc.terms {
        for (merged, pluses) in merges(k) {
            out.add_term(merged, &(c * &QtPoly::monomial(Rational::one(), pluses)))?;
        }
    }
    Ok(out)
}

/// The `t = 1` view: coefficients evaluated at 1 and symbols read as `ζ*`.
pub fn star_specialize(zc: &ZetaCombo) -> Result<ZetaCombo, ZetaError> {
    if zc.interpretation != Interpretation::Interpolated {
        return Err(ZetaError::WrongInterpretation {
            expected: Interpretation::Interpolated,
            found: zc.interpretation,
        });
    }
    Ok(zc
        .at_t(&Rational::one())
        .with_interpretation(Interpretation::Star))
}

/// Rewrite `ζ*` symbols as plain `ζ` symbols (all merges, coefficient 1).
pub fn star_to_plain(zc: &ZetaCombo) -> Result<ZetaCombo, ZetaError> {
    if zc.interpretation != Interpretation::Star {
        return Err(ZetaError::WrongInterpretation {
            expected: Interpretation::Star,
            found: zc.interpretation,
        });
    }
    let interp = zc.with_interpretation(Interpretation::Interpolated);
    Ok(expand_interpolated(&interp)?.at_t(&Rational::one()))
}

/// Any combination rewritten as plain symbols with `t = t0` substituted.
pub fn to_plain_at(zc: &ZetaCombo, t0: &Rational) -> Result<ZetaCombo, ZetaError> {
    match zc.interpretation {
        Interpretation::Plain => Ok(zc.at_t(t0)),
        Interpretation::Interpolated => Ok(expand_interpolated(zc)?.at_t(t0)),
        Interpretation::Star => Ok(star_to_plain(&zc.at_t(t0))?),
    }
}

impl fmt::Display for ZetaCombo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let sym = self.interpretation.symbol();
        for (i, (k, c)) in self.terms.iter().enumerate() {
            let single = c.terms().count() == 1;
            let (neg, mag) = if single {
                let (d, v) = c.terms().next().expect("nonzero");
                (v.is_negative(), QtPoly::monomial(v.abs(), d))
            } else {
                (false, c.clone())
            };
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let symbol = if k.is_empty() {
                None
            } else {
                let parts: Vec<String> = k.iter().map(|p| p.to_string()).collect();
                Some(format!("{sym}({})", parts.join(",")))
            };
            let coef = if single {
                mag.to_string()
            } else {
                format!("({mag})")
            };
            match symbol {
                None => f.write_str(&coef)?,
                Some(s) if mag == QtPoly::one() => f.write_str(&s)?,
                Some(s) => write!(f, "{coef}*{s}")?,
            }
        }
        Ok(())
    }
}

/// Split on `+`/`-` at parenthesis depth zero, keeping the sign with each piece.
fn split_top_level(s: &str) -> Vec<(bool, String)> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    let mut neg = false;
    for ch in s.chars() {
        match ch {
            '(' => {
                depth += 1;
                cur.push(ch);
            }
            ')' => {
                depth -= 1;
                cur.push(ch);
            }
            '+' | '-' if depth == 0 => {
                if cur.trim().is_empty() {
                    if ch == '-' {
                        neg = !neg;
                    }
                } else {
                    out.push((neg, std::mem::take(&mut cur)));
                    neg = ch == '-';
                }
            }
            _ => cur.push(ch),
        }
    }
    out.push((neg, cur));
    out
}

impl FromStr for ZetaCombo {
    type Err = ZetaError;

    /// Parses sums like `2*z(2,2) + 4*z(3,1) - 6*t*z(4)` or `(1 - t)*zt(3)`.
    /// All symbols must share one kind.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let perr = |m: &str| ZetaError::Parse(format!("{m} in {s:?}"));
        let body: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if body.is_empty() {
            return Err(perr("empty input"));
        }
        let mut kind: Option<Interpretation> = None;
        let mut acc: Vec<(Vec<u32>, QtPoly)> = Vec::new();
        for (neg, term) in split_top_level(&body) {
            if term.is_empty() {
                return Err(perr("dangling sign"));
            }
            let (coef_str, sym) = match term.rfind('z') {
                Some(pos) => (&term[..pos], Some(&term[pos..])),
                None => (term.as_str(), None),
            };
            let coef_str = coef_str.strip_suffix('*').unwrap_or(coef_str);
            let mut coef: QtPoly = if coef_str.is_empty() {
                QtPoly::one()
            } else {
                coef_str
                    .parse()
                    .map_err(|e: PolyParseError| ZetaError::Parse(e.to_string()))?
            };
            if neg {
                coef = -&coef;
            }
            let parts = match sym {
                None => Vec::new(),
                Some(sym) => {
                    let (k, rest) = if let Some(r) = sym.strip_prefix("zt") {
                        (Interpretation::Interpolated, r)
                    } else if let Some(r) = sym.strip_prefix("zs") {
                        (Interpretation::Star, r)
                    } else {
                        (Interpretation::Plain, &sym[1..])
                    };
                    if kind.is_some_and(|prev| prev != k) {
                        return Err(perr("mixed symbol kinds"));
                    }
                    kind = Some(k);
                    let idx: Index = rest
                        .parse()
                        .map_err(|_| perr("malformed index"))?;
                    if !rest.starts_with('(') {
                        return Err(perr("malformed index"));
                    }
                    if !idx.is_admissible() {
                        return Err(ZetaError::NotAdmissible(idx.to_string()));
                    }
                    idx.parts().to_vec()
                }
            };
            acc.push((parts, coef));
        }
        let mut out = ZetaCombo::zero(kind.unwrap_or(Interpretation::Plain));
        for (p, c) in acc {
            out.add_term(p, &c)?;
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::w;

    fn zc(s: &str) -> ZetaCombo {
        s.parse().unwrap()
    }

    #[test]
    fn zt_map_examples() {
        let mut e = HElement::zero();
        e.add_term(w("xyxy"), &"2".parse().unwrap());
        e.add_term(w("xxyy"), &"4".parse().unwrap());
        e.add_term(w("xxxy"), &"-6*t".parse().unwrap());
        let z = zt_map(&e).unwrap();
        assert_eq!(z.to_string(), "2*zt(2,2) + 4*zt(3,1) - 6*t*zt(4)");
        assert_eq!(zt_map(&HElement::one()).unwrap().to_string(), "1");
        assert!(matches!(
            zt_map(&HElement::word(w("yx"))),
            Err(ZetaError::NotInH0(_))
        ));
    }

    #[test]
    fn expansion_examples() {
        assert_eq!(expand_interpolated(&zc("zt(2)")).unwrap(), zc("z(2)"));
        assert_eq!(
            expand_interpolated(&zc("zt(2,1)")).unwrap(),
            zc("z(2,1) + t*z(3)")
        );
        assert_eq!(
            expand_interpolated(&zc("zt(2,1,1)")).unwrap(),
            zc("z(2,1,1) + t*z(3,1) + t*z(2,2) + t^2*z(4)")
        );
        assert!(expand_interpolated(&zc("z(2)")).is_err());
    }

    #[test]
    fn arithmetic_examples() {
        assert!(zc("z(2)").add(&zc("-z(2)")).unwrap().is_zero());
        assert_eq!(zc("z(3,1)").scale(&QtPoly::t()).coeff(&[3, 1]), QtPoly::t());
        assert!(matches!(
            zc("zt(2)").add(&zc("z(2)")),
            Err(ZetaError::MixedInterpretation(..))
        ));
    }

    #[test]
    fn star_examples() {
        let s = star_specialize(&zc("zt(2,1)")).unwrap();
        assert_eq!(s.to_string(), "zs(2,1)");
        assert!(star_specialize(&zc("(1 - t)*zt(3)")).unwrap().is_zero());
        let plain = expand_interpolated(&zc("zt(2,1)"))
            .unwrap()
            .at_t(&Rational::one());
        assert_eq!(plain, zc("z(2,1) + z(3)"));
        assert_eq!(star_to_plain(&s).unwrap(), plain);
    }

    #[test]
    fn parse_and_print() {
        for s in [
            "2*z(2,2) + 4*z(3,1) - 6*t*z(4)",
            "z(2,1) + t*z(3)",
            "(1 - t)*zt(3)",
            "1/2*zs(5,1)",
            "3 - z(2)",
        ] {
            assert_eq!(zc(s).to_string(), s);
        }
        assert!(matches!(
            "z(1,2)".parse::<ZetaCombo>(),
            Err(ZetaError::NotAdmissible(_))
        ));
        assert!("z(2) + zs(2)".parse::<ZetaCombo>().is_err());
        assert!("z2".parse::<ZetaCombo>().is_err());
        assert!("".parse::<ZetaCombo>().is_err());
    }

    #[test]
    fn merge_counts_and_weight() {
        let parts = [3, 1, 2, 1];
        let m = merges(&parts);
        assert_eq!(m.len(), 8);
        for (p, pluses) in m {
            assert_eq!(p.iter().sum::<u32>(), 7);
            assert_eq!(p.len() as u32 + pluses, 4);
        }
    }
}
