//! The coefficient ring Q[t]: exact rationals and polynomials in `t`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

pub type Rational = BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("cannot parse {0:?} as a polynomial in t")]
pub struct PolyParseError(pub String);

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat_frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Rational::new(n, d))
            }
        }
        None => s.parse::<BigInt>().ok().map(Rational::from_integer),
    }
}

pub fn rational_to_string(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn rational_to_f64(r: &Rational) -> f64 {
    match (r.numer().to_f64(), r.denom().to_f64()) {
        (Some(n), Some(d)) => n / d,
        _ => f64::NAN,
    }
}

/// C(n, k), zero outside `0 <= k <= n` (in particular for negative `n`).
pub fn binom(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn binom_q(n: i64, k: i64) -> Rational {
    Rational::from_integer(binom(n, k))
}

/// Polynomial in `t` with rational coefficients; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct QtPoly(BTreeMap<u32, Rational>);

impl QtPoly {
    pub fn zero() -> QtPoly {
        QtPoly(BTreeMap::new())
    }

    pub fn one() -> QtPoly {
        QtPoly::constant(Rational::one())
    }

    pub fn t() -> QtPoly {
        QtPoly::monomial(Rational::one(), 1)
    }

    pub fn constant(c: Rational) -> QtPoly {
        QtPoly::monomial(c, 0)
    }

    pub fn from_int(c: i64) -> QtPoly {
        QtPoly::constant(rat(c))
    }

    pub fn monomial(c: Rational, deg: u32) -> QtPoly {
        let mut m = BTreeMap::new();
        if !c.is_zero() {
            m.insert(deg, c);
        }
        QtPoly(m)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.0.keys().next_back().copied()
    }

    pub fn coeff(&self, deg: u32) -> Rational {
        self.0.get(&deg).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &Rational)> {
        self.0.iter().map(|(&d, c)| (d, c))
    }

    pub fn add_term(&mut self, deg: u32, c: &Rational) {
        if c.is_zero() {
            return;
        }
        let e = self.0.entry(deg).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.0.remove(&deg);
        }
    }

    pub fn scale(&self, c: &Rational) -> QtPoly {
        if c.is_zero() {
            return QtPoly::zero();
        }
        QtPoly(self.0.iter().map(|(&d, v)| (d, v * c)).collect())
    }

    /// Horner evaluation.
    pub fn eval(&self, t0: &Rational) -> Rational {
        let Some(top) = self.degree() else {
            return Rational::zero();
        };
        let mut acc = Rational::zero();
        for d in (0..=top).rev() {
            acc = acc * t0 + self.coeff(d);
        }
        acc
    }

    pub fn eval_f64(&self, t0: f64) -> f64 {
        self.0
            .iter()
            .map(|(&d, c)| rational_to_f64(c) * t0.powi(d as i32))
            .sum()
    }

    /// Keep only the terms of degree `< n`.
    pub fn truncate(&self, n: u32) -> QtPoly {
        QtPoly(
            self.0
                .iter()
                .filter(|(&d, _)| d < n)
                .map(|(&d, c)| (d, c.clone()))
                .collect(),
        )
    }

    fn is_single_term(&self) -> bool {
        self.0.len() == 1
    }

    /// Rendering used inside larger expressions: bare when it is a single
    /// nonnegative term, parenthesised otherwise.
    pub fn to_factor_string(&self) -> Option<String> {
        if self == &QtPoly::one() {
            return None;
        }
        let s = self.to_string();
        let (_, c) = self.0.iter().next().expect("nonzero");
        if self.is_single_term() && !c.is_negative() {
            Some(s)
        } else {
            Some(format!("({s})"))
        }
    }
}

impl Add for &QtPoly {
    type Output = QtPoly;
    fn add(self, rhs: &QtPoly) -> QtPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&QtPoly> for QtPoly {
    fn add_assign(&mut self, rhs: &QtPoly) {
        for (&d, c) in &rhs.0 {
            self.add_term(d, c);
        }
    }
}

impl Neg for &QtPoly {
    type Output = QtPoly;
    fn neg(self) -> QtPoly {
        QtPoly(self.0.iter().map(|(&d, c)| (d, -c)).collect())
    }
}

impl Sub for &QtPoly {
    type Output = QtPoly;
    fn sub(self, rhs: &QtPoly) -> QtPoly {
        self + &(-rhs)
    }
}

impl Mul for &QtPoly {
    type Output = QtPoly;
    fn mul(self, rhs: &QtPoly) -> QtPoly {
        let mut out = QtPoly::zero();
        for (&d1, c1) in &self.0 {
            for (&d2, c2) in &rhs.0 {
                out.add_term(d1 + d2, &(c1 * c2));
            }
        }
        out
    }
}

impl fmt::Display for QtPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        for (i, (&d, c)) in self.0.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let var = match d {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{d}"),
            };
            if d == 0 {
                f.write_str(&rational_to_string(&mag))?;
            } else if mag.is_one() {
                f.write_str(&var)?;
            } else {
                write!(f, "{}*{}", rational_to_string(&mag), var)?;
            }
        }
        Ok(())
    }
}

impl FromStr for QtPoly {
    type Err = PolyParseError;

    /// Accepts sums such as `2 - 3*t + t^2`, `1/2*t`, `-t`, optionally
    /// wrapped in one pair of parentheses.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || PolyParseError(s.to_string());
        let mut body: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if body.starts_with('(') && body.ends_with(')') {
            body = body[1..body.len() - 1].to_string();
        }
        if body.is_empty() {
            return Err(err());
        }
        let mut out = QtPoly::zero();
        let mut terms: Vec<(bool, String)> = Vec::new();
        let mut cur = String::new();
        let mut neg = false;
        for (i, ch) in body.chars().enumerate() {
            if (ch == '+' || ch == '-') && i > 0 && !cur.is_empty() {
                terms.push((neg, std::mem::take(&mut cur)));
                neg = ch == '-';
            } else if (ch == '+' || ch == '-') && cur.is_empty() {
                if ch == '-' {
                    neg = !neg;
                }
            } else {
                cur.push(ch);
            }
        }
        if cur.is_empty() {
            return Err(err());
        }
        terms.push((neg, cur));
        for (neg, term) in terms {
            let (coef, deg) = parse_poly_term(&term).ok_or_else(err)?;
            out.add_term(deg, &if neg { -coef } else { coef });
        }
        Ok(out)
    }
}

fn parse_poly_term(term: &str) -> Option<(Rational, u32)> {
    let (coef_part, var_part) = match term.find('t') {
        None => (term, None),
        Some(pos) => {
            let (c, v) = term.split_at(pos);
            let c = c.strip_suffix('*').unwrap_or(c);
            (c, Some(v))
        }
    };
    let coef = if coef_part.is_empty() {
        Rational::one()
    } else {
        parse_rational(coef_part)?
    };
    let deg = match var_part {
        None => 0,
        Some("t") => 1,
        Some(v) => v.strip_prefix("t^")?.parse().ok()?,
    };
    Some((coef, deg))
}
