//! Canonical text, JSON and CSV forms.
//!
//! Text: terms in canonical order joined by ` + ` / ` - `, variables in the
//! order `q, r, s, t` with caret exponents, e.g. `1 + r*s^2 + q*r*s*t`.
//! JSON: `{"vars":["q","r","s","t"],"terms":[{"e":[..],"c":"<decimal>"}]}`.

use std::fmt::{self, Display, Write as _};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{Coefficient, Exponents, MPoly1, MPoly4, Var};
use crate::error::{Error, Result};

fn write_term<C: Display>(
    f: &mut impl fmt::Write,
    first: bool,
    c: &C,
    powers: &[(Var, u32)],
) -> fmt::Result {
    let text = c.to_string();
    let (negative, magnitude) = match text.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, text.as_str()),
    };
    match (first, negative) {
        (true, true) => f.write_str("-")?,
        (true, false) => {}
        (false, true) => f.write_str(" - ")?,
        (false, false) => f.write_str(" + ")?,
    }
    let mut factors: Vec<String> = Vec::new();
    if powers.is_empty() || magnitude != "1" {
        factors.push(magnitude.to_string());
    }
    for &(v, e) in powers {
        factors.push(if e == 1 {
            v.to_string()
        } else {
            format!("{v}^{e}")
        });
    }
    f.write_str(&factors.join("*"))
}

impl<C: Coefficient + Display> Display for MPoly4<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let powers: Vec<(Var, u32)> = Var::ALL
                .into_iter()
                .map(|v| (v, e.0[v.index()]))
                .filter(|&(_, p)| p > 0)
                .collect();
            write_term(f, i == 0, c, &powers)?;
        }
        Ok(())
    }
}

impl<C: Coefficient + Display> Display for MPoly1<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (d, c)) in self.coeffs.iter().enumerate() {
            let powers: Vec<(Var, u32)> = if *d > 0 { vec![(self.var, *d)] } else { vec![] };
            write_term(f, i == 0, c, &powers)?;
        }
        Ok(())
    }
}

fn parse_error(input: &str) -> Error {
    Error::Parse {
        what: "polynomial",
        input: input.to_string(),
    }
}

/// Parses canonical (or any sum-of-monomials) text into `(coefficient, exponents)` terms.
fn parse_terms<C: Coefficient + FromStr>(input: &str) -> Result<Vec<(C, [u32; 4])>> {
    let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(parse_error(input));
    }
    let mut pieces = Vec::new();
    let mut start = 0;
    for (i, ch) in s.char_indices() {
        if i > 0 && (ch == '+' || ch == '-') {
            pieces.push(&s[start..i]);
            start = i;
        }
    }
    pieces.push(&s[start..]);

    pieces
        .into_iter()
        .map(|piece| {
            let (negative, body) = match piece.as_bytes().first() {
                Some(b'+') => (false, &piece[1..]),
                Some(b'-') => (true, &piece[1..]),
                _ => (false, piece),
            };
            if body.is_empty() {
                return Err(parse_error(input));
            }
            let mut coeff: Option<&str> = None;
            let mut e = [0u32; 4];
            for factor in body.split('*') {
                let first = factor.chars().next().ok_or_else(|| parse_error(input))?;
                if first.is_ascii_digit() {
                    if coeff.is_some() {
                        return Err(parse_error(input));
                    }
                    coeff = Some(factor);
                    continue;
                }
                let var = Var::from_letter(first).ok_or_else(|| parse_error(input))?;
                let rest = &factor[1..];
                let power = match rest.strip_prefix('^') {
                    Some(p) => p.parse::<u32>().map_err(|_| parse_error(input))?,
                    None if rest.is_empty() => 1,
                    None => return Err(parse_error(input)),
                };
                e[var.index()] += power;
            }
            let digits = coeff.unwrap_or("1");
            let text = if negative {
                format!("-{digits}")
            } else {
                digits.to_string()
            };
            let c = text.parse::<C>().map_err(|_| parse_error(input))?;
            Ok((c, e))
        })
        .collect()
}

impl<C: Coefficient + FromStr> FromStr for MPoly4<C> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(MPoly4::from_terms(
            parse_terms::<C>(s)?
                .into_iter()
                .map(|(c, e)| (Exponents(e), c)),
        ))
    }
}

impl<C: Coefficient + FromStr> FromStr for MPoly1<C> {
    type Err = Error;

    /// A constant polynomial parses as a polynomial in `q`.
    fn from_str(s: &str) -> Result<Self> {
        let terms = parse_terms::<C>(s)?;
        let mut var = None;
        for (_, e) in &terms {
            for v in Var::ALL {
                if e[v.index()] > 0 {
                    match var {
                        None => var = Some(v),
                        Some(u) if u != v => return Err(parse_error(s)),
                        Some(_) => {}
                    }
                }
            }
        }
        let var = var.unwrap_or(Var::Q);
        Ok(MPoly1::from_terms(
            var,
            terms.into_iter().map(|(c, e)| (e[var.index()], c)),
        ))
    }
}

/// Wire form shared by both polynomial types.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub vars: Vec<String>,
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub e: Vec<u32>,
    pub c: String,
}

impl<C: Coefficient + Display> MPoly4<C> {
    pub fn to_json(&self) -> PolyJson {
        PolyJson {
            vars: Var::ALL.iter().map(Var::to_string).collect(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| TermJson {
                    e: e.0.to_vec(),
                    c: c.to_string(),
                })
                .collect(),
        }
    }

    /// Header `e_q,e_r,e_s,e_t,coeff`, one row per term in canonical order.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("e_q,e_r,e_s,e_t,coeff\n");
        for (e, c) in &self.terms {
            let [a, b, x, y] = e.0;
            writeln!(out, "{a},{b},{x},{y},{c}").unwrap();
        }
        out
    }
}

impl<C: Coefficient + FromStr> MPoly4<C> {
    pub fn from_json(json: &PolyJson) -> Result<Self> {
        let bad = || Error::Parse {
            what: "polynomial JSON",
            input: format!("{json:?}"),
        };
        if json.vars != ["q", "r", "s", "t"] {
            return Err(bad());
        }
        let mut p = MPoly4::zero();
        for t in &json.terms {
            let e: [u32; 4] = t.e.clone().try_into().map_err(|_| bad())?;
            p.add_term(Exponents(e), t.c.parse().map_err(|_| bad())?);
        }
        Ok(p)
    }
}

impl<C: Coefficient + Display> MPoly1<C> {
    pub fn to_json(&self) -> PolyJson {
        PolyJson {
            vars: vec![self.var.to_string()],
            terms: self
                .coeffs
                .iter()
                .map(|(d, c)| TermJson {
                    e: vec![*d],
                    c: c.to_string(),
                })
                .collect(),
        }
    }

    pub fn to_csv(&self) -> String {
        let mut out = format!("e_{},coeff\n", self.var);
        for (d, c) in &self.coeffs {
            writeln!(out, "{d},{c}").unwrap();
        }
        out
    }
}

impl<C: Coefficient + FromStr> MPoly1<C> {
    pub fn from_json(json: &PolyJson) -> Result<Self> {
        let bad = || Error::Parse {
            what: "polynomial JSON",
            input: format!("{json:?}"),
        };
        let [v] = json.vars.as_slice() else {
            return Err(bad());
        };
        let mut p = MPoly1::zero(v.parse()?);
        for t in &json.terms {
            let [d] = t.e.as_slice() else {
                return Err(bad());
            };
            p.add_term(*d, t.c.parse().map_err(|_| bad())?);
        }
        Ok(p)
    }
}
