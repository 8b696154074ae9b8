//! Closed forms for avoidance-class distributions, evaluated term by term
//! from their printed sums and products. Nothing here enumerates words.

mod arith;
mod facts;
mod full;
mod single;
mod tables;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::patterns::PatternSet;
use crate::poly::Var;
use crate::stats::StatKind;
use crate::{Poly1, Poly4};

pub use arith::{binom_conv, divisor_count, fibonacci, odd_double_factorial, tau};
pub use facts::{coeff_facts, CoeffFacts, FactsKind};
pub use full::f_closed;
pub use single::{cardinality, stat_closed};
pub use tables::{table_sets, table_words};

/// A closed form together with the printed version when the two differ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedForm<P> {
    pub value: P,
    /// The formula exactly as printed, kept only when it differs from `value`.
    pub printed: Option<P>,
    pub note: Option<&'static str>,
}

impl<P: PartialEq> ClosedForm<P> {
    pub(crate) fn exact(value: P) -> Self {
        ClosedForm {
            value,
            printed: None,
            note: None,
        }
    }

    pub(crate) fn amended(value: P, printed: P, note: &'static str) -> Self {
        if value == printed {
            return Self::exact(value);
        }
        ClosedForm {
            value,
            printed: Some(printed),
            note: Some(note),
        }
    }

    pub fn is_corrected(&self) -> bool {
        self.printed.is_some()
    }
}

/// Adds `c * q^e0 r^e1 s^e2 t^e3`; exponents must be nonnegative when `c != 0`.
pub(crate) fn push4(p: &mut Poly4, c: BigInt, e: [i64; 4]) {
    if c == BigInt::from(0) {
        return;
    }
    let e = e.map(|x| u32::try_from(x).expect("nonnegative exponent"));
    p.add_term(crate::Exponents(e), c);
}

pub(crate) fn push1(p: &mut Poly1, c: BigInt, e: i64) {
    if c == BigInt::from(0) {
        return;
    }
    p.add_term(u32::try_from(e).expect("nonnegative exponent"), c);
}

pub(crate) fn q_poly() -> Poly1 {
    Poly1::zero(Var::Q)
}

/// A registered formula.
///
/// Text ids: `f.13_2` (single pattern), `f.pair.1_23+12_3` (pair of
/// patterns of size 3), `lb.12_3` (one statistic), `lb.123.facts`
/// (coefficient facts).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FormulaId {
    Full(PatternSet),
    Stat(StatKind, PatternSet),
    Facts(FactsKind),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FormulaValue {
    Full(ClosedForm<Poly4>),
    Stat(ClosedForm<Poly1>),
    Facts(CoeffFacts),
}

impl FormulaId {
    pub fn evaluate(&self, n: usize) -> Result<FormulaValue> {
        Ok(match self {
            FormulaId::Full(p) => FormulaValue::Full(f_closed(p, n)?),
            FormulaId::Stat(k, p) => FormulaValue::Stat(stat_closed(p, *k, n)?),
            FormulaId::Facts(kind) => FormulaValue::Facts(coeff_facts(*kind, n)?),
        })
    }
}

impl fmt::Display for FormulaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormulaId::Full(p) if p.len() == 1 => write!(f, "f.{}", p.id()),
            FormulaId::Full(p) => write!(f, "f.pair.{}", p.id()),
            FormulaId::Stat(k, p) => write!(f, "{k}.{}", p.id()),
            FormulaId::Facts(kind) => f.write_str(kind.id()),
        }
    }
}

impl FromStr for FormulaId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let unknown = || Error::UnknownId(s.to_string());
        if let Some(kind) = FactsKind::ALL.into_iter().find(|k| k.id() == s) {
            return Ok(FormulaId::Facts(kind));
        }
        let (head, rest) = s.split_once('.').ok_or_else(unknown)?;
        if head == "f" {
            let (pair, body) = match rest.strip_prefix("pair.") {
                Some(body) => (true, body),
                None => (false, rest),
            };
            let p = PatternSet::from_id(body).map_err(|_| unknown())?;
            if pair != (p.len() == 2) || p.len() > 2 {
                return Err(unknown());
            }
            return Ok(FormulaId::Full(p));
        }
        let kind: StatKind = head.parse().map_err(|_| unknown())?;
        let p = PatternSet::from_id(rest).map_err(|_| unknown())?;
        Ok(FormulaId::Stat(kind, p))
    }
}

/// Every registered formula; the capped `14/2/3` family is listed for `t = 3, 4, 5`.
pub fn formula_ids() -> Vec<FormulaId> {
    let parse = |s: &str| s.parse::<PatternSet>().expect("valid literal");
    let mut ids = Vec::new();
    for s in ["1/2/3", "1/23", "13/2", "12/3"] {
        ids.push(FormulaId::Full(parse(s)));
    }
    for (a, b) in full::PAIRS {
        ids.push(FormulaId::Full(parse(&format!("{a},{b}"))));
    }
    for (p, kinds) in single::SUPPORTED {
        for k in *kinds {
            ids.push(FormulaId::Stat(*k, parse(p)));
        }
    }
    for t in 3..=5 {
        let cap = PatternSet::all_singletons(t).to_string();
        for k in [StatKind::Lb, StatKind::Rs] {
            ids.push(FormulaId::Stat(k, parse(&format!("14/2/3,{cap}"))));
        }
    }
    ids.extend(FactsKind::ALL.map(FormulaId::Facts));
    ids
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_round_trip() {
        for id in formula_ids() {
            let text = id.to_string();
            assert_eq!(text.parse::<FormulaId>().unwrap(), id, "{text}");
            assert!(id.evaluate(4).is_ok(), "{text}");
        }
    }

    #[test]
    fn sample_ids() {
        let ids: Vec<String> = formula_ids().iter().map(|i| i.to_string()).collect();
        for s in [
            "f.13_2",
            "f.pair.1_23+12_3",
            "lb.12_3",
            "lb.123.facts",
            "lb.14_2_3+13_2_4",
        ] {
            assert!(ids.iter().any(|i| i == s), "{s}");
        }
        assert!("f.pair.13_2".parse::<FormulaId>().is_err());
        assert!("f.1_23+12_3".parse::<FormulaId>().is_err());
        assert!("xx.13_2".parse::<FormulaId>().is_err());
        assert!("nonsense".parse::<FormulaId>().is_err());
    }

    #[test]
    fn unsupported_evaluation() {
        let id: FormulaId = "ls.14_2_3".parse().unwrap();
        assert!(id.evaluate(4).is_err());
        let id: FormulaId = "f.123".parse().unwrap();
        assert!(id.evaluate(4).is_err());
    }
}
