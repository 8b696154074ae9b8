//! Degree, leading coefficient and low-order coefficients claimed for
//! polynomials that have no closed form.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use super::arith::{binom, factorial, fibonacci};
use crate::error::{Error, Result};
use crate::Poly1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum FactsKind {
    /// `LB_n(123)`.
    Lb123,
    /// `RS_n(123)`.
    Rs123,
    /// `RB_n(123)`.
    Rb123,
    /// `LB_n(14/2/3, 123)`.
    Lb1423With123,
}

impl FactsKind {
    pub const ALL: [FactsKind; 4] = [
        FactsKind::Lb123,
        FactsKind::Rs123,
        FactsKind::Rb123,
        FactsKind::Lb1423With123,
    ];

    pub fn id(self) -> &'static str {
        match self {
            FactsKind::Lb123 => "lb.123.facts",
            FactsKind::Rs123 => "rs.123.facts",
            FactsKind::Rb123 => "rb.123.facts",
            FactsKind::Lb1423With123 => "lb.123+14_2_3.facts",
        }
    }

    /// The pattern set whose distribution the facts describe.
    pub fn patterns(self) -> &'static str {
        match self {
            FactsKind::Lb1423With123 => "14/2/3,123",
            _ => "123",
        }
    }

    pub fn stat(self) -> crate::StatKind {
        match self {
            FactsKind::Rs123 => crate::StatKind::Rs,
            FactsKind::Rb123 => crate::StatKind::Rb,
            _ => crate::StatKind::Lb,
        }
    }
}

/// Claimed coefficients; `None` where nothing is claimed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoeffFacts {
    pub degree: u32,
    #[serde(serialize_with = "as_decimal")]
    pub leading: BigInt,
    #[serde(serialize_with = "as_decimal_opt")]
    pub constant: Option<BigInt>,
    #[serde(serialize_with = "as_decimal_opt")]
    pub linear: Option<BigInt>,
}

fn as_decimal<S: serde::Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

fn as_decimal_opt<S: serde::Serializer>(
    v: &Option<BigInt>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(v) => s.serialize_str(&v.to_string()),
        None => s.serialize_none(),
    }
}

impl CoeffFacts {
    /// Lists every claim that `p` violates.
    pub fn mismatches(&self, p: &Poly1) -> Vec<String> {
        let mut out = Vec::new();
        match p.degree() {
            Some(d) if d == self.degree => {}
            d => out.push(format!("degree {d:?}, claimed {}", self.degree)),
        }
        if p.leading() != self.leading {
            out.push(format!("leading {}, claimed {}", p.leading(), self.leading));
        }
        for (deg, claim) in [(0, &self.constant), (1, &self.linear)] {
            if let Some(c) = claim {
                let got = p.coefficient(deg);
                if got != *c {
                    out.push(format!("[q^{deg}] {got}, claimed {c}"));
                }
            }
        }
        out
    }
}

pub fn coeff_facts(kind: FactsKind, n: usize) -> Result<CoeffFacts> {
    if n < 3 {
        return Err(Error::Unsupported(format!("{} needs n >= 3", kind.id())));
    }
    let m = n as u64;
    let k = m / 3;
    Ok(match kind {
        FactsKind::Lb123 => CoeffFacts {
            degree: (m * (m - 1) / 6) as u32,
            leading: match m % 3 {
                2 => BigInt::from(k + 2) * factorial(k),
                _ => factorial(k),
            },
            constant: Some(fibonacci(m)),
            linear: Some(BigInt::from(m - 2) * fibonacci(m - 2)),
        },
        FactsKind::Rs123 => CoeffFacts {
            degree: ((m - 1) * (m - 1) / 4) as u32,
            leading: if m % 2 == 1 {
                BigInt::one()
            } else {
                BigInt::from(2)
            },
            constant: Some(fibonacci(m)),
            linear: None,
        },
        FactsKind::Rb123 => CoeffFacts {
            degree: u32::try_from(binom(m, 2)).expect("small degree"),
            leading: BigInt::one(),
            constant: None,
            linear: None,
        },
        FactsKind::Lb1423With123 => CoeffFacts {
            degree: k as u32,
            leading: match m % 3 {
                0 => BigInt::one(),
                1 => BigInt::from(m),
                _ => {
                    let num = BigInt::from(3 * m * m + 14) - BigInt::from(7 * m);
                    debug_assert!((&num % 6u32).is_zero());
                    num / 6u32
                }
            },
            constant: None,
            linear: None,
        },
    })
}
