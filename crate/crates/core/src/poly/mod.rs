//! Exact sparse polynomials in `(q, r, s, t)` and in a single variable.
//!
//! Both polynomial types are generic over the coefficient ring; the crate
//! root fixes big-integer coefficients through the [`Poly4`](crate::Poly4)
//! and [`Poly1`](crate::Poly1) aliases.

mod format;
mod multi;
mod uni;

use std::collections::HashMap;
use std::fmt;
use std::ops::{AddAssign, Mul};
use std::str::FromStr;

use num_traits::{FromPrimitive, One, Zero};

use crate::error::{Error, Result};
use crate::rgf::Rgf;
use crate::stats::{stat_quad, StatKind};

pub use format::PolyJson;
pub use multi::{Exponents, MPoly4};
pub use uni::MPoly1;

/// A commutative coefficient ring with exact arithmetic.
pub trait Coefficient:
    Clone + PartialEq + fmt::Debug + Zero + One + AddAssign + Mul<Output = Self> + FromPrimitive
{
}

impl<T> Coefficient for T where
    T: Clone + PartialEq + fmt::Debug + Zero + One + AddAssign + Mul<Output = Self> + FromPrimitive
{
}

/// The four variables, in rendering order. Variable `i` marks statistic `i`
/// of [`StatKind::ALL`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    Q,
    R,
    S,
    T,
}

impl Var {
    pub const ALL: [Var; 4] = [Var::Q, Var::R, Var::S, Var::T];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn letter(self) -> char {
        ['q', 'r', 's', 't'][self.index()]
    }

    pub fn from_letter(c: char) -> Option<Var> {
        Var::ALL.into_iter().find(|v| v.letter() == c)
    }

    pub fn of_stat(kind: StatKind) -> Var {
        Var::ALL[kind.index()]
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl FromStr for Var {
    type Err = Error;

    fn from_str(s: &str) -> Result<Var> {
        let mut chars = s.trim().chars();
        match (chars.next(), chars.next()) {
            (Some(c), None) => Var::from_letter(c),
            _ => None,
        }
        .ok_or_else(|| Error::Parse {
            what: "variable",
            input: s.to_string(),
        })
    }
}

/// A transposition of two variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VarSwap {
    QT,
    RS,
}

impl VarSwap {
    fn pair(self) -> (usize, usize) {
        match self {
            VarSwap::QT => (0, 3),
            VarSwap::RS => (1, 2),
        }
    }
}

/// `Σ q^lb r^ls s^rb t^rs` over a stream of words.
pub fn distribution<C: Coefficient>(words: impl IntoIterator<Item = Rgf>) -> MPoly4<C> {
    let mut counts: HashMap<[u32; 4], u64> = HashMap::new();
    for w in words {
        *counts.entry(stat_quad(&w).as_array()).or_default() += 1;
    }
    MPoly4::from_terms(counts.into_iter().map(|(e, c)| {
        (
            Exponents(e),
            C::from_u64(c).expect("count representable in coefficient ring"),
        )
    }))
}
