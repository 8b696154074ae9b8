//! The four left/right, bigger/smaller statistics on RGF words.
//!
//! For a letter `a_j`, `lb(a_j)` is the number of *distinct* values that occur
//! to its left and are bigger than it; `ls`, `rb` and `rs` are the analogous
//! left-smaller, right-bigger and right-smaller counts. The statistic of a
//! word is the sum over its letters.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rgf::Rgf;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StatKind {
    Lb,
    Ls,
    Rb,
    Rs,
}

impl StatKind {
    pub const ALL: [StatKind; 4] = [StatKind::Lb, StatKind::Ls, StatKind::Rb, StatKind::Rs];

    /// Position of the statistic's exponent in `(q, r, s, t)`.
    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            StatKind::Lb => "lb",
            StatKind::Ls => "ls",
            StatKind::Rb => "rb",
            StatKind::Rs => "rs",
        }
    }
}

impl fmt::Display for StatKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for StatKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        StatKind::ALL
            .into_iter()
            .find(|k| k.name() == s.trim().to_ascii_lowercase())
            .ok_or_else(|| Error::Parse {
                what: "statistic",
                input: s.to_string(),
            })
    }
}

/// The exponent quadruple `(lb, ls, rb, rs)` of a word.
#[derive(
    Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize,
)]
pub struct StatQuad {
    pub lb: u32,
    pub ls: u32,
    pub rb: u32,
    pub rs: u32,
}

impl StatQuad {
    pub fn get(&self, kind: StatKind) -> u32 {
        match kind {
            StatKind::Lb => self.lb,
            StatKind::Ls => self.ls,
            StatKind::Rb => self.rb,
            StatKind::Rs => self.rs,
        }
    }

    pub fn as_array(&self) -> [u32; 4] {
        [self.lb, self.ls, self.rb, self.rs]
    }
}

#[inline]
fn bit(a: u8) -> u64 {
    1u64 << (a - 1)
}

/// Mask of values strictly below `a`.
#[inline]
fn below(a: u8) -> u64 {
    bit(a) - 1
}

/// Mask of values strictly above `a`.
#[inline]
fn above(a: u8) -> u64 {
    !(below(a) | bit(a))
}

/// `suffix[j]` holds the values occurring strictly after position `j`.
fn suffix_masks(letters: &[u8]) -> Vec<u64> {
    let mut suffix = vec![0u64; letters.len()];
    let mut acc = 0u64;
    for j in (0..letters.len()).rev() {
        suffix[j] = acc;
        acc |= bit(letters[j]);
    }
    suffix
}

/// One pass with a running left mask and precomputed right masks.
pub fn stat_quad(w: &Rgf) -> StatQuad {
    let letters = w.letters();
    let suffix = suffix_masks(letters);
    let mut left = 0u64;
    let mut q = StatQuad::default();
    for (j, &a) in letters.iter().enumerate() {
        q.lb += (left & above(a)).count_ones();
        q.ls += (left & below(a)).count_ones();
        q.rb += (suffix[j] & above(a)).count_ones();
        q.rs += (suffix[j] & below(a)).count_ones();
        left |= bit(a);
    }
    q
}

pub fn statistic(w: &Rgf, kind: StatKind) -> u32 {
    stat_quad(w).get(kind)
}

/// Per-letter value at 1-based position `j`.
pub fn statistic_at(w: &Rgf, j: usize, kind: StatKind) -> Result<u32> {
    let letters = w.letters();
    if j == 0 || j > letters.len() {
        return Err(Error::OutOfRange {
            element: j,
            n: letters.len(),
        });
    }
    let a = letters[j - 1];
    let left = letters[..j - 1].iter().fold(0u64, |m, &b| m | bit(b));
    let right = letters[j..].iter().fold(0u64, |m, &b| m | bit(b));
    let (side, cmp) = match kind {
        StatKind::Lb => (left, above(a)),
        StatKind::Ls => (left, below(a)),
        StatKind::Rb => (right, above(a)),
        StatKind::Rs => (right, below(a)),
    };
    Ok((side & cmp).count_ones())
}
