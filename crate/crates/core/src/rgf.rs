//! Restricted growth functions and their lexicographic enumeration.
//!
//! A restricted growth function (RGF) of length `n` is a word `a_1 … a_n` of
//! positive integers with `a_1 = 1` and `a_i <= 1 + max(a_1, …, a_{i-1})`.
//! RGFs of length `n` are in bijection with the set partitions of `[n]`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Hard upper bound on word length: letters and positions must fit the
/// 64-bit value masks used by the statistics and containment code.
pub const MAX_LEN: usize = 64;

/// Default enumeration limit for full-space and class enumeration.
pub const DEFAULT_LIMIT: usize = 14;

/// An immutable restricted growth function.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Rgf(Box<[u8]>);

impl Rgf {
    /// Validates `word` and wraps it.
    pub fn new(word: Vec<u8>) -> Result<Self> {
        check_rgf(&word)?;
        Ok(Rgf(word.into_boxed_slice()))
    }

    pub fn from_slice(word: &[u8]) -> Result<Self> {
        Self::new(word.to_vec())
    }

    /// Wraps a word already known to be a valid RGF.
    pub(crate) fn new_unchecked(word: Vec<u8>) -> Self {
        debug_assert!(check_rgf(&word).is_ok(), "not an RGF: {word:?}");
        Rgf(word.into_boxed_slice())
    }

    /// The empty word, the single element of `R_0`.
    pub fn empty() -> Self {
        Rgf::default()
    }

    /// `1^n`.
    pub fn ones(n: usize) -> Self {
        Rgf::new_unchecked(vec![1; n])
    }

    /// `12…n`.
    pub fn identity(n: usize) -> Self {
        Rgf::new_unchecked((1..=n as u8).collect())
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Largest letter, which is also the number of blocks. Zero for the empty word.
    pub fn max_value(&self) -> usize {
        self.0.iter().copied().max().unwrap_or(0) as usize
    }

    /// Length of the longest prefix of the form `12…p`.
    pub fn initial_run_length(&self) -> usize {
        self.0
            .iter()
            .enumerate()
            .take_while(|&(i, &a)| a as usize == i + 1)
            .count()
    }

    /// The prefix `a_1 … a_len`, itself an RGF.
    pub fn prefix(&self, len: usize) -> Rgf {
        Rgf(self.0[..len].into())
    }
}

impl AsRef<[u8]> for Rgf {
    fn as_ref(&self) -> &[u8] {
        &self.0
    }
}

impl fmt::Display for Rgf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_letters(f, self.0.iter().map(|&a| a as usize))
    }
}

impl fmt::Debug for Rgf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Rgf({self})")
    }
}

impl FromStr for Rgf {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let letters = parse_letters(s.trim()).ok_or_else(|| Error::Parse {
            what: "RGF",
            input: s.to_string(),
        })?;
        let word = letters
            .into_iter()
            .map(|a| {
                u8::try_from(a).map_err(|_| Error::InvalidRgf(format!("letter {a} too large")))
            })
            .collect::<Result<Vec<u8>>>()?;
        Rgf::new(word)
    }
}

/// Writes digits concatenated, or comma-separated when any value is 10 or more.
pub(crate) fn write_letters(
    f: &mut impl fmt::Write,
    letters: impl Iterator<Item = usize> + Clone,
) -> fmt::Result {
    let wide = letters.clone().any(|a| a >= 10);
    for (i, a) in letters.enumerate() {
        if wide && i > 0 {
            f.write_char(',')?;
        }
        write!(f, "{a}")?;
    }
    Ok(())
}

/// Parses `"122132"` or `"1,2,10"`. Returns `None` on malformed input.
pub(crate) fn parse_letters(s: &str) -> Option<Vec<usize>> {
    if s.is_empty() {
        return Some(Vec::new());
    }
    if s.contains(',') {
        s.split(',').map(|t| t.trim().parse().ok()).collect()
    } else {
        s.chars()
            .map(|c| c.to_digit(10).map(|d| d as usize))
            .collect()
    }
}

fn check_rgf(word: &[u8]) -> Result<()> {
    if word.len() > MAX_LEN {
        return Err(Error::InvalidRgf(format!(
            "length {} exceeds {MAX_LEN}",
            word.len()
        )));
    }
    let mut max = 0u8;
    for (i, &a) in word.iter().enumerate() {
        if a == 0 || a > max + 1 {
            return Err(Error::InvalidRgf(format!(
                "letter {a} at position {} exceeds 1 + running maximum {max}",
                i + 1
            )));
        }
        max = max.max(a);
    }
    Ok(())
}

/// Replaces every value by its rank among the distinct values (smallest ↦ 1).
pub fn standardize_sequence(seq: &[usize]) -> Result<Vec<usize>> {
    if seq.is_empty() {
        return Err(Error::Empty("standardize_sequence"));
    }
    let mut distinct = seq.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    Ok(seq
        .iter()
        .map(|v| distinct.binary_search(v).unwrap() + 1)
        .collect())
}

/// Checks `n` against an enumeration limit.
pub fn check_limit(n: usize, limit: usize) -> Result<()> {
    let limit = limit.min(MAX_LEN);
    if n > limit {
        Err(Error::Capacity { n, limit })
    } else {
        Ok(())
    }
}

/// All of `R_n` in lexicographic order, with the default limit.
pub fn enumerate_rgfs(n: usize) -> Result<RgfIter> {
    RgfIter::with_limit(n, DEFAULT_LIMIT)
}

/// Lexicographic successor iteration over `R_n`.
#[derive(Debug, Clone)]
pub struct RgfIter {
    word: Vec<u8>,
    // running maximum of word[..=i]
    maxes: Vec<u8>,
    first: bool,
    done: bool,
}

impl RgfIter {
    pub fn with_limit(n: usize, limit: usize) -> Result<Self> {
        check_limit(n, limit)?;
        Ok(RgfIter {
            word: vec![1; n],
            maxes: vec![1; n],
            first: true,
            done: false,
        })
    }

    fn advance(&mut self) -> bool {
        let n = self.word.len();
        // rightmost position that can still grow
        let Some(i) = (1..n).rev().find(|&i| self.word[i] <= self.maxes[i - 1]) else {
            return false;
        };
        self.word[i] += 1;
        self.maxes[i] = self.maxes[i - 1].max(self.word[i]);
        for j in i + 1..n {
            self.word[j] = 1;
            self.maxes[j] = self.maxes[i];
        }
        true
    }
}

impl Iterator for RgfIter {
    type Item = Rgf;

    fn next(&mut self) -> Option<Rgf> {
        if self.done {
            return None;
        }
        if self.first {
            self.first = false;
        } else if !self.advance() {
            self.done = true;
            return None;
        }
        Some(Rgf::new_unchecked(self.word.clone()))
    }
}
