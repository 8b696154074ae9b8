//! Avoidance classes `R_n(P)` by depth-first search over RGF prefixes.
//!
//! Prefixes of RGFs are RGFs, and a prefix that contains a pattern can only
//! be extended to words that contain it, so such prefixes are never extended.
//! Since every proper prefix on the search stack already avoids `P`, a new
//! letter only has to be checked for occurrences that end at that letter.

use super::containment::embeds;
use super::PatternSet;
use crate::error::Result;
use crate::rgf::{check_limit, Rgf, RgfIter, DEFAULT_LIMIT};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClassOptions {
    pub limit: usize,
    /// When false, every word of `R_n` is generated and filtered at the leaf.
    pub prune: bool,
}

impl Default for ClassOptions {
    fn default() -> Self {
        ClassOptions {
            limit: DEFAULT_LIMIT,
            prune: true,
        }
    }
}

/// `R_n(P)` in lexicographic order with default options.
pub fn avoidance_class(n: usize, patterns: &PatternSet) -> Result<AvoidanceClass> {
    AvoidanceClass::new(n, patterns, ClassOptions::default())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum State {
    Fresh,
    Running,
    Done,
}

/// Iterator over the words of `R_n(P)` that extend a fixed prefix.
#[derive(Clone, Debug)]
pub struct AvoidanceClass {
    n: usize,
    patterns: Vec<Rgf>,
    prune: bool,
    word: Vec<u8>,
    maxes: Vec<u8>,
    floor: usize,
    state: State,
}

impl AvoidanceClass {
    pub fn new(n: usize, patterns: &PatternSet, opts: ClassOptions) -> Result<Self> {
        Self::from_prefix(n, patterns, &Rgf::empty(), opts)
    }

    /// Words of `R_n(P)` beginning with `prefix`, in lexicographic order.
    pub fn from_prefix(
        n: usize,
        patterns: &PatternSet,
        prefix: &Rgf,
        opts: ClassOptions,
    ) -> Result<Self> {
        Self::build(n, patterns.words().to_vec(), prefix, opts)
    }

    /// Every word of `R_n` beginning with `prefix`, in lexicographic order.
    pub fn unrestricted(n: usize, prefix: &Rgf, opts: ClassOptions) -> Result<Self> {
        Self::build(n, Vec::new(), prefix, opts)
    }

    fn build(n: usize, patterns: Vec<Rgf>, prefix: &Rgf, opts: ClassOptions) -> Result<Self> {
        check_limit(n, opts.limit)?;
        let word: Vec<u8> = prefix.letters().to_vec();
        let maxes = word
            .iter()
            .scan(0u8, |m, &a| {
                *m = (*m).max(a);
                Some(*m)
            })
            .collect();
        let state = if word.len() > n {
            State::Done
        } else {
            State::Fresh
        };
        Ok(AvoidanceClass {
            n,
            patterns,
            prune: opts.prune,
            floor: word.len(),
            word,
            maxes,
            state,
        })
    }

    fn avoids_whole(&self) -> bool {
        self.patterns
            .iter()
            .all(|p| !embeds(&self.word, p.letters(), false))
    }

    fn last_letter_ok(&self) -> bool {
        !self.prune
            || self
                .patterns
                .iter()
                .all(|p| !embeds(&self.word, p.letters(), true))
    }

    /// Moves the deepest position to its next acceptable letter, popping
    /// exhausted positions. Returns false once nothing above the floor is left.
    fn bump(&mut self) -> bool {
        loop {
            let len = self.word.len();
            if len <= self.floor {
                return false;
            }
            let i = len - 1;
            let prev_max = if i == 0 { 0 } else { self.maxes[i - 1] };
            if self.word[i] <= prev_max {
                self.word[i] += 1;
                self.maxes[i] = prev_max.max(self.word[i]);
                if self.last_letter_ok() {
                    return true;
                }
            } else {
                self.word.pop();
                self.maxes.pop();
            }
        }
    }

    /// Extends with the smallest acceptable letters until the word is full.
    fn descend(&mut self) -> bool {
        while self.word.len() < self.n {
            let prev_max = self.maxes.last().copied().unwrap_or(0);
            self.word.push(1);
            self.maxes.push(prev_max.max(1));
            if !self.last_letter_ok() && !self.bump() {
                return false;
            }
        }
        true
    }
}

impl Iterator for AvoidanceClass {
    type Item = Rgf;

    fn next(&mut self) -> Option<Rgf> {
        loop {
            let positioned = match self.state {
                State::Done => return None,
                State::Fresh => {
                    self.state = State::Running;
                    if self.prune && !self.avoids_whole() {
                        false
                    } else {
                        self.descend()
                    }
                }
                State::Running => self.bump() && self.descend(),
            };
            if !positioned {
                self.state = State::Done;
                return None;
            }
            if self.prune || self.avoids_whole() {
                return Some(Rgf::new_unchecked(self.word.clone()));
            }
        }
    }
}

/// Prefixes of length `min(depth, n)` from which the class can be sharded.
/// Concatenating the shards in this order reproduces the lexicographic order.
pub fn shard_prefixes(
    n: usize,
    patterns: &PatternSet,
    depth: usize,
    opts: ClassOptions,
) -> Result<Vec<Rgf>> {
    check_limit(n, opts.limit)?;
    let d = depth.min(n);
    if opts.prune {
        Ok(AvoidanceClass::new(d, patterns, opts)?.collect())
    } else {
        Ok(RgfIter::with_limit(d, opts.limit)?.collect())
    }
}
