//! Pattern containment and avoidance for set partitions.
//!
//! Containment is decided on RGFs: `σ` contains `π` exactly when some
//! subsequence of `w(σ)` has the same equality pattern as `w(π)`.

mod class;
mod containment;
mod structure;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::partition::SetPartition;
use crate::rgf::Rgf;

pub use class::{avoidance_class, shard_prefixes, AvoidanceClass, ClassOptions};
pub use containment::{avoids_all, contains_partition, contains_rgf_subsequence};
pub use structure::{
    characterizes, dales, decompose, has_dale_pair_shape, has_dale_shape, left_right_maxima, Dale,
    Segment,
};

/// A nonempty, deduplicated set of patterns in canonical order.
///
/// Patterns are ordered by size and then by decreasing RGF, which puts the
/// partitions of `[3]` in the order `1/2/3, 1/23, 13/2, 12/3, 123`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PatternSet {
    patterns: Vec<SetPartition>,
    words: Vec<Rgf>,
}

impl PatternSet {
    pub fn new(patterns: impl IntoIterator<Item = SetPartition>) -> Result<Self> {
        let mut keyed: Vec<(Rgf, SetPartition)> =
            patterns.into_iter().map(|p| (p.to_rgf(), p)).collect();
        if keyed.is_empty() {
            return Err(Error::Empty("pattern set"));
        }
        keyed.sort_by(|(a, _), (b, _)| a.len().cmp(&b.len()).then_with(|| b.cmp(a)));
        keyed.dedup_by(|(a, _), (b, _)| a == b);
        let (words, patterns) = keyed.into_iter().unzip();
        Ok(PatternSet { patterns, words })
    }

    pub fn single(p: SetPartition) -> Self {
        Self::new([p]).expect("one pattern")
    }

    /// The partition `1/2/…/t`.
    pub fn all_singletons(t: usize) -> SetPartition {
        SetPartition::from_rgf(&Rgf::identity(t))
    }

    pub fn patterns(&self) -> &[SetPartition] {
        &self.patterns
    }

    /// RGFs of the patterns, in the same order.
    pub fn words(&self) -> &[Rgf] {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.patterns.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains_pattern(&self, p: &SetPartition) -> bool {
        self.patterns.contains(p)
    }

    /// Identifier fragment used by formula ids: `1/23,12/3` becomes `1_23+12_3`.
    pub fn id(&self) -> String {
        self.patterns
            .iter()
            .map(|p| p.to_string().replace('/', "_"))
            .collect::<Vec<_>>()
            .join("+")
    }

    /// Inverse of [`PatternSet::id`].
    pub fn from_id(id: &str) -> Result<Self> {
        id.split('+')
            .map(|p| p.replace('_', "/").parse::<SetPartition>())
            .collect::<Result<Vec<_>>>()
            .and_then(PatternSet::new)
    }
}

impl fmt::Display for PatternSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.patterns.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for PatternSet {
    type Err = Error;

    /// Comma-separated slash forms, e.g. `"13/2,12/3"`. Patterns must use
    /// single-digit elements, since commas separate patterns here.
    fn from_str(s: &str) -> Result<Self> {
        s.split(',')
            .map(|p| match p.trim() {
                "" => Err(Error::Parse {
                    what: "pattern set",
                    input: s.to_string(),
                }),
                p => p.parse::<SetPartition>(),
            })
            .collect::<Result<Vec<_>>>()
            .and_then(PatternSet::new)
    }
}

/// The five partitions of `[3]` in canonical order.
pub fn pi3() -> [SetPartition; 5] {
    ["1/2/3", "1/23", "13/2", "12/3", "123"].map(|s| s.parse().expect("valid literal"))
}
