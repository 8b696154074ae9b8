//! Set partitions in block form, and their correspondence with RGFs.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::rgf::{parse_letters, write_letters, Rgf, MAX_LEN};

/// A partition of an arbitrary finite set of positive integers.
///
/// Blocks are kept sorted internally and ordered by their minima.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GenericPartition {
    blocks: Vec<Vec<usize>>,
}

impl GenericPartition {
    pub fn new(blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        let mut blocks = blocks;
        for b in &mut blocks {
            if b.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            b.sort_unstable();
            for &x in b.iter() {
                if x == 0 {
                    return Err(Error::InvalidPartition("elements must be positive".into()));
                }
                if !seen.insert(x) {
                    return Err(Error::InvalidPartition(format!("{x} appears twice")));
                }
            }
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        Ok(GenericPartition { blocks })
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Number of elements in the ground set.
    pub fn size(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }
}

impl fmt::Display for GenericPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_blocks(f, &self.blocks)
    }
}

impl FromStr for GenericPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GenericPartition::new(parse_blocks(s)?)
    }
}

/// A set partition of `[n]` in standard form: `min B_1 < min B_2 < …`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SetPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    /// Builds a partition of `[n]`, normalising block order.
    pub fn new(blocks: Vec<Vec<usize>>) -> Result<Self> {
        let generic = GenericPartition::new(blocks)?;
        let n = generic.size();
        if n > MAX_LEN {
            return Err(Error::InvalidPartition(format!(
                "n = {n} exceeds {MAX_LEN}"
            )));
        }
        if let Some(&x) = generic.blocks.iter().flatten().find(|&&x| x > n) {
            return Err(Error::OutOfRange { element: x, n });
        }
        Ok(SetPartition {
            n,
            blocks: generic.blocks,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// `w(σ)`: letter `i` is the index of the block holding `i`.
    pub fn to_rgf(&self) -> Rgf {
        let mut word = vec![0u8; self.n];
        for (j, b) in self.blocks.iter().enumerate() {
            for &i in b {
                word[i - 1] = (j + 1) as u8;
            }
        }
        Rgf::new_unchecked(word)
    }

    pub fn from_rgf(w: &Rgf) -> SetPartition {
        let mut blocks = vec![Vec::new(); w.max_value()];
        for (i, &a) in w.letters().iter().enumerate() {
            blocks[a as usize - 1].push(i + 1);
        }
        SetPartition { n: w.len(), blocks }
    }

    /// The subpartition induced by `subset`; empty intersections are dropped.
    pub fn restrict(&self, subset: &BTreeSet<usize>) -> Result<GenericPartition> {
        if let Some(&x) = subset.iter().find(|&&x| x == 0 || x > self.n) {
            return Err(Error::OutOfRange {
                element: x,
                n: self.n,
            });
        }
        let mut blocks: Vec<Vec<usize>> = self
            .blocks
            .iter()
            .map(|b| {
                b.iter()
                    .copied()
                    .filter(|x| subset.contains(x))
                    .collect::<Vec<_>>()
            })
            .filter(|b| !b.is_empty())
            .collect();
        // standard form of the subpartition: order by new minima
        blocks.sort_unstable_by_key(|b| b[0]);
        Ok(GenericPartition { blocks })
    }

    pub fn as_generic(&self) -> GenericPartition {
        GenericPartition {
            blocks: self.blocks.clone(),
        }
    }
}

/// Relabels a partition order-isomorphically onto `[n]`.
pub fn standardize_partition(p: &GenericPartition) -> Result<SetPartition> {
    if p.is_empty() {
        return Err(Error::Empty("standardize_partition"));
    }
    let mut elems: Vec<usize> = p.blocks.iter().flatten().copied().collect();
    elems.sort_unstable();
    let rank = |x: usize| elems.binary_search(&x).unwrap() + 1;
    let blocks = p
        .blocks
        .iter()
        .map(|b| b.iter().map(|&x| rank(x)).collect())
        .collect();
    // ranks preserve both within-block order and the order of block minima
    Ok(SetPartition {
        n: elems.len(),
        blocks,
    })
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_blocks(f, &self.blocks)
    }
}

impl FromStr for SetPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SetPartition::new(parse_blocks(s)?)
    }
}

fn write_blocks(f: &mut fmt::Formatter<'_>, blocks: &[Vec<usize>]) -> fmt::Result {
    let wide = blocks.iter().flatten().any(|&x| x >= 10);
    for (j, b) in blocks.iter().enumerate() {
        if j > 0 {
            f.write_str("/")?;
        }
        if wide {
            // force the comma form for every block once any element is wide
            for (i, x) in b.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{x}")?;
            }
        } else {
            write_letters(f, b.iter().copied())?;
        }
    }
    Ok(())
}

fn parse_blocks(s: &str) -> Result<Vec<Vec<usize>>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split('/')
        .map(|b| {
            parse_letters(b.trim())
                .filter(|v| !v.is_empty())
                .ok_or_else(|| Error::Parse {
                    what: "set partition",
                    input: s.to_string(),
                })
        })
        .collect()
}
