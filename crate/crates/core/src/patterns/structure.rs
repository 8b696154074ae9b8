//! Structural descriptions of avoidance classes, and the dale machinery used
//! for the pattern `14/2/3`.
//!
//! Nothing here calls the containment search, so agreement between
//! [`characterizes`] and [`avoids_all`](super::avoids_all) is a real check.

use std::collections::BTreeSet;

use super::PatternSet;
use crate::error::{Error, Result};
use crate::rgf::Rgf;

/// Position `index` (1-based) with `a_i = max{a_1, …, a_{i-1}} - 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Dale {
    pub index: usize,
    pub height: u8,
}

/// A maximal piece of a word in `R_n(14/2/3)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Segment {
    /// `value^len`.
    Plateau { value: u8, len: usize },
    /// `low^{l_0} (low+1)^{j_1} low^{l_1} … (low+1)^{j_t} low^{l_t}`.
    ///
    /// `l` has one more entry than `j`; every entry is positive except
    /// possibly the last entry of `l`.
    DaleSection {
        low: u8,
        l: Vec<usize>,
        j: Vec<usize>,
    },
}

impl Segment {
    pub fn letters(&self) -> Vec<u8> {
        match self {
            Segment::Plateau { value, len } => vec![*value; *len],
            Segment::DaleSection { low, l, j } => {
                let mut out = vec![*low; l[0]];
                for (jk, lk) in j.iter().zip(&l[1..]) {
                    out.extend(std::iter::repeat_n(low + 1, *jk));
                    out.extend(std::iter::repeat_n(*low, *lk));
                }
                out
            }
        }
    }

    pub fn len(&self) -> usize {
        match self {
            Segment::Plateau { len, .. } => *len,
            Segment::DaleSection { l, j, .. } => l.iter().sum::<usize>() + j.iter().sum::<usize>(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

pub fn dales(w: &Rgf) -> Vec<Dale> {
    let mut out = Vec::new();
    let mut max = 0u8;
    for (i, &a) in w.letters().iter().enumerate() {
        if i > 0 && a + 1 == max {
            out.push(Dale {
                index: i + 1,
                height: a,
            });
        }
        max = max.max(a);
    }
    out
}

/// `(index, value)` pairs, 1-based, where the letter exceeds everything before it.
pub fn left_right_maxima(w: &Rgf) -> Vec<(usize, u8)> {
    let mut out = Vec::new();
    let mut max = 0u8;
    for (i, &a) in w.letters().iter().enumerate() {
        if a > max {
            out.push((i + 1, a));
            max = a;
        }
    }
    out
}

fn no_deep_drop(w: &Rgf) -> bool {
    let mut max = 0u8;
    for &a in w.letters() {
        if a + 1 < max {
            return false;
        }
        max = max.max(a);
    }
    true
}

fn dale_heights(w: &Rgf) -> BTreeSet<u8> {
    dales(w).into_iter().map(|d| d.height).collect()
}

/// Every letter is at least the running maximum minus one, and no two dale
/// heights are consecutive. Equivalent to avoiding `14/2/3`.
pub fn has_dale_shape(w: &Rgf) -> bool {
    let heights = dale_heights(w);
    no_deep_drop(w) && heights.iter().all(|&a| !heights.contains(&(a + 1)))
}

/// Every letter is at least the running maximum minus one, and after a dale
/// of height `a` only `a` and `a + 1` occur. Equivalent to avoiding both
/// `14/2/3` and `13/2/4`.
pub fn has_dale_pair_shape(w: &Rgf) -> bool {
    let letters = w.letters();
    no_deep_drop(w)
        && dales(w).iter().all(|d| {
            letters[d.index..]
                .iter()
                .all(|&b| b == d.height || b == d.height + 1)
        })
}

/// Splits a word of `R_n(14/2/3)` into plateaus and dale sections.
pub fn decompose(w: &Rgf) -> Result<Vec<Segment>> {
    if !has_dale_shape(w) {
        return Err(Error::Domain {
            map: "decompose",
            word: w.to_string(),
            reason: "word contains 14/2/3",
        });
    }
    let heights = dale_heights(w);
    let letters = w.letters();
    let mut out = Vec::new();
    let mut p = 0;
    while p < letters.len() {
        let a = letters[p];
        let low = if heights.contains(&a) {
            Some(a)
        } else if a > 1 && heights.contains(&(a - 1)) {
            Some(a - 1)
        } else {
            None
        };
        let Some(low) = low else {
            let len = letters[p..].iter().take_while(|&&b| b == a).count();
            out.push(Segment::Plateau { value: a, len });
            p += len;
            continue;
        };
        let end = p + letters[p..]
            .iter()
            .take_while(|&&b| b == low || b == low + 1)
            .count();
        let mut runs: Vec<(u8, usize)> = Vec::new();
        for &b in &letters[p..end] {
            match runs.last_mut() {
                Some((v, c)) if *v == b => *c += 1,
                _ => runs.push((b, 1)),
            }
        }
        let (mut l, mut j) = (Vec::new(), Vec::new());
        for (v, c) in runs {
            if v == low {
                l.push(c);
            } else {
                j.push(c);
            }
        }
        if l.len() == j.len() {
            l.push(0);
        }
        out.push(Segment::DaleSection { low, l, j });
        p = end;
    }
    Ok(out)
}

/// Whether `w` has the structural shape of `R_n(P)`.
///
/// Supported sets: each single partition of `[3]`, `{14/2/3}`, and
/// `{14/2/3, 13/2/4}`.
pub fn characterizes(w: &Rgf, patterns: &PatternSet) -> Result<bool> {
    let id = patterns.id();
    let letters = w.letters();
    let ok = match id.as_str() {
        "1_2_3" => letters.iter().all(|&a| a <= 2),
        "1_23" => single_one_inserted(letters),
        "13_2" => letters.windows(2).all(|p| p[1] == p[0] || p[1] == p[0] + 1),
        "12_3" => {
            let m = w.initial_run_length();
            let tail = &letters[m..];
            tail.iter().all(|&a| a == tail[0] && a as usize <= m)
        }
        "123" => {
            let mut counts = [0u8; 65];
            letters.iter().all(|&a| {
                counts[a as usize] += 1;
                counts[a as usize] <= 2
            })
        }
        "14_2_3" => has_dale_shape(w),
        "14_2_3+13_2_4" => has_dale_pair_shape(w),
        _ => {
            return Err(Error::UnsupportedPatterns {
                got: patterns.to_string(),
                supported: "1/2/3; 1/23; 13/2; 12/3; 123; 14/2/3; 14/2/3,13/2/4".into(),
            })
        }
    };
    Ok(ok)
}

/// `w` is `1^l 2 3 … m` with one extra 1 inserted somewhere.
fn single_one_inserted(letters: &[u8]) -> bool {
    if letters.is_empty() {
        return true;
    }
    let base_shape = |v: &[u8]| {
        let l = v.iter().take_while(|&&a| a == 1).count();
        v[l..].iter().enumerate().all(|(k, &a)| a as usize == k + 2)
    };
    (0..letters.len()).any(|i| {
        letters[i] == 1 && {
            let mut v = letters.to_vec();
            v.remove(i);
            base_shape(&v)
        }
    })
}
