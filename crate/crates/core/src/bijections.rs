//! Explicit bijections between avoidance classes that carry one statistic
//! to another, and an exhaustive verifier for them.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::SetPartition;
use crate::patterns::{avoids_all, characterizes, decompose, PatternSet, Segment};
use crate::rgf::{enumerate_rgfs, Rgf};
use crate::stats::{stat_quad, StatKind};

fn domain_error(map: &'static str, w: &Rgf, reason: &'static str) -> Error {
    Error::Domain {
        map,
        word: w.to_string(),
        reason,
    }
}

fn only_ones_and_twos(map: &'static str, v: &Rgf) -> Result<()> {
    if v.letters().iter().all(|&a| a <= 2) {
        Ok(())
    } else {
        Err(domain_error(map, v, "letters must be 1 or 2"))
    }
}

/// `a_1 (3 - a_n) (3 - a_(n-1)) … (3 - a_2)` on words of 1s and 2s.
/// Sends `lb` to `rs`.
pub fn phi_123(v: &Rgf) -> Result<Rgf> {
    only_ones_and_twos("phi_123", v)?;
    let a = v.letters();
    let mut out = Vec::with_capacity(a.len());
    if let Some((&first, rest)) = a.split_first() {
        out.push(first);
        out.extend(rest.iter().rev().map(|&x| 3 - x));
    }
    Ok(Rgf::new_unchecked(out))
}

/// Reverse-complements the prefix ending at the last 2 and keeps the
/// trailing 1s. Sends `ls` to `rb`.
pub fn psi_123(v: &Rgf) -> Result<Rgf> {
    only_ones_and_twos("psi_123", v)?;
    let a = v.letters();
    let Some(last_two) = a.iter().rposition(|&x| x == 2) else {
        return Ok(v.clone());
    };
    let mut out: Vec<u8> = a[..=last_two].iter().rev().map(|&x| 3 - x).collect();
    out.extend_from_slice(&a[last_two + 1..]);
    Ok(Rgf::new_unchecked(out))
}

/// A strictly increasing sequence of parts from `[n-1]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DistinctPartition {
    n: usize,
    parts: Vec<usize>,
}

impl DistinctPartition {
    pub fn new(n: usize, parts: Vec<usize>) -> Result<Self> {
        let increasing = parts.windows(2).all(|p| p[0] < p[1]);
        let in_range = parts.iter().all(|&x| x >= 1 && x < n);
        if !increasing || !in_range {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not a set of distinct parts below {n}"
            )));
        }
        Ok(DistinctPartition { n, parts })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `|λ|`.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `n - λ = (n - λ_k, …, n - λ_1)`.
    pub fn complement(&self) -> DistinctPartition {
        DistinctPartition {
            n: self.n,
            parts: self.parts.iter().rev().map(|&x| self.n - x).collect(),
        }
    }

    /// All `2^(n-1)` members of `D_(n-1)` (one, the empty partition, at `n = 0`).
    pub fn all(n: usize) -> Vec<DistinctPartition> {
        let top = n.saturating_sub(1);
        (0u64..1 << top)
            .map(|mask| DistinctPartition {
                n,
                parts: (1..=top).filter(|i| mask >> (i - 1) & 1 == 1).collect(),
            })
            .collect()
    }
}

impl fmt::Display for DistinctPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, x) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

/// Partial sums of the layer sizes of a layered word, dropping the last.
/// Sends `rb` to `|λ|` and `ls` to `|n - λ|`.
pub fn phi_layered(w: &Rgf) -> Result<DistinctPartition> {
    let a = w.letters();
    if !a.windows(2).all(|p| p[1] == p[0] || p[1] == p[0] + 1) {
        return Err(domain_error("phi_layered", w, "word is not layered"));
    }
    let parts = (1..a.len()).filter(|&i| a[i] != a[i - 1]).collect();
    Ok(DistinctPartition { n: a.len(), parts })
}

pub fn phi_layered_inv(lambda: &DistinctPartition) -> Rgf {
    let mut out = Vec::with_capacity(lambda.n);
    let mut bounds = lambda.parts.clone();
    bounds.push(lambda.n);
    let mut start = 0;
    for (layer, &end) in bounds.iter().enumerate() {
        out.extend(std::iter::repeat_n((layer + 1) as u8, end - start));
        start = end;
    }
    Rgf::new_unchecked(out)
}

/// Fixes plateaus and swaps the exponents of each dale section. Sends `lb`
/// to `rs` on `R_n(14/2/3)`.
pub fn phi_dale(w: &Rgf) -> Result<Rgf> {
    let segments = decompose(w).map_err(|_| domain_error("phi_dale", w, "word contains 14/2/3"))?;
    let mut out = Vec::with_capacity(w.len());
    for seg in segments {
        let image = match seg {
            Segment::DaleSection { low, l, j } => {
                let t = j.len();
                let (new_l, new_j) = if l[t] > 0 {
                    // (a-1)^l0 a^l1 (a-1)^j1 … a^lt (a-1)^jt
                    ([&l[..1], &j[..]].concat(), l[1..].to_vec())
                } else {
                    // (a-1)^l0 a^l1 (a-1)^j1 … a^l(t-1) (a-1)^j(t-1) a^jt
                    let new_l = [&l[..1], &j[..t - 1], &[0]].concat();
                    let new_j = [&l[1..t], &j[t - 1..]].concat();
                    (new_l, new_j)
                };
                Segment::DaleSection {
                    low,
                    l: new_l,
                    j: new_j,
                }
            }
            plateau => plateau,
        };
        out.extend(image.letters());
    }
    Ok(Rgf::new_unchecked(out))
}

/// `1 2 … (n-j+1) (n-i+1)^(j-1)` where `j` counts the 1s and `i` is the
/// index of the last 1. Sends `lb` to `rs` and `ls` to `rb`.
pub fn phi_1_23_to_12_3(w: &Rgf) -> Result<Rgf> {
    let one_two_three: PatternSet = "1/23".parse().expect("valid literal");
    if !characterizes(w, &one_two_three)? {
        return Err(domain_error("phi_1_23_to_12_3", w, "word contains 1/23"));
    }
    let a = w.letters();
    let n = a.len();
    if n == 0 {
        return Ok(Rgf::empty());
    }
    let j = a.iter().filter(|&&x| x == 1).count();
    let i = a.iter().rposition(|&x| x == 1).expect("a_1 = 1") + 1;
    let mut out: Vec<u8> = (1..=(n - j + 1) as u8).collect();
    out.extend(std::iter::repeat_n((n - i + 1) as u8, j - 1));
    Ok(Rgf::new_unchecked(out))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum BijectionId {
    Phi123,
    Psi123,
    PhiLayered,
    PhiDale,
    Phi1_23To12_3,
}

impl BijectionId {
    pub const ALL: [BijectionId; 5] = [
        BijectionId::Phi123,
        BijectionId::Psi123,
        BijectionId::PhiLayered,
        BijectionId::PhiDale,
        BijectionId::Phi1_23To12_3,
    ];

    pub fn id(self) -> &'static str {
        match self {
            BijectionId::Phi123 => "bij.phi_123",
            BijectionId::Psi123 => "bij.psi_123",
            BijectionId::PhiLayered => "bij.phi_layered",
            BijectionId::PhiDale => "bij.phi_dale",
            BijectionId::Phi1_23To12_3 => "bij.phi_1_23_to_12_3",
        }
    }

    fn domain(self) -> &'static str {
        match self {
            BijectionId::Phi123 | BijectionId::Psi123 => "1/2/3",
            BijectionId::PhiLayered => "13/2",
            BijectionId::PhiDale => "14/2/3",
            BijectionId::Phi1_23To12_3 => "1/23",
        }
    }

    /// Statistic pairs `(on w, on the image)` that must agree.
    fn transfers(self) -> &'static [(StatKind, StatKind)] {
        use StatKind::*;
        match self {
            BijectionId::Phi123 | BijectionId::PhiDale => &[(Lb, Rs)],
            BijectionId::Psi123 => &[(Ls, Rb)],
            BijectionId::PhiLayered => &[],
            BijectionId::Phi1_23To12_3 => &[(Lb, Rs), (Ls, Rb)],
        }
    }

    /// Applies a word-to-word map; `PhiLayered` goes through `phi_layered_inv`
    /// and is only useful for round trips.
    pub fn apply(self, w: &Rgf) -> Result<Rgf> {
        match self {
            BijectionId::Phi123 => phi_123(w),
            BijectionId::Psi123 => psi_123(w),
            BijectionId::PhiLayered => phi_layered(w).map(|l| phi_layered_inv(&l)),
            BijectionId::PhiDale => phi_dale(w),
            BijectionId::Phi1_23To12_3 => phi_1_23_to_12_3(w),
        }
    }
}

impl fmt::Display for BijectionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for BijectionId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BijectionId::ALL
            .into_iter()
            .find(|b| b.id() == s)
            .ok_or_else(|| Error::UnknownId(s.to_string()))
    }
}

/// Outcome of an exhaustive check at one size.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BijectionReport {
    pub id: BijectionId,
    pub n: usize,
    pub domain_size: usize,
    pub codomain_size: usize,
    pub injective: bool,
    pub surjective: bool,
    pub transfers_hold: bool,
    /// `None` when the map is not claimed to be an involution.
    pub involution: Option<bool>,
    pub counterexamples: Vec<String>,
}

impl BijectionReport {
    pub fn success(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

const MAX_COUNTEREXAMPLES: usize = 20;

fn class(n: usize, p: &str) -> Result<Vec<Rgf>> {
    let p: PatternSet = p.parse()?;
    Ok(enumerate_rgfs(n)?
        .filter(|w| avoids_all(&SetPartition::from_rgf(w), &p))
        .collect())
}

/// Checks membership, injectivity, surjectivity, the statistic transfers
/// and, where claimed, the involution property over the whole domain.
pub fn verify_bijection(id: BijectionId, n: usize) -> Result<BijectionReport> {
    let domain = class(n, id.domain())?;
    let mut bad = Vec::new();
    let mut note = |msg: String| {
        if bad.len() < MAX_COUNTEREXAMPLES {
            bad.push(msg);
        }
    };
    let (codomain_size, injective, surjective, transfers_hold, involution) = if id
        == BijectionId::PhiLayered
    {
        let codomain: HashSet<DistinctPartition> = DistinctPartition::all(n).into_iter().collect();
        let mut images = HashSet::new();
        let mut transfers = true;
        for w in &domain {
            let lambda = phi_layered(w)?;
            let q = stat_quad(w);
            if q.rb as usize != lambda.size() || q.ls as usize != lambda.complement().size() {
                transfers = false;
                note(format!("{w} -> {lambda}: rb {} ls {}", q.rb, q.ls));
            }
            if !codomain.contains(&lambda) {
                note(format!("{w} -> {lambda} lies outside D_(n-1)"));
            }
            if phi_layered_inv(&lambda) != *w {
                note(format!("{w} -> {lambda} does not invert"));
            }
            images.insert(lambda);
        }
        for lambda in &codomain {
            if phi_layered(&phi_layered_inv(lambda))? != *lambda {
                note(format!("{lambda} does not invert"));
            }
        }
        let injective = images.len() == domain.len();
        let surjective = images == codomain;
        (codomain.len(), injective, surjective, transfers, None)
    } else {
        let codomain_patterns = match id {
            BijectionId::Phi1_23To12_3 => "12/3",
            other => other.domain(),
        };
        let codomain: HashSet<Rgf> = class(n, codomain_patterns)?.into_iter().collect();
        let claims_involution = id != BijectionId::Phi1_23To12_3;
        let mut images = HashSet::new();
        let (mut transfers, mut involution) = (true, true);
        for w in &domain {
            let image = id.apply(w)?;
            let (a, b) = (stat_quad(w), stat_quad(&image));
            for &(src, dst) in id.transfers() {
                if a.get(src) != b.get(dst) {
                    transfers = false;
                    note(format!(
                        "{w} -> {image}: {src} {} vs {dst} {}",
                        a.get(src),
                        b.get(dst)
                    ));
                }
            }
            if !codomain.contains(&image) {
                note(format!("{w} -> {image} lies outside the codomain"));
            }
            if claims_involution && id.apply(&image)? != *w {
                involution = false;
                note(format!(
                    "{w} -> {image} is not undone by a second application"
                ));
            }
            if id == BijectionId::PhiDale && image.max_value() != w.max_value() {
                note(format!("{w} -> {image} changes the maximum value"));
            }
            images.insert(image);
        }
        let injective = images.len() == domain.len();
        let surjective = images == codomain;
        (
            codomain.len(),
            injective,
            surjective,
            transfers,
            claims_involution.then_some(involution),
        )
    };
    if id == BijectionId::PhiDale {
        let inner: HashSet<Rgf> = class(n, "14/2/3,13/2/4")?.into_iter().collect();
        for w in &inner {
            let image = phi_dale(w)?;
            if !inner.contains(&image) {
                note(format!("{w} -> {image} leaves R_n(14/2/3,13/2/4)"));
            }
        }
    }
    if !injective {
        note("map is not injective".into());
    }
    if !surjective {
        note("map is not surjective onto the codomain".into());
    }
    Ok(BijectionReport {
        id,
        n,
        domain_size: domain.len(),
        codomain_size,
        injective,
        surjective,
        transfers_hold,
        involution,
        counterexamples: bad,
    })
}
