use super::PatternSet;
use crate::partition::SetPartition;
use crate::rgf::Rgf;

/// Searches for indices `i_1 < … < i_k` with `word[i_a] == word[i_b]` exactly
/// when `pat[a] == pat[b]`. With `anchor_last`, `i_k` must be the last index.
///
/// `pat` must be an RGF so that its letters appear in first-occurrence order.
pub(crate) fn embeds(word: &[u8], pat: &[u8], anchor_last: bool) -> bool {
    let (n, k) = (word.len(), pat.len());
    if k == 0 {
        return true;
    }
    if k > n {
        return false;
    }
    let mut search = Embedding {
        word,
        pat,
        anchor_last,
        // pattern letter -> word value, 0 while unassigned
        assigned: [0u8; 65],
        used: 0,
    };
    search.extend(0, 0)
}

struct Embedding<'a> {
    word: &'a [u8],
    pat: &'a [u8],
    anchor_last: bool,
    assigned: [u8; 65],
    used: u64,
}

impl Embedding<'_> {
    fn extend(&mut self, a: usize, start: usize) -> bool {
        let (n, k) = (self.word.len(), self.pat.len());
        if a == k {
            return true;
        }
        let (lo, hi) = if self.anchor_last && a == k - 1 {
            (n - 1, n - 1)
        } else {
            (start, n - (k - a))
        };
        if lo < start {
            return false;
        }
        let p = self.pat[a] as usize;
        for i in lo..=hi {
            let v = self.word[i];
            let bit = 1u64 << (v - 1);
            let current = self.assigned[p];
            match current {
                0 => {
                    if self.used & bit != 0 {
                        continue;
                    }
                    self.assigned[p] = v;
                    self.used |= bit;
                    let found = self.extend(a + 1, i + 1);
                    self.assigned[p] = 0;
                    self.used &= !bit;
                    if found {
                        return true;
                    }
                }
                u if u == v && self.extend(a + 1, i + 1) => return true,
                _ => {}
            }
        }
        false
    }
}

/// Whether some subpartition of `sigma` standardizes to `pi`.
///
/// Every partition contains the empty pattern; no partition contains a
/// pattern larger than itself.
pub fn contains_partition(sigma: &SetPartition, pi: &SetPartition) -> bool {
    embeds(sigma.to_rgf().letters(), pi.to_rgf().letters(), false)
}

/// `sigma` avoids every pattern of `patterns`.
pub fn avoids_all(sigma: &SetPartition, patterns: &PatternSet) -> bool {
    let w = sigma.to_rgf();
    patterns
        .words()
        .iter()
        .all(|p| !embeds(w.letters(), p.letters(), false))
}

/// Whether some subsequence of `w` standardizes (by value rank) to `v`.
pub fn contains_rgf_subsequence(w: &Rgf, v: &[usize]) -> bool {
    fn extend(word: &[u8], v: &[usize], chosen: &mut Vec<usize>, start: usize) -> bool {
        let a = chosen.len();
        if a == v.len() {
            return true;
        }
        for i in start..=word.len() - (v.len() - a) {
            let consistent = chosen
                .iter()
                .zip(v)
                .all(|(&ib, &vb)| (word[i] as usize).cmp(&(word[ib] as usize)) == v[a].cmp(&vb));
            if consistent {
                chosen.push(i);
                if extend(word, v, chosen, i + 1) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    let word = w.letters();
    if v.len() > word.len() {
        return false;
    }
    extend(word, v, &mut Vec::with_capacity(v.len()), 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::standardize_partition;
    use crate::rgf::enumerate_rgfs;
    use crate::standardize_sequence;
    use itertools::Itertools;
    use std::collections::BTreeSet;

    fn sp(s: &str) -> SetPartition {
        s.parse().unwrap()
    }

    /// Containment straight from the definition: restrict to every subset of
    /// the right size and standardize.
    fn contains_by_definition(sigma: &SetPartition, pi: &SetPartition) -> bool {
        if pi.n() == 0 {
            return true;
        }
        (1..=sigma.n()).combinations(pi.n()).any(|s| {
            let s: BTreeSet<usize> = s.into_iter().collect();
            standardize_partition(&sigma.restrict(&s).unwrap()).unwrap() == *pi
        })
    }

    fn rgf_contains_by_definition(w: &Rgf, v: &[usize]) -> bool {
        let letters: Vec<usize> = w.letters().iter().map(|&a| a as usize).collect();
        (0..letters.len()).combinations(v.len()).any(|idx| {
            let sub: Vec<usize> = idx.iter().map(|&i| letters[i]).collect();
            standardize_sequence(&sub).unwrap() == v
        })
    }

    #[test]
    fn worked_examples() {
        let s = sp("14/236/5");
        assert!(contains_partition(&s, &sp("13/2")));
        assert!(!contains_partition(&s, &sp("123/4")));
        assert!(contains_partition(&s, &s));
        assert!(avoids_all(&s, &"123/4".parse().unwrap()));
    }

    #[test]
    fn edge_conventions() {
        let empty = sp("");
        assert!(contains_partition(&empty, &empty));
        assert!(contains_partition(&sp("12"), &empty));
        assert!(!contains_partition(&sp("12"), &sp("1/2/3")));
        for n in 1..6 {
            for w in enumerate_rgfs(n).unwrap() {
                assert!(!avoids_all(
                    &SetPartition::from_rgf(&w),
                    &"1".parse().unwrap()
                ));
            }
        }
    }

    #[test]
    fn agrees_with_definition_on_small_cases() {
        let patterns: Vec<SetPartition> = (1..=4)
            .flat_map(|k| enumerate_rgfs(k).unwrap())
            .map(|w| SetPartition::from_rgf(&w))
            .collect();
        for n in 0..=7 {
            for w in enumerate_rgfs(n).unwrap() {
                let sigma = SetPartition::from_rgf(&w);
                for pi in &patterns {
                    assert_eq!(
                        contains_partition(&sigma, pi),
                        contains_by_definition(&sigma, pi),
                        "{sigma} vs {pi}"
                    );
                }
            }
        }
    }

    #[test]
    fn anchored_search_needs_the_last_letter() {
        // 1211: positions 1, 2, 4 spell 121
        assert!(embeds(&[1, 2, 1, 1], &[1, 2, 1], true));
        // 1213: the only 121 ends at index 2
        assert!(!embeds(&[1, 2, 1, 3], &[1, 2, 1], true));
        assert!(embeds(&[1, 2, 1, 3], &[1, 2, 1], false));
    }

    #[test]
    fn rgf_subsequence_examples() {
        let w: Rgf = "122132".parse().unwrap();
        assert!(contains_rgf_subsequence(&w, &[1, 2, 1]));
        assert!(contains_rgf_subsequence(&w, &[1, 2, 2, 1, 3, 2]));
        assert!(!contains_rgf_subsequence(&Rgf::ones(5), &[1, 2]));
        assert!(!contains_rgf_subsequence(&w, &[1, 2, 3, 4]));
        assert!(contains_rgf_subsequence(&w, &[2, 1]));
        assert!(contains_rgf_subsequence(&w, &[]));
    }

    #[test]
    fn rgf_subsequence_agrees_with_definition() {
        let targets: Vec<Vec<usize>> = vec![
            vec![1, 2, 1],
            vec![1, 2, 2],
            vec![1, 1, 2],
            vec![2, 1, 3],
            vec![1, 3, 2],
            vec![1, 2, 3, 1],
            vec![2, 2, 1],
        ];
        for n in 0..=7 {
            for w in enumerate_rgfs(n).unwrap() {
                for v in &targets {
                    assert_eq!(
                        contains_rgf_subsequence(&w, v),
                        rgf_contains_by_definition(&w, v),
                        "{w} vs {v:?}"
                    );
                }
            }
        }
    }
}
