//! Explicit word families for classes avoiding two, three or four patterns of `[3]`.

use crate::error::{Error, Result};
use crate::patterns::PatternSet;
use crate::rgf::Rgf;

const SETS: [&str; 18] = [
    "1/2/3,1/23",
    "1/2/3,13/2",
    "1/2/3,12/3",
    "1/23,13/2",
    "1/23,12/3",
    "1/23,123",
    "13/2,12/3",
    "13/2,123",
    "12/3,123",
    "1/2/3,1/23,13/2",
    "1/2/3,1/23,12/3",
    "1/2/3,13/2,12/3",
    "1/23,13/2,12/3",
    "1/23,13/2,123",
    "1/23,12/3,123",
    "13/2,12/3,123",
    "1/2/3,1/23,13/2,12/3",
    "1/23,13/2,12/3,123",
];

/// The eighteen pattern sets that have a listed word family.
pub fn table_sets() -> Vec<PatternSet> {
    SETS.iter()
        .map(|s| s.parse().expect("valid literal"))
        .collect()
}

fn ones(k: usize) -> Vec<u8> {
    vec![1; k]
}

/// `a, a+1, …, b` (empty when `a > b`).
fn run(a: usize, b: usize) -> Vec<u8> {
    (a..=b).map(|x| x as u8).collect()
}

fn cat(parts: &[&[u8]]) -> Vec<u8> {
    parts.concat()
}

/// The listed family for `P`, sorted lexicographically, for `n >= 3`.
pub fn table_words(p: &PatternSet, n: usize) -> Result<Vec<Rgf>> {
    if n < 3 {
        return Err(Error::Unsupported(
            "word families are listed for n >= 3".into(),
        ));
    }
    let id = p.id();
    let idx = SETS
        .iter()
        .position(|s| s.parse::<PatternSet>().expect("valid literal").id() == id)
        .ok_or_else(|| Error::UnsupportedPatterns {
            got: p.to_string(),
            supported: SETS.join("; "),
        })?;
    let id_n = run(1, n);
    let words: Vec<Vec<u8>> = match idx {
        0 => vec![
            ones(n),
            cat(&[&ones(n - 1), &[2]]),
            cat(&[&ones(n - 2), &[2, 1]]),
        ],
        1 => (1..=n).map(|m| cat(&[&ones(m), &vec![2; n - m]])).collect(),
        2 => vec![
            ones(n),
            cat(&[&[1], &vec![2; n - 1]]),
            cat(&[&[1, 2], &ones(n - 2)]),
        ],
        3 => (1..=n)
            .map(|m| cat(&[&ones(n - m + 1), &run(2, m)]))
            .collect(),
        4 => vec![ones(n), cat(&[&run(1, n - 1), &[1]]), id_n],
        5 => {
            let mut v = vec![id_n];
            for j in 1..n {
                v.push(cat(&[&run(1, j), &[1], &run(j + 1, n - 1)]));
            }
            v
        }
        6 => (1..=n)
            .map(|m| cat(&[&run(1, m - 1), &vec![m as u8; n - m + 1]]))
            .collect(),
        7 => layered_small(n),
        8 => (1..=n)
            .map(|m| cat(&[&run(1, n - 1), &[m as u8]]))
            .collect(),
        9 => vec![ones(n), cat(&[&ones(n - 1), &[2]])],
        10 if n == 3 => vec![ones(3), vec![1, 2, 1]],
        10 => vec![ones(n)],
        11 => vec![ones(n), cat(&[&[1], &vec![2; n - 1]])],
        12 => vec![ones(n), id_n],
        13 => vec![cat(&[&[1], &run(1, n - 1)]), id_n],
        14 => vec![cat(&[&run(1, n - 1), &[1]]), id_n],
        15 => vec![cat(&[&run(1, n - 1), &[(n - 1) as u8]]), id_n],
        16 => vec![ones(n)],
        _ => vec![id_n],
    };
    let mut out: Vec<Rgf> = words
        .into_iter()
        .map(|w| Rgf::new(w).expect("listed words are RGFs"))
        .collect();
    out.sort();
    out.dedup();
    Ok(out)
}

/// Layered words whose layers have one or two letters.
fn layered_small(n: usize) -> Vec<Vec<u8>> {
    fn go(left: usize, next: u8, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for size in 1..=left.min(2) {
            cur.extend(std::iter::repeat_n(next, size));
            go(left - size, next + 1, cur, out);
            cur.truncate(cur.len() - size);
        }
    }
    let mut out = Vec::new();
    go(n, 1, &mut Vec::new(), &mut out);
    out
}
