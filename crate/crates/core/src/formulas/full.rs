//! Four-variable generating functions `F_n(P)`.

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::One;

use super::arith::binom_conv;
use super::{push4, ClosedForm};
use crate::error::{Error, Result};
use crate::patterns::PatternSet;
use crate::poly::distribution;
use crate::rgf::enumerate_rgfs;
use crate::Poly4;

pub(crate) const PAIRS: [(&str, &str); 9] = [
    ("1/2/3", "1/23"),
    ("1/2/3", "13/2"),
    ("1/2/3", "12/3"),
    ("1/23", "13/2"),
    ("1/23", "12/3"),
    ("1/23", "123"),
    ("13/2", "12/3"),
    ("13/2", "123"),
    ("12/3", "123"),
];

const SUPPORTED: &str = "1/2/3; 1/23; 13/2; 12/3; and the pairs 1/2/3,1/23; 1/2/3,13/2; \
    1/2/3,12/3; 1/23,13/2; 1/23,12/3; 1/23,123; 13/2,12/3; 13/2,123; 12/3,123";

fn one() -> BigInt {
    BigInt::one()
}

fn c2(n: i64) -> i64 {
    if n < 2 {
        0
    } else {
        n * (n - 1) / 2
    }
}

/// `F_n(P)` for a single pattern of `[3]` other than `123`, or for one of the
/// nine pairs. Pairs at `n < 3` give the distribution over all of `R_n`.
pub fn f_closed(p: &PatternSet, n: usize) -> Result<ClosedForm<Poly4>> {
    let id = p.id();
    let n_ = n as i64;
    if p.len() == 2 && n < 3 && is_pair(&id) {
        return Ok(ClosedForm::exact(distribution(enumerate_rgfs(n)?)));
    }
    let value = match id.as_str() {
        "1_2_3" => f_1_2_3(n_),
        "1_23" => f_1_23(n_),
        "13_2" => f_13_2(n_),
        "12_3" => f_12_3(n_),
        "1_2_3+1_23" => {
            let mut f = Poly4::one();
            push4(&mut f, one(), [0, 1, n_ - 1, 0]);
            push4(&mut f, one(), [1, 1, n_ - 2, 1]);
            f
        }
        "1_2_3+13_2" => {
            let mut f = Poly4::one();
            for i in 1..n_ {
                push4(&mut f, one(), [0, i, n_ - i, 0]);
            }
            f
        }
        "1_2_3+12_3" => {
            let printed = f_1_2_3_and_12_3(n_, [0, 1, n_ - 1, 0]);
            let value = f_1_2_3_and_12_3(n_, [0, n_ - 1, 1, 0]);
            return Ok(ClosedForm::amended(
                value,
                printed,
                "middle term rs^(n-1) should be r^(n-1)s: the word 12^(n-1) has ls = n-1 and rb = 1",
            ));
        }
        "1_23+13_2" => {
            let mut f = Poly4::one();
            for i in 1..n_ {
                push4(&mut f, one(), [0, c2(n_ - i + 1), c2(n_) - c2(i), 0]);
            }
            f
        }
        "1_23+12_3" => {
            let mut f = Poly4::one();
            push4(&mut f, one(), [n_ - 2, c2(n_ - 1), c2(n_ - 1), n_ - 2]);
            push4(&mut f, one(), [0, c2(n_), c2(n_), 0]);
            f
        }
        "1_23+123" => f_with_123_tail(n_, false),
        "13_2+12_3" => {
            let mut f = Poly4::one();
            for i in 1..n_ {
                push4(&mut f, one(), [0, c2(n_) - c2(i), c2(n_ - i + 1), 0]);
            }
            f
        }
        "13_2+123" => {
            let mut f = Poly4::zero();
            for_each_repeat_set(n, |m, l| {
                let m = m as i64;
                let ls: i64 = l.iter().map(|&x| x as i64 - 1).sum();
                let rb: i64 = l.iter().map(|&x| m - x as i64).sum();
                push4(&mut f, one(), [0, c2(m) + ls, c2(m) + rb, 0]);
            });
            f
        }
        "12_3+123" => f_with_123_tail(n_, true),
        _ => {
            return Err(Error::UnsupportedPatterns {
                got: p.to_string(),
                supported: SUPPORTED.into(),
            })
        }
    };
    Ok(ClosedForm::exact(value))
}

fn is_pair(id: &str) -> bool {
    PAIRS.iter().any(|(a, b)| {
        let ab: PatternSet = format!("{a},{b}").parse().expect("valid literal");
        ab.id() == id
    })
}

fn f_1_2_3(n: i64) -> Poly4 {
    let mut f = Poly4::one();
    for l in 1..n {
        push4(&mut f, one(), [0, n - l, l, 0]);
    }
    for l in 2..n {
        for k in 0..n - l {
            for i in 1..l {
                for j in 1..=l - i {
                    let c = binom_conv(n - i - j - k - 2, l - i - j);
                    let delta = if k == 0 { j } else { 0 };
                    push4(&mut f, c, [l - i, n - l, l - delta, n - l - k]);
                }
            }
        }
    }
    f
}

fn f_1_23(n: i64) -> Poly4 {
    let mut f = Poly4::zero();
    push4(&mut f, one(), [0, c2(n), c2(n), 0]);
    for m in 1..n {
        for j in 1..=m {
            let rb = (n - m) * (m - 1) + m - j + c2(m - 1);
            push4(&mut f, one(), [j - 1, c2(m), rb, j - 1]);
        }
    }
    f
}

fn f_13_2(n: i64) -> Poly4 {
    (1..n)
        .map(|i| {
            let mut factor = Poly4::one();
            push4(&mut factor, one(), [0, n - i, i, 0]);
            factor
        })
        .fold(Poly4::one(), |acc, x| &acc * &x)
}

fn f_12_3(n: i64) -> Poly4 {
    let mut f = Poly4::zero();
    push4(&mut f, one(), [0, c2(n), c2(n), 0]);
    for m in 1..n {
        for i in 1..=m {
            push4(
                &mut f,
                one(),
                [(n - m) * (m - i), c2(m) + (n - m) * (i - 1), c2(m), m - i],
            );
        }
    }
    f
}

fn f_1_2_3_and_12_3(n: i64, middle: [i64; 4]) -> Poly4 {
    let mut f = Poly4::one();
    push4(&mut f, one(), middle);
    push4(&mut f, one(), [n - 2, 1, 1, 1]);
    f
}

/// `(rs)^C(n,2) + x^C(n-1,2) sum_i (qt)^i y^(C(n,2)-i-1)` with `(x, y) = (r, s)`,
/// or `(s, r)` when `swapped`.
fn f_with_123_tail(n: i64, swapped: bool) -> Poly4 {
    let mut f = Poly4::zero();
    push4(&mut f, one(), [0, c2(n), c2(n), 0]);
    for i in 0..=n - 2 {
        let (x, y) = (c2(n - 1), c2(n) - i - 1);
        let (r, s) = if swapped { (y, x) } else { (x, y) };
        push4(&mut f, one(), [i, r, s, i]);
    }
    f
}

/// Calls `visit(m, L)` for `ceil(n/2) <= m <= n` and every `(n-m)`-subset `L`
/// of `[m]`, with `L` listed in decreasing order.
pub(crate) fn for_each_repeat_set(n: usize, mut visit: impl FnMut(usize, &[usize])) {
    for m in n.div_ceil(2)..=n {
        for mut l in (1..=m).combinations(n - m) {
            l.reverse();
            visit(m, &l);
        }
    }
}
