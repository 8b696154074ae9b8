//! Single-statistic polynomials and class sizes. Results are written in `q`
//! whatever the statistic.

use num_bigint::BigInt;
use num_traits::One;

use super::arith::{binom, binom_conv, divisor_count, half_power_of_two, odd_double_factorial};
use super::full::for_each_repeat_set;
use super::{push1, q_poly, ClosedForm};
use crate::error::{Error, Result};
use crate::partition::SetPartition;
use crate::patterns::PatternSet;
use crate::poly::Var;
use crate::stats::StatKind::{self, Lb, Ls, Rb, Rs};
use crate::Poly1;

/// Pattern sets with a closed form, and the statistics covered for each. The
/// family `{14/2/3, 1/2/…/t}` is recognised separately for every `t >= 2`.
pub(crate) const SUPPORTED: &[(&str, &[StatKind])] = &[
    ("1/2/3", &[Lb, Ls, Rb, Rs]),
    ("1/23", &[Lb, Ls, Rb, Rs]),
    ("13/2", &[Lb, Ls, Rb, Rs]),
    ("12/3", &[Lb, Ls, Rb, Rs]),
    ("123", &[Ls]),
    ("14/2/3", &[Lb, Rs]),
    ("14/2/3,13/2/4", &[Lb, Rs]),
];

/// `#Π_n(π)` for `π` a partition of `[3]`.
pub fn cardinality(n: usize, pi: &SetPartition) -> Result<BigInt> {
    let n = n as u64;
    Ok(match pi.to_rgf().to_string().as_str() {
        "123" | "121" => half_power_of_two(n),
        "122" | "112" => BigInt::one() + binom(n, 2),
        "111" => (0..=n / 2)
            .map(|k| binom(n, 2 * k) * odd_double_factorial(k))
            .sum(),
        _ => {
            return Err(Error::UnsupportedPatterns {
                got: pi.to_string(),
                supported: "1/2/3; 1/23; 13/2; 12/3; 123".into(),
            })
        }
    })
}

fn c2(n: i64) -> i64 {
    if n < 2 {
        0
    } else {
        n * (n - 1) / 2
    }
}

fn unsupported(p: &PatternSet, kind: StatKind) -> Error {
    Error::Unsupported(format!("no closed form for {kind} over {p}"))
}

/// The single-statistic polynomial of `kind` over `R_n(P)`.
pub fn stat_closed(p: &PatternSet, kind: StatKind, n: usize) -> Result<ClosedForm<Poly1>> {
    let m = n as i64;
    let exact = |f: Poly1| Ok(ClosedForm::exact(f));
    match (p.id().as_str(), kind) {
        ("1_2_3", Lb | Rs) => {
            let mut f = Poly1::one(Var::Q);
            for k in 0..=m - 2 {
                push1(&mut f, binom_conv(m - 1, k + 1), k);
            }
            exact(f)
        }
        ("1_2_3", Ls | Rb) => {
            let mut base = Poly1::one(Var::Q);
            push1(&mut base, BigInt::one(), 1);
            exact(base.pow(n.saturating_sub(1) as u32))
        }
        ("1_23", Lb | Rs) => {
            let mut f = Poly1::one(Var::Q);
            for j in 1..m {
                push1(&mut f, BigInt::from(m - j), j - 1);
            }
            exact(f)
        }
        ("1_23", Ls) | ("12_3", Rb) => {
            let mut f = q_poly();
            push1(&mut f, BigInt::one(), c2(m));
            for k in 1..m {
                push1(&mut f, BigInt::from(k), c2(k));
            }
            exact(f)
        }
        ("1_23", Rb) => {
            let mut f = q_poly();
            push1(&mut f, BigInt::one(), c2(m));
            for k in 1..m {
                for j in 1..=k {
                    push1(&mut f, BigInt::one(), (m - k) * (k - 1) + k - j + c2(k - 1));
                }
            }
            exact(f)
        }
        ("13_2", Lb | Rs) => exact(Poly1::constant(Var::Q, half_power_of_two(n as u64))),
        ("13_2", Ls | Rb) => exact((1..m).fold(Poly1::one(Var::Q), |acc, i| {
            let mut factor = Poly1::one(Var::Q);
            push1(&mut factor, BigInt::one(), i);
            &acc * &factor
        })),
        ("12_3", Ls) => {
            let mut f = q_poly();
            push1(&mut f, BigInt::one(), c2(m));
            for k in 1..m {
                for i in 1..=k {
                    push1(&mut f, BigInt::one(), c2(k) + (m - k) * (i - 1));
                }
            }
            exact(f)
        }
        ("12_3", Rs) => {
            let mut f = Poly1::one(Var::Q);
            for k in 0..=m - 2 {
                push1(&mut f, BigInt::from(m - k - 1), k);
            }
            exact(f)
        }
        ("12_3", Lb) => Ok(lb_12_3(n)),
        ("123", Ls) => exact(ls_123(n)),
        ("14_2_3", Lb | Rs) => exact(lb_14_2_3(n)),
        ("14_2_3+13_2_4", Lb | Rs) => {
            let mut f = Poly1::constant(Var::Q, half_power_of_two(n as u64));
            for k in 1..=m - 2 {
                let c: BigInt = (2..=m - k).map(|j| binom_conv(m - 1, k + j - 1)).sum();
                push1(&mut f, c, k);
            }
            exact(f)
        }
        (_, Lb | Rs) => match capped_dale_class(p) {
            Some(t) => Ok(lb_14_2_3_capped(n, t)),
            None => Err(unsupported(p, kind)),
        },
        _ => Err(unsupported(p, kind)),
    }
}

/// `t` when `p = {14/2/3, 1/2/…/t}` with `t >= 2`.
fn capped_dale_class(p: &PatternSet) -> Option<usize> {
    let dale: SetPartition = "14/2/3".parse().expect("valid literal");
    if p.len() != 2 || !p.contains_pattern(&dale) {
        return None;
    }
    let other = p.patterns().iter().find(|q| **q != dale)?;
    let t = other.n();
    (t >= 2 && *other == PatternSet::all_singletons(t)).then_some(t)
}

/// `sum_{D_k}` with the constant term counted directly: the words
/// `12…m m^(n-m)` for `1 <= m <= n` have `lb = 0`, so the constant is `n`.
fn lb_12_3(n: usize) -> ClosedForm<Poly1> {
    let top = (n.saturating_sub(1) * n.saturating_sub(1) / 4) as u64;
    let mut tail = q_poly();
    for k in 1..=top {
        let d = divisor_count(n as u64, k).expect("k >= 1");
        push1(&mut tail, BigInt::from(d), k as i64);
    }
    let constant = n.max(1) as i64;
    // every d >= 1 divides 0, so reading D_0 off the set formula gives n - 1
    let printed_constant = (n as i64 - 1).max(0);
    let mut value = tail.clone();
    push1(&mut value, BigInt::from(constant), 0);
    let mut printed = tail;
    push1(&mut printed, BigInt::from(printed_constant), 0);
    ClosedForm::amended(
        value,
        printed,
        "D_0 is not determined by the divisor condition; the constant term is n (1 at n = 0)",
    )
}

fn ls_123(n: usize) -> Poly1 {
    let mut f = q_poly();
    for_each_repeat_set(n, |m, l| {
        let coeff: BigInt = l
            .iter()
            .enumerate()
            .map(|(g, &x)| BigInt::from(m - x + g + 1))
            .product();
        let e = c2(m as i64) + l.iter().map(|&x| x as i64 - 1).sum::<i64>();
        push1(&mut f, coeff, e);
    });
    f
}

/// Coefficient of `q^k`, `k >= 1`, in the `14/2/3` family, with the maximum
/// value `m` limited to `max_m` when given.
fn dale_coefficient(n: i64, k: i64, max_m: Option<i64>) -> BigInt {
    let hi = max_m.map_or(n - k, |t| t.min(n - k));
    (2..=hi)
        .map(|m| {
            let inner: BigInt = (1..=k)
                .map(|j| binom_conv(k - 1, j - 1) * binom_conv(m - j, j))
                .sum();
            binom_conv(n - 1, k + m - 1) * inner
        })
        .sum()
}

fn lb_14_2_3(n: usize) -> Poly1 {
    let m = n as i64;
    let mut f = Poly1::constant(Var::Q, half_power_of_two(n as u64));
    for k in 1..=m - 2 {
        push1(&mut f, dale_coefficient(m, k, None), k);
    }
    f
}

/// Words with at most `t - 1` blocks. The constant term counts layered words
/// with at most `t - 1` layers, which is `sum_{i <= t-2} C(n-1, i)`.
fn lb_14_2_3_capped(n: usize, t: usize) -> ClosedForm<Poly1> {
    let m = n as i64;
    let cap = t as i64 - 1;
    let mut tail = q_poly();
    for k in 1..=m - 2 {
        push1(&mut tail, dale_coefficient(m, k, Some(cap)), k);
    }
    let constant: BigInt = (0..=cap - 1).map(|i| binom_conv(m - 1, i)).sum();
    let printed_constant: BigInt = (0..=cap - 1).map(|i| binom_conv(m, i)).sum();
    let mut value = tail.clone();
    push1(&mut value, constant, 0);
    let mut printed = tail;
    push1(&mut printed, printed_constant, 0);
    ClosedForm::amended(
        value,
        printed,
        "constant term sum C(n, i) should be sum C(n-1, i): it counts layered words with at most t-1 layers",
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(p: &str, k: StatKind, n: usize) -> String {
        stat_closed(&p.parse().unwrap(), k, n)
            .unwrap()
            .value
            .to_string()
    }

    #[test]
    fn worked_values() {
        assert_eq!(s("123", Ls, 3), "2*q + q^2 + q^3");
        assert_eq!(s("14/2/3", Lb, 3), "4 + q");
        assert_eq!(s("1/2/3", Lb, 3), "3 + q");
        assert_eq!(s("1/2/3", Ls, 3), "1 + 2*q + q^2");
        assert_eq!(s("13/2", Ls, 3), "1 + q + q^2 + q^3");
        assert_eq!(s("13/2", Lb, 4), "8");
        assert_eq!(s("12/3", Rs, 4), "4 + 2*q + q^2");
    }

    #[test]
    fn empty_word() {
        for (p, kinds) in SUPPORTED {
            for k in *kinds {
                assert_eq!(s(p, *k, 0), "1", "{p} {k}");
                assert_eq!(s(p, *k, 1), "1", "{p} {k}");
            }
        }
        assert_eq!(s("14/2/3,1/2/3/4", Lb, 0), "1");
    }

    #[test]
    fn lb_12_3_constant() {
        let c = stat_closed(&"12/3".parse().unwrap(), Lb, 5).unwrap();
        assert_eq!(c.value.to_string(), "5 + q + 2*q^2 + 2*q^3 + q^4");
        assert!(c.is_corrected());
        assert_eq!(c.printed.unwrap().coefficient(0), BigInt::from(4));
    }

    #[test]
    fn capped_family() {
        let p: PatternSet = "14/2/3,1/2".parse().unwrap();
        let c = stat_closed(&p, Lb, 6).unwrap();
        assert_eq!(c.value.to_string(), "1");
        assert!(!c.is_corrected());
        let p: PatternSet = "14/2/3,1/2/3/4".parse().unwrap();
        assert!(stat_closed(&p, Lb, 6).unwrap().is_corrected());
        assert!(stat_closed(&"14/2/3,1".parse().unwrap(), Lb, 3).is_err());
    }

    #[test]
    fn cardinalities() {
        let c = |n: usize, p: &str| cardinality(n, &p.parse().unwrap()).unwrap();
        assert_eq!(c(4, "1/2/3"), BigInt::from(8));
        assert_eq!(c(4, "1/23"), BigInt::from(7));
        assert_eq!(c(4, "13/2"), BigInt::from(8));
        assert_eq!(c(4, "12/3"), BigInt::from(7));
        assert_eq!(c(4, "123"), BigInt::from(10));
        assert_eq!(c(0, "1/23"), BigInt::from(1));
        assert_eq!(c(0, "123"), BigInt::from(1));
        assert!(cardinality(3, &"14/2/3".parse().unwrap()).is_err());
    }

    #[test]
    fn unsupported_combinations() {
        assert!(stat_closed(&"123".parse().unwrap(), Lb, 4).is_err());
        assert!(stat_closed(&"14/2/3".parse().unwrap(), Ls, 4).is_err());
    }
}
