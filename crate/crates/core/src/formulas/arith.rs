//! Integer helpers shared by the closed forms.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Binomial coefficient extended to every integer `a`, with `C(a, 0) = 1`
/// even for negative `a` and `C(a, b) = 0` whenever `b < 0`, `b > a >= 0`,
/// or `a < 0 < b`.
pub fn binom_conv(a: i64, b: i64) -> BigInt {
    if b == 0 {
        return BigInt::one();
    }
    if b < 0 || a < 0 || b > a {
        return BigInt::zero();
    }
    num_integer::binomial(BigInt::from(a), BigInt::from(b))
}

/// Ordinary `C(n, k)` for naturals.
pub(crate) fn binom(n: u64, k: u64) -> BigInt {
    binom_conv(n as i64, k as i64)
}

/// Fibonacci numbers indexed so that `F_0 = F_1 = 1`.
pub fn fibonacci(n: u64) -> BigInt {
    let (mut a, mut b) = (BigInt::one(), BigInt::one());
    for _ in 0..n {
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    a
}

/// `1 * 3 * 5 * … * (2k - 1)`, with the empty product 1 at `k = 0`.
pub fn odd_double_factorial(k: u64) -> BigInt {
    (1..=k).map(|i| BigInt::from(2 * i - 1)).product()
}

pub(crate) fn factorial(k: u64) -> BigInt {
    (1..=k).map(BigInt::from).product()
}

/// `2^(n-1)`, read as 1 at `n = 0`.
pub(crate) fn half_power_of_two(n: u64) -> BigInt {
    BigInt::one() << n.saturating_sub(1)
}

/// `D_k = #{d >= 1 : d | k and d + k/d + 1 <= n}`.
pub fn divisor_count(n: u64, k: u64) -> Result<u64> {
    if k == 0 {
        return Err(Error::Unsupported("D_k is defined for k >= 1 only".into()));
    }
    Ok(divisors(k).filter(|&d| d + k / d < n).count() as u64)
}

/// Number of positive divisors of `k`.
pub fn tau(k: u64) -> Result<u64> {
    if k == 0 {
        return Err(Error::Unsupported("tau is defined for k >= 1 only".into()));
    }
    Ok(divisors(k).count() as u64)
}

fn divisors(k: u64) -> impl Iterator<Item = u64> {
    (1..=k).filter(move |d| k.is_multiple_of(*d))
}
