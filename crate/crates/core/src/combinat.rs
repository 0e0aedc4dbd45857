//! Factorials and binomial coefficients over arbitrary-precision integers.

use std::sync::{LazyLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::scalar::int;
use crate::Rational;

static FACTORIALS: LazyLock<RwLock<Vec<BigInt>>> =
    LazyLock::new(|| RwLock::new(vec![BigInt::one()]));

/// `n!`, memoized.
pub fn factorial(n: usize) -> BigInt {
    if let Some(f) = FACTORIALS.read().unwrap().get(n) {
        return f.clone();
    }
    let mut table = FACTORIALS.write().unwrap();
    while table.len() <= n {
        let k = table.len();
        let next = &table[k - 1] * BigInt::from(k);
        table.push(next);
    }
    table[n].clone()
}

/// Binomial coefficient with the polynomial extension in the upper index:
/// `top (top-1) ... (top-k+1) / k!`. Zero for `0 <= top < k`, and
/// `(-1)^k binom(k-top-1, k)` for negative `top`.
pub fn binom(top: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    let mut num = BigInt::one();
    for i in 0..k {
        let f = top - i;
        if f == 0 {
            return BigInt::zero();
        }
        num *= f;
    }
    num / factorial(k as usize)
}

pub fn binom_q(top: i64, k: i64) -> Rational {
    int(binom(top, k))
}

/// `2^k` as an integer.
pub fn pow2(k: u32) -> BigInt {
    BigInt::one() << k
}

/// `binom(2n, n) / 4^n`, the value of `[n - 1/2 choose n]`.
pub fn central_ratio(n: u32) -> Rational {
    Rational::new(binom(2 * n as i64, n as i64), pow2(2 * n))
}
