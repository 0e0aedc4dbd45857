//! Integer dimension factors `D_n(α+1, β)` and the sums built from them.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::combinat::binom;

/// `D_n(α+1, β) = n/(α+β+1) · C(n+α, α) · C(n-1, β)` when `α >= 0` and
/// `0 <= β <= n-1`, zero otherwise. Arguments are `n`, `α+1`, `β`.
///
/// Panics if the quotient is not an integer, which would contradict the
/// dimension formula.
pub fn weyl_dimension(n: i64, alpha_plus_1: i64, beta: i64) -> BigInt {
    let alpha = alpha_plus_1 - 1;
    if alpha < 0 || beta < 0 || beta > n - 1 {
        return BigInt::zero();
    }
    let num = BigInt::from(n) * binom(n + alpha, alpha) * binom(n - 1, beta);
    let (q, r) = num.div_rem(&BigInt::from(alpha + beta + 1));
    assert!(r.is_zero(), "D_{n}({alpha_plus_1},{beta}) is not integral");
    q
}

fn d(n: i64, a: i64, b: i64) -> BigInt {
    weyl_dimension(n, a, b)
}

/// One summand of the Weyl-dimension form of `P(m,n)`.
fn p_summand(m: i64, n: i64, nu: i64, mu: i64) -> BigInt {
    d(n, nu + 1, n - 1 - mu) * d(n, m - mu, n - m + nu)
}

/// `P̃(m,n) = Σ_{ν,μ=0}^{m-1} D_n(ν+1, n-1-μ) · D_n(m-μ, n-m+ν)`.
///
/// For `n >= m` this is `P(m,n)`. For `n < m` the vanishing of `D_n` outside
/// its range drops the correction term, leaving `P(n,m)`. Zero when `m = 0`.
pub fn p_tilde(m: u32, n: u32) -> BigInt {
    let (m, n) = (m as i64, n as i64);
    let mut acc = BigInt::zero();
    for nu in 0..m {
        for mu in 0..m {
            acc += p_summand(m, n, nu, mu);
        }
    }
    acc
}

/// The same sum cut at `min(m,n) - 1`; it agrees with [`p_tilde`] only for
/// `n >= m`.
pub fn p_tilde_truncated(m: u32, n: u32) -> BigInt {
    let (m, n) = (m as i64, n as i64);
    let top = m.min(n) - 1;
    let mut acc = BigInt::zero();
    for nu in 0..=top {
        for mu in 0..=top {
            acc += p_summand(m, n, nu, mu);
        }
    }
    acc
}

/// `a(ν,μ,m,n) = C(n-1+ν,ν) C(n,m-ν) C(n-1+m-μ,m-μ) C(n,μ)`.
pub fn lemma_a(nu: i64, mu: i64, m: i64, n: i64) -> BigInt {
    binom(n - 1 + nu, nu) * binom(n, m - nu) * binom(n - 1 + m - mu, m - mu) * binom(n, mu)
}

/// The four-term `D_n` expansion matched against [`lemma_a`] for `n > m`.
pub fn lemma_b(nu: i64, mu: i64, m: i64, n: i64) -> BigInt {
    let not_top = nu != m && mu != m;
    let not_bottom = nu != 0 && mu != 0;
    let mut acc = d(n, nu + 1, n - 1 - mu) * d(n, m - mu + 1, n - 1 - m + nu);
    if not_top {
        acc += d(n, nu + 1, n - 1 - mu) * d(n, m - mu, n - m + nu);
    }
    if not_bottom {
        acc += d(n, nu, n - mu) * d(n, m - mu + 1, n - 1 - m + nu);
    }
    if not_top && not_bottom {
        acc += d(n, nu, n - mu) * d(n, m - mu, n - m + nu);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimension_examples() {
        assert_eq!(weyl_dimension(2, 1, 0), BigInt::from(2));
        assert_eq!(weyl_dimension(3, 2, 1), BigInt::from(8));
        assert_eq!(weyl_dimension(4, 1, 4), BigInt::zero());
        assert_eq!(weyl_dimension(4, 0, 1), BigInt::zero());
        assert_eq!(weyl_dimension(4, 2, -1), BigInt::zero());
    }

    #[test]
    fn dimensions_are_integral_on_a_grid() {
        for n in 1..25 {
            for a in 0..25 {
                for b in -1..=n {
                    let _ = weyl_dimension(n, a, b);
                }
            }
        }
    }

    #[test]
    fn p_tilde_examples() {
        assert_eq!(p_tilde(2, 3), BigInt::from(34));
        assert_eq!(p_tilde(3, 2), BigInt::from(34));
        assert_eq!(p_tilde(1, 1), BigInt::from(1));
        assert_eq!(p_tilde(0, 4), BigInt::zero());
        assert_eq!(p_tilde_truncated(2, 3), BigInt::from(34));
        assert_eq!(p_tilde_truncated(3, 2), BigInt::from(17));
    }

    #[test]
    fn lemma_cells() {
        for (nu, mu) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
            assert_eq!(lemma_a(nu, mu, 1, 2), lemma_b(nu, mu, 1, 2));
        }
        assert_eq!(lemma_a(1, 1, 3, 5), lemma_b(1, 1, 3, 5));
        assert_eq!(lemma_a(0, 3, 3, 5), lemma_b(0, 3, 3, 5));
    }
}
