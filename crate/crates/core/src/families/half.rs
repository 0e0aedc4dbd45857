//! Values of the families at half-integers.
//!
//! The values at `x = 1/2` have closed forms in terms of the central ratios
//! `[n-1/2 choose n] = C(2n,n)/4^n`. From there the summation equations
//! propagate to `x = 3/2, 5/2, ...`:
//!
//! ```text
//! P(m, k+1/2)  = A₂(k-1/2, m) - 2 P(m, k-1/2) - P(m, k-3/2)
//! A₁(m, k+1/2) = P(m+1, k+1/2) + 2 P(m, k+1/2) + P(m-1, k+1/2)
//! A₂(k+1/2, m) = (2m / (2k+1))² A₁(m, k+1/2)
//! ```

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::combinat::central_ratio;
use crate::report::{Checker, IdentityReport};
use crate::scalar::{int, rational};
use crate::Rational;

use super::FamilyCache;

/// `r(n) = Σ_{k=0}^{n} (C(2k,k)/4^k)²`.
pub fn r_seq(n: u32) -> Rational {
    (0..=n).map(|k| central_ratio(k).pow(2)).fold(Rational::zero(), |a, b| a + b)
}

/// Closed form of `P(m, 1/2)`: `r(n)` for `m = 2n+1`, `-r(n)` for `m = 2n+2`.
pub fn p_at_half(m: u32) -> Rational {
    match m {
        0 => Rational::zero(),
        m if m % 2 == 1 => r_seq((m - 1) / 2),
        m => -r_seq((m - 2) / 2),
    }
}

/// Closed form of `a₁(m, 1/2)`: the central ratio at `⌊m/2⌋`.
pub fn small_a1_at_half(m: u32) -> Rational {
    central_ratio(m / 2)
}

/// Closed form of `A₁(m, 1/2)`.
pub fn a1_at_half(m: u32) -> Rational {
    small_a1_at_half(m).pow(2)
}

/// Closed form of `A₂(1/2, m) = (2m)² A₁(m, 1/2)`.
pub fn a2_at_half(m: u32) -> Rational {
    int(4 * m as i64 * m as i64) * a1_at_half(m)
}

/// Closed form of `Q(m, 1/2)`: zero for even `m`, `2 (C(2n,n)/4^n)²` for `m = 2n+1`.
pub fn q_at_half(m: u32) -> Rational {
    if m.is_multiple_of(2) {
        Rational::zero()
    } else {
        int(2) * central_ratio((m - 1) / 2).pow(2)
    }
}

/// Checks every half-value closed form against the constructed polynomials
/// for `0 <= n <= n_max` and `1 <= m <= n_max`.
pub fn verify_half_values(n_max: u32, cache: &FamilyCache) -> IdentityReport {
    let half = rational(1, 2);
    let mut c = Checker::new("half-values", format!("n, m <= {n_max}"));
    for n in 0..=n_max {
        let r = r_seq(n);
        c.eq(|| format!("P({}, 1/2) = r({n})", 2 * n + 1), &cache.p_at(2 * n + 1, &half), &r);
        c.eq(|| format!("P({}, 1/2) = -r({n})", 2 * n + 2), &cache.p_at(2 * n + 2, &half), &-r.clone());
        let ratio = central_ratio(n);
        for m in [2 * n, 2 * n + 1] {
            if m == 0 {
                continue;
            }
            c.eq(|| format!("a1({m}, 1/2)"), &cache.small_a1(m).eval(&half), &ratio);
            c.eq(|| format!("A1({m}, 1/2)"), &cache.a1(m).eval(&half), &ratio.pow(2));
        }
        if n >= 1 {
            c.eq(|| format!("Q({}, 1/2) = 0", 2 * n), &cache.q_at(2 * n, &half), &Rational::zero());
        }
        c.eq(
            || format!("Q({}, 1/2)", 2 * n + 1),
            &cache.q_at(2 * n + 1, &half),
            &(int(2) * ratio.pow(2)),
        );
    }
    for m in 1..=n_max.max(1) {
        let lhs = cache.a2(m).eval(&half);
        let rhs = int(4 * m as i64 * m as i64) * cache.a1(m).eval(&half);
        c.eq(|| format!("A2(1/2, {m}) = (2m)^2 A1({m}, 1/2)"), &lhs, &rhs);
    }
    c.finish()
}

/// Values at `x = k + 1/2` for one `(m, k)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HalfRow {
    pub m: u32,
    pub k: u32,
    pub x: String,
    pub p: String,
    pub a1: String,
    pub a2: String,
    pub q: String,
}

#[derive(Clone, Debug)]
pub struct HalfCycle {
    pub rows: Vec<HalfRow>,
    /// Every cycle value compared with direct evaluation.
    pub report: IdentityReport,
}

/// Runs the half-integer recursion for `1 <= m <= m_max`, `0 <= k <= k_max`,
/// seeded from the closed forms at `±1/2`.
pub fn half_integer_cycle(m_max: u32, k_max: u32, cache: &FamilyCache) -> HalfCycle {
    let m_max = m_max as usize;
    let k_max = k_max as usize;
    let top = m_max + k_max;
    // levels[i] holds x = (2i - 1)/2, so levels[0] is x = -1/2.
    let mut p_levels: Vec<Vec<Rational>> = Vec::with_capacity(k_max + 2);
    let seed: Vec<Rational> = (0..=top + 1).map(|m| p_at_half(m as u32)).collect();
    p_levels.push(seed.clone());
    p_levels.push(seed);
    let mut a1_levels: Vec<Vec<Rational>> = vec![Vec::new()];
    let mut a2_levels: Vec<Vec<Rational>> = vec![Vec::new()];
    // Index 0 is unused for A; m starts at 1.
    a1_levels.push(
        std::iter::once(Rational::zero())
            .chain((1..=top).map(|m| a1_at_half(m as u32)))
            .collect(),
    );
    a2_levels.push(
        std::iter::once(Rational::zero())
            .chain((1..=top).map(|m| a2_at_half(m as u32)))
            .collect(),
    );

    for k in 1..=k_max {
        let i = k + 1;
        let a_prev = &a2_levels[i - 1];
        // P is available for m <= a_prev.len() - 1.
        let p_range = a_prev.len() - 1;
        let mut p_next = vec![Rational::zero(); p_range + 1];
        for m in 1..=p_range {
            p_next[m] = a_prev[m].clone()
                - int(2) * p_levels[i - 1][m].clone()
                - p_levels[i - 2][m].clone();
        }
        let x_num = 2 * k as i64 + 1;
        let a_range = p_range - 1;
        let mut a1_next = vec![Rational::zero(); a_range + 1];
        let mut a2_next = vec![Rational::zero(); a_range + 1];
        for m in 1..=a_range {
            a1_next[m] = p_next[m + 1].clone() + int(2) * p_next[m].clone() + p_next[m - 1].clone();
            let ratio = rational(2 * m as i64, x_num);
            a2_next[m] = ratio.pow(2) * a1_next[m].clone();
        }
        p_levels.push(p_next);
        a1_levels.push(a1_next);
        a2_levels.push(a2_next);
    }

    let mut c = Checker::new("half-cycle", format!("m <= {m_max}, k <= {k_max}"));
    let mut rows = Vec::new();
    for m in 1..=m_max {
        for k in 0..=k_max {
            let i = k + 1;
            let x = rational(2 * k as i64 + 1, 2);
            let p = p_levels[i][m].clone();
            let a1 = a1_levels[i][m].clone();
            let a2 = a2_levels[i][m].clone();
            let q = p.clone() + p_levels[i - 1][m].clone() + p_levels[i][m - 1].clone()
                + p_levels[i - 1][m - 1].clone();
            let m32 = m as u32;
            c.eq(|| format!("P({m}, {x})"), &p, &cache.p_at(m32, &x));
            c.eq(|| format!("A1({m}, {x})"), &a1, &cache.a1(m32).eval(&x));
            c.eq(|| format!("A2({x}, {m})"), &a2, &cache.a2(m32).eval(&x));
            c.eq(|| format!("Q({m}, {x})"), &q, &cache.q_at(m32, &x));
            rows.push(HalfRow {
                m: m32,
                k: k as u32,
                x: x.to_string(),
                p: p.to_string(),
                a1: a1.to_string(),
                a2: a2.to_string(),
                q: q.to_string(),
            });
        }
    }
    HalfCycle {
        rows,
        report: c.finish(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn r_values() {
        assert_eq!(r_seq(0), int(1));
        assert_eq!(r_seq(1), rational(5, 4));
        assert_eq!(r_seq(2), rational(89, 64));
    }

    #[test]
    fn half_value_examples() {
        let cache = FamilyCache::new();
        let half = rational(1, 2);
        assert_eq!(cache.p_at(2, &half), int(-1));
        assert_eq!(cache.p_at(3, &half), rational(5, 4));
        assert_eq!(cache.q_at(4, &half), int(0));
        assert_eq!(cache.q_at(3, &half), rational(1, 2));
        assert_eq!(cache.a2(3).eval(&half), int(36) * cache.a1(3).eval(&half));
        assert_eq!(p_at_half(3), rational(5, 4));
    }

    #[test]
    fn cycle_reproduces_direct_values() {
        let cache = FamilyCache::new();
        let cycle = half_integer_cycle(4, 3, &cache);
        assert!(cycle.report.passed(), "{}", cycle.report);
        let row = cycle.rows.iter().find(|r| r.m == 2 && r.k == 1).unwrap();
        assert_eq!(row.x, "3/2");
        assert_eq!(row.p, "7");
        let three_halves = rational(3, 2);
        for m in 1..=4u32 {
            let a2 = cache.a2(m).eval(&three_halves);
            let a1 = cache.a1(m).eval(&three_halves);
            assert_eq!(a2, rational(2 * m as i64, 3).pow(2) * a1);
        }
    }
}
