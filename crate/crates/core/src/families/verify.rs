//! Identity sweeps over the families.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::combinat::{factorial, pow2};
use crate::operators::apply_s2;
use crate::report::{Checker, IdentityReport};
use crate::scalar::{as_integer, int, rational, sign, ExactSqrt};
use crate::{QPoly, Rational};

use super::weyl::{lemma_a, lemma_b, p_tilde};
use super::{
    a_value, p_recursive_family, q_from_e, q_from_p, q_leading_coeff, q_recursive_family,
    FamilyCache, NearSymmetryWitness,
};

fn deg(p: &QPoly) -> i64 {
    p.degree().map_or(-1, |d| d as i64)
}

fn p_int(cache: &FamilyCache, m: u32, n: i64) -> Rational {
    cache.p_at(m, &int(n))
}

/// Evenness, degree, near-symmetry, anchor values, integrality and the two
/// constructions of `P` for `m <= m_max`.
pub fn verify_defining_p(m_max: u32, cache: &FamilyCache) -> IdentityReport {
    let mut c = Checker::new("defining-P", format!("m, n <= {m_max}"));
    let zero = Rational::zero();
    c.eq(|| "P(0,x)".into(), &*cache.p(0), &QPoly::zero());
    let recursive = p_recursive_family(m_max);
    for m in 1..=m_max {
        let p = cache.p(m);
        c.eq(|| format!("P_recursive({m}) = P_explicit({m})"), &recursive[m as usize], &*p);
        c.holds(|| format!("P({m},x) even"), p.is_even_about(&zero), || p.to_string());
        c.eq(|| format!("deg P({m},x)"), &deg(&p), &(2 * (m as i64 - 1)));
        let f = factorial(m as usize - 1);
        let lc = Rational::new(pow2(m - 1), f).pow(2);
        c.eq(|| format!("lc P({m},x)"), p.leading_coeff().unwrap(), &lc);
        let mi = m as i64;
        c.eq(|| format!("P({m},0)"), &p.eval(&zero), &(sign::<Rational>(mi - 1) * int(mi)));
        c.eq(
            || format!("P({m},1)"),
            &p.eval(&Rational::one()),
            &(Rational::one() + sign::<Rational>(mi) * int(mi - 1)),
        );
    }
    for m in 1..=m_max {
        for n in 1..=m_max {
            let (mi, ni) = (m as i64, n as i64);
            let v = p_int(cache, m, ni);
            c.holds(|| format!("P({m},{n}) integral"), v.is_integer(), || v.to_string());
            if n >= m {
                c.holds(|| format!("P({m},{n}) >= 1"), v >= Rational::one(), || v.to_string());
                c.eq(|| format!("P({m},{n}) weyl sum"), &v, &int(p_tilde(m, n)));
            }
            let f_mn = v.clone() + sign::<Rational>(mi + ni) * int(mi);
            let f_nm = p_int(cache, n, mi) + sign::<Rational>(mi + ni) * int(ni);
            c.eq(|| format!("f({m},{n}) = f({n},{m})"), &f_mn, &f_nm);
            let w = NearSymmetryWitness::new(m, n);
            c.holds(|| format!("near symmetry ({m},{n})"), w.holds(cache), || format!("{w:?}"));
        }
    }
    c.finish()
}

/// `P(m,0) = (-1)^{m-1} m` and `P(m,1) = 1 + (-1)^m (m-1)` for `m <= m_max`.
pub fn verify_p_anchors(m_max: u32, cache: &FamilyCache) -> IdentityReport {
    let mut c = Checker::new("P-anchors", format!("m <= {m_max}"));
    for m in 1..=m_max {
        let mi = m as i64;
        c.eq(|| format!("P({m},0)"), &p_int(cache, m, 0), &(sign::<Rational>(mi - 1) * int(mi)));
        c.eq(
            || format!("P({m},1)"),
            &p_int(cache, m, 1),
            &(Rational::one() + sign::<Rational>(mi) * int(mi - 1)),
        );
    }
    c.finish()
}

/// The three constructions of `Q` agree, together with degree, leading
/// coefficient, evenness about 1/2, `Q(m,0) = 2`, table symmetry and
/// `Q(m, x+1/2) = S(P(m,x) + P(m-1,x))`.
pub fn verify_defining_q(m_max: u32, cache: &FamilyCache) -> IdentityReport {
    let mut c = Checker::new("defining-Q", format!("m, n <= {m_max}"));
    let recursive = q_recursive_family(m_max);
    let half = rational(1, 2);
    for m in 1..=m_max {
        let from_p = q_from_p(m);
        c.eq(|| format!("Q_from_P({m}) = Q_recursive({m})"), &from_p, &recursive[m as usize]);
        c.eq(|| format!("Q_from_P({m}) = Q_from_E({m})"), &from_p, &q_from_e(m));
        c.eq(|| format!("cached Q({m})"), &*cache.q(m), &from_p);
        c.eq(|| format!("deg Q({m},x)"), &deg(&from_p), &(2 * (m as i64 - 1)));
        c.eq(|| format!("lc Q({m},x)"), from_p.leading_coeff().unwrap(), &q_leading_coeff(m));
        c.holds(|| format!("Q({m},x) even about 1/2"), from_p.is_even_about(&half), || from_p.to_string());
        c.eq(|| format!("Q({m},-x) = Q({m},x+1)"), &from_p.compose(&-QPoly::x()), &from_p.shift(&Rational::one()));
        c.eq(|| format!("Q({m},0)"), &from_p.eval(&Rational::zero()), &int(2));
        let s_form = crate::operators::apply_s(&(&*cache.p(m) + &*cache.p(m - 1)));
        c.eq(|| format!("Q({m},x+1/2) = S(P({m},x)+P({},x))", m - 1), &from_p.shift(&half), &s_form);
    }
    for m in 1..=m_max {
        for n in 1..=m_max {
            let v = cache.q_at(m, &int(n));
            c.holds(|| format!("Q({m},{n}) integral"), v.is_integer(), || v.to_string());
            c.eq(|| format!("Q({m},{n}) = Q({n},{m})"), &v, &cache.q_at(n, &int(m)));
        }
    }
    c.finish()
}

/// `P(m+1,x) + 2P(m,x) + P(m-1,x) = A₁(m,x)` and `S² P(m,x) = A₂(x,m)` for
/// `m <= m_max`, plus `A₁(m,n) = A(m,n) = A₂(m,n)` on the integer grid.
pub fn verify_thm_summation(m_max: u32, cache: &FamilyCache) -> IdentityReport {
    let mut c = Checker::new("thm-summation", format!("m <= {m_max}, grid {m_max}x{m_max}"));
    for m in 1..=m_max {
        let lhs = &(&*cache.p(m + 1) + &cache.p(m).scale(&int(2))) + &*cache.p(m - 1);
        c.eq(|| format!("S1^2 P({m},x) = A1({m},x)"), &lhs, &*cache.a1(m));
        c.eq(|| format!("S2^2 P({m},x) = A2(x,{m})"), &apply_s2(&cache.p(m)), &*cache.a2(m));
    }
    for m in 1..=m_max {
        for n in 1..=m_max {
            let a = int(a_value(m, n));
            c.eq(|| format!("A1({m},{n}) = A({m},{n})"), &cache.a1(m).eval(&int(n)), &a);
            c.eq(|| format!("A2({m},{n}) = A({m},{n})"), &cache.a2(n).eval(&int(m)), &a);
            let root = a.exact_sqrt();
            c.holds(|| format!("A({m},{n}) square"), root.is_some(), || a.to_string());
        }
    }
    c.finish()
}

/// `m² A₁(m,x) = x² A₂(x,m)` and the grid symmetry `m² A(m,n) = n² A(n,m)`.
pub fn verify_a1_a2_relation(m_max: u32, cache: &FamilyCache) -> IdentityReport {
    let mut c = Checker::new("a1a2-relation", format!("m <= {m_max}"));
    let x2 = QPoly::monomial(Rational::one(), 2);
    for m in 1..=m_max {
        let lhs = cache.a1(m).scale(&int(m as i64 * m as i64));
        c.eq(|| format!("m^2 A1({m},x) = x^2 A2(x,{m})"), &lhs, &(&x2 * &*cache.a2(m)));
    }
    for m in 1..=m_max {
        for n in 1..=m_max {
            let lhs = BigInt::from(m * m) * a_value(m, n);
            let rhs = BigInt::from(n * n) * a_value(n, m);
            c.eq(|| format!("m^2 A({m},{n}) = n^2 A({n},{m})"), &lhs, &rhs);
        }
    }
    c.finish()
}

/// Shape of `A₂(x,n)` for `n <= n_max`: evenness, degree, leading coefficient
/// `2^{2n}/(n-1)!²`, `A₂(0,n) = (1+(-1)^{n-1})²`, `A₂(1,n) = 4n²`.
pub fn verify_a2_properties(n_max: u32, cache: &FamilyCache) -> IdentityReport {
    let mut c = Checker::new("A2-properties", format!("n <= {n_max}"));
    for n in 1..=n_max {
        let a2 = cache.a2(n);
        c.holds(|| format!("A2(x,{n}) even"), a2.is_even_about(&Rational::zero()), || a2.to_string());
        c.eq(|| format!("deg A2(x,{n})"), &deg(&a2), &(2 * (n as i64 - 1)));
        let f = factorial(n as usize - 1);
        let lc = Rational::new(pow2(2 * n), &f * &f);
        c.eq(|| format!("lc A2(x,{n})"), a2.leading_coeff().unwrap(), &lc);
        let at0 = (Rational::one() + sign::<Rational>(n as i64 - 1)).pow(2);
        c.eq(|| format!("A2(0,{n})"), &a2.eval(&Rational::zero()), &at0);
        c.eq(|| format!("A2(1,{n})"), &a2.eval(&Rational::one()), &int(4 * n as i64 * n as i64));
    }
    c.finish()
}

/// `a(ν,μ,m,n) = b(ν,μ,m,n)` for `1 <= m <= m_max`, `m < n <= n_max`,
/// `0 <= ν, μ <= m`.
pub fn verify_lemma_summation(m_max: u32, n_max: u32) -> IdentityReport {
    let mut c = Checker::new("lemma-summation", format!("m <= {m_max}, m < n <= {n_max}"));
    for m in 1..=m_max as i64 {
        for n in (m + 1)..=n_max as i64 {
            for nu in 0..=m {
                for mu in 0..=m {
                    c.eq(
                        || format!("(nu,mu,m,n) = ({nu},{mu},{m},{n})"),
                        &lemma_a(nu, mu, m, n),
                        &lemma_b(nu, mu, m, n),
                    );
                }
            }
        }
    }
    c.finish()
}

/// `P̃(m+1,n) + 2P̃(m,n) + P̃(m-1,n) + δ_{m,n} = A(m,n)`, together with the
/// symmetry of `P̃` and its relation to `P`.
pub fn verify_ptilde_summation(m_max: u32, n_max: u32, cache: &FamilyCache) -> IdentityReport {
    let mut c = Checker::new("ptilde", format!("m <= {m_max}, n <= {n_max}"));
    for m in 1..=m_max {
        for n in 1..=n_max {
            let delta = if m == n { BigInt::one() } else { BigInt::zero() };
            let lhs = p_tilde(m + 1, n) + BigInt::from(2) * p_tilde(m, n) + p_tilde(m - 1, n) + delta;
            c.eq(|| format!("S1^2 Ptilde({m},{n}) + delta"), &lhs, &a_value(m, n));
            let pt = p_tilde(m, n);
            c.eq(|| format!("Ptilde({m},{n}) = Ptilde({n},{m})"), &pt, &p_tilde(n, m));
            let p = as_integer(&cache.p_at(m, &int(n))).unwrap_or_default();
            let expected = if n >= m {
                p
            } else {
                p + sign::<BigInt>((m + n) as i64) * BigInt::from(m as i64 - n as i64)
            };
            c.eq(|| format!("Ptilde({m},{n}) vs P({m},{n})"), &pt, &expected);
        }
    }
    c.finish()
}

/// Per-`m` finding on whether `2·Q(m,x)` is a square.
#[derive(Clone, Debug, PartialEq)]
pub struct SquareFinding {
    pub m: u32,
    pub root: Option<QPoly>,
}

pub fn square_findings(m_max: u32, cache: &FamilyCache) -> Vec<SquareFinding> {
    (1..=m_max)
        .map(|m| SquareFinding {
            m,
            root: cache.q(m).scale(&int(2)).sqrt().ok(),
        })
        .collect()
}

/// Reports whether `2·Q(m,x)` is a square for each `m <= m_max`; a failure is
/// a finding against the conjecture.
pub fn conjecture_2q_square(m_max: u32, cache: &FamilyCache) -> IdentityReport {
    let mut c = Checker::new("conjecture-2Q-square", format!("m <= {m_max}"));
    for f in square_findings(m_max, cache) {
        c.holds(|| format!("2Q({},x)", f.m), f.root.is_some(), || "not a square".into());
    }
    c.finish()
}
