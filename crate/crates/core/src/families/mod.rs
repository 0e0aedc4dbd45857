//! The polynomial families `P(m,x)`, `Q(m,x)`, `A₁(m,x)`, `A₂(x,n)`, `a₁(m,x)`
//! and the integer tables built from them.
//!
//! `P` has two constructions that are checked against each other:
//! [`p_explicit`] sums products of the shifted factorials [`t_poly`], and
//! [`p_recursive`] interpolates the values forced by evenness and the
//! near-symmetry of the integer table. `Q` has three: [`q_from_p`],
//! [`q_recursive`] and [`q_from_e`].

mod cache;
pub mod half;
pub mod verify;
pub mod weyl;

use num_bigint::BigInt;
use num_traits::One;

pub use cache::{Family, FamilyCache};

use crate::combinat::{binom, binom_q, factorial, pow2};
use crate::error::{Error, Result};
use crate::operators::euler_inverse;
use crate::poly::binom_poly;
use crate::scalar::{as_integer, int, rational, sign};
use crate::{QPoly, Rational, ZPoly};

/// `a(k,l) = Σ_{ν=0}^{k} C(l,ν) C(l-1+k-ν, l-1)`.
pub fn a_sum(k: u32, l: u32) -> BigInt {
    assert!(l >= 1, "a(k, l) needs l >= 1");
    let (k, l) = (k as i64, l as i64);
    (0..=k).map(|nu| binom(l, nu) * binom(l - 1 + k - nu, l - 1)).sum()
}

/// `A(k,l) = a(k,l)²`.
pub fn a_value(k: u32, l: u32) -> BigInt {
    let a = a_sum(k, l);
    &a * &a
}

/// Monic integer form of `t(ν,μ,m;x)`: the product of `x + j` for
/// `j = -μ..=ν` with `j = ν-μ` left out.
fn t_zpoly(nu: i64, mu: i64) -> ZPoly {
    let shifts: Vec<BigInt> = (-mu..=nu)
        .filter(|&j| j != nu - mu)
        .map(BigInt::from)
        .collect();
    ZPoly::from_linear_factors(shifts.iter())
}

/// `t(ν,μ,m;x) = Π_{k=1}^{μ} (x+ν-μ+k) · Π_{l=1}^{ν} (x-1-μ+l)` for
/// `0 <= ν, μ <= m-1`.
pub fn t_poly(nu: i64, mu: i64, m: i64) -> Result<QPoly> {
    if m < 1 || !(0..m).contains(&nu) || !(0..m).contains(&mu) {
        return Err(Error::IndexOutOfRange(format!("t({nu},{mu},{m})")));
    }
    Ok(to_rational(&t_zpoly(nu, mu)))
}

pub fn to_rational(p: &ZPoly) -> QPoly {
    p.map(|c| int(c.clone()))
}

/// `P(m,x) = Σ_{ν,μ<m} t(ν,μ,m;x) t(μ*,ν*,m;x) / (ν! ν*! μ! μ*!)` with
/// `ν* = m-1-ν`, and `P(0,x) = 0`.
pub fn p_explicit(m: u32) -> QPoly {
    if m == 0 {
        return QPoly::zero();
    }
    let top = m as i64 - 1;
    let ts: Vec<Vec<ZPoly>> = (0..=top)
        .map(|nu| (0..=top).map(|mu| t_zpoly(nu, mu)).collect())
        .collect();
    // 1/(ν!ν*!μ!μ*!) = C(m-1,ν) C(m-1,μ) / (m-1)!²
    let mut acc = ZPoly::zero();
    for nu in 0..=top {
        for mu in 0..=top {
            let w = binom(top, nu) * binom(top, mu);
            let term = &ts[nu as usize][mu as usize] * &ts[(top - mu) as usize][(top - nu) as usize];
            acc = acc + term.scale(&w);
        }
    }
    let f = factorial(top as usize);
    let denom = int(&f * &f);
    to_rational(&acc).scale(&(Rational::one() / denom))
}

/// `P(0..=m_max, x)` built by the interpolation recursion.
pub fn p_recursive_family(m_max: u32) -> Vec<QPoly> {
    let mut fam = vec![QPoly::zero()];
    for m in 0..m_max as i64 {
        // P(m+1, j) = P(j, m+1) + (-1)^{m+j} (m+1-j), mirrored to -j.
        let mut pts = Vec::with_capacity(2 * m as usize + 1);
        for j in 0..=m {
            let v = fam[j as usize].eval(&int(m + 1)) + sign::<Rational>(m + j) * int(m + 1 - j);
            if j > 0 {
                pts.push((int(-j), v.clone()));
            }
            pts.push((int(j), v));
        }
        fam.push(QPoly::interpolate(&pts).expect("nodes are distinct"));
    }
    fam
}

pub fn p_recursive(m: u32) -> QPoly {
    p_recursive_family(m).pop().unwrap()
}

fn integer_value(p: &QPoly, at: &Rational, label: impl FnOnce() -> String) -> Result<BigInt> {
    let v = p.eval(at);
    as_integer(&v).ok_or_else(|| Error::NonIntegerValue {
        at: label(),
        value: v.to_string(),
    })
}

/// The integer `P(m,n)`.
pub fn p_value(m: u32, n: u32) -> Result<BigInt> {
    if m == 0 || n == 0 {
        return Err(Error::IndexOutOfRange(format!("P({m},{n}) needs m, n >= 1")));
    }
    integer_value(&p_explicit(m), &int(n), || format!("P({m},{n})"))
}

/// `a₁(m,x) = Σ_{ν=0}^{m} [x-1+ν choose ν] [x choose m-ν]`.
pub fn a1_sum_poly(m: u32) -> QPoly {
    (0..=m as usize)
        .map(|nu| &binom_poly(nu).shift(&int(nu as i64 - 1)) * &binom_poly(m as usize - nu))
        .sum()
}

/// `A₁(m,x) = a₁(m,x)²`.
pub fn a1_poly(m: u32) -> QPoly {
    a1_sum_poly(m).pow(2)
}

/// `Σ_{ν=0}^{n} C(n,ν) [x-ν+n-1 choose n-1]`, the square root of `A₂(x,n)`.
pub fn a2_sum_poly(n: u32) -> QPoly {
    if n == 0 {
        return QPoly::zero();
    }
    let base = binom_poly(n as usize - 1);
    let n = n as i64;
    (0..=n)
        .map(|nu| base.shift(&int(n - 1 - nu)).scale(&binom_q(n, nu)))
        .sum()
}

/// `A₂(x,n)`; `A₂(x,0)` is taken as `0`, the image of `P(0,x) = 0`.
pub fn a2_poly(n: u32) -> QPoly {
    a2_sum_poly(n).pow(2)
}

/// `Q(m,x) = P(m,x) + P(m,x-1) + P(m-1,x) + P(m-1,x-1)`.
pub fn q_from_p(m: u32) -> QPoly {
    assert!(m >= 1, "Q(m, x) needs m >= 1");
    let s = p_explicit(m) + p_explicit(m - 1);
    s.shift(&int(-1)) + s
}

/// `Q(m,x) = Ẽ(A₂(x,m) + A₂(x,m-1))`.
pub fn q_from_e(m: u32) -> QPoly {
    assert!(m >= 1, "Q(m, x) needs m >= 1");
    euler_inverse(&(a2_poly(m) + a2_poly(m - 1)))
}

/// Leading coefficient `2^{2m-1} / (m-1)!²` shared by every `Q(m,x)`.
pub fn q_leading_coeff(m: u32) -> Rational {
    let f = factorial(m as usize - 1);
    Rational::new(pow2(2 * m - 1), &f * &f)
}

/// `Q(1..=m_max, x)` built from degree, leading coefficient, evenness about
/// `1/2` and symmetry of the integer table. Index 0 holds the zero polynomial.
pub fn q_recursive_family(m_max: u32) -> Vec<QPoly> {
    let mut fam = vec![QPoly::zero()];
    let y = QPoly::linear(rational(-1, 2)).pow(2);
    for m in 1..=m_max {
        let lc = q_leading_coeff(m);
        // Q(m,x) = lc·y^{m-1} + L(y), y = (x-1/2)², deg L <= m-2,
        // with L fixed by Q(m,k) = Q(k,m) for k = 1..m-1.
        let pts: Vec<(Rational, Rational)> = (1..m)
            .map(|k| {
                let yk = (int(k) - rational(1, 2)).pow(2);
                let target = fam[k as usize].eval(&int(m)) - lc.clone() * yk.clone().pow(m as i32 - 1);
                (yk, target)
            })
            .collect();
        let lower = if pts.is_empty() {
            QPoly::zero()
        } else {
            QPoly::interpolate(&pts).expect("nodes are distinct")
        };
        let in_y = lower + QPoly::monomial(lc, m as usize - 1);
        fam.push(in_y.compose(&y));
    }
    fam
}

pub fn q_recursive(m: u32) -> QPoly {
    assert!(m >= 1, "Q(m, x) needs m >= 1");
    q_recursive_family(m).pop().unwrap()
}

/// The integer `Q(m,n)`.
pub fn q_value(m: u32, n: u32) -> Result<BigInt> {
    if m == 0 || n == 0 {
        return Err(Error::IndexOutOfRange(format!("Q({m},{n}) needs m, n >= 1")));
    }
    integer_value(&q_from_p(m), &int(n), || format!("Q({m},{n})"))
}

/// `P(m,n) = P(n,m) + (-1)^m (c₁ m + c₀)` with `c₁ = (-1)^{n-1}` and
/// `c₀ = (-1)^n n`.
#[derive(Clone, Debug, PartialEq)]
pub struct NearSymmetryWitness {
    pub m: u32,
    pub n: u32,
    pub c0: Rational,
    pub c1: Rational,
}

impl NearSymmetryWitness {
    pub fn new(m: u32, n: u32) -> Self {
        NearSymmetryWitness {
            m,
            n,
            c0: sign::<Rational>(n as i64) * int(n),
            c1: sign(n as i64 - 1),
        }
    }

    /// `(-1)^m (c₁ m + c₀)`.
    pub fn correction(&self) -> Rational {
        sign::<Rational>(self.m as i64) * (self.c1.clone() * int(self.m) + self.c0.clone())
    }

    pub fn holds(&self, cache: &FamilyCache) -> bool {
        let lhs = cache.p_at(self.m, &int(self.n));
        let rhs = cache.p_at(self.n, &int(self.m)) + self.correction();
        lhs == rhs
    }
}
