//! Summation operators and their inverse on polynomials.
//!
//! * `S f(x)  = f(x + 1/2) + f(x - 1/2)`
//! * `S² f(x) = f(x + 1) + 2 f(x) + f(x - 1)`
//! * `S̃ f(x)  = f(x + 1) + f(x)`, and `Ẽ` is the inverse of `S̃`.
//!
//! `Ẽ` has two independent implementations: [`euler_inverse`] expands in the
//! monomial basis against the Euler polynomials, and [`euler_inverse_interp`]
//! solves the discrete equation on the nodes `0..=deg f` and repairs the
//! interpolant with a multiple of the alternating polynomial `B_n`.

use std::sync::{LazyLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::combinat::{binom, binom_q, factorial, pow2};
use crate::error::{Error, Result};
use crate::report::{Checker, IdentityReport};
use crate::scalar::{int, rational, sign, Field};
use crate::{Poly, QPoly, Rational};

pub fn apply_s<T: Field>(p: &Poly<T>) -> Poly<T> {
    let half = T::one() / T::from_int(2);
    p.shift(&half) + p.shift(&-half)
}

pub fn apply_s2<T: Field>(p: &Poly<T>) -> Poly<T> {
    let two = T::from_int(2);
    p.shift(&T::one()) + p.scale(&two) + p.shift(&-T::one())
}

pub fn apply_stilde<T: Field>(p: &Poly<T>) -> Poly<T> {
    p.shift(&T::one()) + p
}

pub const DEFAULT_EULER_CAP: usize = 256;

/// Memo of the Euler polynomials `e_n = Ẽ(x^n)` for `n < cap`.
///
/// Safe to share across threads; entries are deterministic so concurrent
/// fills are harmless.
#[derive(Debug)]
pub struct EulerTable {
    cap: usize,
    polys: RwLock<Vec<QPoly>>,
}

impl EulerTable {
    pub fn new(cap: usize) -> Self {
        EulerTable {
            cap,
            polys: RwLock::new(Vec::new()),
        }
    }

    pub fn get(&self, n: usize) -> QPoly {
        if let Some(p) = self.polys.read().unwrap().get(n) {
            return p.clone();
        }
        if n < self.cap {
            let mut table = self.polys.write().unwrap();
            extend_euler(&mut table, n);
            return table[n].clone();
        }
        let mut local = self.polys.read().unwrap().clone();
        extend_euler(&mut local, n);
        local.swap_remove(n)
    }
}

impl Default for EulerTable {
    fn default() -> Self {
        Self::new(DEFAULT_EULER_CAP)
    }
}

/// `Ẽ(x^0) = 1/2`, `Ẽ(x^n) = x^n/2 - 1/2 Σ_{j<n} C(n,j) Ẽ(x^j)`.
fn extend_euler(table: &mut Vec<QPoly>, n: usize) {
    let half = rational(1, 2);
    while table.len() <= n {
        let k = table.len();
        let mut acc = QPoly::monomial(half.clone(), k);
        for (j, e) in table.iter().enumerate() {
            acc = acc - e.scale(&(binom_q(k as i64, j as i64) * half.clone()));
        }
        table.push(acc);
    }
}

static EULER: LazyLock<EulerTable> = LazyLock::new(EulerTable::default);

/// The Euler polynomial `e_n`, the unique solution of `S̃ e_n = x^n`.
pub fn euler_poly(n: usize) -> QPoly {
    EULER.get(n)
}

/// Second-order Euler polynomial, `S̃² e^[2]_n = x^n`, via the Cauchy product
/// `Σ C(n,k) e_{n-k}(x) e_k(0)`.
pub fn euler_poly2(n: usize) -> QPoly {
    let zero = Rational::zero();
    (0..=n)
        .map(|k| euler_poly(n - k).scale(&(binom_q(n as i64, k as i64) * euler_poly(k).eval(&zero))))
        .sum()
}

/// The alternating Euler number `E_{2m} = 2^{2m+1} e_{2m}(1/2)`.
pub fn euler_number(m: usize) -> Rational {
    let e = euler_poly(2 * m).eval(&rational(1, 2));
    e * int(pow2(2 * m as u32 + 1))
}

/// `Ẽ(f)` through the monomial expansion `Σ a_n e_n`.
pub fn euler_inverse(f: &QPoly) -> QPoly {
    f.coeffs()
        .iter()
        .enumerate()
        .filter(|(_, a)| !a.is_zero())
        .map(|(n, a)| euler_poly(n).scale(a))
        .sum()
}

/// Every intermediate of the interpolation route to `Ẽ(f)`.
#[derive(Clone, Debug, PartialEq)]
pub struct EulerSolveTrace {
    pub f: QPoly,
    /// `F_0 = 0`, `F_{k+1} = f(k) - F_k` for `k = 0..=deg f`.
    pub f_values: Vec<Rational>,
    /// The constant `c = F(0)`.
    pub c: Rational,
    /// Interpolant of `F_0..F_n` on the nodes `0..=n`.
    pub g: QPoly,
    /// The alternating polynomial `B_n`.
    pub b: QPoly,
    /// `G + c B_n`.
    pub preimage: QPoly,
}

impl EulerSolveTrace {
    pub fn degree(&self) -> usize {
        self.f.degree().unwrap_or(0)
    }
}

fn degree_of(f: &QPoly) -> Result<usize> {
    f.degree().ok_or(Error::ZeroPolynomial)
}

fn values_at_naturals(f: &QPoly, upto: usize) -> Vec<Rational> {
    f.eval_at_integers(0..=upto as i64)
}

/// `c = 2^{-(n+1)} Σ_{k=0}^{n} (-1)^k f(k) Σ_{j=k+1}^{n+1} C(n+1, j)`.
pub fn constant_c_first(f: &QPoly) -> Result<Rational> {
    let n = degree_of(f)?;
    let values = values_at_naturals(f, n);
    Ok(first_constant_from_values(n, &values))
}

pub fn first_constant_from_values(n: usize, values: &[Rational]) -> Rational {
    let n = n as i64;
    let mut acc = Rational::zero();
    for (k, fk) in values.iter().enumerate().take(n as usize + 1) {
        let k = k as i64;
        let tail: BigInt = ((k + 1)..=(n + 1)).map(|j| binom(n + 1, j)).sum();
        acc += sign::<Rational>(k) * fk.clone() * int(tail);
    }
    acc / int(pow2(n as u32 + 1))
}

/// `c = (-1)^n n! a_n / 2^{n+1} + 2^{-n} Σ_{k=0}^{n} (-1)^k f(k) Σ_{j=k+1}^{n} C(n, j)`.
pub fn constant_c_second(f: &QPoly) -> Result<Rational> {
    let n = degree_of(f)?;
    let values = values_at_naturals(f, n);
    Ok(second_constant_from_values(n, f.leading_coeff().unwrap(), &values))
}

pub fn second_constant_from_values(n: usize, lead: &Rational, values: &[Rational]) -> Rational {
    let ni = n as i64;
    let head = sign::<Rational>(ni) * int(factorial(n)) * lead.clone() / int(pow2(n as u32 + 1));
    let mut acc = Rational::zero();
    for (k, fk) in values.iter().enumerate().take(n + 1) {
        let k = k as i64;
        let tail: BigInt = ((k + 1)..=ni).map(|j| binom(ni, j)).sum();
        acc += sign::<Rational>(k) * fk.clone() * int(tail);
    }
    head + acc / int(pow2(n as u32))
}

/// `Ẽ(f)` by solving `F_{k+1} + F_k = f(k)` on the naturals and fixing the
/// remaining freedom `c B_n` from the equation at `x = n`.
pub fn euler_inverse_interp(f: &QPoly) -> Result<EulerSolveTrace> {
    let n = degree_of(f)?;
    let values = values_at_naturals(f, n);
    let mut f_values = Vec::with_capacity(n + 2);
    f_values.push(Rational::zero());
    for fk in &values {
        let next = fk.clone() - f_values.last().unwrap().clone();
        f_values.push(next);
    }
    let g = QPoly::from_natural_values(&f_values[..=n])?;
    let b = alt_poly(n);
    let c = first_constant_from_values(n, &values);
    let preimage = &g + &b.scale(&c);
    Ok(EulerSolveTrace {
        f: f.clone(),
        f_values,
        c,
        g,
        b,
        preimage,
    })
}

/// `B_n`, the degree-`n` polynomial with `B_n(k) = (-1)^k` for `k = 0..=n`,
/// in Lagrange form `(-1)^n Σ_j 1/(j!(n-j)!) Π_{k≠j} (x - k)`.
pub fn alt_poly(n: usize) -> QPoly {
    let nodes: Vec<Rational> = (0..=n).map(|k| -int(k as i64)).collect();
    let sum: QPoly = (0..=n)
        .map(|j| {
            let basis = QPoly::from_linear_factors(
                nodes.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, r)| r),
            );
            let w = Rational::new(BigInt::one(), factorial(j) * factorial(n - j));
            basis.scale(&w)
        })
        .sum();
    sum.scale(&sign(n as i64))
}

/// `(-1)^n n! a_n = Σ_k C(n,k) (-1)^k f(k)` for `f` of degree `n`.
pub fn leading_coeff_check(f: &QPoly) -> Result<bool> {
    let n = degree_of(f)?;
    let lhs = sign::<Rational>(n as i64) * int(factorial(n)) * f.leading_coeff().unwrap().clone();
    let rhs: Rational = (0..=n)
        .map(|k| sign::<Rational>(k as i64) * binom_q(n as i64, k as i64) * f.eval(&int(k as i64)))
        .fold(Rational::zero(), |a, b| a + b);
    Ok(lhs == rhs)
}

/// Both sides of the leading-coefficient identity for `f = x^n`:
/// `(-1)^n 2^n n!` and the double alternating sum.
pub fn example_a_sides(n: usize) -> (BigInt, BigInt) {
    let ni = n as i64;
    let pw = |l: i64| BigInt::from(l).pow(n as u32);
    let upper = |l: i64| -> BigInt { ((l + 1)..=(ni + 1)).map(|i| binom(ni + 1, i)).sum() };
    let lower = |l: i64| -> BigInt { (0..=l).map(|i| binom(ni + 1, i)).sum() };
    let lhs = sign::<BigInt>(ni) * pow2(n as u32) * factorial(n);
    let rhs: BigInt = (0..=ni)
        .map(|j| {
            let a: BigInt = (j..=ni).map(|l| sign::<BigInt>(l) * pw(l) * upper(l)).sum();
            let b: BigInt = (0..j).map(|l| sign::<BigInt>(l) * pw(l) * lower(l)).sum();
            binom(ni, j) * (a - b)
        })
        .sum();
    (lhs, rhs)
}

pub fn example_a_identity(n: usize) -> bool {
    let (lhs, rhs) = example_a_sides(n);
    lhs == rhs
}

/// Inverse law, route agreement, both constants, leading coefficients and the
/// second-order polynomials on `x^n`, `[x n]` and `(x+1)^n` for `n <= n_max`.
pub fn verify_euler_inverse(n_max: usize) -> IdentityReport {
    let mut c = Checker::new("euler-inverse", format!("n <= {n_max}"));
    let half = rational(1, 2);
    for n in 0..=n_max {
        let inputs = [
            ("x^n", QPoly::monomial(Rational::one(), n)),
            ("[x n]", crate::poly::binom_poly(n)),
            ("(x+1)^n", QPoly::linear(Rational::one()).pow(n as u32)),
        ];
        for (name, f) in inputs {
            let e = euler_inverse(&f);
            c.eq(|| format!("S~ E~ {name}, n = {n}"), &apply_stilde(&e), &f);
            c.eq(|| format!("E~ S~ {name}, n = {n}"), &euler_inverse(&apply_stilde(&f)), &f);
            let trace = euler_inverse_interp(&f).expect("nonzero");
            c.eq(|| format!("interpolation route {name}, n = {n}"), &trace.preimage, &e);
            c.eq(|| format!("c = F(0) {name}, n = {n}"), &trace.c, &e.coeff(0));
            c.eq(
                || format!("both constants {name}, n = {n}"),
                &constant_c_first(&f).unwrap(),
                &constant_c_second(&f).unwrap(),
            );
            c.holds(|| format!("leading coefficient {name}, n = {n}"), leading_coeff_check(&f).unwrap(), || f.to_string());
        }
        let xn = QPoly::monomial(Rational::one(), n);
        let e2 = euler_poly2(n);
        c.eq(|| format!("e2_{n} = E~E~ x^{n}"), &e2, &euler_inverse(&euler_inverse(&xn)));
        c.eq(|| format!("S~S~ e2_{n}"), &apply_stilde(&apply_stilde(&e2)), &xn);
        if n % 2 == 1 {
            c.eq(|| format!("e_{n}(1/2)"), &euler_poly(n).eval(&half), &Rational::zero());
        }
        let b = alt_poly(n);
        let tip = b.eval(&int(n as i64 + 1)) + b.eval(&int(n as i64));
        c.eq(|| format!("B_{n}(n+1) + B_{n}(n)"), &tip, &(sign::<Rational>(n as i64) * int(pow2(n as u32 + 1))));
    }
    let listed = [
        QPoly::from_coeffs(vec![rational(-1, 4), half.clone()]),
        QPoly::from_coeffs(vec![Rational::zero(), rational(-1, 2), half.clone()]),
        QPoly::from_coeffs(vec![rational(1, 8), Rational::zero(), rational(-3, 4), half.clone()]),
        QPoly::from_coeffs(vec![Rational::zero(), half.clone(), Rational::zero(), int(-1), half.clone()]),
    ];
    for (i, e) in listed.iter().enumerate() {
        c.eq(|| format!("e_{}", i + 1), &euler_poly(i + 1), e);
    }
    for (m, v) in [(0, 1), (1, -1), (2, 5), (3, -61)] {
        c.eq(|| format!("E_{}", 2 * m), &euler_number(m), &int(v));
    }
    c.finish()
}

/// The double alternating sum identity for `x^n`, `1 <= n <= n_max`.
pub fn verify_example_a(n_max: usize) -> IdentityReport {
    let mut c = Checker::new("example-a", format!("1 <= n <= {n_max}"));
    for n in 1..=n_max {
        let (lhs, rhs) = example_a_sides(n);
        c.eq(|| format!("n = {n}"), &lhs, &rhs);
    }
    c.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn operator_suites_pass() {
        let r = verify_euler_inverse(12);
        assert!(r.passed(), "{r} {:?}", r.counterexample);
        assert!(verify_example_a(10).passed());
    }
    use crate::poly::binom_poly;

    fn q(coeffs: &[i64]) -> QPoly {
        QPoly::from_ints(coeffs)
    }

    fn qr(coeffs: &[(i64, i64)]) -> QPoly {
        QPoly::from_coeffs(coeffs.iter().map(|&(n, d)| rational(n, d)).collect())
    }

    #[test]
    fn s_examples() {
        assert_eq!(apply_s(&QPoly::x()), q(&[0, 2]));
        assert_eq!(apply_s(&q(&[0, 0, 1])), qr(&[(1, 2), (0, 1), (2, 1)]));
        assert_eq!(apply_s(&QPoly::one()), q(&[2]));
    }

    #[test]
    fn s2_examples() {
        assert_eq!(apply_s2(&q(&[-2, 0, 4])), q(&[0, 0, 16]));
        assert_eq!(apply_s2(&QPoly::one()), q(&[4]));
        assert_eq!(apply_s2(&QPoly::x()), q(&[0, 4]));
        let p = q(&[1, -3, 0, 7, 2]);
        assert_eq!(apply_s2(&p), apply_s(&apply_s(&p)));
    }

    #[test]
    fn stilde_examples() {
        assert_eq!(apply_stilde(&QPoly::x()), q(&[1, 2]));
        let e1 = qr(&[(-1, 4), (1, 2)]);
        assert_eq!(apply_stilde(&e1), QPoly::x());
        assert_eq!(apply_stilde(&QPoly::zero()), QPoly::zero());
    }

    #[test]
    fn euler_polynomials_match_listed_values() {
        assert_eq!(euler_poly(0), qr(&[(1, 2)]));
        assert_eq!(euler_poly(1), qr(&[(-1, 4), (1, 2)]));
        assert_eq!(euler_poly(2), qr(&[(0, 1), (-1, 2), (1, 2)]));
        assert_eq!(euler_poly(3), qr(&[(1, 8), (0, 1), (-3, 4), (1, 2)]));
        assert_eq!(euler_poly(4), qr(&[(0, 1), (1, 2), (0, 1), (-1, 1), (1, 2)]));
        for n in 0..12 {
            assert_eq!(apply_stilde(&euler_poly(n)), QPoly::monomial(int(1), n));
        }
    }

    #[test]
    fn table_beyond_cap_is_consistent() {
        let small = EulerTable::new(3);
        for n in 0..8 {
            assert_eq!(small.get(n), euler_poly(n));
        }
    }

    #[test]
    fn second_order_euler() {
        assert_eq!(euler_poly2(0), qr(&[(1, 4)]));
        // S̃²(x/4 - 1/4) = x; see the decisions note on the listed example.
        assert_eq!(euler_poly2(1), qr(&[(-1, 4), (1, 4)]));
        for n in 0..8 {
            let twice = apply_stilde(&apply_stilde(&euler_poly2(n)));
            assert_eq!(twice, QPoly::monomial(int(1), n));
        }
    }

    #[test]
    fn euler_numbers() {
        let expected = [1, -1, 5, -61, 1385, -50521];
        for (m, e) in expected.iter().enumerate() {
            assert_eq!(euler_number(m), int(*e), "E_{}", 2 * m);
        }
    }

    #[test]
    fn odd_euler_polynomials_vanish_at_half() {
        for m in 0..=20 {
            assert!(euler_poly(2 * m + 1).eval(&rational(1, 2)).is_zero());
        }
        // The minus-half variant does not hold already for e_1.
        assert_eq!(euler_poly(1).eval(&rational(-1, 2)), rational(-1, 2));
    }

    #[test]
    fn euler_inverse_examples() {
        assert_eq!(euler_inverse(&q(&[0, 0, 1])), euler_poly(2));
        assert_eq!(euler_inverse(&QPoly::zero()), QPoly::zero());
    }

    #[test]
    fn interpolation_route_example_b() {
        // f = [x choose n-1] with n = 3: G vanishes and F = c B_2, c = 1/8.
        let f = binom_poly(2);
        let tr = euler_inverse_interp(&f).unwrap();
        assert!(tr.g.is_zero());
        assert_eq!(tr.c, rational(1, 8));
        assert_eq!(tr.preimage, alt_poly(2).scale(&rational(1, 8)));
        for n in 1..10usize {
            let tr = euler_inverse_interp(&binom_poly(n - 1)).unwrap();
            let expected = sign::<Rational>(n as i64 - 1) / int(pow2(n as u32));
            assert_eq!(tr.c, expected, "n={n}");
            assert_eq!(tr.preimage, tr.b.scale(&expected));
        }
    }

    #[test]
    fn interpolation_route_constants_agree() {
        let f = q(&[0, 0, 1]);
        let tr = euler_inverse_interp(&f).unwrap();
        assert_eq!(tr.c, constant_c_second(&f).unwrap());
        assert_eq!(tr.c, constant_c_first(&f).unwrap());
        assert_eq!(tr.preimage, euler_inverse(&f));
        assert_eq!(tr.f_values.len(), 4);
        for k in 0..3 {
            assert_eq!(&tr.f_values[k + 1] + &tr.f_values[k], f.eval(&int(k as i64)));
        }
    }

    #[test]
    fn interpolation_route_x_times_x_minus_one() {
        let tr = euler_inverse_interp(&q(&[0, -1, 1])).unwrap();
        assert_eq!(tr.preimage, qr(&[(1, 4), (-1, 1), (1, 2)]));
        assert_eq!(tr.preimage.coeff(0), rational(1, 4));
        assert_eq!(euler_poly(2) - euler_poly(1), tr.preimage);
    }

    #[test]
    fn zero_polynomial_is_rejected() {
        assert_eq!(euler_inverse_interp(&QPoly::zero()), Err(Error::ZeroPolynomial));
        assert_eq!(leading_coeff_check(&QPoly::zero()), Err(Error::ZeroPolynomial));
        assert_eq!(constant_c_first(&QPoly::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn constant_polynomial_preimage() {
        let tr = euler_inverse_interp(&q(&[6])).unwrap();
        assert_eq!(tr.preimage, q(&[3]));
    }

    #[test]
    fn alternating_polynomials() {
        assert_eq!(alt_poly(0), QPoly::one());
        assert_eq!(alt_poly(1), q(&[1, -2]));
        let b2 = alt_poly(2);
        assert_eq!(b2, q(&[1, -4, 2]));
        assert_eq!(b2.eval(&int(3)) + b2.eval(&int(2)), int(8));
        for n in 0..12usize {
            let b = alt_poly(n);
            let values: Vec<Rational> = (0..=n).map(|k| sign(k as i64)).collect();
            assert_eq!(b, QPoly::interpolate_at_naturals(&values).unwrap());
            let ends = b.eval(&int(n as i64 + 1)) + b.eval(&int(n as i64));
            assert_eq!(ends, sign::<Rational>(n as i64) * int(pow2(n as u32 + 1)));
        }
    }

    #[test]
    fn leading_coefficient_identity() {
        assert!(leading_coeff_check(&q(&[0, 0, 1])).unwrap());
        assert!(leading_coeff_check(&q(&[-2, 0, 4])).unwrap());
    }

    #[test]
    fn example_a() {
        assert_eq!(example_a_sides(1), (BigInt::from(-2), BigInt::from(-2)));
        assert_eq!(example_a_sides(2), (BigInt::from(8), BigInt::from(8)));
        assert!(example_a_identity(10));
    }
}
