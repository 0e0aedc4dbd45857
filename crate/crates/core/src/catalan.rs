//! Super Catalan numbers, the preimages `F(x,ν,n) = Ẽ f(x,ν,n)` of
//! `f(x,ν,n) = [x n][x-ν n]`, and their constants `c(ν,n) = F(0,ν,n)`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::combinat::{binom, binom_q, factorial, pow2};
use crate::error::{Error, Result};
use crate::families::{a2_poly, FamilyCache};
use crate::operators::{alt_poly, apply_stilde, euler_inverse, second_constant_from_values};
use crate::poly::binom_poly;
use crate::report::{Checker, IdentityReport};
use crate::scalar::{int, rational, sign};
use crate::{QPoly, Rational};

/// `C(m,k) = (2m)! (2k)! / (2 m! k! (m+k)!)`. Integral except `C(0,0) = 1/2`.
pub fn super_catalan(m: u32, k: u32) -> Rational {
    let (m, k) = (m as usize, k as usize);
    let num = factorial(2 * m) * factorial(2 * k);
    let den = BigInt::from(2) * factorial(m) * factorial(k) * factorial(m + k);
    Rational::new(num, den)
}

/// `C(m+1,k) + C(m,k+1) = 4 C(m,k)` and integrality away from `(0,0)`.
pub fn verify_catalan_recursion(m_max: u32, k_max: u32) -> IdentityReport {
    let mut c = Checker::new("catalan-recursion", format!("m <= {m_max}, k <= {k_max}"));
    for m in 0..=m_max {
        for k in 0..=k_max {
            let lhs = super_catalan(m + 1, k) + super_catalan(m, k + 1);
            c.eq(|| format!("(m,k) = ({m},{k})"), &lhs, &(int(4) * super_catalan(m, k)));
            if (m, k) != (0, 0) {
                let v = super_catalan(m, k);
                c.holds(|| format!("C({m},{k}) integral"), v.is_integer(), || v.to_string());
            }
        }
    }
    c.finish()
}

fn check_range(nu: i64, n: u32, top: i64) -> Result<()> {
    if (0..=top).contains(&nu) {
        Ok(())
    } else {
        Err(Error::IndexOutOfRange(format!("nu = {nu} outside 0..={top} for n = {n}")))
    }
}

/// `f(x,ν,n) = [x n] [x-ν n]` for `0 <= ν <= n+1`.
pub fn f_poly(nu: i64, n: u32) -> Result<QPoly> {
    check_range(nu, n, n as i64 + 1)?;
    let b = binom_poly(n as usize);
    Ok(&b * &b.shift(&int(-nu)))
}

/// `n!^{-2} Π_{j<ν} (x-j)(x-n-j) · Π_{k=1}^{n-ν} (x-(ν-1)-k)²` for `0 <= ν <= n`.
pub fn f_factored(nu: i64, n: u32) -> Result<QPoly> {
    check_range(nu, n, n as i64)?;
    let ni = n as i64;
    let mut roots: Vec<Rational> = Vec::new();
    for j in 0..nu {
        roots.push(int(-j));
        roots.push(int(-(ni + j)));
    }
    for k in 1..=(ni - nu) {
        let r = int(-(nu - 1 + k));
        roots.push(r.clone());
        roots.push(r);
    }
    let f = factorial(n as usize);
    Ok(QPoly::from_linear_factors(roots.iter()).scale(&Rational::new(BigInt::one(), &f * &f)))
}

/// `c(ν,n)`: zero for `ν = n-1-2μ`, `(-1)^μ C(n-μ,μ) / 2^{2n}` for `ν = n-2μ`.
pub fn c_const(nu: i64, n: u32) -> Result<Rational> {
    check_range(nu, n, n as i64)?;
    let gap = n as i64 - nu;
    if gap % 2 == 1 {
        return Ok(Rational::zero());
    }
    let mu = (gap / 2) as u32;
    Ok(sign::<Rational>(mu as i64) * super_catalan(n - mu, mu) / int(pow2(2 * n)))
}

fn tail(two_n: i64, k: i64) -> BigInt {
    ((k + 1)..=two_n).map(|j| binom(two_n, j)).sum()
}

/// `c(ν,n) = (2n)!/(2^{2n+1} n!²) + 2^{-2n} Σ_{k=n+ν}^{2n} (-1)^k C(k,n) C(k-ν,n) Σ_{j>k} C(2n,j)`.
pub fn c_from_sum(nu: i64, n: u32) -> Result<Rational> {
    check_range(nu, n, n as i64)?;
    let ni = n as i64;
    let mut acc = super_catalan(n, 0);
    for k in (ni + nu)..=(2 * ni) {
        let term = binom(k, ni) * binom(k - nu, ni) * tail(2 * ni, k);
        acc += int(sign::<BigInt>(k) * term);
    }
    Ok(acc / int(pow2(2 * n)))
}

/// `f(k,ν,n)` for `k = 0..=2n`.
fn f_values(nu: i64, n: u32) -> Result<Vec<Rational>> {
    check_range(nu, n, n as i64 + 1)?;
    let ni = n as i64;
    Ok((0..=2 * ni).map(|k| int(binom(k, ni) * binom(k - nu, ni))).collect())
}

/// `F_j(ν,n) = (-1)^{j-1} Σ_{k<j} (-1)^k f(k,ν,n)` for `j = 0..=2n`.
pub fn f_series(nu: i64, n: u32) -> Result<Vec<Rational>> {
    let values = f_values(nu, n)?;
    let mut out = vec![Rational::zero()];
    for v in &values[..2 * n as usize] {
        let next = v - out.last().unwrap();
        out.push(next);
    }
    Ok(out)
}

/// The constant of the preimage, from the values of `f` on `0..=2n`.
fn solve_constant(nu: i64, n: u32) -> Result<Rational> {
    let values = f_values(nu, n)?;
    let fact = factorial(n as usize);
    let lead = Rational::new(BigInt::one(), &fact * &fact);
    Ok(second_constant_from_values(2 * n as usize, &lead, &values))
}

/// `F(x,ν,n)`, the polynomial solution of `S̃F = f(x,ν,n)`, interpolated from
/// `F_j + (-1)^j c` on the nodes `0..=2n` for `0 <= ν <= n+1`.
pub fn big_f_poly(nu: i64, n: u32) -> Result<QPoly> {
    let series = f_series(nu, n)?;
    let c = solve_constant(nu, n)?;
    let values: Vec<Rational> = series
        .into_iter()
        .enumerate()
        .map(|(j, v)| v + sign::<Rational>(j as i64) * c.clone())
        .collect();
    QPoly::from_natural_values(&values)
}

/// Closed form of `F(x,n+1,n)`: values `(-1)^j/2` on `0..=n` and
/// `(-1)^{j+1}/2` on `n+1..=2n`.
pub fn big_f_top(n: u32) -> QPoly {
    let values: Vec<Rational> = (0..=2 * n as i64)
        .map(|j| {
            let s = if j <= n as i64 { sign::<Rational>(j) } else { sign(j + 1) };
            s * rational(1, 2)
        })
        .collect();
    QPoly::from_natural_values(&values).expect("nonempty")
}

/// `F(k,ν,n) = (-1)^k c(ν,n) + Σ_{j=n+ν}^{k-1} (-1)^{k-1+j} C(j,n) C(j-ν,n)`.
pub fn big_f_value(k: i64, nu: i64, n: u32) -> Result<Rational> {
    let c = c_const(nu, n)?;
    let ni = n as i64;
    let sum: BigInt = ((ni + nu)..k)
        .map(|j| sign::<BigInt>(k - 1 + j) * binom(j, ni) * binom(j - nu, ni))
        .sum();
    Ok(sign::<Rational>(k) * c + int(sum))
}

/// Constants, the explicit table, closed-form values and special cases of the
/// preimages for `0 <= ν <= n <= n_max`, and part (b) for `n <= top_max`.
pub fn verify_preimages(n_max: u32, top_max: u32) -> IdentityReport {
    let mut c = Checker::new("preimages", format!("nu <= n <= {n_max}, part (b) n <= {top_max}"));
    for n in 1..=n_max {
        let ni = n as i64;
        let mut diag_sub = Vec::new();
        for nu in 0..=ni {
            let f = f_poly(nu, n).unwrap();
            let big = big_f_poly(nu, n).unwrap();
            c.eq(|| format!("S~F(x,{nu},{n}) = f"), &apply_stilde(&big), &f);
            c.eq(|| format!("f({nu},{n}) factored"), &f, &f_factored(nu, n).unwrap());
            let expected = c_const(nu, n).unwrap();
            c.eq(|| format!("F(0,{nu},{n}) = c({nu},{n})"), &big.coeff(0), &expected);
            c.eq(|| format!("c({nu},{n}) by sum"), &c_from_sum(nu, n).unwrap(), &expected);
            let series = f_series(nu, n).unwrap();
            for (j, v) in series.iter().enumerate().take((ni + nu) as usize + 1) {
                c.eq(|| format!("F_{j}({nu},{n}) = 0"), v, &Rational::zero());
            }
            let values = big.eval_at_integers(0..=2 * ni);
            for (k, v) in values.iter().enumerate() {
                let k = k as i64;
                c.eq(|| format!("F({k},{nu},{n}) closed form"), v, &big_f_value(k, nu, n).unwrap());
            }
            if (ni - nu) % 2 == 1 {
                for (k, v) in values.iter().enumerate().take((ni - nu) as usize + 1) {
                    c.eq(|| format!("F({k},{nu},{n}) = 0"), v, &Rational::zero());
                }
            }
            if nu >= ni - 1 {
                diag_sub.push(big);
            }
        }
        let [sub_f, diag_f]: [QPoly; 2] = diag_sub.try_into().expect("nu = n-1 and nu = n");
        let diag = alt_poly(2 * n as usize).scale(&(super_catalan(n, 0) / int(pow2(2 * n))));
        c.eq(|| format!("F(x,{n},{n})"), &diag_f, &diag);
        let sub = binom_poly(2 * n as usize).scale(&int(binom(2 * ni - 1, ni)));
        c.eq(|| format!("F(x,{},{n})", n - 1), &sub_f, &sub);
    }
    for n in 0..=top_max {
        let nu = n as i64 + 1;
        let big = big_f_poly(nu, n).unwrap();
        c.eq(|| format!("part (b) c, n = {n}"), &solve_constant(nu, n).unwrap(), &rational(1, 2));
        c.eq(|| format!("F(x,{nu},{n}) closed form"), &big, &big_f_top(n));
        c.eq(|| format!("S~F(x,{nu},{n}) = f"), &apply_stilde(&big), &f_poly(nu, n).unwrap());
        let series = f_series(nu, n).unwrap();
        for (j, v) in series.iter().enumerate() {
            let expected = if j as u32 <= n { Rational::zero() } else { sign(j as i64 - 1) };
            c.eq(|| format!("F_{j}({nu},{n})"), v, &expected);
        }
    }
    c.finish()
}

/// `c(ν-2,n) = c(ν,n) - c(ν-1,n-1)` for `2 <= ν <= n <= n_max`.
pub fn verify_c_recursion_first(n_max: u32) -> IdentityReport {
    let mut c = Checker::new("c-recursion-first", format!("2 <= nu <= n <= {n_max}"));
    for n in 2..=n_max {
        for nu in 2..=n as i64 {
            let lhs = c_const(nu - 2, n).unwrap();
            let rhs = c_const(nu, n).unwrap() - c_const(nu - 1, n - 1).unwrap();
            c.eq(|| format!("(nu,n) = ({nu},{n})"), &lhs, &rhs);
        }
    }
    c.finish()
}

fn second_recursion(id: &str, n_max: u32, weight: impl Fn(i64, i64) -> Rational) -> IdentityReport {
    let mut c = Checker::new(id, format!("2 <= nu <= n <= {n_max}"));
    for n in 2..=n_max {
        for nu in 2..=n as i64 {
            let lhs = c_const(nu - 2, n).unwrap();
            let rhs = -c_const(nu, n).unwrap() + weight(nu, n as i64) * c_const(nu - 1, n - 1).unwrap();
            c.eq(|| format!("(nu,n) = ({nu},{n})"), &lhs, &rhs);
        }
    }
    c.finish()
}

/// `c(ν-2,n) = -c(ν,n) + (ν/n) c(ν-1,n-1)`, the weight as printed.
pub fn verify_c_recursion_second(n_max: u32) -> IdentityReport {
    second_recursion("c-recursion-second", n_max, rational)
}

/// `c(ν-2,n) = -c(ν,n) + ((ν-1)/n) c(ν-1,n-1)`.
pub fn verify_c_recursion_second_corrected(n_max: u32) -> IdentityReport {
    second_recursion("c-recursion-second-corrected", n_max, |nu, n| rational(nu - 1, n))
}

/// `C(k,n) C(k-ν+2,n) = C(k+1,n) C(k+1-ν,n) + w C(k,n-1) C(k-(ν-1),n-1)`.
pub fn binom_product_holds(k: i64, nu: i64, n: i64, weight: &Rational) -> bool {
    let lhs = binom_q(k, n) * binom_q(k - nu + 2, n);
    let rhs = binom_q(k + 1, n) * binom_q(k + 1 - nu, n)
        + weight.clone() * binom_q(k, n - 1) * binom_q(k - nu + 1, n - 1);
    lhs == rhs
}

/// Corollary (a) and both (b) identities for `1 <= n <= n_max`.
pub fn verify_supercatalan_corollary(n_max: u32) -> IdentityReport {
    let mut c = Checker::new("supercatalan-corollary", format!("n <= {n_max}"));
    for n in 1..=n_max {
        let ni = n as i64;
        let two_n = 2 * ni;
        let c_n0 = super_catalan(n, 0);
        for mu in 0..=ni {
            let rhs: BigInt = (0..=two_n)
                .map(|k| binom(two_n, k) * sign::<BigInt>(k) * binom(k, ni) * binom(k - mu, ni))
                .sum();
            c.eq(|| format!("(a) n = {n}, mu = {mu}"), &(int(2) * c_n0.clone()), &int(rhs));
        }
        for mu in 0..=(ni - 1) / 2 {
            let rhs: BigInt = (0..=two_n)
                .map(|k| sign::<BigInt>(k + 1) * binom(k, ni) * binom(k + 1 + 2 * mu - ni, ni) * tail(two_n, k))
                .sum();
            c.eq(|| format!("(b1) n = {n}, mu = {mu}"), &c_n0, &int(rhs));
        }
        for mu in 0..=ni / 2 {
            let lhs = sign::<Rational>(mu) * super_catalan(n - mu as u32, mu as u32) - c_n0.clone();
            let rhs: BigInt = (0..=two_n)
                .map(|k| sign::<BigInt>(k) * binom(k, ni) * binom(k + 2 * mu - ni, ni) * tail(two_n, k))
                .sum();
            c.eq(|| format!("(b2) n = {n}, mu = {mu}"), &lhs, &int(rhs));
        }
    }
    c.finish()
}

fn expansion(m: u32, base: impl Fn(i64, u32) -> QPoly) -> QPoly {
    let mi = m as i64;
    let n = m - 1;
    let mut acc = QPoly::zero();
    for mu in 0..=mi {
        let w = binom_q(mi, mu).pow(2);
        acc = acc + base(0, n).shift(&int(mi - 1 - mu)).scale(&w);
    }
    for nu in 0..=mi {
        for mu in (nu + 1)..=mi {
            let w = int(2) * binom_q(mi, nu) * binom_q(mi, mu);
            acc = acc + base(mu - nu, n).shift(&int(mi - 1 - nu)).scale(&w);
        }
    }
    acc
}

/// `Σ_μ C(m,μ)² f(x+m-1-μ,0,m-1) + 2 Σ_{ν<μ} C(m,ν)C(m,μ) f(x+m-1-ν,μ-ν,m-1)`,
/// which rearranges `A₂(x,m)`.
pub fn a2_f_expansion(m: u32) -> QPoly {
    assert!(m >= 1, "A₂(x,m) expansion needs m >= 1");
    expansion(m, |nu, n| f_poly(nu, n).expect("nu <= n+1"))
}

/// The same expansion with every `f` replaced by its preimage `F`.
pub fn etilde_a2_expansion(m: u32) -> QPoly {
    assert!(m >= 1, "A₂(x,m) expansion needs m >= 1");
    expansion(m, |nu, n| big_f_poly(nu, n).expect("nu <= n+1"))
}

/// Expansion route, `Ẽ(A₂(x,m))` and `P(m,x) + P(m,x-1)` agree for
/// `m_min <= m <= m_max`.
pub fn verify_new_poly_id(m_min: u32, m_max: u32, cache: &FamilyCache) -> IdentityReport {
    let mut c = Checker::new("new-poly-id", format!("{m_min} <= m <= {m_max}"));
    for m in m_min.max(1)..=m_max {
        let a2 = a2_poly(m);
        c.eq(|| format!("A2(x,{m}) f-expansion"), &a2_f_expansion(m), &a2);
        let via_e = euler_inverse(&a2);
        let expanded = etilde_a2_expansion(m);
        c.eq(|| format!("expansion = E~(A2(x,{m}))"), &expanded, &via_e);
        let p = cache.p(m);
        let p_sum = &*p + &p.shift(&int(-1));
        c.eq(|| format!("E~(A2(x,{m})) = P({m},x)+P({m},x-1)"), &via_e, &p_sum);
    }
    c.finish()
}
