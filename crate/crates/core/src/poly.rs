//! Dense univariate polynomials.
//!
//! Coefficients are stored low to high and the vector never ends in a zero,
//! so two polynomials are equal exactly when their coefficient vectors are.
//! The zero polynomial is the empty vector and has no degree.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::scalar::{ExactSqrt, Field, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Default for Poly<T> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<T: Scalar> Poly<T> {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    /// The identity polynomial `x`.
    pub fn x() -> Self {
        Self::monomial(T::one(), 1)
    }

    pub fn constant(c: T) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn monomial(c: T, k: usize) -> Self {
        let mut coeffs = vec![T::zero(); k + 1];
        coeffs[k] = c;
        Self::from_coeffs(coeffs)
    }

    /// The linear polynomial `x + a`.
    pub fn linear(a: T) -> Self {
        Self::from_coeffs(vec![a, T::one()])
    }

    /// Builds a polynomial from coefficients ordered low to high.
    pub fn from_coeffs(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| T::from_int(c)).collect())
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    /// `None` stands for the degree of the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading_coeff(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn map<U: Scalar>(&self, f: impl FnMut(&T) -> U) -> Poly<U> {
        Poly::from_coeffs(self.coeffs.iter().map(f).collect())
    }

    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        self.map(|a| a.clone() * c.clone())
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    /// The polynomial `x ↦ p(x + a)`.
    pub fn shift(&self, a: &T) -> Self {
        if a.is_zero() {
            return self.clone();
        }
        // Horner in the ring: ((c_n)(x+a) + c_{n-1})(x+a) + ...
        let mut out: Vec<T> = Vec::with_capacity(self.coeffs.len());
        for c in self.coeffs.iter().rev() {
            out.insert(0, T::zero());
            for i in 0..out.len() - 1 {
                let t = out[i + 1].clone() * a.clone();
                out[i] = out[i].clone() + t;
            }
            out[0] = out[0].clone() + c.clone();
        }
        Self::from_coeffs(out)
    }

    /// True iff `p(a + u) = p(a - u)` identically.
    pub fn is_even_about(&self, a: &T) -> bool {
        self.shift(a)
            .coeffs
            .iter()
            .skip(1)
            .step_by(2)
            .all(|c| c.is_zero())
    }

    /// The composition `x ↦ self(inner(x))`.
    pub fn compose(&self, inner: &Self) -> Self {
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| &acc * inner + Self::constant(c.clone()))
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Product of the linear factors `x + r` for each `r`.
    pub fn from_linear_factors<'a>(shifts: impl IntoIterator<Item = &'a T>) -> Self
    where
        T: 'a,
    {
        shifts
            .into_iter()
            .fold(Self::one(), |acc, r| acc.mul_linear(r))
    }

    /// Multiplies by `x + r` in place of a full product.
    pub fn mul_linear(&self, r: &T) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i + 1] = out[i + 1].clone() + c.clone();
            out[i] = out[i].clone() + c.clone() * r.clone();
        }
        Self::from_coeffs(out)
    }

    /// Human-readable form, highest degree first, e.g. `4x^2 - 2`.
    pub fn pretty(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = is_negative(c);
            let abs = if neg { -c.clone() } else { c.clone() };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let body = abs.to_string();
            let coeff = if i > 0 && abs.is_one() {
                String::new()
            } else if i > 0 && body.contains('/') {
                format!("({body})")
            } else {
                body
            };
            out.push_str(&coeff);
            match i {
                0 => {}
                1 => out.push_str(var),
                _ => out.push_str(&format!("{var}^{i}")),
            }
        }
        out
    }
}

fn is_negative<T: Scalar>(c: &T) -> bool {
    c.to_string().starts_with('-')
}

impl<T: Field> Poly<T> {
    /// Unique polynomial of degree below `points.len()` through all points,
    /// by Newton divided differences.
    pub fn interpolate(points: &[(T, T)]) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::NoPoints);
        }
        for (i, (xi, _)) in points.iter().enumerate() {
            if points[..i].iter().any(|(xj, _)| xj == xi) {
                return Err(Error::DuplicateNode(xi.to_string()));
            }
        }
        let n = points.len();
        let mut dd: Vec<T> = points.iter().map(|(_, y)| y.clone()).collect();
        for level in 1..n {
            for i in (level..n).rev() {
                let num = dd[i].clone() - dd[i - 1].clone();
                let den = points[i].0.clone() - points[i - level].0.clone();
                dd[i] = num / den;
            }
        }
        // Nested form: dd[0] + (x-x0)(dd[1] + (x-x1)(dd[2] + ...)).
        let mut acc = Self::constant(dd[n - 1].clone());
        for i in (0..n - 1).rev() {
            acc = acc.mul_linear(&-points[i].0.clone()) + Self::constant(dd[i].clone());
        }
        Ok(acc)
    }

    /// Interpolates values given at the consecutive nodes `0, 1, ..., len-1`.
    pub fn interpolate_at_naturals(values: &[T]) -> Result<Self> {
        let pts: Vec<(T, T)> = values
            .iter()
            .enumerate()
            .map(|(k, v)| (T::from_int(k as i64), v.clone()))
            .collect();
        Self::interpolate(&pts)
    }

    /// The binomial polynomial `x(x-1)...(x-k+1)/k!`.
    pub fn binomial(k: usize) -> Self {
        let mut p = Self::one();
        let mut fact = T::one();
        for i in 0..k {
            p = p.mul_linear(&-T::from_int(i as i64));
            fact = fact * T::from_int(i as i64 + 1);
        }
        p.scale(&(T::one() / fact))
    }

    /// Makes the polynomial monic; returns the leading coefficient removed.
    pub fn monic(&self) -> Option<(T, Self)> {
        let lc = self.leading_coeff()?.clone();
        Some((lc.clone(), self.scale(&(T::one() / lc))))
    }
}

impl<T: Field + ExactSqrt> Poly<T> {
    /// The square root with positive leading coefficient, if `self` is a
    /// square in the polynomial ring.
    pub fn sqrt(&self) -> Result<Self> {
        let Some(deg) = self.degree() else {
            return Ok(Self::zero());
        };
        if deg % 2 == 1 {
            return Err(Error::NotASquare);
        }
        let half = deg / 2;
        let lead = self.coeffs[deg].exact_sqrt().ok_or(Error::NotASquare)?;
        let two_lead = lead.clone() + lead.clone();
        let mut root = vec![T::zero(); half + 1];
        root[half] = lead;
        // Match coefficients of x^{half+k} for k = half-1 down to 0.
        for k in (0..half).rev() {
            let target = half + k;
            let mut known = T::zero();
            for i in (k + 1)..=half {
                let j = target - i;
                if j > k && j <= half {
                    known = known + root[i].clone() * root[j].clone();
                }
            }
            root[k] = (self.coeffs[target].clone() - known) / two_lead.clone();
        }
        let root = Self::from_coeffs(root);
        if &(&root * &root) == self {
            Ok(root)
        } else {
            Err(Error::NotASquare)
        }
    }
}

impl Poly<BigRational> {
    /// The integer polynomial `d·p` and the least common denominator `d`.
    pub fn integer_parts(&self) -> (Poly<BigInt>, BigInt) {
        let d = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let num = self.coeffs.iter().map(|c| c.numer() * (&d / c.denom())).collect();
        (Poly::from_coeffs(num), d)
    }

    /// Values at integer points, evaluated over the integers.
    pub fn eval_at_integers(&self, xs: impl IntoIterator<Item = i64>) -> Vec<BigRational> {
        let (num, d) = self.integer_parts();
        xs.into_iter()
            .map(|x| BigRational::new(num.eval(&BigInt::from(x)), d.clone()))
            .collect()
    }

    /// The same polynomial as [`Poly::interpolate_at_naturals`], built from
    /// forward differences over the integers.
    pub fn from_natural_values(values: &[BigRational]) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::NoPoints);
        }
        let d = values.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
        let mut diffs: Vec<BigInt> = values.iter().map(|v| v.numer() * (&d / v.denom())).collect();
        let top = diffs.len() - 1;
        let mut heads = Vec::with_capacity(top + 1);
        for level in 0..=top {
            heads.push(diffs[0].clone());
            for i in 0..top - level {
                diffs[i] = &diffs[i + 1] - &diffs[i];
            }
        }
        // Σ Δ^k · [x k] = (1/top!) Σ Δ^k (top!/k!) x(x-1)...(x-k+1), nested.
        let mut ratio = BigInt::one();
        let mut acc = Poly::constant(heads[top].clone());
        for k in (0..top).rev() {
            ratio *= k + 1;
            acc = acc.mul_linear(&BigInt::from(-(k as i64))) + Poly::constant(&heads[k] * &ratio);
        }
        let den = d * ratio;
        Ok(Self::from_coeffs(
            acc.coeffs.into_iter().map(|c| BigRational::new(c, den.clone())).collect(),
        ))
    }
}

/// The binomial polynomial `[x choose k]` over the rationals.
pub fn binom_poly(k: usize) -> crate::QPoly {
    Poly::binomial(k)
}

impl<T: Scalar> fmt::Display for Poly<T> {
    /// Canonical golden form: coefficients low to high, comma separated.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(", "))
    }
}

impl<T: Scalar> Add<&Poly<T>> for &Poly<T> {
    type Output = Poly<T>;
    fn add(self, rhs: &Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<T: Scalar> Sub<&Poly<T>> for &Poly<T> {
    type Output = Poly<T>;
    fn sub(self, rhs: &Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<T: Scalar> Mul<&Poly<T>> for &Poly<T> {
    type Output = Poly<T>;
    fn mul(self, rhs: &Poly<T>) -> Poly<T> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::from_coeffs(out)
    }
}

impl<T: Scalar> Neg for &Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        self.map(|c| -c.clone())
    }
}

impl<T: Scalar> Neg for Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        -&self
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl<T: Scalar> $tr<Poly<T>> for Poly<T> {
            type Output = Poly<T>;
            fn $m(self, rhs: Poly<T>) -> Poly<T> { (&self).$m(&rhs) }
        }
        impl<T: Scalar> $tr<&Poly<T>> for Poly<T> {
            type Output = Poly<T>;
            fn $m(self, rhs: &Poly<T>) -> Poly<T> { (&self).$m(rhs) }
        }
        impl<T: Scalar> $tr<Poly<T>> for &Poly<T> {
            type Output = Poly<T>;
            fn $m(self, rhs: Poly<T>) -> Poly<T> { self.$m(&rhs) }
        }
    )*};
}

forward_owned!(Add::add, Sub::sub, Mul::mul);

impl<T: Scalar> std::iter::Sum for Poly<T> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, p| acc + p)
    }
}
