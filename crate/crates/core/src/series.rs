//! Truncated formal power series over a [`Ring`], univariate polynomials,
//! rational generating functions and numerator fitting.
//!
//! Every series carries its truncation order `N` explicitly (it stores
//! exactly `N + 1` coefficients). Binary operations demand equal orders;
//! nothing is ever silently extended.

use std::fmt;

use crate::error::{Error, Result};
use crate::ring::Ring;

/// Dense univariate polynomial in `x`; `coeffs[i]` is the coefficient of `x^i`.
/// Trailing zeros are trimmed.
#[derive(Clone, PartialEq, Debug)]
pub struct Polynomial<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> Polynomial<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(Ring::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| R::from_i64(c)).collect())
    }

    pub fn one() -> Self {
        Self::new(vec![R::one()])
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> R {
        self.coeffs.get(i).cloned().unwrap_or_else(R::zero)
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Self::new(Vec::new());
        }
        let mut out = vec![R::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, x) in self.coeffs.iter().enumerate() {
            for (j, y) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&x.mul(y));
            }
        }
        Self::new(out)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// Truncated series view of this polynomial.
    pub fn to_series(&self, order: usize) -> PowerSeries<R> {
        PowerSeries::from_coeffs(self.coeffs.clone(), order)
    }
}

impl<R: Ring> fmt::Display for Polynomial<R> {
    /// Renders as e.g. `1 + 7*x - 7*x^3 - x^4`; compound coefficients are
    /// parenthesized: `1 - (a + 2*b)*x + b^2*x^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.to_string().starts_with('-');
            let shown = if neg { c.neg() } else { c.clone() };
            let body = shown.to_string();
            let body_is_compound = shown.is_compound();
            match (first, neg) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            if i == 0 {
                f.write_str(&body)?;
                continue;
            }
            if body != "1" {
                if body_is_compound {
                    write!(f, "({body})*")?;
                } else {
                    write!(f, "{body}*")?;
                }
            }
            if i == 1 {
                f.write_str("x")?;
            } else {
                write!(f, "x^{i}")?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Truncated power series `c_0 + c_1 x + … + c_N x^N`.
#[derive(Clone, PartialEq, Debug)]
pub struct PowerSeries<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> PowerSeries<R> {
    /// Series of truncation order `order`; `coeffs` is padded with zeros or
    /// truncated to exactly `order + 1` entries.
    pub fn from_coeffs(mut coeffs: Vec<R>, order: usize) -> Self {
        coeffs.resize(order + 1, R::zero());
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64], order: usize) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| R::from_i64(c)).collect(), order)
    }

    pub fn zero(order: usize) -> Self {
        Self::from_coeffs(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::constant(R::one(), order)
    }

    pub fn constant(c: R, order: usize) -> Self {
        Self::from_coeffs(vec![c], order)
    }

    /// The series `x`.
    pub fn x(order: usize) -> Self {
        Self::from_coeffs(vec![R::zero(), R::one()], order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &R {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::from_coeffs(self.coeffs[..=order.min(self.order())].to_vec(), order)
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order() == other.order() {
            Ok(())
        } else {
            Err(Error::OrderMismatch { left: self.order(), right: other.order() })
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(Self { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(x, y)| x.add(y)).collect() })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(Self { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(x, y)| x.sub(y)).collect() })
    }

    pub fn neg(&self) -> Self {
        Self { coeffs: self.coeffs.iter().map(Ring::neg).collect() }
    }

    pub fn scale(&self, s: &R) -> Self {
        Self { coeffs: self.coeffs.iter().map(|c| c.mul(s)).collect() }
    }

    /// Cauchy product truncated at the common order.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        let n = self.order();
        let mut out = vec![R::zero(); n + 1];
        for (i, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in other.coeffs[..=n - i].iter().enumerate() {
                out[i + j] = out[i + j].add(&x.mul(y));
            }
        }
        Self { coeffs: out }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(self.order()), |acc, _| acc.mul_unchecked(self))
    }

    /// Multiplicative inverse; the constant term must divide every
    /// intermediate coefficient exactly (always true over a field, or when
    /// it is a unit).
    pub fn inverse(&self) -> Result<Self> {
        let f0 = &self.coeffs[0];
        if f0.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let not_inv = || Error::NotInvertible(f0.to_string());
        let n = self.order();
        let mut g: Vec<R> = Vec::with_capacity(n + 1);
        g.push(R::one().exact_div(f0).ok_or_else(not_inv)?);
        for k in 1..=n {
            let mut acc = R::zero();
            for j in 1..=k {
                acc = acc.add(&self.coeffs[j].mul(&g[k - j]));
            }
            g.push(acc.neg().exact_div(f0).ok_or_else(not_inv)?);
        }
        Ok(Self { coeffs: g })
    }

    /// Exact quotient `self / other`.
    pub fn div(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(self.mul_unchecked(&other.inverse()?))
    }

    /// `self(inner(x))`; `inner` must have zero constant term.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        self.check_order(inner)?;
        if !inner.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        // Horner: g0 + f(g1 + f(g2 + …))
        let n = self.order();
        let mut acc = Self::zero(n);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul_unchecked(inner);
            acc.coeffs[0] = acc.coeffs[0].add(c);
        }
        Ok(acc)
    }

    /// Formal derivative, kept at the same order (top coefficient becomes 0).
    pub fn derivative(&self) -> Self {
        let n = self.order();
        let coeffs = (1..=n).map(|i| self.coeffs[i].mul(&R::from_i64(i as i64))).collect();
        Self::from_coeffs(coeffs, n)
    }

    /// Compositional inverse `g` with `self(g(x)) = x`, by Newton iteration
    /// `g ← g − (f(g) − x) / f'(g)`.
    pub fn revert(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let n = self.order();
        let x = Self::x(n);
        if n == 0 {
            return Ok(Self::zero(0));
        }
        let f1 = &self.coeffs[1];
        if f1.is_zero() {
            return Err(Error::NotInvertible(f1.to_string()));
        }
        let inv_f1 = R::one().exact_div(f1).ok_or_else(|| Error::NotInvertible(f1.to_string()))?;
        let deriv = self.derivative();
        let mut g = x.scale(&inv_f1);
        // correct terms double each step: 1, 2, 4, …
        let mut correct = 1usize;
        while correct < n {
            let residual = self.compose(&g)?.sub(&x)?;
            let slope = deriv.compose(&g)?;
            g = g.sub(&residual.div(&slope)?)?;
            correct *= 2;
        }
        if self.compose(&g)? != x {
            return Err(Error::NotInvertible(f1.to_string()));
        }
        Ok(g)
    }

    /// Divides by `x^k`, dropping the first `k` coefficients (which must be
    /// zero) and lowering the order by `k`.
    pub fn div_x_pow(&self, k: usize) -> Result<Self> {
        if k > self.order() {
            return Err(Error::InsufficientTerms { needed: k + 1, available: self.coeffs.len() });
        }
        if let Some(i) = self.coeffs[..k].iter().position(|c| !c.is_zero()) {
            return Err(Error::InexactDivision {
                dividend: format!("series with nonzero x^{i} term"),
                divisor: format!("x^{k}"),
            });
        }
        Ok(Self { coeffs: self.coeffs[k..].to_vec() })
    }

    /// Multiplies by `x^k` at the same order.
    pub fn mul_x_pow(&self, k: usize) -> Self {
        let n = self.order();
        let mut coeffs = vec![R::zero(); k.min(n + 1)];
        coeffs.extend(self.coeffs.iter().take((n + 1).saturating_sub(k)).cloned());
        Self { coeffs }
    }
}

impl<R: Ring> fmt::Display for PowerSeries<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + O(x^{})", Polynomial::new(self.coeffs.clone()), self.order() + 1)
    }
}

/// A generating function `numerator / denominator` with `denominator(0) != 0`.
#[derive(Clone, PartialEq, Debug)]
pub struct RationalGf<R> {
    pub numerator: Polynomial<R>,
    pub denominator: Polynomial<R>,
}

impl<R: Ring> RationalGf<R> {
    pub fn new(numerator: Polynomial<R>, denominator: Polynomial<R>) -> Result<Self> {
        if denominator.coeff(0).is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        Ok(Self { numerator, denominator })
    }

    /// First `count + 1` Taylor coefficients, via the recurrence induced by
    /// the denominator.
    pub fn expand(&self, count: usize) -> Result<PowerSeries<R>> {
        let q0 = self.denominator.coeff(0);
        let q = self.denominator.coeffs();
        let mut out: Vec<R> = Vec::with_capacity(count + 1);
        for n in 0..=count {
            let mut acc = self.numerator.coeff(n);
            for (j, qj) in q.iter().enumerate().skip(1).take(n) {
                acc = acc.sub(&qj.mul(&out[n - j]));
            }
            let c = acc.exact_div(&q0).ok_or_else(|| Error::NotInvertible(q0.to_string()))?;
            out.push(c);
        }
        Ok(PowerSeries::from_coeffs(out, count))
    }
}

impl<R: Ring> fmt::Display for RationalGf<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.numerator, self.denominator)
    }
}

/// Recovers the numerator `p` (degree ≤ `max_degree`) with
/// `p / denominator = seq` on every supplied term. Fails with
/// [`Error::NoFit`] if the product `seq · denominator` has a nonzero
/// coefficient beyond `max_degree` within the known horizon.
pub fn fit_rational_gf<R: Ring>(
    seq: &PowerSeries<R>,
    denominator: &Polynomial<R>,
    max_degree: usize,
) -> Result<Polynomial<R>> {
    if seq.order() < max_degree {
        return Err(Error::InsufficientTerms { needed: max_degree + 1, available: seq.order() + 1 });
    }
    let product = seq.mul_unchecked(&denominator.to_series(seq.order()));
    if let Some(index) = (max_degree + 1..=seq.order()).find(|&i| !product.coeff(i).is_zero()) {
        return Err(Error::NoFit { index, residual: product.coeff(index).to_string() });
    }
    Ok(Polynomial::new(product.coeffs[..=max_degree].to_vec()))
}


#[cfg(test)]
mod props {
    use super::*;
    use crate::ring::Integer;
    use proptest::prelude::*;

    type S = PowerSeries<Integer>;

    fn arb_series(order: usize, unit_const: bool) -> impl Strategy<Value = S> {
        proptest::collection::vec(-5i64..5, order + 1).prop_map(move |mut v| {
            if unit_const {
                v[0] = 1;
            }
            S::from_i64(&v, order)
        })
    }

    fn arb_revertible(order: usize) -> impl Strategy<Value = S> {
        (proptest::bool::ANY, proptest::collection::vec(-4i64..4, order - 1)).prop_map(move |(neg, rest)| {
            let mut v = vec![0, if neg { -1 } else { 1 }];
            v.extend(rest);
            S::from_i64(&v, order)
        })
    }

    proptest! {
        #[test]
        fn inverse_roundtrip(f in arb_series(9, true)) {
            prop_assert_eq!(f.mul(&f.inverse().unwrap()).unwrap(), S::one(9));
        }

        #[test]
        fn compose_revert_roundtrip(f in arb_revertible(9)) {
            let g = f.revert().unwrap();
            prop_assert_eq!(f.compose(&g).unwrap(), S::x(9));
            prop_assert_eq!(g.compose(&f).unwrap(), S::x(9));
        }

        #[test]
        fn expansion_satisfies_denominator_recurrence(
            num in proptest::collection::vec(-5i64..5, 1..4),
            tail in proptest::collection::vec(-3i64..3, 1..4),
        ) {
            let mut den = vec![1i64];
            den.extend(tail);
            let p = Polynomial::<Integer>::from_i64(&num);
            let q = Polynomial::<Integer>::from_i64(&den);
            let c = RationalGf::new(p, q.clone()).unwrap().expand(12).unwrap();
            for n in num.len()..=12 {
                let mut acc = Integer::from(0);
                for (j, qj) in q.coeffs().iter().enumerate().take(n + 1) {
                    acc += qj * c.coeff(n - j);
                }
                prop_assert_eq!(acc, Integer::from(0));
            }
        }
    }

    #[test]
    fn catalan_functional_equation() {
        let n = 15;
        let mut cat = vec![Integer::from(1)];
        for k in 0..n {
            let next = cat[k].clone() * Integer::from(2 * (2 * k as i64 + 1)) / Integer::from(k as i64 + 2);
            cat.push(next);
        }
        let c = S::from_coeffs(cat, n);
        let lhs = S::one(n).add(&S::x(n).mul(&c.mul(&c).unwrap()).unwrap()).unwrap();
        assert_eq!(lhs, c);
    }
}
