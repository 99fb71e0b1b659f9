//! Sparse polynomials in ℤ[a, b].

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::ring::{Integer, Rational};

/// Exponent pair `(i, j)` for the monomial `a^i b^j`.
pub type Exponent = (u32, u32);

/// A polynomial in the two indeterminates `a` and `b` with integer
/// coefficients. No zero coefficient is ever stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BivarPoly {
    terms: BTreeMap<Exponent, Integer>,
}

impl BivarPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: impl Into<Integer>) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial(c: impl Into<Integer>, i: u32, j: u32) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((i, j), c);
        }
        Self { terms }
    }

    pub fn a() -> Self {
        Self::monomial(1, 1, 0)
    }

    pub fn b() -> Self {
        Self::monomial(1, 0, 1)
    }

    /// `ca·a + cb·b`.
    pub fn linear(ca: impl Into<Integer>, cb: impl Into<Integer>) -> Self {
        &Self::monomial(ca, 1, 0) + &Self::monomial(cb, 0, 1)
    }

    pub fn coeff(&self, i: u32, j: u32) -> Integer {
        self.terms.get(&(i, j)).cloned().unwrap_or_default()
    }

    /// Terms in canonical order: descending `a`-degree, then descending `b`-degree.
    pub fn terms(&self) -> impl Iterator<Item = (Exponent, &Integer)> {
        self.terms.iter().rev().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|(i, j)| i + j).max()
    }

    /// True when every term has total degree `deg` (the zero polynomial qualifies).
    pub fn is_homogeneous(&self, deg: u32) -> bool {
        self.terms.keys().all(|(i, j)| i + j == deg)
    }

    fn add_term(&mut self, e: Exponent, c: Integer) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(Integer::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    fn leading(&self) -> Option<(Exponent, &Integer)> {
        self.terms.iter().next_back().map(|(e, c)| (*e, c))
    }

    /// Exact evaluation at `(a, b) = (va, vb)`.
    pub fn eval(&self, va: &Rational, vb: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for (&(i, j), c) in &self.terms {
            let term = Rational::from_integer(c.clone())
                * num_traits::pow(va.clone(), i as usize)
                * num_traits::pow(vb.clone(), j as usize);
            acc += term;
        }
        acc
    }

    /// Polynomial quotient when `divisor` divides `self` exactly.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        let ((di, dj), dc) = divisor.leading()?;
        let dc = dc.clone();
        let mut rem = self.clone();
        let mut quotient = BivarPoly::zero();
        while let Some(((i, j), c)) = rem.leading() {
            if i < di || j < dj {
                return None;
            }
            let (q, r) = c.div_rem(&dc);
            if !r.is_zero() {
                return None;
            }
            let t = BivarPoly::monomial(q, i - di, j - dj);
            rem = &rem - &(&t * divisor);
            quotient = &quotient + &t;
        }
        Some(quotient)
    }

    pub fn pow(&self, e: u32) -> Self {
        <Self as crate::ring::Ring>::pow(self, e)
    }
}

impl Add for &BivarPoly {
    type Output = BivarPoly;
    fn add(self, rhs: &BivarPoly) -> BivarPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &BivarPoly {
    type Output = BivarPoly;
    fn sub(self, rhs: &BivarPoly) -> BivarPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, -c);
        }
        out
    }
}

impl Mul for &BivarPoly {
    type Output = BivarPoly;
    fn mul(self, rhs: &BivarPoly) -> BivarPoly {
        let mut out = BivarPoly::zero();
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &rhs.terms {
                out.add_term((i1 + i2, j1 + j2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &BivarPoly {
    type Output = BivarPoly;
    fn neg(self) -> BivarPoly {
        BivarPoly { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for BivarPoly {
            type Output = BivarPoly;
            fn $m(self, rhs: BivarPoly) -> BivarPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for BivarPoly {
    type Output = BivarPoly;
    fn neg(self) -> BivarPoly {
        -&self
    }
}

impl From<i64> for BivarPoly {
    fn from(c: i64) -> Self {
        BivarPoly::constant(c)
    }
}

impl crate::ring::Ring for BivarPoly {
    fn zero() -> Self {
        BivarPoly::zero()
    }
    fn one() -> Self {
        BivarPoly::constant(1)
    }
    fn from_integer(v: &Integer) -> Self {
        BivarPoly::constant(v.clone())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn exact_div(&self, divisor: &Self) -> Option<Self> {
        BivarPoly::exact_div(self, divisor)
    }
    fn is_compound(&self) -> bool {
        self.terms.len() > 1 || self.terms.values().any(|c| c.is_negative())
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, i: u32, j: u32) -> fmt::Result {
    let mut first = true;
    for (var, e) in [("a", i), ("b", j)] {
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        f.write_str(var)?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

impl fmt::Display for BivarPoly {
    /// Canonical form, e.g. `a^2 + 4*a*b + 4*b^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, ((i, j), c)) in self.terms().enumerate() {
            let mag = c.abs();
            match (n, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if i + j == 0 {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                write_monomial(f, i, j)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for BivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BivarPoly({self})")
    }
}

impl FromStr for BivarPoly {
    type Err = Error;

    /// Accepts sums of terms such as `a^2 + 4*a*b - 3b^2`, `2a+5b` or `7`.
    /// Multiplication signs between a coefficient and variables are optional.
    fn from_str(s: &str) -> Result<Self, Error> {
        let src: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        if src.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let err = |msg: &str| Error::Parse(format!("{msg} in `{s}`"));
        let mut out = BivarPoly::zero();
        let mut pos = 0;
        while pos < src.len() {
            let mut sign = Integer::one();
            while pos < src.len() && (src[pos] == '+' || src[pos] == '-') {
                if src[pos] == '-' {
                    sign = -sign;
                }
                pos += 1;
            }
            let start = pos;
            while pos < src.len() && src[pos].is_ascii_digit() {
                pos += 1;
            }
            let coeff: Integer = if pos > start {
                src[start..pos].iter().collect::<String>().parse().map_err(|_| err("bad coefficient"))?
            } else {
                Integer::one()
            };
            let mut exps = [0u32; 2];
            let mut saw_var = false;
            loop {
                if pos < src.len() && src[pos] == '*' {
                    pos += 1;
                }
                let var = match src.get(pos) {
                    Some('a') => 0,
                    Some('b') => 1,
                    _ => break,
                };
                saw_var = true;
                pos += 1;
                let mut e = 1u32;
                if src.get(pos) == Some(&'^') {
                    pos += 1;
                    let st = pos;
                    while pos < src.len() && src[pos].is_ascii_digit() {
                        pos += 1;
                    }
                    e = src[st..pos].iter().collect::<String>().parse().map_err(|_| err("bad exponent"))?;
                }
                exps[var] += e;
            }
            if pos == start && !saw_var {
                return Err(err("expected a term"));
            }
            out.add_term((exps[0], exps[1]), sign * coeff);
            if pos < src.len() && src[pos] != '+' && src[pos] != '-' {
                return Err(err("unexpected character"));
            }
        }
        Ok(out)
    }
}
