//! The Riordan group: pairs `(g, f)`, their lower-triangular realizations
//! `t_{n,k} = [xⁿ] g·fᵏ`, the group law, the action `(g, f)·h = g·h(f)`,
//! and production matrices.

use crate::error::{Error, Result};
use crate::matrix::{HessenbergMatrix, LowerTriangular, Matrix};
use crate::ring::Ring;
use crate::series::{PowerSeries, RationalGf};

/// A Riordan array `(g, f)` stored as truncated series of equal order.
///
/// Invariants: `g(0) ≠ 0`, `f(0) = 0`, `f'(0) ≠ 0`.
#[derive(Clone, PartialEq, Debug)]
pub struct RiordanPair<R> {
    g: PowerSeries<R>,
    f: PowerSeries<R>,
}

impl<R: Ring> RiordanPair<R> {
    pub fn new(g: PowerSeries<R>, f: PowerSeries<R>) -> Result<Self> {
        if g.order() != f.order() {
            return Err(Error::OrderMismatch { left: g.order(), right: f.order() });
        }
        if g.coeff(0).is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        if !f.coeff(0).is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        if f.order() == 0 || f.coeff(1).is_zero() {
            return Err(Error::InvalidParameter("f'(0) must be nonzero".into()));
        }
        Ok(Self { g, f })
    }

    /// Pair from two rational generating functions expanded to `order`.
    pub fn from_gfs(g: &RationalGf<R>, f: &RationalGf<R>, order: usize) -> Result<Self> {
        Self::new(g.expand(order)?, f.expand(order)?)
    }

    /// The group identity `(1, x)`.
    pub fn identity(order: usize) -> Self {
        Self { g: PowerSeries::one(order), f: PowerSeries::x(order) }
    }

    /// Pascal's triangle `(1/(1−x), x/(1−x))`.
    pub fn pascal(order: usize) -> Self {
        let g = PowerSeries::from_coeffs(vec![R::one(); order + 1], order);
        let f = g.mul_x_pow(1);
        Self { g, f }
    }

    /// `M = (1/(1+x), x/(1+x)²)`, entries `(−1)^{n−k} C(n+k, 2k)`.
    pub fn ballot(order: usize) -> Self {
        let one_plus_x = PowerSeries::from_i64(&[1, 1], order);
        let g = one_plus_x.inverse().expect("unit constant term");
        let f = PowerSeries::x(order).mul(&g.mul(&g).expect("same order")).expect("same order");
        Self { g, f }
    }

    /// `M̃ = (1/(1+x)², x/(1+x)²)`, entries `(−1)^{n−k} C(n+k+1, 2k+1)`.
    pub fn ballot_tilde(order: usize) -> Self {
        let m = Self::ballot(order);
        let g = m.g.mul(&m.g).expect("same order");
        Self { g, f: m.f }
    }

    pub fn g(&self) -> &PowerSeries<R> {
        &self.g
    }

    pub fn f(&self) -> &PowerSeries<R> {
        &self.f
    }

    pub fn order(&self) -> usize {
        self.g.order()
    }

    /// Entry `t_{n,k} = [xⁿ] g·fᵏ`; zero above the diagonal.
    pub fn entry(&self, n: usize, k: usize) -> Result<R> {
        let order = self.order();
        if n > order || k > order {
            return Err(Error::IndexOutOfRange { n, k, order });
        }
        if k > n {
            return Ok(R::zero());
        }
        let col = self.g.mul(&self.f.pow(k as u32))?;
        Ok(col.coeff(n).clone())
    }

    /// The leading `size × size` block of the matrix realization.
    pub fn matrix(&self, size: usize) -> Result<LowerTriangular<R>> {
        let order = self.order();
        if size > order + 1 {
            return Err(Error::IndexOutOfRange { n: size - 1, k: 0, order });
        }
        let mut m = Matrix::zeros(size, size);
        let mut col = self.g.clone();
        for k in 0..size {
            for n in k..size {
                m.set(n, k, col.coeff(n).clone());
            }
            col = col.mul(&self.f)?;
        }
        LowerTriangular::new(m)
    }

    /// Group product `(g, f)·(u, v) = (g·u(f), v(f))`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch { left: self.order(), right: other.order() });
        }
        let g = self.g.mul(&other.g.compose(&self.f)?)?;
        let f = other.f.compose(&self.f)?;
        Self::new(g, f)
    }

    /// Group inverse `(1/g(f̄), f̄)` with `f̄` the compositional inverse of `f`.
    pub fn inverse(&self) -> Result<Self> {
        let fbar = self.f.revert()?;
        let g = self.g.compose(&fbar)?.inverse()?;
        Self::new(g, fbar)
    }

    /// The action `(g, f)·h = g·h(f)`.
    pub fn apply(&self, h: &PowerSeries<R>) -> Result<PowerSeries<R>> {
        self.g.mul(&h.compose(&self.f)?)
    }
}

/// `P_L = L⁻¹ L̄`, where `L̄` is `L` with its first row removed, computed by
/// forward substitution on `L · P = L̄`. For an `n × n` input the result is
/// the exact `(n−1) × (n−1)` leading block of the production matrix.
///
/// Divisions by the diagonal of `L` must be exact in the coefficient ring;
/// use rational coefficients when they are not.
pub fn production_matrix<R: Ring>(l: &LowerTriangular<R>) -> Result<HessenbergMatrix<R>> {
    let n = l.size();
    if n < 2 {
        return Err(Error::SizeMismatch("production matrix needs at least 2 rows".into()));
    }
    let m = n - 1;
    let mut p = Matrix::zeros(m, m);
    for k in 0..m {
        let d = l.get(k, k);
        if d.is_zero() {
            return Err(Error::SingularMatrix);
        }
        for j in 0..m {
            let mut acc = l.get(k + 1, j).clone();
            for i in 0..k {
                acc = acc.sub(&l.get(k, i).mul(p.get(i, j)));
            }
            let v = acc
                .exact_div(d)
                .ok_or_else(|| Error::InexactDivision { dividend: acc.to_string(), divisor: d.to_string() })?;
            p.set(k, j, v);
        }
    }
    HessenbergMatrix::new(p)
}

/// Rebuilds the first `n` rows of the lower-triangular matrix generated by
/// `P`: row 0 is `(1, 0, …)` and `row_{i+1} = row_i · P`. Needs `n ≤ size(P)`.
pub fn matrix_from_production<R: Ring>(p: &HessenbergMatrix<R>, n: usize) -> Result<LowerTriangular<R>> {
    if n > p.size() {
        return Err(Error::SizeMismatch(format!(
            "{n} rows requested from a {}x{} production matrix",
            p.size(),
            p.size()
        )));
    }
    if let Some(i) = (0..n.saturating_sub(1)).find(|&i| p.get(i, i + 1).is_zero()) {
        return Err(Error::ZeroSuperdiagonal(i));
    }
    let mut l = Matrix::zeros(n, n);
    if n == 0 {
        return LowerTriangular::new(l);
    }
    l.set(0, 0, R::one());
    for i in 0..n - 1 {
        for j in 0..=i + 1 {
            let mut acc = R::zero();
            for k in 0..=i {
                acc = acc.add(&l.get(i, k).mul(p.get(k, j)));
            }
            l.set(i + 1, j, acc);
        }
    }
    LowerTriangular::new(l)
}

/// Divides column `k` by `sᵏ`; each division must be exact.
pub fn column_rescale<R: Ring>(l: &LowerTriangular<R>, s: &R) -> Result<LowerTriangular<R>> {
    let n = l.size();
    let mut m = l.matrix().clone();
    let mut scale = R::one();
    for k in 0..n {
        for i in k..n {
            let x = l.get(i, k);
            let v = x
                .exact_div(&scale)
                .ok_or_else(|| Error::InexactDivision { dividend: x.to_string(), divisor: scale.to_string() })?;
            m.set(i, k, v);
        }
        scale = scale.mul(s);
    }
    LowerTriangular::new(m)
}


#[cfg(test)]
mod props {
    use super::*;
    use crate::ring::Integer;
    use proptest::prelude::*;

    const ORDER: usize = 6;
    type S = PowerSeries<Integer>;

    fn arb_pair() -> impl Strategy<Value = RiordanPair<Integer>> {
        (
            proptest::collection::vec(-3i64..4, ORDER),
            proptest::bool::ANY,
            proptest::collection::vec(-3i64..4, ORDER - 1),
        )
            .prop_map(|(g_tail, neg, f_tail)| {
                let mut g = vec![1];
                g.extend(g_tail);
                let mut f = vec![0, if neg { -1 } else { 1 }];
                f.extend(f_tail);
                RiordanPair::new(S::from_i64(&g, ORDER), S::from_i64(&f, ORDER)).unwrap()
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn associativity(x in arb_pair(), y in arb_pair(), z in arb_pair()) {
            prop_assert_eq!(x.mul(&y).unwrap().mul(&z).unwrap(), x.mul(&y.mul(&z).unwrap()).unwrap());
        }

        #[test]
        fn inverse_law(x in arb_pair()) {
            prop_assert_eq!(x.mul(&x.inverse().unwrap()).unwrap(), RiordanPair::identity(ORDER));
            let inv_matrix = x.inverse().unwrap().matrix(ORDER + 1).unwrap();
            prop_assert_eq!(inv_matrix, x.matrix(ORDER + 1).unwrap().inverse().unwrap());
        }

        #[test]
        fn realization_is_homomorphism(x in arb_pair(), y in arb_pair()) {
            let lhs = x.mul(&y).unwrap().matrix(ORDER + 1).unwrap();
            let rhs = x.matrix(ORDER + 1).unwrap().mul(&y.matrix(ORDER + 1).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn action_matches_matrix(x in arb_pair(), h in proptest::collection::vec(-5i64..5, ORDER + 1)) {
            let h = S::from_i64(&h, ORDER);
            let via_matrix = x.matrix(ORDER + 1).unwrap().matrix().mul_vec(h.coeffs()).unwrap();
            prop_assert_eq!(x.apply(&h).unwrap().into_coeffs(), via_matrix);
        }

        #[test]
        fn production_roundtrip(x in arb_pair()) {
            // unit diagonal needs f1 = 1 and g0 = 1
            prop_assume!(x.f().coeff(1) == &Integer::from(1));
            let l = x.matrix(ORDER + 1).unwrap();
            let p = production_matrix(&l).unwrap();
            prop_assert_eq!(matrix_from_production(&p, ORDER).unwrap(), l.leading(ORDER));
        }
    }
}
