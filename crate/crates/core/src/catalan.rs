//! Catalan-number families, the closed forms for their Hankel transforms,
//! the conjectured coefficient array `T(n, k, m)`, and the banded "spine"
//! matrices that the conjugated Hankel matrices settle into.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::hankel::{conjugate_and_bands, hankel_matrix, hankel_transform, Conjugated};
use crate::matrix::Matrix;
use crate::poly::BivarPoly;
use crate::report::{Case, ConjectureReport};
use crate::ring::{Integer, Rational, Ring};
use crate::riordan::RiordanPair;

/// `C_0 ..= C_{n_max}`.
pub fn catalan_seq(n_max: usize) -> Vec<Integer> {
    let mut out = Vec::with_capacity(n_max + 1);
    let mut c = Integer::one();
    for n in 0..=n_max {
        out.push(c.clone());
        c = c * Integer::from(2 * (2 * n + 1)) / Integer::from(n + 2);
    }
    out
}

pub fn catalan(n: usize) -> Integer {
    catalan_seq(n).pop().expect("nonempty")
}

/// Binomial coefficient, zero for `k < 0` and for `0 ≤ n < k`. A negative
/// upper index uses the falling-factorial extension.
pub fn binomial(n: i64, k: i64) -> Integer {
    if k < 0 || (n >= 0 && k > n) {
        return Integer::zero();
    }
    let k = if n >= 0 { k.min(n - k) } else { k };
    let mut acc = Integer::one();
    for i in 0..k {
        acc = acc * Integer::from(n - i) / Integer::from(i + 1);
    }
    acc
}

/// `a·C_{n+m} + b·C_{n+m+1}` for `n = 0 ..= n_max`, in any ring.
pub fn combo_seq<R: Ring>(m: usize, a: &R, b: &R, n_max: usize) -> Vec<R> {
    let c = catalan_seq(n_max + m + 1);
    (0..=n_max).map(|n| a.mul(&R::from_integer(&c[n + m])).add(&b.mul(&R::from_integer(&c[n + m + 1])))).collect()
}

/// The symbolic family `a·C_{n+m} + b·C_{n+m+1}` over ℤ[a,b].
pub fn symbolic_combo(m: usize, n_max: usize) -> Vec<BivarPoly> {
    combo_seq(m, &BivarPoly::a(), &BivarPoly::b(), n_max)
}

#[derive(Clone, PartialEq, Debug)]
pub enum Family {
    Catalan,
    Shifted(usize),
    Combo { m: usize, a: Rational, b: Rational },
    Explicit(Vec<Rational>),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Coefficients {
    Numeric,
    /// `a` and `b` stay indeterminates; other families are lifted into ℤ[a,b].
    Symbolic,
}

#[derive(Clone, PartialEq, Debug)]
pub struct SequenceSpec {
    pub family: Family,
    pub coefficients: Coefficients,
}

impl SequenceSpec {
    pub fn numeric(family: Family) -> Self {
        Self { family, coefficients: Coefficients::Numeric }
    }

    pub fn symbolic(family: Family) -> Self {
        Self { family, coefficients: Coefficients::Symbolic }
    }

    /// Terms `s_0 ..= s_{n_max}` over ℚ.
    pub fn rational_terms(&self, n_max: usize) -> Result<Vec<Rational>> {
        if self.coefficients == Coefficients::Symbolic {
            if let Family::Combo { .. } = self.family {
                return Err(Error::InvalidParameter("symbolic family has no numeric terms".into()));
            }
        }
        let lift = |v: Vec<Integer>| v.into_iter().map(Rational::from_integer).collect();
        match &self.family {
            Family::Catalan => Ok(lift(catalan_seq(n_max))),
            Family::Shifted(m) => Ok(lift(catalan_seq(n_max + m)[*m..].to_vec())),
            Family::Combo { m, a, b } => Ok(combo_seq(*m, a, b, n_max)),
            Family::Explicit(v) => {
                if v.len() <= n_max {
                    return Err(Error::InsufficientTerms { needed: n_max + 1, available: v.len() });
                }
                Ok(v[..=n_max].to_vec())
            }
        }
    }

    /// Terms `s_0 ..= s_{n_max}` over ℤ[a,b].
    pub fn symbolic_terms(&self, n_max: usize) -> Result<Vec<BivarPoly>> {
        if let (Family::Combo { m, .. }, Coefficients::Symbolic) = (&self.family, self.coefficients) {
            return Ok(symbolic_combo(*m, n_max));
        }
        self.rational_terms(n_max)?
            .into_iter()
            .map(|q| {
                if q.is_integer() {
                    Ok(BivarPoly::constant(q.to_integer()))
                } else {
                    Err(Error::InvalidParameter(format!("{q} is not an integer")))
                }
            })
            .collect()
    }
}

/// `∏_{i=1}^{k−1} ∏_{j=1}^{i} (2n+2+i+j)/(i+j)`, the Hankel transform of
/// `C_{n+k}` at `n`.
pub fn eq_e1_product(n: usize, k: usize) -> Rational {
    let mut acc = Rational::one();
    for i in 1..k {
        for j in 1..=i {
            acc *= Rational::new(Integer::from(2 * n + 2 + i + j), Integer::from(i + j));
        }
    }
    debug_assert!(acc.is_integer());
    acc
}

/// The conjectured coefficient `T(n, k, m)`, evaluated literally: empty
/// products are 1 and binomials with a negative lower index vanish.
pub fn t_formula(n: usize, k: usize, m: usize) -> Result<Rational> {
    let (n, k, m) = (n as i64, k as i64, m as i64);
    let mut num = catalan(m as usize) * binomial(m + k - 2, m - 2) * binomial(n + k + 2 * m - 2, 2 * k + 2 * m - 3);
    let mut den: Vec<(String, Integer)> =
        vec![(format!("C({},{})", 2 * m - 2, 2 * m - 3), binomial(2 * m - 2, 2 * m - 3))];
    let top = (m - 1).div_euclid(2) - 1;
    for j in 0..=top {
        num *= binomial(2 * n + 2 * m - 2 * j - 1, 2 * m - 4 * j - 5);
        let (u, l) = (2 * m - 2 * j - 1, 2 * m - 4 * j - 5);
        den.push((format!("C({u},{l})"), binomial(u, l)));
    }
    for j in 0..=m - 3 {
        num *= Integer::from(2 * m - j - 2);
        let v = n + k + 2 * m - j - 2;
        den.push((format!("{v}"), Integer::from(v)));
    }
    if let Some((name, _)) = den.iter().find(|(_, v)| v.is_zero()) {
        return Err(Error::DivisionByZero(format!("{name} in T({n},{k},{m})")));
    }
    let d = den.into_iter().fold(Integer::one(), |acc, (_, v)| acc * v);
    Ok(Rational::new(num, d))
}

/// `Σ_k T(n, k, m) b^{n−k+1} a^k`.
pub fn t_polynomial(n: usize, m: usize) -> Result<BivarPoly> {
    let mut acc = BivarPoly::zero();
    for k in 0..=n + 1 {
        let t = t_formula(n, k, m)?;
        if !t.is_integer() {
            return Err(Error::InexactDivision { dividend: t.numer().to_string(), divisor: t.denom().to_string() });
        }
        acc = acc + BivarPoly::monomial(t.to_integer(), k as u32, (n + 1 - k) as u32);
    }
    Ok(acc)
}

/// Hankel transforms `h_0 ..= h_{n_max}` of `a·C_{n+m} + b·C_{n+m+1}` over ℤ[a,b].
pub fn hankel_polys(m: usize, n_max: usize) -> Vec<BivarPoly> {
    hankel_transform(&symbolic_combo(m, 2 * n_max), n_max).expect("enough terms")
}

pub fn hankel_poly(m: usize, n: usize) -> BivarPoly {
    hankel_polys(m, n).pop().expect("nonempty")
}

/// The binomial-sum closed form for shift `m ∈ {0, 1, 2}`.
pub fn binomial_sum(m: usize, n: usize) -> Result<BivarPoly> {
    let n_ = n as i64;
    let mut acc = BivarPoly::zero();
    for k in 0..=n_ + 1 {
        let coeff = match m {
            0 => Rational::from_integer(binomial(n_ + k + 1, 2 * k)),
            1 => Rational::from_integer(binomial(n_ + k + 2, 2 * k + 1)),
            2 => {
                Rational::new(Integer::from(2 * n_ + 5), Integer::from(n_ + k + 4))
                    * Rational::from_integer(binomial(n_ + k + 4, n_ - k + 1) * Integer::from(k + 1))
            }
            _ => return Err(Error::InvalidParameter(format!("no binomial-sum form for shift {m}"))),
        };
        if !coeff.is_integer() {
            return Err(Error::InexactDivision {
                dividend: coeff.numer().to_string(),
                divisor: coeff.denom().to_string(),
            });
        }
        acc = acc + BivarPoly::monomial(coeff.to_integer(), k as u32, (n_ + 1 - k) as u32);
    }
    Ok(acc)
}

fn t_cases(m: usize, n_max: usize, shift: usize) -> Vec<Case> {
    let h = hankel_polys(shift, n_max);
    (0..=n_max)
        .map(|n| {
            let label = format!("m={m} n={n}");
            match t_polynomial(n, m) {
                Ok(p) => Case::compare(label, &h[n], &p),
                Err(e) => Case::check(label, false, e.to_string()),
            }
        })
        .collect()
}

/// Checks `Σ_k T(n,k,m) b^{n−k+1} a^k` against the symbolic Hankel
/// transform for `2 ≤ m ≤ m_max`, `n ≤ n_max`, coefficientwise in ℤ[a,b].
///
/// The array reproduces the transform of `a·C_{n+m−1} + b·C_{n+m}`; its first
/// column is the transform of `C_{n+m}`. [`verify_t_unshifted`] tests the
/// other indexing. Also checks `T(n,0,m) = T(n,n+1,m+1)` for `m < m_max` and
/// `T(n,0,m) = ` [`eq_e1_product`]`(n, m)`.
pub fn verify_t(m_max: usize, n_max: usize) -> Result<ConjectureReport> {
    if m_max < 2 {
        return Err(Error::InvalidParameter("m_max must be at least 2".into()));
    }
    let cases: Vec<Case> = (2..=m_max).into_par_iter().flat_map_iter(|m| t_cases(m, n_max, m - 1)).collect();
    let ranges = format!("2<=m<={m_max}, 0<=n<={n_max}");
    let mut report = ConjectureReport::with_cases("conjecture-T", ranges, cases);
    for m in 2..=m_max {
        for n in 0..=n_max {
            let first = t_formula(n, 0, m)?;
            if m < m_max {
                report.push(Case::compare(
                    format!("T({n},0,{m}) = T({n},{},{})", n + 1, m + 1),
                    &first,
                    &t_formula(n, n + 1, m + 1)?,
                ));
            }
            report.push(Case::compare(format!("T({n},0,{m}) = E1({n},{m})"), &eq_e1_product(n, m), &first));
        }
    }
    Ok(report)
}

/// The same comparison against `a·C_{n+m} + b·C_{n+m+1}`.
pub fn verify_t_unshifted(m_max: usize, n_max: usize) -> Result<ConjectureReport> {
    if m_max < 2 {
        return Err(Error::InvalidParameter("m_max must be at least 2".into()));
    }
    let cases: Vec<Case> = (2..=m_max).into_par_iter().flat_map_iter(|m| t_cases(m, n_max, m)).collect();
    Ok(ConjectureReport::with_cases("conjecture-T-unshifted", format!("2<=m<={m_max}, 0<=n<={n_max}"), cases))
}

/// Band value at distance `d` of the shift-`r` spine:
/// `a·C(2r−2, r−d−1) + b·C(2r, r−d)`.
pub fn spine_band(r: usize, d: usize) -> BivarPoly {
    let (r, d) = (r as i64, d as i64);
    BivarPoly::linear(binomial(2 * r - 2, r - d - 1), binomial(2 * r, r - d))
}

/// The symmetric `(2r+1)`-diagonal Toeplitz matrix that `M̃·H·M̃ᵀ` agrees
/// with away from its top-left corner, for `H` the Hankel matrix of
/// `a·C_{n+r} + b·C_{n+r+1}`.
pub fn spine_toeplitz(r: usize, size: usize) -> Result<Matrix<BivarPoly>> {
    if r == 0 {
        return Err(Error::InvalidParameter("spine needs r >= 1".into()));
    }
    let bands: Vec<BivarPoly> = (0..=r).map(|d| spine_band(r, d)).collect();
    Ok(Matrix::symmetric_banded(size, &bands))
}

/// `u_n = a·C(2r−2, r−3−n) + b·C(2r, r−2−n)`, listed up to the last nonzero
/// term. The spine minus the conjugated Hankel matrix is the Hankel matrix of `u`.
pub fn residual_seq(r: usize) -> Vec<BivarPoly> {
    let r_ = r as i64;
    let mut out: Vec<BivarPoly> = (0..r.max(1))
        .map(|n| {
            let n = n as i64;
            BivarPoly::linear(binomial(2 * r_ - 2, r_ - 3 - n), binomial(2 * r_, r_ - 2 - n))
        })
        .collect();
    while out.last().is_some_and(|p| p.is_zero()) {
        out.pop();
    }
    out
}

/// Hankel matrix of `seq` padded with zeros, of the given size.
pub fn finite_hankel(seq: &[BivarPoly], size: usize) -> Matrix<BivarPoly> {
    Matrix::from_fn(size, size, |i, j| seq.get(i + j).cloned().unwrap_or_else(BivarPoly::zero))
}

/// Symbolic Hankel matrix of `a·C_{n+r} + b·C_{n+r+1}` conjugated by `M̃`
/// (by `M` when `r = 0`), truncated to `size`.
pub fn conjugated_hankel(r: usize, size: usize) -> Result<Conjugated<BivarPoly>> {
    if size == 0 {
        return Err(Error::InvalidParameter("size must be positive".into()));
    }
    let h = hankel_matrix(&symbolic_combo(r, 2 * size), size - 1)?;
    let t = if r == 0 { RiordanPair::ballot(size) } else { RiordanPair::ballot_tilde(size) };
    conjugate_and_bands(&t.matrix(size)?, &h)
}

/// `M̃·H(r)·M̃ᵀ − M·H(r−1)·Mᵀ` over ℤ[a,b], where `H(s)` is the Hankel
/// matrix of `a·C_{n+s} + b·C_{n+s+1}`.
pub fn consecutive_diff(r: usize, size: usize) -> Result<Matrix<BivarPoly>> {
    if r == 0 || size == 0 {
        return Err(Error::InvalidParameter("consecutive difference needs r >= 1 and size >= 1".into()));
    }
    let m = RiordanPair::<BivarPoly>::ballot(size).matrix(size)?;
    let mt = RiordanPair::<BivarPoly>::ballot_tilde(size).matrix(size)?;
    let upper = conjugate_and_bands(&mt, &hankel_matrix(&symbolic_combo(r, 2 * size), size - 1)?)?;
    let lower = conjugate_and_bands(&m, &hankel_matrix(&symbolic_combo(r - 1, 2 * size), size - 1)?)?;
    upper.matrix.sub(&lower.matrix)
}

/// Reads a finite generating sequence off a matrix that is Hankel with
/// entries vanishing past the anti-diagonal `len − 1`; `None` otherwise.
pub fn finite_hankel_sequence(m: &Matrix<BivarPoly>) -> Option<Vec<BivarPoly>> {
    if !m.is_square() || !m.is_hankel() || m.rows() == 0 {
        return None;
    }
    let n = m.rows();
    let mut seq: Vec<BivarPoly> = (0..2 * n - 1).map(|s| m.get(s.min(n - 1), s - s.min(n - 1)).clone()).collect();
    while seq.last().is_some_and(|p| p.is_zero()) {
        seq.pop();
    }
    // trailing terms near the corner are only trustworthy well inside the block
    if seq.len() >= n {
        return None;
    }
    Some(seq)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rational;

    fn ints(v: &[i64]) -> Vec<Integer> {
        v.iter().map(|&x| Integer::from(x)).collect()
    }

    fn p(s: &str) -> BivarPoly {
        s.parse().unwrap()
    }

    /// Catalan numbers from the convolution recurrence.
    fn catalan_oracle(n: usize) -> Vec<Integer> {
        let mut c = vec![Integer::one()];
        for k in 0..n {
            let next = (0..=k).map(|i| &c[i] * &c[k - i]).sum();
            c.push(next);
        }
        c
    }

    #[test]
    fn catalan_examples() {
        assert_eq!(catalan_seq(6), ints(&[1, 1, 2, 5, 14, 42, 132]));
        assert_eq!(catalan(0), Integer::one());
        assert_eq!(catalan(10), Integer::from(16796));
        assert_eq!(catalan_seq(40), catalan_oracle(40));
    }

    #[test]
    fn binomial_conventions() {
        assert_eq!(binomial(5, 2), Integer::from(10));
        assert_eq!(binomial(5, -1), Integer::zero());
        assert_eq!(binomial(2, 5), Integer::zero());
        assert_eq!(binomial(0, 0), Integer::one());
        assert_eq!(binomial(-2, 3), Integer::from(-4));
    }

    #[test]
    fn combo_examples() {
        let one = Integer::one();
        assert_eq!(combo_seq(2, &one, &one, 5), ints(&[7, 19, 56, 174, 561, 1859]));
        assert_eq!(combo_seq(1, &Integer::from(2), &Integer::from(3), 6), ints(&[8, 19, 52, 154, 480, 1551, 5148]));
        assert_eq!(combo_seq(3, &one, &Integer::zero(), 4), catalan_seq(7)[3..].to_vec());
        let spec = SequenceSpec::numeric(Family::Combo { m: 2, a: rational(1, 1), b: rational(1, 1) });
        assert_eq!(spec.rational_terms(1).unwrap(), vec![rational(7, 1), rational(19, 1)]);
        let sym = SequenceSpec::symbolic(Family::Combo { m: 2, a: rational(1, 1), b: rational(1, 1) });
        assert_eq!(sym.symbolic_terms(0).unwrap(), vec![p("2a+5b")]);
        assert!(sym.rational_terms(0).is_err());
        let short = SequenceSpec::numeric(Family::Explicit(vec![rational(1, 2)]));
        assert!(short.rational_terms(1).is_err());
        assert!(short.symbolic_terms(0).is_err());
    }

    #[test]
    fn e1_examples() {
        for n in 0..6 {
            assert_eq!(eq_e1_product(n, 0), Rational::one());
            assert_eq!(eq_e1_product(n, 1), Rational::one());
        }
        assert_eq!(eq_e1_product(0, 3), rational(5, 1));
        assert_eq!(eq_e1_product(1, 4), rational(84, 1));
        for k in 0..=6 {
            let shifted = catalan_seq(20)[k..].to_vec();
            let h = hankel_transform(&shifted, 6).unwrap();
            for (n, hn) in h.iter().enumerate() {
                assert_eq!(Rational::from_integer(hn.clone()), eq_e1_product(n, k), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn t_formula_examples() {
        assert_eq!(t_formula(0, 0, 2).unwrap(), rational(2, 1));
        assert_eq!(t_formula(4, 4, 2).unwrap(), rational(10, 1));
        assert_eq!(t_formula(1, 1, 3).unwrap(), rational(14, 1));
        assert_eq!(t_formula(0, 0, 5).unwrap(), rational(42, 1));
        assert!(matches!(t_formula(0, 0, 1), Err(Error::DivisionByZero(_))));
        assert!(matches!(t_formula(0, 0, 0), Err(Error::DivisionByZero(_))));
    }

    #[test]
    fn hankel_poly_examples() {
        assert_eq!(hankel_poly(1, 0), p("a+2b"));
        assert_eq!(hankel_poly(0, 1), p("a^2+3ab+b^2"));
        assert_eq!(hankel_poly(2, 0), p("2a+5b"));
        for m in 0..4 {
            for (n, h) in hankel_polys(m, 5).iter().enumerate() {
                assert!(h.is_homogeneous(n as u32 + 1), "m={m} n={n}");
            }
        }
    }

    #[test]
    fn binomial_sums_match() {
        for m in 0..=2 {
            let h = hankel_polys(m, 6);
            for n in 0..=6 {
                assert_eq!(binomial_sum(m, n).unwrap(), h[n], "m={m} n={n}");
            }
        }
        assert!(binomial_sum(3, 0).is_err());
    }

    #[test]
    fn verify_t_small_grid() {
        let r = verify_t(5, 4).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!(r.cases.iter().filter(|c| c.label.starts_with("m=")).count(), 20);
        let literal = verify_t_unshifted(3, 2).unwrap();
        assert!(!literal.passed());
        assert!(literal.counterexample().is_some());
        assert!(verify_t(1, 3).is_err());
    }

    #[test]
    fn spine_examples() {
        let s = spine_toeplitz(2, 5).unwrap();
        assert_eq!(s.get(2, 2), &p("2a+6b"));
        assert_eq!(s.get(2, 3), &p("a+4b"));
        assert_eq!(s.get(2, 4), &p("b"));
        assert_eq!(s.bandwidth().width, 2);
        let s = spine_toeplitz(4, 6).unwrap();
        let bands: Vec<_> = (0..5).map(|d| s.get(0, d).clone()).collect();
        assert_eq!(bands, ["20a+70b", "15a+56b", "6a+28b", "a+8b", "b"].map(p));
        let s = spine_toeplitz(1, 3).unwrap();
        assert_eq!((s.get(1, 1), s.get(0, 1)), (&p("a+2b"), &p("b")));
        assert!(spine_toeplitz(0, 3).is_err());
    }

    #[test]
    fn residual_examples() {
        assert_eq!(residual_seq(2), vec![p("b")]);
        assert_eq!(residual_seq(4), ["6a+28b", "a+8b", "b"].map(p).to_vec());
        assert_eq!(residual_seq(5), ["28a+120b", "8a+45b", "a+10b", "b"].map(p).to_vec());
        assert_eq!(residual_seq(1), Vec::<BivarPoly>::new());
    }

    #[test]
    fn spine_decomposition() {
        for r in 1..=4 {
            let n = r + 4;
            let conj = conjugated_hankel(r, n).unwrap();
            let diff = spine_toeplitz(r, n).unwrap().sub(&conj.matrix).unwrap();
            assert_eq!(diff, finite_hankel(&residual_seq(r), n), "r={r}");
        }
    }

    #[test]
    fn consecutive_differences() {
        let expected =
            [vec!["b"], vec!["a+3b", "b"], vec!["3a+9b", "a+5b", "b"], vec!["9a+28b", "5a+20b", "a+7b", "b"]];
        for (i, want) in expected.iter().enumerate() {
            let r = i + 1;
            let d = consecutive_diff(r, r + 5).unwrap();
            let want: Vec<BivarPoly> = want.iter().map(|s| p(s)).collect();
            assert_eq!(finite_hankel_sequence(&d), Some(want), "r={r}");
        }
    }

    #[test]
    fn band_ladder() {
        for (r, want) in [1usize, 1, 2, 3, 4, 5].iter().enumerate() {
            let c = conjugated_hankel(r, r + 4).unwrap();
            assert_eq!(c.bandwidth.width, *want, "shift {r}");
        }
        let c = conjugated_hankel(0, 4).unwrap();
        assert_eq!((c.matrix.get(0, 0), c.matrix.get(1, 1), c.matrix.get(0, 1)), (&p("a+b"), &p("a+2b"), &p("b")));
    }
}
