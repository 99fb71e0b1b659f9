//! Jacobi continued fractions `1/(1 − α₀x − β₁x²/(1 − α₁x − β₂x²/…))`,
//! extracted by repeated peeling over exact rationals.

use rayon::prelude::*;

use crate::catalan::{combo_seq, hankel_polys};
use crate::error::{Error, Result};
use crate::hankel::{hankel_transform, principal_minors};
use crate::matrix::{HessenbergMatrix, Matrix};
use crate::poly::BivarPoly;
use crate::report::{Case, ConjectureReport};
use crate::ring::{Rational, Ring};
use crate::series::PowerSeries;

/// A J-fraction for `g(x)/s₀`, where `s₀ = scale`. Depth `d` carries
/// `α₀..α_{d−1}` and `β₁..β_{d−1}`. When peeling hit `β = 0` the fraction is
/// `terminated` and represents the normalized series exactly.
#[derive(Clone, PartialEq, Debug)]
pub struct JFraction {
    pub scale: Rational,
    pub alphas: Vec<Rational>,
    pub betas: Vec<Rational>,
    pub terminated: bool,
    /// Highest coefficient index reproduced exactly; `None` means all of them.
    pub exact_order: Option<usize>,
}

impl JFraction {
    pub fn depth(&self) -> usize {
        self.alphas.len()
    }

    /// Expands the continued fraction (normalized, constant term 1) to `order`.
    pub fn expand(&self, order: usize) -> Result<PowerSeries<Rational>> {
        let x = PowerSeries::<Rational>::x(order);
        let one = PowerSeries::one(order);
        let mut tail: Option<PowerSeries<Rational>> = None;
        for k in (0..self.depth()).rev() {
            let mut den = one.sub(&x.scale(&self.alphas[k]))?;
            if let Some(t) = &tail {
                let x2 = PowerSeries::x(order).mul(&x)?;
                den = den.sub(&x2.scale(&self.betas[k]).mul(t)?)?;
            }
            tail = Some(den.inverse()?);
        }
        Ok(tail.unwrap_or(one))
    }
}

/// Peels `seq / seq[0]`: at each level `v = 1 − 1/u_k`, `α_k = [x]v`,
/// `β_{k+1} = [x²](v − α_k x)` and `u_{k+1} = (v − α_k x)/(β_{k+1}x²)`.
/// Needs `2·depth + 1` terms.
pub fn jfraction_extract(seq: &[Rational], depth: usize) -> Result<JFraction> {
    let needed = 2 * depth + 1;
    if seq.len() < needed {
        return Err(Error::InsufficientTerms { needed, available: seq.len() });
    }
    let scale = seq.first().cloned().ok_or(Error::ZeroLeadingTerm)?;
    if scale.is_zero() {
        return Err(Error::ZeroLeadingTerm);
    }
    let normalized: Vec<Rational> = seq[..needed].iter().map(|s| s / &scale).collect();
    let mut u = PowerSeries::from_coeffs(normalized, needed - 1);
    let mut alphas = Vec::with_capacity(depth);
    let mut betas = Vec::with_capacity(depth.saturating_sub(1));
    let mut terminated = false;
    let mut exact_order = Some((2 * depth).saturating_sub(1));
    for k in 0..depth {
        let v = PowerSeries::one(u.order()).sub(&u.inverse()?)?;
        let alpha = v.coeff(1).clone();
        alphas.push(alpha.clone());
        if k + 1 == depth {
            break;
        }
        let w = v.sub(&PowerSeries::x(v.order()).scale(&alpha))?;
        let beta = w.coeff(2).clone();
        if beta.is_zero() {
            terminated = true;
            exact_order = if w.coeffs().iter().all(|c| c.is_zero()) { None } else { Some(2 * k + 2) };
            break;
        }
        u = w.div_x_pow(2)?.scale(&beta.recip());
        betas.push(beta);
    }
    Ok(JFraction { scale, alphas, betas, terminated, exact_order })
}

/// The `size × size` tridiagonal matrix with diagonal `α`, subdiagonal `β`
/// and superdiagonal 1.
pub fn tridiag_from_jfraction(jf: &JFraction, size: usize) -> Result<HessenbergMatrix<Rational>> {
    if size > jf.depth() {
        return Err(Error::InsufficientTerms { needed: size, available: jf.depth() });
    }
    let m = Matrix::from_fn(size, size, |i, j| {
        if i == j {
            jf.alphas[i].clone()
        } else if j == i + 1 {
            Rational::one()
        } else if i == j + 1 {
            jf.betas[j].clone()
        } else {
            Rational::zero()
        }
    });
    HessenbergMatrix::new(m)
}

/// Principal minors `d_1..d_{n_max+1}` of the J-fraction matrix of
/// `a·C_{n+m} + b·C_{n+m+1}` against the ratios `h⁽ᵐ⁺¹⁾_n / h⁽ᵐ⁾_n` of the
/// neighbouring Hankel transforms. Cases with a vanishing denominator or a
/// truncated fraction are skipped and listed.
pub fn ratio_check(m: usize, a: &Rational, b: &Rational, n_max: usize) -> Result<ConjectureReport> {
    let depth = n_max + 1;
    let seq = combo_seq(m, a, b, 2 * depth);
    let next = combo_seq(m + 1, a, b, 2 * depth);
    let name = format!("ratio m={m} a={a} b={b}");
    let mut report = ConjectureReport::new(name, format!("0<=n<={n_max}"));
    let h = hankel_transform(&seq, n_max)?;
    let h_next = hankel_transform(&next, n_max)?;
    let jf = match jfraction_extract(&seq, depth) {
        Ok(jf) => jf,
        Err(Error::ZeroLeadingTerm) => {
            report.skipped.push("zero leading term".into());
            return Ok(report);
        }
        Err(e) => return Err(e),
    };
    let size = jf.depth().min(jf.betas.len() + 1);
    let minors = principal_minors(tridiag_from_jfraction(&jf, size)?.matrix(), size)?;
    for n in 0..=n_max {
        let label = format!("n={n}");
        if h[n].is_zero() {
            report.skipped.push(format!("{label}: zero Hankel minor"));
            continue;
        }
        let Some(d) = minors.get(n) else {
            report.skipped.push(format!("{label}: fraction terminated"));
            continue;
        };
        report.push(Case::compare(label, &(&h_next[n] / &h[n]), d));
    }
    Ok(report)
}

/// Runs [`ratio_check`] over every `m ≤ m_max` and `(a, b)` in `values²`.
pub fn ratio_grid(m_max: usize, values: &[Rational], n_max: usize) -> Result<ConjectureReport> {
    let jobs: Vec<(usize, Rational, Rational)> = (0..=m_max)
        .flat_map(|m| values.iter().flat_map(move |a| values.iter().map(move |b| (m, a.clone(), b.clone()))))
        .collect();
    let parts: Vec<Result<ConjectureReport>> = jobs.par_iter().map(|(m, a, b)| ratio_check(*m, a, b, n_max)).collect();
    let list: Vec<String> = values.iter().map(|v| v.to_string()).collect();
    let mut report =
        ConjectureReport::new("ratio-grid", format!("m<={m_max}, a,b in {{{}}}, n<={n_max}", list.join(",")));
    for (part, (m, a, b)) in parts.into_iter().zip(&jobs) {
        let part = part?;
        for mut c in part.cases {
            c.label = format!("m={m} a={a} b={b} {}", c.label);
            report.push(c);
        }
        report.skipped.extend(part.skipped.into_iter().map(|s| format!("m={m} a={a} b={b} {s}")));
    }
    Ok(report)
}

/// Symbolic ratio pairs `(h⁽ᵐ⁺¹⁾_n, h⁽ᵐ⁾_n)` over ℤ[a,b].
pub fn symbolic_ratios(m: usize, n_max: usize) -> Vec<(BivarPoly, BivarPoly)> {
    hankel_polys(m + 1, n_max).into_iter().zip(hankel_polys(m, n_max)).collect()
}


#[cfg(test)]
mod props {
    use super::*;
    use crate::hankel::hankel_transform;
    use proptest::prelude::*;

    fn arb_seq() -> impl Strategy<Value = Vec<Rational>> {
        (1i64..5, proptest::collection::vec(-6i64..7, 8))
            .prop_map(|(s0, tail)| std::iter::once(s0).chain(tail).map(|v| Rational::from_integer(v.into())).collect())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn roundtrip(seq in arb_seq()) {
            let jf = jfraction_extract(&seq, 4).unwrap();
            let expanded = jf.expand(8).unwrap();
            let upto = jf.exact_order.unwrap_or(8);
            for i in 0..=upto {
                prop_assert_eq!(expanded.coeff(i) * &jf.scale, seq[i].clone());
            }
        }

        #[test]
        fn beta_products_give_hankel(seq in arb_seq()) {
            let jf = jfraction_extract(&seq, 4).unwrap();
            prop_assume!(!jf.terminated);
            let h = hankel_transform(&seq, 3).unwrap();
            for n in 0..jf.betas.len() + 1 {
                let mut prod = Rational::one();
                for k in 1..=n {
                    prod *= Ring::pow(&jf.betas[k - 1], (n + 1 - k) as u32);
                }
                prop_assert_eq!(prod, &h[n] / Ring::pow(&jf.scale, n as u32 + 1));
            }
        }
    }
}
