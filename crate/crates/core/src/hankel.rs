//! Hankel matrices, fraction-free determinants, principal minors, and
//! conjugation into banded form.

use crate::error::{Error, Result};
use crate::matrix::{Bandwidth, LowerTriangular, Matrix};
use crate::ring::Ring;
use crate::series::{Polynomial, RationalGf};

/// The `(n+1) × (n+1)` Hankel matrix `(s_{i+j})`.
pub fn hankel_matrix<R: Ring>(seq: &[R], n: usize) -> Result<Matrix<R>> {
    let needed = 2 * n + 1;
    if seq.len() < needed {
        return Err(Error::InsufficientTerms { needed, available: seq.len() });
    }
    Ok(Matrix::from_fn(n + 1, n + 1, |i, j| seq[i + j].clone()))
}

/// One Bareiss step on `m` using pivot `k`, dividing by the previous pivot.
fn bareiss_step<R: Ring>(m: &mut Matrix<R>, k: usize, prev: &R) {
    let n = m.rows();
    let pivot = m.get(k, k).clone();
    for i in k + 1..n {
        let lead = m.get(i, k).clone();
        for j in k + 1..n {
            let v = m.get(i, j).mul(&pivot).sub(&lead.mul(m.get(k, j)));
            let v = v.exact_div(prev).expect("Bareiss division is exact in an integral domain");
            m.set(i, j, v);
        }
        m.set(i, k, R::zero());
    }
}

/// Exact determinant by Bareiss fraction-free elimination (row swaps on a
/// zero pivot). Valid over any integral domain with exact division.
pub fn det_fraction_free<R: Ring>(m: &Matrix<R>) -> Result<R> {
    if !m.is_square() {
        return Err(Error::SizeMismatch(format!("determinant of {}x{} matrix", m.rows(), m.cols())));
    }
    let n = m.rows();
    if n == 0 {
        return Ok(R::one());
    }
    let mut work = m.clone();
    let mut negate = false;
    let mut prev = R::one();
    for k in 0..n - 1 {
        if work.get(k, k).is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !work.get(i, k).is_zero()) else {
                return Ok(R::zero());
            };
            for j in 0..n {
                let a = work.get(k, j).clone();
                let b = work.get(p, j).clone();
                work.set(k, j, b);
                work.set(p, j, a);
            }
            negate = !negate;
        }
        bareiss_step(&mut work, k, &prev);
        prev = work.get(k, k).clone();
    }
    let d = work.get(n - 1, n - 1).clone();
    Ok(if negate { d.neg() } else { d })
}

/// Leading principal minors `d_1, …, d_{n_max}` of `m`.
///
/// Computed in a single unpivoted Bareiss pass: after `k` steps the
/// `(k, k)` entry is `d_{k+1}`. If a minor vanishes the pass cannot
/// continue, and the remaining minors are computed one by one from the
/// explicit leading blocks.
pub fn principal_minors<R: Ring>(m: &Matrix<R>, n_max: usize) -> Result<Vec<R>> {
    if !m.is_square() {
        return Err(Error::SizeMismatch("principal minors need a square matrix".into()));
    }
    if n_max > m.rows() {
        return Err(Error::SizeMismatch(format!("{n_max} minors requested from a {}x{} matrix", m.rows(), m.rows())));
    }
    let mut work = m.leading(n_max);
    let mut minors = Vec::with_capacity(n_max);
    let mut prev = R::one();
    for k in 0..n_max {
        let pivot = work.get(k, k).clone();
        minors.push(pivot.clone());
        if pivot.is_zero() {
            for size in k + 2..=n_max {
                minors.push(det_fraction_free(&m.leading(size))?);
            }
            break;
        }
        bareiss_step(&mut work, k, &prev);
        prev = pivot;
    }
    Ok(minors)
}

/// Hankel transform `h_0, …, h_{n_max}` with `h_n = det(s_{i+j})_{0≤i,j≤n}`.
pub fn hankel_transform<R: Ring>(seq: &[R], n_max: usize) -> Result<Vec<R>> {
    let h = hankel_matrix(seq, n_max)?;
    principal_minors(&h, n_max + 1)
}

/// Result of a congruence `T · H · Tᵀ`.
#[derive(Clone, PartialEq, Debug)]
pub struct Conjugated<R> {
    pub matrix: Matrix<R>,
    pub bandwidth: Bandwidth,
}

/// Computes `T · H · Tᵀ` for unit lower-triangular `T`, which leaves every
/// leading principal minor of `H` unchanged, and reports its bandwidth.
pub fn conjugate_and_bands<R: Ring>(t: &LowerTriangular<R>, h: &Matrix<R>) -> Result<Conjugated<R>> {
    if t.size() != h.rows() || !h.is_square() {
        return Err(Error::SizeMismatch(format!(
            "{}x{} transform against {}x{} matrix",
            t.size(),
            t.size(),
            h.rows(),
            h.cols()
        )));
    }
    if !t.has_unit_diagonal() {
        return Err(Error::Shape("conjugating matrix must have unit diagonal".into()));
    }
    let matrix = t.matrix().mul(h)?.mul(&t.matrix().transpose())?;
    let bandwidth = matrix.bandwidth();
    Ok(Conjugated { matrix, bandwidth })
}

/// The symmetric pentadiagonal Toeplitz matrix with diagonal `a`, first
/// band `b`, second band `c`, and top-left corner replaced by `a − r`.
pub fn pentadiagonal<R: Ring>(a: &R, b: &R, c: &R, r: &R, n: usize) -> Matrix<R> {
    let mut m = Matrix::symmetric_banded(n, &[a.clone(), b.clone(), c.clone()]);
    if n > 0 {
        m.set(0, 0, a.sub(r));
    }
    m
}

/// Generating function `1 + d_1 x + d_2 x² + …` of the leading principal
/// minors of [`pentadiagonal`]`(a, b, c, r)`:
///
/// ```text
///            1 − (r − c)x − r c x²
/// ─────────────────────────────────────────────────────────────────────
/// 1 − (a − c)x − (ac − b²)x² + c(ac − b²)x³ + c³(a − c)x⁴ − c⁵x⁵
/// ```
///
/// Each minor `d_n` is homogeneous of degree `n` in `(a, b, c, r)`, so this
/// is the `c = 1` form rescaled by `x → cx`.
pub fn penta_minors_gf<R: Ring>(a: &R, b: &R, c: &R, r: &R) -> RationalGf<R> {
    let ac_b2 = a.mul(c).sub(&b.mul(b));
    let a_c = a.sub(c);
    let numerator = Polynomial::new(vec![R::one(), r.sub(c).neg(), r.mul(c).neg()]);
    let denominator =
        Polynomial::new(vec![R::one(), a_c.neg(), ac_b2.neg(), c.mul(&ac_b2), c.pow(3).mul(&a_c), c.pow(5).neg()]);
    RationalGf { numerator, denominator }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::BivarPoly;
    use crate::ring::{rational, Integer, Rational};

    fn ints(v: &[i64]) -> Vec<Integer> {
        v.iter().map(|&x| Integer::from(x)).collect()
    }

    /// Laplace expansion along the first row (test oracle).
    fn cofactor_det<R: Ring>(m: &Matrix<R>) -> R {
        let n = m.rows();
        if n == 0 {
            return R::one();
        }
        let mut acc = R::zero();
        for j in 0..n {
            let minor = Matrix::from_fn(n - 1, n - 1, |r, c| m.get(r + 1, if c < j { c } else { c + 1 }).clone());
            let term = m.get(0, j).mul(&cofactor_det(&minor));
            acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
        }
        acc
    }

    fn catalan(n: usize) -> Vec<Integer> {
        let mut c = vec![Integer::from(1)];
        for k in 0..n {
            let next = &c[k] * Integer::from(2 * (2 * k as i64 + 1)) / Integer::from(k as i64 + 2);
            c.push(next);
        }
        c
    }

    #[test]
    fn hankel_matrix_examples() {
        let unit = ints(&[1, 0, 0, 0, 0]);
        let h = hankel_matrix(&unit, 2).unwrap();
        assert_eq!(h.bandwidth().witness, Some((0, 0)));
        assert_eq!(h.bandwidth().width, 0);

        let s = ints(&[8, 19, 52, 154, 480, 1551, 5148, 17446, 60112]);
        let h = hankel_matrix(&s, 4).unwrap();
        assert_eq!(h.row(4), &ints(&[480, 1551, 5148, 17446, 60112])[..]);
        assert!(h.is_hankel());

        let h = hankel_matrix(&catalan(4), 2).unwrap();
        assert_eq!(h, Matrix::from_i64_rows(&[&[1, 1, 2], &[1, 2, 5], &[2, 5, 14]]).unwrap());
        assert!(matches!(hankel_matrix(&catalan(2), 2), Err(Error::InsufficientTerms { needed: 5, available: 3 })));
    }

    #[test]
    fn det_examples() {
        for n in 0..5 {
            assert_eq!(det_fraction_free(&Matrix::<Integer>::identity(n)).unwrap(), Integer::from(1));
        }
        let m = Matrix::<Integer>::from_i64_rows(&[&[8, 19], &[19, 52]]).unwrap();
        assert_eq!(det_fraction_free(&m).unwrap(), Integer::from(55));
        let swap = Matrix::<Integer>::from_i64_rows(&[&[0, 1], &[1, 0]]).unwrap();
        assert_eq!(det_fraction_free(&swap).unwrap(), Integer::from(-1));
        let singular = Matrix::<Integer>::from_i64_rows(&[&[1, 2], &[2, 4]]).unwrap();
        assert_eq!(det_fraction_free(&singular).unwrap(), Integer::from(0));
        assert!(det_fraction_free(&Matrix::<Integer>::zeros(2, 3)).is_err());
    }

    #[test]
    fn symbolic_det_matches_oracle_and_binomial_sum() {
        let a = BivarPoly::a();
        let b = BivarPoly::b();
        let seq: Vec<BivarPoly> = catalan(6)
            .windows(2)
            .map(|w| &(&a * &BivarPoly::constant(w[0].clone())) + &(&b * &BivarPoly::constant(w[1].clone())))
            .collect();
        let h = hankel_matrix(&seq, 2).unwrap();
        let det = det_fraction_free(&h).unwrap();
        assert_eq!(det, cofactor_det(&h));
        // sum_k C(n+k+1, 2k) b^{n-k+1} a^k at n = 2
        let expected: BivarPoly = "b^3 + 6a b^2 + 5a^2 b + a^3".parse().unwrap();
        assert_eq!(det, expected);
    }

    #[test]
    fn transform_examples() {
        let c = catalan(16);
        assert_eq!(hankel_transform(&c, 5).unwrap(), ints(&[1; 6]));
        assert_eq!(hankel_transform(&c[2..], 5).unwrap(), ints(&[2, 3, 4, 5, 6, 7]));
        let s: Vec<Integer> = (0..8).map(|n| Integer::from(2) * &c[n + 1] + Integer::from(3) * &c[n + 2]).collect();
        assert_eq!(hankel_transform(&s, 3).unwrap(), ints(&[8, 55, 368, 2449]));
        let fib: Vec<Integer> = (0..12).map(|n| &c[n] + &c[n + 1]).collect();
        assert_eq!(hankel_transform(&fib, 5).unwrap(), ints(&[2, 5, 13, 34, 89, 233]));
        let fib: Vec<Integer> = (0..12).map(|n| &c[n + 1] + &c[n + 2]).collect();
        assert_eq!(hankel_transform(&fib, 5).unwrap(), ints(&[3, 8, 21, 55, 144, 377]));
    }

    #[test]
    fn minors_examples() {
        let d = Matrix::<Integer>::from_i64_rows(&[&[2, 0, 0], &[0, 3, 0], &[0, 0, 4]]).unwrap();
        assert_eq!(principal_minors(&d, 3).unwrap(), ints(&[2, 6, 24]));

        let p = pentadiagonal(&Integer::from(8), &Integer::from(5), &Integer::from(1), &Integer::from(1), 6);
        assert_eq!(principal_minors(&p, 5).unwrap(), ints(&[7, 31, 115, 390, 1254]));

        let q = |n, d| rational(n, d);
        let diag = [q(19, 7), q(489, 217), q(1511, 713)];
        let sub = [q(31, 49), q(805, 961)];
        let t = Matrix::<Rational>::from_fn(3, 3, |i, j| match (i, j) {
            _ if i == j => diag[i].clone(),
            _ if i == j + 1 => sub[j].clone(),
            _ if j == i + 1 => q(1, 1),
            _ => q(0, 1),
        });
        assert_eq!(principal_minors(&t, 3).unwrap(), vec![q(19, 7), q(170, 31), q(1075, 115)]);
        assert!(principal_minors(&t, 4).is_err());
    }

    #[test]
    fn minors_survive_zero_pivot() {
        let m = Matrix::<Integer>::from_i64_rows(&[&[1, 1, 0], &[1, 1, 1], &[0, 1, 5]]).unwrap();
        let minors = principal_minors(&m, 3).unwrap();
        assert_eq!(minors, vec![cofactor_det(&m.leading(1)), cofactor_det(&m.leading(2)), cofactor_det(&m)]);
        assert_eq!(minors, ints(&[1, 0, -1]));
    }

    #[test]
    fn conjugation_checks() {
        let h = hankel_matrix(&catalan(8), 3).unwrap();
        let id = LowerTriangular::new(Matrix::identity(4)).unwrap();
        assert_eq!(conjugate_and_bands(&id, &h).unwrap().matrix, h);
        let small = LowerTriangular::new(Matrix::<Integer>::identity(3)).unwrap();
        assert!(conjugate_and_bands(&small, &h).is_err());
    }

    #[test]
    fn worked_example_gf() {
        let gf = penta_minors_gf(&Integer::from(8), &Integer::from(5), &Integer::from(1), &Integer::from(1));
        assert_eq!(gf.numerator, Polynomial::from_i64(&[1, 0, -1]));
        assert_eq!(gf.denominator, Polynomial::from_i64(&[1, -7, 17, -17, 7, -1]));
        let e = gf.expand(5).unwrap();
        assert_eq!(e.coeffs(), &ints(&[1, 7, 31, 115, 390, 1254])[..]);
    }

    #[test]
    fn penta_gf_degenerates_to_continuant() {
        // c = 0, r = 0: 1 / (1 − a x + b² x²), the tridiagonal continuant
        for (a, b) in [(3, 1), (5, 2), (-2, 3)] {
            let (a, b) = (Integer::from(a), Integer::from(b));
            let zero = Integer::from(0);
            let gf = penta_minors_gf(&a, &b, &zero, &zero);
            let tri = Matrix::symmetric_banded(8, &[a.clone(), b.clone()]);
            let minors = principal_minors(&tri, 8).unwrap();
            assert_eq!(&gf.expand(8).unwrap().coeffs()[1..], &minors[..]);
        }
    }
}
