//! Cross-module invariants.

mod common;

use catalan_hankel::catalan::{combo_seq, hankel_poly};
use catalan_hankel::hankel::{conjugate_and_bands, det_fraction_free, hankel_transform, principal_minors};
use catalan_hankel::matrix::{HessenbergMatrix, LowerTriangular, Matrix};
use catalan_hankel::ring::{Integer, Rational};
use catalan_hankel::riordan::{matrix_from_production, production_matrix, RiordanPair};
use catalan_hankel::series::{fit_rational_gf, Polynomial, RationalGf};
use common::det_cofactor;
use proptest::prelude::*;

fn ints(v: &[i64]) -> Vec<Integer> {
    v.iter().map(|&x| Integer::from(x)).collect()
}

fn pair(g: &[i64], f: &[i64], order: usize) -> RiordanPair<Integer> {
    let mut gc = vec![1];
    gc.extend_from_slice(g);
    let mut fc = vec![0, 1];
    fc.extend_from_slice(f);
    let gc: Vec<i64> = gc.into_iter().take(order + 1).collect();
    let fc: Vec<i64> = fc.into_iter().take(order + 1).collect();
    RiordanPair::new(
        catalan_hankel::series::PowerSeries::from_i64(&gc, order),
        catalan_hankel::series::PowerSeries::from_i64(&fc, order),
    )
    .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn symbolic_transform_specializes(m in 0usize..4, n in 0usize..4, a in -6i64..7, b in -6i64..7) {
        let poly = hankel_poly(m, n);
        let (qa, qb) = (Rational::from_integer(a.into()), Rational::from_integer(b.into()));
        let seq = combo_seq(m, &Integer::from(a), &Integer::from(b), 2 * n);
        let h = hankel_transform(&seq, n).unwrap();
        prop_assert_eq!(poly.eval(&qa, &qb), Rational::from_integer(h[n].clone()));
        prop_assert!(poly.is_homogeneous(n as u32 + 1));
    }

    #[test]
    fn unit_congruence_keeps_minors(
        entries in proptest::collection::vec(-5i64..6, 25),
        lower in proptest::collection::vec(-3i64..4, 25),
    ) {
        let n = 5;
        let h = Matrix::from_fn(n, n, |i, j| Integer::from(entries[i.min(j) * n + i.max(j)]));
        let t = LowerTriangular::new(Matrix::from_fn(n, n, |i, j| Integer::from(match i.cmp(&j) {
            std::cmp::Ordering::Greater => lower[i * n + j],
            std::cmp::Ordering::Equal => 1,
            std::cmp::Ordering::Less => 0,
        }))).unwrap();
        let conj = conjugate_and_bands(&t, &h).unwrap();
        prop_assert_eq!(principal_minors(&h, n).unwrap(), principal_minors(&conj.matrix, n).unwrap());
    }

    #[test]
    fn bareiss_matches_cofactor(n in 1usize..6, entries in proptest::collection::vec(-20i64..21, 25)) {
        let rows: Vec<Vec<Integer>> = (0..n).map(|i| ints(&entries[i * n..(i + 1) * n])).collect();
        prop_assert_eq!(det_fraction_free(&Matrix::from_rows(rows.clone()).unwrap()).unwrap(), det_cofactor(&rows));
    }

    #[test]
    fn riordan_matrices_multiply(
        g1 in proptest::collection::vec(-3i64..4, 5), f1 in proptest::collection::vec(-3i64..4, 5),
        g2 in proptest::collection::vec(-3i64..4, 5), f2 in proptest::collection::vec(-3i64..4, 5),
    ) {
        let order = 5;
        let (x, y) = (pair(&g1, &f1, order), pair(&g2, &f2, order));
        let xy = x.mul(&y).unwrap();
        let size = order + 1;
        let product = x.matrix(size).unwrap().matrix().mul(y.matrix(size).unwrap().matrix()).unwrap();
        prop_assert_eq!(xy.matrix(size).unwrap().into_matrix(), product);
        let inv = xy.inverse().unwrap();
        prop_assert_eq!(inv, y.inverse().unwrap().mul(&x.inverse().unwrap()).unwrap());
    }

    #[test]
    fn production_roundtrip(diag in proptest::collection::vec(-4i64..5, 6), sub in proptest::collection::vec(-4i64..5, 6)) {
        let n = 6;
        let p = Matrix::from_fn(n, n, |i, j| Integer::from(if j == i + 1 { 1 } else if i == j { diag[i] } else if i == j + 1 { sub[j] } else { 0 }));
        let p = HessenbergMatrix::new(p).unwrap();
        let l = matrix_from_production(&p, n).unwrap();
        let back = production_matrix(&l).unwrap();
        prop_assert_eq!(back.matrix(), &p.matrix().leading(n - 1));
    }

    #[test]
    fn fitting_recovers_numerators(num in proptest::collection::vec(-9i64..10, 1..5), den in proptest::collection::vec(-3i64..4, 1..4)) {
        let mut d = vec![1];
        d.extend(den);
        let (num, den) = (Polynomial::new(ints(&num)), Polynomial::new(ints(&d)));
        let gf = RationalGf::new(num.clone(), den.clone()).unwrap();
        let series = gf.expand(12).unwrap();
        prop_assert_eq!(fit_rational_gf(&series, &den, 4).unwrap(), num);
    }
}
