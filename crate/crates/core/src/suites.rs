//! Named verification suites, each producing one report. These back the
//! `verify` command.

use rayon::prelude::*;

use crate::catalan::{
    binomial_sum, catalan_seq, combo_seq, conjugated_hankel, eq_e1_product, finite_hankel, hankel_polys, residual_seq,
    spine_band, spine_toeplitz, verify_t,
};
use crate::error::{Error, Result};
use crate::hankel::{
    conjugate_and_bands, hankel_matrix, hankel_transform, penta_minors_gf, pentadiagonal, principal_minors,
};
use crate::identities::{closed_gf, flagged_readings, t_array, verify_identity, IdentityParams};
use crate::jfrac::{jfraction_extract, ratio_check, ratio_grid, tridiag_from_jfraction};
use crate::matrix::{HessenbergMatrix, Matrix};
use crate::poly::BivarPoly;
use crate::report::{Case, ConjectureReport};
use crate::ring::{rational, Integer, Rational, Ring};
use crate::riordan::{column_rescale, matrix_from_production, production_matrix, RiordanPair};

pub const SUITE_NAMES: [&str; 11] = [
    "shifted-table",
    "pair-table",
    "gf-lists",
    "closed-forms",
    "conjecture-T",
    "bands",
    "penta-minors",
    "residuals",
    "production",
    "jfrac",
    "flagged",
];

pub const SHIFTED_TABLE: [[i64; 6]; 7] = [
    [1, 1, 1, 1, 1, 1],
    [1, 1, 1, 1, 1, 1],
    [2, 3, 4, 5, 6, 7],
    [5, 14, 30, 55, 91, 140],
    [14, 84, 330, 1001, 2548, 5712],
    [42, 594, 4719, 26026, 111384, 395352],
    [132, 4719, 81796, 884884, 6852768, 41314284],
];

pub const PAIR_TABLE: [[i64; 6]; 7] = [
    [2, 5, 13, 34, 89, 233],
    [3, 8, 21, 55, 144, 377],
    [7, 31, 115, 390, 1254, 3893],
    [19, 170, 1075, 5580, 25529, 107036],
    [56, 1140, 13915, 124579, 906472, 5687928],
    [174, 8745, 225511, 3813082, 48173784, 491753934],
    [561, 73931, 4316598, 148118620, 3489574428, 62113595742],
];

/// The displayed 5×5 truncations of `(T(n,k,m))` for `m = 2..=5`.
pub const T_TRUNCATIONS: [[[i64; 5]; 5]; 4] = [
    [[2, 1, 0, 0, 0], [3, 4, 1, 0, 0], [4, 10, 6, 1, 0], [5, 20, 21, 8, 1], [6, 35, 56, 36, 10]],
    [[5, 2, 0, 0, 0], [14, 14, 3, 0, 0], [30, 54, 27, 4, 0], [55, 154, 132, 44, 5], [91, 364, 468, 260, 65]],
    [
        [14, 5, 0, 0, 0],
        [84, 72, 14, 0, 0],
        [330, 495, 220, 30, 0],
        [1001, 2288, 1716, 520, 55],
        [2548, 8190, 9100, 4550, 1050],
    ],
    [
        [42, 14, 0, 0, 0],
        [594, 462, 84, 0, 0],
        [4719, 6292, 2574, 330, 0],
        [26026, 52052, 35490, 10010, 1001],
        [111384, 309400, 309400, 142800, 30940],
    ],
];

/// Parameters shared by the suites.
#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub n_max: usize,
    pub m_max: usize,
    /// `(a, b, c, r)` tuples for the pentadiagonal minors.
    pub penta_tuples: Vec<[i64; 4]>,
    /// `(a, b)` pairs for the production-matrix checks; `b ≠ 0`.
    pub production_pairs: Vec<(i64, i64)>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            n_max: 6,
            m_max: 5,
            penta_tuples: vec![[5, 2, 3, 1], [4, 1, 2, 0], [-3, 2, 5, 7], [9, -4, 1, -2], [2, 6, -1, 3]],
            production_pairs: vec![(2, 3), (1, 1), (-1, 2), (4, -3), (0, 5)],
        }
    }
}

pub fn run_suite(name: &str, cfg: &SuiteConfig) -> Result<ConjectureReport> {
    match name {
        "shifted-table" => shifted_table(),
        "pair-table" => pair_table(),
        "gf-lists" => gf_lists(),
        "closed-forms" => closed_forms(cfg.n_max),
        "conjecture-T" => conjecture_t(cfg.m_max, cfg.n_max),
        "bands" => band_ladder(),
        "penta-minors" => penta_suite(&cfg.penta_tuples),
        "residuals" => residuals_suite(),
        "production" => production_suite(&cfg.production_pairs),
        "jfrac" => jfrac_suite(),
        "flagged" => flagged_suite(cfg.n_max),
        other => Err(Error::InvalidParameter(format!("unknown suite `{other}`"))),
    }
}

/// Every suite, followed by every registered identity.
pub fn run_all(cfg: &SuiteConfig) -> Result<Vec<ConjectureReport>> {
    let mut out: Vec<ConjectureReport> =
        SUITE_NAMES.par_iter().map(|name| run_suite(name, cfg)).collect::<Result<_>>()?;
    let params = IdentityParams { n_max: cfg.n_max, ..Default::default() };
    for name in crate::identities::IDENTITY_NAMES {
        let mut r = verify_identity(name, &params)?;
        r.name = format!("identity {}", r.name);
        out.push(r);
    }
    Ok(out)
}

fn ints(row: &[i64]) -> Vec<Integer> {
    row.iter().map(|&v| Integer::from(v)).collect()
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

/// Hankel transforms of `C_{n+k}` against the table and the double product.
pub fn shifted_table() -> Result<ConjectureReport> {
    let mut report = ConjectureReport::new("shifted-table", "k<=6, n<=5");
    let c = catalan_seq(22);
    for (k, row) in SHIFTED_TABLE.iter().enumerate() {
        let h = hankel_transform(&c[k..], 5)?;
        report.compare(format!("k={k} table row"), &join(&ints(row)), &join(&h));
        let e1: Vec<Rational> = (0..6).map(|n| eq_e1_product(n, k)).collect();
        let h_q: Vec<Rational> = h.iter().cloned().map(Rational::from_integer).collect();
        report.compare(format!("k={k} product formula"), &join(&h_q), &join(&e1));
    }
    Ok(report)
}

/// Hankel transforms of `C_{n+k} + C_{n+k+1}` against the table.
pub fn pair_table() -> Result<ConjectureReport> {
    let mut report = ConjectureReport::new("pair-table", "k<=6, n<=5");
    let one = Integer::from(1);
    for (k, row) in PAIR_TABLE.iter().enumerate() {
        let h = hankel_transform(&combo_seq(k, &one, &one, 10), 5)?;
        report.compare(format!("k={k} table row"), &join(&ints(row)), &join(&h));
    }
    let fib: Vec<Integer> = {
        let mut f = vec![Integer::from(0), Integer::from(1)];
        while f.len() < 16 {
            let next = &f[f.len() - 1] + &f[f.len() - 2];
            f.push(next);
        }
        f
    };
    let odd: Vec<Integer> = (0..6).map(|n| fib[2 * n + 3].clone()).collect();
    let even: Vec<Integer> = (0..6).map(|n| fib[2 * n + 4].clone()).collect();
    report.compare("k=0 is F(2n+3)", &join(&odd), &join(&ints(&PAIR_TABLE[0])));
    report.compare("k=1 is F(2n+4)", &join(&even), &join(&ints(&PAIR_TABLE[1])));
    Ok(report)
}

/// Both numerator lists, recovered by fitting.
pub fn gf_lists() -> Result<ConjectureReport> {
    let params = IdentityParams::default();
    let mut report = ConjectureReport::new("gf-lists", "shifted k<=6, pairs k<=4");
    report.extend(verify_identity("shifted-gf-list", &params)?);
    report.extend(verify_identity("pair-gf-list", &params)?);
    Ok(report)
}

/// Closed generating functions for shifts 0..=3 and the binomial sums for 0..=2.
pub fn closed_forms(n_max: usize) -> Result<ConjectureReport> {
    let mut report = ConjectureReport::new("closed-forms", format!("symbolic, n<={n_max}"));
    for m in 0..=3 {
        let gf = closed_gf(m).expect("closed form for shifts up to 3");
        let series = gf.expand(n_max + 1)?;
        let h = hankel_polys(m, n_max);
        for n in 0..=n_max {
            report.compare(format!("gf m={m} n={n}"), &h[n], series.coeff(n + 1));
        }
        if m <= 2 {
            for n in 0..=n_max {
                report.compare(format!("binomial sum m={m} n={n}"), &h[n], &binomial_sum(m, n)?);
            }
        }
    }
    Ok(report)
}

/// The polynomial identities, plus the displayed truncations.
pub fn conjecture_t(m_max: usize, n_max: usize) -> Result<ConjectureReport> {
    let mut report = verify_t(m_max, n_max)?;
    for (i, table) in T_TRUNCATIONS.iter().enumerate() {
        let m = i + 2;
        if m > m_max {
            break;
        }
        let want = Matrix::from_fn(5, 5, |n, k| Rational::from_integer(table[n][k].into()));
        report.compare(format!("truncation m={m}"), &want, &t_array(m, 5)?);
    }
    Ok(report)
}

/// `(first row, last row)` band values as displayed, shift by shift.
fn displayed_rows(r: usize) -> Option<(&'static [&'static str], &'static [&'static str])> {
    Some(match r {
        0 => (&["a+b", "b"], &["a+2b", "b"]),
        1 => (&["a+2b", "b"], &["a+2b", "b"]),
        2 => (&["2a+5b", "a+4b", "b"], &["2a+6b", "a+4b", "b"]),
        3 => (&["5a+14b", "4a+14b", "a+6b", "b"], &["6a+20b", "4a+15b", "a+6b", "b"]),
        4 => (&["14a+42b", "14a+48b", "6a+27b", "a+8b", "b"], &["20a+70b", "15a+56b", "6a+28b", "a+8b", "b"]),
        _ => return None,
    })
}

/// Bandwidths of the conjugated symbolic Hankel matrices and their band values.
pub fn band_ladder() -> Result<ConjectureReport> {
    let mut report = ConjectureReport::new("bands", "shifts 0..=5, size shift+4");
    let expected_widths = [1usize, 1, 2, 3, 4, 5];
    for (r, &w) in expected_widths.iter().enumerate() {
        let size = r + 4;
        let conj = conjugated_hankel(r, size)?;
        report.compare(format!("shift {r} bandwidth"), &w, &conj.bandwidth.width);
        let m = &conj.matrix;
        let first: Vec<BivarPoly> = (0..=w).map(|d| m.get(0, d).clone()).collect();
        let last: Vec<BivarPoly> = (0..=w).map(|d| m.get(size - 1, size - 1 - d).clone()).collect();
        match displayed_rows(r) {
            Some((top, bottom)) => {
                let top: Vec<BivarPoly> = top.iter().map(|s| s.parse().expect("literal")).collect();
                let bottom: Vec<BivarPoly> = bottom.iter().map(|s| s.parse().expect("literal")).collect();
                report.compare(format!("shift {r} first row"), &join(&top), &join(&first));
                report.compare(format!("shift {r} last row"), &join(&bottom), &join(&last));
            }
            None => {
                let spine: Vec<BivarPoly> = (0..=w).map(|d| spine_band(r, d)).collect();
                report.compare(format!("shift {r} last row"), &join(&spine), &join(&last));
            }
        }
    }
    Ok(report)
}

/// Closed minors of the pentadiagonal family against direct determinants,
/// plus the `(8,5,1,1)` instance.
pub fn penta_suite(tuples: &[[i64; 4]]) -> Result<ConjectureReport> {
    let n = 8;
    let mut report = ConjectureReport::new("penta-minors", format!("{} tuples and (8,5,1,1), n<={n}", tuples.len()));
    for t in tuples {
        let [a, b, c, r] = t.map(Integer::from);
        let direct = principal_minors(&pentadiagonal(&a, &b, &c, &r, n), n)?;
        let gf = penta_minors_gf(&a, &b, &c, &r).expand(n)?;
        report.compare(format!("(a,b,c,r)=({a},{b},{c},{r})"), &join(&direct), &join(&gf.coeffs()[1..]));
    }
    let [a, b, c, r] = [8, 5, 1, 1].map(Integer::from);
    let gf = penta_minors_gf(&a, &b, &c, &r);
    let num = crate::series::Polynomial::from_i64(&[1, 0, -1]);
    let den = crate::series::Polynomial::from_i64(&[1, -7, 17, -17, 7, -1]);
    report.compare("(8,5,1,1) numerator", &num, &gf.numerator);
    report.compare("(8,5,1,1) denominator", &den, &gf.denominator);
    let coeffs = gf.expand(6)?;
    report.compare("(8,5,1,1) expansion", &join(&ints(&[7, 31, 115, 390, 1254, 3893])), &join(&coeffs.coeffs()[1..]));
    let direct = principal_minors(&pentadiagonal(&a, &b, &c, &r, n), n)?;
    report.compare("(8,5,1,1) direct minors", &join(&direct), &join(&gf.expand(n)?.coeffs()[1..]));
    Ok(report)
}

/// Consecutive differences for shifts 1..=4 and the spine decomposition for 1..=6.
pub fn residuals_suite() -> Result<ConjectureReport> {
    let mut report = verify_identity("consecutive-diff", &IdentityParams::default())?;
    report.name = "residuals".into();
    report.ranges = "differences r=1..4, spine r=1..6".into();
    for r in 1..=6 {
        let n = r + 4;
        let conj = conjugated_hankel(r, n)?.matrix;
        let lhs = spine_toeplitz(r, n)?.sub(&conj)?;
        report.compare(format!("spine r={r}"), &finite_hankel(&residual_seq(r), n), &lhs);
    }
    Ok(report)
}

/// First column of the inverse of the rescaled matrix generated by the
/// conjugated Hankel matrix, with alternating signs removed.
pub fn production_first_column(shift: usize, a: i64, b: i64, size: usize) -> Result<Vec<Integer>> {
    if b == 0 {
        return Err(Error::InvalidParameter("b must be nonzero".into()));
    }
    let (a, b) = (Integer::from(a), Integer::from(b));
    let seq = combo_seq(shift, &a, &b, 2 * size);
    let t = if shift == 0 { RiordanPair::ballot(size) } else { RiordanPair::ballot_tilde(size) };
    let p = conjugate_and_bands(&t.matrix(size)?, &hankel_matrix(&seq, size - 1)?)?.matrix;
    let l = matrix_from_production(&HessenbergMatrix::new(p)?, size)?;
    let inv = column_rescale(&l, &b)?.inverse()?;
    Ok((0..size).map(|n| if n % 2 == 0 { inv.get(n, 0).clone() } else { -inv.get(n, 0).clone() }).collect())
}

/// The worked example end to end, then both shifts on `pairs`.
pub fn production_suite(pairs: &[(i64, i64)]) -> Result<ConjectureReport> {
    let mut report = ConjectureReport::new("production", format!("worked example and {} (a,b) pairs", pairs.len()));
    let size = 5;
    let (a, b) = (Integer::from(2), Integer::from(3));
    let seq = combo_seq(1, &a, &b, 2 * size);
    report.compare("sequence", &join(&ints(&[8, 19, 52, 154, 480, 1551, 5148])), &join(&seq[..7]));
    let conj =
        conjugate_and_bands(&RiordanPair::ballot_tilde(size).matrix(size)?, &hankel_matrix(&seq, size - 1)?)?.matrix;
    let tri = HessenbergMatrix::tridiagonal(size, &Integer::from(8), &Integer::from(3), &Integer::from(3));
    report.compare("conjugation", tri.matrix(), &conj);
    let l = matrix_from_production(&tri, size)?;
    let rows = [&[1][..], &[8, 3], &[73, 48, 9], &[728, 630, 216, 27], &[7714, 7872, 3699, 864, 81]];
    let want = crate::matrix::LowerTriangular::from_triangle_rows(rows.iter().map(|r| ints(r)).collect())?;
    report.compare("generated array", want.matrix(), l.matrix());
    let scaled = column_rescale(&l, &b)?;
    let rows = [&[1][..], &[8, 1], &[73, 16, 1], &[728, 210, 24, 1], &[7714, 2624, 411, 32, 1]];
    let want = crate::matrix::LowerTriangular::from_triangle_rows(rows.iter().map(|r| ints(r)).collect())?;
    report.compare("rescaled by 3^k", want.matrix(), scaled.matrix());
    let p = production_matrix(&scaled)?;
    let want = HessenbergMatrix::tridiagonal(size - 1, &Integer::from(8), &Integer::from(9), &Integer::from(1));
    report.compare("rescaled production matrix", want.matrix(), p.matrix());
    let inv = scaled.inverse()?;
    let col: Vec<Integer> = (0..size).map(|n| inv.get(n, 0).clone()).collect();
    report.compare("inverse first column", &join(&ints(&[1, -8, 55, -368, 2449])), &join(&col));
    let h = hankel_transform(&seq, 3)?;
    report.compare("Hankel transform", &join(&ints(&[8, 55, 368, 2449])), &join(&h));

    let size = 7;
    for &(a, b) in pairs {
        for shift in 0..=1 {
            let label = format!("shift {shift} (a,b)=({a},{b})");
            match production_first_column(shift, a, b, size) {
                Ok(col) => {
                    let h =
                        hankel_transform(&combo_seq(shift, &Integer::from(a), &Integer::from(b), 2 * size), size - 2)?;
                    let mut want = vec![Integer::from(1)];
                    want.extend(h);
                    report.compare(label, &join(&want), &join(&col));
                }
                Err(e) => report.push(Case::check(label, false, e.to_string())),
            }
        }
    }
    Ok(report)
}

/// Catalan and worked-example J-fractions, and the ratio grid.
pub fn jfrac_suite() -> Result<ConjectureReport> {
    let mut report = ConjectureReport::new("jfrac", "ratio grid m<=3, a,b in {1,2,3}, n<=5");
    let c: Vec<Rational> = catalan_seq(12).into_iter().map(Rational::from_integer).collect();
    let jf = jfraction_extract(&c, 6)?;
    report.compare("Catalan alphas", &join(&[1, 2, 2, 2, 2, 2].map(q)), &join(&jf.alphas));
    report.compare("Catalan betas", &join(&[1, 1, 1, 1, 1].map(q)), &join(&jf.betas));
    let tri = tridiag_from_jfraction(&jf, 3)?;
    let want = Matrix::from_fn(3, 3, |i, j| q([[1, 1, 0], [1, 2, 1], [0, 1, 2]][i][j]));
    report.compare("Catalan tridiagonal", &want, tri.matrix());

    let one = Rational::one();
    let seq = combo_seq(2, &one, &one, 10);
    let jf = jfraction_extract(&seq, 3)?;
    report.compare("example alphas", &join(&[rational(19, 7), rational(489, 217)]), &join(&jf.alphas[..2]));
    report.compare("example betas", &join(&[rational(31, 49), rational(805, 961)]), &join(&jf.betas[..2]));
    let minors = ratio_check(2, &one, &one, 4)?;
    let got: Vec<String> = minors.cases.iter().map(|c| c.actual.clone()).collect();
    let want = [rational(19, 7), rational(170, 31), rational(1075, 115), rational(5580, 390), rational(25529, 1254)];
    report.compare("minors m=2 a=b=1", &join(&want), &got.join(","));

    let values: Vec<Rational> = (1..=3).map(q).collect();
    report.extend(ratio_grid(3, &values, 5)?);
    Ok(report)
}

/// Every flagged reading as a case; adopted readings must verify.
pub fn flagged_suite(n_max: usize) -> Result<ConjectureReport> {
    let list = flagged_readings(n_max)?;
    let cases = list.iter().map(|f| Case::check(f.tag, f.acceptable(), f.to_string())).collect();
    Ok(ConjectureReport::with_cases("flagged", format!("n<={n_max}"), cases))
}

fn q(v: i64) -> Rational {
    Rational::from_integer(Integer::from(v))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_suite_passes() {
        let cfg = SuiteConfig { n_max: 4, m_max: 4, ..Default::default() };
        for name in SUITE_NAMES {
            let r = run_suite(name, &cfg).unwrap();
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn production_column_matches_transform() {
        let col = production_first_column(1, 2, 3, 5).unwrap();
        assert_eq!(join(&col), "1,8,55,368,2449");
        assert!(production_first_column(0, 1, 0, 4).is_err());
    }

    #[test]
    fn unknown_suite() {
        assert!(run_suite("nope", &SuiteConfig::default()).is_err());
    }
}
