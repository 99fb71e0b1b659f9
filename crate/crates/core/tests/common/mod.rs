//! Independent oracles: nothing here calls the library's algorithms, only
//! its ring types.
#![allow(dead_code)]

use catalan_hankel::poly::BivarPoly;
use catalan_hankel::ring::{Integer, Ring};

/// Catalan numbers from `C_{n+1} = Σ C_k C_{n−k}`.
pub fn catalan_rec(n_max: usize) -> Vec<Integer> {
    let mut c = vec![Integer::from(1)];
    for n in 0..n_max {
        let next = (0..=n).fold(Integer::from(0), |acc, k| acc + &c[k] * &c[n - k]);
        c.push(next);
    }
    c
}

/// Pascal-triangle binomial with `C(n,k) = 0` outside `0 ≤ k ≤ n`.
pub fn choose(n: i64, k: i64) -> Integer {
    if n < 0 || k < 0 || k > n {
        return Integer::from(0);
    }
    let mut row = vec![Integer::from(1)];
    for _ in 0..n {
        let mut next = vec![Integer::from(1); row.len() + 1];
        for i in 1..row.len() {
            next[i] = &row[i - 1] + &row[i];
        }
        row = next;
    }
    row[k as usize].clone()
}

/// Cofactor expansion along the first row.
pub fn det_cofactor<R: Ring>(m: &[Vec<R>]) -> R {
    let n = m.len();
    if n == 0 {
        return R::one();
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = R::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<R>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, x)| x.clone()).collect())
            .collect();
        let term = m[0][j].mul(&det_cofactor(&minor));
        acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    acc
}

/// Hankel transform `h_0..=h_{n_max}` by cofactor expansion.
pub fn hankel_oracle<R: Ring>(seq: &[R], n_max: usize) -> Vec<R> {
    (0..=n_max)
        .map(|n| {
            let m: Vec<Vec<R>> = (0..=n).map(|i| (0..=n).map(|j| seq[i + j].clone()).collect()).collect();
            det_cofactor(&m)
        })
        .collect()
}

/// Coefficients `0..=count` of `num/den` by the linear recurrence; `den[0] = 1`.
pub fn expand_oracle<R: Ring>(num: &[R], den: &[R], count: usize) -> Vec<R> {
    assert!(den[0].is_one());
    let mut out: Vec<R> = Vec::new();
    for n in 0..=count {
        let mut c = num.get(n).cloned().unwrap_or_else(R::zero);
        for i in 1..den.len().min(n + 1) {
            c = c.sub(&den[i].mul(&out[n - i]));
        }
        out.push(c);
    }
    out
}

/// Product of polynomials given as coefficient lists.
pub fn poly_mul<R: Ring>(p: &[R], q: &[R]) -> Vec<R> {
    let mut out = vec![R::zero(); p.len() + q.len() - 1];
    for (i, x) in p.iter().enumerate() {
        for (j, y) in q.iter().enumerate() {
            out[i + j] = out[i + j].add(&x.mul(y));
        }
    }
    out
}

pub fn poly_pow<R: Ring>(p: &[R], e: u32) -> Vec<R> {
    (0..e).fold(vec![R::one()], |acc, _| poly_mul(&acc, p))
}

pub fn mat_mul<R: Ring>(x: &[Vec<R>], y: &[Vec<R>]) -> Vec<Vec<R>> {
    let (n, k, m) = (x.len(), y.len(), y[0].len());
    (0..n).map(|i| (0..m).map(|j| (0..k).fold(R::zero(), |acc, t| acc.add(&x[i][t].mul(&y[t][j])))).collect()).collect()
}

pub fn transpose<R: Ring>(x: &[Vec<R>]) -> Vec<Vec<R>> {
    (0..x[0].len()).map(|j| x.iter().map(|row| row[j].clone()).collect()).collect()
}

/// `a·C_{n+m} + b·C_{n+m+1}` over ℤ[a,b].
pub fn symbolic_combo_oracle(m: usize, count: usize) -> Vec<BivarPoly> {
    let c = catalan_rec(count + m + 1);
    (0..count).map(|n| BivarPoly::linear(c[n + m].clone(), c[n + m + 1].clone())).collect()
}

/// `(−1)^{n−k} C(n+k+extra, 2k+extra)` for `n, k < size`; `extra = 0` gives
/// `M`, `extra = 1` gives `M̃`.
pub fn ballot_oracle<R: Ring>(size: usize, extra: i64) -> Vec<Vec<R>> {
    (0..size)
        .map(|n| {
            (0..size)
                .map(|k| {
                    let v = R::from_integer(&choose((n + k) as i64 + extra, 2 * k as i64 + extra));
                    if (n + k) % 2 == 1 {
                        v.neg()
                    } else {
                        v
                    }
                })
                .collect()
        })
        .collect()
}
