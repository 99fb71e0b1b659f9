//! Dense exact matrices and the structured wrappers used throughout:
//! lower-triangular (Riordan realizations) and Hessenberg (production
//! matrices).

use std::fmt;

use crate::error::{Error, Result};
use crate::ring::Ring;

/// Row-major dense matrix over a [`Ring`].
#[derive(Clone, PartialEq, Debug)]
pub struct Matrix<R> {
    rows: usize,
    cols: usize,
    data: Vec<R>,
}

/// Exact bandwidth `max |i − j|` over nonzero entries, with the entry that
/// attains it. The zero matrix has width 0 and no witness.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Bandwidth {
    pub width: usize,
    pub witness: Option<(usize, usize)>,
}

impl<R: Ring> Matrix<R> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![R::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { R::one() } else { R::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> R) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    /// Builds from nested rows; all rows must have equal length.
    pub fn from_rows(rows: Vec<Vec<R>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::SizeMismatch("ragged rows".into()));
        }
        let n = rows.len();
        Ok(Self { rows: n, cols, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&v| R::from_i64(v)).collect()).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: R) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[R] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<R> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Matrix<S> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Top-left `rows × cols` block.
    pub fn block(&self, rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |i, j| self.get(i, j).clone())
    }

    /// Top-left `k × k` block.
    pub fn leading(&self, k: usize) -> Self {
        self.block(k, k)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(x, y)| x.add(y)).collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(x, y)| x.sub(y)).collect(),
        })
    }

    fn check_same_shape(&self, other: &Self) -> Result<()> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::SizeMismatch(format!("{}x{} vs {}x{}", self.rows, self.cols, other.rows, other.cols)));
        }
        Ok(())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::SizeMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let x = self.get(i, k);
                if x.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let y = other.get(k, j);
                    if !y.is_zero() {
                        let v = out.get(i, j).add(&x.mul(y));
                        out.set(i, j, v);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[R]) -> Result<Vec<R>> {
        if v.len() != self.cols {
            return Err(Error::SizeMismatch(format!("vector of length {} for {} columns", v.len(), self.cols)));
        }
        Ok((0..self.rows)
            .map(|i| self.row(i).iter().zip(v).fold(R::zero(), |acc, (x, y)| acc.add(&x.mul(y))))
            .collect())
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// Entry `(i, j)` depends only on `i + j`.
    pub fn is_hankel(&self) -> bool {
        (0..self.rows)
            .all(|i| (0..self.cols).all(|j| i == 0 || j + 1 == self.cols || self.get(i, j) == self.get(i - 1, j + 1)))
    }

    pub fn is_lower_triangular(&self) -> bool {
        (0..self.rows).all(|i| (i + 1..self.cols).all(|j| self.get(i, j).is_zero()))
    }

    pub fn bandwidth(&self) -> Bandwidth {
        let mut best = Bandwidth { width: 0, witness: None };
        for i in 0..self.rows {
            for j in 0..self.cols {
                if self.get(i, j).is_zero() {
                    continue;
                }
                let d = i.abs_diff(j);
                if best.witness.is_none() || d > best.width {
                    best = Bandwidth { width: d, witness: Some((i, j)) };
                }
            }
        }
        best
    }

    /// Symmetric tridiagonal-style band constructor: `bands[d]` fills the
    /// entries with `|i − j| = d`.
    pub fn symmetric_banded(n: usize, bands: &[R]) -> Self {
        Self::from_fn(n, n, |i, j| bands.get(i.abs_diff(j)).cloned().unwrap_or_else(R::zero))
    }
}

impl<R: Ring> fmt::Display for Matrix<R> {
    /// One row per line, entries separated by `, ` and wrapped in brackets.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// A square lower-triangular matrix.
#[derive(Clone, PartialEq, Debug)]
pub struct LowerTriangular<R>(Matrix<R>);

impl<R: Ring> LowerTriangular<R> {
    pub fn new(m: Matrix<R>) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::Shape("lower-triangular matrix must be square".into()));
        }
        if !m.is_lower_triangular() {
            return Err(Error::Shape("nonzero entry above the diagonal".into()));
        }
        Ok(Self(m))
    }

    /// Builds from the leading rows of a triangle: row `i` lists entries `0..=i`.
    pub fn from_triangle_rows(rows: Vec<Vec<R>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().enumerate().any(|(i, r)| r.len() > n || r.iter().skip(i + 1).any(|x| !x.is_zero())) {
            return Err(Error::Shape("row longer than its index allows".into()));
        }
        Ok(Self(Matrix::from_fn(n, n, |i, j| rows[i].get(j).cloned().unwrap_or_else(R::zero))))
    }

    pub fn size(&self) -> usize {
        self.0.rows()
    }

    pub fn matrix(&self) -> &Matrix<R> {
        &self.0
    }

    pub fn into_matrix(self) -> Matrix<R> {
        self.0
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        self.0.get(i, j)
    }

    pub fn has_unit_diagonal(&self) -> bool {
        (0..self.size()).all(|i| self.get(i, i).is_one())
    }

    pub fn leading(&self, k: usize) -> Self {
        Self(self.0.leading(k))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        Ok(Self(self.0.mul(&other.0)?))
    }

    /// Exact inverse by forward substitution; every division by a diagonal
    /// entry must be exact in the ring.
    pub fn inverse(&self) -> Result<Self> {
        let n = self.size();
        let mut inv = Matrix::zeros(n, n);
        for j in 0..n {
            for i in j..n {
                let mut acc = if i == j { R::one() } else { R::zero() };
                for k in j..i {
                    acc = acc.sub(&self.get(i, k).mul(inv.get(k, j)));
                }
                let d = self.get(i, i);
                if d.is_zero() {
                    return Err(Error::SingularMatrix);
                }
                let v = acc
                    .exact_div(d)
                    .ok_or_else(|| Error::InexactDivision { dividend: acc.to_string(), divisor: d.to_string() })?;
                inv.set(i, j, v);
            }
        }
        Ok(Self(inv))
    }
}

/// Square matrix with zeros above the superdiagonal (`(i, j) = 0` for `j > i + 1`).
#[derive(Clone, PartialEq, Debug)]
pub struct HessenbergMatrix<R>(Matrix<R>);

impl<R: Ring> HessenbergMatrix<R> {
    pub fn new(m: Matrix<R>) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::Shape("Hessenberg matrix must be square".into()));
        }
        let n = m.rows();
        if (0..n).any(|i| (i + 2..n).any(|j| !m.get(i, j).is_zero())) {
            return Err(Error::Shape("nonzero entry above the superdiagonal".into()));
        }
        Ok(Self(m))
    }

    /// `diag` on the diagonal, `sub` below it, `sup` above it.
    pub fn tridiagonal(n: usize, diag: &R, sub: &R, sup: &R) -> Self {
        Self(Matrix::from_fn(n, n, |i, j| {
            if i == j {
                diag.clone()
            } else if i == j + 1 {
                sub.clone()
            } else if j == i + 1 {
                sup.clone()
            } else {
                R::zero()
            }
        }))
    }

    pub fn size(&self) -> usize {
        self.0.rows()
    }

    pub fn matrix(&self) -> &Matrix<R> {
        &self.0
    }

    pub fn into_matrix(self) -> Matrix<R> {
        self.0
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        self.0.get(i, j)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Integer;

    type M = Matrix<Integer>;

    #[test]
    fn bandwidth_reports_witness() {
        let m = M::from_i64_rows(&[&[1, 2, 0], &[2, 1, 0], &[0, 0, 5]]).unwrap();
        assert_eq!(m.bandwidth(), Bandwidth { width: 1, witness: Some((0, 1)) });
        assert_eq!(M::zeros(3, 3).bandwidth(), Bandwidth { width: 0, witness: None });
        let d = M::from_i64_rows(&[&[0, 0], &[0, 4]]).unwrap();
        assert_eq!(d.bandwidth(), Bandwidth { width: 0, witness: Some((1, 1)) });
    }

    #[test]
    fn structure_predicates() {
        let h = M::from_fn(4, 4, |i, j| Integer::from((i + j) as i64 * 3 + 1));
        assert!(h.is_hankel() && h.is_symmetric());
        let t = M::symmetric_banded(4, &[Integer::from(8), Integer::from(3)]);
        assert!(t.is_symmetric() && !t.is_hankel());
        assert_eq!(t.bandwidth().width, 1);
    }

    #[test]
    fn lower_triangular_inverse() {
        let pascal = LowerTriangular::new(M::from_fn(6, 6, |i, j| {
            Integer::from((0..j).fold(1i64, |acc, k| acc * (i as i64 - k as i64) / (k as i64 + 1)))
        }))
        .unwrap();
        let inv = pascal.inverse().unwrap();
        assert_eq!(pascal.mul(&inv).unwrap().into_matrix(), M::identity(6));
        assert_eq!(*inv.get(4, 2), Integer::from(6));
        assert_eq!(*inv.get(3, 2), Integer::from(-3));

        let two = LowerTriangular::new(M::from_i64_rows(&[&[1, 0], &[1, 2]]).unwrap()).unwrap();
        assert!(matches!(two.inverse(), Err(Error::InexactDivision { .. })));
        assert!(LowerTriangular::new(M::from_i64_rows(&[&[1, 1], &[0, 1]]).unwrap()).is_err());
    }

    #[test]
    fn hessenberg_shape_checked() {
        assert!(HessenbergMatrix::new(M::from_i64_rows(&[&[1, 1, 1], &[1, 1, 1], &[1, 1, 1]]).unwrap()).is_err());
        let t = HessenbergMatrix::tridiagonal(3, &Integer::from(8), &Integer::from(3), &Integer::from(3));
        assert_eq!(t.matrix().row(1), &[Integer::from(3), Integer::from(8), Integer::from(3)]);
    }
}
