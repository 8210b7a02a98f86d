//! Dense integer matrices with checked arithmetic.

use std::fmt;
use std::ops::{Index, IndexMut};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::LatticeError;
use crate::scalar::{self, Scalar};

/// Row-major dense matrix over an exact integer scalar.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    /// Builds a matrix from row vectors. `cols` is only consulted when
    /// `rows` is empty.
    pub fn from_rows(rows: Vec<Vec<T>>, cols: usize) -> Result<Self, LatticeError> {
        let cols = rows.first().map_or(cols, Vec::len);
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * cols);
        for row in rows {
            if row.len() != cols {
                return Err(LatticeError::DimensionMismatch { expected: cols, found: row.len() });
            }
            data.extend(row);
        }
        Ok(Matrix { rows: nrows, cols, data })
    }

    /// Convenience constructor from small literals.
    pub fn from_i64_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self, LatticeError> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        Self::from_rows(rows.iter().map(|r| r.as_ref().iter().map(|&v| T::of(v)).collect()).collect(), cols)
    }

    pub fn from_diagonal(rows: usize, cols: usize, diag: &[T]) -> Self {
        let mut m = Self::zeros(rows, cols);
        for (i, d) in diag.iter().enumerate().take(rows.min(cols)) {
            m[(i, i)] = d.clone();
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[T]> + '_ {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        self.rows().map(<[T]>::to_vec).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    pub fn diagonal(&self) -> Vec<T> {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)].clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self, LatticeError> {
        if self.cols != rhs.rows {
            return Err(LatticeError::DimensionMismatch { expected: self.cols, found: rhs.rows });
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let prod = scalar::mul(a, &rhs[(k, j)])?;
                    out[(i, j)] = scalar::add(&out[(i, j)], &prod)?;
                }
            }
        }
        Ok(out)
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Result<T, LatticeError> {
        if self.rows != self.cols {
            return Err(LatticeError::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(T::one());
        }
        let mut a = self.clone();
        let mut negate = false;
        let mut prev = T::one();
        for k in 0..n - 1 {
            if a[(k, k)].is_zero() {
                match (k + 1..n).find(|&r| !a[(r, k)].is_zero()) {
                    Some(r) => {
                        a.swap_rows(k, r);
                        negate = !negate;
                    }
                    None => return Ok(T::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let lhs = scalar::mul(&a[(i, j)], &a[(k, k)])?;
                    let rhs = scalar::mul(&a[(i, k)], &a[(k, j)])?;
                    // exact by Sylvester's identity
                    a[(i, j)] = scalar::sub(&lhs, &rhs)?.div_floor(&prev);
                }
                a[(i, k)] = T::zero();
            }
            prev = a[(k, k)].clone();
        }
        let det = a[(n - 1, n - 1)].clone();
        if negate {
            Ok(det.checked_neg_value()?)
        } else {
            Ok(det)
        }
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub(crate) fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// `row[dst] -= q * row[src]`
    pub(crate) fn row_sub_mul(&mut self, dst: usize, q: &T, src: usize) -> Result<(), LatticeError> {
        if q.is_zero() {
            return Ok(());
        }
        for j in 0..self.cols {
            let v = scalar::sub_mul(&self[(dst, j)], q, &self[(src, j)])?;
            self[(dst, j)] = v;
        }
        Ok(())
    }

    /// `col[dst] -= q * col[src]`
    pub(crate) fn col_sub_mul(&mut self, dst: usize, q: &T, src: usize) -> Result<(), LatticeError> {
        if q.is_zero() {
            return Ok(());
        }
        for i in 0..self.rows {
            let v = scalar::sub_mul(&self[(i, dst)], q, &self[(i, src)])?;
            self[(i, dst)] = v;
        }
        Ok(())
    }

    pub(crate) fn negate_row(&mut self, i: usize) -> Result<(), LatticeError> {
        for j in 0..self.cols {
            let v = self[(i, j)].checked_neg_value()?;
            self[(i, j)] = v;
        }
        Ok(())
    }

    /// Replaces columns `(a, b)` by `(s*a + t*b, u*a + v*b)`.
    pub(crate) fn combine_cols(&mut self, a: usize, b: usize, [s, t, u, v]: [&T; 4]) -> Result<(), LatticeError> {
        for i in 0..self.rows {
            let (x, y) = (self[(i, a)].clone(), self[(i, b)].clone());
            self[(i, a)] = scalar::add(&scalar::mul(s, &x)?, &scalar::mul(t, &y)?)?;
            self[(i, b)] = scalar::add(&scalar::mul(u, &x)?, &scalar::mul(v, &y)?)?;
        }
        Ok(())
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;

    fn index(&self, (i, j): (usize, usize)) -> &T {
        assert!(i < self.rows && j < self.cols, "matrix index ({i}, {j}) out of bounds");
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        assert!(i < self.rows && j < self.cols, "matrix index ({i}, {j}) out of bounds");
        &mut self.data[i * self.cols + j]
    }
}

impl<T: Scalar> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix{}x{}{:?}", self.rows, self.cols, self.to_rows())
    }
}

impl<T: Scalar> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.data.iter().map(|v| v.to_string().len()).max().unwrap_or(1);
        for row in self.rows() {
            write!(f, "[")?;
            for (j, v) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{v:>width$}")?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
#[serde(bound = "")]
struct MatrixRepr<T: Scalar> {
    rows: usize,
    cols: usize,
    #[serde(with = "scalar::serde_int::vec2")]
    entries: Vec<Vec<T>>,
}

impl<T: Scalar> Serialize for Matrix<T> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        MatrixRepr { rows: self.rows, cols: self.cols, entries: self.to_rows() }.serialize(s)
    }
}

impl<'de, T: Scalar> Deserialize<'de> for Matrix<T> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = MatrixRepr::<T>::deserialize(d)?;
        if repr.entries.len() != repr.rows {
            return Err(serde::de::Error::custom("row count does not match `rows`"));
        }
        Matrix::from_rows(repr.entries, repr.cols).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn determinant_small_cases() {
        let m = Matrix::<i64>::from_i64_rows(&[[2, 0, -1], [0, 4, -2], [0, 0, 2]]).unwrap();
        assert_eq!(m.determinant().unwrap(), 16);
        let m = Matrix::<i64>::from_i64_rows(&[[0, 1], [1, 0]]).unwrap();
        assert_eq!(m.determinant().unwrap(), -1);
        let m = Matrix::<i64>::from_i64_rows(&[[1, 2], [2, 4]]).unwrap();
        assert_eq!(m.determinant().unwrap(), 0);
        assert_eq!(Matrix::<i64>::zeros(0, 0).determinant().unwrap(), 1);
    }

    #[test]
    fn ragged_rows_rejected() {
        let err = Matrix::<i64>::from_rows(vec![vec![1, 2], vec![3]], 2).unwrap_err();
        assert_eq!(err, LatticeError::DimensionMismatch { expected: 2, found: 1 });
    }

    #[test]
    fn product_overflow_is_an_error() {
        let m = Matrix::<i64>::from_i64_rows(&[[i64::MAX, 1]]).unwrap();
        let t = m.transpose();
        assert_eq!(m.checked_mul(&t), Err(LatticeError::Overflow));
    }

    #[test]
    fn json_uses_strings_only_for_wide_values() {
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        let m = Matrix::from_rows(vec![vec![BigInt::from(-3), big]], 2).unwrap();
        let js = serde_json::to_string(&m).unwrap();
        assert_eq!(js, r#"{"rows":1,"cols":2,"entries":[[-3,"123456789012345678901234567890"]]}"#);
        let back: Matrix<BigInt> = serde_json::from_str(&js).unwrap();
        assert_eq!(back, m);
    }
}
