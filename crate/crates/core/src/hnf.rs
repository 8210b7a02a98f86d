//! Row-style Hermite normal form.
//!
//! Convention: pivots are positive, pivot columns strictly increase, every
//! entry above a pivot lies in `[0, pivot)`, zero rows are dropped. Two
//! integer matrices have the same row span iff their HNFs are identical.

use crate::error::LatticeError;
use crate::matrix::Matrix;
use crate::scalar::{self, Scalar};

/// Incrementally maintained HNF basis of a subgroup of `Z^dim`.
#[derive(Debug, Clone)]
pub(crate) struct HnfBuilder<T> {
    dim: usize,
    rows: Vec<Vec<T>>,
    pivots: Vec<usize>,
}

fn leading<T: Scalar>(v: &[T]) -> Option<usize> {
    v.iter().position(|x| !x.is_zero())
}

fn combine<T: Scalar>(a: &T, x: &[T], b: &T, y: &[T]) -> Result<Vec<T>, LatticeError> {
    x.iter().zip(y).map(|(xi, yi)| Ok(scalar::add(&scalar::mul(a, xi)?, &scalar::mul(b, yi)?)?)).collect()
}

fn sub_mul_in_place<T: Scalar>(dst: &mut [T], q: &T, src: &[T]) -> Result<(), LatticeError> {
    if q.is_zero() {
        return Ok(());
    }
    for (d, s) in dst.iter_mut().zip(src) {
        *d = scalar::sub_mul(d, q, s)?;
    }
    Ok(())
}

impl<T: Scalar> HnfBuilder<T> {
    pub(crate) fn new(dim: usize) -> Self {
        HnfBuilder { dim, rows: Vec::new(), pivots: Vec::new() }
    }

    pub(crate) fn dim(&self) -> usize {
        self.dim
    }

    /// Adds a generator. Returns whether the spanned subgroup grew.
    pub(crate) fn insert(&mut self, v: &[T]) -> Result<bool, LatticeError> {
        if v.len() != self.dim {
            return Err(LatticeError::DimensionMismatch { expected: self.dim, found: v.len() });
        }
        let mut v = v.to_vec();
        let mut idx = 0;
        let mut changed = false;
        while let Some(c) = leading(&v) {
            while idx < self.rows.len() && self.pivots[idx] < c {
                idx += 1;
            }
            if idx < self.rows.len() && self.pivots[idx] == c {
                let b = &self.rows[idx];
                let (bc, vc) = (b[c].clone(), v[c].clone());
                if vc.is_multiple_of(&bc) {
                    let q = vc.div_floor(&bc);
                    sub_mul_in_place(&mut v, &q, b)?;
                } else {
                    // [b; v] <- [[s, t], [vc/g, -bc/g]] [b; v], a unimodular step
                    let (g, s, t) = scalar::ext_gcd(&bc, &vc)?;
                    let new_b = combine(&s, b, &t, &v)?;
                    let new_v = combine(&vc.div_floor(&g), b, &bc.div_floor(&g).checked_neg_value()?, &v)?;
                    self.rows[idx] = new_b;
                    v = new_v;
                    changed = true;
                }
                idx += 1;
            } else {
                if v[c].is_negative() {
                    for x in v.iter_mut() {
                        *x = x.checked_neg_value()?;
                    }
                }
                self.rows.insert(idx, v);
                self.pivots.insert(idx, c);
                changed = true;
                break;
            }
        }
        if changed {
            self.reduce()?;
        }
        Ok(changed)
    }

    /// Brings entries above each pivot into `[0, pivot)`.
    fn reduce(&mut self) -> Result<(), LatticeError> {
        for i in 0..self.rows.len() {
            let c = self.pivots[i];
            let (above, rest) = self.rows.split_at_mut(i);
            let pivot_row = &rest[0];
            for row in above.iter_mut() {
                let q = scalar::div_floor(&row[c], &pivot_row[c])?;
                sub_mul_in_place(row, &q, pivot_row)?;
            }
        }
        Ok(())
    }

    pub(crate) fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub(crate) fn into_matrix(self) -> Matrix<T> {
        Matrix::from_rows(self.rows, self.dim).expect("builder rows have the ambient width")
    }
}

/// Canonical row HNF of the row span of `m`. Zero rows are dropped, so the
/// result has `rank(m)` rows.
pub fn hnf<T: Scalar>(m: &Matrix<T>) -> Result<Matrix<T>, LatticeError> {
    let mut builder = HnfBuilder::new(m.ncols());
    for row in m.rows() {
        builder.insert(row)?;
    }
    Ok(builder.into_matrix())
}

/// Checks the HNF shape conditions on `m` without recomputing anything.
pub fn is_hnf<T: Scalar>(m: &Matrix<T>) -> bool {
    let mut last: Option<usize> = None;
    let mut pivots = Vec::with_capacity(m.nrows());
    for row in m.rows() {
        let Some(c) = leading(row) else { return false };
        if last.is_some_and(|p| c <= p) || !row[c].is_positive() {
            return false;
        }
        last = Some(c);
        pivots.push(c);
    }
    pivots.iter().enumerate().all(|(i, &c)| {
        (0..i).all(|j| {
            let x = &m[(j, c)];
            !x.is_negative() && x < &m[(i, c)]
        })
    })
}
