//! Smith normal form with unimodular witnesses.

use serde::{Deserialize, Serialize};

use crate::error::LatticeError;
use crate::matrix::Matrix;
use crate::scalar::{self, Scalar};

/// `u * original * v = s`, with `s` diagonal and its nonzero diagonal
/// entries positive and forming a divisibility chain.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(bound = "")]
pub struct SmithDecomposition<T: Scalar> {
    pub original: Matrix<T>,
    pub u: Matrix<T>,
    pub s: Matrix<T>,
    pub v: Matrix<T>,
}

impl<T: Scalar> SmithDecomposition<T> {
    /// Nonzero diagonal entries of `s`, in chain order.
    pub fn invariant_factors(&self) -> Vec<T> {
        self.s.diagonal().into_iter().filter(|d| !d.is_zero()).collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }

    /// Re-derives every structural claim: `u*a*v = s`, unimodularity of
    /// both witnesses, diagonal shape, positivity and the divisibility chain.
    pub fn verify(&self) -> Result<bool, LatticeError> {
        let uav = self.u.checked_mul(&self.original)?.checked_mul(&self.v)?;
        if uav != self.s {
            return Ok(false);
        }
        for m in [&self.u, &self.v] {
            if !m.determinant()?.abs().is_one() {
                return Ok(false);
            }
        }
        let (r, c) = self.s.shape();
        for i in 0..r {
            for j in 0..c {
                if i != j && !self.s[(i, j)].is_zero() {
                    return Ok(false);
                }
            }
        }
        let diag = self.s.diagonal();
        let nonzero = diag.iter().take_while(|d| !d.is_zero()).count();
        if diag[nonzero..].iter().any(|d| !d.is_zero()) {
            return Ok(false);
        }
        Ok(diag[..nonzero].iter().all(T::is_positive) && diag[..nonzero].windows(2).all(|w| w[1].is_multiple_of(&w[0])))
    }
}

struct Work<T> {
    s: Matrix<T>,
    u: Matrix<T>,
    v: Matrix<T>,
}

impl<T: Scalar> Work<T> {
    fn swap_rows(&mut self, a: usize, b: usize) {
        self.s.swap_rows(a, b);
        self.u.swap_rows(a, b);
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        self.s.swap_cols(a, b);
        self.v.swap_cols(a, b);
    }

    fn row_sub_mul(&mut self, dst: usize, q: &T, src: usize) -> Result<(), LatticeError> {
        self.s.row_sub_mul(dst, q, src)?;
        self.u.row_sub_mul(dst, q, src)
    }

    fn col_sub_mul(&mut self, dst: usize, q: &T, src: usize) -> Result<(), LatticeError> {
        self.s.col_sub_mul(dst, q, src)?;
        self.v.col_sub_mul(dst, q, src)
    }

    /// Position of the smallest nonzero |entry| in the block `[t.., t..]`.
    fn smallest_in_block(&self, t: usize) -> Option<(usize, usize)> {
        let (r, c) = self.s.shape();
        let mut best: Option<((usize, usize), T)> = None;
        for i in t..r {
            for j in t..c {
                let x = self.s[(i, j)].abs();
                if !x.is_zero() && best.as_ref().is_none_or(|(_, b)| &x < b) {
                    best = Some(((i, j), x));
                }
            }
        }
        best.map(|(p, _)| p)
    }

    /// Smallest nonzero |entry| in row `t` and column `t` from the diagonal on.
    fn smallest_in_cross(&self, t: usize) -> (usize, usize) {
        let (r, c) = self.s.shape();
        let cells = (t..r).map(|i| (i, t)).chain((t + 1..c).map(|j| (t, j)));
        cells
            .filter(|&p| !self.s[p].is_zero())
            .min_by(|&a, &b| self.s[a].abs().cmp(&self.s[b].abs()))
            .expect("pivot cross is nonzero")
    }

    /// Clears row and column `t` except the pivot.
    fn clear_cross(&mut self, t: usize) -> Result<(), LatticeError> {
        let (r, c) = self.s.shape();
        loop {
            let pivot = self.s[(t, t)].clone();
            let mut dirty = false;
            for i in t + 1..r {
                if !self.s[(i, t)].is_zero() {
                    let q = scalar::div_floor(&self.s[(i, t)], &pivot)?;
                    self.row_sub_mul(i, &q, t)?;
                    dirty |= !self.s[(i, t)].is_zero();
                }
            }
            for j in t + 1..c {
                if !self.s[(t, j)].is_zero() {
                    let q = scalar::div_floor(&self.s[(t, j)], &pivot)?;
                    self.col_sub_mul(j, &q, t)?;
                    dirty |= !self.s[(t, j)].is_zero();
                }
            }
            if !dirty {
                return Ok(());
            }
            // remainders are strictly smaller than the pivot: move the
            // smallest one into place and go again
            let (i, j) = self.smallest_in_cross(t);
            self.swap_rows(t, i);
            self.swap_cols(t, j);
        }
    }

    /// Replaces `diag(a, b)` at positions `i < j` by `diag(gcd, lcm)`.
    fn gcd_fix(&mut self, i: usize, j: usize) -> Result<(), LatticeError> {
        let a = self.s[(i, i)].clone();
        let b = self.s[(j, j)].clone();
        // row_i += row_j puts b at (i, j)
        let minus_one = T::one().checked_neg_value()?;
        self.row_sub_mul(i, &minus_one, j)?;
        let (g, x, y) = scalar::ext_gcd(&a, &b)?;
        let b_g = b.div_floor(&g);
        let a_g = a.div_floor(&g);
        let coeffs = [&x, &y, &b_g.checked_neg_value()?, &a_g];
        self.s.combine_cols(i, j, coeffs)?;
        self.v.combine_cols(i, j, coeffs)?;
        // row j now reads (y*b, a*b/g); clear its first entry
        let q = scalar::mul(&y, &b_g)?;
        self.row_sub_mul(j, &q, i)?;
        Ok(())
    }
}

/// Smith normal form of `m` together with unimodular `u`, `v`.
///
/// Pivots are chosen as the smallest nonzero entry of the remaining block;
/// once diagonal, pairs violating the divisibility chain are repaired with
/// the gcd/lcm exchange.
pub fn snf<T: Scalar>(m: &Matrix<T>) -> Result<SmithDecomposition<T>, LatticeError> {
    let (r, c) = m.shape();
    let mut w = Work { s: m.clone(), u: Matrix::identity(r), v: Matrix::identity(c) };

    let mut rank = 0;
    while rank < r.min(c) {
        let Some((pi, pj)) = w.smallest_in_block(rank) else { break };
        w.swap_rows(rank, pi);
        w.swap_cols(rank, pj);
        w.clear_cross(rank)?;
        rank += 1;
    }

    for t in 0..rank {
        if w.s[(t, t)].is_negative() {
            w.s.negate_row(t)?;
            w.u.negate_row(t)?;
        }
    }

    for i in 0..rank {
        for j in i + 1..rank {
            if !w.s[(j, j)].is_multiple_of(&w.s[(i, i)]) {
                w.gcd_fix(i, j)?;
            }
        }
    }

    Ok(SmithDecomposition { original: m.clone(), u: w.u, s: w.s, v: w.v })
}
