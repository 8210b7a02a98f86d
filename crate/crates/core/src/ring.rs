//! The integral quandle ring `Z[Q]`, its augmentation ideal and the powers
//! of that ideal as lattices in e-basis coordinates.
//!
//! The e-basis of the augmentation ideal is `e_i = a_i - a_0`, `i = 1..n`,
//! so an ideal element is a vector in `Z^(n-1)` and coordinate `i - 1`
//! holds the coefficient of `e_i`.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::error::LatticeError;
use crate::lattice::{quotient_invariants, Lattice, QuotientReport};
use crate::quandle::Quandle;
use crate::scalar::{self, ArithmeticOverflow, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("operands belong to different quandles")]
    QuandleMismatch,
    #[error("coefficient vector has length {found}, expected {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("element has augmentation {augmentation}, expected 0")]
    NotAugmentationZero { augmentation: String },
    #[error("index {index} out of range {lo}..{hi}")]
    IndexOutOfRange { index: usize, lo: usize, hi: usize },
    #[error("ideal power k must be at least 1")]
    InvalidK,
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

impl From<ArithmeticOverflow> for RingError {
    fn from(_: ArithmeticOverflow) -> Self {
        RingError::Lattice(LatticeError::Overflow)
    }
}

fn same_quandle(a: &Quandle, b: &Quandle) -> bool {
    std::ptr::eq(a, b) || a == b
}

/// An element `sum r_i a_i` of `Z[Q]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingElement<'q, T> {
    quandle: &'q Quandle,
    coeffs: Vec<T>,
}

impl<'q, T: Scalar> RingElement<'q, T> {
    pub fn new(quandle: &'q Quandle, coeffs: Vec<T>) -> Result<Self, RingError> {
        if coeffs.len() != quandle.order() {
            return Err(RingError::LengthMismatch { expected: quandle.order(), found: coeffs.len() });
        }
        Ok(RingElement { quandle, coeffs })
    }

    pub fn zero(quandle: &'q Quandle) -> Self {
        RingElement { quandle, coeffs: vec![T::zero(); quandle.order()] }
    }

    /// The basis element `a_i`.
    pub fn generator(quandle: &'q Quandle, i: usize) -> Result<Self, RingError> {
        if i >= quandle.order() {
            return Err(RingError::IndexOutOfRange { index: i, lo: 0, hi: quandle.order() });
        }
        let mut x = Self::zero(quandle);
        x.coeffs[i] = T::one();
        Ok(x)
    }

    pub fn quandle(&self) -> &'q Quandle {
        self.quandle
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&T, &T) -> Result<T, ArithmeticOverflow>) -> Result<Self, RingError> {
        if !same_quandle(self.quandle, other.quandle) {
            return Err(RingError::QuandleMismatch);
        }
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| f(a, b)).collect::<Result<_, _>>()?;
        Ok(RingElement { quandle: self.quandle, coeffs })
    }

    pub fn add(&self, other: &Self) -> Result<Self, RingError> {
        self.zip_with(other, scalar::add)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, RingError> {
        self.zip_with(other, scalar::sub)
    }

    /// `(sum x_i a_i)(sum y_j a_j) = sum x_i y_j (a_i * a_j)`.
    pub fn multiply(&self, other: &Self) -> Result<Self, RingError> {
        if !same_quandle(self.quandle, other.quandle) {
            return Err(RingError::QuandleMismatch);
        }
        let q = self.quandle;
        let mut out = vec![T::zero(); q.order()];
        for (i, x) in self.coeffs.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, y) in other.coeffs.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                let slot = &mut out[q.op(i, j)];
                *slot = scalar::add(slot, &scalar::mul(x, y)?)?;
            }
        }
        Ok(RingElement { quandle: q, coeffs: out })
    }

    /// Coefficient sum.
    pub fn augmentation(&self) -> Result<T, RingError> {
        let mut acc = T::zero();
        for c in &self.coeffs {
            acc = scalar::add(&acc, c)?;
        }
        Ok(acc)
    }

    /// Coordinates in the e-basis; fails unless the augmentation is zero.
    pub fn to_ebasis(&self) -> Result<EVector<'q, T>, RingError> {
        let aug = self.augmentation()?;
        if !aug.is_zero() {
            return Err(RingError::NotAugmentationZero { augmentation: aug.to_string() });
        }
        Ok(EVector { quandle: self.quandle, coords: self.coeffs[1..].to_vec() })
    }
}

impl<T: Scalar> fmt::Display for RingElement<'_, T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, "a", 0, &self.coeffs)
    }
}

/// An element of the augmentation ideal in e-basis coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EVector<'q, T> {
    quandle: &'q Quandle,
    coords: Vec<T>,
}

impl<'q, T: Scalar> EVector<'q, T> {
    pub fn new(quandle: &'q Quandle, coords: Vec<T>) -> Result<Self, RingError> {
        let expected = quandle.order() - 1;
        if coords.len() != expected {
            return Err(RingError::LengthMismatch { expected, found: coords.len() });
        }
        Ok(EVector { quandle, coords })
    }

    /// The basis vector `e_i`, `1 <= i < n`.
    pub fn unit(quandle: &'q Quandle, i: usize) -> Result<Self, RingError> {
        let n = quandle.order();
        if !(1..n).contains(&i) {
            return Err(RingError::IndexOutOfRange { index: i, lo: 1, hi: n });
        }
        let mut coords = vec![T::zero(); n - 1];
        coords[i - 1] = T::one();
        Ok(EVector { quandle, coords })
    }

    pub fn coords(&self) -> &[T] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<T> {
        self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(T::is_zero)
    }

    /// Back to the `a`-basis: the `a_0` coefficient is minus the coordinate sum.
    pub fn to_ring(&self) -> Result<RingElement<'q, T>, RingError> {
        let mut a0 = T::zero();
        for c in &self.coords {
            a0 = scalar::sub(&a0, c)?;
        }
        let mut coeffs = Vec::with_capacity(self.coords.len() + 1);
        coeffs.push(a0);
        coeffs.extend(self.coords.iter().cloned());
        Ok(RingElement { quandle: self.quandle, coeffs })
    }
}

impl<T: Scalar> fmt::Display for EVector<'_, T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, "e", 1, &self.coords)
    }
}

/// Signed terms in index order, e.g. `e1 - e2 - 2e7`; `0` when empty.
pub fn format_terms<T: Scalar>(symbol: &str, first_index: usize, coeffs: &[T]) -> String {
    struct Terms<'a, T>(&'a str, usize, &'a [T]);
    impl<T: Scalar> fmt::Display for Terms<'_, T> {
        fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            write_terms(f, self.0, self.1, self.2)
        }
    }
    Terms(symbol, first_index, coeffs).to_string()
}

fn write_terms<T: Scalar>(f: &mut fmt::Formatter<'_>, symbol: &str, first: usize, coeffs: &[T]) -> fmt::Result {
    let mut wrote = false;
    for (k, c) in coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
        let mag = c.abs();
        match (wrote, c.is_negative()) {
            (false, false) => {}
            (false, true) => f.write_str("-")?,
            (true, false) => f.write_str(" + ")?,
            (true, true) => f.write_str(" - ")?,
        }
        if !mag.is_one() {
            write!(f, "{mag}")?;
        }
        write!(f, "{symbol}{}", k + first)?;
        wrote = true;
    }
    if !wrote {
        f.write_str("0")?;
    }
    Ok(())
}

/// `e_i * e_j` in e-coordinates, `1 <= i, j < n`.
pub fn ebasis_product<'q, T: Scalar>(q: &'q Quandle, i: usize, j: usize) -> Result<EVector<'q, T>, RingError> {
    let x = EVector::<T>::unit(q, i)?.to_ring()?;
    let y = EVector::<T>::unit(q, j)?.to_ring()?;
    x.multiply(&y)?.to_ebasis()
}

/// All products `e_i * e_j` as coordinate vectors; `table[i-1][j-1]`.
#[derive(Debug, Clone)]
pub struct EProductTable<T> {
    dim: usize,
    entries: Vec<Vec<Vec<T>>>,
}

impl<T: Scalar> EProductTable<T> {
    pub fn new(q: &Quandle) -> Result<Self, RingError> {
        let dim = q.order() - 1;
        let entries = (1..=dim)
            .map(|i| (1..=dim).map(|j| Ok(ebasis_product::<T>(q, i, j)?.into_coords())).collect())
            .collect::<Result<_, RingError>>()?;
        Ok(EProductTable { dim, entries })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Coordinates of `e_i * e_j`.
    pub fn get(&self, i: usize, j: usize) -> &[T] {
        &self.entries[i - 1][j - 1]
    }

    /// `u * e_j` for `u` given in e-coordinates (linear in `u`).
    pub fn right_multiply(&self, u: &[T], j: usize) -> Result<Vec<T>, RingError> {
        self.combine(u, |i| self.get(i, j))
    }

    /// `e_j * u`.
    pub fn left_multiply(&self, j: usize, u: &[T]) -> Result<Vec<T>, RingError> {
        self.combine(u, |i| self.get(j, i))
    }

    fn combine<'a>(&'a self, u: &[T], row: impl Fn(usize) -> &'a [T]) -> Result<Vec<T>, RingError> {
        if u.len() != self.dim {
            return Err(RingError::LengthMismatch { expected: self.dim, found: u.len() });
        }
        let mut out = vec![T::zero(); self.dim];
        for (k, c) in u.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (o, p) in out.iter_mut().zip(row(k + 1)) {
                *o = scalar::add(o, &scalar::mul(c, p)?)?;
            }
        }
        Ok(out)
    }
}

/// How `Δ^(k+1)` is generated from `Δ^k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    /// Products `u * e_j`, `u` in a basis of `Δ^k`.
    #[default]
    Right,
    /// Products `u * e_j` and `e_j * u`.
    TwoSided,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Right => "right",
            Mode::TwoSided => "two-sided",
        })
    }
}

impl std::str::FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "right" => Ok(Mode::Right),
            "two-sided" | "two_sided" => Ok(Mode::TwoSided),
            _ => Err(format!("unknown mode {s:?}: expected right or two-sided")),
        }
    }
}

/// The descending chain `Δ ⊇ Δ^2 ⊇ ...` of one quandle, built on demand.
/// `Δ^(k+1)` is generated from the canonical basis of `Δ^k` only.
#[derive(Debug, Clone)]
pub struct DeltaTower<T: Scalar> {
    mode: Mode,
    table: EProductTable<T>,
    powers: Vec<Lattice<T>>,
}

impl<T: Scalar> DeltaTower<T> {
    pub fn new(q: &Quandle, mode: Mode) -> Result<Self, RingError> {
        let table = EProductTable::new(q)?;
        let full = Lattice::full(table.dim());
        Ok(DeltaTower { mode, table, powers: vec![full] })
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn products(&self) -> &EProductTable<T> {
        &self.table
    }

    /// Number of powers computed so far.
    pub fn computed(&self) -> usize {
        self.powers.len()
    }

    fn next_power(&self, prev: &Lattice<T>) -> Result<Lattice<T>, RingError> {
        let dim = self.table.dim();
        let mut gens = Vec::with_capacity(prev.rank() * dim * 2);
        for u in prev.basis().rows() {
            for j in 1..=dim {
                gens.push(self.table.right_multiply(u, j)?);
                if self.mode == Mode::TwoSided {
                    gens.push(self.table.left_multiply(j, u)?);
                }
            }
        }
        Ok(Lattice::from_generators(dim, &gens)?)
    }

    /// `Δ^k`, extending the tower as needed.
    pub fn power(&mut self, k: usize) -> Result<&Lattice<T>, RingError> {
        if k == 0 {
            return Err(RingError::InvalidK);
        }
        while self.powers.len() < k {
            let next = self.next_power(self.powers.last().expect("tower starts at Δ"))?;
            self.powers.push(next);
        }
        Ok(&self.powers[k - 1])
    }

    /// Structure of `Δ^k / Δ^(k+1)`.
    pub fn quotient(&mut self, k: usize) -> Result<QuotientReport<T>, RingError> {
        self.power(k + 1)?;
        Ok(quotient_invariants(&self.powers[k - 1], &self.powers[k])?)
    }
}

/// `Δ^k(q)` as a lattice in e-coordinates.
pub fn delta_power<T: Scalar>(q: &Quandle, k: usize, mode: Mode) -> Result<Lattice<T>, RingError> {
    if k == 0 {
        return Err(RingError::InvalidK);
    }
    Ok(DeltaTower::new(q, mode)?.power(k)?.clone())
}

/// Structure of `Δ^k(q) / Δ^(k+1)(q)`.
pub fn delta_quotient<T: Scalar>(q: &Quandle, k: usize, mode: Mode) -> Result<QuotientReport<T>, RingError> {
    if k == 0 {
        return Err(RingError::InvalidK);
    }
    DeltaTower::new(q, mode)?.quotient(k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::GroupOrder;

    fn ev(q: &Quandle, c: &[i64]) -> Vec<i64> {
        assert_eq!(c.len(), q.order() - 1);
        c.to_vec()
    }

    #[test]
    fn e1_squared_in_r8() {
        let q = Quandle::dihedral(8).unwrap();
        let e1 = EVector::<i64>::unit(&q, 1).unwrap().to_ring().unwrap();
        let p = e1.multiply(&e1).unwrap();
        assert_eq!(p.coeffs(), &[1, 1, -1, 0, 0, 0, 0, -1]);
        assert_eq!(p.to_string(), "a0 + a1 - a2 - a7");
        assert_eq!(p.to_ebasis().unwrap().to_string(), "e1 - e2 - e7");
    }

    #[test]
    fn generators_are_idempotent() {
        let q = Quandle::dihedral(5).unwrap();
        for i in 0..5 {
            let a = RingElement::<i64>::generator(&q, i).unwrap();
            assert_eq!(a.multiply(&a).unwrap(), a);
        }
    }

    #[test]
    fn column_k_vanishes() {
        let q = Quandle::dihedral(8).unwrap();
        let x = RingElement::<i64>::new(&q, vec![-1, 0, 1, 0, 0, 0, 0, 0]).unwrap();
        let y = RingElement::<i64>::new(&q, vec![-1, 0, 0, 0, 1, 0, 0, 0]).unwrap();
        assert_eq!(x.multiply(&y).unwrap(), RingElement::zero(&q));
    }

    #[test]
    fn augmentation_values() {
        let q = Quandle::dihedral(8).unwrap();
        let x = RingElement::<i64>::new(&q, vec![-1, 0, 0, 1, 0, 0, 0, 0]).unwrap();
        assert_eq!(x.augmentation().unwrap(), 0);
        let y = RingElement::<i64>::new(&q, vec![0, 2, 3, 0, 0, 0, 0, 0]).unwrap();
        assert_eq!(y.augmentation().unwrap(), 5);
    }

    #[test]
    fn ebasis_conversions() {
        let q = Quandle::dihedral(8).unwrap();
        let x = RingElement::<i64>::new(&q, vec![-1, 1, 0, 0, 0, 0, 0, 0]).unwrap();
        assert_eq!(x.to_ebasis().unwrap().coords(), &[1, 0, 0, 0, 0, 0, 0]);
        let x = RingElement::<i64>::new(&q, vec![1, 1, -1, 0, 0, 0, 0, -1]).unwrap();
        assert_eq!(x.to_ebasis().unwrap().coords(), ev(&q, &[1, -1, 0, 0, 0, 0, -1]));
        assert!(RingElement::<i64>::zero(&q).to_ebasis().unwrap().is_zero());
        let bad = RingElement::<i64>::generator(&q, 3).unwrap();
        assert_eq!(bad.to_ebasis(), Err(RingError::NotAugmentationZero { augmentation: "1".into() }));
    }

    #[test]
    fn operand_checks() {
        let q8 = Quandle::dihedral(8).unwrap();
        let q4 = Quandle::dihedral(4).unwrap();
        let x = RingElement::<i64>::generator(&q8, 1).unwrap();
        let y = RingElement::<i64>::generator(&q4, 1).unwrap();
        assert_eq!(x.multiply(&y), Err(RingError::QuandleMismatch));
        assert_eq!(RingElement::<i64>::new(&q4, vec![1, 2]), Err(RingError::LengthMismatch { expected: 4, found: 2 }));
        assert!(matches!(ebasis_product::<i64>(&q8, 0, 1), Err(RingError::IndexOutOfRange { .. })));
        assert!(matches!(ebasis_product::<i64>(&q8, 1, 8), Err(RingError::IndexOutOfRange { .. })));
    }

    #[test]
    fn r8_product_examples() {
        let q = Quandle::dihedral(8).unwrap();
        assert_eq!(ebasis_product::<i64>(&q, 1, 1).unwrap().to_string(), "e1 - e2 - e7");
        for i in 1..8 {
            assert!(ebasis_product::<i64>(&q, i, 4).unwrap().is_zero());
        }
        assert_eq!(ebasis_product::<i64>(&q, 2, 3).unwrap().to_string(), "e4 - 2e6");
    }

    #[test]
    fn term_formatting() {
        assert_eq!(format_terms::<i64>("e", 1, &[0, -2, 0, 1]), "-2e2 + e4");
        assert_eq!(format_terms::<i64>("e", 1, &[0, 0]), "0");
        assert_eq!(format_terms::<i64>("e", 1, &[-1, 0, 3]), "-e1 + 3e3");
    }

    #[test]
    fn first_power_is_everything() {
        for n in [2, 5, 8] {
            let q = Quandle::dihedral(n).unwrap();
            let d = delta_power::<i64>(&q, 1, Mode::Right).unwrap();
            assert_eq!(d, Lattice::full(n - 1));
        }
        let q = Quandle::dihedral(3).unwrap();
        assert_eq!(delta_power::<i64>(&q, 0, Mode::Right), Err(RingError::InvalidK));
        assert_eq!(delta_quotient::<i64>(&q, 0, Mode::Right), Err(RingError::InvalidK));
    }

    #[test]
    fn r8_second_power_hnf() {
        let q = Quandle::dihedral(8).unwrap();
        let d2 = delta_power::<i64>(&q, 2, Mode::Right).unwrap();
        let expected = vec![
            vec![1, 0, 0, 0, 0, 1, -1],
            vec![0, 1, 0, 0, 0, 1, 0],
            vec![0, 0, 1, 0, 0, 2, -1],
            vec![0, 0, 0, 1, 0, 2, 0],
            vec![0, 0, 0, 0, 1, 3, -1],
            vec![0, 0, 0, 0, 0, 4, 0],
        ];
        // column 7 has no pivot, so its entries are not reduced
        assert_eq!(d2.basis().to_rows(), expected);
    }

    #[test]
    fn small_quotients() {
        let r3 = Quandle::dihedral(3).unwrap();
        let q = delta_quotient::<i64>(&r3, 1, Mode::Right).unwrap();
        assert_eq!(q, QuotientReport { free_rank: 0, torsion: vec![3], order: GroupOrder::Finite(3) });
        let d2 = delta_power::<i64>(&r3, 2, Mode::Right).unwrap();
        assert_eq!(d2.basis().to_rows(), vec![vec![1, 1], vec![0, 3]]);

        let r8 = Quandle::dihedral(8).unwrap();
        let q = delta_quotient::<i64>(&r8, 1, Mode::Right).unwrap();
        assert_eq!((q.free_rank, q.torsion.clone()), (1, vec![4]));
        assert_eq!(q.order, GroupOrder::Infinite);

        let r4 = Quandle::dihedral(4).unwrap();
        assert_eq!(delta_quotient::<i64>(&r4, 2, Mode::Right).unwrap().order, GroupOrder::Finite(4));
    }

    #[test]
    fn trivial_quandle_ideal_squares_to_zero() {
        let t = Quandle::trivial(4).unwrap();
        let d2 = delta_power::<i64>(&t, 2, Mode::TwoSided).unwrap();
        assert_eq!(d2.rank(), 0);
        let q = delta_quotient::<i64>(&t, 1, Mode::Right).unwrap();
        assert_eq!(q.free_rank, 3);
    }

    #[test]
    fn order_one_quandle_has_zero_ideal() {
        let q = Quandle::dihedral(1).unwrap();
        let r = delta_quotient::<i64>(&q, 1, Mode::Right).unwrap();
        assert_eq!(r, QuotientReport { free_rank: 0, torsion: vec![], order: GroupOrder::Finite(1) });
    }
}
