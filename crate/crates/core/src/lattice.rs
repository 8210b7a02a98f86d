//! Subgroups of `Z^m` held in canonical Hermite normal form, and the
//! invariant factors of quotients between them.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::LatticeError;
use crate::hnf::HnfBuilder;
use crate::matrix::Matrix;
use crate::scalar::{self, Scalar};
use crate::snf::snf;

/// A subgroup of `Z^dim`. The basis is the canonical HNF, so two lattices
/// are equal exactly when their bases are identical.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Lattice<T: Scalar> {
    dim: usize,
    basis: Matrix<T>,
    pivots: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
#[serde(bound = "")]
struct LatticeRepr<T: Scalar> {
    ambient_dim: usize,
    basis: Matrix<T>,
}

impl<T: Scalar> Serialize for Lattice<T> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        LatticeRepr { ambient_dim: self.dim, basis: self.basis.clone() }.serialize(s)
    }
}

/// Deserialized bases are re-canonicalized, so any generating set is accepted.
impl<'de, T: Scalar> Deserialize<'de> for Lattice<T> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = LatticeRepr::<T>::deserialize(d)?;
        Lattice::from_generators(repr.ambient_dim, &repr.basis.to_rows()).map_err(serde::de::Error::custom)
    }
}

impl<T: Scalar> Lattice<T> {
    /// The Z-span of `gens`.
    pub fn from_generators<V: AsRef<[T]>>(dim: usize, gens: &[V]) -> Result<Self, LatticeError> {
        let mut builder = HnfBuilder::new(dim);
        for g in gens {
            builder.insert(g.as_ref())?;
        }
        Ok(Self::from_builder(builder))
    }

    /// Like [`Lattice::from_generators`], consuming an iterator of
    /// generators so large generating sets need not be materialized.
    pub fn from_generator_iter<I>(dim: usize, gens: I) -> Result<Self, LatticeError>
    where
        I: IntoIterator<Item = Result<Vec<T>, LatticeError>>,
    {
        let mut builder = HnfBuilder::new(dim);
        for g in gens {
            builder.insert(&g?)?;
        }
        Ok(Self::from_builder(builder))
    }

    pub(crate) fn from_builder(builder: HnfBuilder<T>) -> Self {
        let pivots = builder.pivots().to_vec();
        let dim = builder.dim();
        Lattice { dim, basis: builder.into_matrix(), pivots }
    }

    /// All of `Z^dim`.
    pub fn full(dim: usize) -> Self {
        Lattice { dim, basis: Matrix::identity(dim), pivots: (0..dim).collect() }
    }

    pub fn zero(dim: usize) -> Self {
        Lattice { dim, basis: Matrix::zeros(0, dim), pivots: Vec::new() }
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.basis.nrows()
    }

    pub fn basis(&self) -> &Matrix<T> {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn check_dim(&self, n: usize) -> Result<(), LatticeError> {
        if n == self.dim {
            Ok(())
        } else {
            Err(LatticeError::DimensionMismatch { expected: self.dim, found: n })
        }
    }

    /// Integer coordinates of `v` in the HNF basis, or `None` when `v` is
    /// not in the lattice. Forward substitution on the pivot columns.
    pub fn coordinates(&self, v: &[T]) -> Result<Option<Vec<T>>, LatticeError> {
        self.check_dim(v.len())?;
        let mut residual = v.to_vec();
        let mut coords = Vec::with_capacity(self.rank());
        for (row, &c) in self.basis.rows().zip(&self.pivots) {
            if residual[..c].iter().any(|x| !x.is_zero()) {
                return Ok(None);
            }
            let (q, r) = residual[c].div_mod_floor(&row[c]);
            if !r.is_zero() {
                return Ok(None);
            }
            for (x, b) in residual.iter_mut().zip(row) {
                *x = scalar::sub_mul(x, &q, b)?;
            }
            coords.push(q);
        }
        Ok(residual.iter().all(T::is_zero).then_some(coords))
    }

    pub fn contains(&self, v: &[T]) -> Result<bool, LatticeError> {
        Ok(self.coordinates(v)?.is_some())
    }

    pub fn is_sublattice_of(&self, sup: &Self) -> Result<bool, LatticeError> {
        sup.check_dim(self.dim)?;
        for row in self.basis.rows() {
            if !sup.contains(row)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Basis identity; errors on differing ambient dimensions.
    pub fn equals(&self, other: &Self) -> Result<bool, LatticeError> {
        self.check_dim(other.dim)?;
        Ok(self.basis == other.basis)
    }
}

/// Order of a finitely generated abelian group.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GroupOrder<T> {
    Finite(T),
    Infinite,
}

impl<T: Scalar> Serialize for GroupOrder<T> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            GroupOrder::Finite(n) => scalar::serde_int::serialize(n, s),
            GroupOrder::Infinite => s.serialize_str("infinite"),
        }
    }
}

impl<'de, T: Scalar> Deserialize<'de> for GroupOrder<T> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Num(i64),
            Text(String),
        }
        match Repr::deserialize(d)? {
            Repr::Num(n) => Ok(GroupOrder::Finite(T::of(n))),
            Repr::Text(s) if s == "infinite" => Ok(GroupOrder::Infinite),
            Repr::Text(s) => s
                .parse::<T>()
                .map(GroupOrder::Finite)
                .map_err(|_| serde::de::Error::custom(format!("invalid group order {s:?}"))),
        }
    }
}

impl<T: Scalar> fmt::Display for GroupOrder<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupOrder::Finite(n) => write!(f, "{n}"),
            GroupOrder::Infinite => f.write_str("infinite"),
        }
    }
}

/// Structure of a quotient `sup / sub` as `Z^free_rank ⊕ Z_{d1} ⊕ ... ⊕ Z_{dk}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(bound = "")]
pub struct QuotientReport<T: Scalar> {
    pub free_rank: usize,
    /// Invariant factors greater than one, smallest first, each dividing the next.
    #[serde(with = "scalar::serde_int::vec")]
    pub torsion: Vec<T>,
    pub order: GroupOrder<T>,
}

impl<T: Scalar> QuotientReport<T> {
    /// Builds a report from a free rank and a list of invariant factors;
    /// factors equal to one are dropped.
    pub fn new(free_rank: usize, factors: impl IntoIterator<Item = T>) -> Result<Self, LatticeError> {
        let torsion: Vec<T> = factors.into_iter().filter(|d| !d.is_one()).collect();
        let order = if free_rank > 0 {
            GroupOrder::Infinite
        } else {
            let mut acc = T::one();
            for d in &torsion {
                acc = scalar::mul(&acc, d)?;
            }
            GroupOrder::Finite(acc)
        };
        Ok(QuotientReport { free_rank, torsion, order })
    }

    /// Whether torsion is a divisibility chain of factors > 1 and the order
    /// agrees with it.
    pub fn is_consistent(&self) -> bool {
        let chain =
            self.torsion.iter().all(|d| d > &T::one()) && self.torsion.windows(2).all(|w| w[1].is_multiple_of(&w[0]));
        let order = match &self.order {
            GroupOrder::Infinite => self.free_rank > 0,
            GroupOrder::Finite(n) => {
                self.free_rank == 0
                    && self.torsion.iter().try_fold(T::one(), |acc, d| acc.checked_mul(d)).as_ref() == Some(n)
            }
        };
        chain && order
    }

    /// Whether the group is the cyclic group of order `n` (finite, one factor).
    pub fn is_cyclic_of_order(&self, n: &T) -> bool {
        self.free_rank == 0 && if n.is_one() { self.torsion.is_empty() } else { self.torsion.as_slice() == [n.clone()] }
    }
}

impl<T: Scalar> fmt::Display for QuotientReport<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z_{d}")));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" (+) "))
        }
    }
}

/// Invariant factors of `sup / sub`.
///
/// Each basis row of `sub` is written in the basis of `sup` (exact, since
/// containment is checked first) and the Smith form of that coefficient
/// matrix gives the torsion; the free rank is the rank difference.
pub fn quotient_invariants<T: Scalar>(sup: &Lattice<T>, sub: &Lattice<T>) -> Result<QuotientReport<T>, LatticeError> {
    sup.check_dim(sub.dim)?;
    let mut coeff_rows = Vec::with_capacity(sub.rank());
    for (i, row) in sub.basis.rows().enumerate() {
        match sup.coordinates(row)? {
            Some(c) => coeff_rows.push(c),
            None => {
                return Err(LatticeError::NotASublattice {
                    row: i,
                    witness: row.iter().map(ToString::to_string).collect(),
                })
            }
        }
    }
    let coeffs = Matrix::from_rows(coeff_rows, sup.rank())?;
    let smith = snf(&coeffs)?;
    QuotientReport::new(sup.rank() - sub.rank(), smith.invariant_factors())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn lat(dim: usize, gens: &[&[i64]]) -> Lattice<i64> {
        Lattice::from_generators(dim, &gens.iter().map(|g| g.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn generator_examples() {
        assert_eq!(lat(2, &[&[2, 0], &[0, 2]]).basis().to_rows(), vec![vec![2, 0], vec![0, 2]]);
        assert_eq!(lat(2, &[&[1, -2], &[-1, -1], &[-2, 1]]).basis().to_rows(), vec![vec![1, 1], vec![0, 3]]);
        assert_eq!(lat(3, &[]).rank(), 0);
    }

    #[test]
    fn generator_dimension_checked() {
        let err = Lattice::<i64>::from_generators(3, &[vec![1, 2]]).unwrap_err();
        assert_eq!(err, LatticeError::DimensionMismatch { expected: 3, found: 2 });
    }

    #[test]
    fn membership() {
        let l = lat(2, &[&[2, 0], &[0, 2]]);
        assert!(l.contains(&[4, 6]).unwrap());
        assert!(!l.contains(&[1, 0]).unwrap());
        assert!(l.contains(&[1, 0, 0]).is_err());
        let l = lat(3, &[&[1, 1, 0]]);
        assert!(!l.contains(&[0, 0, 1]).unwrap());
        assert_eq!(l.coordinates(&[-3, -3, 0]).unwrap(), Some(vec![-3]));
    }

    #[test]
    fn equality() {
        assert!(lat(2, &[&[1, 1]]).equals(&lat(2, &[&[-1, -1]])).unwrap());
        assert!(!lat(2, &[&[2, 0]]).equals(&lat(2, &[&[1, 0]])).unwrap());
        assert!(lat(2, &[]).equals(&lat(3, &[])).is_err());
    }

    #[test]
    fn quotient_of_even_sublattice() {
        let q = quotient_invariants(&Lattice::full(2), &lat(2, &[&[2, 0], &[0, 2]])).unwrap();
        assert_eq!(q, QuotientReport { free_rank: 0, torsion: vec![2, 2], order: GroupOrder::Finite(4) });
        assert_eq!(q.to_string(), "Z_2 (+) Z_2");
        assert!(q.is_consistent());
    }

    #[test]
    fn quotient_requires_containment() {
        let err = quotient_invariants(&lat(2, &[&[2, 0], &[0, 2]]), &lat(2, &[&[1, 0]])).unwrap_err();
        assert_eq!(err, LatticeError::NotASublattice { row: 0, witness: vec!["1".into(), "0".into()] });
    }

    #[test]
    fn quotient_with_free_part() {
        let q = quotient_invariants(&Lattice::full(3), &lat(3, &[&[3, 0, 0]])).unwrap();
        assert_eq!(q.free_rank, 2);
        assert_eq!(q.torsion, vec![3]);
        assert_eq!(q.order, GroupOrder::Infinite);
        assert_eq!(q.to_string(), "Z^2 (+) Z_3");
    }

    #[test]
    fn trivial_quotient_prints_zero() {
        let q = quotient_invariants(&Lattice::<i64>::full(2), &Lattice::full(2)).unwrap();
        assert_eq!(q.to_string(), "0");
        assert_eq!(q.order, GroupOrder::Finite(1));
        assert!(q.is_cyclic_of_order(&1));
    }

    #[test]
    fn report_json_round_trip() {
        let q = QuotientReport::<BigInt>::new(1, [BigInt::from(4)]).unwrap();
        let js = serde_json::to_string(&q).unwrap();
        assert_eq!(js, r#"{"free_rank":1,"torsion":[4],"order":"infinite"}"#);
        assert_eq!(serde_json::from_str::<QuotientReport<BigInt>>(&js).unwrap(), q);
    }
}
