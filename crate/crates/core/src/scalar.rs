//! Integer scalars the lattice engine is generic over.
//!
//! Every arithmetic step in the engine goes through the checked helpers
//! below. For fixed-width types an overflow surfaces as
//! [`ArithmeticOverflow`]; for [`num_bigint::BigInt`] the checked
//! operations never fail.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, FromPrimitive, Signed, ToPrimitive};
use thiserror::Error;

/// Raised when a fixed-width scalar cannot hold an intermediate value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("integer overflow in exact arithmetic")]
pub struct ArithmeticOverflow;

/// An exact signed integer type usable by the engine.
pub trait Scalar:
    Clone
    + Debug
    + Display
    + Eq
    + Ord
    + Hash
    + Integer
    + Signed
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + FromPrimitive
    + ToPrimitive
    + FromStr
    + Send
    + Sync
    + 'static
{
    fn of(v: i64) -> Self {
        <Self as FromPrimitive>::from_i64(v).expect("every scalar type holds an i64")
    }

    fn checked_neg_value(&self) -> Result<Self, ArithmeticOverflow> {
        Self::zero().checked_sub(self).ok_or(ArithmeticOverflow)
    }

    fn checked_abs_value(&self) -> Result<Self, ArithmeticOverflow> {
        if self.is_negative() {
            self.checked_neg_value()
        } else {
            Ok(self.clone())
        }
    }
}

impl Scalar for i32 {}
impl Scalar for i64 {}
impl Scalar for i128 {}
impl Scalar for BigInt {}

#[inline]
pub(crate) fn add<T: Scalar>(a: &T, b: &T) -> Result<T, ArithmeticOverflow> {
    a.checked_add(b).ok_or(ArithmeticOverflow)
}

#[inline]
pub(crate) fn sub<T: Scalar>(a: &T, b: &T) -> Result<T, ArithmeticOverflow> {
    a.checked_sub(b).ok_or(ArithmeticOverflow)
}

#[inline]
pub(crate) fn mul<T: Scalar>(a: &T, b: &T) -> Result<T, ArithmeticOverflow> {
    a.checked_mul(b).ok_or(ArithmeticOverflow)
}

/// `a - q*b`, checked.
#[inline]
pub(crate) fn sub_mul<T: Scalar>(a: &T, q: &T, b: &T) -> Result<T, ArithmeticOverflow> {
    sub(a, &mul(q, b)?)
}

/// Floor division. `b` must be nonzero.
#[inline]
pub(crate) fn div_floor<T: Scalar>(a: &T, b: &T) -> Result<T, ArithmeticOverflow> {
    // MIN / -1 is the only overflowing case for fixed-width types.
    if b == &T::one().checked_neg_value()? {
        return a.checked_neg_value();
    }
    Ok(a.div_floor(b))
}

/// Extended gcd: returns `(g, s, t)` with `g = s*a + t*b`, `g >= 0`.
///
/// When `b` divides `a` the coefficients are `(0, ±1)`, and symmetrically,
/// so that reducing an already-divisible pair is a plain row subtraction.
pub(crate) fn ext_gcd<T: Scalar>(a: &T, b: &T) -> Result<(T, T, T), ArithmeticOverflow> {
    if a.is_zero() && b.is_zero() {
        return Ok((T::zero(), T::one(), T::zero()));
    }
    if !b.is_zero() && a.is_multiple_of(b) {
        let sign = if b.is_negative() { T::one().checked_neg_value()? } else { T::one() };
        return Ok((b.checked_abs_value()?, T::zero(), sign));
    }
    if !a.is_zero() && b.is_multiple_of(a) {
        let sign = if a.is_negative() { T::one().checked_neg_value()? } else { T::one() };
        return Ok((a.checked_abs_value()?, sign, T::zero()));
    }
    let (mut old_r, mut r) = (a.clone(), b.clone());
    let (mut old_s, mut s) = (T::one(), T::zero());
    let (mut old_t, mut t) = (T::zero(), T::one());
    while !r.is_zero() {
        let q = div_floor(&old_r, &r)?;
        let next_r = sub_mul(&old_r, &q, &r)?;
        old_r = std::mem::replace(&mut r, next_r);
        let next_s = sub_mul(&old_s, &q, &s)?;
        old_s = std::mem::replace(&mut s, next_s);
        let next_t = sub_mul(&old_t, &q, &t)?;
        old_t = std::mem::replace(&mut t, next_t);
    }
    if old_r.is_negative() {
        Ok((old_r.checked_neg_value()?, old_s.checked_neg_value()?, old_t.checked_neg_value()?))
    } else {
        Ok((old_r, old_s, old_t))
    }
}

/// Serde helpers for scalars: a JSON number when the value fits in `i64`,
/// otherwise a decimal string. Both forms are accepted on input.
pub mod serde_int {
    use super::Scalar;
    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    #[derive(Serialize, Deserialize)]
    #[serde(untagged)]
    enum Repr {
        Num(i64),
        Text(String),
    }

    fn to_repr<T: Scalar>(v: &T) -> Repr {
        match v.to_i64() {
            Some(x) => Repr::Num(x),
            None => Repr::Text(v.to_string()),
        }
    }

    fn from_repr<T: Scalar, E: serde::de::Error>(r: Repr) -> Result<T, E> {
        match r {
            Repr::Num(x) => Ok(T::of(x)),
            Repr::Text(s) => s.parse::<T>().map_err(|_| E::custom(format!("invalid integer literal {s:?}"))),
        }
    }

    pub fn serialize<T: Scalar, S: Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
        to_repr(v).serialize(s)
    }

    pub fn deserialize<'de, T: Scalar, D: Deserializer<'de>>(d: D) -> Result<T, D::Error> {
        from_repr(Repr::deserialize(d)?)
    }

    pub mod vec {
        use super::*;

        pub fn serialize<T: Scalar, S: Serializer>(v: &[T], s: S) -> Result<S::Ok, S::Error> {
            v.iter().map(to_repr).collect::<Vec<_>>().serialize(s)
        }

        pub fn deserialize<'de, T: Scalar, D: Deserializer<'de>>(d: D) -> Result<Vec<T>, D::Error> {
            Vec::<Repr>::deserialize(d)?.into_iter().map(from_repr::<T, D::Error>).collect()
        }
    }

    pub mod vec2 {
        use super::*;

        pub fn serialize<T: Scalar, S: Serializer>(v: &[Vec<T>], s: S) -> Result<S::Ok, S::Error> {
            v.iter().map(|row| row.iter().map(to_repr).collect::<Vec<_>>()).collect::<Vec<_>>().serialize(s)
        }

        pub fn deserialize<'de, T: Scalar, D: Deserializer<'de>>(d: D) -> Result<Vec<Vec<T>>, D::Error> {
            Vec::<Vec<Repr>>::deserialize(d)?
                .into_iter()
                .map(|row| row.into_iter().map(from_repr::<T, D::Error>).collect())
                .collect::<Result<_, _>>()
                .map_err(|e: D::Error| D::Error::custom(e.to_string()))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ext_gcd_identity() {
        for a in -30i64..=30 {
            for b in -30i64..=30 {
                let (g, s, t) = ext_gcd(&a, &b).unwrap();
                assert_eq!(g, a.gcd(&b));
                assert_eq!(s * a + t * b, g, "a={a} b={b}");
            }
        }
    }

    #[test]
    fn divisible_pair_uses_trivial_coefficients() {
        assert_eq!(ext_gcd(&6i64, &-3).unwrap(), (3, 0, -1));
        assert_eq!(ext_gcd(&4i64, &12).unwrap(), (4, 1, 0));
    }

    #[test]
    fn fixed_width_overflow_is_reported() {
        assert_eq!(mul(&i64::MAX, &2), Err(ArithmeticOverflow));
        assert_eq!(div_floor(&i64::MIN, &-1), Err(ArithmeticOverflow));
        assert_eq!(i64::MIN.checked_abs_value(), Err(ArithmeticOverflow));
        assert!(mul(&BigInt::from(i64::MAX), &BigInt::from(2)).is_ok());
    }
}
