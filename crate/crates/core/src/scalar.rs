//! Coefficient field.
//!
//! All algebraic types are generic over [`Scalar`], which is any
//! `num-traits` number with negation and conversion from machine integers.
//! Exact results need a field of characteristic zero, in practice
//! [`Rational`]; `f64` is accepted for approximate work.

use std::fmt::Debug;
use std::ops::Neg;

use num_bigint::BigInt;
use num_traits::{FromPrimitive, Num, One, Zero};

use crate::error::{Error, Result};
use crate::Rational;

pub trait Scalar: Num + Clone + PartialEq + Debug + Neg<Output = Self> + Send + Sync {
    fn from_int(v: i64) -> Self;

    fn from_usize(v: usize) -> Self {
        Self::from_int(i64::try_from(v).expect("integer does not fit in i64"))
    }
}

impl<T> Scalar for T
where
    T: Num + Clone + PartialEq + Debug + Neg<Output = T> + FromPrimitive + Send + Sync,
{
    fn from_int(v: i64) -> Self {
        T::from_i64(v).expect("scalar type cannot represent a machine integer")
    }
}

/// Multiplicative inverse, failing on zero.
pub fn checked_inv<T: Scalar>(a: &T) -> Result<T> {
    if a.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(T::one() / a.clone())
}

/// `m!` computed in the scalar type.
pub fn factorial<T: Scalar>(m: usize) -> T {
    (1..=m).fold(T::one(), |acc, k| acc * T::from_usize(k))
}

/// `1/m!`, the normalization of an alternating sum over `m` letters.
pub fn inverse_factorial<T: Scalar>(m: usize) -> T {
    T::one() / factorial::<T>(m)
}

/// Parses `p/q` or bare `p` (optional sign on `p`) into lowest terms.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::Parse(format!("invalid rational {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((p, q)) => (p, Some(q)),
        None => (s, None),
    };
    let digits = num.strip_prefix(['+', '-']).unwrap_or(num);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = match den {
        None => BigInt::one(),
        Some(q) => {
            if q.is_empty() || !q.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            q.parse().map_err(|_| bad())?
        }
    };
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(Rational::new(num, den))
}

/// Canonical text form: `p/q`, or `p` when the denominator is one.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}
