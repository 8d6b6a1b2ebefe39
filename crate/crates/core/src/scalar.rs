//! Exact scalar fields.
//!
//! Everything in this crate is generic over [`Scalar`], a characteristic-zero
//! field with exact equality. The blanket implementation covers
//! [`num_rational::Ratio`] over any signed integer type, so both
//! `BigRational` (the default, see [`crate::Rational`]) and fixed-width
//! rationals such as `Ratio<i64>` work.

use std::fmt::{Debug, Display};
use std::ops::Neg;

use num_integer::{Integer, Roots};
use num_rational::Ratio;
use num_traits::{FromPrimitive, Num, Signed};

/// An exact field of characteristic zero.
pub trait Scalar:
    Clone + Debug + Display + PartialEq + PartialOrd + Num + Neg<Output = Self> + Send + Sync + 'static
{
    fn from_i64(v: i64) -> Self;

    /// `num / den`; panics on a zero denominator.
    fn ratio(num: i64, den: i64) -> Self {
        Self::from_i64(num) / Self::from_i64(den)
    }

    /// Returns `q` with `q * q == self` when such a `q` exists in the field.
    fn sqrt_exact(&self) -> Option<Self>;

    /// Multiplies by a sign-valued color value (`+1` or `-1`).
    fn signed(self, sign: i8) -> Self {
        if sign < 0 {
            -self
        } else {
            self
        }
    }
}

impl<T> Scalar for Ratio<T>
where
    T: Clone + Integer + Signed + Roots + FromPrimitive + Debug + Display + Send + Sync + 'static,
{
    fn from_i64(v: i64) -> Self {
        Ratio::from_integer(T::from_i64(v).expect("integer out of range for scalar type"))
    }

    fn sqrt_exact(&self) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        let (n, d) = (self.numer(), self.denom());
        let (rn, rd) = (n.sqrt(), d.sqrt());
        if rn.clone() * rn.clone() == *n && rd.clone() * rd.clone() == *d {
            Some(Ratio::new(rn, rd))
        } else {
            None
        }
    }
}
