//! Scalar abstractions.
//!
//! Exact routines (fraction-free elimination, interpolation, Taylor shifts)
//! are generic over [`ExactRing`]; numeric routines (Jacobi rotations) are
//! generic over [`Real`]. The crate root fixes the concrete choices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Float, FromPrimitive, Num, NumAssign, Signed};
use std::fmt::{Debug, Display};

/// A commutative ring with exact division wherever the quotient is known to
/// be in the ring: machine integers, big integers and rationals.
pub trait ExactRing: Clone + Num + Signed + Debug + Display + PartialOrd {
    fn from_i64(v: i64) -> Self;

    /// Lossless conversion into a big integer, if the value is integral.
    fn to_bigint(&self) -> Option<BigInt>;
}

macro_rules! exact_int {
    ($($t:ty),*) => {$(
        impl ExactRing for $t {
            fn from_i64(v: i64) -> Self {
                v as $t
            }
            fn to_bigint(&self) -> Option<BigInt> {
                Some(BigInt::from(*self))
            }
        }
    )*};
}
exact_int!(i64, i128);

impl ExactRing for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn to_bigint(&self) -> Option<BigInt> {
        Some(self.clone())
    }
}

impl<T> ExactRing for Ratio<T>
where
    T: Clone + Integer + Signed + Debug + Display + ExactRing,
{
    fn from_i64(v: i64) -> Self {
        Ratio::from_integer(T::from_i64(v))
    }
    fn to_bigint(&self) -> Option<BigInt> {
        if self.is_integer() {
            self.numer().to_bigint()
        } else {
            None
        }
    }
}

/// Floating-point scalar for the numeric eigensolver: `f32` or `f64`.
pub trait Real: Float + FromPrimitive + NumAssign + Debug + Display + Send + Sync {
    /// Relative off-diagonal threshold at which Jacobi sweeps stop.
    fn jacobi_tolerance() -> Self;
}

impl Real for f64 {
    fn jacobi_tolerance() -> Self {
        1e-14
    }
}

impl Real for f32 {
    fn jacobi_tolerance() -> Self {
        4.0 * f32::EPSILON
    }
}
