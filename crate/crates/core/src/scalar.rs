//! Coefficient scalars for the ground ring.
//!
//! All core arithmetic is generic over an exact signed integer type. The
//! default alias used throughout the crate is [`crate::Int`]
//! (arbitrary-precision); `i64`/`i128` satisfy the same bounds and are handy
//! in tests and benchmarks where coefficient growth is known to be bounded.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

/// Exact signed integer scalar: the coefficient ring of everything here.
///
/// `Integer` supplies `div_rem` for exact-division checks, `Signed` supplies
/// negation and absolute values, and the primitive conversions cover JSON
/// encoding and small literals.
pub trait Scalar:
    Clone
    + Debug
    + Display
    + Ord
    + Hash
    + Integer
    + Signed
    + FromPrimitive
    + ToPrimitive
    + FromStr
    + Send
    + Sync
    + 'static
{
    fn from_int(v: i64) -> Self {
        Self::from_i64(v).expect("i64 must embed into the scalar type")
    }

    /// Parse a base-10 integer, for coefficients too large for `i64` in JSON.
    fn from_decimal(s: &str) -> Option<Self> {
        Self::from_str(s).ok()
    }
}

impl<T> Scalar for T where
    T: Clone
        + Debug
        + Display
        + Ord
        + Hash
        + Integer
        + Signed
        + FromPrimitive
        + ToPrimitive
        + FromStr
        + Send
        + Sync
        + 'static
{
}
