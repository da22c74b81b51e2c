use std::fmt::{Debug, Display};

use num_integer::Integer;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

/// Exact integer scalar used by the matrix and lattice routines.
///
/// Implemented for every signed integer type that `num-traits` knows about,
/// which in practice means `i64`, `i128` and `num_bigint::BigInt`. The
/// K-theory layers instantiate everything at `BigInt`; the fixed-width types
/// are there for callers that can bound their entries.
pub trait IntScalar:
    Integer + Signed + Clone + Debug + Display + FromPrimitive + ToPrimitive + Send + Sync + 'static
{
    fn from_i64_exact(v: i64) -> Self {
        Self::from_i64(v).expect("every integer scalar holds an i64")
    }

    fn from_u64_exact(v: u64) -> Self {
        Self::from_u64(v).expect("integer scalar too narrow for u64 value")
    }
}

impl<T> IntScalar for T where
    T: Integer + Signed + Clone + Debug + Display + FromPrimitive + ToPrimitive + Send + Sync + 'static
{
}

/// Least non-negative residue of `a` modulo `m` (`m > 0`).
pub fn rem_euclid<T: IntScalar>(a: &T, m: &T) -> T {
    a.mod_floor(m)
}
