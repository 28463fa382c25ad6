//! Scalar traits shared by the exact algebra.
//!
//! Matrix, sequence and Smith-form code is written against [`IntScalar`] so
//! it runs over machine integers for quick experiments and over [`BigInt`]
//! for anything that has to be exact at every magnitude. The crate root
//! re-exports the `BigInt` instantiations under short aliases.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

/// An exact signed integer type usable as a matrix entry.
pub trait IntScalar:
    Integer + Signed + Clone + Debug + Display + Hash + FromPrimitive + ToPrimitive + Send + Sync
{
    fn lit(v: i64) -> Self {
        <Self as FromPrimitive>::from_i64(v).expect("value representable in scalar")
    }
}

impl<T> IntScalar for T where
    T: Integer + Signed + Clone + Debug + Display + Hash + FromPrimitive + ToPrimitive + Send + Sync
{
}

/// Division that succeeds only when the quotient is exact in the ring.
pub trait ExactDiv: Sized {
    fn exact_div(&self, rhs: &Self) -> Option<Self>;
}

macro_rules! exact_div_int {
    ($($t:ty)*) => ($(
        impl ExactDiv for $t {
            fn exact_div(&self, rhs: &Self) -> Option<Self> {
                if *rhs == 0 || self % rhs != 0 { None } else { Some(self / rhs) }
            }
        }
    )*)
}

exact_div_int!(i32 i64 i128);

impl ExactDiv for BigInt {
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        use num_traits::Zero;
        if rhs.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(rhs);
        r.is_zero().then_some(q)
    }
}

impl<T: IntScalar> ExactDiv for Ratio<T> {
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        use num_traits::Zero;
        if rhs.is_zero() {
            None
        } else {
            Some(self.clone() / rhs.clone())
        }
    }
}
