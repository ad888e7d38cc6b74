//! Coefficient types.
//!
//! Everything polynomial in this crate is generic over [`Scalar`]. The
//! computations are only meaningful over an exact field, so the default
//! aliases at the crate root use [`num_rational::BigRational`]; machine
//! rationals and floats satisfy the bound as well and agree with the exact
//! results whenever no rounding or overflow happens (all generators here have
//! unit coefficients).

use std::fmt::{Debug, Display};

use num_traits::{Num, Signed};

pub trait Scalar: Num + Signed + Clone + Debug + Display + Send + Sync + 'static {
    /// Parses the text form printed by `Display` (`p/q` for rationals).
    fn parse_scalar(s: &str) -> Option<Self> {
        Self::from_str_radix(s, 10).ok().or_else(|| {
            (!s.contains('/')).then(|| Self::from_str_radix(&format!("{s}/1"), 10).ok())?
        })
    }
}

impl<T> Scalar for T where T: Num + Signed + Clone + Debug + Display + Send + Sync + 'static {}
