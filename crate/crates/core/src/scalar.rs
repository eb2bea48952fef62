//! Scalar bounds shared by the generic parts of the crate.
//!
//! Truncated functions, bivariate polynomials and matrices are generic over
//! their coefficient type. The exact instantiations used throughout the
//! library are the aliases exported at the crate root.

use std::fmt::Debug;
use std::ops::Neg;

use num_traits::Num;

/// Commutative ring with unit. Division is only used where the caller
/// guarantees exactness (or where the type is a field).
pub trait Scalar: Clone + PartialEq + Debug + Num + Neg<Output = Self> {}

impl<T> Scalar for T where T: Clone + PartialEq + Debug + Num + Neg<Output = T> {}
