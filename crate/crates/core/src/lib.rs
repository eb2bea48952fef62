//! Exact computations with the truncations Γ_n of the ring of
//! number-theoretic functions under Dirichlet convolution.
//!
//! Γ_n is isomorphic to `A_n = K[x_1..x_r] / I_n`, where `r` is the number
//! of primes `<= n` and `I_n` is spanned by the monomials whose weight
//! `Π p_i^{a_i}` exceeds `n`. The crate provides the convolution algebra
//! itself ([`gamma`]), the minimal generators of `I_n` ([`ideal`]), Hilbert
//! and Poincaré-Betti series ([`series`]) and brute-force homological
//! oracles that recompute those series from chain complexes ([`homology`]).
//!
//! The algebra is generic over its scalar type; the aliases below fix the
//! exact instantiations used by the series and oracle code.

pub mod error;
pub mod exactalg;
pub mod gamma;
pub mod homology;
pub mod ideal;
pub mod monomial;
pub mod numtheory;
pub mod scalar;
pub mod series;

pub use error::{Error, Result};
pub use exactalg::{BiPoly, RatFn};
pub use gamma::TruncFn;
pub use homology::{GradedVectorSpaceDims, Matrix, RankMode};
pub use ideal::GenTable;
pub use monomial::Monomial;
pub use scalar::Scalar;

/// Arbitrary-precision integers.
pub type Integer = num_bigint::BigInt;
/// Exact rationals, the coefficient field K = ℚ.
pub type Rational = num_rational::BigRational;
/// Element of Γ_n over ℚ.
pub type TruncFnQ = TruncFn<Rational>;
/// Element of Γ_n over `f64`, for quick numerical experiments.
pub type TruncFnF64 = TruncFn<f64>;
/// Integer polynomial in `(t, u)`.
pub type IntPoly = BiPoly<Integer>;
/// Canonical integer rational function in `(t, u)`.
pub type IntRatFn = RatFn<Integer>;
/// Dense matrix over ℚ.
pub type RationalMatrix = Matrix<Rational>;
