//! Exact scalars, polynomials in `(t, u)`, canonical rational functions and
//! their power-series expansion.

mod poly;
mod ratfn;
mod text;

pub use poly::BiPoly;
pub use ratfn::RatFn;
pub use text::{format_poly, format_ratfn};
