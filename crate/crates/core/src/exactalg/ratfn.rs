use num_integer::Integer;
use num_traits::Signed;

use super::poly::BiPoly;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Ratio of two integer polynomials in canonical form.
///
/// Invariants (established by [`RatFn::canonicalize`]): the denominator has
/// constant term `+1`; numerator and denominator share no factor `1 + t*u`
/// (or `1 + t` when both are free of `u`); their joint integer content is 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RatFn<C> {
    num: BiPoly<C>,
    den: BiPoly<C>,
}

impl<C: Scalar + Integer + Signed> RatFn<C> {
    pub fn canonicalize(mut num: BiPoly<C>, mut den: BiPoly<C>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if den.coeff(0, 0).is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        if num.is_zero() {
            return Ok(RatFn { num, den: BiPoly::one() });
        }

        let s = if num.is_univariate() && den.is_univariate() { 0 } else { 1 };
        while let (Some(n), Some(d)) = (num.div_one_plus_t_u_pow(s), den.div_one_plus_t_u_pow(s)) {
            num = n;
            den = d;
        }

        let g = num.content().gcd(&den.content());
        if !g.is_one() {
            num = num.div_scalar_exact(&g);
            den = den.div_scalar_exact(&g);
        }
        if den.coeff(0, 0).is_negative() {
            num = -num;
            den = -den;
        }
        if !den.coeff(0, 0).is_one() {
            return Err(Error::NonMonicDenominator);
        }
        Ok(RatFn { num, den })
    }

    pub fn from_poly(p: BiPoly<C>) -> Self {
        RatFn { num: p, den: BiPoly::one() }
    }

    pub fn numerator(&self) -> &BiPoly<C> {
        &self.num
    }

    pub fn denominator(&self) -> &BiPoly<C> {
        &self.den
    }

    pub fn is_univariate(&self) -> bool {
        self.num.is_univariate() && self.den.is_univariate()
    }

    /// Substitutes `u := value` and re-canonicalizes.
    pub fn specialize_u(&self, value: &C) -> Result<Self> {
        Self::canonicalize(self.num.specialize_u(value), self.den.specialize_u(value))
    }

    /// Power-series expansion in `t` through t-degree `order`.
    ///
    /// Each t-slice of the result is a polynomial in `u`. Requires the t^0
    /// slice of the denominator to be exactly 1, which holds for every
    /// Poincaré series produced by this crate.
    pub fn series_expand(&self, order: u32) -> Result<BiPoly<C>> {
        if self.den.t_slice(0) != BiPoly::one() {
            return Err(Error::NotExpandable);
        }
        let den_deg = self.den.t_degree().unwrap_or(0);
        let den_slices: Vec<BiPoly<C>> = (0..=den_deg).map(|i| self.den.t_slice(i)).collect();
        let mut slices: Vec<BiPoly<C>> = Vec::with_capacity(order as usize + 1);
        for k in 0..=order {
            let mut c = self.num.t_slice(k);
            for i in 1..=den_deg.min(k) {
                let prod = &den_slices[i as usize] * &slices[(k - i) as usize];
                c = &c - &prod;
            }
            slices.push(c);
        }
        let mut out = BiPoly::zero();
        for (k, slice) in slices.iter().enumerate() {
            for ((_, j), c) in slice.terms() {
                out.add_term((k as u32, j), c.clone());
            }
        }
        Ok(out)
    }

    /// Series coefficients with `u := 1`, as a list indexed by t-degree.
    pub fn t_series(&self, order: u32) -> Result<Vec<C>> {
        let s = self.series_expand(order)?.specialize_u(&C::one());
        Ok((0..=order).map(|k| s.coeff(k, 0)).collect())
    }

    /// Largest `k` with `(1 + t*u^s)^k` dividing the numerator.
    pub fn numerator_multiplicity(&self, s: u32) -> u32 {
        let mut k = 0;
        let mut p = self.num.clone();
        if p.is_zero() {
            return 0;
        }
        while let Some(q) = p.div_one_plus_t_u_pow(s) {
            p = q;
            k += 1;
        }
        k
    }
}

impl<C: Scalar> RatFn<C> {
    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}
