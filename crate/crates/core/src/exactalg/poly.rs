use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::scalar::Scalar;

/// Polynomial in the formal variables `t` and `u`.
///
/// Terms are keyed by `(t_degree, u_degree)`; zero coefficients are never
/// stored, so the derived equality is equality of polynomials. Iteration
/// order (ascending t-degree, then ascending u-degree) is the canonical
/// print order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct BiPoly<C> {
    terms: BTreeMap<(u32, u32), C>,
}

impl<C: Scalar> BiPoly<C> {
    pub fn zero() -> Self {
        BiPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(c, 0, 0)
    }

    /// `c * t^i * u^j`
    pub fn monomial(c: C, i: u32, j: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((i, j), c);
        }
        BiPoly { terms }
    }

    pub fn t() -> Self {
        Self::monomial(C::one(), 1, 0)
    }

    pub fn u() -> Self {
        Self::monomial(C::one(), 0, 1)
    }

    /// Sums repeated keys and drops zeros.
    pub fn from_terms<I: IntoIterator<Item = ((u32, u32), C)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (k, c) in terms {
            p.add_term(k, c);
        }
        p
    }

    /// Univariate polynomial in t from coefficients in ascending order.
    pub fn from_t_coeffs<I: IntoIterator<Item = C>>(coeffs: I) -> Self {
        Self::from_terms(coeffs.into_iter().enumerate().map(|(i, c)| ((i as u32, 0), c)))
    }

    pub fn add_term(&mut self, key: (u32, u32), c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&key) {
            Some(old) => {
                let sum = old + c;
                if !sum.is_zero() {
                    self.terms.insert(key, sum);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), &C)> + '_ {
        self.terms.iter().map(|(&k, c)| (k, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, i: u32, j: u32) -> C {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn t_degree(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.0).max()
    }

    pub fn u_degree(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.1).max()
    }

    /// True when no term involves `u`.
    pub fn is_univariate(&self) -> bool {
        self.terms.keys().all(|k| k.1 == 0)
    }

    /// Coefficients of t^0..t^deg for a polynomial in t alone
    /// (u-degrees are summed over, i.e. u is set to 1).
    pub fn t_coeffs(&self) -> Vec<C> {
        let len = self.t_degree().map_or(0, |d| d as usize + 1);
        let mut out = vec![C::zero(); len];
        for (&(i, _), c) in &self.terms {
            out[i as usize] = out[i as usize].clone() + c.clone();
        }
        out
    }

    /// The coefficient of t^k as a polynomial in u, stored with t-degree 0.
    pub fn t_slice(&self, k: u32) -> BiPoly<C> {
        BiPoly {
            terms: self
                .terms
                .range((k, 0)..=(k, u32::MAX))
                .map(|(&(_, j), c)| ((0, j), c.clone()))
                .collect(),
        }
    }

    /// Terms with t-degree `<= order`.
    pub fn truncate_t(&self, order: u32) -> BiPoly<C> {
        BiPoly {
            terms: self
                .terms
                .range(..(order + 1, 0))
                .map(|(&k, c)| (k, c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, s: &C) -> BiPoly<C> {
        Self::from_terms(self.terms.iter().map(|(&k, c)| (k, c.clone() * s.clone())))
    }

    /// Multiplies by `t^i u^j`.
    pub fn shift(&self, i: u32, j: u32) -> BiPoly<C> {
        BiPoly {
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), c)| ((a + i, b + j), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> BiPoly<C> {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Substitutes `u := value`.
    pub fn specialize_u(&self, value: &C) -> BiPoly<C> {
        Self::from_terms(
            self.terms
                .iter()
                .map(|(&(i, j), c)| ((i, 0), c.clone() * pow_scalar(value, j))),
        )
    }

    /// Substitutes `t := value`; the result is a polynomial in u.
    pub fn specialize_t(&self, value: &C) -> BiPoly<C> {
        Self::from_terms(
            self.terms
                .iter()
                .map(|(&(i, j), c)| ((0, j), c.clone() * pow_scalar(value, i))),
        )
    }

    /// Value at `t = a, u = b`.
    pub fn eval(&self, a: &C, b: &C) -> C {
        self.terms.iter().fold(C::zero(), |acc, (&(i, j), c)| {
            acc + c.clone() * pow_scalar(a, i) * pow_scalar(b, j)
        })
    }

    /// Exact quotient by `1 + t*u^s`, or `None` if it does not divide.
    ///
    /// Writing `self = Σ a_k(u) t^k`, the quotient `Σ q_k(u) t^k` satisfies
    /// `q_0 = a_0`, `q_k = a_k - u^s q_{k-1}`, and divisibility requires
    /// the top coefficient to be `u^s q_{d-1}`.
    pub fn div_one_plus_t_u_pow(&self, s: u32) -> Option<BiPoly<C>> {
        let d = match self.t_degree() {
            None => return Some(Self::zero()),
            Some(0) => return None,
            Some(d) => d,
        };
        let mut quotient = Self::zero();
        let mut prev = Self::zero();
        for k in 0..d {
            let qk = &self.t_slice(k) - &prev.shift(0, s);
            for (&(_, j), c) in &qk.terms {
                quotient.terms.insert((k, j), c.clone());
            }
            prev = qk;
        }
        if self.t_slice(d) == prev.shift(0, s) {
            Some(quotient)
        } else {
            None
        }
    }
}

impl<C: Scalar + Integer + Signed> BiPoly<C> {
    /// Non-negative gcd of all coefficients (zero for the zero polynomial).
    pub fn content(&self) -> C {
        self.terms
            .values()
            .fold(C::zero(), |g, c| g.gcd(c))
    }

    /// Divides every coefficient by `d`, which must divide them exactly.
    pub fn div_scalar_exact(&self, d: &C) -> BiPoly<C> {
        BiPoly {
            terms: self
                .terms
                .iter()
                .map(|(&k, c)| {
                    debug_assert!((c.clone() % d.clone()).is_zero());
                    (k, c.clone() / d.clone())
                })
                .collect(),
        }
    }
}

fn pow_scalar<C: Scalar>(base: &C, e: u32) -> C {
    (0..e).fold(C::one(), |acc, _| acc * base.clone())
}

impl<'a, C: Scalar> Add<&'a BiPoly<C>> for &'a BiPoly<C> {
    type Output = BiPoly<C>;
    fn add(self, rhs: &'a BiPoly<C>) -> BiPoly<C> {
        let mut out = self.clone();
        for (&k, c) in &rhs.terms {
            out.add_term(k, c.clone());
        }
        out
    }
}

impl<'a, C: Scalar> Sub<&'a BiPoly<C>> for &'a BiPoly<C> {
    type Output = BiPoly<C>;
    fn sub(self, rhs: &'a BiPoly<C>) -> BiPoly<C> {
        let mut out = self.clone();
        for (&k, c) in &rhs.terms {
            out.add_term(k, -c.clone());
        }
        out
    }
}

impl<'a, C: Scalar> Mul<&'a BiPoly<C>> for &'a BiPoly<C> {
    type Output = BiPoly<C>;
    fn mul(self, rhs: &'a BiPoly<C>) -> BiPoly<C> {
        let mut out = BiPoly::zero();
        for (&(a, b), c) in &self.terms {
            for (&(x, y), d) in &rhs.terms {
                out.add_term((a + x, b + y), c.clone() * d.clone());
            }
        }
        out
    }
}

impl<C: Scalar> Neg for &BiPoly<C> {
    type Output = BiPoly<C>;
    fn neg(self) -> BiPoly<C> {
        BiPoly {
            terms: self.terms.iter().map(|(&k, c)| (k, -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<C: Scalar> $tr<BiPoly<C>> for BiPoly<C> {
            type Output = BiPoly<C>;
            fn $m(self, rhs: BiPoly<C>) -> BiPoly<C> {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<C: Scalar> Neg for BiPoly<C> {
    type Output = BiPoly<C>;
    fn neg(self) -> BiPoly<C> {
        -&self
    }
}

impl<C: Scalar> Zero for BiPoly<C> {
    fn zero() -> Self {
        BiPoly::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<C: Scalar> One for BiPoly<C> {
    fn one() -> Self {
        BiPoly::one()
    }
}
