//! Monomials in the variables x_1, x_2, ... and the weight bijection
//! `x_1^{a_1} x_2^{a_2} ... <-> 2^{a_1} 3^{a_2} ...` with the positive integers.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::numtheory::{factorize, nth_prime};

/// Exponent vector over x_1..x_r. Variable indices are 1-based; trailing
/// zero exponents are never stored, so equal monomials compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial { exps: Vec::new() }
    }

    /// The variable x_i.
    pub fn var(i: usize) -> Self {
        assert!(i >= 1, "variables are indexed from 1");
        let mut exps = vec![0; i];
        exps[i - 1] = 1;
        Monomial { exps }
    }

    pub fn from_exponents(mut exps: Vec<u32>) -> Self {
        while exps.last() == Some(&0) {
            exps.pop();
        }
        Monomial { exps }
    }

    /// Exponents of x_1..x_k where k is the largest index in the support.
    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exponent(&self, i: usize) -> u32 {
        assert!(i >= 1, "variables are indexed from 1");
        self.exps.get(i - 1).copied().unwrap_or(0)
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    /// Indices i with a_i > 0, ascending.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &a)| a > 0)
            .map(|(i, _)| i + 1)
    }

    pub fn min_index(&self) -> Option<usize> {
        self.support().next()
    }

    pub fn max_index(&self) -> Option<usize> {
        if self.exps.is_empty() {
            None
        } else {
            Some(self.exps.len())
        }
    }

    pub fn total_degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    /// Π p_i^{a_i}, or `None` if it does not fit in a `u64`.
    pub fn try_weight(&self) -> Option<u64> {
        let mut w: u64 = 1;
        for (i, &a) in self.exps.iter().enumerate() {
            if a > 0 {
                let p = nth_prime(i + 1);
                w = w.checked_mul(p.checked_pow(a)?)?;
            }
        }
        Some(w)
    }

    /// Π p_i^{a_i}. Panics on `u64` overflow; use [`Monomial::try_weight`]
    /// when the monomial may be huge.
    pub fn weight(&self) -> u64 {
        self.try_weight().expect("monomial weight overflows u64")
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let len = self.exps.len().max(other.exps.len());
        let exps = (0..len)
            .map(|i| self.exps.get(i).unwrap_or(&0) + other.exps.get(i).unwrap_or(&0))
            .collect();
        Monomial { exps }
    }

    pub fn times_var(&self, i: usize) -> Monomial {
        self.mul(&Monomial::var(i))
    }

    /// m / x_i, when x_i divides m.
    pub fn div_var(&self, i: usize) -> Option<Monomial> {
        if self.exponent(i) == 0 {
            return None;
        }
        let mut exps = self.exps.clone();
        exps[i - 1] -= 1;
        Some(Monomial::from_exponents(exps))
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.len() <= other.exps.len()
            && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }
}

/// The weight w(m); `weight(1) = 1`.
pub fn weight(mono: &Monomial) -> u64 {
    mono.weight()
}

/// Inverse of [`weight`], restricted to monomials in x_1..x_r.
pub fn monomial_of(m: u64, r: usize) -> Result<Monomial> {
    if m == 0 {
        return Err(Error::InvalidArgument("weights are positive".into()));
    }
    let f = factorize(m);
    if f.largest_index().is_some_and(|k| k > r) {
        return Err(Error::PrimeIndexOutOfRange(m, r));
    }
    let mut exps = vec![0u32; f.largest_index().unwrap_or(0)];
    for (i, a) in f.index_exponents() {
        exps[i - 1] = a;
    }
    Ok(Monomial { exps })
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for i in self.support() {
            if !first {
                f.write_str("*")?;
            }
            first = false;
            match self.exponent(i) {
                1 => write!(f, "x{i}")?,
                a => write!(f, "x{i}^{a}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for Monomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}
