//! The truncated rings Γ_n.
//!
//! An element is a function `{1..n} -> K`; multiplication is Dirichlet
//! convolution with every product landing above `n` discarded.

use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::numtheory::{lambda, moebius, nth_prime};
use crate::scalar::Scalar;

/// Element of Γ_n: coefficient `m` is stored at position `m - 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct TruncFn<K> {
    coeffs: Vec<K>,
}

impl<K: Scalar> TruncFn<K> {
    pub fn from_coeffs(coeffs: Vec<K>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::EmptyLevel);
        }
        Ok(TruncFn { coeffs })
    }

    /// `f(m)` for `m = 1..=n`.
    pub fn from_fn(n: usize, mut f: impl FnMut(u64) -> K) -> Self {
        assert!(n >= 1, "truncation level must be at least 1");
        TruncFn {
            coeffs: (1..=n as u64).map(&mut f).collect(),
        }
    }

    pub fn zero(n: usize) -> Self {
        Self::from_fn(n, |_| K::zero())
    }

    /// The unit ε.
    pub fn epsilon(n: usize) -> Self {
        Self::from_fn(n, |m| if m == 1 { K::one() } else { K::zero() })
    }

    /// The constant function ν₀ = 1.
    pub fn nu0(n: usize) -> Self {
        Self::from_fn(n, |_| K::one())
    }

    pub fn moebius_fn(n: usize) -> Self {
        Self::from_fn(n, |m| match moebius(m) {
            1 => K::one(),
            -1 => -K::one(),
            _ => K::zero(),
        })
    }

    /// χ_i, the indicator of p_i; zero when `p_i > n`.
    pub fn chi(i: usize, n: usize) -> Self {
        let p = nth_prime(i);
        Self::from_fn(n, |m| if m == p { K::one() } else { K::zero() })
    }

    pub fn level(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[K] {
        &self.coeffs
    }

    /// `f(m)`, 1-based. Panics outside `1..=n`.
    pub fn get(&self, m: usize) -> &K {
        &self.coeffs[m - 1]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn check_level(&self, other: &Self) -> Result<()> {
        if self.level() != other.level() {
            return Err(Error::LevelMismatch(self.level(), other.level()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_level(other)?;
        Ok(TruncFn {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        })
    }

    pub fn scale(&self, s: &K) -> Self {
        TruncFn {
            coeffs: self.coeffs.iter().map(|a| a.clone() * s.clone()).collect(),
        }
    }

    /// `(fg)(m) = Σ_{ab=m} f(a) g(b)` for `m <= n`.
    pub fn convolve(&self, other: &Self) -> Result<Self> {
        self.check_level(other)?;
        let n = self.level();
        let mut out = vec![K::zero(); n];
        for a in 1..=n {
            let fa = &self.coeffs[a - 1];
            if fa.is_zero() {
                continue;
            }
            for b in 1..=n / a {
                let gb = &other.coeffs[b - 1];
                if !gb.is_zero() {
                    let slot = &mut out[a * b - 1];
                    *slot = slot.clone() + fa.clone() * gb.clone();
                }
            }
        }
        Ok(TruncFn { coeffs: out })
    }

    /// Convolution inverse, by the triangular recurrence
    /// `g(1) = 1/f(1)`, `g(m) = -(1/f(1)) Σ_{ab=m, a>1} f(a) g(b)`.
    pub fn invert(&self) -> Result<Self> {
        let f1 = &self.coeffs[0];
        if f1.is_zero() {
            return Err(Error::NonUnit);
        }
        let n = self.level();
        let inv1 = K::one() / f1.clone();
        let mut g: Vec<K> = vec![K::zero(); n];
        g[0] = inv1.clone();
        // acc[m] collects Σ_{ab=m, a>1} f(a) g(b) as soon as g(b) is final
        let mut acc = vec![K::zero(); n];
        for b in 1..=n {
            if b > 1 {
                g[b - 1] = -(inv1.clone() * acc[b - 1].clone());
            }
            let gb = g[b - 1].clone();
            if gb.is_zero() {
                continue;
            }
            for a in 2..=n / b {
                let fa = &self.coeffs[a - 1];
                if !fa.is_zero() {
                    let slot = &mut acc[a * b - 1];
                    *slot = slot.clone() + fa.clone() * gb.clone();
                }
            }
        }
        Ok(TruncFn { coeffs: g })
    }

    /// Image under Γ_n -> Γ_{level}.
    pub fn truncate(&self, level: usize) -> Result<Self> {
        if level > self.level() {
            return Err(Error::TruncateUpward { from: self.level(), to: level });
        }
        if level == 0 {
            return Err(Error::EmptyLevel);
        }
        Ok(TruncFn {
            coeffs: self.coeffs[..level].to_vec(),
        })
    }

    fn support(&self) -> impl Iterator<Item = u64> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, _)| i as u64 + 1)
    }

    /// N(f): least `m` with `f(m) != 0`.
    pub fn norm_n(&self) -> Result<u64> {
        self.support().next().ok_or(Error::ZeroFunction)
    }

    /// D(f): least λ(m) over the support.
    pub fn degree_d(&self) -> Result<u32> {
        self.support().map(lambda).min().ok_or(Error::ZeroFunction)
    }

    /// M(f): least `m` in the support with λ(m) = D(f).
    pub fn norm_m(&self) -> Result<u64> {
        let d = self.degree_d()?;
        Ok(self
            .support()
            .find(|&m| lambda(m) == d)
            .expect("degree is attained on the support"))
    }

    /// `f(1) = 1` and `f(ab) = f(a) f(b)` for coprime `a, b` with `ab <= n`.
    pub fn is_multiplicative(&self) -> bool {
        if !self.coeffs[0].is_one() {
            return false;
        }
        let n = self.level();
        (2..=n).all(|a| {
            (2..=n / a)
                .filter(|&b| a.gcd(&b) == 1)
                .all(|b| self.coeffs[a * b - 1] == self.coeffs[a - 1].clone() * self.coeffs[b - 1].clone())
        })
    }
}
