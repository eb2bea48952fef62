//! Prime sieving, factorization and the arithmetic functions λ, λ̃ and μ.
//!
//! Everything is driven by a smallest-prime-factor table. A process-wide
//! table covering `1..=DEFAULT_SIEVE_BOUND` is built on first use and is
//! replaced by a larger one if a query ever falls outside it, so the free
//! functions in this module never fail for lack of coverage.

use std::sync::{Arc, OnceLock, RwLock};

use crate::error::{Error, Result};

pub const DEFAULT_SIEVE_BOUND: usize = 1_000_000;

/// Smallest-prime-factor table for `0..=bound` together with the ordered
/// list of primes up to `bound`.
#[derive(Debug, Clone)]
pub struct Sieve {
    spf: Vec<u32>,
    primes: Vec<u64>,
}

impl Sieve {
    pub fn new(bound: usize) -> Self {
        let bound = bound.max(2);
        let mut spf = vec![0u32; bound + 1];
        let mut primes = Vec::new();
        // linear sieve: every composite is crossed out exactly once by its spf
        for i in 2..=bound {
            if spf[i] == 0 {
                spf[i] = i as u32;
                primes.push(i as u64);
            }
            let si = spf[i] as u64;
            for &p in &primes {
                if p > si || (p as usize) * i > bound {
                    break;
                }
                spf[p as usize * i] = p as u32;
            }
        }
        Sieve { spf, primes }
    }

    pub fn bound(&self) -> usize {
        self.spf.len() - 1
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    pub fn is_prime(&self, m: u64) -> bool {
        m >= 2 && self.spf[m as usize] as u64 == m
    }

    /// Least prime dividing `m`; `m` must lie within the table.
    pub fn spf(&self, m: u64) -> u64 {
        self.spf[m as usize] as u64
    }

    /// Number of primes `<= n`, for `n` within the table.
    pub fn prime_count(&self, n: u64) -> usize {
        self.primes.partition_point(|&p| p <= n)
    }

    /// 1-based index of the prime `p` (so `prime_index(2) == 1`).
    pub fn prime_index(&self, p: u64) -> Option<usize> {
        self.primes.binary_search(&p).ok().map(|i| i + 1)
    }

    pub fn factorize(&self, m: u64) -> Factorization {
        assert!(m >= 1, "factorize expects a positive integer");
        let mut factors: Vec<PrimePower> = Vec::new();
        let mut rest = m;
        while rest > 1 {
            let p = self.spf(rest);
            rest /= p;
            match factors.last_mut() {
                Some(last) if last.prime == p => last.exponent += 1,
                _ => factors.push(PrimePower {
                    index: self.prime_index(p).expect("spf entries are primes"),
                    prime: p,
                    exponent: 1,
                }),
            }
        }
        Factorization { value: m, factors }
    }
}

fn shared() -> &'static RwLock<Arc<Sieve>> {
    static SIEVE: OnceLock<RwLock<Arc<Sieve>>> = OnceLock::new();
    SIEVE.get_or_init(|| RwLock::new(Arc::new(Sieve::new(DEFAULT_SIEVE_BOUND))))
}

/// The shared sieve, grown if necessary so that it covers `m`.
pub fn sieve_covering(m: u64) -> Arc<Sieve> {
    let current = shared().read().expect("sieve lock poisoned").clone();
    if current.bound() as u64 >= m {
        return current;
    }
    let mut guard = shared().write().expect("sieve lock poisoned");
    if (guard.bound() as u64) < m {
        let bound = (m as usize).max(2 * guard.bound());
        *guard = Arc::new(Sieve::new(bound));
    }
    guard.clone()
}

/// The shared sieve, grown until it holds at least `count` primes.
fn sieve_with_primes(count: usize) -> Arc<Sieve> {
    let mut sieve = sieve_covering(2);
    while sieve.primes().len() < count {
        sieve = sieve_covering(2 * sieve.bound() as u64);
    }
    sieve
}

/// One factor `p_index ^ exponent` of a factorization.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimePower {
    /// 1-based position of the prime, `p_1 = 2`.
    pub index: usize,
    pub prime: u64,
    pub exponent: u32,
}

/// Canonical prime factorization, factors sorted by ascending prime index.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Factorization {
    value: u64,
    factors: Vec<PrimePower>,
}

impl Factorization {
    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn factors(&self) -> &[PrimePower] {
        &self.factors
    }

    /// `(prime_index, exponent)` pairs.
    pub fn index_exponents(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.factors.iter().map(|f| (f.index, f.exponent))
    }

    pub fn largest_index(&self) -> Option<usize> {
        self.factors.last().map(|f| f.index)
    }
}

/// Primes `<= n` in increasing order.
pub fn primes_up_to(n: u64) -> Vec<u64> {
    let sieve = sieve_covering(n);
    let count = sieve.prime_count(n);
    sieve.primes()[..count].to_vec()
}

/// r(n): the number of primes `<= n`.
pub fn prime_count(n: u64) -> usize {
    sieve_covering(n).prime_count(n)
}

/// p_i with `p_1 = 2`. Panics for `i == 0`.
pub fn nth_prime(i: usize) -> u64 {
    assert!(i >= 1, "primes are indexed from 1");
    sieve_with_primes(i).primes()[i - 1]
}

pub fn factorize(m: u64) -> Factorization {
    sieve_covering(m).factorize(m)
}

/// Number of prime factors counted with multiplicity.
pub fn lambda(m: u64) -> u32 {
    factorize(m).factors().iter().map(|f| f.exponent).sum()
}

/// Σ a_i p_i over the factorization of `m`.
pub fn lambda_tilde(m: u64) -> u64 {
    factorize(m)
        .factors()
        .iter()
        .map(|f| f.exponent as u64 * f.prime)
        .sum()
}

pub fn moebius(m: u64) -> i8 {
    let f = factorize(m);
    if f.factors().iter().any(|p| p.exponent > 1) {
        0
    } else if f.factors().len().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

pub fn smallest_prime_factor(m: u64) -> Result<u64> {
    if m < 2 {
        return Err(Error::NoPrimeFactor(m));
    }
    Ok(sieve_covering(m).spf(m))
}
