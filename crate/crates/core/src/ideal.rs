//! The weight ideals I_n and their minimal generators.
//!
//! A monomial lies in I_n iff its weight exceeds n. A generator with
//! smallest variable x_v has the form `x_v * m` where `w(m)` is an integer in
//! `(n/p_v, n]` with no prime factor below `p_v`; that integer scan is
//! [`min_gens`]. [`min_gens_brute`] instead filters every weight in
//! `(n, n*p_r]` through the minimality condition and is kept as an
//! independent cross-check.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::monomial::{monomial_of, Monomial};
use crate::numtheory::{factorize, nth_prime, prime_count, sieve_covering};

/// True iff `w(mono) > n`.
pub fn in_ideal(mono: &Monomial, n: u64) -> bool {
    mono.try_weight().is_none_or(|w| w > n)
}

/// G(I_n) together with the counts C_n, C_{n,v} and C_{n,v,d}.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GenTable {
    n: u64,
    r: usize,
    gens: Vec<Monomial>,
    /// `by_min[v - 1] = C_{n,v}`
    by_min: Vec<usize>,
    /// `graded[v - 1][d - 2] = C_{n,v,d}`, trailing zeros trimmed
    graded: Vec<Vec<usize>>,
}

impl GenTable {
    /// Sorts the generators canonically and tallies the counts.
    pub fn from_generators(n: u64, mut gens: Vec<Monomial>) -> Self {
        let r = prime_count(n);
        gens.sort_by_cached_key(|g| (g.weight(), g.clone()));
        gens.dedup();
        let mut by_min = vec![0usize; r];
        let mut graded: Vec<Vec<usize>> = vec![Vec::new(); r];
        for g in &gens {
            let v = g.min_index().expect("generators are non-constant");
            let d = g.total_degree() as usize;
            by_min[v - 1] += 1;
            let row = &mut graded[v - 1];
            // degree-1 generators only occur for n = 1, which is rejected
            let slot = d.checked_sub(2).expect("generators have degree >= 2");
            if row.len() <= slot {
                row.resize(slot + 1, 0);
            }
            row[slot] += 1;
        }
        GenTable { n, r, gens, by_min, graded }
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// r(n), the number of variables.
    pub fn r(&self) -> usize {
        self.r
    }

    /// Generators by ascending weight.
    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    /// C_n
    pub fn total(&self) -> usize {
        self.gens.len()
    }

    /// C_{n,v}; zero outside `1..=r`.
    pub fn count(&self, v: usize) -> usize {
        if v == 0 {
            return 0;
        }
        self.by_min.get(v - 1).copied().unwrap_or(0)
    }

    /// `[C_{n,1}, ..., C_{n,r}]`
    pub fn counts(&self) -> &[usize] {
        &self.by_min
    }

    /// C_{n,v,d}
    pub fn graded_count(&self, v: usize, d: usize) -> usize {
        if v == 0 || d < 2 {
            return 0;
        }
        self.graded
            .get(v - 1)
            .and_then(|row| row.get(d - 2))
            .copied()
            .unwrap_or(0)
    }

    /// `[C_{n,v,2}, C_{n,v,3}, ...]` without trailing zeros.
    pub fn graded_row(&self, v: usize) -> &[usize] {
        if v == 0 {
            return &[];
        }
        self.graded.get(v - 1).map_or(&[], |r| r.as_slice())
    }
}

fn check_level(n: u64) -> Result<()> {
    if n < 2 {
        Err(Error::LevelTooSmall(n))
    } else {
        Ok(())
    }
}

/// G(I_n) by the integer scan: for each `v` and each `x` in `(n/p_v, n]`
/// whose prime factors are all `>= p_v` (`x = 1` qualifies vacuously), the
/// generator `x_v * monomial_of(x)`.
pub fn min_gens(n: u64) -> Result<GenTable> {
    check_level(n)?;
    let sieve = sieve_covering(n);
    let r = sieve.prime_count(n);
    let mut gens = Vec::new();
    for v in 1..=r {
        let p = sieve.primes()[v - 1];
        for x in n / p + 1..=n {
            if x == 1 || sieve.spf(x) >= p {
                gens.push(monomial_of(x, r)?.times_var(v));
            }
        }
    }
    Ok(GenTable::from_generators(n, gens))
}

/// G(I_n) by filtering every weight `y` in `(n, n*p_r]` that uses only the
/// first `r` primes through the condition `y <= n * spf(y)`.
pub fn min_gens_brute(n: u64) -> Result<GenTable> {
    check_level(n)?;
    let r = prime_count(n);
    let sieve = sieve_covering(n);
    let p_r = sieve.primes()[r - 1];
    let sieve = sieve_covering(n * p_r);
    let mut gens = Vec::new();
    for y in n + 1..=n * p_r {
        if y > n * sieve.spf(y) {
            continue;
        }
        let f = factorize(y);
        if f.largest_index().is_some_and(|k| k <= r) {
            gens.push(monomial_of(y, r)?);
        }
    }
    Ok(GenTable::from_generators(n, gens))
}

/// `C_{n,v,d}` as rows indexed by `v - 1`, each `[C_{n,v,2}, C_{n,v,3}, ...]`.
pub fn graded_counts(n: u64) -> Result<Vec<Vec<usize>>> {
    let table = min_gens(n)?;
    Ok((1..=table.r()).map(|v| table.graded_row(v).to_vec()).collect())
}

/// Exchange check for the reversed variable order: for every generator `g`,
/// every `i` in its support and every `i <= j <= r`, `g * x_j / x_i` must
/// lie in I_n. Membership is decided on weights.
pub fn is_strongly_stable_reversed_set(gens: &[Monomial], n: u64, r: usize) -> bool {
    let primes: Vec<u128> = (1..=r.max(gens.iter().filter_map(Monomial::max_index).max().unwrap_or(0)))
        .map(|i| nth_prime(i) as u128)
        .collect();
    let weight = |g: &Monomial| {
        g.exponents()
            .iter()
            .zip(&primes)
            .fold(1u128, |w, (&a, &p)| w.saturating_mul(p.saturating_pow(a)))
    };
    gens.iter().all(|g| {
        let w = weight(g);
        g.support().all(|i| {
            let base = w / primes[i - 1];
            (i..=r).all(|j| base.saturating_mul(primes[j - 1]) > n as u128)
        })
    })
}

pub fn is_strongly_stable_reversed(n: u64) -> Result<bool> {
    let table = min_gens(n)?;
    Ok(is_strongly_stable_reversed_set(table.generators(), n, table.r()))
}

/// Whether `gens` generates every monomial of I_n in x_1..x_r with weight
/// up to `p_r * n`, the range that contains all minimal generators.
pub fn generates_ideal_up_to_bound(gens: &[Monomial], n: u64, r: usize) -> Result<bool> {
    check_level(n)?;
    if r == 0 {
        return Ok(true);
    }
    let p_r = sieve_covering(n).primes()[r - 1];
    for y in n + 1..=n * p_r {
        if factorize(y).largest_index().is_some_and(|k| k > r) {
            continue;
        }
        let m = monomial_of(y, r)?;
        if !gens.iter().any(|g| g.divides(&m)) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e.to_vec())
    }

    fn gen_set(n: u64) -> Vec<Monomial> {
        let mut g = min_gens(n).unwrap().generators().to_vec();
        g.sort();
        g
    }

    fn sorted(mut v: Vec<Monomial>) -> Vec<Monomial> {
        v.sort();
        v
    }

    #[test]
    fn membership() {
        assert!(in_ideal(&mono(&[2]), 2));
        assert!(!in_ideal(&mono(&[1]), 2));
        assert!(!in_ideal(&Monomial::one(), 1));
        assert!(in_ideal(&mono(&[300]), u64::MAX));
    }

    #[test]
    fn small_ideals() {
        assert_eq!(gen_set(2), vec![mono(&[2])]);
        assert_eq!(gen_set(3), sorted(vec![mono(&[2]), mono(&[1, 1]), mono(&[0, 2])]));
        assert_eq!(gen_set(4), sorted(vec![mono(&[3]), mono(&[1, 1]), mono(&[0, 2])]));
        assert_eq!(
            gen_set(5),
            sorted(vec![
                mono(&[3]),
                mono(&[1, 1]),
                mono(&[1, 0, 1]),
                mono(&[0, 2]),
                mono(&[0, 1, 1]),
                mono(&[0, 0, 2]),
            ])
        );
        let t9 = min_gens(9).unwrap();
        assert_eq!(t9.counts(), &[5, 3, 2, 1]);
        assert_eq!(t9.total(), 11);
    }

    #[test]
    fn canonical_order_is_by_weight() {
        let t = min_gens(5).unwrap();
        let w: Vec<u64> = t.generators().iter().map(Monomial::weight).collect();
        assert_eq!(w, vec![6, 8, 9, 10, 15, 25]);
    }

    #[test]
    fn brute_examples() {
        assert_eq!(min_gens_brute(2).unwrap().generators(), &[mono(&[2])]);
        assert_eq!(min_gens_brute(4).unwrap(), min_gens(4).unwrap());
        let t30 = min_gens_brute(30).unwrap();
        assert_eq!(t30.total(), 61);
        assert_eq!(t30.count(1), 15);
    }

    #[test]
    fn both_algorithms_agree() {
        for n in 2..=150 {
            assert_eq!(min_gens(n).unwrap(), min_gens_brute(n).unwrap(), "n = {n}");
        }
    }

    #[test]
    fn rejects_small_levels() {
        assert_eq!(min_gens(1), Err(Error::LevelTooSmall(1)));
        assert_eq!(min_gens_brute(0), Err(Error::LevelTooSmall(0)));
    }

    #[test]
    fn graded_examples() {
        let t9 = min_gens(9).unwrap();
        assert_eq!(t9.graded_row(1), &[2, 2, 1]);
        let t5 = min_gens(5).unwrap();
        assert_eq!(
            (t5.graded_count(1, 2), t5.graded_count(1, 3), t5.graded_count(2, 2), t5.graded_count(3, 2)),
            (2, 1, 2, 1)
        );
        assert_eq!(graded_counts(5).unwrap(), vec![vec![2, 1], vec![2], vec![1]]);
        for n in 2..=60 {
            let t = min_gens(n).unwrap();
            for v in 0..=t.r() + 1 {
                assert_eq!(t.graded_count(v, 0) + t.graded_count(v, 1), 0);
                assert_eq!(t.graded_row(v).iter().sum::<usize>(), t.count(v));
            }
            assert_eq!(t.counts().iter().sum::<usize>(), t.total());
        }
    }

    #[test]
    fn minimality_condition_holds() {
        for n in 2..=120 {
            let t = min_gens(n).unwrap();
            for g in t.generators() {
                let w = g.weight();
                let p_min = crate::numtheory::nth_prime(g.min_index().unwrap());
                assert!(n < w && w <= p_min * n);
                // no proper divisor x_v | g leaves I_n
                for v in g.support() {
                    assert!(!in_ideal(&g.div_var(v).unwrap(), n));
                }
            }
        }
    }

    #[test]
    fn stability() {
        assert_eq!(is_strongly_stable_reversed(5), Ok(true));
        assert_eq!(is_strongly_stable_reversed(30), Ok(true));
        let lone = vec![mono(&[0, 2])];
        assert!(is_strongly_stable_reversed_set(&lone, 3, 2));
        assert_eq!(generates_ideal_up_to_bound(&lone, 3, 2), Ok(false));
        assert_eq!(generates_ideal_up_to_bound(&gen_set(3), 3, 2), Ok(true));
        for n in 2..=60 {
            assert_eq!(generates_ideal_up_to_bound(&gen_set(n), n, prime_count(n)), Ok(true));
        }
    }

    #[test]
    fn stability_matches_the_exchange_definition() {
        // reversed strong stability: x_i m in I  =>  x_j m in I for j >= i,
        // checked on every monomial of weight <= n
        for n in 2..=40u64 {
            let r = prime_count(n);
            for w in 1..=n {
                let m = monomial_of(w, r).unwrap();
                for i in 1..=r {
                    if in_ideal(&m.times_var(i), n) {
                        for j in i..=r {
                            assert!(in_ideal(&m.times_var(j), n));
                        }
                    }
                }
            }
        }
    }
}
