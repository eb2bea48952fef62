use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::numtheory::primes_up_to;
use crate::Rational;

/// Dense row-major matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Clone + Zero> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Matrix {
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn identity(n: usize) -> Self
    where
        T: One,
    {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, T::one());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: T) {
        self.data[r * self.cols + c] = v;
    }

    pub fn map<U: Clone + Zero>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.data.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }
}

/// Rank over the fraction field of `R` by fraction-free (Bareiss)
/// elimination; every division is exact.
pub fn bareiss_rank<R: Clone + Integer + Signed>(mut m: Matrix<R>) -> usize {
    let (rows, cols) = (m.rows, m.cols);
    let mut rank = 0;
    let mut prev = R::one();
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !m.get(r, c).is_zero()) else {
            continue;
        };
        m.swap_rows(rank, p);
        let pivot = m.get(rank, c).clone();
        for r in rank + 1..rows {
            let factor = m.get(r, c).clone();
            for j in c + 1..cols {
                let v = (pivot.clone() * m.get(r, j).clone() - factor.clone() * m.get(rank, j).clone())
                    / prev.clone();
                m.set(r, j, v);
            }
            m.set(r, c, R::zero());
        }
        prev = pivot;
        rank += 1;
    }
    rank
}

/// Rank over ℚ. Rows are scaled to integers, then reduced fraction-free.
pub fn exact_rank(m: &Matrix<Rational>) -> usize {
    let mut int_rows = Matrix::<BigInt>::zeros(m.rows, m.cols);
    for r in 0..m.rows {
        let lcm = (0..m.cols).fold(BigInt::one(), |acc, c| acc.lcm(m.get(r, c).denom()));
        for c in 0..m.cols {
            let q = m.get(r, c);
            int_rows.set(r, c, q.numer() * (&lcm / q.denom()));
        }
    }
    bareiss_rank(int_rows)
}

/// Rank of an integer matrix over ℚ.
pub fn integer_rank(m: &Matrix<i64>) -> usize {
    bareiss_rank(m.map(|&v| BigInt::from(v)))
}

/// Rank of an integer matrix over GF(p); `p` must be prime and below 2^32.
pub fn rank_mod_p(m: &Matrix<i64>, p: u64) -> usize {
    assert!((2..(1 << 32)).contains(&p), "modulus out of range");
    let mut a: Matrix<u64> = m.map(|&v| v.rem_euclid(p as i64) as u64);
    let (rows, cols) = (a.rows, a.cols);
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(piv) = (rank..rows).find(|&r| *a.get(r, c) != 0) else {
            continue;
        };
        a.swap_rows(rank, piv);
        let inv = pow_mod(*a.get(rank, c), p - 2, p);
        for r in rank + 1..rows {
            let f = *a.get(r, c);
            if f == 0 {
                continue;
            }
            let scale = f * inv % p;
            for j in c..cols {
                let sub = scale * a.get(rank, j) % p;
                let v = (a.get(r, j) + p - sub) % p;
                a.set(r, j, v);
            }
        }
        rank += 1;
    }
    rank
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

/// A prime in `(2^30, 2^31)` chosen deterministically from `seed`.
pub fn random_large_prime(seed: u64) -> u64 {
    let small = primes_up_to(1 << 16);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let candidate = rng.gen_range((1u64 << 30) + 1..1u64 << 31) | 1;
        if small
            .iter()
            .take_while(|&&q| q * q <= candidate)
            .all(|&q| candidate % q != 0)
        {
            return candidate;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn im(rows: &[&[i64]]) -> Matrix<i64> {
        Matrix::from_rows(rows.iter().map(|r| r.to_vec()).collect())
    }

    #[test]
    fn rank_examples() {
        assert_eq!(integer_rank(&Matrix::zeros(3, 4)), 0);
        assert_eq!(integer_rank(&Matrix::identity(5)), 5);
        assert_eq!(integer_rank(&im(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(integer_rank(&Matrix::zeros(0, 3)), 0);
        assert_eq!(integer_rank(&im(&[&[0, 0, 1], &[0, 2, 0], &[3, 0, 0], &[1, 1, 1]])), 3);
        let q = |a: i64, b: i64| Rational::new(a.into(), b.into());
        let rat = Matrix::from_rows(vec![vec![q(1, 2), q(1, 3)], vec![q(3, 2), q(1, 1)]]);
        assert_eq!(exact_rank(&rat), 1);
        assert_eq!(exact_rank(&Matrix::<Rational>::identity(5)), 5);
    }

    #[test]
    fn modular_rank_can_drop() {
        let m = im(&[&[1, 1], &[1, 8]]);
        assert_eq!(integer_rank(&m), 2);
        assert_eq!(rank_mod_p(&m, 7), 1);
        assert_eq!(rank_mod_p(&m, 11), 2);
    }

    #[test]
    fn large_primes_are_prime() {
        for seed in 0..5 {
            let p = random_large_prime(seed);
            assert!(p > 1 << 30 && p < 1 << 31);
            assert!((2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d)));
        }
        assert_eq!(random_large_prime(7), random_large_prime(7));
    }

    fn arb_matrix() -> impl Strategy<Value = Matrix<i64>> {
        (1usize..7, 1usize..7).prop_flat_map(|(r, c)| {
            prop::collection::vec(prop::collection::vec(-3i64..=3, c), r).prop_map(Matrix::from_rows)
        })
    }

    proptest! {
        #[test]
        fn modular_rank_never_exceeds_exact(m in arb_matrix()) {
            let exact = integer_rank(&m);
            prop_assert!(rank_mod_p(&m, 3) <= exact);
            prop_assert_eq!(rank_mod_p(&m, random_large_prime(1)), exact);
        }

        #[test]
        fn rank_of_product_structure(m in arb_matrix()) {
            // stacking a matrix on itself does not change its rank
            let doubled: Vec<Vec<i64>> = (0..2 * m.rows())
                .map(|r| (0..m.cols()).map(|c| *m.get(r % m.rows(), c)).collect())
                .collect();
            prop_assert_eq!(integer_rank(&Matrix::from_rows(doubled)), integer_rank(&m));
            // transpose has the same rank
            let t: Vec<Vec<i64>> = (0..m.cols()).map(|c| (0..m.rows()).map(|r| *m.get(r, c)).collect()).collect();
            prop_assert_eq!(integer_rank(&Matrix::from_rows(t)), integer_rank(&m));
        }
    }
}
