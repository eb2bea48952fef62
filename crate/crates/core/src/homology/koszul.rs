use crate::error::{Error, Result};
use crate::numtheory::{lambda, primes_up_to};

use super::{homology_dims, BlockKey, Blocks, GradedVectorSpaceDims, MultigradedComplex, RankMode};

/// `A_n ⊗ Λ(K^r)` with the Koszul differential on `x_1..x_r`.
///
/// A cell is a basis monomial of A_n, stored as its weight `m <= n`, paired
/// with an increasing list of variable indices (1-based).
#[derive(Debug, Clone)]
pub struct KoszulComplex {
    n: u64,
    primes: Vec<u64>,
}

pub type KoszulCell = (u64, Vec<usize>);

impl KoszulComplex {
    pub fn new(n: u64) -> Result<Self> {
        if n < 2 {
            return Err(Error::LevelTooSmall(n));
        }
        Ok(KoszulComplex { n, primes: primes_up_to(n) })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn r(&self) -> usize {
        self.primes.len()
    }

    fn subsets(&self, q: usize) -> Vec<Vec<usize>> {
        fn rec(start: usize, r: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if left == 0 {
                out.push(cur.clone());
                return;
            }
            for i in start..=r {
                if r + 1 - i < left {
                    break;
                }
                cur.push(i);
                rec(i + 1, r, left - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(1, self.r(), q, &mut Vec::with_capacity(q), &mut out);
        out
    }
}

impl MultigradedComplex for KoszulComplex {
    type Cell = KoszulCell;

    fn cells(&self, q: usize) -> Blocks<KoszulCell> {
        let mut out = Blocks::new();
        if q > self.r() {
            return out;
        }
        for subset in self.subsets(q) {
            let ext: u128 = subset.iter().map(|&i| self.primes[i - 1] as u128).product();
            for m in 1..=self.n {
                let key = BlockKey {
                    degree: lambda(m) + q as u32,
                    weight: ext * m as u128,
                };
                out.entry(key).or_default().push((m, subset.clone()));
            }
        }
        out
    }

    fn boundary(&self, _q: usize, (m, subset): &KoszulCell) -> Vec<(KoszulCell, i64)> {
        let mut out = Vec::with_capacity(subset.len());
        for (k, &i) in subset.iter().enumerate() {
            let prod = m * self.primes[i - 1];
            if prod > self.n {
                continue;
            }
            let mut rest = subset.clone();
            rest.remove(k);
            out.push(((prod, rest), if k % 2 == 0 { 1 } else { -1 }));
        }
        out
    }
}

/// `dim Tor^S_{q,j}(S/I_n, K)` for `q <= q_max`, with exact ranks.
pub fn koszul_tor_dims(n: u64, q_max: usize) -> Result<GradedVectorSpaceDims> {
    koszul_tor_dims_with_mode(n, q_max, RankMode::Exact)
}

pub fn koszul_tor_dims_with_mode(n: u64, q_max: usize, mode: RankMode) -> Result<GradedVectorSpaceDims> {
    let complex = KoszulComplex::new(n)?;
    if q_max > complex.r() {
        return Err(Error::InvalidArgument(format!(
            "q_max = {q_max} exceeds the number of variables {}",
            complex.r()
        )));
    }
    Ok(homology_dims(&complex, q_max, mode))
}
