use crate::error::{Error, Result};
use crate::numtheory::lambda;

use super::{homology_dims, BlockKey, Blocks, GradedVectorSpaceDims, MultigradedComplex, RankMode};

/// Largest `n` and `q_max` accepted in exact mode.
pub const EXACT_MAX_LEVEL: u64 = 8;
pub const EXACT_MAX_DEGREE: usize = 4;

/// Cap on the number of cells in degree `q_max + 1` in modular mode.
pub const MODULAR_CELL_BUDGET: u64 = 2_000_000;

/// Normalized bar complex of A_n with coefficients in K.
///
/// A degree-`q` cell `[w_1|...|w_q]` is a tensor of basis monomials of the
/// augmentation ideal, each stored as its weight in `2..=n`. The differential
/// is `Σ_{i=1}^{q-1} (-1)^i [..|w_i w_{i+1}|..]`, where a product of weight
/// above `n` vanishes in A_n.
#[derive(Debug, Clone)]
pub struct BarComplex {
    n: u64,
    lambdas: Vec<u32>,
}

impl BarComplex {
    pub fn new(n: u64) -> Result<Self> {
        if n < 2 {
            return Err(Error::LevelTooSmall(n));
        }
        Ok(BarComplex {
            n,
            lambdas: (0..=n).map(|m| if m == 0 { 0 } else { lambda(m) }).collect(),
        })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    fn key(&self, cell: &[u64]) -> BlockKey {
        BlockKey {
            degree: cell.iter().map(|&w| self.lambdas[w as usize]).sum(),
            weight: cell.iter().map(|&w| w as u128).product(),
        }
    }
}

impl MultigradedComplex for BarComplex {
    type Cell = Vec<u64>;

    fn cells(&self, q: usize) -> Blocks<Vec<u64>> {
        let mut out = Blocks::new();
        let mut cell = vec![2u64; q];
        loop {
            out.entry(self.key(&cell)).or_default().push(cell.clone());
            // odometer over 2..=n in each slot
            let Some(pos) = (0..q).rev().find(|&i| cell[i] < self.n) else {
                break;
            };
            cell[pos] += 1;
            for slot in &mut cell[pos + 1..] {
                *slot = 2;
            }
        }
        out
    }

    fn boundary(&self, _q: usize, cell: &Vec<u64>) -> Vec<(Vec<u64>, i64)> {
        let mut out = Vec::new();
        for i in 0..cell.len().saturating_sub(1) {
            let prod = cell[i] * cell[i + 1];
            if prod > self.n {
                continue;
            }
            let mut face = Vec::with_capacity(cell.len() - 1);
            face.extend_from_slice(&cell[..i]);
            face.push(prod);
            face.extend_from_slice(&cell[i + 2..]);
            // the i-th merge (1-based) carries sign (-1)^i
            out.push((face, if i % 2 == 0 { -1 } else { 1 }));
        }
        out
    }
}

/// `dim Tor^{A_n}_{q,j}(K, K)` for `q <= q_max`.
///
/// Exact mode is limited to `n <= 8`, `q_max <= 4`. Modular mode is limited
/// by [`MODULAR_CELL_BUDGET`] and its ranks are a lower bound for the exact
/// ones.
pub fn bar_tor_dims(n: u64, q_max: usize, mode: RankMode) -> Result<GradedVectorSpaceDims> {
    let complex = BarComplex::new(n)?;
    match mode {
        RankMode::Exact if n > EXACT_MAX_LEVEL || q_max > EXACT_MAX_DEGREE => {
            return Err(Error::BudgetExceeded(format!(
                "exact bar complex needs n <= {EXACT_MAX_LEVEL} and q_max <= {EXACT_MAX_DEGREE}, got n = {n}, q_max = {q_max}"
            )));
        }
        RankMode::Modular(_) => {
            let top = u32::try_from(q_max + 1)
                .ok()
                .and_then(|e| (n - 1).checked_pow(e))
                .filter(|&c| c <= MODULAR_CELL_BUDGET);
            if top.is_none() {
                return Err(Error::BudgetExceeded(format!(
                    "bar complex with n = {n}, q_max = {q_max} exceeds {MODULAR_CELL_BUDGET} cells"
                )));
            }
        }
        _ => {}
    }
    Ok(homology_dims(&complex, q_max, mode))
}
