//! Brute-force homology oracles.
//!
//! Both oracles build an explicit chain complex with a monomial basis and
//! compute its homology from ranks of the boundary maps:
//!
//! * [`koszul_tor_dims`]: the Koszul complex `A_n ⊗ Λ(K^r)`, whose homology
//!   is `Tor^S(A_n, K)` over `S = K[x_1..x_r]`.
//! * [`bar_tor_dims`]: the normalized bar complex on the augmentation ideal
//!   of A_n, whose homology is `Tor^{A_n}(K, K)`.
//!
//! Every basis cell carries a multidegree, which the differentials
//! preserve. Multidegrees are encoded as integers through the weight
//! bijection, so each complex splits into independent blocks keyed by that
//! integer together with the block's internal (total) degree.

mod bar;
mod koszul;
mod linalg;

use std::collections::{BTreeMap, HashMap};
use std::hash::Hash;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

pub use bar::{bar_tor_dims, BarComplex, EXACT_MAX_DEGREE, EXACT_MAX_LEVEL, MODULAR_CELL_BUDGET};
pub use koszul::{koszul_tor_dims, koszul_tor_dims_with_mode, KoszulCell, KoszulComplex};

use crate::monomial::{monomial_of, Monomial};
use crate::numtheory::prime_count;
pub use linalg::{
    bareiss_rank, exact_rank, integer_rank, random_large_prime, rank_mod_p, Matrix,
};

/// The monomial basis of A_n: one monomial of each weight `1..=n`, in
/// ascending weight.
pub fn basis_a(n: u64) -> Vec<Monomial> {
    let r = prime_count(n);
    (1..=n)
        .map(|m| monomial_of(m, r).expect("weights up to n use only x_1..x_r"))
        .collect()
}

/// How boundary ranks are computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RankMode {
    /// Over ℚ, by fraction-free elimination.
    Exact,
    /// Over GF(p). Ranks can only drop modulo p, so this is a probabilistic
    /// check: agreement with a closed formula is evidence, not proof.
    Modular(u64),
}

impl RankMode {
    pub fn rank(&self, m: &Matrix<i64>) -> usize {
        match *self {
            RankMode::Exact => integer_rank(m),
            RankMode::Modular(p) => rank_mod_p(m, p),
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, RankMode::Exact)
    }
}

/// Dimensions of a bigraded vector space, keyed by
/// `(homological degree q, internal degree j)`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GradedVectorSpaceDims {
    dims: BTreeMap<(usize, u32), usize>,
}

impl GradedVectorSpaceDims {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, q: usize, j: u32, dim: usize) {
        if dim > 0 {
            *self.dims.entry((q, j)).or_insert(0) += dim;
        }
    }

    pub fn get(&self, q: usize, j: u32) -> usize {
        self.dims.get(&(q, j)).copied().unwrap_or(0)
    }

    /// Σ_j dim_{q,j}
    pub fn total(&self, q: usize) -> usize {
        self.dims
            .range((q, 0)..=(q, u32::MAX))
            .map(|(_, &d)| d)
            .sum()
    }

    /// `[total(0), ..., total(q_max)]`
    pub fn totals(&self, q_max: usize) -> Vec<usize> {
        (0..=q_max).map(|q| self.total(q)).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = ((usize, u32), usize)> + '_ {
        self.dims.iter().map(|(&k, &d)| (k, d))
    }
}

impl Serialize for GradedVectorSpaceDims {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry {
            q: usize,
            j: u32,
            dim: usize,
        }
        s.collect_seq(self.iter().map(|((q, j), dim)| Entry { q, j, dim }))
    }
}

/// Multidegree of a block: the weight of the multidegree's monomial, and its
/// total degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BlockKey {
    pub degree: u32,
    pub weight: u128,
}

pub type Blocks<T> = BTreeMap<BlockKey, Vec<T>>;

/// A finite chain complex with a multigraded cell basis.
pub trait MultigradedComplex: Sync {
    type Cell: Clone + Eq + Hash + Send + Sync;

    /// Cells of homological degree `q`, grouped by multidegree.
    fn cells(&self, q: usize) -> Blocks<Self::Cell>;

    /// Boundary of a degree-`q` cell as a combination of degree-`q-1` cells.
    fn boundary(&self, q: usize, cell: &Self::Cell) -> Vec<(Self::Cell, i64)>;
}

/// Matrix of the boundary `C_{q,key} -> C_{q-1,key}`, one row per source cell.
fn boundary_block<C: MultigradedComplex>(
    complex: &C,
    q: usize,
    sources: &[C::Cell],
    targets: &[C::Cell],
) -> Matrix<i64> {
    let index: HashMap<&C::Cell, usize> = targets.iter().enumerate().map(|(i, c)| (c, i)).collect();
    let mut m = Matrix::zeros(sources.len(), targets.len());
    for (row, cell) in sources.iter().enumerate() {
        for (face, coeff) in complex.boundary(q, cell) {
            let col = *index.get(&face).expect("boundary preserves the multidegree");
            let v = *m.get(row, col) + coeff;
            m.set(row, col, v);
        }
    }
    m
}

/// Ranks of the boundary `C_q -> C_{q-1}` per multidegree block.
fn boundary_ranks<C: MultigradedComplex>(
    complex: &C,
    q: usize,
    sources: &Blocks<C::Cell>,
    targets: &Blocks<C::Cell>,
    mode: RankMode,
) -> BTreeMap<BlockKey, usize> {
    type Pair<'a, T> = (BlockKey, &'a Vec<T>, &'a Vec<T>);
    let blocks: Vec<Pair<C::Cell>> = sources
        .iter()
        .filter_map(|(&key, src)| targets.get(&key).map(|tgt| (key, src, tgt)))
        .collect();
    blocks
        .into_par_iter()
        .map(|(key, src, tgt)| (key, mode.rank(&boundary_block(complex, q, src, tgt))))
        .collect()
}

/// Homology dimensions in degrees `0..=q_max`, split by internal degree.
pub fn homology_dims<C: MultigradedComplex>(
    complex: &C,
    q_max: usize,
    mode: RankMode,
) -> GradedVectorSpaceDims {
    let cells: Vec<Blocks<C::Cell>> = (0..=q_max + 1).map(|q| complex.cells(q)).collect();
    // ranks[q] = ranks of d_q : C_q -> C_{q-1}; d_0 = 0
    let mut ranks: Vec<BTreeMap<BlockKey, usize>> = vec![BTreeMap::new()];
    for q in 1..=q_max + 1 {
        ranks.push(boundary_ranks(complex, q, &cells[q], &cells[q - 1], mode));
    }
    let mut out = GradedVectorSpaceDims::new();
    for q in 0..=q_max {
        for (&key, block) in &cells[q] {
            let into = ranks[q].get(&key).copied().unwrap_or(0);
            let from = ranks[q + 1].get(&key).copied().unwrap_or(0);
            out.add(q, key.degree, block.len() - into - from);
        }
    }
    out
}

/// Checks `d_{q-1} ∘ d_q = 0` on every cell of degree `q`.
pub fn boundary_squares_to_zero<C: MultigradedComplex>(complex: &C, q: usize) -> bool {
    if q < 2 {
        return true;
    }
    complex.cells(q).values().flatten().all(|cell| {
        let mut acc: HashMap<C::Cell, i64> = HashMap::new();
        for (face, c) in complex.boundary(q, cell) {
            for (face2, c2) in complex.boundary(q - 1, &face) {
                *acc.entry(face2).or_insert(0) += c * c2;
            }
        }
        acc.values().all(|&v| v == 0)
    })
}
