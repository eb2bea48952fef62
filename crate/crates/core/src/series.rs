//! Hilbert series of A_n, Poincaré series of I_n from the Eliahou–Kervaire
//! resolution, and the Golod Poincaré–Betti series of K over A_n.

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::Result;
use crate::ideal::{min_gens, GenTable};
use crate::numtheory::{lambda, lambda_tilde, prime_count, primes_up_to};
use crate::{IntPoly, IntRatFn};

fn int(v: usize) -> BigInt {
    BigInt::from(v)
}

fn one_plus_t() -> IntPoly {
    IntPoly::from_t_coeffs([BigInt::one(), BigInt::one()])
}

fn one_plus_tu() -> IntPoly {
    IntPoly::from_terms([((0, 0), BigInt::one()), ((1, 1), BigInt::one())])
}

/// Bigraded Hilbert series: `t` counts λ (total degree), `u` counts λ̃.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertSeries {
    pub n: u64,
    pub poly: IntPoly,
}

impl HilbertSeries {
    /// A_n(t, 1) = Σ d_i t^i
    pub fn by_degree(&self) -> IntPoly {
        self.poly.specialize_u(&BigInt::one())
    }

    /// A_n(1, u) = Σ e_j u^j
    pub fn by_weight_degree(&self) -> IntPoly {
        self.poly.specialize_t(&BigInt::one())
    }

    /// A_n(1, 1), which equals dim_K A_n.
    pub fn total(&self) -> BigInt {
        self.poly.eval(&BigInt::one(), &BigInt::one())
    }
}

/// Adds `t^{λ(m)} u^{λ̃(m)}` for each `m` in `1..=n`.
pub fn hilbert_bigraded(n: u64) -> HilbertSeries {
    let mut poly = IntPoly::zero();
    for m in 1..=n {
        poly.add_term((lambda(m), lambda_tilde(m) as u32), BigInt::one());
    }
    HilbertSeries { n, poly }
}

/// P(Tor^S(I_n, K), t) = Σ_{i=1}^r C_{n,1+r-i} (1+t)^{i-1}.
pub fn ek_poincare_ideal(n: u64) -> Result<IntPoly> {
    Ok(ek_from_table(&min_gens(n)?))
}

fn ek_from_table(table: &GenTable) -> IntPoly {
    let r = table.r();
    let base = one_plus_t();
    let mut acc = IntPoly::zero();
    let mut power = IntPoly::one();
    for i in 1..=r {
        acc = &acc + &power.scale(&int(table.count(1 + r - i)));
        power = &power * &base;
    }
    acc
}

/// Graded form: Σ_i (1+tu)^{i-1} Σ_d C_{n,1+r-i,d} u^d.
pub fn ek_poincare_ideal_graded(n: u64) -> Result<IntPoly> {
    Ok(ek_graded_from_table(&min_gens(n)?))
}

fn ek_graded_from_table(table: &GenTable) -> IntPoly {
    let r = table.r();
    let base = one_plus_tu();
    let mut acc = IntPoly::zero();
    let mut power = IntPoly::one();
    for i in 1..=r {
        let v = 1 + r - i;
        let gens_by_degree = IntPoly::from_terms(
            table
                .graded_row(v)
                .iter()
                .enumerate()
                .map(|(k, &c)| ((0, k as u32 + 2), int(c))),
        );
        acc = &acc + &(&power * &gens_by_degree);
        power = &power * &base;
    }
    acc
}

/// β_q(I_n) = Σ_i C_{n,1+r-i} binom(i-1, q), for q = 0..r-1.
pub fn betti_numbers_ideal(n: u64) -> Result<Vec<BigInt>> {
    let table = min_gens(n)?;
    let r = table.r();
    Ok((0..r)
        .map(|q| {
            (1..=r)
                .map(|i| int(table.count(1 + r - i)) * binomial(int(i - 1), int(q)))
                .sum()
        })
        .collect())
}

/// (1+t)^r / (1 - t² P_I(t)), canonicalized.
pub fn golod_poincare(n: u64) -> Result<IntRatFn> {
    let table = min_gens(n)?;
    let ideal = ek_from_table(&table);
    let den = &IntPoly::one() - &ideal.shift(2, 0);
    IntRatFn::canonicalize(one_plus_t().pow(table.r() as u32), den)
}

/// (1+ut)^r / (1 - t² P_I(t, u)), canonicalized.
pub fn golod_poincare_graded(n: u64) -> Result<IntRatFn> {
    let table = min_gens(n)?;
    let ideal = ek_graded_from_table(&table);
    let den = &IntPoly::one() - &ideal.shift(2, 0);
    IntRatFn::canonicalize(one_plus_tu().pow(table.r() as u32), den)
}

/// Outcome of each clause of the conjectured shape
/// `P(t) = -(1+t)^{ℓ₁} / q_n(t)` with `q_n = Σ_{i<=ℓ₂} h_i t^i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjectureClauses {
    pub numerator_is_power: bool,
    pub q_at_minus_one_nonzero: bool,
    pub ell1_matches: bool,
    pub ell2_is_ell1_plus_one: bool,
    pub h0_is_minus_one: bool,
    pub h1_matches: bool,
    pub top_matches: bool,
}

impl ConjectureClauses {
    pub fn all(&self) -> bool {
        self.failures().is_empty()
    }

    pub fn failures(&self) -> Vec<&'static str> {
        [
            (self.numerator_is_power, "numerator"),
            (self.q_at_minus_one_nonzero, "q(-1)"),
            (self.ell1_matches, "l1"),
            (self.ell2_is_ell1_plus_one, "l2"),
            (self.h0_is_minus_one, "h0"),
            (self.h1_matches, "h1"),
            (self.top_matches, "h_top"),
        ]
        .into_iter()
        .filter(|(ok, _)| !ok)
        .map(|(_, name)| name)
        .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjectureReport {
    pub n: u64,
    /// Multiplicity of (1+t) in the canonical numerator.
    pub ell1: u32,
    /// Number of odd primes p with p² <= n.
    pub ell1_predicted: u32,
    /// Degree of q_n.
    pub ell2: u32,
    /// Coefficients h_0..h_{ℓ₂} of q_n = -(canonical denominator).
    #[serde(serialize_with = "serialize_ints")]
    pub h: Vec<BigInt>,
    #[serde(serialize_with = "serialize_int")]
    pub q_at_minus_one: BigInt,
    pub clauses: ConjectureClauses,
}

fn serialize_ints<S: serde::Serializer>(v: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|x| x.to_string()))
}

fn serialize_int<S: serde::Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

pub fn check_conjecture(n: u64) -> Result<ConjectureReport> {
    let f = golod_poincare(n)?;
    let ell1 = f.numerator_multiplicity(0);
    let numerator_is_power = f.numerator() == &one_plus_t().pow(ell1);
    let h: Vec<BigInt> = f.denominator().t_coeffs().into_iter().map(|c| -c).collect();
    let ell2 = h.len() as u32 - 1;
    let q_at_minus_one = h
        .iter()
        .enumerate()
        .map(|(i, c)| if i % 2 == 0 { c.clone() } else { -c.clone() })
        .sum::<BigInt>();
    let ell1_predicted = primes_up_to(n)
        .into_iter()
        .filter(|&p| p > 2 && p * p <= n)
        .count() as u32;
    let r = prime_count(n) as i64;
    let h_at = |i: u32| h.get(i as usize).cloned().unwrap_or_else(BigInt::zero);
    let clauses = ConjectureClauses {
        numerator_is_power,
        q_at_minus_one_nonzero: !q_at_minus_one.is_zero(),
        ell1_matches: ell1 == ell1_predicted,
        ell2_is_ell1_plus_one: ell2 == ell1 + 1,
        h0_is_minus_one: h_at(0) == -BigInt::one(),
        h1_matches: h_at(1) == BigInt::from(r - ell1 as i64),
        top_matches: h_at(ell2) == BigInt::from(n.div_ceil(2)),
    };
    Ok(ConjectureReport {
        n,
        ell1,
        ell1_predicted,
        ell2,
        h,
        q_at_minus_one,
        clauses,
    })
}
