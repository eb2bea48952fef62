//! Canonical text form of polynomials and rational functions.
//!
//! Terms appear by ascending t-degree, then ascending u-degree, with
//! explicit ` + ` / ` - ` separators, unit coefficients omitted in front of
//! a variable part, and `^` for powers: `1 - 2*t*u - 2*t^2*u^2 - t^2*u^3`.
//! Rational functions print as `(num)/(den)`.

use std::fmt::{self, Display};
use std::str::FromStr;

use num_integer::Integer;
use num_traits::Signed;

use super::poly::BiPoly;
use super::ratfn::RatFn;
use crate::error::Error;
use crate::scalar::Scalar;

impl<C: Scalar + Signed + Display> Display for BiPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, ((i, j), c)) in self.terms().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            match (idx, c.is_negative()) {
                (0, false) => {}
                (0, true) => f.write_str("-")?,
                _ => write!(f, " {sign} ")?,
            }
            let abs = c.abs();
            let mut parts: Vec<String> = Vec::new();
            if !abs.is_one() || (i == 0 && j == 0) {
                parts.push(abs.to_string());
            }
            match i {
                0 => {}
                1 => parts.push("t".into()),
                _ => parts.push(format!("t^{i}")),
            }
            match j {
                0 => {}
                1 => parts.push("u".into()),
                _ => parts.push(format!("u^{j}")),
            }
            f.write_str(&parts.join("*"))?;
        }
        Ok(())
    }
}

impl<C: Scalar + Integer + Signed + Display> Display for RatFn<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/({})", self.numerator(), self.denominator())
    }
}

/// Canonical text of a polynomial.
pub fn format_poly<C: Scalar + Signed + Display>(p: &BiPoly<C>) -> String {
    p.to_string()
}

/// Canonical text of a rational function.
pub fn format_ratfn<C: Scalar + Integer + Signed + Display>(f: &RatFn<C>) -> String {
    f.to_string()
}

fn parse_err(s: &str, what: &str) -> Error {
    Error::Parse(format!("{what} in {s:?}"))
}

fn parse_term<C: Scalar + FromStr>(src: &str, body: &str) -> Result<((u32, u32), C), Error> {
    let mut coeff = C::one();
    let (mut ti, mut uj) = (0u32, 0u32);
    for factor in body.split('*') {
        let factor = factor.trim();
        let (base, exp) = match factor.split_once('^') {
            Some((b, e)) => {
                let e: u32 = e.trim().parse().map_err(|_| parse_err(src, "bad exponent"))?;
                (b.trim(), e)
            }
            None => (factor, 1),
        };
        match base {
            "t" => ti += exp,
            "u" => uj += exp,
            "" => return Err(parse_err(src, "empty factor")),
            digits if digits.bytes().all(|b| b.is_ascii_digit()) => {
                if exp != 1 {
                    return Err(parse_err(src, "power of a constant"));
                }
                let c: C = digits.parse().map_err(|_| parse_err(src, "bad coefficient"))?;
                coeff = coeff * c;
            }
            _ => return Err(parse_err(src, "unknown symbol")),
        }
    }
    Ok(((ti, uj), coeff))
}

impl<C: Scalar + FromStr> FromStr for BiPoly<C> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let src = s.trim();
        if src.is_empty() {
            return Err(parse_err(s, "empty input"));
        }
        let mut p = BiPoly::zero();
        let mut negative = false;
        let mut rest = src;
        if let Some(r) = rest.strip_prefix('-') {
            negative = true;
            rest = r;
        }
        loop {
            let cut = rest.find([' ']).and_then(|i| {
                let after = rest[i..].trim_start();
                (after.starts_with('+') || after.starts_with('-')).then_some(i)
            });
            let (body, tail) = match cut {
                Some(i) => rest.split_at(i),
                None => (rest, ""),
            };
            let (key, c) = parse_term::<C>(s, body)?;
            p.add_term(key, if negative { -c } else { c });
            let tail = tail.trim_start();
            if tail.is_empty() {
                break;
            }
            negative = tail.starts_with('-');
            rest = tail[1..].trim_start();
        }
        Ok(p)
    }
}

impl<C: Scalar + Integer + Signed + FromStr> FromStr for RatFn<C> {
    type Err = Error;

    /// Parses `(num)/(den)` and canonicalizes it.
    fn from_str(s: &str) -> Result<Self, Error> {
        let src = s.trim();
        let inner = src
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| parse_err(s, "expected (num)/(den)"))?;
        let (num, den) = inner
            .split_once(")/(")
            .ok_or_else(|| parse_err(s, "expected )/("))?;
        RatFn::canonicalize(num.parse()?, den.parse()?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    type P = BiPoly<BigInt>;

    fn p(terms: &[((u32, u32), i64)]) -> P {
        P::from_terms(terms.iter().map(|&(k, c)| (k, BigInt::from(c))))
    }

    #[test]
    fn formatting_examples() {
        assert_eq!(p(&[((0, 0), 1), ((1, 0), -3)]).to_string(), "1 - 3*t");
        assert_eq!(p(&[((0, 0), 6), ((1, 0), 8), ((2, 0), 3)]).to_string(), "6 + 8*t + 3*t^2");
        assert_eq!(P::zero().to_string(), "0");
        assert_eq!(p(&[((1, 1), -1), ((2, 3), 2)]).to_string(), "-t*u + 2*t^2*u^3");
        assert_eq!(p(&[((0, 2), 5), ((0, 3), 1)]).to_string(), "5*u^2 + u^3");
        let f = RatFn::canonicalize(
            p(&[((0, 0), 1), ((1, 0), 1)]),
            p(&[((0, 0), 1), ((1, 0), -3), ((2, 0), -5)]),
        )
        .unwrap();
        assert_eq!(format_ratfn(&f), "(1 + t)/(1 - 3*t - 5*t^2)");
    }

    #[test]
    fn parsing() {
        let q: P = "1 - 2*t*u - 2*t^2*u^2 - t^2*u^3".parse().unwrap();
        assert_eq!(q, p(&[((0, 0), 1), ((1, 1), -2), ((2, 2), -2), ((2, 3), -1)]));
        assert_eq!("-t".parse::<P>().unwrap(), p(&[((1, 0), -1)]));
        assert_eq!("0".parse::<P>().unwrap(), P::zero());
        assert!("1 + x".parse::<P>().is_err());
        assert!("".parse::<P>().is_err());
        let f: RatFn<BigInt> = "(1 + t)/(1 - 3*t - 5*t^2)".parse().unwrap();
        assert_eq!(f.to_string(), "(1 + t)/(1 - 3*t - 5*t^2)");
        assert!("1/(1 - t)".parse::<RatFn<BigInt>>().is_err());
    }

    fn arb_poly() -> impl Strategy<Value = P> {
        prop::collection::vec(((0u32..5, 0u32..5), -20i64..=20), 0..8)
            .prop_map(|ts| P::from_terms(ts.into_iter().map(|(k, c)| (k, BigInt::from(c)))))
    }

    proptest! {
        #[test]
        fn text_round_trip(q in arb_poly()) {
            let text = q.to_string();
            prop_assert_eq!(text.parse::<P>().unwrap(), q);
        }

        #[test]
        fn ratfn_round_trip(num in arb_poly(), tail in arb_poly()) {
            let den = &P::one() + &tail.shift(1, 0);
            let f = RatFn::canonicalize(num, den).unwrap();
            prop_assert_eq!(f.to_string().parse::<RatFn<BigInt>>().unwrap(), f);
        }
    }
}
