//! Exact arithmetic: rationals, dense rational matrices, univariate
//! polynomials and truncated power series in `(t, q, u)`.

mod matrix;
mod poly;
mod series;

pub use matrix::QMatrix;
pub use poly::UniPoly;
pub use series::{Caps, SeriesVar, TrigradedSeries};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Arbitrary precision rational, always kept in lowest terms with a positive
/// denominator. Displays as `p/q`, or `p` when the denominator is one.
pub type Rational = num_rational::BigRational;

/// `p/q` as a [`Rational`]. Panics if `q == 0`.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// The integer `n` as a [`Rational`].
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"p/q"` or `"p"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let r: Rational = s
        .parse()
        .map_err(|_| Error::InvalidInput(format!("not a rational number: {s:?}")))?;
    Ok(r)
}

/// Canonical decimal form `p/q` (denominator omitted when 1).
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// `binom(n, k)` as an exact integer; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Number of `k`-multisubsets of an `m`-set, `binom(m + k - 1, k)`.
pub fn multichoose(m: u64, k: u64) -> BigInt {
    if k == 0 {
        return BigInt::one();
    }
    if m == 0 {
        return BigInt::zero();
    }
    binomial(m + k - 1, k)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_canonical_form() {
        assert_eq!(format_rational(&rat(2, 4)), "1/2");
        assert_eq!(format_rational(&rat(6, -3)), "-2");
        assert_eq!(format_rational(&rat(0, 5)), "0");
        assert_eq!(rat(0, 7).denom(), &BigInt::one());
        assert_eq!(parse_rational("-3/6").unwrap(), rat(-1, 2));
        assert_eq!(parse_rational("5").unwrap(), int(5));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(2, 5), BigInt::zero());
        assert_eq!(multichoose(2, 2), BigInt::from(3));
        assert_eq!(multichoose(0, 0), BigInt::one());
        assert_eq!(multichoose(0, 3), BigInt::zero());
        assert_eq!(multichoose(3, 6), BigInt::from(28));
    }
}
