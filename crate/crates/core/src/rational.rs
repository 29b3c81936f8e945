//! Exact rational scalars and conversion helpers.
//!
//! All identity checks run on [`Rational`] values: arbitrary-precision,
//! always in canonical form (reduced, positive denominator), with exact
//! arithmetic and exact comparison. Floats only appear at the edges, via
//! the conversion helpers here.

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational scalar. `num_rational::Ratio` keeps every
/// value reduced with a positive denominator, so equality is structural.
pub type Rational = num_rational::BigRational;

/// Rational from an integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rational p/q from integers. Panics on q = 0.
pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Parses "p/q" or an integer string. Decimal notation is rejected;
/// exactness must survive I/O.
pub fn parse_rational(s: &str) -> Result<Rational> {
    Rational::from_str(s.trim()).map_err(|_| Error::ParseRational(s.to_string()))
}

/// Parses a float token (for float mode) into the exactly equal rational.
pub fn parse_float_as_rational(s: &str) -> Result<Rational> {
    let x: f64 = s
        .trim()
        .parse()
        .map_err(|_| Error::ParseRational(s.to_string()))?;
    Rational::from_float(x).ok_or_else(|| Error::ParseRational(s.to_string()))
}

/// Canonical "p/q" (or bare integer) string form.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

fn bigint_to_f64_scaled(x: &BigInt) -> (f64, i64) {
    // magnitude as (mantissa in [2^52, 2^53), base-2 exponent)
    let bits = x.bits();
    if bits <= 53 {
        return (x.to_f64().unwrap_or(0.0).abs(), 0);
    }
    let shift = bits - 53;
    let top = (x.magnitude() >> shift).to_f64().unwrap_or(0.0);
    (top, shift as i64)
}

/// Rational to f64, correct to ~1 ulp for any magnitude. The naive
/// numerator/denominator conversion overflows once either side exceeds
/// f64 range, which series coefficients routinely do.
pub fn to_f64(r: &Rational) -> f64 {
    if r.is_zero() {
        return 0.0;
    }
    let (mn, en) = bigint_to_f64_scaled(r.numer());
    let (md, ed) = bigint_to_f64_scaled(r.denom());
    let exp = en - ed;
    let mant = mn / md;
    let sign = if r.numer().is_negative() { -1.0 } else { 1.0 };
    if exp > 2000 {
        return sign * f64::INFINITY;
    }
    if exp < -2000 {
        return 0.0;
    }
    // split the power so no intermediate overflows
    let half = (exp / 2) as i32;
    sign * mant * 2f64.powi(half) * 2f64.powi(exp as i32 - half)
}

/// Natural log of a positive rational, stable for values far outside
/// f64 range.
pub fn ln_f64(r: &Rational) -> f64 {
    debug_assert!(r.is_positive());
    let (mn, en) = bigint_to_f64_scaled(r.numer());
    let (md, ed) = bigint_to_f64_scaled(r.denom());
    (mn.ln() - md.ln()) + (en - ed) as f64 * std::f64::consts::LN_2
}

/// |r| as f64.
pub fn abs_f64(r: &Rational) -> f64 {
    to_f64(r).abs()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn parse_and_format_round_trip() {
        let r = parse_rational("3/2").unwrap();
        assert_eq!(r, ratio(3, 2));
        assert_eq!(format_rational(&r), "3/2");
        assert_eq!(parse_rational("-7").unwrap(), rat(-7));
        assert_eq!(parse_rational("4/6").unwrap(), ratio(2, 3));
    }

    #[test]
    fn parse_rejects_decimals() {
        assert!(parse_rational("1.5").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn float_tokens_convert_exactly() {
        let r = parse_float_as_rational("0.25").unwrap();
        assert_eq!(r, ratio(1, 4));
    }

    #[test]
    fn to_f64_handles_extreme_magnitudes() {
        assert_eq!(to_f64(&ratio(3, 2)), 1.5);
        assert_eq!(to_f64(&rat(0)), 0.0);
        // 1 / 2^200: far below what numer/denom-wise conversion survives
        let tiny = Rational::new(BigInt::one(), BigInt::from(2).pow(200));
        let f = to_f64(&tiny);
        assert!(f > 0.0);
        assert!((f.log2() + 200.0).abs() < 1e-9);
        let huge = Rational::new(BigInt::from(2).pow(300), BigInt::one());
        assert!((to_f64(&huge).log2() - 300.0).abs() < 1e-9);
        assert_eq!(to_f64(&-huge.clone()).signum(), -1.0);
    }

    #[test]
    fn ln_matches_f64_ln_in_range() {
        let r = ratio(22, 7);
        assert!((ln_f64(&r) - (22f64 / 7.0).ln()).abs() < 1e-12);
        let tiny = Rational::new(BigInt::one(), BigInt::from(10).pow(120));
        assert!((ln_f64(&tiny) + 120.0 * 10f64.ln()).abs() < 1e-6);
    }
}
