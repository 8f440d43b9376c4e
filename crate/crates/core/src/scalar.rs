//! Exact rational scalars and their textual `p/q` form.
//!
//! Every planar coordinate and every exact bound in this crate is an
//! [`ExactScalar`]: an arbitrary-precision rational kept in canonical reduced
//! form with a positive denominator. No planar computation ever rounds.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

/// Arbitrary-precision rational number. Canonical reduced form with a
/// positive denominator is maintained by `num_rational`.
pub type ExactScalar = BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseRatioError {
    #[error("empty rational literal")]
    Empty,
    #[error("invalid integer `{0}` in rational literal")]
    BadInt(String),
    #[error("zero denominator in rational literal")]
    ZeroDenominator,
}

/// Parses `"p"`, `"p/q"`, or a plain decimal like `"5.6767"` into an exact
/// rational. Decimals are read exactly (digit by digit), never through `f64`.
pub fn parse_ratio(s: &str) -> Result<ExactScalar, ParseRatioError> {
    let s = s.trim();
    if s.is_empty() {
        return Err(ParseRatioError::Empty);
    }
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num
            .trim()
            .parse()
            .map_err(|_| ParseRatioError::BadInt(num.trim().to_owned()))?;
        let d: BigInt = den
            .trim()
            .parse()
            .map_err(|_| ParseRatioError::BadInt(den.trim().to_owned()))?;
        if d.is_zero() {
            return Err(ParseRatioError::ZeroDenominator);
        }
        return Ok(ExactScalar::new(n, d));
    }
    if let Some((whole, frac)) = s.split_once('.') {
        let sign = if whole.trim_start().starts_with('-') { -1 } else { 1 };
        let w: BigInt = if whole == "-" || whole.is_empty() {
            BigInt::zero()
        } else {
            whole
                .parse()
                .map_err(|_| ParseRatioError::BadInt(whole.to_owned()))?
        };
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(ParseRatioError::BadInt(frac.to_owned()));
        }
        let f: BigInt = frac
            .parse()
            .map_err(|_| ParseRatioError::BadInt(frac.to_owned()))?;
        let scale = BigInt::from(10u32).pow(frac.len() as u32);
        let num = w.magnitude().clone() * scale.magnitude() + f.magnitude();
        return Ok(ExactScalar::new(BigInt::from(sign) * BigInt::from(num), scale));
    }
    let n: BigInt = s.parse().map_err(|_| ParseRatioError::BadInt(s.to_owned()))?;
    Ok(ExactScalar::from_integer(n))
}

/// Renders a rational as `"p"` when integral, `"p/q"` otherwise.
pub fn format_ratio(x: &ExactScalar) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Lossy conversion for display and plotting only; never fed back into
/// exact computation.
pub fn ratio_to_f64(x: &ExactScalar) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// Absolute difference |a − b| as an exact rational.
pub fn abs_diff(a: &ExactScalar, b: &ExactScalar) -> ExactScalar {
    (a - b).abs()
}
