use crate::error::Error;
use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::Rng;

/// Exact scalar: an arbitrary-precision rational, always kept in lowest
/// terms with positive denominator by the underlying representation.
pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

/// `n/d`; panics when `d == 0`, so only for literals in code and tests.
pub fn rat(n: i64, d: i64) -> Scalar {
    assert!(d != 0, "zero denominator");
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses an integer or `p/q` literal. Rejects empty input, malformed
/// numbers and zero denominators.
pub fn parse_scalar(text: &str) -> Result<Scalar, Error> {
    let s = text.trim();
    if s.is_empty() {
        return Err(Error::parse("empty scalar"));
    }
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let n: BigInt = num
        .parse()
        .map_err(|_| Error::parse(format!("invalid numerator in scalar `{s}`")))?;
    let d: BigInt = match den {
        Some(d) => d
            .parse()
            .map_err(|_| Error::parse(format!("invalid denominator in scalar `{s}`")))?,
        None => BigInt::from(1),
    };
    if d.is_zero() {
        return Err(Error::parse(format!("zero denominator in scalar `{s}`")));
    }
    Ok(BigRational::new(n, d))
}

/// Canonical text form: plain integer when the denominator is 1,
/// otherwise `p/q` (sign on the numerator).
pub fn format_scalar(x: &Scalar) -> String {
    x.to_string()
}

pub fn to_f64(x: &Scalar) -> f64 {
    x.to_f64().expect("rational out of f64 range")
}

/// Uniform-ish random rational with numerator in `[-bound, bound]` and
/// denominator in `[1, bound]`.
pub fn random_rational<R: Rng>(rng: &mut R, bound: i64) -> Scalar {
    let n = rng.random_range(-bound..=bound);
    let d = rng.random_range(1..=bound);
    rat(n, d)
}

/// Exact square root when `x` is a perfect square of a rational
/// (requires `x >= 0`); `None` otherwise.
pub fn sqrt_exact(x: &Scalar) -> Option<Scalar> {
    if x.is_negative() {
        return None;
    }
    if x.is_zero() {
        return Some(Scalar::zero());
    }
    let sqrt_part = |n: &BigInt| -> Option<BigInt> {
        let r = n.sqrt();
        (&r * &r == *n).then_some(r)
    };
    // Lowest terms, so numerator and denominator must both be squares.
    let (num, den) = (x.numer(), x.denom());
    debug_assert_eq!(num.sign(), Sign::Plus);
    let rn = sqrt_part(num)?;
    let rd = sqrt_part(den)?;
    Some(BigRational::new(rn, rd))
}
