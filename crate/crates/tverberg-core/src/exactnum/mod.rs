//! Exact scalars: arbitrary-precision rationals and the ring of q-th roots
//! of unity, plus exact determinants over both.

mod cyclotomic;
mod det;
mod realsign;

pub use cyclotomic::{Cyclotomic, CycloError};
pub use det::{det_cyclotomic, det_rational, MatrixError, DET_SIZE_CAP};

use alloc::string::String;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Exact fraction with positive denominator, reduced after every operation.
pub type Rational = num_rational::BigRational;

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for `n/d`. Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Formats a rational as an exact `numerator/denominator` string.
pub fn format_rational(x: &Rational) -> String {
    alloc::format!("{}/{}", x.numer(), x.denom())
}

/// Parses `numerator/denominator` (a bare integer is treated as `n/1`).
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let s = s.trim();
    let (num_str, den_str) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let numer: BigInt = num_str
        .parse()
        .map_err(|_| alloc::format!("invalid numerator `{num_str}`"))?;
    let denom: BigInt = den_str
        .parse()
        .map_err(|_| alloc::format!("invalid denominator `{den_str}`"))?;
    if denom.is_zero() {
        return Err(String::from("zero denominator"));
    }
    Ok(Rational::new(numer, denom))
}

/// Sign of a rational as -1, 0 or +1.
pub fn rational_sign(x: &Rational) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

/// Exact n-th row sum helper: least common multiple of the denominators of
/// a slice of rationals. Always positive; 1 for an empty slice.
pub(crate) fn denominator_lcm<'a>(values: impl Iterator<Item = &'a Rational>) -> BigInt {
    let mut l = BigInt::one();
    for v in values {
        l = num_integer::lcm(l, v.denom().clone());
    }
    l.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_string_round_trip() {
        let x = ratio(-22, 8);
        assert_eq!(format_rational(&x), "-11/4");
        assert_eq!(parse_rational("-11/4").unwrap(), x);
        assert_eq!(parse_rational("7").unwrap(), rat(7));
        assert_eq!(parse_rational(" 3 / 9 ").unwrap(), ratio(1, 3));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("a/2").is_err());
    }

    #[test]
    fn rational_invariants_kept_by_num_rational() {
        let x = Rational::new(BigInt::from(4), BigInt::from(-6));
        assert_eq!(x, ratio(-2, 3));
        assert!(x.denom().is_positive());
        assert_eq!(num_integer::gcd(x.numer().abs(), x.denom().clone()), BigInt::one());
    }

    #[test]
    fn sign_helper() {
        assert_eq!(rational_sign(&rat(0)), 0);
        assert_eq!(rational_sign(&ratio(-1, 7)), -1);
        assert_eq!(rational_sign(&ratio(5, 2)), 1);
    }
}
