//! Exact big-integer and big-rational building blocks.
//!
//! Every combinatorial formula in this crate reduces to factorials, binomial
//! coefficients, and products of rational shifted factors. They are computed
//! here once, in exact arithmetic, so that identity tests can demand equality
//! instead of tolerances.

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::{Integer, Rational};

/// `n!` as a big integer.
///
/// Iterative product; `factorial(0) = 1`.
pub fn factorial(n: u64) -> Integer {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= k;
    }
    acc
}

/// Binomial coefficient `C(n, k)` over big integers.
///
/// Out-of-range `k` (negative or above `n`) yields 0, which is the convention
/// the alternating-sum identities rely on at their boundary terms.
pub fn binomial(n: i64, k: i64) -> Integer {
    if k < 0 || k > n || n < 0 {
        return BigInt::zero();
    }
    // Multiply/divide incrementally; each intermediate is itself a binomial,
    // so the division is always exact.
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Rising product `(x)(x+1)...(x+len-1)` over exact rationals.
///
/// Empty products (`len = 0`) are 1. This is the denominator shape shared by
/// the mean-area and cylinder-count coefficients, evaluated exactly for
/// rational (not just integer) `x`.
pub fn rising_product(x: &Rational, len: u32) -> Rational {
    let mut acc = Rational::one();
    for i in 0..len {
        acc *= x + Rational::from_integer(BigInt::from(i));
    }
    acc
}

/// Exact rational from an integer pair, mostly for test fixtures.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses a rational from either `p/q` or decimal notation, exactly.
///
/// Accepted forms: `3`, `-3`, `3/4`, `0.25`, `-1.5`. Decimal strings become
/// exact fractions over a power of ten, so CLI grids like `0:1:0.01` stay
/// drift-free. Scientific notation is rejected.
pub fn parse_rational(text: &str) -> Result<Rational, ParseRationalError> {
    let s = text.trim();
    if s.is_empty() {
        return Err(ParseRationalError::Empty);
    }
    if let Some((num, den)) = s.split_once('/') {
        let num = BigInt::from_str(num.trim()).map_err(|_| bad(s))?;
        let den = BigInt::from_str(den.trim()).map_err(|_| bad(s))?;
        if den.is_zero() {
            return Err(ParseRationalError::ZeroDenominator);
        }
        return Ok(Rational::new(num, den));
    }
    if let Some((int_part, frac_part)) = s.split_once('.') {
        if frac_part.is_empty() || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad(s));
        }
        let (sign, int_digits) = match int_part.strip_prefix('-') {
            Some(rest) => (-1, rest),
            None => (1, int_part.strip_prefix('+').unwrap_or(int_part)),
        };
        if !int_digits.bytes().all(|b| b.is_ascii_digit()) || int_digits.is_empty() {
            return Err(bad(s));
        }
        let digits = format!("{int_digits}{frac_part}");
        let num = BigInt::from_str(&digits).map_err(|_| bad(s))?;
        let den = BigInt::from(10u32).pow(frac_part.len() as u32);
        return Ok(Rational::new(num * sign, den));
    }
    let n = BigInt::from_str(s).map_err(|_| bad(s))?;
    Ok(Rational::from_integer(n))
}

fn bad(s: &str) -> ParseRationalError {
    ParseRationalError::Malformed(s.to_owned())
}

/// Failure modes of [`parse_rational`].
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseRationalError {
    #[error("empty rational literal")]
    Empty,
    #[error("malformed rational literal `{0}`")]
    Malformed(String),
    #[error("zero denominator")]
    ZeroDenominator,
}

/// Renders a rational as `p/q` (or just `p` when the denominator is 1).
pub fn display_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Nearest f64 to an exact rational.
///
/// Used only at output and tolerance boundaries. Handles magnitudes far beyond
/// f64 range by scaling with the bit lengths of numerator and denominator.
pub fn rational_to_f64(r: &Rational) -> f64 {
    let num = r.numer();
    let den = r.denom();
    if num.is_zero() {
        return 0.0;
    }
    // Keep roughly 80 significant bits of each side, then divide in f64.
    let nbits = num.bits() as i64;
    let dbits = den.bits() as i64;
    let shift_n = (nbits - 80).max(0);
    let shift_d = (dbits - 80).max(0);
    let n_scaled = to_f64_lossy(&(num >> shift_n));
    let d_scaled = to_f64_lossy(&(den >> shift_d));
    (n_scaled / d_scaled) * 2f64.powi((shift_n - shift_d) as i32)
}

fn to_f64_lossy(x: &BigInt) -> f64 {
    let mut acc = 0.0f64;
    for digit in x.abs().iter_u64_digits().rev() {
        acc = acc * 1.8446744073709552e19 + digit as f64;
    }
    if x.is_negative() {
        -acc
    } else {
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorial_small_values() {
        assert_eq!(factorial(0), BigInt::from(1));
        assert_eq!(factorial(1), BigInt::from(1));
        assert_eq!(factorial(5), BigInt::from(120));
        assert_eq!(factorial(12), BigInt::from(479_001_600u64));
    }

    #[test]
    fn binomial_matches_pascal() {
        // The recurrence starts at n = 1; at n = 0 it would need the
        // C(-1, -1) = 1 convention, while out-of-range is 0 here.
        assert_eq!(binomial(0, 0), BigInt::one());
        for n in 1..=20i64 {
            for k in 0..=n {
                let pascal = binomial(n - 1, k - 1) + binomial(n - 1, k);
                assert_eq!(binomial(n, k), pascal, "C({n},{k})");
            }
        }
    }

    #[test]
    fn binomial_out_of_range_is_zero() {
        assert_eq!(binomial(5, -1), BigInt::zero());
        assert_eq!(binomial(5, 6), BigInt::zero());
        assert_eq!(binomial(-2, 0), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::one());
    }

    #[test]
    fn rising_product_integer_case() {
        // (3)(4)(5) = 60
        assert_eq!(rising_product(&ratio(3, 1), 3), ratio(60, 1));
        assert_eq!(rising_product(&ratio(7, 2), 0), Rational::one());
        // (1/2)(3/2) = 3/4
        assert_eq!(rising_product(&ratio(1, 2), 2), ratio(3, 4));
    }

    #[test]
    fn parse_rational_forms() {
        assert_eq!(parse_rational("3/4").unwrap(), ratio(3, 4));
        assert_eq!(parse_rational("0.25").unwrap(), ratio(1, 4));
        assert_eq!(parse_rational("-1.5").unwrap(), ratio(-3, 2));
        assert_eq!(parse_rational("7").unwrap(), ratio(7, 1));
        assert_eq!(parse_rational("0.01").unwrap(), ratio(1, 100));
        assert!(parse_rational("1e-2").is_err());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational(".5").is_err());
    }

    #[test]
    fn display_round_trips() {
        for r in [ratio(3, 4), ratio(-7, 2), ratio(5, 1), ratio(0, 1)] {
            assert_eq!(parse_rational(&display_rational(&r)).unwrap(), r);
        }
    }

    #[test]
    fn rational_to_f64_small_and_large() {
        assert_eq!(rational_to_f64(&ratio(1, 4)), 0.25);
        assert_eq!(rational_to_f64(&ratio(-3, 2)), -1.5);
        let big = Rational::new(factorial(40), factorial(38));
        // 40!/38! = 40*39 = 1560
        assert_eq!(rational_to_f64(&big), 1560.0);
        let tiny = Rational::new(BigInt::one(), factorial(30));
        let approx = rational_to_f64(&tiny);
        assert!((approx * 2.652528598121911e32 - 1.0).abs() < 1e-12);
    }
}
