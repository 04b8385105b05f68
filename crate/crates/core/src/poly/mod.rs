//! Exact scalars and polynomials.

mod bivariate;
pub mod resultant;
mod univariate;

pub use bivariate::{divides_line, BivariatePoly, Var};
pub use univariate::UnivariatePoly;

use num::{BigInt, BigRational, One, Zero};

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `p`, `-p` or `p/q`. Returns `None` on malformed input or a zero
/// denominator.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num = parse_int(num)?;
    let den = parse_int(den)?;
    if den.is_zero() {
        return None;
    }
    Some(Rational::new(num, den))
}

fn parse_int(s: &str) -> Option<BigInt> {
    let digits = s.strip_prefix(['+', '-']).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.strip_prefix('+').unwrap_or(s).parse().ok()
}

/// Least common multiple of the denominators.
pub(crate) fn denominator_lcm<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    use num::Integer;
    values
        .into_iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(parse_rational("2/1"), Some(rat(2)));
        assert_eq!(parse_rational("-6/4"), Some(ratio(-3, 2)));
        assert_eq!(parse_rational("+7"), Some(rat(7)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("1.5"), None);
        assert_eq!(parse_rational("x"), None);
        assert_eq!(parse_rational("--1"), None);
        assert_eq!(parse_rational(""), None);
    }

    #[test]
    fn reduced_and_exact() {
        let a = ratio(4, -6);
        assert_eq!(a.numer(), &BigInt::from(-2));
        assert_eq!(a.denom(), &BigInt::from(3));
        let (b, d) = (ratio(1, 3), ratio(5, 7));
        // (a/b + c/d)·b·d = a·d + c·b
        assert_eq!((&b + &d) * rat(3) * rat(7), rat(7 + 15));
    }
}
