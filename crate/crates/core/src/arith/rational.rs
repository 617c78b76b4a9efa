use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Arbitrary-precision exact fraction, always reduced with positive denominator.
pub type Rational = BigRational;

/// Shorthand for `num / den`.
///
/// Panics when `den == 0`; only used with literal denominators.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Renders a rational as `p` when integral and `p/r` otherwise.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p` or `p/r` (surrounding whitespace allowed).
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = den.parse().ok()?;
    if den.is_zero() {
        return None;
    }
    Some(Rational::new(num, den))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn always_reduced() {
        let r = rat(6, -4);
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(2));
        let z = rat(0, 7);
        assert_eq!(z.denom(), &BigInt::from(1));
    }

    #[test]
    fn format_and_parse() {
        assert_eq!(format_rational(&rat(3, 1)), "3");
        assert_eq!(format_rational(&rat(-1, 2)), "-1/2");
        assert_eq!(parse_rational(" -4/6 "), Some(rat(-2, 3)));
        assert_eq!(parse_rational("5"), Some(rat(5, 1)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("q"), None);
    }
}
