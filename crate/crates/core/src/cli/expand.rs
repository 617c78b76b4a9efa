//! Builtin expressions for `qident expand`.

use num_traits::One;

use crate::arith::{parse_rational, RatFunc, Rational};
use crate::error::{Error, Result};
use crate::identities::a_coeff;
use crate::qseries::{gauss_binomial, pochhammer};
use crate::symfunc::{h_series, ArgList};

/// `h_m(q^k/(1 - z q^k) : k = i..n)`.
pub fn hsym_builtin(m: i64, n: i64, z: &Rational, i: i64) -> Result<RatFunc> {
    if i < 1 || n < i - 1 {
        return Err(Error::IndexRange(format!("need 1 <= i <= n + 1, got i = {i}, n = {n}")));
    }
    let args = (i..=n)
        .map(|k| {
            let den = &RatFunc::one() - &(RatFunc::q_pow(k).scale(z));
            RatFunc::q_pow(k).checked_div(&den)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(h_series(&ArgList::new(args), m))
}

pub fn gaussian_builtin(n: i64, k: i64) -> Result<RatFunc> {
    Ok(RatFunc::from_poly(gauss_binomial(n, k)?))
}

pub fn pochhammer_builtin(x: &RatFunc, n: i64) -> Result<RatFunc> {
    pochhammer(x, n)
}

pub fn a_coeff_builtin(z: &Rational, i: i64, n: i64, m: i64) -> Result<RatFunc> {
    a_coeff(z, i, n, m)
}

/// Parses `c`, `q`, `q^k`, `c*q` or `c*q^k` with rational `c` and integer `k`.
pub fn parse_monomial(s: &str) -> Result<RatFunc> {
    let bad = || Error::Domain(format!("cannot parse '{s}' as c*q^k"));
    let s = s.trim();
    let (coeff, power) = match s.split_once('*') {
        Some((c, p)) => (parse_rational(c.trim()).ok_or_else(bad)?, Some(p.trim())),
        None if s.starts_with('q') => (Rational::one(), Some(s)),
        None => (parse_rational(s).ok_or_else(bad)?, None),
    };
    let k = match power {
        None => 0,
        Some("q") => 1,
        Some(p) => p
            .strip_prefix("q^")
            .and_then(|e| e.trim().parse::<i64>().ok())
            .ok_or_else(bad)?,
    };
    Ok(RatFunc::q_pow(k).scale(&coeff))
}

/// Coefficients `c_0..c_order` joined as `"c0, c1, ..."`.
pub fn format_expansion(f: &RatFunc, order: usize) -> Result<String> {
    let coeffs = f.q_expand(order)?;
    Ok(coeffs
        .iter()
        .map(crate::arith::format_rational)
        .collect::<Vec<_>>()
        .join(", "))
}
