//! The coefficients `A_i(z)` and the polynomial identities in `x` built from
//! `sum_k [n,k] (x-1)(x-q)...(x-q^(k-1)) q^(mk) / (1 - z q^k)^m`.
//!
//! Sums are accumulated as unreduced [`Fraction`]s and compared by
//! cross-multiplication; the public `RatFunc` and `PolyInX` forms are reduced.

use num_traits::One;

use super::outcome::{compare_fraction, compare_fraction_coeffs, Identity, IdentitySpec, VerificationOutcome};
use crate::arith::{Fraction, Poly, PolyInX, RatFunc, Rational};
use crate::error::{Error, Result};
use crate::qseries::{binom2, gauss_poly, qbinomial_expand};
use crate::symfunc::{h_series_fraction, ArgList};

fn sign(e: i64) -> Rational {
    if e.rem_euclid(2) == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// `1 - z q^k`.
fn one_minus_zq(z: &Rational, k: i64) -> Poly {
    Poly::one() - Poly::monomial(z.clone(), k as usize)
}

/// `q^e / (1 - z q^k)^m` for `e >= 0`.
fn pole_term(z: &Rational, k: i64, e: i64, m: i64) -> Fraction {
    Fraction::from_poly(Poly::monomial(Rational::one(), e as usize))
        .div_poly(&one_minus_zq(z, k), m as u32)
        .expect("1 - z q^k is nonzero")
}

/// `s [n, k] q^e / (1 - z q^k)^m` with sign `s`.
fn binomial_pole_term(n: i64, k: i64, z: &Rational, e: i64, m: i64, s: &Rational) -> Fraction {
    pole_term(z, k, e, m).mul_poly(&gauss_poly(n, k).scale(s))
}

/// Coefficients of `(x-1)(x-q)...(x-q^(k-1))` as polynomials in `q`.
fn falling_coeffs(k: i64) -> Vec<Poly> {
    qbinomial_expand(k)
        .expect("k >= 0")
        .coeffs()
        .iter()
        .map(|c| c.num().clone())
        .collect()
}

/// `sum_k scalar_k (x-1)...(x-q^(k-1))` as a coefficient list.
fn falling_combination(len: usize, terms: impl Iterator<Item = (i64, Fraction)>) -> Vec<Fraction> {
    let mut out = vec![Fraction::zero(); len];
    for (k, scalar) in terms {
        for (j, c) in falling_coeffs(k).into_iter().enumerate() {
            if !c.is_zero() {
                out[j] = &out[j] + &scalar.mul_poly(&c);
            }
        }
    }
    out
}

fn to_polyx(coeffs: &[Fraction]) -> PolyInX {
    PolyInX::from_coeffs(coeffs.iter().map(Fraction::reduce).collect())
}

fn check_nm(n: i64, m: i64) -> Result<()> {
    if n < 1 {
        return Err(Error::IndexRange(format!("need n >= 1, got {n}")));
    }
    if m < 1 {
        return Err(Error::IndexRange(format!("need m >= 1, got {m}")));
    }
    Ok(())
}

fn check_inm(i: i64, n: i64, m: i64) -> Result<()> {
    check_nm(n, m)?;
    if i < 1 || i > n {
        return Err(Error::IndexRange(format!("need 1 <= i <= n, got i = {i}, n = {n}")));
    }
    Ok(())
}

/// `prod_{j=start}^{end} (1 - w q^j)` as a polynomial.
fn poch_poly(w: &Rational, start: i64, end: i64) -> Poly {
    (start..=end).fold(Poly::one(), |acc, j| acc * one_minus_zq(w, j))
}

fn a_coeff_fraction(z: &Rational, i: i64, n: i64, m: i64) -> Result<Fraction> {
    check_inm(i, n, m)?;
    // (zq)_{i-1} / (zq)_n = 1 / prod_{j=i}^n (1 - z q^j) and (q)_n / (q)_i = prod_{j=i+1}^n (1 - q^j).
    let prefactor = Fraction::from_poly(poch_poly(&Rational::one(), i + 1, n).shift(i as usize)).div_pochhammer(
        z,
        i as usize,
        (n - i + 1) as usize,
    )?;
    let args = ArgList::new((i..=n).map(|k| pole_term(z, k, k, 1).reduce()).collect());
    Ok(prefactor * h_series_fraction(&args, m - 1))
}

/// `A_i(z) = q^i (zq)_{i-1} (q)_n / ((q)_i (zq)_n) * h_{m-1}(q^i/(1-zq^i), ..., q^n/(1-zq^n))`.
pub fn a_coeff(z: &Rational, i: i64, n: i64, m: i64) -> Result<RatFunc> {
    Ok(a_coeff_fraction(z, i, n, m)?.reduce())
}

fn x_poly_fractions(z: &Rational, n: i64, m: i64, mutate: bool) -> Result<(Vec<Fraction>, Vec<Fraction>)> {
    check_nm(n, m)?;
    // The mutation hook shifts one q-exponent to show the comparison can fail.
    let bump = i64::from(mutate);
    let one = Rational::one();
    let lhs = falling_combination(
        n as usize + 1,
        (1..=n).map(|k| (k, binomial_pole_term(n, k, z, m * k + bump, m, &one))),
    );
    let constant: Fraction = (1..=n)
        .map(|k| binomial_pole_term(n, k, z, binom2(k) + m * k, m, &sign(k)))
        .sum();
    let mut rhs = vec![constant];
    for i in 1..=n {
        rhs.push(a_coeff_fraction(z, i, n, m)?);
    }
    Ok((lhs, rhs))
}

/// Both sides of the polynomial identity in `x`:
/// `sum_{k=1}^n [n,k] (x-1)...(x-q^(k-1)) q^(mk)/(1-zq^k)^m` and
/// `sum_{k=1}^n (-1)^k [n,k] q^(C(k,2)+mk)/(1-zq^k)^m + sum_i A_i(z) x^i`.
pub fn x_poly_sides(z: &Rational, n: i64, m: i64) -> Result<(PolyInX, PolyInX)> {
    let (lhs, rhs) = x_poly_fractions(z, n, m, false)?;
    Ok((to_polyx(&lhs), to_polyx(&rhs)))
}

/// Checks the polynomial identity in `x` and, coefficient by coefficient,
/// that each `x^i` coefficient of the left side equals [`x_coeff_sum`].
pub fn x_poly_check(z: &Rational, n: i64, m: i64) -> Result<VerificationOutcome> {
    x_poly_check_impl(z, n, m, false)
}

/// [`x_poly_check`] with one exponent deliberately corrupted.
#[doc(hidden)]
pub fn x_poly_check_mutated(z: &Rational, n: i64, m: i64) -> Result<VerificationOutcome> {
    x_poly_check_impl(z, n, m, true)
}

fn x_poly_check_impl(z: &Rational, n: i64, m: i64, mutate: bool) -> Result<VerificationOutcome> {
    let (lhs, rhs) = x_poly_fractions(z, n, m, mutate)?;
    let spec = IdentitySpec::new(Identity::XPoly).n(n).m(m).z(z);
    let mut witness = compare_fraction_coeffs("polynomial identity in x", &lhs, &rhs);
    if witness.is_none() {
        for i in 1..=n {
            let sum = x_coeff_fraction(z, i, n, m)?;
            witness = compare_fraction(&format!("[x^{i}] lhs = double binomial sum"), &lhs[i as usize], &sum);
            if witness.is_some() {
                break;
            }
        }
    }
    Ok(VerificationOutcome::from_witness(spec, witness))
}

fn x_coeff_fraction(z: &Rational, i: i64, n: i64, m: i64) -> Result<Fraction> {
    check_inm(i, n, m)?;
    Ok((i..=n)
        .map(|k| binomial_pole_term(n, k, z, m * k + binom2(k - i), m, &sign(k - i)).mul_poly(&gauss_poly(k, i)))
        .sum())
}

/// `sum_{k=i}^n (-1)^(k-i) [n,k] [k,i] q^(mk + C(k-i,2)) / (1 - z q^k)^m`.
pub fn x_coeff_sum(z: &Rational, i: i64, n: i64, m: i64) -> Result<RatFunc> {
    Ok(x_coeff_fraction(z, i, n, m)?.reduce())
}

/// Checks [`x_coeff_sum`] against [`a_coeff`].
pub fn x_coeff_check(z: &Rational, i: i64, n: i64, m: i64) -> Result<VerificationOutcome> {
    let lhs = x_coeff_fraction(z, i, n, m)?;
    let rhs = a_coeff_fraction(z, i, n, m)?;
    let spec = IdentitySpec::new(Identity::XCoeff).n(n).i(i).m(m).z(z);
    Ok(VerificationOutcome::from_witness(
        spec,
        compare_fraction("double binomial sum = A_i(z)", &lhs, &rhs),
    ))
}

fn dilcher_lhs_fraction(n: i64, m: i64) -> Result<Fraction> {
    check_nm(n, m)?;
    let one = Rational::one();
    Ok((1..=n)
        .map(|k| binomial_pole_term(n, k, &one, binom2(k) + m * k, m, &sign(k - 1)))
        .sum())
}

/// `sum_{k=1}^n [n,k] (-1)^(k-1) q^(C(k,2)+mk) / (1-q^k)^m`.
pub fn dilcher_lhs(n: i64, m: i64) -> Result<RatFunc> {
    Ok(dilcher_lhs_fraction(n, m)?.reduce())
}

/// Checks Dilcher's identity `lhs = h_m(q/(1-q), ..., q^n/(1-q^n)) = sum_i A_i(1)`.
///
/// Also checks the route through the double binomial sum: at `z = i = 1`
/// with `m` replaced by `m + 1` that sum, and `A_1(1)`, equal `q/(1-q)`
/// times the two sides above.
pub fn dilcher_check(n: i64, m: i64) -> Result<VerificationOutcome> {
    let lhs = dilcher_lhs_fraction(n, m)?;
    let one = Rational::one();
    let args = ArgList::new((1..=n).map(|k| pole_term(&one, k, k, 1).reduce()).collect());
    let h = h_series_fraction(&args, m);
    let a_sum: Fraction = (1..=n)
        .map(|i| a_coeff_fraction(&one, i, n, m))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .sum();
    let factor = pole_term(&one, 1, 1, 1);
    let shifted_sum = x_coeff_fraction(&one, 1, n, m + 1)?;
    let shifted_a1 = a_coeff_fraction(&one, 1, n, m + 1)?;

    let spec = IdentitySpec::new(Identity::Dilcher).n(n).m(m);
    let witness = compare_fraction("lhs = h_m", &lhs, &h)
        .or_else(|| compare_fraction("h_m = sum_i A_i(1)", &h, &a_sum))
        .or_else(|| compare_fraction("shifted double sum = q/(1-q) lhs", &shifted_sum, &(&factor * &lhs)))
        .or_else(|| compare_fraction("A_1(1) at m+1 = q/(1-q) h_m", &shifted_a1, &(&factor * &h)));
    Ok(VerificationOutcome::from_witness(spec, witness))
}

fn check_z_not_one(z: &Rational, n: i64) -> Result<()> {
    if n < 0 {
        return Err(Error::IndexRange(format!("need n >= 0, got {n}")));
    }
    if z.is_one() {
        return Err(Error::PochhammerPole);
    }
    Ok(())
}

/// `(q)_n / (z)_{n+1}`.
fn q_over_z_pochhammer(z: &Rational, n: i64) -> Result<Fraction> {
    Fraction::from_poly(poch_poly(&Rational::one(), 1, n)).div_pochhammer(z, 0, (n + 1) as usize)
}

fn pf_corollary_fractions(z: &Rational, n: i64) -> Result<(Fraction, Fraction)> {
    check_z_not_one(z, n)?;
    let lhs = (0..=n)
        .map(|k| binomial_pole_term(n, k, z, binom2(k) + k, 1, &sign(k)))
        .sum();
    Ok((lhs, q_over_z_pochhammer(z, n)?))
}

/// `sum_{k=0}^n (-1)^k [n,k] q^(C(k,2)+k)/(1-zq^k)` and `(q)_n/(z)_{n+1}`.
pub fn pf_corollary_sides(z: &Rational, n: i64) -> Result<(RatFunc, RatFunc)> {
    let (lhs, rhs) = pf_corollary_fractions(z, n)?;
    Ok((lhs.reduce(), rhs.reduce()))
}

pub fn pf_corollary_check(z: &Rational, n: i64) -> Result<VerificationOutcome> {
    let (lhs, rhs) = pf_corollary_fractions(z, n)?;
    let spec = IdentitySpec::new(Identity::PfCorollary).n(n).z(z);
    Ok(VerificationOutcome::from_witness(
        spec,
        compare_fraction("alternating sum = (q)_n/(z)_{n+1}", &lhs, &rhs),
    ))
}

/// Polynomial identity in `x` at `z = 1`:
/// `sum_k [n,k] (x-1)...(x-q^(k-1)) q^(mk)/(1-q^k)^m = sum_i (x^i - 1) A_i(1)`.
pub fn x_poly_unit_z_check(n: i64, m: i64) -> Result<VerificationOutcome> {
    check_nm(n, m)?;
    let one = Rational::one();
    let lhs = falling_combination(
        n as usize + 1,
        (1..=n).map(|k| (k, binomial_pole_term(n, k, &one, m * k, m, &one))),
    );
    let a: Vec<Fraction> = (1..=n)
        .map(|i| a_coeff_fraction(&one, i, n, m))
        .collect::<Result<_>>()?;
    let constant: Fraction = a.iter().map(|f| -f).sum();
    let rhs: Vec<Fraction> = std::iter::once(constant).chain(a).collect();
    let spec = IdentitySpec::new(Identity::XPolyUnitZ).n(n).m(m);
    Ok(VerificationOutcome::from_witness(
        spec,
        compare_fraction_coeffs("polynomial identity in x at z = 1", &lhs, &rhs),
    ))
}

fn x_poly_simple_pole_fractions(z: &Rational, n: i64) -> Result<(Vec<Fraction>, Vec<Fraction>)> {
    check_z_not_one(z, n)?;
    let one = Rational::one();
    let lhs = falling_combination(
        n as usize + 1,
        (0..=n).map(|k| (k, binomial_pole_term(n, k, z, k, 1, &one))),
    );
    let prefactor = q_over_z_pochhammer(z, n)?;
    let rhs = (0..=n)
        .map(|i| {
            // (z)_i / (q)_i * q^i
            let c = Fraction::from_poly(poch_poly(z, 0, i - 1).shift(i as usize)).div_pochhammer(
                &Rational::one(),
                1,
                i as usize,
            )?;
            Ok(&prefactor * &c)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((lhs, rhs))
}

/// `sum_{k=0}^n [n,k] (x-1)...(x-q^(k-1)) q^k/(1-zq^k)` and
/// `(q)_n/(z)_{n+1} sum_{i=0}^n (z)_i/(q)_i x^i q^i`.
pub fn x_poly_simple_pole_sides(z: &Rational, n: i64) -> Result<(PolyInX, PolyInX)> {
    let (lhs, rhs) = x_poly_simple_pole_fractions(z, n)?;
    Ok((to_polyx(&lhs), to_polyx(&rhs)))
}

pub fn x_poly_simple_pole_check(z: &Rational, n: i64) -> Result<VerificationOutcome> {
    let (lhs, rhs) = x_poly_simple_pole_fractions(z, n)?;
    let spec = IdentitySpec::new(Identity::XPolySimplePole).n(n).z(z);
    Ok(VerificationOutcome::from_witness(
        spec,
        compare_fraction_coeffs("simple-pole polynomial identity in x", &lhs, &rhs),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use crate::qseries::pochhammer;

    fn rf(n: &[i64], d: &[i64]) -> RatFunc {
        RatFunc::new(Poly::from_ints(n), Poly::from_ints(d)).unwrap()
    }

    #[test]
    fn a_coeff_m1_is_prefactor() {
        let z = rat(2, 3);
        let zq = RatFunc::monomial(z.clone(), 1);
        let q = RatFunc::q();
        let (i, n) = (2, 4);
        let expected = (RatFunc::q_pow(i) * pochhammer(&zq, i - 1).unwrap() * pochhammer(&q, n).unwrap())
            .checked_div(&(pochhammer(&q, i).unwrap() * pochhammer(&zq, n).unwrap()))
            .unwrap();
        assert_eq!(a_coeff(&z, i, n, 1).unwrap(), expected);
    }

    #[test]
    fn a_coeff_top_index() {
        let z = rat(-1, 2);
        for n in 1..=4 {
            for m in 1..=3 {
                assert_eq!(a_coeff(&z, n, n, m).unwrap(), pole_term(&z, n, n * m, m).reduce());
            }
        }
    }

    #[test]
    fn a_coeff_hand_value() {
        // i = 1, z = 1, m = 1, n = 2: q/(1-q)
        assert_eq!(a_coeff(&rat(1, 1), 1, 2, 1).unwrap(), rf(&[0, 1], &[1, -1]));
        assert!(a_coeff(&rat(1, 1), 0, 2, 1).is_err());
        assert!(a_coeff(&rat(1, 1), 1, 2, 0).is_err());
    }

    #[test]
    fn x_poly_n1_by_hand() {
        let z = rat(3, 1);
        for m in 1..=3 {
            let (lhs, rhs) = x_poly_sides(&z, 1, m).unwrap();
            let t = pole_term(&z, 1, m, m).reduce();
            assert_eq!(lhs, PolyInX::linear(RatFunc::one()).scale(&t));
            assert_eq!(rhs.coeff(0), -&t);
            assert_eq!(rhs.coeff(1), t);
        }
    }

    #[test]
    fn x_poly_examples() {
        assert!(x_poly_check(&rat(1, 2), 3, 2).unwrap().passed);
        let out = x_poly_check_mutated(&rat(1, 2), 3, 2).unwrap();
        assert!(!out.passed);
        assert!(!out.witness.unwrap().terms.is_empty());
    }

    #[test]
    fn x_poly_constant_term_matches_by_construction() {
        // (x-1)...(x-q^(k-1)) at x = 0 is (-1)^k q^C(k,2).
        let z = rat(5, 7);
        let (lhs, rhs) = x_poly_sides(&z, 4, 3).unwrap();
        assert_eq!(lhs.coeff(0), rhs.coeff(0));
    }

    #[test]
    fn x_coeff_examples() {
        let z = rat(-3, 4);
        for n in 1..=4 {
            assert!(x_coeff_check(&z, n, n, 2).unwrap().passed);
        }
        assert!(x_coeff_check(&rat(0, 1), 1, 2, 1).unwrap().passed);
        // z = 0: [2,1] q - [2,2][2,1] q^2 = (1+q) q - (1+q) q^2
        assert_eq!(
            x_coeff_sum(&rat(0, 1), 1, 2, 1).unwrap(),
            RatFunc::from_poly(Poly::from_ints(&[0, 1, 0, -1]))
        );
        assert!(matches!(x_coeff_check(&z, 0, 2, 1), Err(Error::IndexRange(_))));
    }

    #[test]
    fn dilcher_examples() {
        for m in 1..=4 {
            let lhs = dilcher_lhs(1, m).unwrap();
            assert_eq!(lhs, pole_term(&rat(1, 1), 1, m, m).reduce());
            assert!(dilcher_check(1, m).unwrap().passed);
        }
        assert!(dilcher_check(2, 1).unwrap().passed);
        assert!(dilcher_check(3, 2).unwrap().passed);
        assert!(dilcher_check(0, 1).is_err());
    }

    #[test]
    fn dilcher_n2_m1_expansion() {
        // q/(1-q) + q^2/(1-q^2) counts divisors of j that are <= 2.
        let e = dilcher_lhs(2, 1).unwrap().q_expand(5).unwrap();
        let ints: Vec<i64> = vec![0, 1, 2, 1, 2, 1];
        assert_eq!(e, ints.into_iter().map(|x| rat(x, 1)).collect::<Vec<_>>());
    }

    #[test]
    fn pf_corollary_examples() {
        let (lhs, rhs) = pf_corollary_sides(&rat(5, 3), 0).unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(lhs, RatFunc::from_rational(rat(-3, 2)));

        let (lhs, rhs) = pf_corollary_sides(&rat(2, 1), 1).unwrap();
        assert_eq!(lhs, rf(&[-1, 1], &[1, -2]));
        assert_eq!(rhs, lhs);
        assert!(pf_corollary_check(&rat(2, 1), 1).unwrap().passed);

        assert_eq!(pf_corollary_check(&rat(1, 1), 3), Err(Error::PochhammerPole));
    }

    #[test]
    fn unit_z_examples() {
        let out = x_poly_unit_z_check(1, 1).unwrap();
        assert!(out.passed);
        assert!(x_poly_unit_z_check(2, 2).unwrap().passed);
        assert!(x_poly_unit_z_check(0, 2).is_err());
    }

    #[test]
    fn simple_pole_examples() {
        let z = rat(2, 1);
        let (lhs, rhs) = x_poly_simple_pole_sides(&z, 0).unwrap();
        assert_eq!(lhs, PolyInX::constant(rf(&[1], &[1]).scale(&rat(-1, 1))));
        assert_eq!(lhs, rhs);
        assert!(x_poly_simple_pole_check(&z, 1).unwrap().passed);
        // At x = 1 only the k = 0 term survives.
        let (lhs, rhs) = x_poly_simple_pole_sides(&rat(1, 3), 4).unwrap();
        let at_one = RatFunc::from_rational(rat(3, 2));
        assert_eq!(lhs.eval(&RatFunc::one()), at_one);
        assert_eq!(rhs.eval(&RatFunc::one()), at_one);
        assert_eq!(x_poly_simple_pole_check(&rat(1, 1), 2), Err(Error::PochhammerPole));
    }

    #[test]
    fn degree_in_x_is_n() {
        let (lhs, rhs) = x_poly_sides(&rat(1, 1), 3, 2).unwrap();
        assert_eq!(lhs.degree(), Some(3));
        assert_eq!(rhs.degree(), Some(3));
    }
}
