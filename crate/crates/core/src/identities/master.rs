//! `h_tau` of the arguments `(a - b q^k)/(c - z q^k)`, `k = i..n`, against its
//! closed form as an alternating Gaussian-binomial sum.
//!
//! Both sides are evaluated as unreduced [`Fraction`]s and compared by
//! cross-multiplication; reduction to canonical form happens only for witnesses.

use num_traits::{One, Zero};
use rayon::prelude::*;

use super::outcome::{compare_fraction, GridInfo, Identity, IdentitySpec, ParamTuple, VerificationOutcome};
use crate::arith::{Fraction, Poly, RatFunc, Rational};
use crate::error::{Error, Result};
use crate::qseries::{binom2, gauss_poly, pochhammer};
use crate::symfunc::{h_series_fraction, ArgList};

fn sign(e: i64) -> Rational {
    if e.rem_euclid(2) == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// `u - v q^k` as a polynomial.
fn linear(u: &Rational, v: &Rational, k: i64) -> Poly {
    Poly::constant(u.clone()) - Poly::monomial(v.clone(), k as usize)
}

/// `1 - q^e`.
fn one_minus_q_pow(e: i64) -> Poly {
    Poly::one() - Poly::monomial(Rational::one(), e as usize)
}

/// `q^exponent * num / den^power`.
fn term(exponent: i64, num: Poly, den: &Poly, power: i64) -> Fraction {
    (Fraction::monomial(Rational::one(), exponent).mul_poly(&num))
        .div_poly(den, power as u32)
        .expect("c - z q^k is nonzero")
}

/// `(a - b q^k)/(c - z q^k)` for `k = i..n`.
pub fn master_args(p: &ParamTuple, i: i64, n: i64) -> Result<ArgList> {
    p.validate()?;
    (i..=n)
        .map(|k| RatFunc::new(linear(&p.a, &p.b, k), linear(&p.c, &p.z, k)))
        .collect::<Result<Vec<_>>>()
        .map(ArgList::new)
}

fn check_master_domain(p: &ParamTuple, i: i64, n: i64, tau: i64) -> Result<()> {
    if i < 1 || i > n {
        return Err(Error::IndexRange(format!("need 1 <= i <= n, got i = {i}, n = {n}")));
    }
    if tau < 0 {
        return Err(Error::NegativeTau(tau));
    }
    p.validate()?;
    if p.c.is_zero() {
        return Err(Error::Domain(
            "c = 0 makes the Pochhammer argument z q^i / c undefined".into(),
        ));
    }
    if n > i && p.resultant().is_zero() {
        return Err(Error::SingularLocus);
    }
    Ok(())
}

/// `sum_{k=i}^n [N, n-k] (-1)^(k-i) q^(C(k-i+1,2) - k(n-i)) (1 - q^(k-i+1))
/// (a - b q^k)^(tau+n-i) / (c - z q^k)^(tau+1)` with `N = n - i + 1`.
fn master_sum(p: &ParamTuple, i: i64, n: i64, tau: i64) -> Fraction {
    let len = n - i + 1;
    (i..=n)
        .map(|k| {
            term(
                binom2(k - i + 1) - k * (n - i),
                gauss_poly(len, n - k).scale(&sign(k - i))
                    * one_minus_q_pow(k - i + 1)
                    * linear(&p.a, &p.b, k).pow((tau + n - i) as u32),
                &linear(&p.c, &p.z, k),
                tau + 1,
            )
        })
        .sum()
}

/// `c^N (z q^i / c)_N / ((q)_N (a z - b c)^(n-i))`, built literally.
fn master_prefactor(p: &ParamTuple, i: i64, n: i64) -> Result<Fraction> {
    let len = n - i + 1;
    let x = RatFunc::monomial(&p.z / &p.c, i as usize);
    let num = RatFunc::from_rational(num_traits::pow(p.c.clone(), len as usize)) * pochhammer(&x, len)?;
    let scale = num_traits::pow(p.resultant(), (n - i) as usize).recip();
    Fraction::from(&num)
        .scale(&scale)
        .div_pochhammer(&Rational::one(), 1, len as usize)
}

/// Closed form without the `(a z - b c)^(n-i)` denominator, with the
/// prefactor numerator written as `prod_{j=i}^n (c - z q^j)`.
fn master_rhs_cleared(p: &ParamTuple, i: i64, n: i64, tau: i64) -> Fraction {
    let len = n - i + 1;
    let lead: Poly = (i..=n).fold(Poly::one(), |acc, j| acc * linear(&p.c, &p.z, j));
    let prefactor = Fraction::from_poly(lead)
        .div_pochhammer(&Rational::one(), 1, len as usize)
        .expect("1 - q^j is nonzero");
    prefactor * master_sum(p, i, n, tau)
}

/// [`master_rhs`] before reduction.
pub fn master_rhs_fraction(p: &ParamTuple, i: i64, n: i64, tau: i64) -> Result<Fraction> {
    check_master_domain(p, i, n, tau)?;
    Ok(master_prefactor(p, i, n)? * master_sum(p, i, n, tau))
}

/// Closed form of `h_tau((a - b q^k)/(c - z q^k), k = i..n)`.
///
/// The prefactor `c^N (z q^i / c)_N / ((q)_N (a z - b c)^(n-i))` with
/// `N = n - i + 1` is built literally, which is why `c = 0` is rejected.
pub fn master_rhs(p: &ParamTuple, i: i64, n: i64, tau: i64) -> Result<RatFunc> {
    Ok(master_rhs_fraction(p, i, n, tau)?.reduce())
}

/// Checks `h_tau((a - b q^k)/(c - z q^k), k = i..n)` against [`master_rhs`].
pub fn master_check(p: &ParamTuple, i: i64, n: i64, tau: i64) -> Result<VerificationOutcome> {
    let rhs = master_rhs_fraction(p, i, n, tau)?;
    let lhs = h_series_fraction(&master_args(p, i, n)?, tau);
    let spec = IdentitySpec::new(Identity::Master).n(n).i(i).tau(tau).params(p);
    Ok(VerificationOutcome::from_witness(
        spec,
        compare_fraction("h_tau = closed form", &lhs, &rhs),
    ))
}

fn first_index_tau(n: i64, m: i64) -> Result<i64> {
    if n < 1 {
        return Err(Error::IndexRange(format!("need n >= 1, got {n}")));
    }
    let tau = m - n + 1;
    if tau < 0 {
        return Err(Error::NegativeTau(tau));
    }
    Ok(tau)
}

fn first_index_sum(p: &ParamTuple, n: i64, m: i64, tau: i64) -> Fraction {
    (1..=n)
        .map(|k| {
            term(
                binom2(k + 1) - n * k,
                gauss_poly(n, k).scale(&sign(k - 1)) * one_minus_q_pow(k) * linear(&p.a, &p.b, k).pow(m as u32),
                &linear(&p.c, &p.z, k),
                tau + 1,
            )
        })
        .sum()
}

fn master_first_index_fraction(p: &ParamTuple, n: i64, m: i64) -> Result<Fraction> {
    let tau = first_index_tau(n, m)?;
    check_master_domain(p, 1, n, tau)?;
    let x = RatFunc::monomial(&p.z / &p.c, 1);
    let num = RatFunc::from_rational(num_traits::pow(p.c.clone(), n as usize)) * pochhammer(&x, n)?;
    let scale = num_traits::pow(p.resultant(), (n - 1) as usize).recip();
    let prefactor = Fraction::from(&num)
        .scale(&scale)
        .div_pochhammer(&Rational::one(), 1, n as usize)?;
    Ok(prefactor * first_index_sum(p, n, m, tau))
}

/// Right side of the `i = 1` closed form in the `(n, m)` parameterization:
/// `c^n (zq/c)_n / ((q)_n (az-bc)^(n-1)) * sum_{k=1}^n [n,k] (-1)^(k-1)
/// q^(C(k+1,2) - nk) (1-q^k) (a-bq^k)^m / (c-zq^k)^(tau+1)`.
pub fn master_first_index_rhs(p: &ParamTuple, n: i64, m: i64) -> Result<RatFunc> {
    Ok(master_first_index_fraction(p, n, m)?.reduce())
}

/// Checks the `i = 1` closed form with `tau = m - n + 1`; `tau < 0` is rejected.
pub fn master_first_index_check(p: &ParamTuple, n: i64, m: i64) -> Result<VerificationOutcome> {
    let tau = first_index_tau(n, m)?;
    let rhs = master_first_index_fraction(p, n, m)?;
    let lhs = h_series_fraction(&master_args(p, 1, n)?, tau);
    let spec = IdentitySpec::new(Identity::MasterFirstIndex)
        .n(n)
        .m(m)
        .tau(tau)
        .params(p);
    Ok(VerificationOutcome::from_witness(
        spec,
        compare_fraction("h_tau = closed form", &lhs, &rhs),
    ))
}

/// Degree bounds `[D_a, D_b, D_c, D_z]` of the cleared difference
/// `prod_k (c - z q^k)^(tau+1) * (az - bc)^(n-1) * (LHS - RHS)`,
/// a polynomial in `a, b, c, z` over Q(q).
pub fn grid_degree_bounds(n: i64, m: i64) -> Result<[usize; 4]> {
    let tau = first_index_tau(n, m)?;
    let ab = m as usize;
    let cz = (n * (tau + 1) + n - tau - 1) as usize;
    Ok([ab, ab, cz, cz])
}

/// Distinct nonzero rationals `1, -1, 2, -2, 1/2, -1/2, 3, -3, 1/3, ...`.
fn grid_values(count: usize) -> Vec<Rational> {
    let mut out: Vec<Rational> = Vec::with_capacity(count);
    let mut k = 1i64;
    while out.len() < count {
        let mut cands = vec![Rational::from_integer(k.into())];
        if k > 1 {
            cands.push(Rational::new(1.into(), k.into()));
        }
        for c in cands {
            for v in [c.clone(), -c] {
                if out.len() < count && !out.contains(&v) {
                    out.push(v);
                }
            }
        }
        k += 1;
    }
    out
}

/// Proves the `i = 1` closed form at fixed `(n, m)` for all parameters by
/// checking the cleared difference on a full tensor grid with `D + 1` points
/// per parameter.
///
/// A polynomial of degree at most `D_v` in each variable `v` that vanishes
/// on a product grid with more than `D_v` points per axis is zero. Grid values
/// are nonzero, so `c - z q^k` never vanishes; points on `az = bc` are
/// handled because the comparison is done after multiplying by `(az - bc)^(n-1)`.
pub fn master_first_index_grid_proof(n: i64, m: i64) -> Result<VerificationOutcome> {
    let tau = first_index_tau(n, m)?;
    let bounds = grid_degree_bounds(n, m)?;
    let axes: Vec<Vec<Rational>> = bounds.iter().map(|&d| grid_values(d + 1)).collect();
    let points: Vec<ParamTuple> = axes[0]
        .iter()
        .flat_map(|a| {
            let axes = &axes;
            axes[1].iter().flat_map(move |b| {
                axes[2].iter().flat_map(move |c| {
                    axes[3]
                        .iter()
                        .map(move |z| ParamTuple::new(a.clone(), b.clone(), c.clone(), z.clone()))
                })
            })
        })
        .collect();
    let total = points.len();
    let failure = points.par_iter().find_map_first(|p| {
        let lhs = h_series_fraction(&master_args(p, 1, n).expect("c != 0"), tau)
            .scale(&num_traits::pow(p.resultant(), (n - 1) as usize));
        let rhs = master_rhs_cleared(p, 1, n, tau);
        compare_fraction(&format!("cleared h_tau = closed form at {p}"), &lhs, &rhs).map(|w| (p.clone(), w))
    });
    let mut spec = IdentitySpec::new(Identity::MasterFirstIndex).n(n).m(m).tau(tau);
    spec.grid = Some(GridInfo {
        degree_bounds: bounds,
        points: total,
    });
    let witness = failure.map(|(p, w)| {
        spec.params = Some(p);
        w
    });
    Ok(VerificationOutcome::from_witness(spec, witness))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use crate::symfunc::h_direct;

    fn p1235() -> ParamTuple {
        ParamTuple::from_ints(1, 2, 3, 5)
    }

    #[test]
    fn single_term_collapses() {
        // i = n = 1: ((a - bq)/(c - zq))^tau
        let p = ParamTuple::new(rat(2, 3), rat(-1, 1), rat(5, 2), rat(1, 4));
        let base = RatFunc::new(linear(&p.a, &p.b, 1), linear(&p.c, &p.z, 1)).unwrap();
        assert_eq!(master_rhs(&p, 1, 1, 2).unwrap(), base.powu(2));
        assert_eq!(master_rhs(&p, 1, 1, 0).unwrap(), RatFunc::one());
    }

    #[test]
    fn tau_zero_is_one() {
        assert_eq!(master_rhs(&p1235(), 1, 2, 0).unwrap(), RatFunc::one());
    }

    #[test]
    fn matches_brute_force() {
        let p = p1235();
        let lhs = h_direct(&master_args(&p, 1, 3).unwrap(), 2);
        assert_eq!(master_rhs(&p, 1, 3, 2).unwrap(), lhs);
        assert!(master_check(&p, 1, 3, 2).unwrap().passed);
    }

    #[test]
    fn specialization_a0_bm1_c1() {
        let p = ParamTuple::new(rat(0, 1), rat(-1, 1), rat(1, 1), rat(1, 2));
        for i in 1..=3 {
            assert!(master_check(&p, i, 3, 2).unwrap().passed);
        }
    }

    #[test]
    fn domain_errors() {
        let p = p1235();
        assert!(matches!(master_check(&p, 2, 1, 0), Err(Error::IndexRange(_))));
        assert!(matches!(master_check(&p, 0, 2, 0), Err(Error::IndexRange(_))));
        let singular = ParamTuple::from_ints(1, 1, 1, 1);
        assert_eq!(master_rhs(&singular, 1, 2, 1), Err(Error::SingularLocus));
        // The singular locus only matters when the (az - bc) power is positive.
        assert!(master_check(&singular, 2, 2, 1).unwrap().passed);
        let c0 = ParamTuple::from_ints(1, 2, 0, 5);
        assert!(matches!(master_rhs(&c0, 1, 2, 1), Err(Error::Domain(_))));
    }

    #[test]
    fn first_index_examples() {
        let p = ParamTuple::new(rat(3, 2), rat(1, 1), rat(-2, 1), rat(7, 3));
        let out = master_first_index_check(&p, 1, 1).unwrap();
        assert!(out.passed);
        assert_eq!(out.spec.tau, Some(1));
        assert!(master_first_index_check(&p1235(), 2, 3).unwrap().passed);
        assert_eq!(master_first_index_check(&p1235(), 3, 1), Err(Error::NegativeTau(-1)));
    }

    #[test]
    fn first_index_agrees_with_general_form() {
        let p = p1235();
        for n in 1..=4 {
            for m in (n - 1)..=(n + 2) {
                let tau = m - n + 1;
                assert_eq!(
                    master_first_index_rhs(&p, n, m).unwrap(),
                    master_rhs(&p, 1, n, tau).unwrap(),
                    "n = {n}, m = {m}"
                );
            }
        }
    }

    #[test]
    fn cleared_form_matches() {
        let p = p1235();
        let rhs = master_rhs(&p, 1, 3, 1).unwrap();
        let cleared = master_rhs_cleared(&p, 1, 3, 1).reduce();
        assert_eq!(rhs * RatFunc::from_rational(num_traits::pow(p.resultant(), 2)), cleared);
    }

    #[test]
    fn grid_values_distinct_nonzero() {
        let v = grid_values(12);
        assert_eq!(v.len(), 12);
        for (k, x) in v.iter().enumerate() {
            assert!(!x.is_zero());
            assert!(!v[..k].contains(x));
        }
        assert_eq!(&v[..5], &[rat(1, 1), rat(-1, 1), rat(2, 1), rat(-2, 1), rat(1, 2)]);
    }

    #[test]
    fn grid_bounds() {
        assert_eq!(grid_degree_bounds(1, 1).unwrap(), [1, 1, 1, 1]);
        assert_eq!(grid_degree_bounds(3, 3).unwrap(), [3, 3, 7, 7]);
        assert_eq!(grid_degree_bounds(3, 1), Err(Error::NegativeTau(-1)));
    }

    #[test]
    fn grid_proof_small() {
        let out = master_first_index_grid_proof(2, 2).unwrap();
        assert!(out.passed);
        assert_eq!(out.spec.grid.as_ref().unwrap().points, 3 * 3 * 5 * 5);
    }
}
