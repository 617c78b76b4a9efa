//! Divisor sums `sigma_r(n)` and the divisor-count expansion of
//! `sum_{k=1}^n q^k/(1 - q^k)`.

use num_traits::{One, Zero};

use crate::arith::{Poly, RatFunc, Rational};
use crate::error::{Error, Result};
use crate::identities::{Identity, IdentitySpec, VerificationOutcome, Witness, WitnessTerm};

/// `sigma_r(n) = sum_{d | n} d^r` for `r` in `{0, 1}`, by trial division up to `sqrt(n)`.
pub fn sigma(r: u32, n: i64) -> Result<u128> {
    if n < 1 {
        return Err(Error::Domain(format!("sigma needs n >= 1, got {n}")));
    }
    if r > 1 {
        return Err(Error::Domain(format!(
            "sigma_r is implemented for r in {{0, 1}}, got {r}"
        )));
    }
    let n = n as u128;
    let weight = |d: u128| if r == 0 { 1 } else { d };
    let mut total = 0u128;
    let mut d = 1u128;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let e = n / d;
            total += weight(d);
            if e != d {
                total += weight(e);
            }
        }
        d += 1;
    }
    Ok(total)
}

/// `sigma_0` and `sigma_1` for `1 <= n <= n_max`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisorTable {
    n_max: usize,
    sigma0: Vec<u128>,
    sigma1: Vec<u128>,
}

impl DivisorTable {
    pub fn new(n_max: i64) -> Result<Self> {
        if n_max < 1 {
            return Err(Error::Domain(format!("divisor table needs max >= 1, got {n_max}")));
        }
        let (sigma0, sigma1) = (1..=n_max)
            .map(|n| Ok((sigma(0, n)?, sigma(1, n)?)))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .unzip();
        Ok(DivisorTable {
            n_max: n_max as usize,
            sigma0,
            sigma1,
        })
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    /// `sigma_r(n)`, or `None` outside the table.
    pub fn get(&self, r: u32, n: usize) -> Option<u128> {
        let col = match r {
            0 => &self.sigma0,
            1 => &self.sigma1,
            _ => return None,
        };
        n.checked_sub(1).and_then(|i| col.get(i)).copied()
    }

    /// Rows `(n, sigma_0(n), sigma_1(n))`.
    pub fn rows(&self) -> impl Iterator<Item = (usize, u128, u128)> + '_ {
        (1..=self.n_max).map(|n| (n, self.sigma0[n - 1], self.sigma1[n - 1]))
    }
}

/// q-expansion coefficients `c_0..c_n` of `sum_{k=1}^n q^k/(1 - q^k)`.
///
/// Each geometric term is expanded separately and the results added, which
/// avoids forming the combined rational function.
pub fn divisor_series(n: i64) -> Result<Vec<Rational>> {
    if n < 1 {
        return Err(Error::Domain(format!("divisor series needs n >= 1, got {n}")));
    }
    let order = n as usize;
    let mut acc = vec![Rational::zero(); order + 1];
    for k in 1..=order {
        let term = RatFunc::new(
            Poly::monomial(Rational::one(), k),
            Poly::one() - Poly::monomial(Rational::one(), k),
        )?;
        for (slot, c) in acc.iter_mut().zip(term.q_expand(order)?) {
            *slot += c;
        }
    }
    Ok(acc)
}

/// Checks that the coefficient of `q^j` in `sum_{k=1}^n q^k/(1 - q^k)` is
/// `sigma_0(j)` for `1 <= j <= n`, and that the constant term vanishes.
pub fn divisor_series_check(n: i64) -> Result<VerificationOutcome> {
    let coeffs = divisor_series(n)?;
    let mut mismatch = None;
    for (j, c) in coeffs.iter().enumerate() {
        let expected = if j == 0 { 0 } else { sigma(0, j as i64)? };
        let expected = Rational::from_integer(expected.into());
        if c != &expected {
            mismatch = Some(WitnessTerm::from_ratfunc(j, &RatFunc::from_rational(c - expected)));
            break;
        }
    }
    let witness = mismatch.map(|t| Witness {
        relation: "[q^j] sum q^k/(1-q^k) = sigma_0(j)".into(),
        terms: vec![t],
    });
    Ok(VerificationOutcome::from_witness(
        IdentitySpec::new(Identity::Divisor).n(n),
        witness,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn gcd(a: i64, b: i64) -> i64 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }

    fn is_prime(n: i64) -> bool {
        n >= 2 && (2..n).all(|d| n % d != 0)
    }

    #[test]
    fn sigma_examples() {
        assert_eq!(sigma(0, 1).unwrap(), 1);
        assert_eq!(sigma(0, 6).unwrap(), 4);
        assert_eq!(sigma(1, 6).unwrap(), 12);
        assert_eq!(sigma(1, 1).unwrap(), 1);
        assert_eq!(sigma(0, 36).unwrap(), 9);
        assert!(sigma(0, 0).is_err());
        assert!(sigma(2, 6).is_err());
    }

    #[test]
    fn sigma_matches_naive_count() {
        for n in 1..=200i64 {
            let divs: Vec<i64> = (1..=n).filter(|d| n % d == 0).collect();
            assert_eq!(sigma(0, n).unwrap(), divs.len() as u128);
            assert_eq!(sigma(1, n).unwrap(), divs.iter().sum::<i64>() as u128);
        }
    }

    #[test]
    fn table_invariants() {
        let t = DivisorTable::new(100).unwrap();
        for (n, s0, s1) in t.rows() {
            assert!(s0 >= 1);
            assert_eq!(s0 == 2, is_prime(n as i64), "n = {n}");
            if n >= 2 {
                assert!(s1 > n as u128);
            }
            if is_prime(n as i64) {
                assert_eq!(s1, n as u128 + 1);
            }
        }
        assert_eq!(t.get(1, 1), Some(1));
        assert_eq!(t.get(0, 0), None);
        assert_eq!(t.get(0, 101), None);
        assert!(DivisorTable::new(0).is_err());
    }

    #[test]
    fn series_examples() {
        assert_eq!(divisor_series(1).unwrap(), vec![Rational::zero(), Rational::one()]);
        assert_eq!(divisor_series(4).unwrap()[4], Rational::from_integer(3.into()));
        let twelve: Vec<i64> = divisor_series(12).unwrap()[1..]
            .iter()
            .map(|c| c.to_integer().try_into().unwrap())
            .collect();
        assert_eq!(twelve, vec![1, 2, 2, 3, 2, 4, 2, 4, 3, 4, 2, 6]);
        assert!(divisor_series(0).is_err());
    }

    #[test]
    fn series_check_up_to_64() {
        for n in 1..=64 {
            assert!(divisor_series_check(n).unwrap().passed, "n = {n}");
        }
    }

    proptest! {
        #[test]
        fn sigma_multiplicative(m in 1i64..500, n in 1i64..500) {
            prop_assume!(gcd(m, n) == 1);
            for r in 0..=1 {
                prop_assert_eq!(sigma(r, m * n).unwrap(), sigma(r, m).unwrap() * sigma(r, n).unwrap());
            }
        }
    }
}
