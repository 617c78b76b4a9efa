//! Complete homogeneous symmetric functions `h_tau(a_1, ..., a_N)`.
//!
//! Two independent algorithms are provided: [`h_direct`] enumerates every
//! multiset of size `tau` and serves as the oracle, while [`h_series`] reads
//! the coefficient of `z^tau` in `prod_k 1/(1 - a_k z)`. The partial-fraction
//! checks compare both against the pole-sum formulas.

use std::collections::HashSet;

use crate::arith::{Fraction, Poly, RatFunc, TruncSeries};
use crate::error::{Error, Result};
use crate::identities::outcome::{compare_ratfunc, compare_series, Identity, IdentitySpec, VerificationOutcome};

/// Ordered argument list `(a_1, ..., a_N)`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ArgList(Vec<RatFunc>);

impl ArgList {
    pub fn new(args: Vec<RatFunc>) -> Self {
        ArgList(args)
    }

    pub fn args(&self) -> &[RatFunc] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Structural check on canonical forms: nonempty, no zero, no repeats.
    pub fn require_distinct_nonzero(&self) -> Result<()> {
        if self.0.is_empty() {
            return Err(Error::IndexRange("argument list must be nonempty".into()));
        }
        let mut seen = HashSet::with_capacity(self.0.len());
        for a in &self.0 {
            if a.is_zero() || !seen.insert(a) {
                return Err(Error::RepeatedPoles);
            }
        }
        Ok(())
    }
}

impl From<Vec<RatFunc>> for ArgList {
    fn from(v: Vec<RatFunc>) -> Self {
        ArgList(v)
    }
}

/// Nondecreasing index tuples `1 <= i_1 <= ... <= i_tau <= n` (zero-based here),
/// in lexicographic order.
pub fn multisets(n: usize, tau: usize) -> Multisets {
    Multisets {
        n,
        current: if n == 0 && tau > 0 { None } else { Some(vec![0; tau]) },
    }
}

pub struct Multisets {
    n: usize,
    current: Option<Vec<usize>>,
}

impl Iterator for Multisets {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.take()?;
        // Advance: bump the rightmost index below n-1 and reset the tail to it.
        let mut next = out.clone();
        if let Some(pos) = next.iter().rposition(|&i| i + 1 < self.n) {
            let v = next[pos] + 1;
            for slot in &mut next[pos..] {
                *slot = v;
            }
            self.current = Some(next);
        }
        Some(out)
    }
}

/// Brute-force `h_tau`: sum of `a_{i_1} ... a_{i_tau}` over all multisets.
///
/// `h_0 = 1` (also for the empty list) and `h_tau = 0` for `tau < 0`.
pub fn h_direct(a: &ArgList, tau: i64) -> RatFunc {
    if tau < 0 {
        return RatFunc::zero();
    }
    multisets(a.len(), tau as usize)
        .map(|idx| idx.iter().map(|&i| a.0[i].clone()).product::<RatFunc>())
        .sum()
}

/// `h_tau` as the `z^tau` coefficient of `prod_k 1/(1 - a_k z)`.
pub fn h_series(a: &ArgList, tau: i64) -> RatFunc {
    h_series_fraction(a, tau).reduce()
}

/// [`h_series`] before reduction.
///
/// With `a_k = u_k/v_k`, each factor `1/(1 - a_k z)` truncated at `z^tau` and
/// multiplied by `v_k^tau` is `sum_e u_k^e v_k^(tau-e) z^e`, so the series
/// product runs over polynomials and the denominator is `prod_k v_k^tau`.
pub fn h_series_fraction(a: &ArgList, tau: i64) -> Fraction {
    if tau < 0 {
        return Fraction::zero();
    }
    let t = tau as usize;
    let mut acc = vec![Poly::zero(); t + 1];
    acc[0] = Poly::one();
    for ak in &a.0 {
        let (u, v) = (ak.num(), ak.den());
        // factor[e] = u^e v^(t-e)
        let mut u_pows = vec![Poly::one()];
        let mut v_pows = vec![Poly::one()];
        for _ in 0..t {
            u_pows.push(u_pows.last().expect("nonempty") * u);
            v_pows.push(v_pows.last().expect("nonempty") * v);
        }
        let factor: Vec<Poly> = (0..=t).map(|e| &u_pows[e] * &v_pows[t - e]).collect();
        acc = (0..=t)
            .map(|s| {
                (0..=s)
                    .map(|e| &acc[s - e] * &factor[e])
                    .fold(Poly::zero(), |x, y| x + y)
            })
            .collect();
    }
    a.0.iter().fold(Fraction::from_poly(acc.swap_remove(t)), |f, ak| {
        f.div_poly(ak.den(), t as u32)
            .expect("denominators of canonical forms are nonzero")
    })
}

/// `prod_k 1/(1 - a_k z)` truncated at `order`.
pub fn generating_series(a: &ArgList, order: usize) -> TruncSeries {
    a.0.iter().fold(TruncSeries::one(order), |acc, ak| {
        acc.mul(&TruncSeries::geometric(ak, order)).expect("same order")
    })
}

/// Residue weights `prod_{j != k} (1 - a_j/a_k)^{-1}`.
pub fn pole_weights(a: &ArgList) -> Result<Vec<RatFunc>> {
    a.require_distinct_nonzero()?;
    let one = RatFunc::one();
    a.0.iter()
        .enumerate()
        .map(|(k, ak)| {
            let inv_ak = ak.recip()?;
            let denom: RatFunc =
                a.0.iter()
                    .enumerate()
                    .filter(|&(j, _)| j != k)
                    .map(|(_, aj)| &one - &(aj * &inv_ak))
                    .product();
            denom.recip()
        })
        .collect()
}

/// `sum_k prod_{j != k}(1 - a_j/a_k)^{-1} a_k^tau`.
///
/// Defined for any `tau >= 0`; [`pole_sum_check`] only asserts it for `tau >= 1`.
pub fn pole_sum_rhs(a: &ArgList, tau: i64) -> Result<RatFunc> {
    if tau < 0 {
        return Err(Error::NegativeTau(tau));
    }
    let weights = pole_weights(a)?;
    Ok(weights.iter().zip(&a.0).map(|(w, ak)| w * &ak.powu(tau as u32)).sum())
}

/// Compares `prod_k 1/(1 - a_k z)` with `sum_k w_k/(1 - a_k z)` up to `z^order`.
pub fn partial_fraction_check(a: &ArgList, order: usize) -> Result<VerificationOutcome> {
    let weights = pole_weights(a)?;
    let lhs = generating_series(a, order);
    let rhs = weights.iter().zip(&a.0).fold(TruncSeries::zero(order), |acc, (w, ak)| {
        &acc + &TruncSeries::scaled_geometric(w, ak, order)
    });
    let spec = IdentitySpec::new(Identity::PartialFraction)
        .n(a.len() as i64)
        .tau(order as i64)
        .args(&a.0);
    Ok(VerificationOutcome::from_witness(
        spec,
        compare_series("prod 1/(1-a_k z) = sum w_k/(1-a_k z)", &lhs, &rhs),
    ))
}

/// Compares `h_direct(a, tau)` with the pole-sum formula, `tau >= 1`.
pub fn pole_sum_check(a: &ArgList, tau: i64) -> Result<VerificationOutcome> {
    if tau < 1 {
        return Err(Error::IndexRange(format!("pole-sum formula needs tau >= 1, got {tau}")));
    }
    let rhs = pole_sum_rhs(a, tau)?;
    let lhs = h_direct(a, tau);
    let spec = IdentitySpec::new(Identity::PoleSum)
        .n(a.len() as i64)
        .tau(tau)
        .args(&a.0);
    Ok(VerificationOutcome::from_witness(
        spec,
        compare_ratfunc("h_tau = sum w_k a_k^tau", &lhs, &rhs),
    ))
}

/// Compares the two `h_tau` algorithms.
pub fn h_oracle_check(a: &ArgList, tau: i64) -> VerificationOutcome {
    let spec = IdentitySpec::new(Identity::HsymOracle)
        .n(a.len() as i64)
        .tau(tau)
        .args(&a.0);
    VerificationOutcome::from_witness(
        spec,
        compare_ratfunc("h_series = h_direct", &h_series(a, tau), &h_direct(a, tau)),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn c(n: i64) -> RatFunc {
        RatFunc::from_int(n)
    }

    fn sym(name: &str) -> RatFunc {
        // Distinct "generic" arguments standing in for symbols.
        match name {
            "a1" => RatFunc::new(Poly::from_ints(&[1, 2]), Poly::from_ints(&[3, -1])).unwrap(),
            "a2" => RatFunc::new(Poly::from_ints(&[0, 0, 5]), Poly::from_ints(&[1, 1])).unwrap(),
            _ => unreachable!(),
        }
    }

    #[test]
    fn multisets_lexicographic() {
        let all: Vec<_> = multisets(3, 2).collect();
        assert_eq!(
            all,
            vec![vec![0, 0], vec![0, 1], vec![0, 2], vec![1, 1], vec![1, 2], vec![2, 2]]
        );
        assert_eq!(multisets(4, 0).count(), 1);
        assert_eq!(multisets(0, 0).count(), 1);
        assert_eq!(multisets(0, 2).count(), 0);
        assert_eq!(multisets(5, 3).count(), 35);
    }

    #[test]
    fn h_direct_examples() {
        let a = ArgList::new(vec![sym("a1"), sym("a2")]);
        assert_eq!(h_direct(&a, 0), RatFunc::one());
        assert_eq!(h_direct(&ArgList::default(), 0), RatFunc::one());
        assert_eq!(h_direct(&ArgList::default(), 2), RatFunc::zero());
        assert_eq!(h_direct(&a, 1), sym("a1") + sym("a2"));
        let (x, y) = (sym("a1"), sym("a2"));
        assert_eq!(h_direct(&a, 2), &(&x * &x) + &(&(&x * &y) + &(&y * &y)));
        assert_eq!(h_direct(&a, -1), RatFunc::zero());
    }

    #[test]
    fn h_series_examples() {
        let a = ArgList::new(vec![sym("a1"), sym("a2")]);
        assert_eq!(h_series(&a, 0), RatFunc::one());
        let single = ArgList::new(vec![sym("a1")]);
        assert_eq!(h_series(&single, 3), sym("a1").powu(3));
        let qs = ArgList::new(vec![RatFunc::q(), RatFunc::q_pow(2)]);
        assert_eq!(h_series(&qs, 2), RatFunc::from_poly(Poly::from_ints(&[0, 0, 1, 1, 1])));
        assert_eq!(h_series(&qs, -3), RatFunc::zero());
    }

    #[test]
    fn partial_fraction_constants() {
        let a = ArgList::new(vec![c(2), c(3)]);
        let out = partial_fraction_check(&a, 4).unwrap();
        assert!(out.passed);
        // Coefficient of z^t in 1/((1-2z)(1-3z)) is 3^(t+1) - 2^(t+1).
        let s = generating_series(&a, 4);
        for t in 0..=4u32 {
            assert_eq!(s.coeff(t as usize), &c(3i64.pow(t + 1) - 2i64.pow(t + 1)));
        }
    }

    #[test]
    fn partial_fraction_single_and_repeated() {
        let single = ArgList::new(vec![RatFunc::q()]);
        assert!(partial_fraction_check(&single, 5).unwrap().passed);
        let rep = ArgList::new(vec![RatFunc::q(), RatFunc::q()]);
        assert_eq!(partial_fraction_check(&rep, 3), Err(Error::RepeatedPoles));
        let zero = ArgList::new(vec![RatFunc::q(), RatFunc::zero()]);
        assert_eq!(partial_fraction_check(&zero, 3), Err(Error::RepeatedPoles));
    }

    #[test]
    fn pole_sum_examples() {
        let a = ArgList::new(vec![c(2), c(3)]);
        // 2/(1-3/2) + 3/(1-2/3) = -4 + 9 = 5
        assert_eq!(pole_sum_rhs(&a, 1).unwrap(), c(5));
        assert!(pole_sum_check(&a, 1).unwrap().passed);

        let qs = ArgList::new(vec![RatFunc::q(), RatFunc::q_pow(2)]);
        assert_eq!(
            pole_sum_rhs(&qs, 2).unwrap(),
            RatFunc::from_poly(Poly::from_ints(&[0, 0, 1, 1, 1]))
        );
        assert!(pole_sum_check(&qs, 2).unwrap().passed);

        let ones = ArgList::new(vec![c(1), c(1)]);
        assert_eq!(pole_sum_check(&ones, 1), Err(Error::RepeatedPoles));
        assert!(matches!(pole_sum_check(&a, 0), Err(Error::IndexRange(_))));
    }

    #[test]
    fn pole_sum_at_tau_zero_is_one() {
        // Not asserted by the pole-sum identity itself (tau >= 1); recorded as a
        // conjectural consequence of the constant coefficient of the partial fractions.
        let lists = [
            vec![c(2), c(3)],
            vec![RatFunc::q(), RatFunc::q_pow(2), RatFunc::from_rational(rat(1, 3))],
            vec![sym("a1"), sym("a2"), RatFunc::q()],
        ];
        for l in lists {
            assert_eq!(pole_sum_rhs(&ArgList::new(l), 0).unwrap(), RatFunc::one());
        }
    }
}
