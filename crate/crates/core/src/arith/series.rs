use std::ops::{Add, Sub};

use super::ratfunc::RatFunc;
use crate::error::{Error, Result};

/// Power series in an auxiliary variable, truncated after the `order`-th term.
///
/// Coefficients live in Q(q). The coefficient vector always has exactly
/// `order + 1` entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncSeries {
    order: usize,
    coeffs: Vec<RatFunc>,
}

impl TruncSeries {
    pub fn new(order: usize, coeffs: Vec<RatFunc>) -> Result<Self> {
        if coeffs.len() != order + 1 {
            return Err(Error::SeriesLength {
                len: coeffs.len(),
                expected: order + 1,
            });
        }
        Ok(TruncSeries { order, coeffs })
    }

    pub fn zero(order: usize) -> Self {
        TruncSeries {
            order,
            coeffs: vec![RatFunc::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = RatFunc::one();
        s
    }

    /// Expansion of `1 / (1 - a*z)`: coefficient `t` is `a^t`.
    pub fn geometric(a: &RatFunc, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut cur = RatFunc::one();
        for t in 0..=order {
            if t > 0 {
                cur = &cur * a;
            }
            coeffs.push(cur.clone());
        }
        TruncSeries { order, coeffs }
    }

    /// Expansion of `c / (1 - a*z)`.
    pub fn scaled_geometric(c: &RatFunc, a: &RatFunc, order: usize) -> Self {
        Self::geometric(a, order).scale(c)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[RatFunc] {
        &self.coeffs
    }

    pub fn coeff(&self, t: usize) -> &RatFunc {
        &self.coeffs[t]
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        TruncSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Truncated Cauchy product.
    pub fn mul(&self, other: &TruncSeries) -> Result<Self> {
        self.check_order(other)?;
        let coeffs = (0..=self.order)
            .map(|t| {
                (0..=t)
                    .filter(|&j| !self.coeffs[j].is_zero() && !other.coeffs[t - j].is_zero())
                    .map(|j| &self.coeffs[j] * &other.coeffs[t - j])
                    .sum()
            })
            .collect();
        Ok(TruncSeries {
            order: self.order,
            coeffs,
        })
    }

    pub fn try_add(&self, other: &TruncSeries) -> Result<Self> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn try_sub(&self, other: &TruncSeries) -> Result<Self> {
        self.zip_with(other, |a, b| a - b)
    }

    fn zip_with(&self, other: &TruncSeries, f: impl Fn(&RatFunc, &RatFunc) -> RatFunc) -> Result<Self> {
        self.check_order(other)?;
        Ok(TruncSeries {
            order: self.order,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| f(a, b)).collect(),
        })
    }

    fn check_order(&self, other: &TruncSeries) -> Result<()> {
        if self.order != other.order {
            return Err(Error::OrderMismatch(self.order, other.order));
        }
        Ok(())
    }
}

impl Add<&TruncSeries> for &TruncSeries {
    type Output = TruncSeries;
    /// Panics on mismatched orders; use [`TruncSeries::try_add`] otherwise.
    fn add(self, rhs: &TruncSeries) -> TruncSeries {
        self.try_add(rhs).expect("matching series orders")
    }
}

impl Sub<&TruncSeries> for &TruncSeries {
    type Output = TruncSeries;
    fn sub(self, rhs: &TruncSeries) -> TruncSeries {
        self.try_sub(rhs).expect("matching series orders")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, Poly};
    use proptest::prelude::*;

    fn c(n: i64) -> RatFunc {
        RatFunc::from_int(n)
    }

    #[test]
    fn geometric_examples() {
        let q = RatFunc::q();
        let s = TruncSeries::geometric(&q, 2);
        assert_eq!(s.coeffs(), &[RatFunc::one(), q.clone(), RatFunc::q_pow(2)]);

        let s = TruncSeries::geometric(&RatFunc::zero(), 3);
        assert_eq!(s, TruncSeries::one(3));

        let a = RatFunc::new(Poly::q(), Poly::from_ints(&[1, -1])).unwrap();
        let s = TruncSeries::geometric(&a, 2);
        let sq = RatFunc::new(Poly::from_ints(&[0, 0, 1]), Poly::from_ints(&[1, -2, 1])).unwrap();
        assert_eq!(s.coeff(2), &sq);
    }

    #[test]
    fn scaled_geometric() {
        let s = TruncSeries::scaled_geometric(&c(3), &c(2), 2);
        assert_eq!(s.coeffs(), &[c(3), c(6), c(12)]);
    }

    #[test]
    fn mul_examples() {
        let q = RatFunc::q();
        let s = TruncSeries::new(1, vec![RatFunc::one(), q.clone()]).unwrap();
        let prod = s.mul(&s).unwrap();
        assert_eq!(prod.coeffs(), &[RatFunc::one(), RatFunc::monomial(rat(2, 1), 1)]);

        assert_eq!(s.mul(&TruncSeries::one(1)).unwrap(), s);

        let a1 = RatFunc::new(Poly::one(), Poly::from_ints(&[1, 1])).unwrap();
        let a2 = RatFunc::from_rational(rat(5, 3));
        let s1 = TruncSeries::geometric(&a1, 1);
        let s2 = TruncSeries::geometric(&a2, 1);
        assert_eq!(s1.mul(&s2).unwrap().coeff(1), &(&a1 + &a2));
    }

    #[test]
    fn order_and_length_checks() {
        assert_eq!(
            TruncSeries::one(2).mul(&TruncSeries::one(3)),
            Err(Error::OrderMismatch(2, 3))
        );
        assert!(matches!(
            TruncSeries::new(2, vec![RatFunc::one()]),
            Err(Error::SeriesLength { len: 1, expected: 3 })
        ));
    }

    fn series(order: usize) -> impl Strategy<Value = TruncSeries> {
        prop::collection::vec((-3i64..=3, 0usize..3, 1i64..=2), order + 1).prop_map(move |v| {
            let coeffs = v
                .into_iter()
                .map(|(n, k, d)| RatFunc::new(Poly::monomial(rat(n, 1), k), Poly::from_ints(&[1, -d])).unwrap())
                .collect();
            TruncSeries::new(order, coeffs).unwrap()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn mul_commutative_associative(a in series(3), b in series(3), c in series(3)) {
            prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
            prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
        }
    }
}
