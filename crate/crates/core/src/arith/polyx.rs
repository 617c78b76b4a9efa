use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::ratfunc::RatFunc;

/// Polynomial in the auxiliary variable `x` with coefficients in Q(q).
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct PolyInX {
    coeffs: Vec<RatFunc>,
}

impl PolyInX {
    pub fn zero() -> Self {
        PolyInX { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(RatFunc::one())
    }

    pub fn x() -> Self {
        Self::monomial(RatFunc::one(), 1)
    }

    pub fn constant(c: RatFunc) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * x^deg`.
    pub fn monomial(c: RatFunc, deg: usize) -> Self {
        let mut coeffs = vec![RatFunc::zero(); deg + 1];
        coeffs[deg] = c;
        Self::from_coeffs(coeffs)
    }

    /// `x - root`.
    pub fn linear(root: RatFunc) -> Self {
        Self::from_coeffs(vec![-root, RatFunc::one()])
    }

    pub fn from_coeffs(mut coeffs: Vec<RatFunc>) -> Self {
        while coeffs.last().is_some_and(RatFunc::is_zero) {
            coeffs.pop();
        }
        PolyInX { coeffs }
    }

    pub fn coeffs(&self) -> &[RatFunc] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> RatFunc {
        self.coeffs.get(i).cloned().unwrap_or_else(RatFunc::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Substitutes a value for `x`.
    pub fn eval(&self, at: &RatFunc) -> RatFunc {
        self.coeffs
            .iter()
            .rev()
            .fold(RatFunc::zero(), |acc, c| &(&acc * at) + c)
    }

    fn add_impl(&self, other: &PolyInX, negate: bool) -> PolyInX {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| {
                let a = self.coeff(i);
                let b = other.coeff(i);
                if negate {
                    a - b
                } else {
                    a + b
                }
            })
            .collect();
        Self::from_coeffs(coeffs)
    }

    fn mul_impl(&self, other: &PolyInX) -> PolyInX {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![RatFunc::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = &out[i + j] + &(a * b);
                }
            }
        }
        Self::from_coeffs(out)
    }
}

impl fmt::Display for PolyInX {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "[{c}]")?,
                1 => write!(f, "[{c}]*x")?,
                _ => write!(f, "[{c}]*x^{i}")?,
            }
        }
        Ok(())
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl $tr<&PolyInX> for &PolyInX {
            type Output = PolyInX;
            fn $m(self, rhs: &PolyInX) -> PolyInX {
                $body(self, rhs)
            }
        }
        impl $tr<PolyInX> for PolyInX {
            type Output = PolyInX;
            fn $m(self, rhs: PolyInX) -> PolyInX {
                $body(&self, &rhs)
            }
        }
        impl $tr<&PolyInX> for PolyInX {
            type Output = PolyInX;
            fn $m(self, rhs: &PolyInX) -> PolyInX {
                $body(&self, rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a: &PolyInX, b: &PolyInX| a.add_impl(b, false));
forward_binop!(Sub, sub, |a: &PolyInX, b: &PolyInX| a.add_impl(b, true));
forward_binop!(Mul, mul, |a: &PolyInX, b: &PolyInX| a.mul_impl(b));

impl Neg for &PolyInX {
    type Output = PolyInX;
    fn neg(self) -> PolyInX {
        PolyInX {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl std::iter::Sum for PolyInX {
    fn sum<I: Iterator<Item = PolyInX>>(iter: I) -> PolyInX {
        iter.fold(PolyInX::zero(), |acc, x| acc + x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linear_factors_multiply() {
        // (x - 1)(x - q) = x^2 - (1+q)x + q
        let prod = PolyInX::linear(RatFunc::one()) * PolyInX::linear(RatFunc::q());
        assert_eq!(prod.degree(), Some(2));
        assert_eq!(prod.coeff(0), RatFunc::q());
        assert_eq!(prod.coeff(1), -(RatFunc::one() + RatFunc::q()));
        assert_eq!(prod.coeff(2), RatFunc::one());
    }

    #[test]
    fn trims_and_evaluates() {
        let p = PolyInX::from_coeffs(vec![RatFunc::one(), RatFunc::zero()]);
        assert_eq!(p.degree(), Some(0));
        let x_minus_one = PolyInX::linear(RatFunc::one());
        assert!(x_minus_one.eval(&RatFunc::one()).is_zero());
        assert!((&x_minus_one - &x_minus_one).is_zero());
    }
}
