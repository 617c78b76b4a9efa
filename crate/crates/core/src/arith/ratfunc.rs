use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::poly::{poly_gcd, Poly};
use super::rational::Rational;
use crate::error::{Error, Result};

/// Element of Q(q) in canonical form.
///
/// `gcd(num, den) = 1` and `den` is monic, so two rational functions are
/// equal exactly when their fields are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    /// Builds the canonical form of `num / den`.
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = poly_gcd(&num, &den)?;
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.exact_div(&g)?, den.exact_div(&g)?)
        };
        Ok(Self::normalized(num, den))
    }

    /// Moves the leading coefficient of `den` into `num`; assumes coprimality.
    fn normalized(num: Poly, den: Poly) -> Self {
        let lc = den.leading().expect("nonzero denominator").clone();
        if lc.is_one() {
            RatFunc { num, den }
        } else {
            let inv = lc.recip();
            RatFunc {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn zero() -> Self {
        RatFunc {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn q() -> Self {
        Self::from_poly(Poly::q())
    }

    /// `q^k`, with negative `k` giving `1 / q^|k|`.
    pub fn q_pow(k: i64) -> Self {
        let m = Poly::monomial(Rational::one(), k.unsigned_abs() as usize);
        if k >= 0 {
            Self::from_poly(m)
        } else {
            RatFunc {
                num: Poly::one(),
                den: m,
            }
        }
    }

    /// `c * q^k` for `k >= 0`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        Self::from_poly(Poly::monomial(c, k))
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFunc {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn from_rational(c: Rational) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_rational(Rational::from_integer(c.into()))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn scale(&self, s: &Rational) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        RatFunc {
            num: self.num.scale(s),
            den: self.den.clone(),
        }
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, other: &RatFunc) -> Result<Self> {
        Ok(self * &other.recip()?)
    }

    /// Exact integer power; `0^0 = 1`, `0^e` for `e < 0` is an error.
    pub fn pow(&self, e: i64) -> Result<Self> {
        if e < 0 {
            return self.recip().map(|r| r.powu(e.unsigned_abs() as u32));
        }
        Ok(self.powu(e as u32))
    }

    /// Nonnegative power. Coprimality is preserved, so no gcd is needed.
    pub fn powu(&self, e: u32) -> Self {
        if e == 0 {
            return Self::one();
        }
        RatFunc {
            num: self.num.pow(e),
            den: self.den.pow(e),
        }
    }

    /// Value at a rational point `q = at`, if the denominator does not vanish there.
    pub fn eval(&self, at: &Rational) -> Result<Rational> {
        let d = self.den.eval(at);
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.num.eval(at) / d)
    }

    /// First `order + 1` Taylor coefficients at `q = 0`.
    pub fn q_expand(&self, order: usize) -> Result<Vec<Rational>> {
        let d0 = self.den.constant_term();
        if d0.is_zero() {
            return Err(Error::PoleAtZero);
        }
        let inv = d0.recip();
        let den = self.den.coeffs();
        let mut out: Vec<Rational> = Vec::with_capacity(order + 1);
        for t in 0..=order {
            let mut acc = self.num.coeff(t);
            for j in 1..den.len().min(t + 1) {
                acc -= &den[j] * &out[t - j];
            }
            out.push(acc * &inv);
        }
        Ok(out)
    }

    fn add_impl(&self, other: &RatFunc, negate: bool) -> RatFunc {
        let rhs_num = if negate { -&other.num } else { other.num.clone() };
        if self.is_zero() {
            return RatFunc {
                num: rhs_num,
                den: other.den.clone(),
            };
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            let num = &self.num + &rhs_num;
            return Self::new(num, self.den.clone()).expect("nonzero denominator");
        }
        let g = poly_gcd(&self.den, &other.den).expect("nonzero denominators");
        let (b1, d1) = if g.is_one() {
            (self.den.clone(), other.den.clone())
        } else {
            (
                self.den.exact_div(&g).expect("gcd divides"),
                other.den.exact_div(&g).expect("gcd divides"),
            )
        };
        let num = &self.num * &d1 + &rhs_num * &b1;
        let den = &b1 * &other.den;
        if g.is_one() {
            // Coprime denominators: the sum is already reduced.
            if num.is_zero() {
                return Self::zero();
            }
            return Self::normalized(num, den);
        }
        Self::new(num, den).expect("nonzero denominator")
    }

    fn mul_impl(&self, other: &RatFunc) -> RatFunc {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let (a, d) = cancel(&self.num, &other.den);
        let (c, b) = cancel(&other.num, &self.den);
        Self::normalized(&a * &c, &b * &d)
    }
}

fn cancel(x: &Poly, y: &Poly) -> (Poly, Poly) {
    if x.is_constant() || y.is_constant() {
        return (x.clone(), y.clone());
    }
    let g = poly_gcd(x, y).expect("nonzero operands");
    if g.is_one() {
        (x.clone(), y.clone())
    } else {
        (
            x.exact_div(&g).expect("gcd divides"),
            y.exact_div(&g).expect("gcd divides"),
        )
    }
}

impl From<Poly> for RatFunc {
    fn from(p: Poly) -> Self {
        Self::from_poly(p)
    }
}

impl From<Rational> for RatFunc {
    fn from(c: Rational) -> Self {
        Self::from_rational(c)
    }
}

impl Default for RatFunc {
    fn default() -> Self {
        Self::zero()
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl $tr<&RatFunc> for &RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: &RatFunc) -> RatFunc {
                $body(self, rhs)
            }
        }
        impl $tr<RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc {
                $body(&self, &rhs)
            }
        }
        impl $tr<&RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: &RatFunc) -> RatFunc {
                $body(&self, rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a: &RatFunc, b: &RatFunc| a.add_impl(b, false));
forward_binop!(Sub, sub, |a: &RatFunc, b: &RatFunc| a.add_impl(b, true));
forward_binop!(Mul, mul, |a: &RatFunc, b: &RatFunc| a.mul_impl(b));

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

impl std::iter::Sum for RatFunc {
    fn sum<I: Iterator<Item = RatFunc>>(iter: I) -> RatFunc {
        iter.fold(RatFunc::zero(), |acc, x| acc + x)
    }
}

impl std::iter::Product for RatFunc {
    fn product<I: Iterator<Item = RatFunc>>(iter: I) -> RatFunc {
        iter.fold(RatFunc::one(), |acc, x| acc * x)
    }
}
