//! Unreduced quotients with a factored denominator.
//!
//! A [`Fraction`] is `num / prod_f f^e` where each `f` is a monic polynomial
//! kept as a separate factor (powers of `q` are split off as the factor `q`).
//! Sums take the exponentwise maximum of the factor lists, which is a common
//! multiple of the denominators, so no polynomial gcd is ever computed.
//! Equality is decided by cross-multiplication and [`Fraction::reduce`]
//! produces the canonical [`RatFunc`] when one is needed.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use super::{Poly, RatFunc, Rational};
use crate::error::{Error, Result};

type Factors = BTreeMap<Vec<Rational>, u32>;

#[derive(Clone, Debug)]
pub struct Fraction {
    num: Poly,
    den: Factors,
}

impl Fraction {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        Fraction::from_poly(num).div_poly(&den, 1)
    }

    pub fn zero() -> Self {
        Fraction::from_poly(Poly::zero())
    }

    pub fn one() -> Self {
        Fraction::from_poly(Poly::one())
    }

    pub fn from_poly(p: Poly) -> Self {
        Fraction {
            num: p,
            den: Factors::new(),
        }
    }

    /// `c q^k` for any integer `k`.
    pub fn monomial(c: Rational, k: i64) -> Self {
        let f = Fraction::from_poly(Poly::monomial(c, k.max(0) as usize));
        if k >= 0 {
            f
        } else {
            f.div_poly(&Poly::q(), k.unsigned_abs() as u32).expect("q is nonzero")
        }
    }

    /// `self / d^e`, recording `d` as a denominator factor.
    pub fn div_poly(mut self, d: &Poly, e: u32) -> Result<Self> {
        if d.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if e == 0 {
            return Ok(self);
        }
        let low = d.coeffs().iter().take_while(|c| c.is_zero()).count();
        if low > 0 {
            *self.den.entry(Poly::q().coeffs().to_vec()).or_default() += low as u32 * e;
        }
        let rest = Poly::from_coeffs(d.coeffs()[low..].to_vec());
        let lead = rest.leading().expect("nonzero").clone();
        self.num = self.num.scale(&lead.recip().pow(e as i32));
        if !rest.is_constant() {
            *self.den.entry(rest.monic().coeffs().to_vec()).or_default() += e;
        }
        Ok(self)
    }

    /// `self / prod_{j=0}^{n-1} (1 - w q^(start+j))`, one factor at a time.
    pub fn div_pochhammer(self, w: &Rational, start: usize, n: usize) -> Result<Self> {
        (start..start + n).try_fold(self, |f, k| {
            f.div_poly(&(Poly::one() - Poly::monomial(w.clone(), k)), 1)
        })
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    /// The denominator multiplied out.
    pub fn den(&self) -> Poly {
        expand(&self.den)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Numerators of `self` and `other` over the common factor list.
    fn common(&self, other: &Fraction) -> (Poly, Poly, Factors) {
        let mut lcm = self.den.clone();
        for (f, &e) in &other.den {
            let slot = lcm.entry(f.clone()).or_default();
            *slot = (*slot).max(e);
        }
        let lift = |x: &Fraction| &x.num * &expand_missing(&lcm, &x.den);
        (lift(self), lift(other), lcm)
    }

    /// `true` when both quotients denote the same element of Q(q).
    pub fn value_eq(&self, other: &Fraction) -> bool {
        let (a, b, _) = self.common(other);
        a == b
    }

    pub fn mul_poly(&self, p: &Poly) -> Fraction {
        Fraction {
            num: &self.num * p,
            den: self.den.clone(),
        }
    }

    pub fn recip(&self) -> Result<Fraction> {
        Fraction::from_poly(self.den()).div_poly(&self.num, 1)
    }

    pub fn checked_div(&self, other: &Fraction) -> Result<Fraction> {
        Fraction {
            num: &self.num * &other.den(),
            den: self.den.clone(),
        }
        .div_poly(&other.num, 1)
    }

    pub fn pow(&self, e: u32) -> Fraction {
        Fraction {
            num: self.num.pow(e),
            den: self.den.iter().map(|(f, &k)| (f.clone(), k * e)).collect(),
        }
    }

    pub fn scale(&self, s: &Rational) -> Fraction {
        Fraction {
            num: self.num.scale(s),
            den: self.den.clone(),
        }
    }

    /// The canonical form.
    pub fn reduce(&self) -> RatFunc {
        RatFunc::new(self.num.clone(), self.den()).expect("denominator is nonzero")
    }

    fn add_impl(&self, other: &Fraction, negate: bool) -> Fraction {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if negate { -other } else { other.clone() };
        }
        let (a, b, den) = self.common(other);
        Fraction {
            num: if negate { a - b } else { a + b },
            den,
        }
    }
}

fn expand(factors: &Factors) -> Poly {
    factors
        .iter()
        .fold(Poly::one(), |acc, (f, &e)| acc * Poly::from_coeffs(f.clone()).pow(e))
}

/// `prod_f f^(full_f - part_f)`.
fn expand_missing(full: &Factors, part: &Factors) -> Poly {
    full.iter().fold(Poly::one(), |acc, (f, &e)| {
        let have = part.get(f).copied().unwrap_or(0);
        if e > have {
            acc * Poly::from_coeffs(f.clone()).pow(e - have)
        } else {
            acc
        }
    })
}

impl From<&RatFunc> for Fraction {
    fn from(f: &RatFunc) -> Self {
        Fraction::new(f.num().clone(), f.den().clone()).expect("canonical denominators are nonzero")
    }
}

impl From<Poly> for Fraction {
    fn from(p: Poly) -> Self {
        Fraction::from_poly(p)
    }
}

impl Add<&Fraction> for &Fraction {
    type Output = Fraction;
    fn add(self, rhs: &Fraction) -> Fraction {
        self.add_impl(rhs, false)
    }
}

impl Sub<&Fraction> for &Fraction {
    type Output = Fraction;
    fn sub(self, rhs: &Fraction) -> Fraction {
        self.add_impl(rhs, true)
    }
}

impl Mul<&Fraction> for &Fraction {
    type Output = Fraction;
    fn mul(self, rhs: &Fraction) -> Fraction {
        let mut den = self.den.clone();
        for (f, &e) in &rhs.den {
            *den.entry(f.clone()).or_default() += e;
        }
        Fraction {
            num: &self.num * &rhs.num,
            den,
        }
    }
}

impl Mul for Fraction {
    type Output = Fraction;
    fn mul(self, rhs: Fraction) -> Fraction {
        &self * &rhs
    }
}

impl Neg for &Fraction {
    type Output = Fraction;
    fn neg(self) -> Fraction {
        Fraction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl std::iter::Sum for Fraction {
    fn sum<I: Iterator<Item = Fraction>>(iter: I) -> Fraction {
        iter.fold(Fraction::zero(), |acc, f| &acc + &f)
    }
}
