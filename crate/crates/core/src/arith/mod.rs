//! Exact arithmetic over Q and Q(q).
//!
//! [`Rational`] is the scalar, [`Poly`] a dense polynomial in `q`,
//! [`RatFunc`] a canonical element of Q(q), [`TruncSeries`] a truncated
//! power series in an auxiliary variable and [`PolyInX`] a polynomial in the
//! auxiliary variable `x`. The last two carry [`RatFunc`] coefficients.
//! [`Fraction`] is an unreduced quotient for gcd-free bulk arithmetic.

mod fraction;
mod poly;
mod polyx;
mod ratfunc;
mod rational;
mod series;

pub use fraction::Fraction;
pub use poly::{poly_gcd, Poly};
pub use polyx::PolyInX;
pub use ratfunc::RatFunc;
pub use rational::{format_rational, parse_rational, rat, Rational};
pub use series::TruncSeries;
