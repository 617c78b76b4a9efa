//! q-Pochhammer symbols, Gaussian binomial coefficients and the q-binomial
//! expansion of `(x-1)(x-q)...(x-q^(N-1))`.

use std::sync::OnceLock;

use num_traits::{One, Zero};

use crate::arith::{Poly, PolyInX, RatFunc, Rational};
use crate::error::{Error, Result};

/// `C(k, 2) = k(k-1)/2`, for use as a q-exponent.
pub fn binom2(k: i64) -> i64 {
    k * (k - 1) / 2
}

/// `(x)_n = (1-x)(1-xq)...(1-xq^(n-1))`, with `(x)_0 = 1`.
pub fn pochhammer(x: &RatFunc, n: i64) -> Result<RatFunc> {
    if n < 0 {
        return Err(Error::IndexRange(format!("pochhammer length n = {n} < 0")));
    }
    let one = RatFunc::one();
    let mut acc = RatFunc::one();
    let mut xq = x.clone();
    for j in 0..n {
        if j > 0 {
            xq = &xq * &RatFunc::q();
        }
        acc = &acc * &(&one - &xq);
        if acc.is_zero() {
            break;
        }
    }
    Ok(acc)
}

/// `(q^start)_n` as a polynomial: `prod_{j=0}^{n-1} (1 - q^(start+j))`.
pub fn q_shifted_factorial(start: usize, n: usize) -> Poly {
    (0..n).fold(Poly::one(), |acc, j| {
        acc * (Poly::one() - Poly::monomial(Rational::one(), start + j))
    })
}

/// `(q)_n` as a polynomial.
pub fn q_factorial(n: usize) -> Poly {
    q_shifted_factorial(1, n)
}

/// Gaussian binomial `[n, k] = (q^(n-k+1))_k / (q)_k`.
///
/// Out-of-range `k` gives the zero polynomial so that sums can run over
/// their written bounds; negative `n` is an error.
pub fn gauss_binomial(n: i64, k: i64) -> Result<Poly> {
    if n < 0 {
        return Err(Error::IndexRange(format!("gaussian binomial with n = {n} < 0")));
    }
    if k < 0 || k > n {
        return Ok(Poly::zero());
    }
    let (n, k) = (n as usize, k as usize);
    let num = q_shifted_factorial(n - k + 1, k);
    let den = q_factorial(k);
    let (quot, rem) = num.div_rem(&den)?;
    assert!(rem.is_zero(), "gaussian binomial quotient must be exact");
    Ok(quot)
}

/// Triangular memo of Gaussian binomials `[n, k]` for `0 <= k <= n <= n_max`.
#[derive(Clone, Debug)]
pub struct QBinomTable {
    n_max: usize,
    rows: Vec<Vec<Poly>>,
}

const SHARED_N_MAX: usize = 24;

impl QBinomTable {
    /// Builds rows with the recurrence `[n, k] = [n-1, k-1] + q^k [n-1, k]`.
    pub fn new(n_max: usize) -> Self {
        let mut rows: Vec<Vec<Poly>> = vec![vec![Poly::one()]];
        for n in 1..=n_max {
            let prev = &rows[n - 1];
            let row = (0..=n)
                .map(|k| {
                    let left = if k > 0 { prev[k - 1].clone() } else { Poly::zero() };
                    let right = if k < n { prev[k].shift(k) } else { Poly::zero() };
                    left + right
                })
                .collect();
            rows.push(row);
        }
        QBinomTable { n_max, rows }
    }

    /// Process-wide table covering `n <= 24`, built on first use.
    pub fn shared() -> &'static QBinomTable {
        static TABLE: OnceLock<QBinomTable> = OnceLock::new();
        TABLE.get_or_init(|| QBinomTable::new(SHARED_N_MAX))
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    /// `[n, k]`, zero outside `0 <= k <= n`. Panics if `n > n_max`.
    pub fn get(&self, n: i64, k: i64) -> &Poly {
        static ZERO: Poly = Poly::zero();
        assert!(n >= 0 && (n as usize) <= self.n_max, "n = {n} outside table");
        if k < 0 || k > n {
            return &ZERO;
        }
        &self.rows[n as usize][k as usize]
    }
}

/// `[n, k]` for `n >= 0`, served from the shared table when possible.
pub fn gauss_poly(n: i64, k: i64) -> Poly {
    if (0..=SHARED_N_MAX as i64).contains(&n) {
        QBinomTable::shared().get(n, k).clone()
    } else {
        gauss_binomial(n, k).expect("nonnegative n")
    }
}

/// [`gauss_poly`] as a rational function.
pub fn gauss(n: i64, k: i64) -> RatFunc {
    RatFunc::from_poly(gauss_poly(n, k))
}

/// `sum_{j=0}^N [N, j] (-1)^(N-j) q^C(N-j, 2) x^j`, the expansion of
/// `(x-1)(x-q)...(x-q^(N-1))`.
pub fn qbinomial_expand(big_n: i64) -> Result<PolyInX> {
    if big_n < 0 {
        return Err(Error::IndexRange(format!("q-binomial expansion with N = {big_n} < 0")));
    }
    let coeffs = (0..=big_n)
        .map(|j| {
            let sign = if (big_n - j) % 2 == 0 {
                Rational::one()
            } else {
                -Rational::one()
            };
            let e = binom2(big_n - j) as usize;
            Ok(RatFunc::from_poly(gauss_binomial(big_n, j)?.shift(e).scale(&sign)))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(PolyInX::from_coeffs(coeffs))
}

/// `(x-1)(x-q)...(x-q^(k-1))` as an iterated product of linear factors.
pub fn falling_product(k: usize) -> PolyInX {
    (0..k).fold(PolyInX::one(), |acc, j| acc * PolyInX::linear(RatFunc::q_pow(j as i64)))
}

/// `true` when every coefficient is a nonnegative integer.
pub fn has_nonnegative_integer_coeffs(p: &Poly) -> bool {
    p.coeffs().iter().all(|c| c.is_integer() && c >= &Rational::zero())
}
