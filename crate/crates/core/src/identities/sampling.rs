//! Deterministic seeded sampling of parameters and argument lists.
//!
//! Each suite cell draws from its own ChaCha stream, so results do not
//! depend on evaluation order or thread count.

use std::sync::OnceLock;

use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::outcome::ParamTuple;
use crate::arith::{Poly, RatFunc, Rational};
use crate::symfunc::ArgList;

/// Reduced rationals `p/r` with `1 <= |p| <= 9`, `1 <= r <= 9`, sorted.
pub fn rational_pool() -> &'static [Rational] {
    static POOL: OnceLock<Vec<Rational>> = OnceLock::new();
    POOL.get_or_init(|| {
        let mut v: Vec<Rational> = (1..=9i64)
            .flat_map(|p| {
                (1..=9i64).flat_map(move |r| [Rational::new(p.into(), r.into()), Rational::new((-p).into(), r.into())])
            })
            .collect();
        v.sort();
        v.dedup();
        v
    })
}

/// The symbolic part of the argument pool: `q, q^2, 1/(1-q), q/(1-q)`.
pub fn symbolic_args() -> Vec<RatFunc> {
    let one_minus_q = Poly::from_ints(&[1, -1]);
    vec![
        RatFunc::q(),
        RatFunc::q_pow(2),
        RatFunc::new(Poly::one(), one_minus_q.clone()).expect("nonzero"),
        RatFunc::new(Poly::q(), one_minus_q).expect("nonzero"),
    ]
}

pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    /// Stream `stream` of the generator seeded with `seed`.
    pub fn new(seed: u64, stream: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        Sampler { rng }
    }

    pub fn rational(&mut self) -> Rational {
        let pool = rational_pool();
        pool[self.rng.gen_range(0..pool.len())].clone()
    }

    /// A pool rational other than 1.
    pub fn z_not_one(&mut self) -> Rational {
        loop {
            let z = self.rational();
            if !z.is_one() {
                return z;
            }
        }
    }

    /// Parameters off the singular locus `az = bc`, with `c != 0`.
    pub fn params(&mut self) -> ParamTuple {
        loop {
            let p = ParamTuple::new(self.rational(), self.rational(), self.rational(), self.rational());
            if !p.resultant().is_zero() && !p.c.is_zero() {
                return p;
            }
        }
    }

    /// One argument: a symbolic pool element or a rational constant, with equal odds.
    pub fn arg(&mut self) -> RatFunc {
        if self.rng.gen_bool(0.5) {
            let sym = symbolic_args();
            sym[self.rng.gen_range(0..sym.len())].clone()
        } else {
            RatFunc::from_rational(self.rational())
        }
    }

    pub fn arglist(&mut self, len: usize) -> ArgList {
        ArgList::new((0..len).map(|_| self.arg()).collect())
    }

    /// Argument list with pairwise distinct, nonzero entries.
    pub fn distinct_arglist(&mut self, len: usize) -> ArgList {
        let mut out: Vec<RatFunc> = Vec::with_capacity(len);
        while out.len() < len {
            let a = self.arg();
            if !a.is_zero() && !out.contains(&a) {
                out.push(a);
            }
        }
        ArgList::new(out)
    }
}
