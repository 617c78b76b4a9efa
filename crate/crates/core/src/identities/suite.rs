//! Suite runner: enumerates identity instances over index ranges and
//! seeded samples, evaluates them in parallel and reports in a fixed order.

use num_traits::One;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::master::{master_check, master_first_index_check, master_first_index_grid_proof};
use super::outcome::{Identity, IdentitySpec, VerificationOutcome, Witness};
use super::sampling::Sampler;
use super::xpoly::{
    dilcher_check, pf_corollary_check, x_coeff_check, x_poly_check, x_poly_check_mutated, x_poly_simple_pole_check,
    x_poly_unit_z_check,
};
use crate::divisor::divisor_series_check;
use crate::error::Result;
use crate::symfunc::{h_oracle_check, partial_fraction_check, pole_sum_check};

/// Inclusive integer range `lo..=hi`; empty when `lo > hi`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(from = "[i64; 2]", into = "[i64; 2]")]
pub struct IntRange {
    pub lo: i64,
    pub hi: i64,
}

impl IntRange {
    pub const fn new(lo: i64, hi: i64) -> Self {
        IntRange { lo, hi }
    }

    pub fn is_empty(&self) -> bool {
        self.lo > self.hi
    }

    /// The range intersected with `lo..`.
    pub fn at_least(&self, lo: i64) -> std::ops::RangeInclusive<i64> {
        self.lo.max(lo)..=self.hi
    }

    pub fn iter(&self) -> std::ops::RangeInclusive<i64> {
        self.lo..=self.hi
    }
}

impl From<[i64; 2]> for IntRange {
    fn from([lo, hi]: [i64; 2]) -> Self {
        IntRange { lo, hi }
    }
}

impl From<IntRange> for [i64; 2] {
    fn from(r: IntRange) -> Self {
        [r.lo, r.hi]
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SuiteConfig {
    pub identities: Vec<Identity>,
    pub n_range: IntRange,
    pub m_range: IntRange,
    pub tau_range: IntRange,
    pub samples: usize,
    pub seed: u64,
    pub grid_proof: bool,
    pub output: OutputFormat,
    /// Corrupts one exponent of the x-polynomial identity so the suite must fail.
    #[serde(skip)]
    pub mutate: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            identities: Identity::ALL.to_vec(),
            n_range: IntRange::new(0, 6),
            m_range: IntRange::new(1, 4),
            tau_range: IntRange::new(0, 4),
            samples: 5,
            seed: 0,
            grid_proof: false,
            output: OutputFormat::Text,
            mutate: false,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EntryStatus {
    Pass,
    Fail,
    Skip,
}

/// One line of the report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteEntry {
    pub identity: Identity,
    pub spec: IdentitySpec,
    pub status: EntryStatus,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Witness>,
}

type Job = Box<dyn Fn() -> Result<VerificationOutcome> + Send + Sync>;

struct Cell {
    spec: IdentitySpec,
    job: Job,
}

impl Cell {
    fn new(spec: IdentitySpec, job: impl Fn() -> Result<VerificationOutcome> + Send + Sync + 'static) -> Self {
        Cell {
            spec,
            job: Box::new(job),
        }
    }

    fn run(self) -> SuiteEntry {
        match (self.job)() {
            Ok(out) => SuiteEntry {
                identity: out.identity,
                status: if out.passed {
                    EntryStatus::Pass
                } else {
                    EntryStatus::Fail
                },
                spec: out.spec,
                reason: None,
                witness: out.witness,
            },
            Err(e) => SuiteEntry {
                identity: self.spec.name,
                spec: self.spec,
                status: EntryStatus::Skip,
                reason: Some(e.to_string()),
                witness: None,
            },
        }
    }
}

/// Hands out consecutive generator streams, one per sampled instance.
struct Streams {
    seed: u64,
    next: u64,
}

impl Streams {
    fn next(&mut self) -> Sampler {
        let s = Sampler::new(self.seed, self.next);
        self.next += 1;
        s
    }
}

fn cells(config: &SuiteConfig) -> Vec<Cell> {
    let mut out = Vec::new();
    let mut streams = Streams {
        seed: config.seed,
        next: 0,
    };
    let samples = config.samples;
    let (nr, mr, tr) = (config.n_range, config.m_range, config.tau_range);

    for &id in &config.identities {
        let spec = IdentitySpec::new(id);
        match id {
            Identity::HsymOracle => {
                for n in nr.at_least(0) {
                    for tau in tr.iter() {
                        for _ in 0..samples {
                            let a = streams.next().arglist(n as usize);
                            out.push(Cell::new(spec.clone().n(n).tau(tau), move || {
                                Ok(h_oracle_check(&a, tau))
                            }));
                        }
                    }
                }
            }
            Identity::PartialFraction => {
                for n in nr.at_least(1) {
                    for order in tr.at_least(0) {
                        for _ in 0..samples {
                            let a = streams.next().distinct_arglist(n as usize);
                            out.push(Cell::new(spec.clone().n(n).tau(order), move || {
                                partial_fraction_check(&a, order as usize)
                            }));
                        }
                    }
                }
            }
            Identity::PoleSum => {
                for n in nr.at_least(1) {
                    for tau in tr.at_least(1) {
                        for _ in 0..samples {
                            let a = streams.next().distinct_arglist(n as usize);
                            out.push(Cell::new(spec.clone().n(n).tau(tau), move || pole_sum_check(&a, tau)));
                        }
                    }
                }
            }
            Identity::Master => {
                for n in nr.at_least(1) {
                    for i in 1..=n {
                        for tau in tr.iter() {
                            for _ in 0..samples {
                                let p = streams.next().params();
                                let s = spec.clone().n(n).i(i).tau(tau).params(&p);
                                out.push(Cell::new(s, move || master_check(&p, i, n, tau)));
                            }
                        }
                    }
                }
            }
            Identity::MasterFirstIndex => {
                for n in nr.at_least(1) {
                    for m in mr.iter() {
                        for _ in 0..samples {
                            let p = streams.next().params();
                            let s = spec.clone().n(n).m(m).params(&p);
                            out.push(Cell::new(s, move || master_first_index_check(&p, n, m)));
                        }
                        if config.grid_proof {
                            out.push(Cell::new(spec.clone().n(n).m(m), move || {
                                master_first_index_grid_proof(n, m)
                            }));
                        }
                    }
                }
            }
            Identity::XPoly => {
                let mutate = config.mutate;
                for n in nr.at_least(1) {
                    for m in mr.at_least(1) {
                        for _ in 0..samples {
                            let z = streams.next().rational();
                            let s = spec.clone().n(n).m(m).z(&z);
                            out.push(Cell::new(s, move || {
                                if mutate {
                                    x_poly_check_mutated(&z, n, m)
                                } else {
                                    x_poly_check(&z, n, m)
                                }
                            }));
                        }
                    }
                }
            }
            Identity::XCoeff => {
                for n in nr.at_least(1) {
                    for m in mr.at_least(1) {
                        for i in 1..=n {
                            for _ in 0..samples {
                                let z = streams.next().rational();
                                let s = spec.clone().n(n).m(m).i(i).z(&z);
                                out.push(Cell::new(s, move || x_coeff_check(&z, i, n, m)));
                            }
                        }
                    }
                }
            }
            Identity::Dilcher => {
                for n in nr.at_least(1) {
                    for m in mr.at_least(1) {
                        out.push(Cell::new(spec.clone().n(n).m(m), move || dilcher_check(n, m)));
                    }
                }
            }
            Identity::PfCorollary => {
                for n in nr.at_least(0) {
                    for _ in 0..samples {
                        let z = streams.next().z_not_one();
                        out.push(Cell::new(spec.clone().n(n).z(&z), move || pf_corollary_check(&z, n)));
                    }
                }
            }
            Identity::XPolyUnitZ => {
                for n in nr.at_least(1) {
                    for m in mr.at_least(1) {
                        let z = crate::arith::Rational::one();
                        out.push(Cell::new(spec.clone().n(n).m(m).z(&z), move || {
                            x_poly_unit_z_check(n, m)
                        }));
                    }
                }
            }
            Identity::XPolySimplePole => {
                for n in nr.at_least(0) {
                    for _ in 0..samples {
                        let z = streams.next().z_not_one();
                        out.push(Cell::new(spec.clone().n(n).z(&z), move || {
                            x_poly_simple_pole_check(&z, n)
                        }));
                    }
                }
            }
            Identity::Divisor => {
                for n in nr.at_least(1) {
                    out.push(Cell::new(spec.clone().n(n), move || divisor_series_check(n)));
                }
            }
        }
    }
    out
}

/// Runs every configured identity instance.
///
/// Instances are independent and evaluated in parallel; the returned order is
/// the enumeration order, which depends only on the configuration. Domain
/// errors become [`EntryStatus::Skip`] entries carrying the error message.
pub fn verify_suite(config: &SuiteConfig) -> Vec<SuiteEntry> {
    cells(config).into_par_iter().map(Cell::run).collect()
}
