use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::arith::{format_rational, Fraction, PolyInX, RatFunc, Rational, TruncSeries};
use crate::error::{Error, Result};

/// Every identity the engine knows how to check.
///
/// The serialized names are the identifiers accepted by `qident verify --identity`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Identity {
    /// `h_series == h_direct` on sampled argument lists.
    #[serde(rename = "hsym")]
    HsymOracle,
    /// Partial-fraction expansion of `prod 1/(1 - a_k z)`.
    #[serde(rename = "eq1")]
    PartialFraction,
    /// `h_tau` as a sum over the poles `a_k`.
    #[serde(rename = "eq2")]
    PoleSum,
    /// Closed form of `h_tau` at `(a - b q^k)/(c - z q^k)`, `k = i..n`.
    #[serde(rename = "eq3")]
    Master,
    /// The `i = 1` case of [`Identity::Master`] indexed by `(n, m)`, `tau = m - n + 1`.
    #[serde(rename = "eq4")]
    MasterFirstIndex,
    /// Polynomial identity in `x` whose coefficients are `A_i(z)`.
    #[serde(rename = "eq6")]
    XPoly,
    /// Coefficient of `x^i` in [`Identity::XPoly`] as a double Gaussian-binomial sum.
    #[serde(rename = "eq7")]
    XCoeff,
    /// Dilcher's alternating sum equals `h_m(q/(1-q), ..., q^n/(1-q^n))`.
    #[serde(rename = "dilcher")]
    Dilcher,
    /// Alternating sum equal to `(q)_n / (z)_{n+1}`.
    #[serde(rename = "pf_corollary")]
    PfCorollary,
    /// [`Identity::XPoly`] at `z = 1`.
    #[serde(rename = "eq8")]
    XPolyUnitZ,
    /// Simple-pole polynomial identity in `x` (exponent one).
    #[serde(rename = "eq9")]
    XPolySimplePole,
    /// Divisor counts as q-expansion coefficients of `sum q^k/(1-q^k)`.
    #[serde(rename = "divisor")]
    Divisor,
}

impl Identity {
    pub const ALL: [Identity; 12] = [
        Identity::HsymOracle,
        Identity::PartialFraction,
        Identity::PoleSum,
        Identity::Master,
        Identity::MasterFirstIndex,
        Identity::XPoly,
        Identity::XCoeff,
        Identity::Dilcher,
        Identity::PfCorollary,
        Identity::XPolyUnitZ,
        Identity::XPolySimplePole,
        Identity::Divisor,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::HsymOracle => "hsym",
            Identity::PartialFraction => "eq1",
            Identity::PoleSum => "eq2",
            Identity::Master => "eq3",
            Identity::MasterFirstIndex => "eq4",
            Identity::XPoly => "eq6",
            Identity::XCoeff => "eq7",
            Identity::Dilcher => "dilcher",
            Identity::PfCorollary => "pf_corollary",
            Identity::XPolyUnitZ => "eq8",
            Identity::XPolySimplePole => "eq9",
            Identity::Divisor => "divisor",
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Identity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Identity::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::Domain(format!("unknown identity '{s}'")))
    }
}

/// Concrete values substituted for the parameters `a, b, c, z`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ParamTuple {
    #[serde(with = "rational_str")]
    pub a: Rational,
    #[serde(with = "rational_str")]
    pub b: Rational,
    #[serde(with = "rational_str")]
    pub c: Rational,
    #[serde(with = "rational_str")]
    pub z: Rational,
}

impl ParamTuple {
    pub fn new(a: Rational, b: Rational, c: Rational, z: Rational) -> Self {
        ParamTuple { a, b, c, z }
    }

    pub fn from_ints(a: i64, b: i64, c: i64, z: i64) -> Self {
        let r = |x: i64| Rational::from_integer(x.into());
        ParamTuple::new(r(a), r(b), r(c), r(z))
    }

    /// `a*z - b*c`, whose power sits in a denominator of the closed form.
    pub fn resultant(&self) -> Rational {
        &self.a * &self.z - &self.b * &self.c
    }

    /// Rejects parameters where `c - z q^k` is the zero polynomial.
    pub fn validate(&self) -> Result<()> {
        if self.c.is_zero() && self.z.is_zero() {
            return Err(Error::Domain("c and z are both zero".into()));
        }
        Ok(())
    }
}

impl fmt::Display for ParamTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(a={}, b={}, c={}, z={})",
            format_rational(&self.a),
            format_rational(&self.b),
            format_rational(&self.c),
            format_rational(&self.z)
        )
    }
}

/// Degree bounds and grid size used by the interpolation-grid proof.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridInfo {
    /// Per-parameter degree bounds for `a, b, c, z`.
    pub degree_bounds: [usize; 4],
    /// Total number of grid points evaluated.
    pub points: usize,
}

/// Which instance of an identity was checked.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentitySpec {
    pub name: Identity,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub n: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub i: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub tau: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub m: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub params: Option<ParamTuple>,
    #[serde(skip_serializing_if = "Option::is_none", default, with = "opt_rational_str")]
    pub z: Option<Rational>,
    /// Argument list for the symmetric-function checks, rendered as strings.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub args: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub grid: Option<GridInfo>,
}

impl IdentitySpec {
    pub fn new(name: Identity) -> Self {
        IdentitySpec {
            name,
            n: None,
            i: None,
            tau: None,
            m: None,
            params: None,
            z: None,
            args: None,
            grid: None,
        }
    }

    pub fn n(mut self, n: i64) -> Self {
        self.n = Some(n);
        self
    }

    pub fn i(mut self, i: i64) -> Self {
        self.i = Some(i);
        self
    }

    pub fn tau(mut self, tau: i64) -> Self {
        self.tau = Some(tau);
        self
    }

    pub fn m(mut self, m: i64) -> Self {
        self.m = Some(m);
        self
    }

    pub fn params(mut self, p: &ParamTuple) -> Self {
        self.params = Some(p.clone());
        self
    }

    pub fn z(mut self, z: &Rational) -> Self {
        self.z = Some(z.clone());
        self
    }

    pub fn args(mut self, args: &[RatFunc]) -> Self {
        self.args = Some(args.iter().map(ToString::to_string).collect());
        self
    }
}

/// One term of a failure witness: the canonical form of `LHS - RHS` at a
/// given power of the auxiliary variable.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessTerm {
    pub index: usize,
    pub num: Vec<String>,
    pub den: Vec<String>,
}

impl WitnessTerm {
    pub fn from_ratfunc(index: usize, f: &RatFunc) -> Self {
        WitnessTerm {
            index,
            num: f.num().coeffs().iter().map(format_rational).collect(),
            den: f.den().coeffs().iter().map(format_rational).collect(),
        }
    }
}

/// Canonical difference `LHS - RHS` of a failed comparison.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    /// Which equality of the identity failed.
    pub relation: String,
    pub terms: Vec<WitnessTerm>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationOutcome {
    pub passed: bool,
    pub identity: Identity,
    pub spec: IdentitySpec,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Witness>,
}

impl VerificationOutcome {
    /// Builds the outcome from the first failing relation, if any.
    pub fn from_witness(spec: IdentitySpec, witness: Option<Witness>) -> Self {
        VerificationOutcome {
            passed: witness.is_none(),
            identity: spec.name,
            spec,
            witness,
        }
    }
}

/// `None` if `lhs == rhs`, else the witness for `lhs - rhs`.
pub fn compare_ratfunc(relation: &str, lhs: &RatFunc, rhs: &RatFunc) -> Option<Witness> {
    if lhs == rhs {
        return None;
    }
    Some(Witness {
        relation: relation.to_string(),
        terms: vec![WitnessTerm::from_ratfunc(0, &(lhs - rhs))],
    })
}

/// Like [`compare_ratfunc`], deciding equality by cross-multiplication and
/// reducing only to build a witness.
pub fn compare_fraction(relation: &str, lhs: &Fraction, rhs: &Fraction) -> Option<Witness> {
    if lhs.value_eq(rhs) {
        return None;
    }
    compare_ratfunc(relation, &lhs.reduce(), &rhs.reduce())
}

/// Compares coefficient lists of polynomials in `x` held as unreduced
/// fractions; the witness lists every nonzero coefficient of the difference.
pub fn compare_fraction_coeffs(relation: &str, lhs: &[Fraction], rhs: &[Fraction]) -> Option<Witness> {
    let zero = Fraction::zero();
    let len = lhs.len().max(rhs.len());
    let at = |v: &[Fraction], i: usize| v.get(i).cloned().unwrap_or_else(|| zero.clone());
    if (0..len).all(|i| at(lhs, i).value_eq(&at(rhs, i))) {
        return None;
    }
    let terms = (0..len)
        .map(|i| (i, (&at(lhs, i) - &at(rhs, i)).reduce()))
        .filter(|(_, d)| !d.is_zero())
        .map(|(i, d)| WitnessTerm::from_ratfunc(i, &d))
        .collect();
    Some(Witness {
        relation: relation.to_string(),
        terms,
    })
}

/// Compares polynomials in `x`; the witness lists every nonzero coefficient of the difference.
pub fn compare_polyx(relation: &str, lhs: &PolyInX, rhs: &PolyInX) -> Option<Witness> {
    if lhs == rhs {
        return None;
    }
    let diff = lhs - rhs;
    let terms = diff
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| WitnessTerm::from_ratfunc(i, c))
        .collect();
    Some(Witness {
        relation: relation.to_string(),
        terms,
    })
}

/// Compares series coefficient by coefficient; the witness is the first differing coefficient.
pub fn compare_series(relation: &str, lhs: &TruncSeries, rhs: &TruncSeries) -> Option<Witness> {
    lhs.coeffs()
        .iter()
        .zip(rhs.coeffs())
        .enumerate()
        .find(|(_, (l, r))| l != r)
        .map(|(t, (l, r))| Witness {
            relation: relation.to_string(),
            terms: vec![WitnessTerm::from_ratfunc(t, &(l - r))],
        })
}

pub(crate) mod rational_str {
    use serde::{de, Deserialize, Deserializer, Serializer};

    use crate::arith::{format_rational, parse_rational, Rational};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).ok_or_else(|| de::Error::custom(format!("bad rational '{s}'")))
    }
}

pub(crate) mod opt_rational_str {
    use serde::{de, Deserialize, Deserializer, Serializer};

    use crate::arith::{format_rational, parse_rational, Rational};

    pub fn serialize<S: Serializer>(r: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
        match r {
            Some(r) => s.serialize_str(&format_rational(r)),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Rational>, D::Error> {
        let s = Option::<String>::deserialize(d)?;
        s.map(|s| parse_rational(&s).ok_or_else(|| de::Error::custom(format!("bad rational '{s}'"))))
            .transpose()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_names_round_trip() {
        for id in Identity::ALL {
            assert_eq!(id.name().parse::<Identity>().unwrap(), id);
            let json = serde_json::to_string(&id).unwrap();
            assert_eq!(json, format!("\"{}\"", id.name()));
        }
        assert!("eq5".parse::<Identity>().is_err());
    }

    #[test]
    fn witness_is_canonical_difference() {
        let lhs = RatFunc::q();
        let rhs = RatFunc::one();
        let w = compare_ratfunc("lhs = rhs", &lhs, &rhs).unwrap();
        assert_eq!(w.terms[0].num, vec!["-1", "1"]);
        assert_eq!(w.terms[0].den, vec!["1"]);
        assert!(compare_ratfunc("x", &lhs, &lhs).is_none());
    }

    #[test]
    fn params_serialize_as_strings() {
        let p = ParamTuple::new(
            crate::arith::rat(1, 2),
            crate::arith::rat(-3, 1),
            crate::arith::rat(1, 1),
            crate::arith::rat(0, 1),
        );
        let json = serde_json::to_value(&p).unwrap();
        assert_eq!(json["a"], "1/2");
        assert_eq!(json["b"], "-3");
        let back: ParamTuple = serde_json::from_value(json).unwrap();
        assert_eq!(back, p);
    }
}
