//! Truncated power series in q over the integers and over `ℤ[α]`, with the
//! product and summation builders the identities are made of.

pub mod builders;
pub mod interp;
pub mod pochhammer;
pub mod poly;
pub mod series;

use std::fmt;

use num_bigint::BigInt;
use serde::{Serialize, Serializer};

pub use interp::{signed_interpretation, InterpretationId};
pub use pochhammer::{Monomial, QPochhammer};
pub use poly::Poly;
pub use series::{AlphaTarget, BiSeries, Coefficient, PowerSeries, Series};

/// Either kind of series, for code that handles both (verifier, CLI).
#[derive(Debug, Clone, PartialEq)]
pub enum AnySeries {
    Uni(Series),
    Bi(BiSeries),
}

/// One coefficient of either kind of series.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoeffValue {
    Int(BigInt),
    Poly(Poly),
}

impl fmt::Display for CoeffValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoeffValue::Int(c) => c.fmt(f),
            CoeffValue::Poly(p) => p.fmt(f),
        }
    }
}

/// Bare integer, or the α-coefficient array constant term first.
impl Serialize for CoeffValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            CoeffValue::Int(c) => series::serialize_bigint(c, s),
            CoeffValue::Poly(p) => series::serialize_poly(p, s),
        }
    }
}

/// Lowest power at which two series disagree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub power: usize,
    pub left: CoeffValue,
    pub right: CoeffValue,
}

impl AnySeries {
    pub fn order(&self) -> usize {
        match self {
            AnySeries::Uni(s) => s.order(),
            AnySeries::Bi(s) => s.order(),
        }
    }

    pub fn is_bivariate(&self) -> bool {
        matches!(self, AnySeries::Bi(_))
    }

    /// Lowest differing power; a univariate side is lifted to constant
    /// α-polynomials when compared with a bivariate one.
    pub fn first_mismatch(&self, other: &AnySeries) -> Option<Mismatch> {
        let poly = |(power, l, r)| Mismatch { power, left: CoeffValue::Poly(l), right: CoeffValue::Poly(r) };
        match (self, other) {
            (AnySeries::Uni(a), AnySeries::Uni(b)) => a.first_mismatch(b).map(|(power, l, r)| Mismatch {
                power,
                left: CoeffValue::Int(l),
                right: CoeffValue::Int(r),
            }),
            (AnySeries::Bi(a), AnySeries::Bi(b)) => a.first_mismatch(b).map(poly),
            (AnySeries::Uni(a), AnySeries::Bi(b)) => a.lift().first_mismatch(b).map(poly),
            (AnySeries::Bi(a), AnySeries::Uni(b)) => a.first_mismatch(&b.lift()).map(poly),
        }
    }

    pub fn to_json(&self) -> String {
        match self {
            AnySeries::Uni(s) => s.to_json(),
            AnySeries::Bi(s) => s.to_json(),
        }
    }
}

impl fmt::Display for AnySeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AnySeries::Uni(s) => s.fmt(f),
            AnySeries::Bi(s) => s.fmt(f),
        }
    }
}

impl Serialize for AnySeries {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            AnySeries::Uni(x) => x.serialize(s),
            AnySeries::Bi(x) => x.serialize(s),
        }
    }
}

impl From<Series> for AnySeries {
    fn from(s: Series) -> Self {
        AnySeries::Uni(s)
    }
}

impl From<BiSeries> for AnySeries {
    fn from(s: BiSeries) -> Self {
        AnySeries::Bi(s)
    }
}
