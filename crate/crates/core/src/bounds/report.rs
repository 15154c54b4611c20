use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::Rational;

/// Identifier of one certified bound. The string forms are the stable
/// identifiers used on the command line and in reports.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BoundId {
    /// `γ_st <= n - 2⌊(2ρ_o + δ - 3)/2⌋` for `δ >= 3`.
    OpenPacking,
    /// `γ_st <= n - 2 L_{⌊(δ-1)/2⌋,t}`.
    TotalLimitedPacking,
    /// `γ_st(T) <= n - 2(s - s')` for trees.
    TreeSupport,
    /// `γ_st <= 2n/3` for connected cubic graphs other than Heawood.
    Cubic,
    /// Crossing-edge sandwich for an STDF.
    PartitionCross,
    /// Edge-count inequality for an STDF.
    PartitionEdges,
    DegreeRatio,
    MaxDegree,
    MinDegree,
    /// `2n/r` or `n/r` for `r`-regular graphs.
    Regular,
    /// `-n + 2 max{⌈(Δ+3)/2⌉, ⌈(2γ_t + δ - 1)/2⌉}`.
    TotalDomination,
    TuranEdges,
    /// Square-root bound for `K_{r+1}`-free graphs.
    CliqueFree,
}

impl BoundId {
    pub const ALL: [BoundId; 13] = [
        BoundId::OpenPacking,
        BoundId::TotalLimitedPacking,
        BoundId::TreeSupport,
        BoundId::Cubic,
        BoundId::PartitionCross,
        BoundId::PartitionEdges,
        BoundId::DegreeRatio,
        BoundId::MaxDegree,
        BoundId::MinDegree,
        BoundId::Regular,
        BoundId::TotalDomination,
        BoundId::TuranEdges,
        BoundId::CliqueFree,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            BoundId::OpenPacking => "THM21",
            BoundId::TotalLimitedPacking => "EQ1",
            BoundId::TreeSupport => "THM22",
            BoundId::Cubic => "THM24",
            BoundId::PartitionCross => "LEM31A",
            BoundId::PartitionEdges => "LEM31B",
            BoundId::DegreeRatio => "THM32I",
            BoundId::MaxDegree => "THM32II",
            BoundId::MinDegree => "THM32III",
            BoundId::Regular => "ZELINKA",
            BoundId::TotalDomination => "THM33",
            BoundId::TuranEdges => "TURAN_EDGES",
            BoundId::CliqueFree => "THM37",
        }
    }

    pub fn direction(self) -> Direction {
        match self {
            BoundId::OpenPacking
            | BoundId::TotalLimitedPacking
            | BoundId::TreeSupport
            | BoundId::Cubic
            | BoundId::PartitionCross
            | BoundId::PartitionEdges
            | BoundId::TuranEdges => Direction::Upper,
            _ => Direction::Lower,
        }
    }
}

impl fmt::Display for BoundId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for BoundId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let wanted = s.trim().to_ascii_uppercase();
        BoundId::ALL
            .into_iter()
            .find(|id| id.as_str() == wanted)
            .ok_or_else(|| Error::Malformed(format!("unknown bound id `{s}`")))
    }
}

impl Serialize for BoundId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    /// The exact value must not exceed the bound.
    Upper,
    /// The exact value must be at least the bound.
    Lower,
}

/// A bound value: exact rational, or a float for the square-root bound.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum BoundValue {
    Exact(Rational),
    Real(f64),
}

impl BoundValue {
    pub fn to_f64(self) -> f64 {
        match self {
            BoundValue::Exact(r) => *r.numer() as f64 / *r.denom() as f64,
            BoundValue::Real(x) => x,
        }
    }

    pub fn integer(v: i64) -> Self {
        BoundValue::Exact(Rational::from_integer(v))
    }
}

impl fmt::Display for BoundValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundValue::Exact(r) => write!(f, "{r}"),
            BoundValue::Real(x) => write!(f, "{x:.9}"),
        }
    }
}

impl Serialize for BoundValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("BoundValue", 2)?;
        match self {
            BoundValue::Exact(r) => st.serialize_field("exact", &r.to_string())?,
            BoundValue::Real(_) => st.serialize_field("exact", &Option::<String>::None)?,
        }
        st.serialize_field("approx", &self.to_f64())?;
        st.end()
    }
}

/// An auxiliary relation evaluated alongside a bound.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SideCheck {
    pub name: &'static str,
    pub holds: bool,
    pub detail: String,
}

impl SideCheck {
    pub(crate) fn le(name: &'static str, lhs: i64, rhs: i64) -> Self {
        Self { name, holds: lhs <= rhs, detail: format!("{lhs} <= {rhs}") }
    }

    pub(crate) fn eq(name: &'static str, lhs: i64, rhs: i64) -> Self {
        Self { name, holds: lhs == rhs, detail: format!("{lhs} = {rhs}") }
    }
}

/// Outcome of evaluating one bound on one graph.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundReport {
    pub id: BoundId,
    pub direction: Direction,
    pub applicable: bool,
    /// Why the bound does not apply; present exactly when `applicable` is false.
    pub reason: Option<String>,
    pub bound: Option<BoundValue>,
    pub exact: Option<i64>,
    /// `None` when inapplicable.
    pub holds: Option<bool>,
    pub sharp: Option<bool>,
    /// Named integer parameters (`r`, `c`, `s`, `s_prime`, `rho_o`, ...).
    pub params: BTreeMap<&'static str, i64>,
    pub checks: Vec<SideCheck>,
}

impl BoundReport {
    pub(crate) fn inapplicable(id: BoundId, reason: impl Into<String>) -> Self {
        Self {
            id,
            direction: id.direction(),
            applicable: false,
            reason: Some(reason.into()),
            bound: None,
            exact: None,
            holds: None,
            sharp: None,
            params: BTreeMap::new(),
            checks: Vec::new(),
        }
    }

    /// Report for an exact rational bound. `holds` and `sharp` follow from
    /// the direction; sharp means equality.
    pub(crate) fn exact(id: BoundId, bound: Rational, exact: i64) -> Self {
        let e = Rational::from_integer(exact);
        let holds = match id.direction() {
            Direction::Upper => e <= bound,
            Direction::Lower => e >= bound,
        };
        Self {
            id,
            direction: id.direction(),
            applicable: true,
            reason: None,
            bound: Some(BoundValue::Exact(bound)),
            exact: Some(exact),
            holds: Some(holds),
            sharp: Some(e == bound),
            params: BTreeMap::new(),
            checks: Vec::new(),
        }
    }

    pub(crate) fn real(id: BoundId, bound: f64, exact: i64, holds: bool, sharp: bool) -> Self {
        Self {
            id,
            direction: id.direction(),
            applicable: true,
            reason: None,
            bound: Some(BoundValue::Real(bound)),
            exact: Some(exact),
            holds: Some(holds),
            sharp: Some(sharp),
            params: BTreeMap::new(),
            checks: Vec::new(),
        }
    }

    pub(crate) fn with_param(mut self, name: &'static str, v: i64) -> Self {
        self.params.insert(name, v);
        self
    }

    pub(crate) fn with_check(mut self, check: SideCheck) -> Self {
        self.checks.push(check);
        self
    }

    /// An applicable bound failed, or any side check failed.
    pub fn violated(&self) -> bool {
        self.holds == Some(false) || self.checks.iter().any(|c| !c.holds)
    }
}
