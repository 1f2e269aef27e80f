//! Named exact results shared by the closed-form and oracle routes.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Stat {
    /// Largest element of `R_k`.
    #[serde(rename = "g")]
    Max,
    /// Cardinality of `R_k`.
    #[serde(rename = "c")]
    Count,
    /// Sum of `R_k`.
    #[serde(rename = "s")]
    Sum,
    /// `sum_{j in R_k} j^m`.
    #[serde(rename = "s^m")]
    PowerSum,
    /// Largest integer with at most `k` representations.
    #[serde(rename = "g<=")]
    MaxAtMost,
    #[serde(rename = "c<=")]
    CountAtMost,
    #[serde(rename = "s<=")]
    SumAtMost,
}

impl Stat {
    pub fn name(self) -> &'static str {
        match self {
            Stat::Max => "g",
            Stat::Count => "c",
            Stat::Sum => "s",
            Stat::PowerSum => "s^m",
            Stat::MaxAtMost => "g<=",
            Stat::CountAtMost => "c<=",
            Stat::SumAtMost => "s<=",
        }
    }

    pub fn is_at_most(self) -> bool {
        matches!(self, Stat::MaxAtMost | Stat::CountAtMost | Stat::SumAtMost)
    }
}

impl fmt::Display for Stat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Accepts the JSON names as well as shell-friendly spellings
/// (`sm`, `gle`, `cle`, `sle`).
impl FromStr for Stat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        Ok(match s {
            "g" => Stat::Max,
            "c" => Stat::Count,
            "s" => Stat::Sum,
            "sm" | "s^m" => Stat::PowerSum,
            "gle" | "g<=" => Stat::MaxAtMost,
            "cle" | "c<=" => Stat::CountAtMost,
            "sle" | "s<=" => Stat::SumAtMost,
            other => return Err(Error::Parse(format!("unknown statistic {other:?}"))),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    ClosedForm,
    Oracle,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::ClosedForm => "closed-form",
            Provenance::Oracle => "oracle",
        })
    }
}

/// One exact statistic. `value` is `None` only for the maximum of an empty
/// set; serialized output reports that as `-1` together with `"empty": true`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StatReport {
    pub stat: Stat,
    pub params: Vec<u64>,
    pub k: u64,
    pub m: Option<u32>,
    pub value: Option<BigInt>,
    pub provenance: Provenance,
}

impl StatReport {
    pub fn is_empty(&self) -> bool {
        self.value.is_none()
    }

    /// The value with the empty-set maximum mapped to `-1`.
    pub fn numeric(&self) -> BigInt {
        self.value.clone().unwrap_or_else(|| BigInt::from(-1))
    }
}

impl fmt::Display for StatReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params: Vec<String> = self.params.iter().map(u64::to_string).collect();
        let sub = if self.stat.is_at_most() {
            format!("<={}", self.k)
        } else {
            self.k.to_string()
        };
        let base = &self.stat.name()[..1];
        match self.m {
            Some(m) => write!(f, "{base}_{sub}^{m}({})", params.join(", "))?,
            None => write!(f, "{base}_{sub}({})", params.join(", "))?,
        }
        match &self.value {
            Some(v) => write!(f, " = {v}")?,
            None => f.write_str(" = none (empty set)")?,
        }
        write!(f, "  [{}]", self.provenance)
    }
}

fn is_false(b: &bool) -> bool {
    !*b
}

#[derive(Serialize, Deserialize)]
struct Wire {
    stat: Stat,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    a: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    b: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    params: Option<Vec<u64>>,
    k: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    m: Option<u32>,
    value: String,
    #[serde(default, skip_serializing_if = "is_false")]
    empty: bool,
    provenance: Provenance,
}

/// Two-parameter reports use `"a"`/`"b"` fields, others a `"params"` array.
impl Serialize for StatReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let (a, b, params) = match self.params.as_slice() {
            &[a, b] => (Some(a), Some(b), None),
            other => (None, None, Some(other.to_vec())),
        };
        Wire {
            stat: self.stat,
            a,
            b,
            params,
            k: self.k,
            m: self.m,
            value: self.numeric().to_string(),
            empty: self.is_empty(),
            provenance: self.provenance,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for StatReport {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let w = Wire::deserialize(deserializer)?;
        let params = match (w.a, w.b, w.params) {
            (Some(a), Some(b), None) => vec![a, b],
            (None, None, Some(p)) if p.len() != 2 => p,
            _ => return Err(D::Error::custom("expected either a/b or a params list")),
        };
        let value: BigInt = w.value.parse().map_err(D::Error::custom)?;
        Ok(StatReport {
            stat: w.stat,
            params,
            k: w.k,
            m: w.m,
            value: (!w.empty).then_some(value),
            provenance: w.provenance,
        })
    }
}
