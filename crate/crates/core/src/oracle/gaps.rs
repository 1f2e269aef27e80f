use num_bigint::{BigInt, BigUint};
use num_traits::Pow;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{rep_table, Limits, Params, RepTable};
use crate::error::{Error, Result};
use crate::report::{Provenance, Stat, StatReport};

/// A sorted set of nonnegative integers selected by representation count.
///
/// `complete` is set only when the set is certified to contain every
/// qualifying integer, not just those up to some bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GapSet {
    pub params: Params,
    pub k: u64,
    pub complete: bool,
    pub elements: Vec<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Select {
    Exactly,
    AtMost,
}

impl Select {
    fn keeps(self, count: &BigUint, k: &BigUint) -> bool {
        match self {
            Select::Exactly => count == k,
            Select::AtMost => count <= k,
        }
    }

    fn describe(self) -> &'static str {
        match self {
            Select::Exactly => "exactly",
            Select::AtMost => "at most",
        }
    }
}

/// All integers with exactly `k` representations.
///
/// With a `bound`, returns those up to the bound and marks the set complete
/// only if the table up to the bound also certifies that nothing larger
/// qualifies. Without one, the table grows geometrically from
/// `(k+1) a_1 a_n` until the certificate appears.
pub fn enumerate_exact_k(
    params: &Params,
    k: u64,
    bound: Option<u64>,
    limits: &Limits,
) -> Result<GapSet> {
    enumerate(params, k, bound, limits, Select::Exactly)
}

/// All integers with at most `k` representations; see [`enumerate_exact_k`].
pub fn enumerate_at_most_k(
    params: &Params,
    k: u64,
    bound: Option<u64>,
    limits: &Limits,
) -> Result<GapSet> {
    enumerate(params, k, bound, limits, Select::AtMost)
}

fn collect(table: &RepTable, k: u64, upto: u64, select: Select) -> Vec<u64> {
    let kk = BigUint::from(k);
    table.counts()[..=upto as usize]
        .iter()
        .enumerate()
        .filter(|(_, c)| select.keeps(c, &kk))
        .map(|(j, _)| j as u64)
        .collect()
}

fn enumerate(
    params: &Params,
    k: u64,
    bound: Option<u64>,
    limits: &Limits,
    select: Select,
) -> Result<GapSet> {
    // A single denomination is 1 by coprimality, and then every integer has
    // exactly one representation: the selected set is either empty or all
    // of Z>=0.
    let single = params.len() == 1;
    let infinite = single
        && match select {
            Select::Exactly => k == 1,
            Select::AtMost => k >= 1,
        };

    if let Some(bound) = bound {
        let table = rep_table(params, bound, limits)?;
        let (elements, complete) = match table.saturation_start(k) {
            Some(start) if start == 0 => (Vec::new(), true),
            Some(start) => (collect(&table, k, start - 1, select), true),
            None => (collect(&table, k, bound, select), single && !infinite),
        };
        return Ok(GapSet {
            params: params.clone(),
            k,
            complete,
            elements,
        });
    }

    if single {
        if infinite {
            return Err(Error::InfiniteSet {
                predicate: select.describe(),
                k,
            });
        }
        return Ok(GapSet {
            params: params.clone(),
            k,
            complete: true,
            elements: Vec::new(),
        });
    }

    let start = (k + 1)
        .checked_mul(params.smallest())
        .and_then(|v| v.checked_mul(params.largest()))
        .unwrap_or(u64::MAX);
    let mut bound = start.min(limits.max_bound);
    loop {
        let table = rep_table(params, bound, limits)?;
        if let Some(start) = table.saturation_start(k) {
            let elements = match start {
                0 => Vec::new(),
                s => collect(&table, k, s - 1, select),
            };
            return Ok(GapSet {
                params: params.clone(),
                k,
                complete: true,
                elements,
            });
        }
        if bound >= limits.max_bound {
            return Err(Error::Indeterminate {
                k,
                limit: limits.max_bound,
            });
        }
        bound = bound.saturating_mul(2).max(1).min(limits.max_bound);
    }
}

/// Cardinality, power sum and maximum of a [`GapSet`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GapStats {
    pub count: BigUint,
    pub m: u32,
    /// `sum_j j^m` over the elements; with `0^0 = 1`.
    pub power_sum: BigUint,
    max: Option<u64>,
    complete: bool,
}

impl GapStats {
    /// Largest element, `None` for the empty set. Only meaningful for a set
    /// certified complete.
    pub fn max(&self) -> Result<Option<u64>> {
        if self.complete {
            Ok(self.max)
        } else {
            Err(Error::IncompleteSet)
        }
    }
}

/// Exact statistics over the elements present in `set`.
pub fn oracle_stats(set: &GapSet, m: u32) -> GapStats {
    GapStats {
        count: BigUint::from(set.elements.len()),
        m,
        power_sum: set
            .elements
            .iter()
            .map(|&j| Pow::pow(BigUint::from(j), m))
            .sum(),
        max: set.elements.last().copied(),
        complete: set.complete,
    }
}

impl GapSet {
    pub fn stats(&self, m: u32) -> GapStats {
        oracle_stats(self, m)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, j: u64) -> bool {
        self.elements.binary_search(&j).is_ok()
    }

    /// Oracle-provenance report of one statistic over this set. For the
    /// at-most variants the set must come from [`enumerate_at_most_k`].
    pub fn report(&self, stat: Stat, m: Option<u32>) -> Result<StatReport> {
        let stats = self.stats(m.unwrap_or(1));
        let value = match stat {
            Stat::Max | Stat::MaxAtMost => stats.max()?.map(BigInt::from),
            Stat::Count | Stat::CountAtMost => Some(BigInt::from(stats.count)),
            Stat::Sum | Stat::SumAtMost => Some(BigInt::from(self.stats(1).power_sum)),
            Stat::PowerSum => Some(BigInt::from(stats.power_sum)),
        };
        Ok(StatReport {
            stat,
            params: self.params.denominations().to_vec(),
            k: self.k,
            m: if stat == Stat::PowerSum { m } else { None },
            value,
            provenance: Provenance::Oracle,
        })
    }
}

#[derive(Serialize, Deserialize)]
struct Wire {
    params: Params,
    k: u64,
    complete: bool,
    elements: Vec<String>,
}

/// `{"params":[...], "k":K, "complete":bool, "elements":["..", ...]}`.
impl Serialize for GapSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        Wire {
            params: self.params.clone(),
            k: self.k,
            complete: self.complete,
            elements: self.elements.iter().map(u64::to_string).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for GapSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let w = Wire::deserialize(deserializer)?;
        let elements = w
            .elements
            .iter()
            .map(|e| e.parse::<u64>().map_err(D::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        if elements.windows(2).any(|p| p[0] >= p[1]) {
            return Err(D::Error::custom("elements must be strictly increasing"));
        }
        Ok(GapSet {
            params: w.params,
            k: w.k,
            complete: w.complete,
            elements,
        })
    }
}
