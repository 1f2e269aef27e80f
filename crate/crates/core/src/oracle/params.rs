use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Coin denominations: a nonempty, sorted list of positive integers with
/// overall gcd 1. Repeated values are kept, since they change how many
/// representations an integer has.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<u64>")]
pub struct Params(Vec<u64>);

/// Checks positivity and coprimality, then sorts.
pub fn validate_params(raw: &[i64]) -> Result<Params> {
    if raw.is_empty() {
        return Err(Error::EmptyList);
    }
    if let Some(&bad) = raw.iter().find(|&&v| v <= 0) {
        return Err(Error::NonPositive(bad));
    }
    checked(raw.iter().map(|&v| v as u64).collect())
}

fn checked(mut den: Vec<u64>) -> Result<Params> {
    den.sort_unstable();
    let g = den.iter().fold(0u64, |g, &v| g.gcd(&v));
    if g != 1 {
        return Err(Error::NotCoprime(g));
    }
    Ok(Params(den))
}

impl Params {
    pub fn new(raw: &[i64]) -> Result<Self> {
        validate_params(raw)
    }

    pub fn from_unsigned(raw: &[u64]) -> Result<Self> {
        if raw.is_empty() {
            return Err(Error::EmptyList);
        }
        if raw.contains(&0) {
            return Err(Error::NonPositive(0));
        }
        checked(raw.to_vec())
    }

    pub fn denominations(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn smallest(&self) -> u64 {
        self.0[0]
    }

    pub fn largest(&self) -> u64 {
        *self.0.last().expect("nonempty")
    }

    pub fn sum(&self) -> u64 {
        self.0.iter().sum()
    }
}

impl TryFrom<Vec<i64>> for Params {
    type Error = Error;
    fn try_from(raw: Vec<i64>) -> Result<Self> {
        validate_params(&raw)
    }
}

impl From<Params> for Vec<u64> {
    fn from(p: Params) -> Self {
        p.0
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u64::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}
