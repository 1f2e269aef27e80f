use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::{Limits, Params};
use crate::error::{Error, Result};

/// Exact representation counts `r(a_1, ..., a_n; j)` for `0 <= j <= bound`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepTable {
    params: Params,
    counts: Vec<BigUint>,
}

/// Counts representations by accumulating one denomination at a time, which
/// is coefficient extraction from `1 / prod (1 - z^{a_i})` and counts each
/// multiset of coins once.
pub fn rep_table(params: &Params, bound: u64, limits: &Limits) -> Result<RepTable> {
    if bound > limits.max_bound {
        return Err(Error::BoundTooLarge {
            bound,
            limit: limits.max_bound,
        });
    }
    let len = usize::try_from(bound).map_err(|_| Error::BoundTooLarge {
        bound,
        limit: limits.max_bound,
    })? + 1;
    let mut counts = vec![BigUint::zero(); len];
    counts[0] = BigUint::one();
    for &a in params.denominations() {
        let a = a as usize;
        for j in a..len {
            let (lo, hi) = counts.split_at_mut(j);
            if !lo[j - a].is_zero() {
                hi[0] += &lo[j - a];
            }
        }
    }
    Ok(RepTable {
        params: params.clone(),
        counts,
    })
}

impl RepTable {
    pub fn params(&self) -> &Params {
        &self.params
    }

    pub fn bound(&self) -> u64 {
        (self.counts.len() - 1) as u64
    }

    pub fn counts(&self) -> &[BigUint] {
        &self.counts
    }

    /// `r(j)`; panics if `j` exceeds the bound.
    pub fn count(&self, j: u64) -> &BigUint {
        &self.counts[j as usize]
    }

    /// Start of the first run of `a_1` consecutive integers whose counts all
    /// exceed `k`, if the table contains one. No integer at or beyond that
    /// start has `k` or fewer representations.
    pub fn saturation_start(&self, k: u64) -> Option<u64> {
        let width = self.params.smallest() as usize;
        let k = BigUint::from(k);
        let mut run = 0usize;
        for (j, c) in self.counts.iter().enumerate() {
            if *c > k {
                run += 1;
                if run == width {
                    return Some((j + 1 - width) as u64);
                }
            } else {
                run = 0;
            }
        }
        None
    }
}
