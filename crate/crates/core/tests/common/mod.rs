#![allow(dead_code)]

use frobenius::oracle::{enumerate_at_most_k, enumerate_exact_k};
use frobenius::{GapSet, Limits, PairParams, Params};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Pow;

/// Coprime pairs `a < b <= max`, including `a = 1`.
pub fn coprime_pairs(max: u64) -> Vec<PairParams> {
    (1..=max)
        .flat_map(|b| (1..b).map(move |a| (a, b)))
        .filter(|(a, b)| a.gcd(b) == 1)
        .map(|(a, b)| PairParams::new(a, b).unwrap())
        .collect()
}

pub fn params_of(p: &PairParams) -> Params {
    p.to_params()
}

pub fn exact(p: &PairParams, k: u64) -> GapSet {
    enumerate_exact_k(&p.to_params(), k, None, &Limits::default()).unwrap()
}

pub fn at_most(p: &PairParams, k: u64) -> GapSet {
    enumerate_at_most_k(&p.to_params(), k, None, &Limits::default()).unwrap()
}

pub fn power_sum(set: &GapSet, m: u32) -> BigInt {
    set.elements.iter().map(|&j| Pow::pow(BigInt::from(j), m)).sum()
}

pub fn max_of(set: &GapSet) -> Option<BigInt> {
    assert!(set.complete);
    set.elements.last().map(|&g| BigInt::from(g))
}
