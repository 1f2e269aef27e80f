//! Closed-form versus oracle comparison over one pair or a sweep of pairs.
//!
//! Pairs are checked in parallel; outcomes are sorted by `(a, b, k, m,
//! check)` before anything is printed, so the report does not depend on the
//! number of workers.

use std::collections::BTreeMap;

use frobenius::closed_form::{at_most_stats, count_k, frobenius_k, power_sum_k, sum_k};
use frobenius::genfun::{numerator_h, p_k_poly};
use frobenius::oracle::{enumerate_at_most_k, enumerate_exact_k};
use frobenius::{Error, GapSet, IntPoly, Limits, PairParams, Params, Stat};
use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::{Failure, Format, VerifyArgs};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Outcome {
    pub a: u64,
    pub b: u64,
    pub k: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<u32>,
    pub check: &'static str,
    pub closed_form: String,
    pub oracle: String,
    #[serde(skip)]
    pub passed: bool,
}

#[derive(Serialize)]
struct Summary {
    pairs: usize,
    kmax: u64,
    mmax: u32,
    checks: usize,
    passed: usize,
    by_check: BTreeMap<&'static str, usize>,
}

fn show(v: &Option<BigInt>) -> String {
    v.as_ref().map_or_else(|| "empty".to_string(), BigInt::to_string)
}

fn oracle_value(set: &GapSet, stat: Stat, m: Option<u32>) -> Result<Option<BigInt>, Error> {
    Ok(set.report(stat, m)?.value)
}

fn outcome(
    p: &PairParams,
    k: u64,
    m: Option<u32>,
    check: &'static str,
    closed: String,
    oracle: String,
) -> Outcome {
    Outcome {
        a: p.a(),
        b: p.b(),
        k,
        m,
        check,
        passed: closed == oracle,
        closed_form: closed,
        oracle,
    }
}

/// All checks for one pair.
pub fn check_pair(p: &PairParams, kmax: u64, mmax: u32, limits: &Limits) -> Result<Vec<Outcome>, Error> {
    let params = p.to_params();
    let mut out = Vec::new();

    let h = numerator_h(&params, limits)?;
    out.push(outcome(
        p,
        0,
        None,
        "h",
        h.to_string(),
        IntPoly::one_minus_z_pow(p.ab()).to_string(),
    ));

    for k in 0..=kmax {
        let rk = enumerate_exact_k(&params, k, None, limits)?;
        let pairs = [
            ("g", frobenius_k(p, k).value, Stat::Max),
            ("c", count_k(p, k).value, Stat::Count),
            ("s", sum_k(p, k).value, Stat::Sum),
        ];
        for (name, closed, stat) in pairs {
            out.push(outcome(p, k, None, name, show(&closed), show(&oracle_value(&rk, stat, None)?)));
        }

        let top_m = if k == 0 { mmax.min(1) } else { mmax };
        for m in 0..=top_m {
            let closed = power_sum_k(p, k, m)?.value;
            let oracle = oracle_value(&rk, Stat::PowerSum, Some(m))?;
            out.push(outcome(p, k, Some(m), "s^m", show(&closed), show(&oracle)));
        }

        let le = enumerate_at_most_k(&params, k, None, limits)?;
        let closed: Vec<String> = at_most_stats(p, k).iter().map(|r| show(&r.value)).collect();
        let oracle: Vec<String> = [Stat::MaxAtMost, Stat::CountAtMost, Stat::SumAtMost]
            .into_iter()
            .map(|s| oracle_value(&le, s, None).map(|v| show(&v)))
            .collect::<Result<_, _>>()?;
        out.push(outcome(p, k, None, "at-most", closed.join(","), oracle.join(",")));

        let poly = p_k_poly(p, k, limits)?;
        let support = if poly.is_zero_one() {
            format!("{:?}", poly.support())
        } else {
            format!("non 0/1 polynomial {poly}")
        };
        out.push(outcome(p, k, None, "p_k-support", support, format!("{:?}", rk.elements)));
    }
    Ok(out)
}

fn coprime_pairs(max: u64) -> Vec<PairParams> {
    (1..=max)
        .flat_map(|b| (1..b).map(move |a| (a, b)))
        .filter_map(|(a, b)| PairParams::new(a, b).ok())
        .collect()
}

/// Runs all checks and returns the sorted outcomes.
pub fn collect(
    pairs: &[PairParams],
    kmax: u64,
    mmax: u32,
    workers: usize,
    limits: &Limits,
) -> Result<Vec<Outcome>, Error> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .expect("thread pool");
    let per_pair: Vec<Result<Vec<Outcome>, Error>> = pool.install(|| {
        pairs
            .par_iter()
            .map(|p| check_pair(p, kmax, mmax, limits))
            .collect()
    });
    let mut all = Vec::new();
    for r in per_pair {
        all.extend(r?);
    }
    all.sort();
    Ok(all)
}

pub fn run(args: &VerifyArgs, limits: &Limits) -> Result<(), Failure> {
    let pairs = match (args.sweep, args.params.is_empty()) {
        (Some(n), true) => coprime_pairs(n),
        (None, false) => vec![PairParams::try_from(&Params::new(&args.params)?)?],
        _ => return Err(Failure::Usage("pass either --params a,b or --sweep N".into())),
    };
    let workers = args
        .workers
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    if workers == 0 {
        return Err(Failure::Usage("--workers must be positive".into()));
    }

    let outcomes = collect(&pairs, args.kmax, args.mmax, workers, limits)?;
    if let Some(bad) = outcomes.iter().find(|o| !o.passed) {
        return Err(Failure::Mismatch(
            serde_json::to_string(bad).expect("serializable"),
        ));
    }

    let mut by_check = BTreeMap::new();
    for o in &outcomes {
        *by_check.entry(o.check).or_insert(0) += 1;
    }
    let summary = Summary {
        pairs: pairs.len(),
        kmax: args.kmax,
        mmax: args.mmax,
        checks: outcomes.len(),
        passed: outcomes.len(),
        by_check,
    };
    match args.format {
        Format::Json => println!("{}", serde_json::to_string(&summary).expect("serializable")),
        Format::Csv => {
            println!("check,passed");
            for (check, n) in &summary.by_check {
                println!("{check},{n}");
            }
        }
        Format::Plain => {
            println!(
                "{} of {} checks passed over {} pairs (k <= {}, m <= {})",
                summary.passed, summary.checks, summary.pairs, summary.kmax, summary.mmax
            );
            for (check, n) in &summary.by_check {
                println!("  {check:<12} {n}");
            }
        }
    }
    Ok(())
}
