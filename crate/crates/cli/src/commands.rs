use frobenius::closed_form::{at_most_stats, count_k, frobenius_k, power_sum_k, sum_k};
use frobenius::exact::cyclotomic;
use frobenius::genfun::{denham_term_count, numerator_h, p_k_poly, s_k_indicator};
use frobenius::oracle::{enumerate_at_most_k, enumerate_exact_k, rep_table};
use frobenius::{Error, Limits, PairParams, Params, Stat, StatReport};
use serde::Serialize;

use crate::{output, ClassifyArgs, ComputeArgs, EnumerateArgs, Failure, Format, GenfunArgs};

fn closed_form(p: &PairParams, stat: Stat, k: u64, m: Option<u32>) -> Result<StatReport, Failure> {
    Ok(match stat {
        Stat::Max => frobenius_k(p, k),
        Stat::Count => count_k(p, k),
        Stat::Sum => sum_k(p, k),
        Stat::PowerSum => power_sum_k(p, k, require_m(m)?)?,
        Stat::MaxAtMost => at_most_stats(p, k)[0].clone(),
        Stat::CountAtMost => at_most_stats(p, k)[1].clone(),
        Stat::SumAtMost => at_most_stats(p, k)[2].clone(),
    })
}

fn require_m(m: Option<u32>) -> Result<u32, Failure> {
    m.ok_or_else(|| Failure::Usage("statistic sm needs --m".into()))
}

pub fn compute(args: &ComputeArgs, limits: &Limits) -> Result<(), Failure> {
    let params = Params::new(&args.params)?;
    let stats = args
        .stat
        .iter()
        .map(|s| s.parse::<Stat>())
        .collect::<Result<Vec<_>, Error>>()?;
    let pair = PairParams::try_from(&params).ok().filter(|_| !args.oracle);

    let mut exact_set = None;
    let mut at_most_set = None;
    let mut reports = Vec::with_capacity(stats.len());
    for stat in stats {
        let m = (stat == Stat::PowerSum).then_some(args.m).flatten();
        let report = match &pair {
            Some(p) => closed_form(p, stat, args.k, args.m)?,
            None => {
                if stat == Stat::PowerSum {
                    require_m(m)?;
                }
                let slot = if stat.is_at_most() { &mut at_most_set } else { &mut exact_set };
                if slot.is_none() {
                    *slot = Some(if stat.is_at_most() {
                        enumerate_at_most_k(&params, args.k, None, limits)?
                    } else {
                        enumerate_exact_k(&params, args.k, None, limits)?
                    });
                }
                slot.as_ref().expect("filled").report(stat, m)?
            }
        };
        reports.push(report);
    }
    print!("{}", output::reports(&reports, args.format));
    Ok(())
}

pub fn enumerate(args: &EnumerateArgs, limits: &Limits) -> Result<(), Failure> {
    let params = Params::new(&args.params)?;
    let set = if args.at_most {
        enumerate_at_most_k(&params, args.k, args.bound, limits)?
    } else {
        enumerate_exact_k(&params, args.k, args.bound, limits)?
    };
    print!("{}", output::gap_set(&set, args.at_most, args.format));
    Ok(())
}

#[derive(Serialize)]
struct Row {
    j: u64,
    count: String,
    k: String,
}

/// One row per integer in `[0, bound]`; its class is the number of
/// representations it has.
pub fn classify(args: &ClassifyArgs, limits: &Limits) -> Result<(), Failure> {
    let params = Params::new(&args.params)?;
    let table = rep_table(&params, args.bound, limits)?;
    let rows = table.counts().iter().enumerate().map(|(j, c)| Row {
        j: j as u64,
        count: c.to_string(),
        k: c.to_string(),
    });
    let mut out = String::new();
    match args.format {
        Format::Csv => {
            out.push_str("j,count,k\n");
            for r in rows {
                out.push_str(&format!("{},{},{}\n", r.j, r.count, r.k));
            }
        }
        Format::Json => {
            let rows: Vec<Row> = rows.collect();
            out = serde_json::to_string(&rows).expect("serializable") + "\n";
        }
        Format::Plain => {
            for r in rows {
                out.push_str(&format!("{:>8}  r = {}\n", r.j, r.count));
            }
        }
    }
    print!("{out}");
    Ok(())
}

pub fn genfun(args: &GenfunArgs, limits: &Limits) -> Result<(), Failure> {
    if let Some(n) = args.cyclotomic {
        if n == 0 {
            return Err(Failure::Usage("cyclotomic index must be positive".into()));
        }
        print!("{}", output::poly(&cyclotomic(n), args.format));
        return Ok(());
    }
    let params = Params::new(&args.params)?;
    if args.denham {
        let terms = denham_term_count(&params, limits)?;
        match args.format {
            Format::Json => println!("{{\"params\":{},\"terms\":{terms}}}", serde_json::to_string(&params).expect("serializable")),
            _ => println!("{terms}"),
        }
        return Ok(());
    }
    if args.numerator {
        print!("{}", output::poly(&numerator_h(&params, limits)?, args.format));
        return Ok(());
    }
    let Some(k) = args.k else {
        return Err(Failure::Usage(
            "choose one of --k, --numerator, --denham, --cyclotomic".into(),
        ));
    };
    let pair = PairParams::try_from(&params)?;
    if args.indicator {
        let bound = args.bound.expect("clap enforces --bound");
        if bound > limits.max_bound {
            return Err(Error::BoundTooLarge { bound, limit: limits.max_bound }.into());
        }
        print!("{}", output::indicator(&s_k_indicator(&pair, k, bound)?, args.format));
    } else {
        print!("{}", output::poly(&p_k_poly(&pair, k, limits)?, args.format));
    }
    Ok(())
}
