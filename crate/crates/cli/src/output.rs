use frobenius::genfun::IndicatorSeries;
use frobenius::{GapSet, IntPoly, StatReport};
use serde::Serialize;

use crate::Format;

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("serializable")
}

/// One report per line: JSON lines, CSV with a header, or plain text.
pub fn reports(reports: &[StatReport], format: Format) -> String {
    let mut out = String::new();
    if format == Format::Csv {
        out.push_str("stat,params,k,m,value,empty,provenance\n");
    }
    for r in reports {
        let line = match format {
            Format::Json => json(r),
            Format::Plain => r.to_string(),
            Format::Csv => {
                let params: Vec<String> = r.params.iter().map(u64::to_string).collect();
                format!(
                    "{},{},{},{},{},{},{}",
                    r.stat,
                    params.join(";"),
                    r.k,
                    r.m.map(|m| m.to_string()).unwrap_or_default(),
                    r.numeric(),
                    r.is_empty(),
                    r.provenance
                )
            }
        };
        out.push_str(&line);
        out.push('\n');
    }
    out
}

pub fn gap_set(set: &GapSet, at_most: bool, format: Format) -> String {
    match format {
        Format::Json => json(set) + "\n",
        Format::Csv => set.elements.iter().map(|e| format!("{e}\n")).collect(),
        Format::Plain => {
            let elems: Vec<String> = set.elements.iter().map(u64::to_string).collect();
            let which = if at_most { "at most" } else { "exactly" };
            let status = if set.complete { "complete" } else { "up to the bound" };
            format!(
                "{} integers with {which} {} representations over {} ({status}): {{{}}}\n",
                set.len(),
                set.k,
                set.params,
                elems.join(", ")
            )
        }
    }
}

pub fn poly(p: &IntPoly, format: Format) -> String {
    match format {
        Format::Json => json(p) + "\n",
        Format::Plain => format!("{p}\n"),
        Format::Csv => {
            let mut out = String::from("exp,coeff\n");
            for (e, c) in p.terms() {
                out.push_str(&format!("{e},{c}\n"));
            }
            out
        }
    }
}

pub fn indicator(series: &IndicatorSeries, format: Format) -> String {
    match format {
        Format::Json => json(series) + "\n",
        Format::Plain => series.to_bitstring() + "\n",
        Format::Csv => {
            let mut out = String::from("j,member\n");
            for (j, &b) in series.bits.iter().enumerate() {
                out.push_str(&format!("{j},{}\n", u8::from(b)));
            }
            out
        }
    }
}
