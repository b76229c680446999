//! The table of exact counts `N(c)` with their lower and upper bounds,
//! recomputed and checked against reference values.

use std::io::Write;
use std::path::PathBuf;

use clap::Args;
use gns_core::oracle::brute_count;
use gns_core::{
    count_corner_with, lower_bound, upper_bound, BigUint, EnumerateOptions, MonomialOrder, Point,
};
use serde::Deserialize;

use crate::error::{CliError, CliResult};
use crate::input::{env_budget, parse_corner_list};

const GOLDEN: &str = include_str!("../data/table1.csv");

#[derive(Debug, Args)]
pub struct Table1Args {
    /// Corners to compute, e.g. `"(2,2) (3,2)"`; defaults to every reference row.
    #[arg(long, value_parser = parse_corner_list)]
    rows: Vec<Vec<Point>>,
    /// Cross-check `N` with the brute-force oracle on rows whose box size is
    /// at most this; `GNS_ORACLE_BUDGET` is used when the flag is absent.
    #[arg(long)]
    oracle_budget: Option<u64>,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Reference CSV with columns corner,LB,N,UB; defaults to the bundled table.
    #[arg(long)]
    golden: Option<PathBuf>,
}

#[derive(Debug, Deserialize)]
struct Record {
    corner: String,
    #[serde(rename = "LB")]
    lower: String,
    #[serde(rename = "N")]
    count: String,
    #[serde(rename = "UB")]
    upper: String,
}

#[derive(Debug)]
struct Row {
    lower: BigUint,
    count: BigUint,
    upper: BigUint,
}

fn number(field: &str) -> CliResult<BigUint> {
    field
        .trim()
        .parse()
        .map_err(|e| CliError::Input(format!("bad reference value {field:?}: {e}")))
}

fn load_golden(path: Option<&PathBuf>) -> CliResult<Vec<(Point, Row)>> {
    let text = match path {
        Some(p) => std::fs::read_to_string(p)
            .map_err(|e| CliError::Input(format!("cannot read {}: {e}", p.display())))?,
        None => GOLDEN.to_string(),
    };
    let mut rows = Vec::new();
    for record in csv::Reader::from_reader(text.as_bytes()).deserialize::<Record>() {
        let r = record?;
        let corner = r.corner.parse::<Point>().map_err(CliError::Input)?;
        let row = Row {
            lower: number(&r.lower)?,
            count: number(&r.count)?,
            upper: number(&r.upper)?,
        };
        rows.push((corner, row));
    }
    Ok(rows)
}

pub fn run(a: &Table1Args, out: &mut impl Write) -> CliResult {
    let golden = load_golden(a.golden.as_ref())?;
    let corners: Vec<Point> = if a.rows.is_empty() {
        golden.iter().map(|(c, _)| c.clone()).collect()
    } else {
        a.rows.iter().flatten().cloned().collect()
    };
    let budget = match a.oracle_budget {
        Some(b) => Some(b),
        None => env_budget()?,
    };
    let opts = EnumerateOptions {
        jobs: a.jobs.max(1),
        ..Default::default()
    };

    let mut mismatches = Vec::new();
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["corner", "LB", "N", "UB"])?;
    for c in &corners {
        let lower = lower_bound(c)?;
        let upper = upper_bound(c)?;
        let count = count_corner_with(c, MonomialOrder::Lex, &opts)?.total;
        w.write_record([
            c.to_string(),
            lower.to_string(),
            count.to_string(),
            upper.to_string(),
        ])?;
        w.flush()?;

        if let Some(b) = budget.filter(|&b| c.coord_product().is_some_and(|n| n <= b)) {
            let brute = brute_count(c, b)?.total;
            if brute != count {
                mismatches.push(format!("{c}: tree N={count}, oracle N={brute}"));
            }
        }
        match golden.iter().find(|(g, _)| g == c) {
            Some((_, row)) => {
                for (name, got, want) in [
                    ("LB", &lower, &row.lower),
                    ("N", &count, &row.count),
                    ("UB", &upper, &row.upper),
                ] {
                    if got != want {
                        mismatches.push(format!("{c}: {name}={got}, expected {want}"));
                    }
                }
            }
            None => eprintln!("note: no reference row for {c}"),
        }
    }
    w.flush()?;
    if mismatches.is_empty() {
        Ok(())
    } else {
        for m in &mismatches {
            eprintln!("mismatch: {m}");
        }
        Err(CliError::Mismatch(format!(
            "{} cell(s) differ from the reference",
            mismatches.len()
        )))
    }
}
