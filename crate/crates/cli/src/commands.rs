use std::collections::BTreeSet;
use std::io::Write;
use std::path::Path;

use gns_core::oracle::brute_enumerate;
use gns_core::{
    axes_reduce, bounds_report, count_corner_with, enumerate_corner, enumerate_corner_all,
    min_genus_gns, omega_union, ordinary, pseudo_frobenius, special_gaps, EnumerateOptions, Gns,
    MonomialOrder, Point, Traversal,
};
use serde::Serialize;

use crate::error::{CliError, CliResult};
use crate::input::read_gns;
use crate::{Construct, EnumerateArgs};

fn json_line<T: Serialize>(out: &mut impl Write, value: &T) -> CliResult {
    serde_json::to_writer(&mut *out, value).map_err(std::io::Error::from)?;
    out.write_all(b"\n")?;
    Ok(())
}

#[derive(Serialize)]
struct CornerReport {
    dim: usize,
    corner: Point,
    genus: usize,
    /// `null` for the full monoid, which has no gaps.
    frobenius: Option<bool>,
    pseudo_frobenius: Vec<Point>,
    special_gaps: Vec<Point>,
}

pub fn corner(path: &Path, out: &mut impl Write) -> CliResult {
    let s = read_gns(path)?;
    let report = if s.genus() == 0 {
        CornerReport {
            dim: s.dim(),
            corner: s.corner(),
            genus: 0,
            frobenius: None,
            pseudo_frobenius: Vec::new(),
            special_gaps: Vec::new(),
        }
    } else {
        CornerReport {
            dim: s.dim(),
            corner: s.corner(),
            genus: s.genus(),
            frobenius: Some(s.is_frobenius()?),
            pseudo_frobenius: pseudo_frobenius(&s)?,
            special_gaps: special_gaps(&s)?,
        }
    };
    json_line(out, &report)
}

pub fn enumerate(a: &EnumerateArgs, out: &mut impl Write) -> CliResult {
    let opts = EnumerateOptions {
        genus: a.genus,
        max_depth: a.depth,
        traversal: if a.bfs {
            Traversal::BreadthFirst
        } else {
            Traversal::DepthFirst
        },
        jobs: a.jobs.max(1),
    };
    if a.count_only {
        return json_line(out, &count_corner_with(&a.corner, a.order, &opts)?);
    }
    if opts.jobs > 1 && !a.bfs {
        for s in enumerate_corner_all(&a.corner, a.order, &opts)? {
            json_line(out, &s)?;
        }
    } else {
        for s in enumerate_corner(&a.corner, a.order, &opts)? {
            json_line(out, &s)?;
        }
    }
    Ok(())
}

pub fn bounds(c: &Point, csv: bool, count: bool, out: &mut impl Write) -> CliResult {
    let report = bounds_report(c)?;
    let n = if count {
        Some(count_corner_with(c, MonomialOrder::Lex, &EnumerateOptions::default())?.total)
    } else {
        None
    };
    if !csv {
        return json_line(out, &report);
    }
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["corner", "LB", "N", "UB"])?;
    w.write_record([
        c.to_string(),
        report.lower.to_string(),
        n.map(|n| n.to_string()).unwrap_or_default(),
        report.upper.to_string(),
    ])?;
    w.flush()?;
    Ok(())
}

pub fn construct(cmd: &Construct, out: &mut impl Write) -> CliResult {
    let s = match cmd {
        Construct::Ordinary { corner } => ordinary(corner)?,
        Construct::MinGenus { corner } => min_genus_gns(corner)?,
        Construct::OmegaUnion {
            corner,
            axes,
            subset,
        } => {
            let zero_based = axes
                .iter()
                .map(|&j| {
                    j.checked_sub(1)
                        .ok_or_else(|| CliError::Input("axes are numbered from 1".into()))
                })
                .collect::<CliResult<Vec<usize>>>()?;
            let subset: Vec<Point> = serde_json::from_str(subset)
                .map_err(|e| CliError::Input(format!("bad subset JSON: {e}")))?;
            omega_union(corner, &zero_based, &subset)?
        }
    };
    json_line(out, &s)
}

pub fn reduce_axes(path: &Path, out: &mut impl Write) -> CliResult {
    let s = read_gns(path)?;
    json_line(out, &axes_reduce(&s)?)
}

pub fn verify(
    c: &Point,
    order: MonomialOrder,
    budget: u64,
    jobs: usize,
    out: &mut impl Write,
) -> CliResult {
    let brute: BTreeSet<Gns> = brute_enumerate(c, budget)?.into_iter().collect();
    let opts = EnumerateOptions {
        jobs: jobs.max(1),
        ..Default::default()
    };
    let listed = enumerate_corner_all(c, order, &opts)?;
    let tree: BTreeSet<Gns> = listed.iter().cloned().collect();
    let ok = tree.len() == listed.len() && tree == brute;
    let verdict = if ok { "OK" } else { "MISMATCH" };
    writeln!(
        out,
        "tree={} oracle={} {verdict}",
        listed.len(),
        brute.len()
    )?;
    if ok {
        Ok(())
    } else {
        out.flush()?;
        Err(CliError::Mismatch(format!(
            "tree and oracle disagree at corner {c}"
        )))
    }
}
