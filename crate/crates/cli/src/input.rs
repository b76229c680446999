use std::fs;
use std::io::{self, Read};
use std::path::Path;

use gns_core::oracle::DEFAULT_BUDGET;
use gns_core::{Gns, Point};
use serde::Deserialize;

use crate::error::{CliError, CliResult};

pub const BUDGET_VAR: &str = "GNS_ORACLE_BUDGET";

/// Gap-set document as read from disk, validated separately so a closure
/// failure keeps its witness. `dim` may be omitted when there is a gap.
#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GapDocument {
    dim: Option<usize>,
    gaps: Vec<Point>,
}

pub fn read_text(path: &Path) -> CliResult<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        fs::read_to_string(path)
            .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))
    }
}

pub fn read_gns(path: &Path) -> CliResult<Gns> {
    let text = read_text(path)?;
    let doc: GapDocument = serde_json::from_str(&text)
        .map_err(|e| CliError::Input(format!("bad gap-set JSON: {e}")))?;
    let dim = match (doc.dim, doc.gaps.first()) {
        (Some(d), _) => d,
        (None, Some(g)) => g.dim(),
        (None, None) => {
            return Err(CliError::Input(
                "empty gap set needs an explicit \"dim\"".into(),
            ))
        }
    };
    Ok(Gns::new(dim, doc.gaps)?)
}

/// `g` or `gmin:gmax`.
pub fn parse_genus(s: &str) -> Result<(usize, usize), String> {
    let num = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|e| format!("bad genus {t:?}: {e}"))
    };
    match s.split_once(':') {
        Some((lo, hi)) => {
            let (lo, hi) = (num(lo)?, num(hi)?);
            if lo > hi {
                return Err(format!("empty genus range {s:?}"));
            }
            Ok((lo, hi))
        }
        None => num(s).map(|g| (g, g)),
    }
}

/// Explicit flag, then the environment, then the default.
pub fn oracle_budget(flag: Option<u64>) -> CliResult<u64> {
    if let Some(b) = flag {
        return Ok(b);
    }
    env_budget().map(|b| b.unwrap_or(DEFAULT_BUDGET))
}

pub fn env_budget() -> CliResult<Option<u64>> {
    match std::env::var(BUDGET_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map(Some)
            .map_err(|e| CliError::Input(format!("bad {BUDGET_VAR} {v:?}: {e}"))),
        Err(_) => Ok(None),
    }
}

/// A list of corners such as `(2,2) (3,2)`, `(2,2);(3,2)` or `2,2;3,2`.
pub fn parse_corner_list(s: &str) -> Result<Vec<Point>, String> {
    let normalized = s.replace(")", ");").replace("]", "];");
    let corners: Vec<Point> = normalized
        .split(|ch: char| ch == ';' || ch.is_whitespace())
        .map(|t| t.trim().trim_start_matches(','))
        .filter(|t| !t.is_empty())
        .map(str::parse)
        .collect::<Result<_, _>>()?;
    if corners.is_empty() {
        return Err(format!("no corners in {s:?}"));
    }
    Ok(corners)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn genus_arguments() {
        assert_eq!(parse_genus("4"), Ok((4, 4)));
        assert_eq!(parse_genus("3:5"), Ok((3, 5)));
        assert!(parse_genus("5:3").is_err());
        assert!(parse_genus("x").is_err());
    }

    #[test]
    fn corner_lists() {
        let expect = vec![Point::from([2, 2]), Point::from([3, 2])];
        assert_eq!(parse_corner_list("(2,2) (3,2)").unwrap(), expect);
        assert_eq!(parse_corner_list("(2,2),(3,2)").unwrap(), expect);
        assert_eq!(parse_corner_list("2,2;3,2").unwrap(), expect);
        assert_eq!(
            parse_corner_list("(2,2)").unwrap(),
            vec![Point::from([2, 2])]
        );
        assert!(parse_corner_list(" ").is_err());
    }
}
