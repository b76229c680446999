//! Closed-form counting bounds for the number `N(c)` of semigroups with
//! corner `c`, and the admissible genus range.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{GnsError, Result};
use crate::lattice::Point;

/// Box sizes above this are rejected rather than evaluated; `2^|c|` would
/// need more than a megabyte per bound.
pub const MAX_BOUND_BOX: u64 = 1 << 23;

fn one() -> BigUint {
    BigUint::from(1u8)
}

fn pow2(e: u64) -> BigUint {
    one() << e
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsReport {
    pub corner: Point,
    /// `|c| = Π c_i`.
    pub box_size: u64,
    /// `|Ω_∅(c)| = Π ⌈c_i/2⌉`.
    pub omega_empty_size: u64,
    /// `n_J` for every nonempty `J`, keyed by its 1-based axis list, e.g. `"{1,3}"`.
    pub n_values: BTreeMap<String, u64>,
    #[serde(with = "crate::decimal")]
    pub lower: BigUint,
    #[serde(with = "crate::decimal")]
    pub upper: BigUint,
    pub genus_min: u64,
    pub genus_max: u64,
}

fn check(c: &Point, need_two_dims: bool) -> Result<u64> {
    if c.dim() == 0 {
        return Err(GnsError::ZeroDimension);
    }
    if need_two_dims && c.dim() < 2 {
        return Err(GnsError::InvalidCorner {
            corner: c.clone(),
            reason: "bounds need dimension at least 2",
        });
    }
    if c.coords().iter().any(|&x| x < 2) {
        return Err(GnsError::InvalidCorner {
            corner: c.clone(),
            reason: "every coordinate must be at least 2",
        });
    }
    match c.coord_product() {
        Some(n) if n <= MAX_BOUND_BOX => Ok(n),
        _ => Err(GnsError::TooLarge(c.clone())),
    }
}

/// `n_J = Π_{j∈J} ⌊c_j/2⌋ · Π_{t∉J} ⌈c_t/2⌉` for `J` given as a bit mask
/// over 0-based axes.
fn n_j(c: &Point, mask: usize) -> u64 {
    c.coords()
        .iter()
        .enumerate()
        .map(|(i, &ci)| {
            if mask >> i & 1 == 1 {
                ci / 2
            } else {
                ci.div_ceil(2)
            }
        })
        .product()
}

fn subset_label(mask: usize, d: usize) -> String {
    let inner: Vec<String> = (0..d)
        .filter(|i| mask >> i & 1 == 1)
        .map(|i| (i + 1).to_string())
        .collect();
    format!("{{{}}}", inner.join(","))
}

/// `1 + Σ_{J≠∅} (2^{n_J} − 1)`.
pub fn lower_bound(c: &Point) -> Result<BigUint> {
    check(c, true)?;
    let mut total = one();
    for mask in 1..(1usize << c.dim()) {
        total += pow2(n_j(c, mask)) - one();
    }
    Ok(total)
}

/// `2^{|c|−1} − (2^{|Ω_∅|−1} − 1) · 2^{|c|−|Ω_∅|−1}`.
pub fn upper_bound(c: &Point) -> Result<BigUint> {
    let size = check(c, true)?;
    let omega = n_j(c, 0);
    // Every c_i ≥ 2 in d ≥ 2 gives |Ω_∅| ≤ |c|/2, so the exponents are nonnegative.
    Ok(pow2(size - 1) - (pow2(omega - 1) - one()) * pow2(size - omega - 1))
}

/// `(Σ ⌈c_i/2⌉, |c| − 1)`: the least and greatest genus of a semigroup with
/// corner `c`.
pub fn genus_range(c: &Point) -> Result<(u64, u64)> {
    let size = check(c, false)?;
    let lo = c.coords().iter().map(|ci| ci.div_ceil(2)).sum();
    Ok((lo, size - 1))
}

/// `(2^{⌊(c−2)/2⌋}, 4 · 2^{⌊(c−2)/2⌋})` for numerical semigroups of
/// conductor `c ≥ 2`.
pub fn d1_bounds(c: u64) -> Result<(BigUint, BigUint)> {
    if c < 2 {
        return Err(GnsError::InvalidCorner {
            corner: Point::from([c]),
            reason: "conductor must be at least 2",
        });
    }
    if c > MAX_BOUND_BOX {
        return Err(GnsError::TooLarge(Point::from([c])));
    }
    let base = pow2((c - 2) / 2);
    let upper = &base * 4u8;
    Ok((base, upper))
}

pub fn bounds_report(c: &Point) -> Result<BoundsReport> {
    let box_size = check(c, true)?;
    let d = c.dim();
    let n_values = (1..(1usize << d))
        .map(|mask| (subset_label(mask, d), n_j(c, mask)))
        .collect();
    let (genus_min, genus_max) = genus_range(c)?;
    Ok(BoundsReport {
        corner: c.clone(),
        box_size,
        omega_empty_size: n_j(c, 0),
        n_values,
        lower: lower_bound(c)?,
        upper: upper_bound(c)?,
        genus_min,
        genus_max,
    })
}
