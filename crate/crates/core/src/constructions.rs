//! Explicit families of semigroups with a prescribed corner.

use crate::error::{GnsError, Result};
use crate::gns::Gns;
use crate::lattice::{box_points, omega_region, Point};

/// Whether some generalized numerical semigroup has corner `c`: either
/// `c = 0`, or every coordinate is positive and one exceeds 1.
pub fn is_realizable_corner(c: &Point) -> bool {
    c.is_zero() || (c.coords().iter().all(|&x| x >= 1) && c.coords().iter().any(|&x| x >= 2))
}

fn require_at_least_two(c: &Point) -> Result<()> {
    if c.dim() == 0 {
        return Err(GnsError::ZeroDimension);
    }
    if c.coords().iter().any(|&x| x < 2) {
        return Err(GnsError::InvalidCorner {
            corner: c.clone(),
            reason: "every coordinate must be at least 2",
        });
    }
    Ok(())
}

/// `𝒪(c) = {0} ∪ (ℕ₀^d ∖ C(c−1))`; for `c = 0` this is `ℕ₀^d`.
pub fn ordinary(c: &Point) -> Result<Gns> {
    if c.dim() == 0 {
        return Err(GnsError::ZeroDimension);
    }
    if c.is_zero() {
        return Ok(Gns::full(c.dim()));
    }
    if !is_realizable_corner(c) {
        return Err(GnsError::InvalidCorner {
            corner: c.clone(),
            reason: "no semigroup has this corner",
        });
    }
    let top = c.minus_ones().expect("positive coordinates");
    let gaps = box_points(&top).filter(|x| !x.is_zero()).collect();
    Ok(Gns::from_canonical(c.dim(), gaps))
}

/// Gaps of the irreducible numerical semigroup of conductor `c ≥ 2` used on
/// each axis: `⟨2, c+1⟩` for even `c`, `{0, k+1, …, 2k−1} ∪ [2k+1, ∞)` for
/// odd `c = 2k+1`. Both have genus `⌈c/2⌉`.
pub fn irreducible_gaps(c: u64) -> Vec<u64> {
    assert!(c >= 2, "conductor must be at least 2");
    if c.is_multiple_of(2) {
        (1..c).step_by(2).collect()
    } else {
        let k = c / 2;
        (1..=k).chain([2 * k]).collect()
    }
}

/// A semigroup with corner `c` of the least possible genus `Σ⌈c_i/2⌉`, all
/// of whose gaps lie on the axes.
pub fn min_genus_gns(c: &Point) -> Result<Gns> {
    require_at_least_two(c)?;
    let d = c.dim();
    let gaps = c.coords().iter().enumerate().flat_map(|(i, &ci)| {
        irreducible_gaps(ci)
            .into_iter()
            .map(move |h| Point::axis(d, i, h))
    });
    Gns::new(d, gaps)
}

/// Pushes every gap onto the axes without changing the corner and without
/// increasing the genus.
///
/// Gaps already on the axes are kept. A gap `h` off the axes whose every
/// nonzero projection `h_j·e_j` is itself a gap is dropped; any other gap is
/// replaced by `h_{j₀}·e_{j₀}` for the least `j₀` with `h_{j₀}·e_{j₀} ∈ S∖{0}`.
pub fn axes_reduce(s: &Gns) -> Result<Gns> {
    let c = s.corner();
    require_at_least_two(&c)?;
    let d = s.dim();
    let mut reduced = Vec::with_capacity(s.genus());
    for h in s.gaps() {
        if h.on_axes() {
            reduced.push(h.clone());
            continue;
        }
        let image = h
            .coords()
            .iter()
            .enumerate()
            .filter(|(_, &hj)| hj != 0)
            .map(|(j, &hj)| Point::axis(d, j, hj))
            .find(|proj| !s.is_gap(proj));
        if let Some(proj) = image {
            reduced.push(proj);
        }
    }
    Gns::new(d, reduced)
}

/// `A ∪ 𝒪(c)` for `A ⊆ Ω_J(c)` with `J` nonempty; always a semigroup with
/// corner `c`. `axes` are 0-based.
pub fn omega_union(c: &Point, axes: &[usize], subset: &[Point]) -> Result<Gns> {
    require_at_least_two(c)?;
    if c.dim() < 2 {
        return Err(GnsError::InvalidCorner {
            corner: c.clone(),
            reason: "dimension must be at least 2",
        });
    }
    if axes.is_empty() {
        return Err(GnsError::EmptyAxisSet);
    }
    let region = omega_region(c, axes)?;
    for a in subset {
        a.check_dim(c.dim())?;
        if !region.contains(a) {
            return Err(GnsError::PointOutsideRegion {
                point: a.clone(),
                axes: axes.to_vec(),
            });
        }
    }
    let top = c.minus_ones().expect("coordinates at least 2");
    let gaps = box_points(&top).filter(|x| !x.is_zero() && !subset.contains(x));
    Gns::new(c.dim(), gaps)
}

/// Embeds `s` into dimension `dim` by inserting a zero coordinate at each of
/// `positions` (indices in the target dimension). The corner gains a `1` in
/// those positions.
pub fn lift_unit_coordinates(s: &Gns, positions: &[usize], dim: usize) -> Result<Gns> {
    let mut sorted = positions.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != positions.len() || s.dim() + positions.len() != dim {
        return Err(GnsError::DimensionMismatch {
            expected: dim,
            found: s.dim() + sorted.len(),
        });
    }
    if let Some(&index) = sorted.iter().find(|&&i| i >= dim) {
        return Err(GnsError::InvalidIndex { index, dim });
    }
    let gaps = s.gaps().iter().map(|g| g.insert_zeros(&sorted)).collect();
    Ok(Gns::from_canonical(dim, gaps))
}

/// Drops the coordinates where the corner equals 1. Returns the reduced
/// semigroup and the erased positions; inverse of [`lift_unit_coordinates`].
pub fn erase_unit_coordinates(s: &Gns) -> Result<(Gns, Vec<usize>)> {
    if s.genus() == 0 {
        return Err(GnsError::ZeroGenus);
    }
    let c = s.corner();
    let positions: Vec<usize> = (0..s.dim()).filter(|&i| c.coords()[i] == 1).collect();
    let gaps = s.gaps().iter().map(|g| g.erase(&positions)).collect();
    Ok((
        Gns::from_canonical(s.dim() - positions.len(), gaps),
        positions,
    ))
}
