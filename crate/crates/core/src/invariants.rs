//! Gap-set invariants used by the corner tree: pseudo-Frobenius elements,
//! special gaps, the `∇` families, small elements, `low_≺`, the child-index
//! set `D_≺(S)`, and the unitary extension/removal moves between
//! semigroups with the same corner.

use crate::error::{GnsError, Result};
use crate::gns::Gns;
use crate::lattice::{box_points, MonomialOrder, Point};

/// Gaps that are maximal under `≤_S`: no other gap `h'` has `h' − h ∈ S`.
pub fn pseudo_frobenius(s: &Gns) -> Result<Vec<Point>> {
    if s.genus() == 0 {
        return Err(GnsError::ZeroGenus);
    }
    let gaps = s.gaps();
    Ok(gaps
        .iter()
        .filter(|h| {
            !gaps.iter().any(|other| {
                other != *h
                    && h.le_unchecked(other)
                    && !s.is_gap(&other.checked_sub(h).expect("h ≤ other"))
            })
        })
        .cloned()
        .collect())
}

/// Pseudo-Frobenius elements `x` with `2x ∈ S`: exactly the gaps whose
/// adjunction leaves a monoid.
pub fn special_gaps(s: &Gns) -> Result<Vec<Point>> {
    Ok(pseudo_frobenius(s)?
        .into_iter()
        .filter(|x| !s.is_gap(&x.scale(2)))
        .collect())
}

/// `∇_i(S, x)` for every axis `i`: the gaps whose `i`-th coordinate is
/// `x_i − 1`, all other coordinates being bounded by `x − 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NablaFamily {
    pub sets: Vec<Vec<Point>>,
}

impl NablaFamily {
    pub fn axis(&self, i: usize) -> &[Point] {
        &self.sets[i]
    }

    pub fn all_nonempty(&self) -> bool {
        self.sets.iter().all(|s| !s.is_empty())
    }

    /// Whether some `∇_i` is exactly `{x}`.
    pub fn has_singleton(&self, x: &Point) -> bool {
        self.sets.iter().any(|s| s.len() == 1 && &s[0] == x)
    }
}

pub fn nabla(s: &Gns, x: &Point) -> Result<NablaFamily> {
    x.check_dim(s.dim())?;
    let d = s.dim();
    if s.genus() == 0 {
        return Ok(NablaFamily {
            sets: vec![Vec::new(); d],
        });
    }
    let bound = x.minus_ones().ok_or_else(|| GnsError::GapOutsideBox {
        gap: s.gaps()[0].clone(),
        bound: x.clone(),
    })?;
    if let Some(g) = s.gaps().iter().find(|g| !g.le_unchecked(&bound)) {
        return Err(GnsError::GapOutsideBox {
            gap: g.clone(),
            bound: x.clone(),
        });
    }
    let sets = (0..d)
        .map(|i| {
            s.gaps()
                .iter()
                .filter(|h| h.coords()[i] == bound.coords()[i])
                .cloned()
                .collect()
        })
        .collect();
    Ok(NablaFamily { sets })
}

/// Whether `c` is the corner of `s`: all gaps lie in `C(c−1)` and every
/// `∇_i(S, c)` is nonempty. The full monoid has corner `0`.
pub fn has_corner(s: &Gns, c: &Point) -> bool {
    if c.dim() != s.dim() {
        return false;
    }
    if s.genus() == 0 {
        return c.is_zero();
    }
    match nabla(s, c) {
        Ok(family) => family.all_nonempty(),
        Err(_) => false,
    }
}

/// `L(S)`: the elements of `S` inside `C(c−1)`, including `0`, in lex order.
pub fn small_elements(s: &Gns, c: &Point) -> Result<Vec<Point>> {
    c.check_dim(s.dim())?;
    if &s.corner() != c {
        return Err(GnsError::CornerMismatch(c.clone()));
    }
    let Some(top) = c.minus_ones() else {
        return Ok(Vec::new());
    };
    Ok(box_points(&top).filter(|x| !s.is_gap(x)).collect())
}

fn nonzero_small_elements(s: &Gns) -> Vec<Point> {
    let c = s.corner();
    match c.minus_ones() {
        Some(top) => box_points(&top)
            .filter(|x| !x.is_zero() && !s.is_gap(x))
            .collect(),
        None => Vec::new(),
    }
}

/// `low_≺(S)`: the `≺`-least nonzero small element.
pub fn low(s: &Gns, order: MonomialOrder) -> Result<Point> {
    nonzero_small_elements(s)
        .into_iter()
        .min_by(|a, b| order.cmp_unchecked(a, b))
        .ok_or(GnsError::OrdinaryGns)
}

/// `D(S)`: special gaps whose adjunction keeps the corner.
pub fn corner_preserving_gaps(s: &Gns) -> Result<Vec<Point>> {
    let sg = special_gaps(s)?;
    let family = nabla(s, &s.corner())?;
    Ok(sg
        .into_iter()
        .filter(|x| !family.has_singleton(x))
        .collect())
}

/// `D_≺(S)`: the elements of `D(S)` preceding every nonzero small element,
/// sorted by `≺`. These index the children of `S` in the corner tree.
pub fn candidate_gaps(s: &Gns, order: MonomialOrder) -> Result<Vec<Point>> {
    let mut out = corner_preserving_gaps(s)?;
    if let Ok(bound) = low(s, order) {
        out.retain(|x| order.cmp_unchecked(x, &bound).is_lt());
    }
    out.sort_by(|a, b| order.cmp_unchecked(a, b));
    Ok(out)
}

/// `S ∪ {x}` for a special gap `x`.
pub fn unitary_extension(s: &Gns, x: &Point) -> Result<Gns> {
    x.check_dim(s.dim())?;
    if !special_gaps(s)?.contains(x) {
        return Err(GnsError::NotSpecialGap(x.clone()));
    }
    Ok(s.with_gap_removed(x))
}

/// Whether `x ∈ S*` has no decomposition `a + b` with `a, b ∈ S*`.
pub fn is_minimal_generator(s: &Gns, x: &Point) -> Result<bool> {
    x.check_dim(s.dim())?;
    if x.is_zero() || s.is_gap(x) {
        return Err(GnsError::NotMember(x.clone()));
    }
    let decomposable = box_points(x).any(|a| {
        !a.is_zero() && &a != x && !s.is_gap(&a) && !s.is_gap(&x.checked_sub(&a).expect("a ≤ x"))
    });
    Ok(!decomposable)
}

/// `S ∖ {x}` for a minimal generator `x`.
pub fn remove_generator(s: &Gns, x: &Point) -> Result<Gns> {
    if !is_minimal_generator(s, x)? {
        return Err(GnsError::NotMinimalGenerator(x.clone()));
    }
    Ok(s.with_gap_added(x.clone()))
}
