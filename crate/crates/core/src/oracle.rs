//! Brute-force ground truth: every subset of `C(c−1) ∖ {0}` is tried as a gap
//! set and kept when its complement is a monoid with corner `c`.
//!
//! Nothing here calls the invariants or enumeration modules; closure and the
//! corner are checked straight from their definitions.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::enumeration::EnumerationReport;
use crate::error::{GnsError, Result};
use crate::gns::Gns;
use crate::lattice::{MonomialOrder, Point};

/// Default cap on `|c|`; `2^19` candidate subsets.
pub const DEFAULT_BUDGET: u64 = 20;

/// Candidate subsets are indexed by a `u64` counter.
const HARD_LIMIT: u64 = 63;

/// Precomputed data for one corner: the nonzero points of `C(c−1)` in lex
/// order, every pair with a sum inside the box, and one mask per axis of the
/// points touching the face `x_i = c_i − 1`.
pub struct BruteForce {
    corner: Point,
    points: Vec<Point>,
    sums: Vec<(usize, usize, usize)>,
    faces: Vec<u64>,
    degenerate: Degenerate,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Degenerate {
    No,
    /// `c = 0`: only `ℕ₀^d`.
    Zero,
    /// A zero coordinate next to a nonzero one: no semigroup qualifies.
    Empty,
}

impl BruteForce {
    pub fn new(c: &Point, budget: u64) -> Result<Self> {
        if c.dim() == 0 {
            return Err(GnsError::ZeroDimension);
        }
        let coords = c.coords();
        let degenerate = if c.is_zero() {
            Degenerate::Zero
        } else if coords.contains(&0) {
            Degenerate::Empty
        } else {
            Degenerate::No
        };
        let mut points = Vec::new();
        if degenerate == Degenerate::No {
            let size = c.coord_product().unwrap_or(u64::MAX);
            if size > budget {
                return Err(GnsError::BudgetExceeded { size, budget });
            }
            if size > HARD_LIMIT + 1 {
                return Err(GnsError::TooLarge(c.clone()));
            }
            // Odometer over C(c−1), last coordinate fastest: lex order.
            let mut x = vec![0u64; coords.len()];
            'outer: loop {
                points.push(Point::new(x.clone()));
                for i in (0..x.len()).rev() {
                    x[i] += 1;
                    if x[i] < coords[i] {
                        continue 'outer;
                    }
                    x[i] = 0;
                }
                break;
            }
            points.remove(0);
        }

        let mut sums = Vec::new();
        for (a, pa) in points.iter().enumerate() {
            for (b, pb) in points.iter().enumerate().skip(a) {
                let s: Vec<u64> = pa
                    .coords()
                    .iter()
                    .zip(pb.coords())
                    .map(|(u, v)| u + v)
                    .collect();
                if s.iter().zip(coords).all(|(si, ci)| si < ci) {
                    let target = Point::new(s);
                    let h = points
                        .iter()
                        .position(|q| *q == target)
                        .expect("sum lies in the box");
                    sums.push((a, b, h));
                }
            }
        }
        let faces = (0..coords.len())
            .map(|i| {
                points
                    .iter()
                    .enumerate()
                    .filter(|(_, q)| q.coords()[i] + 1 == coords[i])
                    .fold(0u64, |m, (k, _)| m | 1 << k)
            })
            .collect();
        Ok(BruteForce {
            corner: c.clone(),
            points,
            sums,
            faces,
            degenerate,
        })
    }

    /// Number of candidate subsets.
    pub fn candidates(&self) -> u64 {
        match self.degenerate {
            Degenerate::No => 1u64 << self.points.len(),
            _ => 1,
        }
    }

    /// Whether candidate `mask` is the gap set of a semigroup with this corner.
    pub fn accepts(&self, mask: u64) -> bool {
        match self.degenerate {
            Degenerate::Zero => return mask == 0,
            Degenerate::Empty => return false,
            Degenerate::No => {}
        }
        let gap = |k: usize| mask >> k & 1 == 1;
        // Closed: two elements of S never sum to a gap. Sums leaving the box
        // are elements of S since every gap lies in the box.
        let closed = self
            .sums
            .iter()
            .all(|&(a, b, h)| gap(a) || gap(b) || !gap(h));
        // Corner c: c + ℕ₀^d ⊆ S holds because gaps lie in C(c−1); minimality
        // needs, on every axis, a gap that c − e_i + ℕ₀^d would contain.
        closed && self.faces.iter().all(|&f| mask & f != 0)
    }

    fn gns(&self, mask: u64) -> Gns {
        let gaps = (0..self.points.len())
            .filter(|&k| mask >> k & 1 == 1)
            .map(|k| self.points[k].clone())
            .collect();
        Gns::from_canonical(self.corner.dim(), gaps)
    }

    /// Accepted masks in increasing counter order.
    pub fn masks(&self) -> impl Iterator<Item = u64> + '_ {
        (0..self.candidates()).filter(move |&m| self.accepts(m))
    }
}

/// Every semigroup with corner `c`, by exhaustion over subsets of the box.
pub fn brute_enumerate(c: &Point, budget: u64) -> Result<Vec<Gns>> {
    let bf = BruteForce::new(c, budget)?;
    Ok(bf.masks().map(|m| bf.gns(m)).collect())
}

/// Exhaustive count with a genus histogram. `nodes_expanded` is the number
/// of candidates examined and `max_depth` is the distance in genus from
/// `𝒪(c)` to the least-genus semigroup found.
pub fn brute_count(c: &Point, budget: u64) -> Result<EnumerationReport> {
    let bf = BruteForce::new(c, budget)?;
    let chunk = 1u64 << 12;
    let chunks = bf.candidates().div_ceil(chunk);
    let histogram = (0..chunks)
        .into_par_iter()
        .map(|k| {
            let mut h = BTreeMap::new();
            for m in k * chunk..((k + 1) * chunk).min(bf.candidates()) {
                if bf.accepts(m) {
                    *h.entry(m.count_ones() as usize).or_insert(0u64) += 1;
                }
            }
            h
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (g, n) in b {
                *a.entry(g).or_insert(0) += n;
            }
            a
        });
    let total: u64 = histogram.values().sum();
    let top = bf.points.len();
    let max_depth = histogram.keys().next().map_or(0, |&g| top - g);
    Ok(EnumerationReport {
        corner: c.clone(),
        order: MonomialOrder::Lex,
        total: BigUint::from(total),
        genus_histogram: histogram,
        max_depth,
        nodes_expanded: bf.candidates(),
    })
}

/// Whether `ℕ₀^d ∖ gaps` is closed under addition, checked over every pair of
/// points of the box spanned by the gaps.
pub fn is_closed(gaps: &[Point]) -> bool {
    let Some(first) = gaps.first() else {
        return true;
    };
    let d = first.dim();
    let is_gap = |x: &[u64]| gaps.iter().any(|g| g.coords() == x);
    let mut hi = vec![0u64; d];
    for g in gaps {
        for (h, &x) in hi.iter_mut().zip(g.coords()) {
            *h = (*h).max(x);
        }
    }
    let mut members = Vec::new();
    let mut x = vec![0u64; d];
    'outer: loop {
        if x.iter().any(|&v| v > 0) && !is_gap(&x) {
            members.push(x.clone());
        }
        for i in (0..d).rev() {
            x[i] += 1;
            if x[i] <= hi[i] {
                continue 'outer;
            }
            x[i] = 0;
        }
        break;
    }
    members.iter().all(|a| {
        members.iter().all(|b| {
            let s: Vec<u64> = a.iter().zip(b).map(|(u, v)| u + v).collect();
            !is_gap(&s)
        })
    }) && !is_gap(&vec![0; d])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p<const N: usize>(c: [u64; N]) -> Point {
        Point::from(c)
    }

    #[test]
    fn small_corners() {
        let bf = BruteForce::new(&p([2, 2]), DEFAULT_BUDGET).unwrap();
        assert_eq!(bf.candidates(), 8);
        assert_eq!(
            brute_enumerate(&p([2, 2]), DEFAULT_BUDGET).unwrap().len(),
            4
        );
        assert_eq!(
            BruteForce::new(&p([3, 2]), DEFAULT_BUDGET)
                .unwrap()
                .candidates(),
            32
        );
        assert_eq!(
            brute_enumerate(&p([3, 2]), DEFAULT_BUDGET).unwrap().len(),
            10
        );
        let unit = brute_enumerate(&p([2, 1]), DEFAULT_BUDGET).unwrap();
        assert_eq!(unit, vec![Gns::new(2, [p([1, 0])]).unwrap()]);
    }

    #[test]
    fn degenerate_corners() {
        assert_eq!(
            brute_enumerate(&p([0, 0]), DEFAULT_BUDGET).unwrap(),
            vec![Gns::full(2)]
        );
        assert!(brute_enumerate(&p([0, 3]), DEFAULT_BUDGET)
            .unwrap()
            .is_empty());
        assert!(brute_enumerate(&p([1, 1]), DEFAULT_BUDGET)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn counts() {
        let r = brute_count(&p([3, 3]), DEFAULT_BUDGET).unwrap();
        assert_eq!(r.total, BigUint::from(38u32));
        assert_eq!(
            brute_count(&p([2, 2, 2]), DEFAULT_BUDGET).unwrap().total,
            BigUint::from(52u32)
        );
        assert_eq!(
            brute_count(&p([4, 4]), DEFAULT_BUDGET).unwrap().total,
            BigUint::from(1587u32)
        );
        let r = brute_count(&p([3, 2]), DEFAULT_BUDGET).unwrap();
        assert_eq!(r.genus_histogram, BTreeMap::from([(3, 5), (4, 4), (5, 1)]));
        assert_eq!(r.max_depth, 2);
    }

    #[test]
    fn budget() {
        assert_eq!(
            brute_enumerate(&p([5, 5]), DEFAULT_BUDGET).err(),
            Some(GnsError::BudgetExceeded {
                size: 25,
                budget: 20
            })
        );
    }

    #[test]
    fn closure_predicate() {
        assert!(is_closed(&[p([1, 0]), p([0, 1]), p([1, 1])]));
        assert!(!is_closed(&[p([1, 1])]));
        assert!(!is_closed(&[p([0, 0])]));
        assert!(is_closed(&[]));
    }
}
