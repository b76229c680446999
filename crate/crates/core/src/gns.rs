//! The semigroup data model: a generalized numerical semigroup `S ⊆ ℕ₀^d`
//! stored as its finite gap set `H(S)`.

use serde::{Deserialize, Serialize};

use crate::error::{GnsError, Result, Witness};
use crate::lattice::{box_points, lub, Point};

/// A generalized numerical semigroup, represented by its canonical
/// (lex-sorted, duplicate-free) gap set.
///
/// Values are validated on construction and immutable afterwards. The JSON
/// form is `{"dim": d, "gaps": [[...], ...]}` and is re-validated on
/// deserialization.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawGns")]
pub struct Gns {
    dim: usize,
    gaps: Vec<Point>,
}

#[derive(Deserialize)]
struct RawGns {
    dim: usize,
    gaps: Vec<Point>,
}

impl TryFrom<RawGns> for Gns {
    type Error = GnsError;

    fn try_from(raw: RawGns) -> Result<Self> {
        Gns::new(raw.dim, raw.gaps)
    }
}

impl Gns {
    /// Validates `gaps` as the complement of a submonoid of `ℕ₀^dim`.
    pub fn new(dim: usize, gaps: impl IntoIterator<Item = Point>) -> Result<Self> {
        if dim == 0 {
            return Err(GnsError::ZeroDimension);
        }
        let mut gaps: Vec<Point> = gaps.into_iter().collect();
        for g in &gaps {
            g.check_dim(dim)?;
        }
        gaps.sort();
        gaps.dedup();
        if gaps.iter().any(Point::is_zero) {
            return Err(GnsError::ZeroInGaps);
        }
        if let Some(w) = closure_violation(&gaps) {
            return Err(GnsError::NotClosed(w));
        }
        Ok(Gns { dim, gaps })
    }

    /// `ℕ₀^dim` itself.
    pub fn full(dim: usize) -> Self {
        assert!(dim > 0, "dimension must be at least 1");
        Gns {
            dim,
            gaps: Vec::new(),
        }
    }

    /// Caller guarantees `gaps` is canonical and closed.
    pub(crate) fn from_canonical(dim: usize, gaps: Vec<Point>) -> Self {
        debug_assert!(gaps.windows(2).all(|w| w[0] < w[1]));
        Gns { dim, gaps }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn gaps(&self) -> &[Point] {
        &self.gaps
    }

    pub fn genus(&self) -> usize {
        self.gaps.len()
    }

    pub(crate) fn is_gap(&self, x: &Point) -> bool {
        self.gaps.binary_search(x).is_ok()
    }

    pub fn contains(&self, x: &Point) -> Result<bool> {
        x.check_dim(self.dim)?;
        Ok(!self.is_gap(x))
    }

    /// `lub(H(S)) + 1`, or `0` for `ℕ₀^d`.
    pub fn corner(&self) -> Point {
        match lub(&self.gaps) {
            Ok(m) => m.plus_ones(),
            Err(_) => Point::zero(self.dim),
        }
    }

    /// Whether `H(S)` has a unique maximal element, i.e. `corner − 1` is a gap.
    pub fn is_frobenius(&self) -> Result<bool> {
        if self.gaps.is_empty() {
            return Err(GnsError::ZeroGenus);
        }
        let top = self.corner().minus_ones().expect("positive genus corner");
        Ok(self.is_gap(&top))
    }

    /// Whether `S = {0} ∪ (ℕ₀^d ∖ C(c−1))` for its corner `c`.
    pub fn is_ordinary(&self) -> bool {
        let size = self.corner().coord_product();
        match size {
            Some(n) => self.genus() as u64 + 1 == n || self.gaps.is_empty(),
            None => false,
        }
    }

    pub(crate) fn with_gap_removed(&self, x: &Point) -> Gns {
        let gaps = self.gaps.iter().filter(|g| *g != x).cloned().collect();
        Gns::from_canonical(self.dim, gaps)
    }

    pub(crate) fn with_gap_added(&self, x: Point) -> Gns {
        let mut gaps = self.gaps.clone();
        if let Err(at) = gaps.binary_search(&x) {
            gaps.insert(at, x);
        }
        Gns::from_canonical(self.dim, gaps)
    }
}

/// First `a + b = h` (gaps `h` in lex order, then `a` in lex order over
/// `C(h)`) with `a`, `b` nonzero and both outside `gaps`. `gaps` must be
/// sorted. Any sum landing in a gap `h` uses summands inside `C(h)`, so this
/// finite scan decides closure of the complement.
pub fn closure_violation(gaps: &[Point]) -> Option<Witness> {
    debug_assert!(gaps.windows(2).all(|w| w[0] <= w[1]));
    let is_gap = |p: &Point| gaps.binary_search(p).is_ok();
    for h in gaps {
        for a in box_points(h) {
            if a.is_zero() || &a == h || is_gap(&a) {
                continue;
            }
            let b = h.checked_sub(&a).expect("a lies in C(h)");
            if !is_gap(&b) {
                return Some(Witness { a, b, h: h.clone() });
            }
        }
    }
    None
}

/// Whether `ℕ₀^d ∖ gaps` is closed under addition, with a witness when it is
/// not. Order and duplicates of `gaps` do not matter.
pub fn is_closed_complement(gaps: &[Point]) -> (bool, Option<Witness>) {
    let mut sorted = gaps.to_vec();
    sorted.sort();
    sorted.dedup();
    let w = closure_violation(&sorted);
    (w.is_none(), w)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(list: &[&[u64]]) -> Vec<Point> {
        list.iter().map(|c| Point::new(c.to_vec())).collect()
    }

    pub(crate) fn example_2d() -> Gns {
        Gns::new(2, pts(&[&[1, 0], &[1, 1], &[3, 0]])).unwrap()
    }

    #[test]
    fn make_gns_examples() {
        let s = example_2d();
        assert_eq!(s.genus(), 3);
        match Gns::new(1, pts(&[&[2]])) {
            Err(GnsError::NotClosed(w)) => {
                assert_eq!(w.a, Point::from([1]));
                assert_eq!(w.b, Point::from([1]));
                assert_eq!(w.h, Point::from([2]));
            }
            other => panic!("expected NotClosed, got {other:?}"),
        }
        let full = Gns::new(2, Vec::new()).unwrap();
        assert_eq!(full.genus(), 0);
        assert_eq!(full, Gns::full(2));
    }

    #[test]
    fn make_gns_errors() {
        assert_eq!(Gns::new(2, pts(&[&[0, 0]])), Err(GnsError::ZeroInGaps));
        assert!(matches!(
            Gns::new(2, pts(&[&[1]])),
            Err(GnsError::DimensionMismatch {
                expected: 2,
                found: 1
            })
        ));
        assert_eq!(Gns::new(0, Vec::new()), Err(GnsError::ZeroDimension));
    }

    #[test]
    fn canonicalizes_order_and_duplicates() {
        let s = Gns::new(2, pts(&[&[3, 0], &[1, 0], &[1, 1], &[1, 0]])).unwrap();
        assert_eq!(s, example_2d());
    }

    #[test]
    fn closure_examples() {
        let (ok, w) = is_closed_complement(&pts(&[&[1, 0], &[0, 1], &[1, 1]]));
        assert!(ok && w.is_none());
        let (ok, w) = is_closed_complement(&pts(&[&[1, 1]]));
        assert!(!ok);
        let w = w.unwrap();
        let mut summands = [w.a, w.b];
        summands.sort();
        assert_eq!(summands, [Point::from([0, 1]), Point::from([1, 0])]);
    }

    #[test]
    fn contains_and_corner() {
        let s = example_2d();
        assert!(!s.contains(&Point::from([3, 0])).unwrap());
        assert!(s.contains(&Point::from([0, 0])).unwrap());
        assert!(s.contains(&Point::from([4, 2])).unwrap());
        assert_eq!(s.corner(), Point::from([4, 2]));
        assert_eq!(Gns::full(3).corner(), Point::zero(3));
        assert!(s.contains(&Point::from([1])).is_err());
    }

    #[test]
    fn frobenius_examples() {
        let ordinary = Gns::new(2, pts(&[&[1, 0], &[2, 0], &[0, 1], &[1, 1], &[2, 1]])).unwrap();
        assert!(ordinary.is_frobenius().unwrap());
        assert!(!example_2d().is_frobenius().unwrap());
        let s = Gns::new(2, pts(&[&[1, 0], &[0, 1]])).unwrap();
        assert_eq!(s.corner(), Point::from([2, 2]));
        assert!(!s.is_frobenius().unwrap());
        assert_eq!(Gns::full(2).is_frobenius(), Err(GnsError::ZeroGenus));
    }

    #[test]
    fn json_round_trip_and_validation() {
        let s = example_2d();
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(json, r#"{"dim":2,"gaps":[[1,0],[1,1],[3,0]]}"#);
        assert_eq!(serde_json::from_str::<Gns>(&json).unwrap(), s);
        assert!(serde_json::from_str::<Gns>(r#"{"dim":2,"gaps":[[1,1]]}"#).is_err());
    }
}
