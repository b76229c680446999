//! Integer-lattice primitives on `ℕ₀^d`.
//!
//! [`Point`] is the universal lattice element. Its derived `Ord` is the
//! lexicographic order with coordinate 0 most significant, which is also the
//! canonical order for every serialized point set. The natural partial order
//! is exposed separately through [`Point::leq`].

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{GnsError, Result};

/// A point of `ℕ₀^d`. Serializes as a JSON array of integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Point(Vec<u64>);

impl Point {
    pub fn new(coords: Vec<u64>) -> Self {
        Point(coords)
    }

    pub fn zero(dim: usize) -> Self {
        Point(vec![0; dim])
    }

    pub fn ones(dim: usize) -> Self {
        Point(vec![1; dim])
    }

    /// The unit vector `n·e_axis`.
    pub fn axis(dim: usize, axis: usize, n: u64) -> Self {
        let mut coords = vec![0; dim];
        coords[axis] = n;
        Point(coords)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[u64] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<u64> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    /// True when at most one coordinate is nonzero.
    pub fn on_axes(&self) -> bool {
        self.0.iter().filter(|&&x| x != 0).count() <= 1
    }

    pub(crate) fn check_dim(&self, dim: usize) -> Result<()> {
        if self.dim() == dim {
            Ok(())
        } else {
            Err(GnsError::DimensionMismatch {
                expected: dim,
                found: self.dim(),
            })
        }
    }

    /// The natural partial order: every coordinate of `self` is at most the
    /// matching coordinate of `other`.
    pub fn leq(&self, other: &Point) -> Result<bool> {
        other.check_dim(self.dim())?;
        Ok(self.le_unchecked(other))
    }

    pub(crate) fn le_unchecked(&self, other: &Point) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn add(&self, other: &Point) -> Point {
        debug_assert_eq!(self.dim(), other.dim());
        Point(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self - other`, or `None` unless `other ≤ self`.
    pub fn checked_sub(&self, other: &Point) -> Option<Point> {
        debug_assert_eq!(self.dim(), other.dim());
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Point)
    }

    pub fn scale(&self, n: u64) -> Point {
        Point(self.0.iter().map(|a| a * n).collect())
    }

    /// `self - 1`, or `None` if some coordinate is zero.
    pub fn minus_ones(&self) -> Option<Point> {
        self.0
            .iter()
            .map(|a| a.checked_sub(1))
            .collect::<Option<Vec<_>>>()
            .map(Point)
    }

    pub fn plus_ones(&self) -> Point {
        Point(self.0.iter().map(|a| a + 1).collect())
    }

    /// `|x|`, the product of the coordinates. `None` on overflow.
    pub fn coord_product(&self) -> Option<u64> {
        self.0.iter().try_fold(1u64, |acc, &x| acc.checked_mul(x))
    }

    pub fn degree(&self) -> u128 {
        self.0.iter().map(|&x| x as u128).sum()
    }

    /// Inserts a zero coordinate at each of the (sorted, final-dimension)
    /// `positions`.
    pub(crate) fn insert_zeros(&self, positions: &[usize]) -> Point {
        let dim = self.dim() + positions.len();
        let mut src = self.0.iter();
        Point(
            (0..dim)
                .map(|i| {
                    if positions.contains(&i) {
                        0
                    } else {
                        *src.next().expect("dimension accounted for")
                    }
                })
                .collect(),
        )
    }

    pub(crate) fn erase(&self, positions: &[usize]) -> Point {
        Point(
            self.0
                .iter()
                .enumerate()
                .filter(|(i, _)| !positions.contains(i))
                .map(|(_, &x)| x)
                .collect(),
        )
    }
}

impl<const N: usize> From<[u64; N]> for Point {
    fn from(coords: [u64; N]) -> Self {
        Point(coords.to_vec())
    }
}

impl From<Vec<u64>> for Point {
    fn from(coords: Vec<u64>) -> Self {
        Point(coords)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// Parses `3,2`, `(3,2)` or `[3,2]`.
impl FromStr for Point {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let inner = s
            .trim()
            .trim_start_matches(['(', '['])
            .trim_end_matches([')', ']']);
        if inner.trim().is_empty() {
            return Err(format!("empty point {s:?}"));
        }
        inner
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u64>()
                    .map_err(|e| format!("bad coordinate {t:?} in {s:?}: {e}"))
            })
            .collect::<std::result::Result<Vec<_>, _>>()
            .map(Point)
    }
}

/// Coordinatewise maximum of a nonempty set of points of equal dimension.
pub fn lub<'a, I>(points: I) -> Result<Point>
where
    I: IntoIterator<Item = &'a Point>,
{
    let mut iter = points.into_iter();
    let first = iter.next().ok_or(GnsError::EmptySet)?;
    let mut acc = first.0.clone();
    for p in iter {
        p.check_dim(acc.len())?;
        for (m, &x) in acc.iter_mut().zip(&p.0) {
            *m = (*m).max(x);
        }
    }
    Ok(Point(acc))
}

/// Lexicographic walk over a product of inclusive coordinate ranges.
#[derive(Debug, Clone)]
pub struct ProductIter {
    lo: Vec<u64>,
    hi: Vec<u64>,
    next: Option<Vec<u64>>,
}

impl ProductIter {
    pub fn new(lo: Vec<u64>, hi: Vec<u64>) -> Self {
        assert_eq!(lo.len(), hi.len());
        let next = if lo.iter().zip(&hi).all(|(l, h)| l <= h) {
            Some(lo.clone())
        } else {
            None
        };
        ProductIter { lo, hi, next }
    }
}

impl Iterator for ProductIter {
    type Item = Point;

    fn next(&mut self) -> Option<Point> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let mut i = succ.len();
        let advanced = loop {
            if i == 0 {
                break false;
            }
            i -= 1;
            if succ[i] < self.hi[i] {
                succ[i] += 1;
                break true;
            }
            succ[i] = self.lo[i];
        };
        if advanced {
            self.next = Some(succ);
        }
        Some(Point(current))
    }
}

/// `C(x)`: every point `≤ x`, in lexicographic order.
pub fn box_points(x: &Point) -> ProductIter {
    ProductIter::new(vec![0; x.dim()], x.0.clone())
}

/// A monomial order on `ℕ₀^d`. Coordinate 0 has the highest priority in the
/// lexicographic tie-breaks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub enum MonomialOrder {
    #[default]
    #[serde(rename = "lex")]
    Lex,
    #[serde(rename = "grlex")]
    GradedLex,
    #[serde(rename = "grevlex")]
    GradedRevLex,
}

impl MonomialOrder {
    pub const ALL: [MonomialOrder; 3] = [
        MonomialOrder::Lex,
        MonomialOrder::GradedLex,
        MonomialOrder::GradedRevLex,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MonomialOrder::Lex => "lex",
            MonomialOrder::GradedLex => "grlex",
            MonomialOrder::GradedRevLex => "grevlex",
        }
    }

    pub fn compare(self, a: &Point, b: &Point) -> Result<Ordering> {
        b.check_dim(a.dim())?;
        Ok(self.cmp_unchecked(a, b))
    }

    pub(crate) fn cmp_unchecked(self, a: &Point, b: &Point) -> Ordering {
        match self {
            MonomialOrder::Lex => a.0.cmp(&b.0),
            MonomialOrder::GradedLex => a.degree().cmp(&b.degree()).then_with(|| a.0.cmp(&b.0)),
            MonomialOrder::GradedRevLex => a.degree().cmp(&b.degree()).then_with(|| {
                // the larger trailing coordinate is the smaller monomial
                a.0.iter()
                    .zip(&b.0)
                    .rev()
                    .find(|(x, y)| x != y)
                    .map_or(Ordering::Equal, |(x, y)| y.cmp(x))
            }),
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MonomialOrder {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "lex" => Ok(MonomialOrder::Lex),
            "grlex" | "deglex" | "graded-lex" => Ok(MonomialOrder::GradedLex),
            "grevlex" | "degrevlex" | "graded-revlex" => Ok(MonomialOrder::GradedRevLex),
            other => Err(format!("unknown monomial order {other:?}")),
        }
    }
}

fn half_up(c: u64) -> u64 {
    c.div_ceil(2)
}

/// `Ω_J(c)` for the axis set `axes` (0-based): coordinates in `axes` lie in
/// `[⌈c_j/2⌉, c_j−1]`, the others in `[0, ⌈c_i/2⌉−1]`. Over all `J` these
/// regions partition `C(c−1)`.
pub fn omega_region(c: &Point, axes: &[usize]) -> Result<Vec<Point>> {
    let d = c.dim();
    if let Some(&index) = axes.iter().find(|&&j| j >= d) {
        return Err(GnsError::InvalidIndex { index, dim: d });
    }
    if c.coords().contains(&0) {
        return Err(GnsError::InvalidCorner {
            corner: c.clone(),
            reason: "every coordinate must be at least 1",
        });
    }
    let (lo, hi): (Vec<u64>, Vec<u64>) = c
        .coords()
        .iter()
        .enumerate()
        .map(|(i, &ci)| {
            if axes.contains(&i) {
                (half_up(ci), ci - 1)
            } else {
                (0, half_up(ci) - 1)
            }
        })
        .unzip();
    Ok(ProductIter::new(lo, hi).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p<const N: usize>(c: [u64; N]) -> Point {
        Point::from(c)
    }

    #[test]
    fn leq_examples() {
        assert!(p([1, 0]).leq(&p([3, 1])).unwrap());
        assert!(!p([2, 1]).leq(&p([1, 5])).unwrap());
        assert!(Point::zero(3).leq(&p([4, 0, 2])).unwrap());
        assert!(matches!(
            p([1, 0]).leq(&p([1, 0, 0])),
            Err(GnsError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn lub_examples() {
        let set = [p([1, 0]), p([1, 1]), p([3, 0])];
        assert_eq!(lub(&set).unwrap(), p([3, 1]));
        assert_eq!(lub(&[p([2, 7])]).unwrap(), p([2, 7]));
        assert_eq!(lub(&[p([0, 5]), p([5, 0])]).unwrap(), p([5, 5]));
        assert_eq!(lub(&[]), Err(GnsError::EmptySet));
    }

    #[test]
    fn box_examples() {
        let pts: Vec<_> = box_points(&p([2, 1])).collect();
        assert_eq!(
            pts,
            vec![
                p([0, 0]),
                p([0, 1]),
                p([1, 0]),
                p([1, 1]),
                p([2, 0]),
                p([2, 1])
            ]
        );
        assert_eq!(box_points(&p([0, 0])).collect::<Vec<_>>(), vec![p([0, 0])]);
        assert_eq!(box_points(&p([3, 1, 3, 3])).count(), 128);
    }

    #[test]
    fn coord_product_examples() {
        assert_eq!(p([3, 2]).coord_product(), Some(6));
        assert_eq!(p([4, 2, 4, 4]).coord_product(), Some(128));
        assert_eq!(p([5, 0]).coord_product(), Some(0));
        assert_eq!(p([u64::MAX, 2]).coord_product(), None);
    }

    #[test]
    fn compare_examples() {
        use Ordering::*;
        assert_eq!(
            MonomialOrder::Lex.compare(&p([0, 5]), &p([1, 0])).unwrap(),
            Less
        );
        assert_eq!(
            MonomialOrder::GradedLex
                .compare(&p([1, 0]), &p([0, 5]))
                .unwrap(),
            Less
        );
        for order in MonomialOrder::ALL {
            assert_eq!(order.compare(&p([0, 0]), &p([0, 1])).unwrap(), Less);
        }
        // degree ties: grlex prefers a smaller leading coordinate, grevlex a
        // larger trailing one
        assert_eq!(
            MonomialOrder::GradedLex
                .compare(&p([0, 2, 0]), &p([1, 0, 1]))
                .unwrap(),
            Less
        );
        assert_eq!(
            MonomialOrder::GradedRevLex
                .compare(&p([1, 0, 1]), &p([0, 2, 0]))
                .unwrap(),
            Less
        );
    }

    #[test]
    fn omega_examples() {
        let c = p([3, 2]);
        assert_eq!(omega_region(&c, &[]).unwrap(), vec![p([0, 0]), p([1, 0])]);
        assert_eq!(omega_region(&c, &[0]).unwrap(), vec![p([2, 0])]);
        assert_eq!(omega_region(&c, &[1]).unwrap(), vec![p([0, 1]), p([1, 1])]);
        assert_eq!(omega_region(&c, &[0, 1]).unwrap(), vec![p([2, 1])]);
        assert!(matches!(
            omega_region(&c, &[2]),
            Err(GnsError::InvalidIndex { index: 2, dim: 2 })
        ));
    }

    #[test]
    fn parse_points() {
        assert_eq!("3,2".parse::<Point>().unwrap(), p([3, 2]));
        assert_eq!("(4, 2, 4)".parse::<Point>().unwrap(), p([4, 2, 4]));
        assert_eq!("[7]".parse::<Point>().unwrap(), p([7]));
        assert!("".parse::<Point>().is_err());
        assert!("1,x".parse::<Point>().is_err());
        assert_eq!(p([3, 2]).to_string(), "(3,2)");
    }

    #[test]
    fn insert_and_erase_zeros() {
        let x = p([5, 7]);
        let lifted = x.insert_zeros(&[0, 2]);
        assert_eq!(lifted, p([0, 5, 0, 7]));
        assert_eq!(lifted.erase(&[0, 2]), x);
    }
}
