use thiserror::Error;

use crate::lattice::Point;

/// A decomposition `a + b = h` of a gap `h` into two nonzero elements of the
/// monoid, proving that a candidate gap set does not have a closed complement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub a: Point,
    pub b: Point,
    pub h: Point,
}

impl std::fmt::Display for Witness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} + {} = {}", self.a, self.b, self.h)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GnsError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("dimension must be at least 1")]
    ZeroDimension,
    #[error("the zero element cannot be a gap")]
    ZeroInGaps,
    #[error("complement is not closed under addition: {0}")]
    NotClosed(Witness),
    #[error("operation requires positive genus")]
    ZeroGenus,
    #[error("gap {gap} lies outside the box below {bound}")]
    GapOutsideBox { gap: Point, bound: Point },
    #[error("least upper bound of an empty set")]
    EmptySet,
    #[error("axis index {index} out of range for dimension {dim}")]
    InvalidIndex { index: usize, dim: usize },
    #[error("semigroup does not have corner {0}")]
    CornerMismatch(Point),
    #[error("ordinary semigroup has no small nonzero elements")]
    OrdinaryGns,
    #[error("{0} is not a special gap")]
    NotSpecialGap(Point),
    #[error("{0} is not a minimal generator")]
    NotMinimalGenerator(Point),
    #[error("{0} is not an element of the semigroup")]
    NotMember(Point),
    #[error("invalid corner {corner}: {reason}")]
    InvalidCorner { corner: Point, reason: &'static str },
    #[error("{0} is not the corner of any generalized numerical semigroup")]
    UnrealizableCorner(Point),
    #[error("{point} is not in the region for axes {axes:?}")]
    PointOutsideRegion { point: Point, axes: Vec<usize> },
    #[error("axis set must be nonempty")]
    EmptyAxisSet,
    #[error("box size {size} exceeds the budget {budget}")]
    BudgetExceeded { size: u64, budget: u64 },
    #[error("box size of {0} is too large for this operation")]
    TooLarge(Point),
}

pub type Result<T, E = GnsError> = std::result::Result<T, E>;
