//! Generalized numerical semigroups in `ℕ₀^d`: submonoids with finite
//! complement, stored by their gap sets.
//!
//! The crate computes the corner `c = lub(H(S)) + 1` and related invariants,
//! builds explicit families with a prescribed corner, enumerates every
//! semigroup with a given corner exactly once along a rooted tree, and
//! evaluates closed-form bounds on their number. A brute-force [`oracle`]
//! provides independent ground truth for small corners.
//!
//! ```
//! use gns_core::{count_corner, Gns, MonomialOrder, Point};
//!
//! let s = Gns::new(2, [Point::from([1, 0]), Point::from([1, 1]), Point::from([3, 0])]).unwrap();
//! assert_eq!(s.corner(), Point::from([4, 2]));
//!
//! let report = count_corner(&Point::from([3, 3]), MonomialOrder::Lex).unwrap();
//! assert_eq!(report.total, 38u32.into());
//! ```

pub mod bounds;
pub mod constructions;
mod decimal;
pub mod enumeration;
pub mod error;
pub mod gns;
pub mod invariants;
pub mod lattice;
pub mod oracle;

pub use bounds::{bounds_report, d1_bounds, genus_range, lower_bound, upper_bound, BoundsReport};
pub use constructions::{
    axes_reduce, erase_unit_coordinates, irreducible_gaps, is_realizable_corner,
    lift_unit_coordinates, min_genus_gns, omega_union, ordinary,
};
pub use enumeration::{
    chain_to_root, children, count_corner, count_corner_with, enumerate_corner,
    enumerate_corner_all, parent, EnumerateOptions, EnumerationReport, Traversal,
};
pub use error::{GnsError, Result, Witness};
pub use gns::{is_closed_complement, Gns};
pub use invariants::{
    candidate_gaps, corner_preserving_gaps, has_corner, is_minimal_generator, low, nabla,
    pseudo_frobenius, remove_generator, small_elements, special_gaps, unitary_extension,
    NablaFamily,
};
pub use lattice::{box_points, lub, omega_region, MonomialOrder, Point};
pub use num_bigint::BigUint;
