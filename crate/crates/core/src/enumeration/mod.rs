//! The rooted tree of all semigroups with a fixed corner.
//!
//! The root is the ordinary semigroup `𝒪(c)`. The parent of a nonordinary
//! node `T` is `T ∖ {low_≺(T)}`; the children of `S` are `S ∪ {x}` for
//! `x ∈ D_≺(S)`. Every semigroup with corner `c` appears exactly once, and
//! the vertex set does not depend on the monomial order.
//!
//! Corners with unit coordinates are enumerated in the reduced dimension and
//! lifted back. Subtrees of distinct children are independent, so counting
//! parallelizes over a rayon pool with schedule-independent results.

mod engine;

use std::collections::BTreeMap;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::constructions::{is_realizable_corner, ordinary};
use crate::error::{GnsError, Result};
use crate::gns::Gns;
use crate::invariants::{candidate_gaps, has_corner, low, remove_generator, unitary_extension};
use crate::lattice::{MonomialOrder, Point};

use engine::{CornerTree, Filter, Mask, Tally, Walk, MAX_BOX};

/// Children of `s` in the tree for corner `c`, sorted by the added element.
pub fn children(s: &Gns, c: &Point, order: MonomialOrder) -> Result<Vec<Gns>> {
    if !has_corner(s, c) {
        return Err(GnsError::CornerMismatch(c.clone()));
    }
    if s.genus() == 0 {
        return Ok(Vec::new());
    }
    candidate_gaps(s, order)?
        .iter()
        .map(|x| unitary_extension(s, x))
        .collect()
}

/// `S ∖ {low_≺(S)}`.
pub fn parent(s: &Gns, order: MonomialOrder) -> Result<Gns> {
    let x = low(s, order)?;
    remove_generator(s, &x)
}

/// `[S, parent(S), …, 𝒪(corner(S))]`.
pub fn chain_to_root(s: &Gns, order: MonomialOrder) -> Result<Vec<Gns>> {
    let mut chain = vec![s.clone()];
    loop {
        match parent(chain.last().expect("nonempty"), order) {
            Ok(p) => chain.push(p),
            Err(GnsError::OrdinaryGns) => return Ok(chain),
            Err(e) => return Err(e),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Traversal {
    #[default]
    DepthFirst,
    /// Level by level, as the tree is grown one genus at a time.
    BreadthFirst,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerateOptions {
    /// Inclusive genus window; nodes outside it are not reported.
    pub genus: Option<(usize, usize)>,
    /// Nodes deeper than this are not explored (the root has depth 0).
    pub max_depth: Option<usize>,
    pub traversal: Traversal,
    /// Worker threads; 1 runs on the calling thread.
    pub jobs: usize,
}

impl Default for EnumerateOptions {
    fn default() -> Self {
        EnumerateOptions {
            genus: None,
            max_depth: None,
            traversal: Traversal::DepthFirst,
            jobs: 1,
        }
    }
}

impl EnumerateOptions {
    fn filter(&self) -> Filter {
        let (genus_min, genus_max) = self.genus.unwrap_or((0, usize::MAX));
        Filter {
            genus_min,
            genus_max,
            max_depth: self.max_depth,
        }
    }

    fn admits_genus(&self, genus: usize) -> bool {
        self.genus.is_none_or(|(lo, hi)| lo <= genus && genus <= hi)
    }
}

/// Exact count of the semigroups with a given corner, with its genus
/// distribution and traversal statistics.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationReport {
    pub corner: Point,
    pub order: MonomialOrder,
    #[serde(with = "crate::decimal")]
    pub total: BigUint,
    pub genus_histogram: BTreeMap<usize, u64>,
    pub max_depth: usize,
    pub nodes_expanded: u64,
}

/// How a corner maps onto the bitmask engine.
#[derive(Debug, Clone)]
enum Plan {
    /// `c = 0`: only `ℕ₀^d`.
    Full { dim: usize },
    Tree {
        tree: Box<CornerTree>,
        unit_positions: Vec<usize>,
        dim: usize,
    },
}

impl Plan {
    fn new(c: &Point, order: MonomialOrder) -> Result<Plan> {
        if c.dim() == 0 {
            return Err(GnsError::ZeroDimension);
        }
        if !is_realizable_corner(c) {
            return Err(GnsError::UnrealizableCorner(c.clone()));
        }
        if c.is_zero() {
            return Ok(Plan::Full { dim: c.dim() });
        }
        let unit_positions: Vec<usize> = (0..c.dim()).filter(|&i| c.coords()[i] == 1).collect();
        let reduced = c.erase(&unit_positions);
        match reduced.coord_product() {
            Some(n) if n <= MAX_BOX => {}
            _ => return Err(GnsError::TooLarge(c.clone())),
        }
        Ok(Plan::Tree {
            tree: Box::new(CornerTree::new(&reduced, order)),
            unit_positions,
            dim: c.dim(),
        })
    }

    fn to_gns(&self, h: Mask) -> Gns {
        match self {
            Plan::Full { dim } => Gns::full(*dim),
            Plan::Tree {
                tree,
                unit_positions,
                dim,
            } => {
                let gaps = tree
                    .gaps(h)
                    .into_iter()
                    .map(|g| g.insert_zeros(unit_positions))
                    .collect();
                Gns::from_canonical(*dim, gaps)
            }
        }
    }
}

fn with_pool<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> T {
    if jobs <= 1 {
        return f();
    }
    match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
        Ok(pool) => pool.install(f),
        Err(_) => f(),
    }
}

/// Lazily yields every semigroup with corner `c` exactly once, in a
/// deterministic order (preorder or level order, children sorted by `≺`).
pub struct CornerEnumeration {
    plan: Plan,
    options: EnumerateOptions,
    state: EnumState,
}

enum EnumState {
    FullPending(bool),
    Tree { walk: Walk<'static> },
}

impl CornerEnumeration {
    fn new(plan: Plan, options: EnumerateOptions) -> Self {
        let state = match &plan {
            Plan::Full { .. } => EnumState::FullPending(options.admits_genus(0)),
            Plan::Tree { tree, .. } => {
                // The walk borrows the boxed tree, which lives as long as
                // `plan` and never moves.
                let tree: &'static CornerTree = unsafe { &*(tree.as_ref() as *const CornerTree) };
                EnumState::Tree {
                    walk: Walk::new(
                        tree,
                        options.filter(),
                        options.traversal == Traversal::BreadthFirst,
                    ),
                }
            }
        };
        CornerEnumeration {
            plan,
            options,
            state,
        }
    }

    pub fn options(&self) -> &EnumerateOptions {
        &self.options
    }
}

impl Iterator for CornerEnumeration {
    type Item = Gns;

    fn next(&mut self) -> Option<Gns> {
        match &mut self.state {
            EnumState::FullPending(pending) => {
                if std::mem::take(pending) {
                    Some(self.plan.to_gns(0))
                } else {
                    None
                }
            }
            EnumState::Tree { walk } => walk.next().map(|h| self.plan.to_gns(h)),
        }
    }
}

pub fn enumerate_corner(
    c: &Point,
    order: MonomialOrder,
    options: &EnumerateOptions,
) -> Result<CornerEnumeration> {
    Ok(CornerEnumeration::new(
        Plan::new(c, order)?,
        options.clone(),
    ))
}

/// All semigroups with corner `c`, materialized. With `jobs > 1` subtrees are
/// built in parallel; the sequence is the same as [`enumerate_corner`] in
/// depth-first mode.
pub fn enumerate_corner_all(
    c: &Point,
    order: MonomialOrder,
    options: &EnumerateOptions,
) -> Result<Vec<Gns>> {
    let plan = Plan::new(c, order)?;
    if options.jobs <= 1 || options.traversal == Traversal::BreadthFirst {
        return Ok(CornerEnumeration::new(plan, options.clone()).collect());
    }
    match &plan {
        Plan::Full { .. } => Ok(CornerEnumeration::new(plan, options.clone()).collect()),
        Plan::Tree { tree, .. } => {
            let filter = options.filter();
            let masks = with_pool(options.jobs, || tree.collect_parallel(&filter));
            Ok(masks.into_iter().map(|h| plan.to_gns(h)).collect())
        }
    }
}

/// `N(c)` with the full genus histogram, single-threaded.
pub fn count_corner(c: &Point, order: MonomialOrder) -> Result<EnumerationReport> {
    count_corner_with(c, order, &EnumerateOptions::default())
}

pub fn count_corner_with(
    c: &Point,
    order: MonomialOrder,
    options: &EnumerateOptions,
) -> Result<EnumerationReport> {
    let plan = Plan::new(c, order)?;
    let tally = match &plan {
        Plan::Full { .. } => {
            let hit = options.admits_genus(0) as u64;
            Tally {
                total: hit,
                histogram: vec![hit],
                max_depth: 0,
                expanded: 0,
            }
        }
        Plan::Tree { tree, .. } => {
            let filter = options.filter();
            with_pool(options.jobs, || tree.count(&filter, options.jobs > 1))
        }
    };
    let genus_histogram = tally
        .histogram
        .iter()
        .enumerate()
        .filter(|(_, &n)| n > 0)
        .map(|(g, &n)| (g, n))
        .collect();
    Ok(EnumerationReport {
        corner: c.clone(),
        order,
        total: BigUint::from(tally.total),
        genus_histogram,
        max_depth: tally.max_depth,
        nodes_expanded: tally.expanded,
    })
}

/// The tree root `𝒪(c)` for a realizable corner.
pub fn root(c: &Point) -> Result<Gns> {
    if !is_realizable_corner(c) {
        return Err(GnsError::UnrealizableCorner(c.clone()));
    }
    ordinary(c)
}
