//! Property checks shared by the proptest suites and the acceptance runner.
//! Each check returns `Err` with a message instead of panicking so callers
//! can drive it from a `TestRunner`.

use std::collections::BTreeSet;

use gns_core::{
    children, corner_preserving_gaps, count_corner, enumerate_corner_all, has_corner, low, lub,
    omega_region, omega_union, ordinary, parent, pseudo_frobenius, remove_generator, special_gaps,
    unitary_extension, Gns, MonomialOrder, Point,
};
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

/// Corners with `d ≤ 4`, `2 ≤ c_i ≤ 6` and box size at most `max_box`.
pub fn corner(min_dim: usize, max_box: u64) -> impl Strategy<Value = Point> {
    (min_dim..=4usize)
        .prop_flat_map(|d| prop::collection::vec(2u64..=6, d))
        .prop_filter("box too large", move |v| {
            v.iter().product::<u64>() <= max_box
        })
        .prop_map(Point::new)
}

/// A semigroup with corner `c`, reached from `𝒪(c)` by following the child
/// picked by each entry of `choices` until a leaf.
pub fn walk(c: &Point, choices: &[u16]) -> Gns {
    let mut s = ordinary(c).expect("realizable corner");
    for &k in choices {
        let kids = children(&s, c, MonomialOrder::Lex).expect("corner holds along the walk");
        if kids.is_empty() {
            break;
        }
        s = kids[k as usize % kids.len()].clone();
    }
    s
}

pub fn gns_with_corner(max_box: u64) -> impl Strategy<Value = (Point, Gns)> {
    (
        corner(1, max_box),
        prop::collection::vec(any::<u16>(), 0..48),
    )
        .prop_map(|(c, choices)| {
            let s = walk(&c, &choices);
            (c, s)
        })
}

fn box_size(c: &Point) -> u64 {
    c.coords().iter().product()
}

/// (a) `corner(S) = lub(H(S)) + 1 = lub(PF(S)) + 1`.
pub fn corner_identities(c: &Point, s: &Gns) -> Result<(), TestCaseError> {
    prop_assert_eq!(&s.corner(), c);
    prop_assert!(has_corner(s, c));
    prop_assert_eq!(&lub(s.gaps()).unwrap().plus_ones(), c);
    let pf = pseudo_frobenius(s).unwrap();
    prop_assert_eq!(&lub(&pf).unwrap().plus_ones(), c);
    Ok(())
}

/// (b) `Σ⌈c_i/2⌉ ≤ g ≤ |c| − 1`, with equality on the right iff ordinary.
pub fn genus_sandwich(c: &Point, s: &Gns) -> Result<(), TestCaseError> {
    let g = s.genus() as u64;
    let lo: u64 = c.coords().iter().map(|ci| ci.div_ceil(2)).sum();
    let hi = box_size(c) - 1;
    prop_assert!(lo <= g && g <= hi, "genus {} outside [{}, {}]", g, lo, hi);
    prop_assert_eq!(g == hi, s.is_ordinary());
    prop_assert_eq!(s.is_ordinary(), s == &ordinary(c).unwrap());
    Ok(())
}

/// (c) `Σ c_i ≤ 2g`.
pub fn sum_bound(c: &Point, s: &Gns) -> Result<(), TestCaseError> {
    let sum: u64 = c.coords().iter().sum();
    prop_assert!(sum <= 2 * s.genus() as u64);
    Ok(())
}

/// (d) Adding a corner-preserving special gap and removing it again is the
/// identity, and so is the parent step followed by re-adding `low(S)`.
pub fn extension_removal(c: &Point, s: &Gns) -> Result<(), TestCaseError> {
    let sg = special_gaps(s).unwrap();
    for x in corner_preserving_gaps(s).unwrap() {
        prop_assert!(sg.contains(&x));
        let t = unitary_extension(s, &x).unwrap();
        prop_assert_eq!(&t.corner(), c);
        prop_assert_eq!(t.genus() + 1, s.genus());
        prop_assert_eq!(&remove_generator(&t, &x).unwrap(), s);
    }
    if !s.is_ordinary() {
        let m = low(s, MonomialOrder::Lex).unwrap();
        let up = parent(s, MonomialOrder::Lex).unwrap();
        prop_assert_eq!(&up.corner(), c);
        prop_assert_eq!(&unitary_extension(&up, &m).unwrap(), s);
    }
    Ok(())
}

/// (e) Each order is total, has `0` as least element, extends `≤`, and is
/// compatible with addition and transitive.
pub fn order_axioms(x: &Point, y: &Point, z: &Point) -> Result<(), TestCaseError> {
    let zero = Point::zero(x.dim());
    for o in MonomialOrder::ALL {
        let xy = o.compare(x, y).unwrap();
        prop_assert_eq!(xy.reverse(), o.compare(y, x).unwrap());
        prop_assert_eq!(xy.is_eq(), x == y);
        prop_assert!(o.compare(&zero, x).unwrap().is_le());
        if x.leq(y).unwrap() {
            prop_assert!(xy.is_le());
        }
        prop_assert_eq!(o.compare(&x.add(z), &y.add(z)).unwrap(), xy);
        let yz = o.compare(y, z).unwrap();
        if xy.is_le() && yz.is_le() {
            prop_assert!(o.compare(x, z).unwrap().is_le());
        }
    }
    Ok(())
}

pub fn order_triple() -> impl Strategy<Value = (Point, Point, Point)> {
    (1usize..=4).prop_flat_map(|d| {
        let pt = || prop::collection::vec(0u64..8, d).prop_map(Point::new);
        (pt(), pt(), pt())
    })
}

/// (f) The regions `Ω_J` partition `C(c−1)` and `|Ω_∅| = Π⌈c_i/2⌉`.
pub fn omega_partition(c: &Point) -> Result<(), TestCaseError> {
    let d = c.dim();
    let mut seen = BTreeSet::new();
    for mask in 0..(1usize << d) {
        let axes: Vec<usize> = (0..d).filter(|i| mask >> i & 1 == 1).collect();
        for x in omega_region(c, &axes).unwrap() {
            prop_assert!(x.coords().iter().zip(c.coords()).all(|(xi, ci)| xi < ci));
            prop_assert!(seen.insert(x), "regions overlap");
        }
    }
    prop_assert_eq!(seen.len() as u64, box_size(c));
    let empty = omega_region(c, &[]).unwrap().len() as u64;
    prop_assert_eq!(
        empty,
        c.coords().iter().map(|ci| ci.div_ceil(2)).product::<u64>()
    );
    Ok(())
}

/// (g) The three orders give the same count and the same vertex set.
pub fn order_invariance(c: &Point) -> Result<(), TestCaseError> {
    let base: BTreeSet<Gns> = enumerate_corner_all(c, MonomialOrder::Lex, &Default::default())
        .unwrap()
        .into_iter()
        .collect();
    for o in MonomialOrder::ALL {
        prop_assert_eq!(count_corner(c, o).unwrap().total, base.len().into());
        let set: BTreeSet<Gns> = enumerate_corner_all(c, o, &Default::default())
            .unwrap()
            .into_iter()
            .collect();
        prop_assert!(set == base, "vertex sets differ under {}", o);
    }
    Ok(())
}

/// (h) `A ∪ 𝒪(c)` is a semigroup with corner `c`; `picks` select `J` and `A`.
pub fn omega_union_valid(c: &Point, axes_mask: usize, picks: &[bool]) -> Result<(), TestCaseError> {
    let d = c.dim();
    let mask = axes_mask % ((1 << d) - 1) + 1;
    let axes: Vec<usize> = (0..d).filter(|i| mask >> i & 1 == 1).collect();
    let region = omega_region(c, &axes).unwrap();
    let subset: Vec<Point> = region
        .into_iter()
        .zip(picks.iter().cycle())
        .filter(|(_, &keep)| keep)
        .map(|(x, _)| x)
        .collect();
    let s = omega_union(c, &axes, &subset).unwrap();
    prop_assert!(has_corner(&s, c));
    prop_assert_eq!(&s.corner(), c);
    prop_assert_eq!(s.genus() + subset.len() + 1, box_size(c) as usize);
    Ok(())
}
