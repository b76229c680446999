//! Bitmask engine for the corner tree.
//!
//! A node is the gap set of a semigroup with corner `c`, stored as a bitmask
//! over `C(c−1)` indexed in mixed radix with coordinate 0 most significant,
//! so that index order is lex order and `index(x + s) = index(x) + index(s)`
//! whenever `x + s` stays inside the box. Points outside the box are always
//! elements of the semigroup.

use rayon::prelude::*;

use crate::lattice::{box_points, MonomialOrder, Point};

pub(crate) type Mask = u128;
pub(crate) const MAX_BOX: u64 = Mask::BITS as u64;

/// Nodes deeper than this are counted sequentially inside one task.
const SPLIT_DEPTH: usize = 3;

#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct Filter {
    pub genus_min: usize,
    pub genus_max: usize,
    pub max_depth: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub(crate) struct Tally {
    pub total: u64,
    pub histogram: Vec<u64>,
    pub max_depth: usize,
    pub expanded: u64,
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        if self.histogram.len() < other.histogram.len() {
            self.histogram.resize(other.histogram.len(), 0);
        }
        for (a, b) in self.histogram.iter_mut().zip(&other.histogram) {
            *a += b;
        }
        self.total += other.total;
        self.max_depth = self.max_depth.max(other.max_depth);
        self.expanded += other.expanded;
        self
    }
}

fn bits(mut m: Mask) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(i)
        }
    })
}

#[derive(Debug, Clone)]
pub(crate) struct CornerTree {
    order: MonomialOrder,
    points: Vec<Point>,
    /// `fits[s]`: indices `x` with `x + points[s]` inside the box.
    fits: Vec<Mask>,
    /// index of `2x`, when inside the box
    doubles: Vec<Option<usize>>,
    /// `faces[i]`: indices with coordinate `i` equal to `c_i − 1`.
    faces: Vec<Mask>,
    /// position of each index in the `≺` order
    rank: Vec<usize>,
    /// `before[x]`: indices strictly `≺`-smaller than `x`.
    before: Vec<Mask>,
    nonzero: Mask,
}

impl CornerTree {
    /// Every coordinate of `corner` must be at least 1, one of them at least
    /// 2, and `|corner| ≤ MAX_BOX`.
    pub fn new(corner: &Point, order: MonomialOrder) -> Self {
        let top = corner.minus_ones().expect("positive corner");
        let size = corner.coord_product().expect("bounded box") as usize;
        assert!(size as u64 <= MAX_BOX && size >= 2);
        let points: Vec<Point> = box_points(&top).collect();
        debug_assert_eq!(points.len(), size);

        let index_of = |x: &Point| -> Option<usize> {
            if !x.le_unchecked(&top) {
                return None;
            }
            Some(
                x.coords()
                    .iter()
                    .zip(corner.coords())
                    .fold(0usize, |acc, (&xi, &ci)| acc * ci as usize + xi as usize),
            )
        };

        let fits = points
            .iter()
            .map(|s| {
                points
                    .iter()
                    .enumerate()
                    .filter(|(_, x)| x.add(s).le_unchecked(&top))
                    .fold(0, |m, (i, _)| m | 1 << i)
            })
            .collect();
        let doubles = points.iter().map(|x| index_of(&x.scale(2))).collect();
        let faces = (0..corner.dim())
            .map(|i| {
                points
                    .iter()
                    .enumerate()
                    .filter(|(_, x)| x.coords()[i] == top.coords()[i])
                    .fold(0, |m, (j, _)| m | 1 << j)
            })
            .collect();

        let mut by_order: Vec<usize> = (0..size).collect();
        by_order.sort_by(|&a, &b| order.cmp_unchecked(&points[a], &points[b]));
        let mut rank = vec![0; size];
        let mut before = vec![0; size];
        let mut acc: Mask = 0;
        for (r, &i) in by_order.iter().enumerate() {
            rank[i] = r;
            before[i] = acc;
            acc |= 1 << i;
        }
        debug_assert_eq!(by_order[0], 0);

        let full: Mask = if size == 128 { !0 } else { (1 << size) - 1 };
        CornerTree {
            order,
            points,
            fits,
            doubles,
            faces,
            rank,
            before,
            nonzero: full & !1,
        }
    }

    pub fn root(&self) -> Mask {
        self.nonzero
    }

    pub fn root_genus(&self) -> usize {
        self.nonzero.count_ones() as usize
    }

    pub fn gaps(&self, h: Mask) -> Vec<Point> {
        bits(h).map(|i| self.points[i].clone()).collect()
    }

    /// `D_≺` of the node `h`, as a mask.
    pub fn candidates(&self, h: Mask) -> Mask {
        let small = self.nonzero & !h;
        let mut not_pf: Mask = 0;
        for s in bits(small) {
            not_pf |= h & self.fits[s] & (h >> s);
        }
        let pf = h & !not_pf;
        let special = bits(pf)
            .filter(|&x| self.doubles[x].is_none_or(|dx| h >> dx & 1 == 0))
            .fold(0, |m, x| m | 1 << x);
        let blocked = self
            .faces
            .iter()
            .map(|f| h & f)
            .filter(|g| g.count_ones() == 1)
            .fold(0, |m, g| m | g);
        let mut d = special & !blocked;
        if small != 0 {
            let low = bits(small).min_by_key(|&i| self.rank[i]).expect("nonempty");
            d &= self.before[low];
        }
        d
    }

    /// Children of `h` in `≺` order of the added element.
    pub fn children(&self, h: Mask) -> Vec<Mask> {
        let mut xs: Vec<usize> = bits(self.candidates(h)).collect();
        if self.order != MonomialOrder::Lex {
            xs.sort_by_key(|&x| self.rank[x]);
        }
        xs.into_iter().map(|x| h & !(1 << x)).collect()
    }

    fn depth(&self, h: Mask) -> usize {
        self.root_genus() - h.count_ones() as usize
    }

    /// Records `h`; returns whether its subtree should be explored.
    fn visit(&self, h: Mask, filter: &Filter, tally: &mut Tally) -> bool {
        let genus = h.count_ones() as usize;
        if genus < filter.genus_min {
            return false;
        }
        let depth = self.depth(h);
        tally.max_depth = tally.max_depth.max(depth);
        if genus <= filter.genus_max {
            tally.total += 1;
            if tally.histogram.len() <= genus {
                tally.histogram.resize(genus + 1, 0);
            }
            tally.histogram[genus] += 1;
        }
        filter.max_depth.is_none_or(|m| depth < m)
    }

    fn count_sequential(&self, h: Mask, filter: &Filter) -> Tally {
        let mut tally = Tally::default();
        let mut stack = vec![h];
        while let Some(node) = stack.pop() {
            if self.visit(node, filter, &mut tally) {
                tally.expanded += 1;
                // Counting does not need the children in `≺` order.
                stack.extend(bits(self.candidates(node)).map(|x| node & !(1 << x)));
            }
        }
        tally
    }

    fn count_split(&self, h: Mask, filter: &Filter, split: usize) -> Tally {
        if split == 0 {
            return self.count_sequential(h, filter);
        }
        let mut tally = Tally::default();
        if !self.visit(h, filter, &mut tally) {
            return tally;
        }
        tally.expanded += 1;
        self.children(h)
            .into_par_iter()
            .map(|child| self.count_split(child, filter, split - 1))
            .reduce(Tally::default, Tally::merge)
            .merge(tally)
    }

    /// Counts the filtered subtree under the root. `parallel` spreads the
    /// top levels over the current rayon pool.
    pub fn count(&self, filter: &Filter, parallel: bool) -> Tally {
        if parallel {
            self.count_split(self.root(), filter, SPLIT_DEPTH)
        } else {
            self.count_sequential(self.root(), filter)
        }
    }

    fn collect_preorder(&self, h: Mask, filter: &Filter, split: usize, out: &mut Vec<Mask>) {
        let mut scratch = Tally::default();
        if split == 0 {
            let mut stack = vec![h];
            while let Some(node) = stack.pop() {
                let expand = self.visit(node, filter, &mut scratch);
                if node.count_ones() as usize >= filter.genus_min
                    && node.count_ones() as usize <= filter.genus_max
                {
                    out.push(node);
                }
                if expand {
                    stack.extend(self.children(node).into_iter().rev());
                }
            }
            return;
        }
        let genus = h.count_ones() as usize;
        let expand = self.visit(h, filter, &mut scratch);
        if genus >= filter.genus_min && genus <= filter.genus_max {
            out.push(h);
        }
        if !expand {
            return;
        }
        let parts: Vec<Vec<Mask>> = self
            .children(h)
            .into_par_iter()
            .map(|child| {
                let mut part = Vec::new();
                self.collect_preorder(child, filter, split - 1, &mut part);
                part
            })
            .collect();
        out.extend(parts.into_iter().flatten());
    }

    /// All filtered nodes in depth-first preorder, building subtrees in
    /// parallel on the current rayon pool. Same sequence as [`Walk`].
    pub fn collect_parallel(&self, filter: &Filter) -> Vec<Mask> {
        let mut out = Vec::new();
        self.collect_preorder(self.root(), filter, SPLIT_DEPTH, &mut out);
        out
    }
}

/// Lazy traversal of the filtered tree, depth-first preorder or level order.
#[derive(Debug, Clone)]
pub(crate) struct Walk<'a> {
    tree: &'a CornerTree,
    filter: Filter,
    breadth_first: bool,
    stack: Vec<Mask>,
    level: Vec<Mask>,
    next_level: Vec<Mask>,
}

impl<'a> Walk<'a> {
    pub fn new(tree: &'a CornerTree, filter: Filter, breadth_first: bool) -> Self {
        let root = tree.root();
        Walk {
            tree,
            filter,
            breadth_first,
            stack: if breadth_first {
                Vec::new()
            } else {
                vec![root]
            },
            level: if breadth_first {
                vec![root]
            } else {
                Vec::new()
            },
            next_level: Vec::new(),
        }
    }

    fn step(&mut self) -> Option<Mask> {
        let node = if self.breadth_first {
            if self.level.is_empty() {
                std::mem::swap(&mut self.level, &mut self.next_level);
                self.level.reverse();
            }
            self.level.pop()?
        } else {
            self.stack.pop()?
        };
        let mut scratch = Tally::default();
        if self.tree.visit(node, &self.filter, &mut scratch) {
            let kids = self.tree.children(node);
            if self.breadth_first {
                self.next_level.extend(kids);
            } else {
                self.stack.extend(kids.into_iter().rev());
            }
        }
        Some(node)
    }
}

impl Iterator for Walk<'_> {
    type Item = Mask;

    fn next(&mut self) -> Option<Mask> {
        loop {
            let node = self.step()?;
            let genus = node.count_ones() as usize;
            if genus >= self.filter.genus_min && genus <= self.filter.genus_max {
                return Some(node);
            }
        }
    }
}
