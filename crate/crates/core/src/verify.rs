//! Exact-arithmetic checks on drawings.
//!
//! A drawn path is monotone iff its edge directions fit in an open
//! half-plane, i.e. their circular spread is strictly under a half turn.
//! Nothing here uses floating point.

use std::cmp::Ordering;

use num_integer::Integer;
use rayon::prelude::*;
use serde::Serialize;

use crate::drawing::Drawing;
use crate::error::{Error, Result};
use crate::tree::RootedTree;

/// Witnesses kept in a report; the count of failures is always exact.
pub const MAX_WITNESSES: usize = 100;

fn cross(a: (i64, i64), b: (i64, i64)) -> i128 {
    a.0 as i128 * b.1 as i128 - a.1 as i128 * b.0 as i128
}

fn dot(a: (i64, i64), b: (i64, i64)) -> i128 {
    a.0 as i128 * b.0 as i128 + a.1 as i128 * b.1 as i128
}

/// 0 for angles in `[0°, 180°)`, 1 for `[180°, 360°)`.
fn half(a: (i64, i64)) -> u8 {
    if a.1 > 0 || (a.1 == 0 && a.0 > 0) {
        0
    } else {
        1
    }
}

fn angle_cmp(a: (i64, i64), b: (i64, i64)) -> Ordering {
    half(a).cmp(&half(b)).then_with(|| 0.cmp(&cross(a, b)))
}

/// True iff the directions fit in a wedge strictly narrower than 180°.
///
/// Directions are reduced by their gcd and sorted by angle; the set is
/// monotone iff some circular gap between consecutive distinct directions
/// exceeds a half turn, which is exactly a negative cross product.
pub fn path_is_monotone(dirs: &[(i64, i64)]) -> Result<bool> {
    let mut unit: Vec<(i64, i64)> = Vec::with_capacity(dirs.len());
    for &(x, y) in dirs {
        if x == 0 && y == 0 {
            return Err(Error::ZeroDirection);
        }
        let g = x.gcd(&y);
        unit.push((x / g, y / g));
    }
    unit.sort_by(|&a, &b| angle_cmp(a, b));
    unit.dedup();
    if unit.len() <= 1 {
        return Ok(true);
    }
    let k = unit.len();
    Ok((0..k).any(|i| cross(unit[i], unit[(i + 1) % k]) < 0))
}

/// Smallest wedge holding every direction seen so far along a path.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Wedge {
    Empty,
    Span((i64, i64), (i64, i64)),
    Broken,
}

impl Wedge {
    fn extend(self, e: (i64, i64)) -> Wedge {
        match self {
            Wedge::Empty => Wedge::Span(e, e),
            Wedge::Broken => Wedge::Broken,
            Wedge::Span(lo, hi) => {
                let from_lo = cross(lo, e);
                let to_hi = cross(e, hi);
                let opposite = from_lo == 0 && dot(lo, e) < 0;
                if from_lo >= 0 && to_hi >= 0 && !opposite {
                    self
                } else if from_lo > 0 {
                    Wedge::Span(lo, e)
                } else if to_hi > 0 {
                    Wedge::Span(e, hi)
                } else {
                    Wedge::Broken
                }
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum VerifyMode {
    /// Every unordered vertex pair.
    Exhaustive,
    /// Leaf-leaf and leaf-root pairs only. Every tree path extends to one
    /// of these, and sub-paths of monotone paths are monotone.
    LeafReduced,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub u: usize,
    pub w: usize,
    pub path: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub mode: VerifyMode,
    pub pairs_checked: u64,
    pub failure_count: u64,
    /// The lexicographically smallest failing pairs, at most [`MAX_WITNESSES`].
    pub failures: Vec<Failure>,
}

impl VerificationReport {
    pub fn is_monotone(&self) -> bool {
        self.failure_count == 0
    }
}

#[derive(Default)]
struct Partial {
    pairs: u64,
    failures: u64,
    witnesses: Vec<(usize, usize)>,
}

impl Partial {
    fn merge(mut self, mut other: Partial) -> Partial {
        self.pairs += other.pairs;
        self.failures += other.failures;
        self.witnesses.append(&mut other.witnesses);
        self.witnesses.sort_unstable();
        self.witnesses.truncate(MAX_WITNESSES);
        self
    }
}

struct Adjacency {
    start: Vec<usize>,
    list: Vec<usize>,
}

impl Adjacency {
    fn new(tree: &RootedTree) -> Self {
        let n = tree.n();
        let mut start = Vec::with_capacity(n + 1);
        let mut list = Vec::with_capacity(2 * n);
        start.push(0);
        for v in 0..n {
            list.extend(tree.parent(v));
            list.extend_from_slice(tree.children(v));
            start.push(list.len());
        }
        Adjacency { start, list }
    }

    fn of(&self, v: usize) -> &[usize] {
        &self.list[self.start[v]..self.start[v + 1]]
    }
}

/// Checks the tree path between vertex pairs for monotonicity.
///
/// One DFS per source carries the minimal wedge of the path walked so far,
/// so each source costs `O(n)`. Sources run in parallel on the current
/// rayon pool.
pub fn verify_monotone_drawing(
    tree: &RootedTree,
    drawing: &Drawing,
    mode: VerifyMode,
) -> Result<VerificationReport> {
    let n = tree.n();
    if drawing.n() != n {
        return Err(Error::DrawingSize {
            expected: n,
            got: drawing.n(),
        });
    }
    let coords = drawing.coords();
    for v in 0..n {
        if let Some(p) = tree.parent(v) {
            if coords[v] == coords[p] {
                return Err(Error::ZeroDirection);
            }
        }
    }
    let adj = Adjacency::new(tree);
    let root = tree.root();
    let (sources, is_target): (Vec<usize>, Vec<bool>) = match mode {
        VerifyMode::Exhaustive => ((0..n).collect(), vec![true; n]),
        VerifyMode::LeafReduced => {
            let leaves: Vec<usize> = (0..n).filter(|&v| v != root && tree.is_leaf(v)).collect();
            let mut target = vec![false; n];
            for &l in &leaves {
                target[l] = true;
            }
            target[root] = true;
            (leaves, target)
        }
    };

    let total = sources
        .par_iter()
        .map(|&s| {
            let mut part = Partial::default();
            let mut stack = vec![(s, usize::MAX, Wedge::Empty)];
            while let Some((v, from, wedge)) = stack.pop() {
                // each unordered pair once: from the smaller endpoint, except
                // that in leaf mode the root is only ever a target
                let counted = v != s
                    && is_target[v]
                    && (v > s || (mode == VerifyMode::LeafReduced && v == root));
                if counted {
                    part.pairs += 1;
                    if wedge == Wedge::Broken {
                        part.failures += 1;
                        part.witnesses.push((s.min(v), s.max(v)));
                    }
                }
                for &w in adj.of(v) {
                    if w == from {
                        continue;
                    }
                    let (ax, ay) = coords[v];
                    let (bx, by) = coords[w];
                    stack.push((w, v, wedge.extend((bx - ax, by - ay))));
                }
            }
            part.witnesses.sort_unstable();
            part.witnesses.truncate(MAX_WITNESSES);
            part
        })
        .reduce(Partial::default, Partial::merge);

    Ok(VerificationReport {
        mode,
        pairs_checked: total.pairs,
        failure_count: total.failures,
        failures: total
            .witnesses
            .into_iter()
            .map(|(u, w)| Failure {
                u,
                w,
                path: tree.tree_path(u, w),
            })
            .collect(),
    })
}

/// Outcome of the slope-disjoint check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SlopeDisjointReport {
    pub slope_disjoint: bool,
    /// `(parent, child_a, child_b)` whose slope intervals overlap.
    pub witness: Option<(usize, usize, usize)>,
}

/// Slope as `(dy, dx)` with `dx > 0`, ordered by value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Slope(i64, i64);

impl Ord for Slope {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.0 as i128 * other.1 as i128).cmp(&(other.0 as i128 * self.1 as i128))
    }
}

impl PartialOrd for Slope {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Every vertex gets the slope interval spanned by its parent edge and the
/// edges below it; the drawing is slope-disjoint iff sibling intervals are
/// pairwise strictly disjoint. Nesting in the parent's interval holds by
/// construction. Distinct rational end slopes leave room for the strict
/// real angles the definition asks for.
pub fn verify_slope_disjoint(tree: &RootedTree, drawing: &Drawing) -> Result<SlopeDisjointReport> {
    let n = tree.n();
    if drawing.n() != n {
        return Err(Error::DrawingSize {
            expected: n,
            got: drawing.n(),
        });
    }
    let mut interval: Vec<Option<(Slope, Slope)>> = vec![None; n];
    for v in 0..n {
        if let Some(p) = tree.parent(v) {
            let (ax, ay) = drawing.point(p);
            let (bx, by) = drawing.point(v);
            let (dx, dy) = (bx - ax, by - ay);
            if dx <= 0 || dy <= 0 {
                return Err(Error::EdgeOnAxis(v));
            }
            let s = Slope(dy, dx);
            interval[v] = Some((s, s));
        }
    }
    for v in tree.postorder() {
        let Some(p) = tree.parent(v) else { continue };
        if p == tree.root() {
            continue;
        }
        let (lo, hi) = interval[v].expect("non-root");
        let slot = interval[p].as_mut().expect("non-root");
        slot.0 = slot.0.min(lo);
        slot.1 = slot.1.max(hi);
    }
    for u in 0..n {
        let mut kids: Vec<(Slope, Slope, usize)> = tree
            .children(u)
            .iter()
            .map(|&c| {
                let (lo, hi) = interval[c].expect("non-root");
                (lo, hi, c)
            })
            .collect();
        kids.sort_by(|a, b| a.0.cmp(&b.0));
        for w in kids.windows(2) {
            if w[0].1 >= w[1].0 {
                let (a, b) = (w[0].2.min(w[1].2), w[0].2.max(w[1].2));
                return Ok(SlopeDisjointReport {
                    slope_disjoint: false,
                    witness: Some((u, a, b)),
                });
            }
        }
    }
    Ok(SlopeDisjointReport {
        slope_disjoint: true,
        witness: None,
    })
}

/// Root `0` with twelve pendant paths of `⌊n/12⌋` vertices each.
pub fn build_t0(n: usize) -> Result<RootedTree> {
    if n < 12 {
        return Err(Error::TooSmallForT0(n));
    }
    let k = n / 12;
    let mut parents = vec![None; 12 * k + 1];
    for i in 0..12 {
        let first = 1 + i * k;
        parents[first] = Some(0);
        for v in first + 1..first + k {
            parents[v] = Some(v - 1);
        }
    }
    RootedTree::from_parents(&parents)
}

/// For a drawing of the twelve-path tree: both extents at least the path
/// length `(N - 1) / 12`.
pub fn check_lower_bound(drawing: &Drawing) -> bool {
    let k = (drawing.n().saturating_sub(1) / 12) as i64;
    drawing.width() >= k && drawing.height() >= k
}
