//! Brute-force oracles shared by the integration tests and the acceptance
//! harness. Each one follows its definition literally and is independent of
//! the optimized library code it is compared with.

#![allow(dead_code)]

use std::cmp::Ordering;

use monotree::drawing::Drawing;
use monotree::tree::RootedTree;
use monotree::PrimitiveVector;
use rand::Rng;

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// All coprime `(x, y)` in `[1, d]^2`, sorted by slope y/x.
pub fn gcd_box(d: u64) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    for x in 1..=d {
        for y in 1..=d {
            if gcd(x, y) == 1 {
                out.push((x, y));
            }
        }
    }
    out.sort_by(|a, b| slope_cmp(*a, *b));
    out
}

fn slope_cmp(a: (u64, u64), b: (u64, u64)) -> Ordering {
    (a.1 as u128 * b.0 as u128).cmp(&(b.1 as u128 * a.0 as u128))
}

/// First gap that holds fewer than `f` new vectors, scanning Δ upwards:
/// `(Δ, lo, hi, count)` with boundary vectors as `(1,0)` and `(0,1)`.
pub fn brute_certify(f: u64, d: u64, delta_max: u64) -> Option<(u64, (u64, u64), (u64, u64), u64)> {
    for delta in 1..=delta_max {
        let mut members = vec![(1, 0)];
        members.extend(gcd_box(delta));
        members.push((0, 1));
        let big = gcd_box(d * delta);
        for w in members.windows(2) {
            let (lo, hi) = (w[0], w[1]);
            let count = big
                .iter()
                .filter(|&&v| {
                    slope_cmp(lo, v) == Ordering::Less && slope_cmp(v, hi) == Ordering::Less
                })
                .count() as u64;
            if count < f {
                return Some((delta, lo, hi, count));
            }
        }
    }
    None
}

/// Length-decreasing path decomposition by definition: repeatedly take the
/// leaf whose climb to the drawn part is longest, ties to the leftmost leaf.
/// Returns `(leaf, attachment, edge_count)` in peel order.
pub fn brute_ldpd(tree: &RootedTree) -> Vec<(usize, usize, usize)> {
    let n = tree.n();
    let leaves: Vec<usize> = ccw_leaves(tree);
    let mut drawn = vec![false; n];
    drawn[tree.root()] = true;
    let mut used = vec![false; leaves.len()];
    let mut out = Vec::new();
    if n == 1 {
        return out;
    }
    for _ in 0..leaves.len() {
        let mut best: Option<(usize, usize, usize)> = None;
        for (i, &leaf) in leaves.iter().enumerate() {
            if used[i] {
                continue;
            }
            let mut v = leaf;
            let mut len = 0;
            while !drawn[v] {
                v = tree.parent(v).unwrap();
                len += 1;
            }
            if best.map_or(true, |(_, _, l)| len > l) {
                best = Some((i, v, len));
            }
        }
        let (i, att, len) = best.unwrap();
        used[i] = true;
        let mut v = leaves[i];
        while v != att {
            drawn[v] = true;
            v = tree.parent(v).unwrap();
        }
        out.push((leaves[i], att, len));
    }
    out
}

/// Leaves in left-to-right (ccw) order by a recursive walk over children.
pub fn ccw_leaves(tree: &RootedTree) -> Vec<usize> {
    fn walk(t: &RootedTree, v: usize, out: &mut Vec<usize>) {
        if t.children(v).is_empty() {
            out.push(v);
            return;
        }
        for &c in t.children(v) {
            walk(t, c, out);
        }
    }
    let mut out = Vec::new();
    walk(tree, tree.root(), &mut out);
    out
}

/// Monotone iff some integer direction `(p, q)` with `|p|, |q| <= 50` has a
/// strictly positive dot product with every edge.
pub fn dense_monotone(dirs: &[(i64, i64)]) -> bool {
    (-50i64..=50).any(|p| {
        (-50i64..=50).any(|q| {
            (p, q) != (0, 0) && dirs.iter().all(|&(x, y)| p * x + q * y > 0)
        })
    })
}

/// Path between `u` and `w` by walking both ends up to their meeting point.
pub fn naive_path(tree: &RootedTree, mut u: usize, mut w: usize) -> Vec<usize> {
    let mut left = vec![];
    let mut right = vec![];
    while tree.depth(u) > tree.depth(w) {
        left.push(u);
        u = tree.parent(u).unwrap();
    }
    while tree.depth(w) > tree.depth(u) {
        right.push(w);
        w = tree.parent(w).unwrap();
    }
    while u != w {
        left.push(u);
        right.push(w);
        u = tree.parent(u).unwrap();
        w = tree.parent(w).unwrap();
    }
    left.push(u);
    left.extend(right.into_iter().rev());
    left
}

/// Number of unordered pairs whose tree path is not monotone, pair by pair.
pub fn naive_failures(tree: &RootedTree, drawing: &Drawing) -> usize {
    let n = tree.n();
    let mut bad = 0;
    for u in 0..n {
        for w in u + 1..n {
            let path = naive_path(tree, u, w);
            let dirs: Vec<(i64, i64)> = path
                .windows(2)
                .map(|p| {
                    let (a, b) = (drawing.point(p[0]), drawing.point(p[1]));
                    (b.0 - a.0, b.1 - a.1)
                })
                .collect();
            if !exact_monotone(&dirs) {
                bad += 1;
            }
        }
    }
    bad
}

/// Half-plane test for larger coordinates. The open arc of valid normals,
/// if non-empty, is bounded by perpendiculars of input edges; a normal
/// rotated a hair past each perpendicular towards its edge lands inside
/// whenever the arc is wider than about `2^-40` rad, which any non-empty
/// arc between integer directions with components below `10^5` is.
pub fn exact_monotone(dirs: &[(i64, i64)]) -> bool {
    let big = 1i128 << 40;
    let mut cands: Vec<(i128, i128)> = Vec::new();
    for &(x, y) in dirs {
        let (x, y) = (x as i128, y as i128);
        cands.push((x, y));
        cands.push((-y * big + x, x * big + y));
        cands.push((y * big + x, -x * big + y));
    }
    dirs.is_empty()
        || cands.iter().any(|&(p, q)| {
            dirs.iter().all(|&(x, y)| p * x as i128 + q * y as i128 > 0)
        })
}

/// Parent of vertex `k` uniform over `0..k`.
pub fn random_tree(rng: &mut impl Rng, n: usize) -> RootedTree {
    let parents: Vec<Option<usize>> = (0..n).map(|k| (k > 0).then(|| rng.gen_range(0..k))).collect();
    RootedTree::from_parents(&parents).unwrap()
}

/// Fisher-Yates shuffle of the tree's leaves.
pub fn random_perm(rng: &mut impl Rng, tree: &RootedTree) -> Vec<usize> {
    let mut p: Vec<usize> = tree.leaves_ccw().into_vec();
    let t = p.len();
    for i in (1..t).rev() {
        p.swap(i, rng.gen_range(0..=i));
    }
    p
}

pub fn pv(x: u64, y: u64) -> PrimitiveVector {
    PrimitiveVector::new(x, y).unwrap()
}
