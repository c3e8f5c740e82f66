//! Grid drawings and the three drawing algorithms.
//!
//! Every algorithm reduces to choosing one primitive vector per edge and
//! prefix-summing from the root, so [`draw_from_edge_vectors`] is the
//! single place coordinates are produced.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::decomposition::{c_partition, ldpd, level_count, PathDecomposition};
use crate::error::{Error, Result};
use crate::pool::{assign_vectors, build_pool};
use crate::primitive::{enumerate_primitive, smallest_size_with_count, PrimitiveVector};
use crate::tree::RootedTree;

/// The three drawing algorithms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Algorithm {
    /// Distinct vectors on edges in ccw post-order.
    PostOrder,
    /// One vector per LDPD path, taken from the even-spaced baseline set.
    PathDraw,
    /// Levelled vector pool, grid at most `12n x 12n` for `(3, 3)`.
    Optimal,
}

impl Algorithm {
    pub const ALL: [Algorithm; 3] = [Algorithm::PostOrder, Algorithm::PathDraw, Algorithm::Optimal];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::PostOrder => "post-order",
            Algorithm::PathDraw => "path-draw",
            Algorithm::Optimal => "optimal",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "post-order" | "postorder" | "alg1" => Ok(Algorithm::PostOrder),
            "path-draw" | "path" | "alg2" => Ok(Algorithm::PathDraw),
            "optimal" | "alg3" => Ok(Algorithm::Optimal),
            _ => Err(format!("unknown algorithm {s:?}")),
        }
    }
}

/// Runs `algo` with its default inputs: the baseline vector set for the
/// first two, the pair `(f, d)` for the optimal one.
pub fn draw(tree: &RootedTree, algo: Algorithm, f: u64, d: u64) -> Result<Drawing> {
    match algo {
        Algorithm::PostOrder => tree_monotone_draw(tree, &baseline_vectors(tree.n() - 1)),
        Algorithm::PathDraw => {
            let decomp = ldpd(tree);
            path_draw(tree, &decomp, &baseline_vectors(decomp.len()))
        }
        Algorithm::Optimal => Ok(optimal_draw(tree, f, d)?.drawing),
    }
}

/// Integer grid points for every vertex, plus the edge vectors when the
/// drawing was produced here rather than read from a file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Drawing {
    coords: Vec<(i64, i64)>,
    edge_vectors: Vec<Option<PrimitiveVector>>,
    width: i64,
    height: i64,
}

impl Drawing {
    /// Wraps raw coordinates (e.g. parsed from TSV). No edge vectors.
    pub fn from_coords(coords: Vec<(i64, i64)>) -> Self {
        let (width, height) = extents(&coords);
        let edge_vectors = vec![None; coords.len()];
        Drawing {
            coords,
            edge_vectors,
            width,
            height,
        }
    }

    pub fn n(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[(i64, i64)] {
        &self.coords
    }

    pub fn point(&self, v: usize) -> (i64, i64) {
        self.coords[v]
    }

    /// Vector on the edge into `v`, `None` for the root or file drawings.
    pub fn edge_vector(&self, v: usize) -> Option<PrimitiveVector> {
        self.edge_vectors[v]
    }

    /// Horizontal extent, `max x - min x` (`max x` for drawings made here).
    pub fn width(&self) -> i64 {
        self.width
    }

    pub fn height(&self) -> i64 {
        self.height
    }
}

fn extents(coords: &[(i64, i64)]) -> (i64, i64) {
    if coords.is_empty() {
        return (0, 0);
    }
    let (mut x0, mut x1, mut y0, mut y1) = (i64::MAX, i64::MIN, i64::MAX, i64::MIN);
    for &(x, y) in coords {
        x0 = x0.min(x);
        x1 = x1.max(x);
        y0 = y0.min(y);
        y1 = y1.max(y);
    }
    (x1 - x0, y1 - y0)
}

/// Places the root at the origin and every other vertex at its parent plus
/// the vector of the edge into it. `edge_vectors` is indexed by child.
pub fn draw_from_edge_vectors(
    tree: &RootedTree,
    edge_vectors: Vec<Option<PrimitiveVector>>,
) -> Result<Drawing> {
    let n = tree.n();
    if edge_vectors.len() != n {
        return Err(Error::VectorCount {
            expected: n,
            got: edge_vectors.len(),
        });
    }
    let mut coords = vec![(0i64, 0i64); n];
    let (mut width, mut height) = (0i64, 0i64);
    for &v in tree.preorder() {
        let Some(p) = tree.parent(v) else { continue };
        let vec = edge_vectors[v].ok_or(Error::MissingEdgeVector(v))?;
        let (dx, dy) = vec.as_i64();
        let (px, py) = coords[p];
        let x = px.checked_add(dx).ok_or(Error::Overflow("placing a vertex"))?;
        let y = py.checked_add(dy).ok_or(Error::Overflow("placing a vertex"))?;
        coords[v] = (x, y);
        width = width.max(x);
        height = height.max(y);
    }
    Ok(Drawing {
        coords,
        edge_vectors,
        width,
        height,
    })
}

fn check_sorted(vectors: &[PrimitiveVector]) -> Result<()> {
    match vectors.windows(2).position(|w| w[0] >= w[1]) {
        Some(i) => Err(Error::UnsortedVectors(i + 1)),
        None => Ok(()),
    }
}

/// Post-order baseline: the k-th edge in ccw post-order gets the k-th of
/// `n - 1` distinct slope-sorted vectors. The result is slope-disjoint.
pub fn tree_monotone_draw(tree: &RootedTree, vectors: &[PrimitiveVector]) -> Result<Drawing> {
    let n = tree.n();
    if vectors.len() != n - 1 {
        return Err(Error::VectorCount {
            expected: n - 1,
            got: vectors.len(),
        });
    }
    check_sorted(vectors)?;
    let mut edge_vectors = vec![None; n];
    let root = tree.root();
    for (k, v) in tree.postorder().into_iter().filter(|&v| v != root).enumerate() {
        edge_vectors[v] = Some(vectors[k]);
    }
    draw_from_edge_vectors(tree, edge_vectors)
}

/// `count` slope-sorted vectors spread evenly by index over the smallest
/// `P̄_d` that holds at least `count` vectors.
pub fn baseline_vectors(count: usize) -> Vec<PrimitiveVector> {
    if count == 0 {
        return Vec::new();
    }
    let d = smallest_size_with_count(count as u64);
    let all = enumerate_primitive(d).expect("d >= 1");
    let m = all.len();
    (0..count).map(|i| all[i * m / count]).collect()
}

/// Path Draw: vectors go to the leaves in ccw order (whatever order built
/// the decomposition), and each vector is repeated along its leaf's path.
pub fn path_draw(
    tree: &RootedTree,
    decomp: &PathDecomposition,
    vectors: &[PrimitiveVector],
) -> Result<Drawing> {
    if vectors.len() != decomp.len() {
        return Err(Error::VectorCount {
            expected: decomp.len(),
            got: vectors.len(),
        });
    }
    check_sorted(vectors)?;
    broadcast(tree, decomp, &decomp.ccw_order(tree), vectors)
}

/// Gives every edge of the `rank`-th path in `order` the `rank`-th vector.
fn broadcast(
    tree: &RootedTree,
    decomp: &PathDecomposition,
    order: &[usize],
    vectors: &[PrimitiveVector],
) -> Result<Drawing> {
    let mut edge_vectors = vec![None; tree.n()];
    for (rank, &path) in order.iter().enumerate() {
        for &v in decomp.paths()[path].owned_vertices() {
            edge_vectors[v] = Some(vectors[rank]);
        }
    }
    draw_from_edge_vectors(tree, edge_vectors)
}

/// Per-level accounting of an optimal drawing.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LevelStats {
    pub level: usize,
    pub paths: usize,
    /// Largest vector size handed to a path of this level.
    pub max_vector_size: u64,
    /// `d (d/c)^{j-1} n`, the allowance for this level in the grid bound.
    pub allowance: f64,
    /// Largest x-advance made by this level's edges on a root-to-vertex path.
    pub max_dx: u64,
    pub max_dy: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OptimalStats {
    pub n: usize,
    pub f: u64,
    pub d: u64,
    pub c: u64,
    pub k: usize,
    pub paths: usize,
    pub pool_len: usize,
    pub consumed: usize,
    /// `Σ_j m_j c^{K-j}`, which `consumed` never exceeds.
    pub consumed_bound: u128,
    pub width: i64,
    pub height: i64,
    /// `(f+1) d / ((f+1) - d) · n`.
    pub bound: f64,
    /// Exact check of `max(width, height) <= bound`.
    pub within_bound: bool,
    pub levels: Vec<LevelStats>,
}

#[derive(Debug, Clone)]
pub struct OptimalDrawing {
    pub drawing: Drawing,
    pub decomposition: PathDecomposition,
    /// Level of each decomposition path.
    pub levels: Vec<usize>,
    pub stats: OptimalStats,
}

/// `(f+1) d / ((f+1) - d) · n` as a float, infinite when `f < d`.
pub fn grid_bound(f: u64, d: u64, n: usize) -> f64 {
    let c = f as f64 + 1.0;
    let d = d as f64;
    if c <= d {
        return f64::INFINITY;
    }
    c * d / (c - d) * n as f64
}

/// `extent <= (f+1) d / ((f+1) - d) · n`, in integers.
pub fn within_grid_bound(extent: i64, f: u64, d: u64, n: usize) -> bool {
    let c = f as u128 + 1;
    let d = d as u128;
    if c <= d || extent < 0 {
        return false;
    }
    extent as u128 * (c - d) <= c * d * n as u128
}

/// Optimal Draw: LDPD, c-partition with `c = f + 1`, vector pool of
/// `⌈log_c n⌉` levels, ccw cursor assignment, then Path Draw.
pub fn optimal_draw(tree: &RootedTree, f: u64, d: u64) -> Result<OptimalDrawing> {
    if d == 0 || f < d {
        return Err(Error::InvalidPair { f, d });
    }
    let n = tree.n();
    let c = f + 1;
    let decomposition = ldpd(tree);
    if n == 1 {
        let drawing = draw_from_edge_vectors(tree, vec![None])?;
        let stats = OptimalStats {
            n,
            f,
            d,
            c,
            k: 0,
            paths: 0,
            pool_len: 0,
            consumed: 0,
            consumed_bound: 0,
            width: 0,
            height: 0,
            bound: grid_bound(f, d, n),
            within_bound: true,
            levels: Vec::new(),
        };
        return Ok(OptimalDrawing {
            drawing,
            decomposition,
            levels: Vec::new(),
            stats,
        });
    }
    let k = level_count(c, n);
    let partition = c_partition(&decomposition, c, n)?;
    let pool = build_pool(f, d, k)?;
    let order = decomposition.ccw_order(tree);
    let ccw_levels: Vec<usize> = order.iter().map(|&p| partition.levels[p]).collect();
    let assignment = assign_vectors(&ccw_levels, &pool)?;
    let drawing = broadcast(tree, &decomposition, &order, &assignment.vectors)?;

    let mut levels: Vec<LevelStats> = (1..=k)
        .map(|level| LevelStats {
            level,
            paths: partition.counts[level - 1],
            max_vector_size: 0,
            allowance: d as f64 * (d as f64 / c as f64).powi(level as i32 - 1) * n as f64,
            max_dx: 0,
            max_dy: 0,
        })
        .collect();
    for (rank, &level) in ccw_levels.iter().enumerate() {
        let s = &mut levels[level - 1].max_vector_size;
        *s = (*s).max(assignment.vectors[rank].size());
    }
    let owner = decomposition.edge_owner(n);
    accumulate_level_advances(tree, &drawing, &owner, &partition.levels, &mut levels);

    let (width, height) = (drawing.width(), drawing.height());
    let stats = OptimalStats {
        n,
        f,
        d,
        c,
        k,
        paths: decomposition.len(),
        pool_len: pool.len(),
        consumed: assignment.consumed,
        consumed_bound: partition.weighted_sum(),
        width,
        height,
        bound: grid_bound(f, d, n),
        within_bound: within_grid_bound(width.max(height), f, d, n),
        levels,
    };
    Ok(OptimalDrawing {
        drawing,
        decomposition,
        levels: partition.levels,
        stats,
    })
}

/// Fills `max_dx`/`max_dy`: per level, the largest total advance its edges
/// contribute along any root-to-vertex path. Levels never decrease going
/// down (a path only attaches to a path at least as long), so each level's
/// edges on a root path form one run and a single pre-order pass suffices.
fn accumulate_level_advances(
    tree: &RootedTree,
    drawing: &Drawing,
    owner: &[Option<usize>],
    path_levels: &[usize],
    levels: &mut [LevelStats],
) {
    let n = tree.n();
    let level_of = |v: usize| owner[v].map(|p| path_levels[p]);
    let mut run = vec![(0u64, 0u64); n];
    for &v in tree.preorder() {
        let Some(p) = tree.parent(v) else { continue };
        let j = level_of(v).expect("every edge has an owner");
        let e = drawing.edge_vector(v).expect("optimal drawings carry edge vectors");
        let (bx, by) = if level_of(p) == Some(j) { run[p] } else { (0, 0) };
        let here = (bx + e.x(), by + e.y());
        run[v] = here;
        let l = &mut levels[j - 1];
        l.max_dx = l.max_dx.max(here.0);
        l.max_dy = l.max_dy.max(here.1);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::parse_tree;

    fn v(x: u64, y: u64) -> PrimitiveVector {
        PrimitiveVector::new(x, y).unwrap()
    }

    fn path_tree(n: usize) -> RootedTree {
        RootedTree::from_parents(&(0..n).map(|i| i.checked_sub(1)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn prefix_sums() {
        let t = path_tree(4);
        let d = draw_from_edge_vectors(&t, vec![None, Some(v(1, 1)), Some(v(1, 1)), Some(v(1, 1))])
            .unwrap();
        assert_eq!(d.coords(), &[(0, 0), (1, 1), (2, 2), (3, 3)]);
        assert_eq!((d.width(), d.height()), (3, 3));

        let star: RootedTree = "0 1\n0 2\n0 3".parse().unwrap();
        let d = draw_from_edge_vectors(
            &star,
            vec![None, Some(v(2, 1)), Some(v(1, 1)), Some(v(1, 2))],
        )
        .unwrap();
        assert_eq!(d.coords()[1..], [(2, 1), (1, 1), (1, 2)]);
    }

    #[test]
    fn missing_vector() {
        let t = path_tree(3);
        assert_eq!(
            draw_from_edge_vectors(&t, vec![None, Some(v(1, 1)), None]),
            Err(Error::MissingEdgeVector(2))
        );
    }

    #[test]
    fn post_order_assignment() {
        let t = path_tree(2);
        let d = tree_monotone_draw(&t, &[v(1, 1)]).unwrap();
        assert_eq!(d.point(1), (1, 1));

        // on a path post-order runs leaf to root: the leaf edge is flattest
        let t = path_tree(4);
        let d = tree_monotone_draw(&t, &[v(3, 1), v(2, 1), v(1, 1)]).unwrap();
        assert_eq!(d.edge_vector(3), Some(v(3, 1)));
        assert_eq!(d.edge_vector(1), Some(v(1, 1)));

        assert!(matches!(
            tree_monotone_draw(&t, &[v(1, 1)]),
            Err(Error::VectorCount { expected: 3, got: 1 })
        ));
        assert_eq!(
            tree_monotone_draw(&t, &[v(1, 1), v(2, 1), v(1, 2)]),
            Err(Error::UnsortedVectors(1))
        );
    }

    #[test]
    fn baseline_spacing() {
        assert!(baseline_vectors(0).is_empty());
        assert_eq!(baseline_vectors(1), vec![v(1, 1)]);
        let b = baseline_vectors(5);
        // P̄_3 has 7 vectors; indices 0, 1, 2, 4, 5
        assert_eq!(b, vec![v(3, 1), v(2, 1), v(3, 2), v(2, 3), v(1, 2)]);
        let big = baseline_vectors(1000);
        assert_eq!(big.len(), 1000);
        assert!(big.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn path_draw_hand_trace() {
        let t = parse_tree("0 1\n1 2\n2 3\n0 4").unwrap();
        let decomp = ldpd(&t);
        let d = path_draw(&t, &decomp, &[v(1, 1), v(1, 2)]).unwrap();
        assert_eq!(d.point(3), (3, 3));
        assert_eq!(d.point(4), (1, 2));

        let star: RootedTree = "0 1\n0 2\n0 3".parse().unwrap();
        let d = path_draw(&star, &ldpd(&star), &[v(2, 1), v(1, 1), v(1, 2)]).unwrap();
        assert_eq!(d.coords()[1..], [(2, 1), (1, 1), (1, 2)]);

        assert!(matches!(
            path_draw(&star, &ldpd(&star), &[v(1, 1)]),
            Err(Error::VectorCount { expected: 3, got: 1 })
        ));
    }

    #[test]
    fn optimal_small_cases() {
        let single = RootedTree::singleton();
        let o = optimal_draw(&single, 3, 3).unwrap();
        assert_eq!(o.drawing.coords(), &[(0, 0)]);
        assert_eq!((o.stats.width, o.stats.height), (0, 0));

        let t = path_tree(50);
        let o = optimal_draw(&t, 3, 3).unwrap();
        assert_eq!(o.stats.paths, 1);
        // one level-1 path takes the flattest pool entry, (3^K, 1)-ish
        let first = o.drawing.edge_vector(1).unwrap();
        assert!(t.preorder().iter().skip(1).all(|&w| o.drawing.edge_vector(w) == Some(first)));
        assert!(o.stats.width <= 3 * 49 && o.stats.height <= 3 * 49);
        assert!(o.stats.within_bound);

        assert_eq!(optimal_draw(&t, 2, 3).unwrap_err(), Error::InvalidPair { f: 2, d: 3 });
    }

    #[test]
    fn optimal_stats_are_consistent() {
        let t = parse_tree(
            "0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n0 7\n7 8\n8 9\n1 10\n10 11\n2 12",
        )
        .unwrap();
        let o = optimal_draw(&t, 3, 3).unwrap();
        let s = &o.stats;
        assert_eq!((s.c, s.k, s.paths), (4, 2, 4));
        assert_eq!(s.pool_len, 31);
        assert!(s.consumed as u128 <= s.consumed_bound);
        assert_eq!(s.consumed_bound, 10);
        assert_eq!(s.levels.iter().map(|l| l.paths).collect::<Vec<_>>(), vec![2, 2]);
        for l in &s.levels {
            assert!(l.max_vector_size <= 3u64.pow(l.level as u32));
            assert!((l.max_dx as f64) <= l.allowance);
            assert!((l.max_dy as f64) <= l.allowance);
        }
        let sum_x: u64 = s.levels.iter().map(|l| l.max_dx).sum();
        assert!(o.drawing.width() as u64 <= sum_x);
    }

    #[test]
    fn grid_bound_exact() {
        assert_eq!(grid_bound(3, 3, 10), 120.0);
        assert!(within_grid_bound(120, 3, 3, 10));
        assert!(!within_grid_bound(121, 3, 3, 10));
        assert!(!within_grid_bound(0, 2, 3, 10));
        // (7, 5): 40/3 n
        assert!(within_grid_bound(133, 7, 5, 10));
        assert!(!within_grid_bound(134, 7, 5, 10));
    }

    #[test]
    fn algorithm_names_round_trip() {
        for a in Algorithm::ALL {
            assert_eq!(a.name().parse::<Algorithm>(), Ok(a));
        }
        assert_eq!("alg2".parse::<Algorithm>(), Ok(Algorithm::PathDraw));
    }
}
