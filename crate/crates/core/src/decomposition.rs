//! Path decompositions of a rooted tree.
//!
//! A decomposition splits the edge set into one root-ward path per leaf.
//! The length-decreasing variant peels the longest remaining path first and
//! is then bucketed into levels by path length (the c-partition), which
//! decides how large a vector each path may receive.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::tree::RootedTree;

/// One path of a decomposition, from a leaf up to its attachment vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DecompPath {
    pub leaf: usize,
    pub attachment: usize,
    /// `leaf, ..., attachment`.
    pub vertices: Vec<usize>,
}

impl DecompPath {
    pub fn edge_count(&self) -> usize {
        self.vertices.len() - 1
    }

    /// Vertices whose parent edge lies on this path.
    pub fn owned_vertices(&self) -> &[usize] {
        &self.vertices[..self.vertices.len() - 1]
    }
}

/// Paths in construction order. Edge sets are disjoint and cover the tree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PathDecomposition {
    paths: Vec<DecompPath>,
}

impl PathDecomposition {
    pub fn paths(&self) -> &[DecompPath] {
        &self.paths
    }

    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    pub fn edge_counts(&self) -> Vec<usize> {
        self.paths.iter().map(DecompPath::edge_count).collect()
    }

    /// `owner[v]` is the index of the path holding the edge into `v`.
    pub fn edge_owner(&self, n: usize) -> Vec<Option<usize>> {
        let mut owner = vec![None; n];
        for (i, path) in self.paths.iter().enumerate() {
            for &v in path.owned_vertices() {
                owner[v] = Some(i);
            }
        }
        owner
    }

    /// Path indices sorted by the ccw position of their leaves.
    pub fn ccw_order(&self, tree: &RootedTree) -> Vec<usize> {
        if self.paths.is_empty() {
            return Vec::new();
        }
        // one path per leaf, so ccw positions index the result directly
        let pos = tree.leaves_ccw().positions(tree.n());
        let mut order = vec![usize::MAX; self.paths.len()];
        for (i, path) in self.paths.iter().enumerate() {
            order[pos[path.leaf].expect("paths start at leaves")] = i;
        }
        order
    }

    /// Checks the partition invariants against `tree`: disjoint edge sets
    /// covering every edge, the first path ending at the root, and every
    /// later attachment lying on an earlier path.
    pub fn validate(&self, tree: &RootedTree) -> std::result::Result<(), String> {
        let n = tree.n();
        if n == 1 {
            return if self.paths.is_empty() {
                Ok(())
            } else {
                Err("single-vertex tree has no paths".into())
            };
        }
        let mut covered = vec![false; n];
        covered[tree.root()] = true;
        for (i, path) in self.paths.iter().enumerate() {
            if path.vertices.len() < 2 {
                return Err(format!("path {i} has no edges"));
            }
            if !covered[path.attachment] {
                return Err(format!("path {i} attaches at {} which is not yet drawn", path.attachment));
            }
            if i == 0 && path.attachment != tree.root() {
                return Err("first path does not reach the root".into());
            }
            for w in path.vertices.windows(2) {
                if tree.parent(w[0]) != Some(w[1]) {
                    return Err(format!("path {i} is not root-ward at {}", w[0]));
                }
            }
            for &v in path.owned_vertices() {
                if covered[v] {
                    return Err(format!("edge into {v} is covered twice"));
                }
                covered[v] = true;
            }
        }
        match covered.iter().position(|&c| !c) {
            Some(v) => Err(format!("edge into {v} is not covered")),
            None => Ok(()),
        }
    }
}

/// Decomposition driven by a leaf permutation: each leaf's path climbs
/// until it meets the union of the paths built before it.
pub fn path_decomposition(tree: &RootedTree, perm: &[usize]) -> Result<PathDecomposition> {
    let n = tree.n();
    let leaves = tree.leaves_ccw();
    if perm.len() != leaves.len() {
        return Err(Error::BadPermutation(format!(
            "{} entries for {} leaves",
            perm.len(),
            leaves.len()
        )));
    }
    let mut used = vec![false; n];
    for &l in perm {
        if l >= n || !tree.is_leaf(l) {
            return Err(Error::BadPermutation(format!("{l} is not a leaf")));
        }
        if std::mem::replace(&mut used[l], true) {
            return Err(Error::BadPermutation(format!("leaf {l} repeated")));
        }
    }
    if n == 1 {
        return Ok(PathDecomposition { paths: Vec::new() });
    }
    let mut in_forest = vec![false; n];
    in_forest[tree.root()] = true;
    let paths = perm
        .iter()
        .map(|&leaf| {
            let mut vertices = vec![leaf];
            let mut v = leaf;
            while !in_forest[v] {
                in_forest[v] = true;
                v = tree.parent(v).expect("climb stops at the root");
                vertices.push(v);
            }
            DecompPath {
                leaf,
                attachment: v,
                vertices,
            }
        })
        .collect();
    Ok(PathDecomposition { paths })
}

/// Length-decreasing path decomposition in O(n).
///
/// Every vertex links to its child of greatest height, ties going to the
/// leftmost child; the maximal chains of such links are the paths. They
/// are returned longest first, equal lengths ordered by ccw leaf position.
pub fn ldpd(tree: &RootedTree) -> PathDecomposition {
    let n = tree.n();
    if n == 1 {
        return PathDecomposition { paths: Vec::new() };
    }
    // reverse pre-order visits children before parents
    let mut height = vec![0usize; n];
    let mut deep_child = vec![usize::MAX; n];
    for &v in tree.preorder().iter().rev() {
        for &w in tree.children(v) {
            if deep_child[v] == usize::MAX || height[w] + 1 > height[v] {
                height[v] = height[w] + 1;
                deep_child[v] = w;
            }
        }
    }

    // climbing from each leaf in ccw order yields the paths already sorted
    // by leaf position; a stable bucket pass by length finishes the order
    let mut by_len: Vec<Vec<DecompPath>> = vec![Vec::new(); height[tree.root()] + 1];
    for leaf in tree.leaves_ccw().into_vec() {
        let mut chain = vec![leaf];
        let mut v = leaf;
        while let Some(p) = tree.parent(v) {
            chain.push(p);
            if deep_child[p] != v {
                break;
            }
            v = p;
        }
        let attachment = *chain.last().expect("non-empty");
        by_len[chain.len() - 1].push(DecompPath {
            leaf,
            attachment,
            vertices: chain,
        });
    }
    let paths = by_len.into_iter().rev().flatten().collect();
    PathDecomposition { paths }
}

/// Level of every path under the c-partition, with per-level counts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LevelAssignment {
    pub c: u64,
    /// Number of levels, `⌈log_c n⌉`.
    pub k: usize,
    /// 1-based level per path, aligned with the decomposition's path order.
    pub levels: Vec<usize>,
    /// `counts[j - 1]` paths sit on level `j`.
    pub counts: Vec<usize>,
}

impl LevelAssignment {
    /// `Σ_j m_j c^{K-j}`.
    pub fn weighted_sum(&self) -> u128 {
        self.counts
            .iter()
            .enumerate()
            .map(|(i, &m)| m as u128 * pow_u128(self.c, self.k - (i + 1)))
            .sum()
    }

    /// `c^{K-1} <= Σ_j m_j c^{K-j} <= c^K`.
    pub fn property_holds(&self) -> bool {
        if self.k == 0 {
            return self.counts.is_empty();
        }
        let sum = self.weighted_sum();
        pow_u128(self.c, self.k - 1) <= sum && sum <= pow_u128(self.c, self.k)
    }
}

pub(crate) fn pow_u128(base: u64, exp: usize) -> u128 {
    (0..exp).fold(1u128, |acc, _| acc.saturating_mul(base as u128))
}

/// Smallest `K` with `c^K >= n`.
pub fn level_count(c: u64, n: usize) -> usize {
    let mut k = 0;
    let mut power = 1u128;
    while power < n as u128 {
        power *= c as u128;
        k += 1;
    }
    k
}

/// Buckets paths by edge count: level 1 holds lengths in
/// `[(n-1)/c, n-1]`, level `j > 1` holds `[(n-1)/c^j, (n-1)/c^{j-1})`.
pub fn c_partition(decomp: &PathDecomposition, c: u64, n: usize) -> Result<LevelAssignment> {
    if c < 2 {
        return Err(Error::BadPartition(c));
    }
    let k = level_count(c, n);
    let target = n as u128 - 1;
    let mut counts = vec![0usize; k];
    let mut levels = Vec::with_capacity(decomp.len());
    for (i, path) in decomp.paths().iter().enumerate() {
        let len = path.edge_count();
        if len == 0 || len + 1 > n {
            return Err(Error::CorruptDecomposition {
                path: i,
                edges: len,
                max: n.saturating_sub(1),
            });
        }
        // smallest j with len * c^j >= n - 1; c^K >= n guarantees j <= K
        let mut j = 1;
        let mut scaled = len as u128 * c as u128;
        while scaled < target {
            scaled *= c as u128;
            j += 1;
        }
        debug_assert!(j <= k);
        counts[j - 1] += 1;
        levels.push(j);
    }
    Ok(LevelAssignment {
        c,
        k,
        levels,
        counts,
    })
}

/// Largest height among the subtrees induced by each level's paths.
///
/// Fails if a level `j >= 2` subtree reaches height `(n-1)/c^{j-1}`, or the
/// level-1 subtree exceeds `n - 1`; either signals a broken decomposition.
pub fn level_subtree_heights(
    tree: &RootedTree,
    decomp: &PathDecomposition,
    levels: &LevelAssignment,
) -> Result<Vec<usize>> {
    let heights = level_heights_unchecked(tree, decomp, levels);
    let n_minus_1 = tree.n() - 1;
    for (i, &h) in heights.iter().enumerate() {
        let j = i + 1;
        let ok = if j == 1 {
            h <= n_minus_1
        } else {
            (h as u128) * pow_u128(levels.c, j - 1) < n_minus_1 as u128
        };
        if !ok {
            return Err(Error::HeightBound {
                level: j,
                height: h,
                n_minus_1,
            });
        }
    }
    Ok(heights)
}

pub(crate) fn level_heights_unchecked(
    tree: &RootedTree,
    decomp: &PathDecomposition,
    levels: &LevelAssignment,
) -> Vec<usize> {
    let n = tree.n();
    let owner = decomp.edge_owner(n);
    let level_of = |v: usize| owner[v].map(|p| levels.levels[p]);
    let mut heights = vec![0usize; levels.k];
    // distance from v up to the top of its level component
    let mut reach = vec![0usize; n];
    for &v in tree.preorder() {
        let Some(p) = tree.parent(v) else { continue };
        let lv = level_of(v).expect("every edge is owned");
        reach[v] = if level_of(p) == Some(lv) {
            reach[p] + 1
        } else {
            1
        };
        heights[lv - 1] = heights[lv - 1].max(reach[v]);
    }
    heights
}
