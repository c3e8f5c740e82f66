//! Ordered rooted trees.
//!
//! Child order is the counter-clockwise (left to right) order used by every
//! drawing algorithm in this crate. Children are stored in a flat CSR layout
//! so that trees with millions of vertices stay cheap to build and walk.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, ParseError, Result};

/// An immutable ordered rooted tree on the dense vertex ids `0..n`.
#[derive(Clone, PartialEq, Eq)]
pub struct RootedTree {
    root: usize,
    parent: Vec<Option<usize>>,
    depth: Vec<usize>,
    child_start: Vec<usize>,
    child_list: Vec<usize>,
    /// Cached ccw pre-order; later passes walk it sequentially.
    pre: Vec<usize>,
}

/// Leaves in counter-clockwise order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeafOrder(Vec<usize>);

impl LeafOrder {
    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `position[v]` is the ccw index of leaf `v`, `None` for inner vertices.
    pub fn positions(&self, n: usize) -> Vec<Option<usize>> {
        let mut pos = vec![None; n];
        for (i, &leaf) in self.0.iter().enumerate() {
            pos[leaf] = Some(i);
        }
        pos
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }
}

impl std::ops::Deref for LeafOrder {
    type Target = [usize];

    fn deref(&self) -> &[usize] {
        &self.0
    }
}

impl RootedTree {
    /// The one-vertex tree.
    pub fn singleton() -> Self {
        Self::from_child_lists(0, vec![Vec::new()]).expect("singleton is a tree")
    }

    /// Builds a tree from per-vertex ordered child lists.
    ///
    /// Fails if the lists do not describe a tree rooted at `root` that spans
    /// every id in `0..children.len()`.
    pub fn from_child_lists(root: usize, children: Vec<Vec<usize>>) -> Result<Self> {
        let n = children.len();
        if n == 0 {
            return Err(Error::EmptyTree);
        }
        if root >= n {
            return Err(ParseError::OutOfRange {
                line: 0,
                vertex: root,
                n,
            }
            .into());
        }
        let mut parent = vec![None; n];
        let mut child_start = Vec::with_capacity(n + 1);
        let mut child_list = Vec::with_capacity(n.saturating_sub(1));
        for (u, kids) in children.iter().enumerate() {
            child_start.push(child_list.len());
            for &w in kids {
                if w >= n {
                    return Err(ParseError::OutOfRange {
                        line: 0,
                        vertex: w,
                        n,
                    }
                    .into());
                }
                if w == root || w == u {
                    return Err(ParseError::Cycle { line: 0, vertex: w }.into());
                }
                if let Some(existing) = parent[w] {
                    return Err(ParseError::MultipleParents {
                        line: 0,
                        child: w,
                        parent: u,
                        existing,
                    }
                    .into());
                }
                parent[w] = Some(u);
                child_list.push(w);
            }
        }
        child_start.push(child_list.len());
        Self::finish(root, parent, child_start, child_list)
    }

    /// Builds a tree from a parent array. Children are ordered by id.
    pub fn from_parents(parents: &[Option<usize>]) -> Result<Self> {
        let n = parents.len();
        let mut root = None;
        let mut children = vec![Vec::new(); n];
        for (v, p) in parents.iter().enumerate() {
            match *p {
                None => {
                    if let Some(first) = root {
                        return Err(ParseError::MultipleRoots {
                            line: 0,
                            first,
                            second: v,
                        }
                        .into());
                    }
                    root = Some(v);
                }
                Some(p) if p >= n => {
                    return Err(ParseError::OutOfRange {
                        line: 0,
                        vertex: p,
                        n,
                    }
                    .into())
                }
                Some(p) => children[p].push(v),
            }
        }
        let root = root.ok_or(ParseError::Cycle { line: 0, vertex: 0 })?;
        Self::from_child_lists(root, children)
    }

    fn finish(
        root: usize,
        parent: Vec<Option<usize>>,
        child_start: Vec<usize>,
        child_list: Vec<usize>,
    ) -> Result<Self> {
        let n = parent.len();
        let mut tree = RootedTree {
            root,
            parent,
            depth: vec![usize::MAX; n],
            child_start,
            child_list,
            pre: Vec::with_capacity(n),
        };
        tree.depth[root] = 0;
        let mut stack = vec![root];
        while let Some(u) = stack.pop() {
            tree.pre.push(u);
            let du = tree.depth[u];
            for i in (tree.child_start[u]..tree.child_start[u + 1]).rev() {
                let w = tree.child_list[i];
                tree.depth[w] = du + 1;
                stack.push(w);
            }
        }
        if tree.pre.len() != n {
            let vertex = (0..n).find(|&v| tree.depth[v] == usize::MAX).unwrap_or(0);
            return Err(ParseError::Cycle { line: 0, vertex }.into());
        }
        Ok(tree)
    }

    pub fn n(&self) -> usize {
        self.parent.len()
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    pub fn children(&self, v: usize) -> &[usize] {
        &self.child_list[self.child_start[v]..self.child_start[v + 1]]
    }

    pub fn depth(&self, v: usize) -> usize {
        self.depth[v]
    }

    pub fn is_leaf(&self, v: usize) -> bool {
        self.child_start[v] == self.child_start[v + 1]
    }

    /// Number of edges, `n - 1`.
    pub fn edge_count(&self) -> usize {
        self.n() - 1
    }

    /// Vertices in ccw pre-order.
    pub fn preorder(&self) -> &[usize] {
        &self.pre
    }

    /// Vertices in ccw post-order.
    pub fn postorder(&self) -> Vec<usize> {
        let mut order = Vec::with_capacity(self.n());
        // (vertex, index of next child to visit)
        let mut stack = vec![(self.root, 0usize)];
        while let Some(top) = stack.last_mut() {
            let (u, next) = *top;
            if let Some(&w) = self.children(u).get(next) {
                top.1 += 1;
                stack.push((w, 0));
            } else {
                order.push(u);
                stack.pop();
            }
        }
        order
    }

    /// Leaves in the order a left-to-right depth-first traversal meets them.
    pub fn leaves_ccw(&self) -> LeafOrder {
        LeafOrder(
            self.pre
                .iter()
                .copied()
                .filter(|&v| self.is_leaf(v))
                .collect(),
        )
    }

    /// The unique simple path `u, ..., lca, ..., w`.
    pub fn tree_path(&self, u: usize, w: usize) -> Vec<usize> {
        let mut up = vec![u];
        let mut down = vec![w];
        let (mut a, mut b) = (u, w);
        while self.depth[a] > self.depth[b] {
            a = self.parent[a].expect("deeper vertex has a parent");
            up.push(a);
        }
        while self.depth[b] > self.depth[a] {
            b = self.parent[b].expect("deeper vertex has a parent");
            down.push(b);
        }
        while a != b {
            a = self.parent[a].expect("non-root");
            b = self.parent[b].expect("non-root");
            up.push(a);
            down.push(b);
        }
        // `a == b` is the lca and ends both halves.
        down.pop();
        up.extend(down.into_iter().rev());
        up
    }

    /// Edges `(parent, child)` in ccw pre-order of the child.
    pub fn edges_preorder(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.pre
            .iter()
            .filter_map(move |&v| self.parent[v].map(|p| (p, v)))
    }

    /// Canonical edge-list text: one `parent child` line per edge in pre-order.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::with_capacity(self.n() * 12);
        for (p, c) in self.edges_preorder() {
            out.push_str(&p.to_string());
            out.push(' ');
            out.push_str(&c.to_string());
            out.push('\n');
        }
        out
    }
}

impl fmt::Debug for RootedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RootedTree")
            .field("n", &self.n())
            .field("root", &self.root)
            .field(
                "children",
                &(0..self.n()).map(|v| self.children(v)).collect::<Vec<_>>(),
            )
            .finish()
    }
}

impl FromStr for RootedTree {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        parse_tree(s)
    }
}

/// Parses the edge-list format: `parent child` per line, `#` comment lines,
/// blank lines ignored. Empty input is the one-vertex tree.
pub fn parse_tree(text: &str) -> Result<RootedTree, ParseError> {
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let body = raw.trim();
        if body.is_empty() || body.starts_with('#') {
            continue;
        }
        let mut parts = body.split_whitespace();
        let (Some(a), Some(b), None) = (parts.next(), parts.next(), parts.next()) else {
            return Err(ParseError::Malformed { line });
        };
        let (Ok(p), Ok(c)) = (a.parse::<usize>(), b.parse::<usize>()) else {
            return Err(ParseError::Malformed { line });
        };
        edges.push((line, p, c));
    }
    if edges.is_empty() {
        return Ok(RootedTree::singleton());
    }

    // first mention of every id, in mention order
    let mut first_seen: HashMap<usize, usize> = HashMap::new();
    let mut mention_order = Vec::new();
    for &(line, p, c) in &edges {
        for v in [p, c] {
            first_seen.entry(v).or_insert_with(|| {
                mention_order.push(v);
                line
            });
        }
    }
    let n = first_seen.len();
    if let Some(&(line, p, c)) = edges.iter().find(|&&(_, p, c)| p >= n || c >= n) {
        let vertex = if p >= n { p } else { c };
        return Err(ParseError::OutOfRange { line, vertex, n });
    }

    let mut parent: Vec<Option<usize>> = vec![None; n];
    let mut parent_line = vec![0usize; n];
    let mut children = vec![Vec::new(); n];
    for &(line, p, c) in &edges {
        if p == c {
            return Err(ParseError::Cycle { line, vertex: c });
        }
        match parent[c] {
            Some(existing) if existing == p => {
                return Err(ParseError::DuplicateEdge {
                    line,
                    parent: p,
                    child: c,
                })
            }
            Some(existing) => {
                return Err(ParseError::MultipleParents {
                    line,
                    child: c,
                    parent: p,
                    existing,
                })
            }
            None => {
                parent[c] = Some(p);
                parent_line[c] = line;
                children[p].push(c);
            }
        }
    }

    let roots: Vec<usize> = mention_order
        .iter()
        .copied()
        .filter(|&v| parent[v].is_none())
        .collect();
    if roots.len() > 1 {
        return Err(ParseError::MultipleRoots {
            line: first_seen[&roots[1]],
            first: roots[0],
            second: roots[1],
        });
    }
    let cycle_error = |start: usize| -> ParseError {
        // walk parent links until a vertex repeats, then report the cycle
        // edge that appeared last in the file
        let mut on_walk = vec![false; n];
        let mut v = start;
        while !on_walk[v] {
            on_walk[v] = true;
            v = parent[v].expect("vertex off the root component has a parent");
        }
        let entry = v;
        let (mut line, mut vertex) = (parent_line[v], v);
        v = parent[v].unwrap();
        while v != entry {
            if parent_line[v] > line {
                line = parent_line[v];
                vertex = v;
            }
            v = parent[v].unwrap();
        }
        ParseError::Cycle { line, vertex }
    };
    let Some(&root) = roots.first() else {
        return Err(cycle_error(mention_order[0]));
    };

    match RootedTree::from_child_lists(root, children) {
        Ok(tree) => Ok(tree),
        Err(Error::Parse(ParseError::Cycle { vertex, .. })) => Err(cycle_error(vertex)),
        Err(Error::Parse(e)) => Err(e),
        Err(other) => unreachable!("tree construction only reports parse errors: {other}"),
    }
}
