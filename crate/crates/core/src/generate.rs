//! Deterministic tree generators.
//!
//! Random trees use ChaCha8 seeded through `seed_from_u64`, so the same
//! spec yields the same tree on every platform and release.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::tree::RootedTree;
use crate::verify::build_t0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Kind {
    /// Vertex `k` hangs under a uniform vertex `< k`.
    RandomRecursive,
    Path,
    Star,
    /// Spine of `⌈n/2⌉` vertices, the rest as pendant leaves round-robin.
    Caterpillar,
    /// Heap-indexed: the parent of `k` is `(k - 1) / 2`.
    CompleteBinary,
    /// Root plus twelve equal pendant paths.
    T0,
}

impl Kind {
    pub const ALL: [Kind; 6] = [
        Kind::RandomRecursive,
        Kind::Path,
        Kind::Star,
        Kind::Caterpillar,
        Kind::CompleteBinary,
        Kind::T0,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Kind::RandomRecursive => "random-recursive",
            Kind::Path => "path",
            Kind::Star => "star",
            Kind::Caterpillar => "caterpillar",
            Kind::CompleteBinary => "complete-binary",
            Kind::T0 => "t0",
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Kind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Kind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown tree kind {s:?}"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct GeneratorSpec {
    pub kind: Kind,
    pub n: usize,
    pub seed: u64,
}

impl GeneratorSpec {
    pub fn new(kind: Kind, n: usize, seed: u64) -> Self {
        GeneratorSpec { kind, n, seed }
    }
}

/// Builds the tree described by `spec`. `t0` rounds `n` down to a multiple
/// of twelve and adds the root.
pub fn generate(spec: GeneratorSpec) -> Result<RootedTree> {
    let n = spec.n;
    if n == 0 {
        return Err(Error::EmptyTree);
    }
    let parents: Vec<Option<usize>> = match spec.kind {
        Kind::RandomRecursive => {
            let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
            (0..n)
                .map(|k| (k > 0).then(|| rng.gen_range(0..k)))
                .collect()
        }
        Kind::Path => (0..n).map(|k| k.checked_sub(1)).collect(),
        Kind::Star => (0..n).map(|k| (k > 0).then_some(0)).collect(),
        Kind::Caterpillar => {
            let spine = n.div_ceil(2);
            (0..n)
                .map(|k| match k {
                    0 => None,
                    k if k < spine => Some(k - 1),
                    k => Some((k - spine) % spine),
                })
                .collect()
        }
        Kind::CompleteBinary => (0..n).map(|k| (k > 0).then(|| (k - 1) / 2)).collect(),
        Kind::T0 => return build_t0(n),
    };
    RootedTree::from_parents(&parents)
}
