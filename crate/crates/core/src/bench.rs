//! Size and runtime comparison of the drawing algorithms.

use std::fmt::Write as _;
use std::time::Instant;

use serde::Serialize;

use crate::drawing::{draw, grid_bound, within_grid_bound, Algorithm};
use crate::error::Result;
use crate::generate::{generate, GeneratorSpec, Kind};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRecord {
    pub algo: Algorithm,
    pub kind: Kind,
    pub n: usize,
    pub seed: u64,
    /// Pair used by the optimal algorithm; absent for the others.
    pub f: Option<u64>,
    pub d: Option<u64>,
    pub width: i64,
    pub height: i64,
    /// Theoretical side length `I` for the pair.
    pub bound: Option<f64>,
    pub within_bound: Option<bool>,
    /// Drawing time only, tree generation excluded.
    pub runtime_ms: f64,
}

#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub kind: Kind,
    pub sizes: Vec<usize>,
    pub algos: Vec<Algorithm>,
    pub pairs: Vec<(u64, u64)>,
    pub seed: u64,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            kind: Kind::RandomRecursive,
            sizes: vec![1_000, 10_000, 100_000],
            algos: Algorithm::ALL.to_vec(),
            pairs: vec![(3, 3)],
            seed: 1,
        }
    }
}

/// Runs every (size, algorithm, pair) combination sequentially so that
/// timings do not compete for cores. Non-optimal algorithms run once per
/// size regardless of how many pairs are given.
pub fn bench(config: &BenchConfig) -> Result<Vec<BenchRecord>> {
    let mut out = Vec::new();
    for &n in &config.sizes {
        let tree = generate(GeneratorSpec::new(config.kind, n, config.seed))?;
        for &algo in &config.algos {
            let pairs: Vec<Option<(u64, u64)>> = if algo == Algorithm::Optimal {
                config.pairs.iter().copied().map(Some).collect()
            } else {
                vec![None]
            };
            for pair in pairs {
                let (f, d) = pair.unwrap_or((3, 3));
                let start = Instant::now();
                let drawing = draw(&tree, algo, f, d)?;
                let runtime_ms = start.elapsed().as_secs_f64() * 1e3;
                let extent = drawing.width().max(drawing.height());
                out.push(BenchRecord {
                    algo,
                    kind: config.kind,
                    n: tree.n(),
                    seed: config.seed,
                    f: pair.map(|p| p.0),
                    d: pair.map(|p| p.1),
                    width: drawing.width(),
                    height: drawing.height(),
                    bound: pair.map(|(f, d)| grid_bound(f, d, tree.n())),
                    within_bound: pair.map(|(f, d)| within_grid_bound(extent, f, d, tree.n())),
                    runtime_ms,
                });
            }
        }
    }
    Ok(out)
}

pub fn to_csv(records: &[BenchRecord]) -> String {
    fn opt<T: ToString>(v: Option<T>) -> String {
        v.map(|v| v.to_string()).unwrap_or_default()
    }
    let mut out = String::from("algo,kind,n,seed,f,d,width,height,bound,within_bound,runtime_ms\n");
    for r in records {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{},{:.3}",
            r.algo,
            r.kind,
            r.n,
            r.seed,
            opt(r.f),
            opt(r.d),
            r.width,
            r.height,
            opt(r.bound),
            opt(r.within_bound),
            r.runtime_ms
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_run() {
        let cfg = BenchConfig {
            sizes: vec![100, 1000],
            pairs: vec![(3, 3), (7, 5)],
            ..BenchConfig::default()
        };
        let recs = bench(&cfg).unwrap();
        // per size: post-order, path-draw, optimal x 2 pairs
        assert_eq!(recs.len(), 8);
        for r in recs.iter().filter(|r| r.algo == Algorithm::Optimal) {
            assert_eq!(r.within_bound, Some(true));
        }
        let csv = to_csv(&recs);
        assert_eq!(csv.lines().count(), 9);
        assert!(csv.lines().nth(1).unwrap().starts_with("post-order,random-recursive,100,1,,,"));
    }
}
