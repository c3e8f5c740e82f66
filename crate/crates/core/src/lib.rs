//! Monotone straight-line grid drawings of rooted trees.
//!
//! The optimal algorithm splits the tree into root-ward paths by length,
//! buckets the paths into levels, and hands each path one primitive vector
//! from a levelled pool so that long paths get short vectors. With the pair
//! `(f, d) = (3, 3)` every drawing fits in a `12n x 12n` grid.
//!
//! ```
//! use monotree::{generate, optimal_draw, verify_monotone_drawing, GeneratorSpec, Kind, VerifyMode};
//!
//! let tree = generate(GeneratorSpec::new(Kind::RandomRecursive, 200, 42)).unwrap();
//! let out = optimal_draw(&tree, 3, 3).unwrap();
//! assert!(out.drawing.width() <= 12 * 200);
//! let report = verify_monotone_drawing(&tree, &out.drawing, VerifyMode::Exhaustive).unwrap();
//! assert!(report.is_monotone());
//! ```

pub mod bench;
pub mod decomposition;
pub mod drawing;
pub mod error;
pub mod generate;
pub mod pool;
pub mod primitive;
pub mod render;
pub mod tree;
pub mod verify;

pub use decomposition::{c_partition, ldpd, path_decomposition, PathDecomposition};
pub use drawing::{
    baseline_vectors, draw, optimal_draw, path_draw, tree_monotone_draw, Algorithm, Drawing,
};
pub use error::{Error, ParseError, Result};
pub use generate::{generate, GeneratorSpec, Kind};
pub use pool::{assign_vectors, build_pool, VectorPool};
pub use primitive::{certify_valid_pair, enumerate_primitive, PrimitiveVector};
pub use tree::{parse_tree, RootedTree};
pub use verify::{
    build_t0, check_lower_bound, path_is_monotone, verify_monotone_drawing, verify_slope_disjoint,
    VerifyMode,
};
