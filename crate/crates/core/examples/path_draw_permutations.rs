//! Any leaf order gives a monotone drawing; the extents change with it.

use monotree::drawing::{baseline_vectors, path_draw};
use monotree::{generate, path_decomposition, verify_monotone_drawing, GeneratorSpec, Kind, VerifyMode};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> monotree::Result<()> {
    let tree = generate(GeneratorSpec::new(Kind::RandomRecursive, 200, 3))?;
    let mut leaves = tree.leaves_ccw().into_vec();
    let vectors = baseline_vectors(leaves.len());
    let mut rng = ChaCha8Rng::seed_from_u64(0);

    for round in 0..5 {
        if round > 0 {
            leaves.shuffle(&mut rng);
        }
        let dec = path_decomposition(&tree, &leaves)?;
        let d = path_draw(&tree, &dec, &vectors)?;
        let r = verify_monotone_drawing(&tree, &d, VerifyMode::Exhaustive)?;
        println!(
            "order {round}: first path ends at leaf {:>3}, {:>5} x {:<5} monotone: {}",
            leaves[0],
            d.width(),
            d.height(),
            r.is_monotone()
        );
    }
    Ok(())
}
