//! Generate a tree, draw it on the grid, check the drawing.

use monotree::{generate, optimal_draw, verify_monotone_drawing, GeneratorSpec, Kind, VerifyMode};

fn main() -> monotree::Result<()> {
    let tree = generate(GeneratorSpec::new(Kind::RandomRecursive, 500, 7))?;
    let out = optimal_draw(&tree, 3, 3)?;
    let s = &out.stats;
    println!("n = {}, {} paths on {} levels", s.n, s.paths, s.k);
    println!("grid {} x {} (bound {:.0})", s.width, s.height, s.bound);

    let report = verify_monotone_drawing(&tree, &out.drawing, VerifyMode::Exhaustive)?;
    println!("{} pairs checked, monotone: {}", report.pairs_checked, report.is_monotone());
    Ok(())
}
