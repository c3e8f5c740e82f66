//! The monotonicity predicate on edge directions, and the drawing verifier
//! on a drawing that is not monotone.

use monotree::{parse_tree, path_is_monotone, verify_monotone_drawing, Drawing, VerifyMode};

fn main() -> monotree::Result<()> {
    for dirs in [vec![(1, 0), (0, 1)], vec![(1, 0), (-1, 1), (-1, -1)], vec![(2, 1), (-1, 3), (-3, -2)]] {
        println!("{dirs:?}: {}", path_is_monotone(&dirs)?);
    }

    let tree = parse_tree("0 1\n0 2\n2 3\n")?;
    let bent = Drawing::from_coords(vec![(0, 0), (1, 0), (0, 1), (2, 0)]);
    for mode in [VerifyMode::Exhaustive, VerifyMode::LeafReduced] {
        let r = verify_monotone_drawing(&tree, &bent, mode)?;
        println!("{mode:?}: {} pairs, {} bad", r.pairs_checked, r.failure_count);
        for f in &r.failures {
            println!("  {} -> {} via {:?}", f.u, f.w, f.path);
        }
    }
    Ok(())
}
