//! The twelve-path tree forces every monotone drawing to be large.

use monotree::{build_t0, check_lower_bound, draw, verify_monotone_drawing, Algorithm, VerifyMode};

fn main() -> monotree::Result<()> {
    for n in [24, 120, 1200, 12000] {
        let tree = build_t0(n)?;
        for algo in Algorithm::ALL {
            let d = draw(&tree, algo, 3, 3)?;
            let mono = verify_monotone_drawing(&tree, &d, VerifyMode::LeafReduced)?.is_monotone();
            println!(
                "n={n:<6} {:<11} {:>6} x {:<6} floor(n/12)={:<5} monotone={mono} bound holds={}",
                algo.name(),
                d.width(),
                d.height(),
                n / 12,
                check_lower_bound(&d)
            );
        }
    }
    Ok(())
}
