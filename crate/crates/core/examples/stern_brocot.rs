//! Levels of the Stern-Brocot subtree between two unimodular neighbours.

use monotree::primitive::{fibonacci, mediant, stern_brocot_levels};
use monotree::PrimitiveVector;

fn main() -> monotree::Result<()> {
    // slopes 4/5 and 5/6
    let lo = PrimitiveVector::new(5, 4)?;
    let hi = PrimitiveVector::new(6, 5)?;
    println!("mediant: {}", mediant(lo, hi)?);

    let sb = stern_brocot_levels(lo, hi, 4)?;
    for k in 1..=sb.depth() {
        let fracs: Vec<String> = sb.level(k).iter().map(|v| format!("{}/{}", v.y(), v.x())).collect();
        let max = sb.level(k).iter().map(|v| v.size()).max().unwrap();
        println!("level {k}: {}  (max size {max}, F_{} * 6 = {})", fracs.join(" "), k + 1, fibonacci(k as u32 + 1) * 6);
    }
    Ok(())
}
