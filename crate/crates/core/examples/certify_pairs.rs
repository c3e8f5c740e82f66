//! Checks a few (f, d) pairs against the gap condition up to a fixed Δ.

use monotree::certify_valid_pair;

fn main() {
    let delta = 40;
    for (f, d) in [(3, 3), (7, 5), (4, 3), (1, 2), (2, 2), (5, 4)] {
        let r = certify_valid_pair(f, d, delta);
        match r.witness {
            None if r.passed() => println!("({f},{d}) valid up to {delta}: {} gaps, fewest {}", r.gaps_checked, r.min_gap.unwrap_or(0)),
            None => println!("({f},{d}) rejected: f < d"),
            Some(w) => println!(
                "({f},{d}) fails at delta {}: {} vectors between {} and {}",
                w.delta, w.count, w.lo, w.hi
            ),
        }
    }
}
