//! Builds the hierarchical pool and hands vectors to a level sequence.

use monotree::pool::Selection;
use monotree::{assign_vectors, build_pool};

fn main() -> monotree::Result<()> {
    for (f, d) in [(3, 3), (7, 5), (1, 2)] {
        let pool = build_pool(f, d, 3)?;
        println!("({f},{d}) K=3: {} entries via {:?}", pool.len(), Selection::for_pair(f, d));
    }

    let pool = build_pool(3, 3, 2)?;
    print!("{}", pool.to_tsv());

    // levels of paths in counter-clockwise order
    let levels = [2, 1, 2, 2, 1];
    let a = assign_vectors(&levels, &pool)?;
    for (lvl, (v, i)) in levels.iter().zip(a.vectors.iter().zip(&a.pool_index)) {
        println!("level {lvl} -> {} (entry {i})", v);
    }
    println!("consumed {} of {}", a.consumed, pool.len());

    match build_pool(4, 3, 1) {
        Ok(_) => println!("(4,3) unexpectedly built"),
        Err(e) => println!("(4,3): {e}"),
    }
    Ok(())
}
