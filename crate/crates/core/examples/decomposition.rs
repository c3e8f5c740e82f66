use monotree::decomposition::level_subtree_heights;
use monotree::{c_partition, generate, ldpd, GeneratorSpec, Kind};

fn main() -> monotree::Result<()> {
    let tree = generate(GeneratorSpec::new(Kind::RandomRecursive, 1000, 5))?;
    let dec = ldpd(&tree);
    let part = c_partition(&dec, 4, tree.n())?;
    println!("{} paths, longest {:?}", dec.len(), &dec.edge_counts()[..5]);
    println!("K = {}, paths per level {:?}", part.k, part.counts);
    println!("weighted sum {} within [4^(K-1), 4^K]: {}", part.weighted_sum(), part.property_holds());

    let heights = level_subtree_heights(&tree, &dec, &part)?;
    println!("tallest level subtree per level: {heights:?}");
    for p in dec.paths().iter().take(3) {
        println!("leaf {} hangs off {} with {} edges", p.leaf, p.attachment, p.edge_count());
    }
    Ok(())
}
