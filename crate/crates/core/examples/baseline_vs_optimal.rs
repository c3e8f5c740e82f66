use monotree::{draw, generate, Algorithm, GeneratorSpec, Kind};

fn main() -> monotree::Result<()> {
    let n = 2000;
    println!("{:<16} {:<16} {:>9} {:>9}", "kind", "algorithm", "width", "height");
    for kind in [Kind::RandomRecursive, Kind::Path, Kind::Star, Kind::Caterpillar, Kind::CompleteBinary] {
        let tree = generate(GeneratorSpec::new(kind, n, 1))?;
        for algo in Algorithm::ALL {
            let d = draw(&tree, algo, 3, 3)?;
            println!("{:<16} {:<16} {:>9} {:>9}", kind.name(), algo.name(), d.width(), d.height());
        }
    }
    println!("optimal stays within 12n = {}", 12 * n);
    Ok(())
}
