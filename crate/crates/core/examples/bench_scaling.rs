//! Runtime and grid size across sizes. Run with `--release`.

use monotree::bench::{bench, to_csv, BenchConfig};

fn main() -> monotree::Result<()> {
    let config = BenchConfig {
        sizes: vec![1_000, 10_000, 100_000, 1_000_000],
        pairs: vec![(3, 3), (7, 5)],
        ..BenchConfig::default()
    };
    let records = bench(&config)?;
    print!("{}", to_csv(&records));
    Ok(())
}
