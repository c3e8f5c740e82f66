use monotree::render::{to_svg, write_coords_tsv, CoordsHeader};
use monotree::{generate, optimal_draw, GeneratorSpec, Kind};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let tree = generate(GeneratorSpec::new(Kind::CompleteBinary, 31, 0))?;
    let out = optimal_draw(&tree, 3, 3)?;
    let header = CoordsHeader {
        algorithm: "optimal".into(),
        pair: Some((3, 3)),
    };
    print!("{}", write_coords_tsv(&out.drawing, &header));

    let path = std::env::temp_dir().join("monotree_binary.svg");
    std::fs::write(&path, to_svg(&tree, &out.drawing, 8.0)?)?;
    println!("wrote {}", path.display());
    Ok(())
}
