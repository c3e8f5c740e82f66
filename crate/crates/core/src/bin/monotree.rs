use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use monotree::bench::{bench, to_csv, BenchConfig};
use monotree::decomposition::{c_partition, ldpd, path_decomposition};
use monotree::drawing::{draw, grid_bound, optimal_draw, within_grid_bound, Algorithm};
use monotree::generate::{generate, GeneratorSpec, Kind};
use monotree::pool::build_pool;
use monotree::primitive::certify_valid_pair;
use monotree::render::{parse_coords_tsv, to_svg, write_coords_tsv, CoordsHeader};
use monotree::tree::{parse_tree, RootedTree};
use monotree::verify::{verify_monotone_drawing, VerifyMode};
use monotree::Error;

const USAGE: u8 = 2;
const INTERNAL: u8 = 3;

#[derive(Parser)]
#[command(name = "monotree", version, about = "Monotone grid drawings of rooted trees")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate a tree as an edge list
    Gen {
        #[arg(long, value_parser = parse_kind)]
        kind: Kind,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Draw a tree and write vertex coordinates
    Draw {
        #[arg(long)]
        tree: PathBuf,
        #[arg(long, default_value = "optimal", value_parser = parse_algo)]
        algo: Algorithm,
        #[arg(long, default_value = "3,3", value_parser = parse_pair)]
        pair: (u64, u64),
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Write drawing statistics as JSON
        #[arg(long)]
        stats: Option<PathBuf>,
    },
    /// Print a path decomposition with c-partition levels
    Decompose {
        #[arg(long)]
        tree: PathBuf,
        #[arg(long, default_value_t = 4)]
        c: u64,
        /// Leaf permutation, comma separated; LDPD when absent
        #[arg(long, value_delimiter = ',')]
        perm: Option<Vec<usize>>,
    },
    /// Dump the vector pool
    Vectors {
        #[arg(long, default_value = "3,3", value_parser = parse_pair)]
        pair: (u64, u64),
        #[arg(long)]
        levels: usize,
    },
    /// Check the valid-pair property up to a gap size
    Certify {
        #[arg(long, value_parser = parse_pair)]
        pair: (u64, u64),
        #[arg(long)]
        delta: u64,
    },
    /// Verify that a drawing is monotone
    Verify {
        #[arg(long)]
        tree: PathBuf,
        #[arg(long)]
        coords: PathBuf,
        #[arg(long, value_enum, default_value_t = ModeArg::Exhaustive)]
        mode: ModeArg,
    },
    /// Compare algorithms on generated trees
    Bench {
        #[arg(long, default_value = "random-recursive", value_parser = parse_kind)]
        kind: Kind,
        #[arg(long, value_delimiter = ',', default_value = "1000,10000,100000")]
        sizes: Vec<usize>,
        #[arg(long, value_delimiter = ',', value_parser = parse_algo,
              default_value = "post-order,path-draw,optimal")]
        algos: Vec<Algorithm>,
        /// Pairs as f,d separated by ';'
        #[arg(long, value_delimiter = ';', value_parser = parse_pair, default_value = "3,3")]
        pairs: Vec<(u64, u64)>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Render a drawing as SVG
    Svg {
        #[arg(long)]
        tree: PathBuf,
        #[arg(long)]
        coords: PathBuf,
        /// Pixels per grid unit
        #[arg(long, default_value_t = 10.0)]
        scale: f64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Exhaustive,
    Leaf,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

fn parse_kind(s: &str) -> Result<Kind, String> {
    s.parse()
}

fn parse_algo(s: &str) -> Result<Algorithm, String> {
    s.parse()
}

fn parse_pair(s: &str) -> Result<(u64, u64), String> {
    let (f, d) = s.split_once(',').ok_or("expected f,d")?;
    let f = f.trim().parse().map_err(|_| format!("bad f in {s:?}"))?;
    let d = d.trim().parse().map_err(|_| format!("bad d in {s:?}"))?;
    Ok((f, d))
}

/// Failure of a subcommand, mapped to an exit code.
enum Failed {
    Usage(String),
    Internal(String),
    /// Verification or certification found a counterexample.
    Check,
}

impl From<Error> for Failed {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_)
            | Error::Coords { .. }
            | Error::InvalidPair { .. }
            | Error::ZeroSize
            | Error::TooSmallForT0(_)
            | Error::EmptyTree
            | Error::BadPermutation(_)
            | Error::BadPartition(_)
            | Error::DrawingSize { .. }
            | Error::NotEnoughVectors { .. } => Failed::Usage(e.to_string()),
            other => Failed::Internal(other.to_string()),
        }
    }
}

fn read(path: &Path) -> Result<String, Failed> {
    fs::read_to_string(path).map_err(|e| Failed::Usage(format!("{}: {e}", path.display())))
}

fn read_tree(path: &Path) -> Result<RootedTree, Failed> {
    parse_tree(&read(path)?).map_err(|e| Failed::Usage(format!("{}: {e}", path.display())))
}

fn emit(output: Option<&Path>, text: &str) -> Result<(), Failed> {
    let res = match output {
        Some(p) => fs::write(p, text),
        None => io::stdout().lock().write_all(text.as_bytes()),
    };
    res.map_err(|e| Failed::Usage(format!("writing output: {e}")))
}

fn run(cmd: Cmd) -> Result<(), Failed> {
    match cmd {
        Cmd::Gen {
            kind,
            n,
            seed,
            output,
        } => {
            let tree = generate(GeneratorSpec::new(kind, n, seed))?;
            emit(output.as_deref(), &tree.to_edge_list())
        }
        Cmd::Draw {
            tree,
            algo,
            pair: (f, d),
            output,
            stats,
        } => {
            let tree = read_tree(&tree)?;
            let n = tree.n();
            let (drawing, optimal) = if algo == Algorithm::Optimal {
                let o = optimal_draw(&tree, f, d)?;
                (o.drawing, Some(o.stats))
            } else {
                (draw(&tree, algo, f, d)?, None)
            };
            let header = CoordsHeader {
                algorithm: algo.name().into(),
                pair: optimal.as_ref().map(|_| (f, d)),
            };
            emit(output.as_deref(), &write_coords_tsv(&drawing, &header))?;
            if let Some(path) = stats {
                let extent = drawing.width().max(drawing.height());
                let doc = json!({
                    "schema": 1,
                    "algorithm": algo,
                    "n": n,
                    "width": drawing.width(),
                    "height": drawing.height(),
                    "f": optimal.as_ref().map(|_| f),
                    "d": optimal.as_ref().map(|_| d),
                    "bound": optimal.as_ref().map(|_| grid_bound(f, d, n)),
                    "within_bound": optimal.as_ref().map(|_| within_grid_bound(extent, f, d, n)),
                    "optimal": optimal,
                });
                let text = serde_json::to_string_pretty(&doc).expect("stats serialize") + "\n";
                emit(Some(&path), &text)?;
            }
            Ok(())
        }
        Cmd::Decompose { tree, c, perm } => {
            let tree = read_tree(&tree)?;
            let decomp = match perm {
                Some(p) => path_decomposition(&tree, &p)?,
                None => ldpd(&tree),
            };
            let levels = c_partition(&decomp, c, tree.n())?;
            let mut out = String::from("index\tlevel\tleaf\tattachment\tedge_count\n");
            for (i, p) in decomp.paths().iter().enumerate() {
                out.push_str(&format!(
                    "{i}\t{}\t{}\t{}\t{}\n",
                    levels.levels[i],
                    p.leaf,
                    p.attachment,
                    p.edge_count()
                ));
            }
            emit(None, &out)
        }
        Cmd::Vectors {
            pair: (f, d),
            levels,
        } => {
            let pool = build_pool(f, d, levels)?;
            emit(None, &format!("x\ty\tlevel\n{}", pool.to_tsv()))
        }
        Cmd::Certify { pair: (f, d), delta } => {
            let report = certify_valid_pair(f, d, delta);
            let text = serde_json::to_string_pretty(&report).expect("report serialize") + "\n";
            emit(None, &text)?;
            if report.passed() {
                Ok(())
            } else {
                Err(Failed::Check)
            }
        }
        Cmd::Verify { tree, coords, mode } => {
            let tree = read_tree(&tree)?;
            let drawing = parse_coords_tsv(&read(&coords)?)?;
            let mode = match mode {
                ModeArg::Exhaustive => VerifyMode::Exhaustive,
                ModeArg::Leaf => VerifyMode::LeafReduced,
            };
            let report = verify_monotone_drawing(&tree, &drawing, mode)?;
            if report.is_monotone() {
                emit(None, &format!("monotone: {} pairs checked\n", report.pairs_checked))
            } else {
                let first = &report.failures[0];
                emit(
                    None,
                    &format!(
                        "NOT monotone: {} of {} pairs fail; first witness {} {} via {:?}\n",
                        report.failure_count, report.pairs_checked, first.u, first.w, first.path
                    ),
                )?;
                Err(Failed::Check)
            }
        }
        Cmd::Bench {
            kind,
            sizes,
            algos,
            pairs,
            seed,
            format,
        } => {
            let records = bench(&BenchConfig {
                kind,
                sizes,
                algos,
                pairs,
                seed,
            })?;
            let text = match format {
                Format::Csv => to_csv(&records),
                Format::Json => serde_json::to_string_pretty(&records).expect("records serialize") + "\n",
            };
            emit(None, &text)?;
            if records.iter().any(|r| r.within_bound == Some(false)) {
                return Err(Failed::Check);
            }
            Ok(())
        }
        Cmd::Svg {
            tree,
            coords,
            scale,
            output,
        } => {
            if !(scale.is_finite() && scale > 0.0) {
                return Err(Failed::Usage("scale must be positive".into()));
            }
            let tree = read_tree(&tree)?;
            let drawing = parse_coords_tsv(&read(&coords)?)?;
            emit(output.as_deref(), &to_svg(&tree, &drawing, scale)?)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Ok(threads) = std::env::var("MONOTREE_THREADS") {
        match threads.parse::<usize>() {
            Ok(t) if t > 0 => {
                let _ = rayon::ThreadPoolBuilder::new().num_threads(t).build_global();
            }
            _ => {
                eprintln!("monotree: MONOTREE_THREADS must be a positive integer");
                return ExitCode::from(USAGE);
            }
        }
    }
    match run(cli.cmd) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failed::Check) => ExitCode::from(1),
        Err(Failed::Usage(msg)) => {
            eprintln!("monotree: {msg}");
            ExitCode::from(USAGE)
        }
        Err(Failed::Internal(msg)) => {
            eprintln!("monotree: internal error: {msg}");
            ExitCode::from(INTERNAL)
        }
    }
}
