use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use fht::full::{attribute_row, full_hough, line_from_full_point, FullHoughPoint};
use fht::geometry::{pattern_on_original, LineParams, PatternSegment};
use fht::io::accfile::AccumulatorFile;
use fht::io::pgm::read_pgm;
use fht::io::preview::preview_pgm;
use fht::range::{fht_angle_range, plan_transform, AngleRange};
use fht::shift::{fhtshift_full, fhtshift_quadrant};
use fht::{fht_quadrant, GrayImage, Quadrant};

/// Fast Hough transform over dyadic line patterns.
#[derive(Parser)]
#[command(name = "fht", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Transform one quadrant of a PGM image.
    Transform {
        #[arg(long)]
        input: PathBuf,
        /// One of a, b, c, d.
        #[arg(long, value_parser = parse_quadrant)]
        quadrant: Quadrant,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        fhtshift: bool,
        #[arg(long)]
        preview: Option<PathBuf>,
    },
    /// Build the full Hough image (all four quadrants).
    Full {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        fhtshift: bool,
        #[arg(long)]
        preview: Option<PathBuf>,
    },
    /// Transform the inclination range [-gamma1; gamma2] (degrees).
    Range {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        gamma1: f64,
        #[arg(long)]
        gamma2: f64,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        preview: Option<PathBuf>,
    },
    /// Print the image pixels behind an accumulator cell, or "none".
    Recover {
        #[arg(long)]
        width: usize,
        #[arg(long)]
        height: usize,
        #[arg(long, value_parser = parse_quadrant, conflicts_with = "full_row", requires = "shift")]
        quadrant: Option<Quadrant>,
        #[arg(long, conflicts_with = "full_row")]
        shift: Option<usize>,
        #[arg(long)]
        full_row: Option<usize>,
        #[arg(long)]
        x0: usize,
    },
    /// Print the quadrant and local shift of a full Hough image row.
    Attribute {
        #[arg(long)]
        size: usize,
        #[arg(long)]
        row: usize,
    },
}

fn parse_quadrant(s: &str) -> Result<Quadrant, String> {
    let mut chars = s.chars();
    match (chars.next(), chars.next()) {
        (Some(c), None) => Quadrant::from_letter(c).ok_or_else(|| format!("unknown quadrant {s:?}")),
        _ => Err(format!("unknown quadrant {s:?}")),
    }
}

enum CliError {
    Usage(String),
    Io(String),
    Image(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Io(_) => 2,
            CliError::Image(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Io(m) | CliError::Image(m) => m,
        }
    }
}

fn load(path: &Path) -> Result<GrayImage, CliError> {
    let bytes = fs::read(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    read_pgm(&bytes).map_err(|e| CliError::Image(format!("{}: {e}", path.display())))
}

fn store(path: &Path, bytes: &[u8]) -> Result<(), CliError> {
    fs::write(path, bytes).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn write_outputs(file: &AccumulatorFile, out: &Path, preview: Option<&Path>) -> Result<(), CliError> {
    store(out, &file.to_bytes())?;
    if let Some(p) = preview {
        store(p, &preview_pgm(file.cols as usize, file.rows as usize, &file.cells))?;
    }
    Ok(())
}

fn print_segment(segment: Option<PatternSegment>) {
    match segment {
        None => println!("none"),
        Some(seg) => {
            for (x, y) in seg.pixels {
                println!("{x},{y}");
            }
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    let usage = |e: fht::FhtError| CliError::Usage(e.to_string());
    match cli.command {
        Command::Transform {
            input,
            quadrant,
            out,
            fhtshift,
            preview,
        } => {
            let image = load(&input)?;
            let mut acc = fht_quadrant(&image, quadrant);
            if fhtshift {
                acc = fhtshift_quadrant(&acc).map_err(usage)?;
            }
            write_outputs(&AccumulatorFile::from_accumulator(&acc), &out, preview.as_deref())
        }
        Command::Full {
            input,
            out,
            fhtshift,
            preview,
        } => {
            let image = load(&input)?;
            let mut full = full_hough(&image);
            if fhtshift {
                full = fhtshift_full(&full).map_err(usage)?;
            }
            write_outputs(&AccumulatorFile::from_full(&full), &out, preview.as_deref())
        }
        Command::Range {
            input,
            gamma1,
            gamma2,
            out,
            preview,
        } => {
            let range = AngleRange::new(gamma1, gamma2).map_err(usage)?;
            let image = load(&input)?;
            let acc = fht_angle_range(&image, &plan_transform(range)).map_err(usage)?;
            write_outputs(&AccumulatorFile::from_accumulator(&acc), &out, preview.as_deref())
        }
        Command::Recover {
            width,
            height,
            quadrant,
            shift,
            full_row,
            x0,
        } => {
            if width == 0 || height == 0 {
                return Err(CliError::Usage("width and height must be positive".into()));
            }
            let segment = match (quadrant, shift, full_row) {
                (Some(q), Some(s), None) => {
                    let params = LineParams::for_image(width, height, q, x0, s).map_err(usage)?;
                    pattern_on_original(&params)
                }
                (None, None, Some(row)) => {
                    line_from_full_point(FullHoughPoint { row, x0 }, width, height).map_err(usage)?
                }
                _ => {
                    return Err(CliError::Usage(
                        "recover needs either --quadrant and --shift, or --full-row".into(),
                    ))
                }
            };
            print_segment(segment);
            Ok(())
        }
        Command::Attribute { size, row } => {
            if !size.is_power_of_two() {
                return Err(CliError::Usage(format!("size {size} is not a power of two")));
            }
            let (q, s) = attribute_row(row, size).map_err(usage)?;
            println!("{q} {s}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("fht: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}
