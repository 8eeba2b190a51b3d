use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use media_draw::families::generate_family;
use media_draw::io::{parse_medium_file, serialize, serialize_json, LoadedMedium};
use media_draw::planar::recognize_and_draw;
use media_draw::report::{analyze, lattice, verify};
use media_draw::svg::{render, Scene, Style};

#[derive(Parser)]
#[command(name = "media-draw", version, about = "Analyze and draw media (partial cubes)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(clap::Args)]
struct StyleArgs {
    /// Drawing units per layout unit.
    #[arg(long, default_value_t = 20.0)]
    scale: f64,
    #[arg(long, default_value = "black")]
    stroke: String,
    #[arg(long, default_value_t = 1.5)]
    stroke_width: f64,
    #[arg(long, default_value_t = 3.0)]
    radius: f64,
    #[arg(long)]
    background: Option<String>,
}

impl StyleArgs {
    fn style(&self) -> Style {
        Style {
            scale: self.scale,
            stroke: self.stroke.clone(),
            stroke_width: self.stroke_width,
            vertex_radius: self.radius,
            vertex_fill: self.stroke.clone(),
            background: self.background.clone(),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Write a standard medium: hypercube, grid, permutations, weak-orders, partial-orders.
    Generate {
        family: String,
        /// Number of items, cube dimension, or grid sides like `3x4`.
        size: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Print sizes, dimensions, planarity and symmetric drawability.
    Analyze { input: PathBuf },
    /// Draw the projected minimum lattice embedding as SVG.
    DrawLattice {
        input: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[command(flatten)]
        style: StyleArgs,
    },
    /// Draw the symmetric planar drawing as SVG, if one is found.
    DrawPlanar {
        input: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[command(flatten)]
        style: StyleArgs,
    },
    /// Run every invariant suite and print one line per check.
    Verify { input: PathBuf },
}

/// Exit status with a diagnostic: 1 for a rejection, 2 for bad input.
enum Failure {
    Rejected(String),
    Input(String),
}

fn read_input(path: &Path) -> Result<LoadedMedium, Failure> {
    let bytes = if path == Path::new("-") {
        let mut buf = Vec::new();
        io::stdin()
            .read_to_end(&mut buf)
            .map_err(|e| Failure::Input(format!("stdin: {e}")))?;
        buf
    } else {
        fs::read(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?
    };
    parse_medium_file(&bytes).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn write_output(path: Option<&Path>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) if p != Path::new("-") => {
            fs::write(p, text).map_err(|e| Failure::Input(format!("{}: {e}", p.display())))
        }
        _ => io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| Failure::Input(format!("stdout: {e}"))),
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Generate {
            family,
            size,
            output,
            format,
        } => {
            let file = generate_family(&family, &size).map_err(|e| Failure::Input(e.to_string()))?;
            let text = match format {
                Format::Text => serialize(&file),
                Format::Json => serialize_json(&file) + "\n",
            };
            write_output(output.as_deref(), &text)
        }
        Command::Analyze { input } => {
            let m = read_input(&input)?;
            let report = analyze(&m).map_err(|e| Failure::Rejected(format!("lattice_embedding: {e}")))?;
            write_output(None, &report.to_string())
        }
        Command::DrawLattice { input, output, style } => {
            let m = read_input(&input)?;
            let lat = lattice(&m).map_err(|e| Failure::Rejected(format!("lattice_embedding: {e}")))?;
            let scene = match &lat.placement {
                Some(pp) => Scene::from(pp),
                // Only a single state has no usable axis.
                None => Scene {
                    points: vec![(0.0, 0.0); m.graph.n()],
                    edges: vec![],
                },
            };
            write_output(output.as_deref(), &render(&scene, &style.style()))
        }
        Command::DrawPlanar { input, output, style } => {
            let m = read_input(&input)?;
            let rec = recognize_and_draw(&m.graph)
                .map_err(|e| Failure::Rejected(format!("rejected at {}: {e}", e.stage())))?;
            write_output(output.as_deref(), &render(&Scene::from(&rec.drawing), &style.style()))
        }
        Command::Verify { input } => {
            let m = read_input(&input)?;
            let report = verify(&m);
            write_output(None, &report.to_string())?;
            if report.passed() {
                Ok(())
            } else {
                Err(Failure::Rejected("some checks failed".into()))
            }
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Rejected(msg)) => {
            eprintln!("media-draw: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("media-draw: {msg}");
            ExitCode::from(2)
        }
    }
}
