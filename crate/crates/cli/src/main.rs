//! `farey`: build Farey complexes, check them, and draw them.

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use farey_core::arrangement::build;
use farey_core::exact_geom::Rat;
use farey_core::farey_lines::{enumerate, lines_to_json, FareyParams, RectWindow};
use farey_core::render::{render_svg, SvgStyle};
use farey_core::verifier::{verify_all, window_scan};

const EXIT_VIOLATIONS: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_IO: u8 = 3;

#[derive(Parser, Debug)]
#[command(name = "farey", version, about = "Exact Farey complex construction and verification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write the line family as JSON `[{u, v, w}, ...]`.
    Lines {
        #[command(flatten)]
        params: ParamArgs,
        #[command(flatten)]
        window: WindowArgs,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Write vertices and bounded cells as JSON with exact rational strings.
    Cells {
        #[command(flatten)]
        params: ParamArgs,
        #[command(flatten)]
        window: WindowArgs,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Check every cell of CF(m, n); exits 1 if any check fails.
    Verify {
        #[command(flatten)]
        params: ParamArgs,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Check the cells clear of the frame of a window of the plane
    /// (default [-2, 3]^2); exits 1 if any check fails.
    Window {
        #[command(flatten)]
        params: ParamArgs,
        #[command(flatten)]
        window: WindowArgs,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Draw the complex as SVG, triangles and quadrilaterals in two fills.
    Render {
        #[command(flatten)]
        params: ParamArgs,
        #[command(flatten)]
        window: WindowArgs,
        #[command(flatten)]
        out: OutArgs,
        /// Drawing size in pixels, margin excluded.
        #[arg(long, default_value_t = 800, value_parser = clap::value_parser!(u32).range(1..))]
        size: u32,
        #[arg(long, default_value_t = 16)]
        margin: u32,
        #[arg(long, default_value_t = 0.6)]
        stroke_width: f64,
        #[arg(long)]
        triangle_fill: Option<String>,
        #[arg(long)]
        quad_fill: Option<String>,
    },
}

#[derive(Args, Debug)]
struct ParamArgs {
    /// Bound on |u|.
    #[arg(long, value_parser = clap::value_parser!(i64).range(1..))]
    m: i64,
    /// Bound on |v|.
    #[arg(long, value_parser = clap::value_parser!(i64).range(1..))]
    n: i64,
}

#[derive(Args, Debug)]
struct WindowArgs {
    /// Rational bound, e.g. `-2` or `1/3`.
    #[arg(long, allow_hyphen_values = true)]
    x_min: Option<Rat>,
    #[arg(long, allow_hyphen_values = true)]
    x_max: Option<Rat>,
    #[arg(long, allow_hyphen_values = true)]
    y_min: Option<Rat>,
    #[arg(long, allow_hyphen_values = true)]
    y_max: Option<Rat>,
}

#[derive(Args, Debug)]
struct OutArgs {
    /// Output file; standard output when omitted.
    #[arg(short = 'o', long)]
    output: Option<PathBuf>,
}

enum Failure {
    Usage(String),
    Io(String),
}

impl WindowArgs {
    fn resolve(&self, default: RectWindow) -> Result<RectWindow, Failure> {
        let pick = |v: &Option<Rat>, d: &Rat| v.clone().unwrap_or_else(|| d.clone());
        RectWindow::new(
            pick(&self.x_min, &default.x_min),
            pick(&self.x_max, &default.x_max),
            pick(&self.y_min, &default.y_min),
            pick(&self.y_max, &default.y_max),
        )
        .map_err(|e| Failure::Usage(e.to_string()))
    }
}

fn params(p: &ParamArgs) -> Result<FareyParams, Failure> {
    FareyParams::new(p.m, p.n).map_err(|e| Failure::Usage(e.to_string()))
}

fn emit(out: &OutArgs, text: &str) -> Result<(), Failure> {
    let text = if text.ends_with('\n') {
        text.to_string()
    } else {
        format!("{text}\n")
    };
    match &out.output {
        Some(path) => fs::write(path, text).map_err(|e| Failure::Io(format!("{}: {e}", path.display()))),
        None => io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| Failure::Io(format!("stdout: {e}"))),
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    let unit = RectWindow::unit_square();
    match cli.command {
        Command::Lines { params: p, window, out } => {
            let rect = window.resolve(unit)?;
            emit(&out, &lines_to_json(&enumerate(params(&p)?, &rect)))?;
            Ok(0)
        }
        Command::Cells { params: p, window, out } => {
            let rect = window.resolve(unit)?;
            let sub = build(&enumerate(params(&p)?, &rect), &rect);
            emit(&out, &sub.to_json())?;
            Ok(0)
        }
        Command::Verify { params: p, out } => {
            let report = verify_all(params(&p)?);
            emit(&out, &report.to_json())?;
            for v in &report.violations {
                eprintln!("violation: cell {:?}: {}", v.cell, v.property);
            }
            Ok(if report.passed() { 0 } else { EXIT_VIOLATIONS })
        }
        Command::Window { params: p, window, out } => {
            let default = RectWindow::square(-2, 3).expect("valid default window");
            let rect = window.resolve(default)?;
            let report = window_scan(params(&p)?, &rect);
            emit(&out, &report.to_json())?;
            Ok(if report.passed() { 0 } else { EXIT_VIOLATIONS })
        }
        Command::Render {
            params: p,
            window,
            out,
            size,
            margin,
            stroke_width,
            triangle_fill,
            quad_fill,
        } => {
            let rect = window.resolve(unit)?;
            let sub = build(&enumerate(params(&p)?, &rect), &rect);
            let mut style = SvgStyle {
                size,
                margin,
                stroke_width,
                ..SvgStyle::default()
            };
            if let Some(fill) = triangle_fill {
                style.triangle_fill = fill;
            }
            if let Some(fill) = quad_fill {
                style.quad_fill = fill;
            }
            emit(&out, &render_svg(&sub, &style))?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    // clap exits with status 2 on malformed flags
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_IO)
        }
    }
}
