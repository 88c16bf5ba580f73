//! `origami-sym`: build origami point sets and classify their symmetry.
//!
//! Exit codes: 0 success, 1 I/O failure, 2 usage or parse error, 3 domain
//! error, 4 refused because the set is dense and unbounded.

mod config;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use origami_core::algebra::chebyshev_table;
use origami_core::construction::{generate, ring_description, AngleSet, Bbox};
use origami_core::io_render::{export_points, render_svg, ExportFormat, RenderStyle};
use origami_core::symmetry::{classify, inverse_construct, PointGroup};
use origami_core::{Angle, Error};

use config::{resolve, CliConfig, Overrides, Settings, ToleranceFlags};

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Core(Error),
    Io(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Io(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Core(e) => match e {
                Error::Parse(_)
                | Error::InvalidAngle(_)
                | Error::InvalidPoint
                | Error::TooFewAngles(_)
                | Error::MissingZeroAngle
                | Error::InvalidBbox(_)
                | Error::InvalidTolerance(_) => 2,
                Error::Unbounded(_) => 4,
                _ => 3,
            },
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Io(m) => write!(f, "{m}"),
            CliError::Core(Error::Unbounded(n)) => write!(
                f,
                "{n} angles give a dense set; pass --bbox or --cap (or set them in the config)"
            ),
            CliError::Core(e) => write!(f, "{e}"),
        }
    }
}

#[derive(Parser)]
#[command(
    name = "origami-sym",
    version,
    about = "Origami point sets and their symmetry groups"
)]
struct Cli {
    #[command(flatten)]
    tol: TolArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct TolArgs {
    /// Angle equality threshold in radians
    #[arg(long, global = true)]
    eps_angle: Option<f64>,
    /// Point equality threshold
    #[arg(long, global = true)]
    eps_point: Option<f64>,
    /// Scalar equality threshold
    #[arg(long, global = true)]
    eps_scalar: Option<f64>,
}

#[derive(Args)]
struct AnglesArg {
    /// Comma-separated angles: 0, pi/B, Api, Api/B or rad:<float>
    #[arg(long, allow_hyphen_values = true)]
    angles: String,
}

#[derive(Args)]
struct BuildArgs {
    #[command(flatten)]
    angles: AnglesArg,
    /// Construction depth (at least 1)
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    depth: Option<u32>,
    /// Bounding box x0,y0,x1,y1
    #[arg(long, allow_hyphen_values = true, value_parser = parse_bbox)]
    bbox: Option<[f64; 4]>,
    /// Stop after this many points
    #[arg(long)]
    cap: Option<usize>,
    /// Write here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Wallpaper class (three angles) or point group (more angles) as JSON
    Classify {
        #[command(flatten)]
        angles: AnglesArg,
        /// Depth bound for witness searches
        #[arg(long)]
        max_depth: Option<u32>,
    },
    /// Generated points as JSON or CSV
    Generate {
        #[command(flatten)]
        build: BuildArgs,
        #[arg(long, default_value = "json", value_parser = parse_format)]
        format: ExportFormat,
    },
    /// SVG of the line structure
    Render {
        #[command(flatten)]
        build: BuildArgs,
        #[arg(long, default_value_t = 600)]
        width: u32,
        #[arg(long, default_value_t = 600)]
        height: u32,
        #[arg(long, default_value_t = 1.0)]
        stroke_width: f64,
        #[arg(long, default_value_t = 2.5)]
        point_radius: f64,
    },
    /// Initial intersections and their real projections as JSON
    Project {
        #[command(flatten)]
        angles: AnglesArg,
    },
    /// Chebyshev polynomials U_0..U_K as CSV
    Chebyshev {
        #[arg(long)]
        k: usize,
    },
    /// An angle set realizing a point group (C2xC2, C6, D4, D10, ...)
    Construct {
        #[arg(long)]
        group: String,
    },
}

fn parse_bbox(s: &str) -> Result<[f64; 4], String> {
    let parts: Vec<f64> = s
        .split(',')
        .map(|t| t.trim().parse::<f64>().map_err(|e| format!("'{t}': {e}")))
        .collect::<Result<_, _>>()?;
    parts
        .try_into()
        .map_err(|v: Vec<f64>| format!("expected 4 numbers, got {}", v.len()))
}

fn parse_format(s: &str) -> Result<ExportFormat, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_angles(list: &str, settings: &Settings) -> Result<AngleSet, CliError> {
    let angles = list
        .split(',')
        .map(str::parse::<Angle>)
        .collect::<Result<Vec<_>, _>>()?;
    Ok(AngleSet::new(angles, &settings.tol)?)
}

fn emit(payload: &str, out: Option<&PathBuf>) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, payload)
            .map_err(|e| CliError::Io(format!("{}: {e}", path.display()))),
        None => std::io::stdout()
            .write_all(payload.as_bytes())
            .map_err(|e| CliError::Io(e.to_string())),
    }
}

fn to_json<T: serde::Serialize>(v: &T) -> Result<String, CliError> {
    let mut s = serde_json::to_string_pretty(v).map_err(|e| CliError::Io(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

fn build_overrides(tol: &TolArgs, build: Option<&BuildArgs>, max_depth: Option<u32>) -> Overrides {
    Overrides {
        tol: ToleranceFlags {
            eps_angle: tol.eps_angle,
            eps_point: tol.eps_point,
            eps_scalar: tol.eps_scalar,
        },
        depth: build.and_then(|b| b.depth),
        cap: build.and_then(|b| b.cap),
        bbox: build.and_then(|b| b.bbox),
        max_depth,
        output: build.and_then(|b| b.out.clone()),
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    let config = CliConfig::from_env()?;
    let (build, max_depth) = match &cli.command {
        Command::Generate { build, .. } | Command::Render { build, .. } => (Some(build), None),
        Command::Classify { max_depth, .. } => (None, *max_depth),
        _ => (None, None),
    };
    let settings = resolve(&config, &build_overrides(&cli.tol, build, max_depth))?;
    let tol = &settings.tol;

    match &cli.command {
        Command::Classify { angles, .. } => {
            let u = parse_angles(&angles.angles, &settings)?;
            let c = classify(&u, settings.max_depth, tol)?;
            if c.ambiguous {
                eprintln!("warning: an angle equality sits near the tolerance");
            }
            emit(&to_json(&c)?, None)
        }
        Command::Generate { build, format } => {
            let u = parse_angles(&build.angles.angles, &settings)?;
            let snap = generate(&u, settings.depth, settings.bbox, settings.cap, tol)?;
            if snap.truncated {
                eprintln!("warning: output truncated ({} points)", snap.len());
            }
            emit(&export_points(&snap, *format)?, settings.output.as_ref())
        }
        Command::Render {
            build,
            width,
            height,
            stroke_width,
            point_radius,
        } => {
            let u = parse_angles(&build.angles.angles, &settings)?;
            // three angles give a discrete lattice, so generate everywhere and clip
            let gen_box = if u.len() > 3 { settings.bbox } else { None };
            let snap = generate(&u, settings.depth, gen_box, settings.cap, tol)?;
            let view = match settings.bbox {
                Some(b) => b,
                None => {
                    let pts: Vec<_> = snap.points().iter().map(|p| p.point()).collect();
                    Bbox::around(&pts, 0.5)?
                }
            };
            let style = RenderStyle {
                stroke_width: *stroke_width,
                point_radius: *point_radius,
                width_px: *width,
                height_px: *height,
                ..RenderStyle::default()
            };
            style
                .validate()
                .map_err(|e| CliError::Usage(e.to_string()))?;
            emit(
                &render_svg(&snap, &view, &style, tol)?,
                settings.output.as_ref(),
            )
        }
        Command::Project { angles } => {
            let u = parse_angles(&angles.angles, &settings)?;
            emit(&to_json(&ring_description(&u, tol)?)?, None)
        }
        Command::Chebyshev { k } => {
            let mut out = String::from("k,coefficients,polynomial\n");
            for (i, p) in chebyshev_table(*k)?.iter().enumerate() {
                let coeffs: Vec<String> = p.coeffs().iter().map(i64::to_string).collect();
                out.push_str(&format!("{i},{},{p}\n", coeffs.join(" ")));
            }
            emit(&out, None)
        }
        Command::Construct { group } => {
            let g: PointGroup = group.parse()?;
            emit(&to_json(&inverse_construct(g)?)?, None)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
