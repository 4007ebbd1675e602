use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use specrange_core::bounds::MeasureKind;
use specrange_core::definetti::Quantity;
use specrange_core::{HalfInt, SetKind};

#[derive(Debug, Parser)]
#[command(
    name = "specrange",
    version,
    about = "Joint numerical ranges of spin observables and their uncertainty bounds"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Dump the operator matrices of a set.
    Ops(SetArgs),
    /// Sample the boundary of a planar range.
    Boundary(PlanarArgs),
    /// Sample the boundary of a spatial range on a direction grid.
    Mesh(MeshArgs),
    /// Optimise uncertainty measures over a range.
    Bounds(BoundsArgs),
    /// Membership margin of a point.
    Check(CheckArgs),
    /// Sample a large-spin limit surface.
    Surface(SurfaceArgs),
    /// Convergence series over spin.
    Sweep(SweepArgs),
    /// Top two eigenvalues over a direction grid.
    Gaps(MeshArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Svg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Jpow,
    Anticomm,
}

impl From<Family> for SetKind {
    fn from(f: Family) -> Self {
        match f {
            Family::Jpow => SetKind::JPow,
            Family::Anticomm => SetKind::Anticomm,
        }
    }
}

fn positive(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if v > 0.0 && v.is_finite() {
        Ok(v)
    } else {
        Err(format!("expected a positive number, got {s}"))
    }
}

fn steps(s: &str) -> Result<usize, String> {
    let v: usize = s.parse().map_err(|e| format!("{e}"))?;
    if v >= 8 {
        Ok(v)
    } else {
        Err(format!("need at least 8 steps, got {v}"))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct MeasureList(pub Vec<MeasureKind>);

fn measures(s: &str) -> Result<MeasureList, String> {
    MeasureKind::parse_list(s).map(MeasureList).map_err(|e| e.to_string())
}

#[derive(Debug, Clone, PartialEq)]
pub struct Point(pub Vec<f64>);

fn point(s: &str) -> Result<Point, String> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<f64>()
                .map_err(|e| format!("bad coordinate {t:?}: {e}"))
        })
        .collect::<Result<_, _>>()
        .map(Point)
}

#[derive(Debug, Clone, Args)]
pub struct Output {
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
    /// Write here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct SetArgs {
    /// Spin, as an integer or `p/2`.
    #[arg(long)]
    pub j: HalfInt,
    #[arg(long, default_value = "j")]
    pub set: SetKind,
    #[arg(long, default_value_t = 1)]
    pub gamma: u32,
    /// Relative threshold for degenerate eigenvalues.
    #[arg(long, default_value = "1e-8", value_parser = positive)]
    pub deg_tol: f64,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Clone, Args)]
pub struct PlanarArgs {
    #[command(flatten)]
    pub set: SetArgs,
    #[arg(long, default_value = "360", value_parser = steps)]
    pub phi_steps: usize,
}

#[derive(Debug, Clone, Args)]
pub struct MeshArgs {
    #[command(flatten)]
    pub set: SetArgs,
    #[arg(long, default_value = "24", value_parser = steps)]
    pub theta_steps: usize,
    #[arg(long, default_value = "48", value_parser = steps)]
    pub phi_steps: usize,
}

#[derive(Debug, Clone, Args)]
pub struct BoundsArgs {
    #[command(flatten)]
    pub mesh: MeshArgs,
    /// Comma-separated list of `h`, `u<kappa>` and `umax`.
    #[arg(long, default_value = "h,u0.5,u2,umax", value_parser = measures)]
    pub measures: MeasureList,
    /// Angular resolution of the local refinement.
    #[arg(long, default_value = "1e-7", value_parser = positive)]
    pub refine_tol: f64,
}

#[derive(Debug, Clone, Args)]
pub struct CheckArgs {
    #[command(flatten)]
    pub mesh: MeshArgs,
    /// Comma-separated coordinates of the point.
    #[arg(long, value_parser = point, allow_hyphen_values = true)]
    pub point: Point,
}

#[derive(Debug, Clone, Args)]
pub struct SurfaceArgs {
    #[arg(long, value_enum, default_value = "jpow")]
    pub family: Family,
    #[arg(long, default_value_t = 1)]
    pub gamma: u32,
    #[arg(long, default_value = "91", value_parser = steps)]
    pub mu_steps: usize,
    #[arg(long, default_value = "180", value_parser = steps)]
    pub nu_steps: usize,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Clone, Args)]
pub struct SweepArgs {
    #[arg(long, value_enum, default_value = "anticomm")]
    pub family: Family,
    #[arg(long, default_value_t = 1)]
    pub gamma: u32,
    /// One of am, am_min, lmax_eta1, l2_eta1, lmin_eta1, mean_eta1.
    #[arg(long, default_value = "am")]
    pub quantity: Quantity,
    /// First spin of the series.
    #[arg(long, default_value = "1/2")]
    pub j: HalfInt,
    /// Last spin of the series; steps are one half.
    #[arg(long)]
    pub j_max: HalfInt,
    #[command(flatten)]
    pub output: Output,
}
