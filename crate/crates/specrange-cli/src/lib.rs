//! The `specrange` command-line tool.

pub mod args;
pub mod docs;
pub mod output;

use std::ffi::OsString;
use std::fs;
use std::io::Write;

use clap::error::ErrorKind;
use clap::Parser;
use serde::Serialize;
use specrange_core::bounds::{optimize_bounds_with, BoundOpts, BoundaryRef};
use specrange_core::definetti::{convergence_sweep, surface};
use specrange_core::numrange::{boundary2d, boundary3d, gap_report, membership, FaceOpts};
use specrange_core::spin::build_set;
use specrange_core::{HalfInt, ObservableVec};

use args::{Cli, Command, Format, MeshArgs, Output, SetArgs};
use docs::*;
use output::{csv_row, fmt_num, svg_boundary, svg_mesh};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Numeric(String),
    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Numeric(_) | CliError::Io(_) => 1,
        }
    }
}

fn numeric(e: impl std::fmt::Display) -> CliError {
    CliError::Numeric(e.to_string())
}

/// Parses `argv` (program name first), runs the command and returns the exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
        }
    };
    if let Err(e) = configure_threads() {
        eprintln!("error: {e}");
        return e.exit_code();
    }
    match execute(&cli.command) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn configure_threads() -> Result<(), CliError> {
    let Ok(raw) = std::env::var("SPECRANGE_THREADS") else {
        return Ok(());
    };
    let n: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| CliError::Usage(format!("SPECRANGE_THREADS must be a positive integer, got {raw:?}")))?;
    // A second call in the same process finds the pool already built; keep it.
    let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    Ok(())
}

fn build(a: &SetArgs) -> Result<ObservableVec, CliError> {
    build_set(a.set, a.j, a.gamma).map_err(|e| CliError::Usage(e.to_string()))
}

fn face_opts(a: &SetArgs) -> FaceOpts {
    FaceOpts {
        deg_tol: a.deg_tol,
        ..FaceOpts::default()
    }
}

fn emit(out: &Output, text: &str) -> Result<(), CliError> {
    match &out.out {
        Some(path) => fs::write(path, text)?,
        None => std::io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn json<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents hold finite numbers only");
    s.push('\n');
    s
}

fn no_svg(out: &Output, what: &str) -> Result<(), CliError> {
    if out.format == Format::Svg {
        return Err(CliError::Usage(format!(
            "svg output is available for boundary and mesh only, not {what}"
        )));
    }
    Ok(())
}

fn require_arity(e: &ObservableVec, n: usize, what: &str) -> Result<(), CliError> {
    if e.n() != n {
        return Err(CliError::Usage(format!(
            "{what} needs a set of {n} operators; `{}` has {}",
            e.kind(),
            e.n()
        )));
    }
    Ok(())
}

fn execute(cmd: &Command) -> Result<(), CliError> {
    match cmd {
        Command::Ops(a) => ops(a),
        Command::Boundary(a) => {
            let e = build(&a.set)?;
            require_arity(&e, 2, "boundary")?;
            let b = boundary2d(&e, a.phi_steps, &face_opts(&a.set)).map_err(numeric)?;
            let text = match a.set.output.format {
                Format::Csv => {
                    let mut s = String::from("phi,lambda_max,multiplicity,v1,v2,vertex_index\n");
                    for f in &b.samples {
                        for (k, v) in f.vertices.iter().enumerate() {
                            s += &csv_row(&[
                                fmt_num(f.dir.phi),
                                fmt_num(f.lambda_max),
                                f.multiplicity.to_string(),
                                fmt_num(v[0]),
                                fmt_num(v[1]),
                                k.to_string(),
                            ]);
                        }
                    }
                    s
                }
                Format::Json => json(&BoundaryDoc::new(&e, &b)),
                Format::Svg => svg_boundary(&b),
            };
            emit(&a.set.output, &text)
        }
        Command::Mesh(a) => {
            let (e, m) = mesh(a)?;
            let text = match a.set.output.format {
                Format::Csv => {
                    let mut s = String::from("theta,phi,lambda_max,multiplicity,v1,v2,v3,vertex_index\n");
                    for f in m.distinct_faces() {
                        for (k, v) in f.vertices.iter().enumerate() {
                            s += &csv_row(&[
                                fmt_num(f.dir.theta.unwrap_or(0.0)),
                                fmt_num(f.dir.phi),
                                fmt_num(f.lambda_max),
                                f.multiplicity.to_string(),
                                fmt_num(v[0]),
                                fmt_num(v[1]),
                                fmt_num(v[2]),
                                k.to_string(),
                            ]);
                        }
                    }
                    s
                }
                Format::Json => json(&MeshDoc::new(&e, &m)),
                Format::Svg => svg_mesh(&m),
            };
            emit(&a.set.output, &text)
        }
        Command::Bounds(a) => {
            let out = &a.mesh.set.output;
            no_svg(out, "bounds")?;
            let e = build(&a.mesh.set)?;
            let opts = BoundOpts {
                refine_tol: a.refine_tol,
                face: face_opts(&a.mesh.set),
                ..BoundOpts::default()
            };
            let report = match e.n() {
                2 => {
                    let b = boundary2d(&e, a.mesh.phi_steps, &opts.face).map_err(numeric)?;
                    optimize_bounds_with(&e, BoundaryRef::Planar(&b), &a.measures.0, &opts)
                }
                3 => {
                    let m = boundary3d(&e, a.mesh.theta_steps, a.mesh.phi_steps, &opts.face).map_err(numeric)?;
                    optimize_bounds_with(&e, BoundaryRef::Spatial(&m), &a.measures.0, &opts)
                }
                n => return Err(CliError::Usage(format!("bounds need 2 or 3 operators, got {n}"))),
            }
            .map_err(numeric)?;
            let text = match out.format {
                Format::Json => json(&BoundsDoc::new(&e, &report)),
                _ => {
                    let mut s = String::from("kind,kappa,value,sense,theta,phi\n");
                    for m in &report.measures {
                        let (kind, kappa) = kind_parts(m.kind);
                        for d in &m.angles {
                            s += &csv_row(&[
                                kind.to_string(),
                                kappa.map(fmt_num).unwrap_or_default(),
                                fmt_num(m.value),
                                m.sense.tag().to_string(),
                                d.theta.map(fmt_num).unwrap_or_default(),
                                fmt_num(d.phi),
                            ]);
                        }
                    }
                    s
                }
            };
            emit(out, &text)
        }
        Command::Check(a) => {
            let out = &a.mesh.set.output;
            no_svg(out, "check")?;
            let e = build(&a.mesh.set)?;
            let p = &a.point.0;
            if p.len() != e.n() {
                return Err(CliError::Usage(format!(
                    "point has {} coordinates, the set has {} operators",
                    p.len(),
                    e.n()
                )));
            }
            let margin = membership(&e, p, a.mesh.theta_steps, a.mesh.phi_steps).map_err(numeric)?;
            let doc = CheckDoc {
                header: SetHeader::of(&e),
                point: p.clone(),
                margin,
                inside: margin >= 0.0,
            };
            let text = match out.format {
                Format::Json => json(&doc),
                _ => format!("margin,inside\n{}", csv_row(&[fmt_num(margin), doc.inside.to_string()])),
            };
            emit(out, &text)
        }
        Command::Surface(a) => {
            no_svg(&a.output, "surface")?;
            let s = surface(a.family.into(), a.gamma, a.mu_steps, a.nu_steps)
                .map_err(|e| CliError::Usage(e.to_string()))?;
            let text = match a.output.format {
                Format::Json => json(&SurfaceDoc {
                    family: s.family.tag().to_string(),
                    gamma: s.gamma,
                    mu_steps: s.mu_steps,
                    nu_steps: s.nu_steps,
                    points: s
                        .grid
                        .iter()
                        .zip(&s.points)
                        .map(|(b, p)| SurfacePoint {
                            mu: b.mu,
                            nu: b.nu,
                            a: *p,
                        })
                        .collect(),
                }),
                _ => {
                    let mut out = String::from("mu,nu,a1,a2,a3\n");
                    for (b, p) in s.grid.iter().zip(&s.points) {
                        out += &csv_row(&[
                            fmt_num(b.mu),
                            fmt_num(b.nu),
                            fmt_num(p[0]),
                            fmt_num(p[1]),
                            fmt_num(p[2]),
                        ]);
                    }
                    out
                }
            };
            emit(&a.output, &text)
        }
        Command::Sweep(a) => {
            no_svg(&a.output, "sweep")?;
            if a.j_max.twice() < a.j.twice() {
                return Err(CliError::Usage(format!("--j-max {} is below --j {}", a.j_max, a.j)));
            }
            let js = HalfInt::range_from(a.j.twice(), a.j_max.twice());
            let series = convergence_sweep(a.family.into(), a.gamma, &js, a.quantity).map_err(numeric)?;
            let text = match a.output.format {
                Format::Json => json(&SweepDoc {
                    family: specrange_core::SetKind::from(a.family).tag().to_string(),
                    gamma: a.gamma,
                    quantity: a.quantity.tag().to_string(),
                    series: series
                        .iter()
                        .map(|(j, v)| SweepRow {
                            j_twice: j.twice(),
                            value: *v,
                        })
                        .collect(),
                }),
                _ => {
                    let mut s = String::from("j_twice,quantity,value\n");
                    for (j, v) in &series {
                        s += &csv_row(&[j.twice().to_string(), a.quantity.tag().to_string(), fmt_num(*v)]);
                    }
                    s
                }
            };
            emit(&a.output, &text)
        }
        Command::Gaps(a) => {
            let out = &a.set.output;
            no_svg(out, "gaps")?;
            let e = build(&a.set)?;
            let rows = gap_report(&e, a.theta_steps, a.phi_steps).map_err(numeric)?;
            let text = match out.format {
                Format::Json => json(&GapsDoc {
                    header: SetHeader::of(&e),
                    rows: rows
                        .iter()
                        .map(|r| GapDoc {
                            theta: r.dir.theta,
                            phi: r.dir.phi,
                            lambda1: r.lambda1,
                            lambda2: r.lambda2.is_finite().then_some(r.lambda2),
                        })
                        .collect(),
                }),
                _ => {
                    let mut s = String::from("theta,phi,lambda1,lambda2,gap\n");
                    for r in &rows {
                        let (l2, gap) = if r.lambda2.is_finite() {
                            (fmt_num(r.lambda2), fmt_num(r.lambda1 - r.lambda2))
                        } else {
                            (String::new(), String::new())
                        };
                        s += &csv_row(&[
                            r.dir.theta.map(fmt_num).unwrap_or_default(),
                            fmt_num(r.dir.phi),
                            fmt_num(r.lambda1),
                            l2,
                            gap,
                        ]);
                    }
                    s
                }
            };
            emit(out, &text)
        }
    }
}

fn mesh(a: &MeshArgs) -> Result<(ObservableVec, specrange_core::Mesh3D), CliError> {
    let e = build(&a.set)?;
    require_arity(&e, 3, "mesh")?;
    let m = boundary3d(&e, a.theta_steps, a.phi_steps, &face_opts(&a.set)).map_err(numeric)?;
    Ok((e, m))
}

fn ops(a: &SetArgs) -> Result<(), CliError> {
    no_svg(&a.output, "ops")?;
    let e = build(a)?;
    let text = match a.output.format {
        Format::Json => json(&OpsDoc {
            header: SetHeader::of(&e),
            ops: e
                .ops()
                .iter()
                .map(|op| {
                    let d = op.dim();
                    let m = op.mat();
                    OpDoc {
                        label: op.label().to_string(),
                        dim: d,
                        re: (0..d).map(|r| (0..d).map(|c| m[(r, c)].re).collect()).collect(),
                        im: (0..d).map(|r| (0..d).map(|c| m[(r, c)].im).collect()).collect(),
                    }
                })
                .collect(),
        }),
        _ => {
            let mut s = String::from("label,row,col,re,im\n");
            for op in e.ops() {
                let m = op.mat();
                for r in 0..op.dim() {
                    for c in 0..op.dim() {
                        let z = m[(r, c)];
                        s += &csv_row(&[
                            op.label().to_string(),
                            r.to_string(),
                            c.to_string(),
                            fmt_num(z.re),
                            fmt_num(z.im),
                        ]);
                    }
                }
            }
            s
        }
    };
    emit(&a.output, &text)
}
