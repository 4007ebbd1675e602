//! Serialisable documents written by the JSON output format.
//!
//! Every document round-trips: reading one back and writing it again
//! reproduces the same bytes.

use serde::{Deserialize, Serialize};
use specrange_core::bounds::{BoundReport, MeasureKind};
use specrange_core::numrange::{Boundary2D, Hyperrect, Mesh3D, SupportFace};
use specrange_core::{Direction, ObservableVec};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SetHeader {
    pub j_twice: u32,
    pub set: String,
    pub gamma: u32,
}

impl SetHeader {
    pub fn of(e: &ObservableVec) -> Self {
        SetHeader {
            j_twice: e.j().map_or(0, |j| j.twice()),
            set: e.kind().tag().to_string(),
            gamma: e.gamma(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Angle {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub theta: Option<f64>,
    pub phi: f64,
}

impl From<&Direction> for Angle {
    fn from(d: &Direction) -> Self {
        Angle {
            theta: d.theta,
            phi: d.phi,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FaceDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub theta: Option<f64>,
    pub phi: f64,
    pub lambda_max: f64,
    pub multiplicity: usize,
    pub vertices: Vec<Vec<f64>>,
}

impl From<&SupportFace> for FaceDoc {
    fn from(f: &SupportFace) -> Self {
        FaceDoc {
            theta: f.dir.theta,
            phi: f.dir.phi,
            lambda_max: f.lambda_max,
            multiplicity: f.multiplicity,
            vertices: f.vertices.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundaryDoc {
    #[serde(flatten)]
    pub header: SetHeader,
    pub faces: Vec<FaceDoc>,
    pub hull: Vec<[f64; 2]>,
}

impl BoundaryDoc {
    pub fn new(e: &ObservableVec, b: &Boundary2D) -> Self {
        BoundaryDoc {
            header: SetHeader::of(e),
            faces: b.samples.iter().map(FaceDoc::from).collect(),
            hull: b.hull.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MeshDoc {
    #[serde(flatten)]
    pub header: SetHeader,
    pub theta_steps: usize,
    pub phi_steps: usize,
    pub faces: Vec<FaceDoc>,
    pub points: Vec<[f64; 3]>,
    pub triangles: Vec<[usize; 3]>,
}

impl MeshDoc {
    pub fn new(e: &ObservableVec, m: &Mesh3D) -> Self {
        MeshDoc {
            header: SetHeader::of(e),
            theta_steps: m.theta_steps,
            phi_steps: m.phi_steps,
            faces: m.distinct_faces().map(FaceDoc::from).collect(),
            points: m.points.clone(),
            triangles: m.triangles.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MeasureDoc {
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kappa: Option<f64>,
    pub value: f64,
    pub sense: String,
    pub angles: Vec<Angle>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RectDoc {
    pub lo: Vec<f64>,
    pub hi: Vec<f64>,
}

impl From<&Hyperrect> for RectDoc {
    fn from(r: &Hyperrect) -> Self {
        RectDoc {
            lo: r.lo.clone(),
            hi: r.hi.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundsDoc {
    #[serde(flatten)]
    pub header: SetHeader,
    pub measures: Vec<MeasureDoc>,
    pub trivial: bool,
    pub hyperrect: RectDoc,
}

pub fn kind_parts(kind: MeasureKind) -> (&'static str, Option<f64>) {
    match kind {
        MeasureKind::H => ("h", None),
        MeasureKind::U(k) => ("u", Some(k)),
        MeasureKind::UMax => ("umax", None),
    }
}

impl BoundsDoc {
    pub fn new(e: &ObservableVec, r: &BoundReport) -> Self {
        BoundsDoc {
            header: SetHeader::of(e),
            measures: r
                .measures
                .iter()
                .map(|m| {
                    let (kind, kappa) = kind_parts(m.kind);
                    MeasureDoc {
                        kind: kind.to_string(),
                        kappa,
                        value: m.value,
                        sense: m.sense.tag().to_string(),
                        angles: m.angles.iter().map(Angle::from).collect(),
                    }
                })
                .collect(),
            trivial: r.trivial,
            hyperrect: RectDoc::from(&r.rect),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckDoc {
    #[serde(flatten)]
    pub header: SetHeader,
    pub point: Vec<f64>,
    pub margin: f64,
    pub inside: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OpDoc {
    pub label: String,
    pub dim: usize,
    /// Row-major real parts.
    pub re: Vec<Vec<f64>>,
    /// Row-major imaginary parts.
    pub im: Vec<Vec<f64>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OpsDoc {
    #[serde(flatten)]
    pub header: SetHeader,
    pub ops: Vec<OpDoc>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SurfacePoint {
    pub mu: f64,
    pub nu: f64,
    pub a: [f64; 3],
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SurfaceDoc {
    pub family: String,
    pub gamma: u32,
    pub mu_steps: usize,
    pub nu_steps: usize,
    pub points: Vec<SurfacePoint>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub j_twice: u32,
    pub value: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepDoc {
    pub family: String,
    pub gamma: u32,
    pub quantity: String,
    pub series: Vec<SweepRow>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GapDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub theta: Option<f64>,
    pub phi: f64,
    pub lambda1: f64,
    /// Absent for one-dimensional operators.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda2: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GapsDoc {
    #[serde(flatten)]
    pub header: SetHeader,
    pub rows: Vec<GapDoc>,
}
