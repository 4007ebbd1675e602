//! Uncertainty and certainty measures over the range and their tight bounds.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::hull::distance_to_polygon;
use crate::numrange::{face, hyperrect, Boundary2D, Direction, FaceOpts, Hyperrect, Mesh3D, RangeError};
use crate::search::{coordinate_descent, golden_min, newton_min_2d};
use crate::spin::ObservableVec;

/// Spectral intervals narrower than this cannot be normalized.
pub const DEGENERATE_WIDTH: f64 = 1e-12;
/// Means this far outside their interval (relative) are clamped back in.
pub const CLAMP_TOL: f64 = 1e-9;
/// Normalized means closer than this to 0 or 1 are snapped to the endpoint,
/// so that roundoff in a mean at the edge of its interval does not leak into
/// `u_κ` with `κ < 1`, whose slope is unbounded there.
pub const ENDPOINT_SNAP: f64 = 1e-12;

const NEWTON_SPACING: f64 = 1e-4;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum BoundError {
    #[error("degenerate spectral interval [{lo}, {hi}]")]
    DegenerateRange { lo: f64, hi: f64 },
    #[error("mean value {x} lies outside [{lo}, {hi}]")]
    OutOfRange { x: f64, lo: f64, hi: f64 },
    #[error("boundary has no faces")]
    EmptyBoundary,
    #[error("boundary dimension {boundary} does not match {operators} operators")]
    ShapeMismatch { boundary: usize, operators: usize },
    #[error("unknown measure `{0}` (expected h, umax or u<kappa>)")]
    BadMeasure(String),
    #[error(transparent)]
    Range(#[from] RangeError),
}

/// Whether a measure is bounded from below (uncertainty) or above (certainty).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sense {
    Min,
    Max,
}

impl Sense {
    pub fn tag(self) -> &'static str {
        match self {
            Sense::Min => "min",
            Sense::Max => "max",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MeasureKind {
    /// Binary entropy of the normalized pair.
    H,
    /// `dot^κ + ring^κ`.
    U(f64),
    /// `max(dot, ring)`.
    UMax,
}

impl MeasureKind {
    /// Concave measures are minimized, convex ones maximized; `U(1)` is constant.
    pub fn sense(self) -> Sense {
        match self {
            MeasureKind::H => Sense::Min,
            MeasureKind::U(k) if k <= 1.0 => Sense::Min,
            MeasureKind::U(_) | MeasureKind::UMax => Sense::Max,
        }
    }

    pub fn kappa(self) -> Option<f64> {
        match self {
            MeasureKind::U(k) => Some(k),
            _ => None,
        }
    }

    /// Parses a comma-separated list such as `h,u0.5,u2,umax`.
    pub fn parse_list(s: &str) -> Result<Vec<MeasureKind>, BoundError> {
        s.split(',').map(|t| t.trim().parse()).collect()
    }
}

impl fmt::Display for MeasureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MeasureKind::H => f.write_str("h"),
            MeasureKind::U(k) => write!(f, "u{k}"),
            MeasureKind::UMax => f.write_str("umax"),
        }
    }
}

impl FromStr for MeasureKind {
    type Err = BoundError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim().to_ascii_lowercase();
        match t.as_str() {
            "h" => Ok(MeasureKind::H),
            "umax" => Ok(MeasureKind::UMax),
            _ => match t.strip_prefix('u').and_then(|k| k.parse::<f64>().ok()) {
                Some(k) if k > 0.0 && k.is_finite() => Ok(MeasureKind::U(k)),
                _ => Err(BoundError::BadMeasure(s.to_string())),
            },
        }
    }
}

/// Maps `x ∈ [lo, hi]` to the pair `((hi − x)/(hi − lo), (x − lo)/(hi − lo))`.
pub fn normalize_mean(x: f64, lo: f64, hi: f64) -> Result<(f64, f64), BoundError> {
    normalize(x, lo, hi, true)
}

fn normalize(x: f64, lo: f64, hi: f64, snap: bool) -> Result<(f64, f64), BoundError> {
    let width = hi - lo;
    if !(width > DEGENERATE_WIDTH) {
        return Err(BoundError::DegenerateRange { lo, hi });
    }
    let tol = CLAMP_TOL * lo.abs().max(hi.abs()).max(1.0);
    if x < lo - tol || x > hi + tol || !x.is_finite() {
        return Err(BoundError::OutOfRange { x, lo, hi });
    }
    let ring = ((x - lo) / width).clamp(0.0, 1.0);
    Ok(if snap && ring < ENDPOINT_SNAP {
        (1.0, 0.0)
    } else if snap && ring > 1.0 - ENDPOINT_SNAP {
        (0.0, 1.0)
    } else {
        (1.0 - ring, ring)
    })
}

fn xlnx(x: f64) -> f64 {
    if x > 0.0 {
        x * x.ln()
    } else {
        0.0
    }
}

pub fn measure(kind: MeasureKind, x: f64, lo: f64, hi: f64) -> Result<f64, BoundError> {
    measure_with(kind, x, lo, hi, true)
}

fn measure_with(kind: MeasureKind, x: f64, lo: f64, hi: f64, snap: bool) -> Result<f64, BoundError> {
    let (dot, ring) = normalize(x, lo, hi, snap)?;
    Ok(match kind {
        MeasureKind::H => -(xlnx(dot) + xlnx(ring)),
        MeasureKind::U(k) => dot.powf(k) + ring.powf(k),
        MeasureKind::UMax => dot.max(ring),
    })
}

/// Sum of the per-coordinate measures.
pub fn combined(kind: MeasureKind, r: &[f64], rect: &Hyperrect) -> Result<f64, BoundError> {
    combined_with(kind, r, rect, true)
}

fn combined_with(kind: MeasureKind, r: &[f64], rect: &Hyperrect, snap: bool) -> Result<f64, BoundError> {
    r.iter()
        .enumerate()
        .map(|(i, x)| measure_with(kind, *x, rect.lo[i], rect.hi[i], snap))
        .sum()
}

/// Membership in the region cut out by one bound: `combined ≥ bound` for
/// uncertainty measures, `combined ≤ bound` for certainty measures. Points
/// outside the hyperrectangle are never members.
pub fn region_contains(
    kind: MeasureKind,
    bound: f64,
    sense: Sense,
    r: &[f64],
    rect: &Hyperrect,
) -> Result<bool, BoundError> {
    let scale = rect.lo.iter().chain(&rect.hi).fold(1.0_f64, |m, x| m.max(x.abs()));
    if !rect.contains(r, CLAMP_TOL * scale) {
        return Ok(false);
    }
    let v = combined(kind, r, rect)?;
    let tol = 1e-10 * bound.abs().max(1.0);
    Ok(match sense {
        Sense::Min => v >= bound - tol,
        Sense::Max => v <= bound + tol,
    })
}

/// A sampled boundary of either dimension.
#[derive(Debug, Clone, Copy)]
pub enum BoundaryRef<'a> {
    Planar(&'a Boundary2D),
    Spatial(&'a Mesh3D),
}

impl<'a> From<&'a Boundary2D> for BoundaryRef<'a> {
    fn from(b: &'a Boundary2D) -> Self {
        BoundaryRef::Planar(b)
    }
}

impl<'a> From<&'a Mesh3D> for BoundaryRef<'a> {
    fn from(m: &'a Mesh3D) -> Self {
        BoundaryRef::Spatial(m)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundOpts {
    /// Angular resolution of the local refinement.
    pub refine_tol: f64,
    /// Angles whose value is this close (relative) to the optimum are reported.
    pub value_tol: f64,
    /// Most grid optima passed to refinement.
    pub max_candidates: usize,
    /// Refined values must beat the grid value by this much (relative) to
    /// replace it; smaller gains are eigenvector roundoff near degenerate
    /// directions.
    pub noise_tol: f64,
    pub face: FaceOpts,
}

impl Default for BoundOpts {
    fn default() -> Self {
        BoundOpts {
            refine_tol: 1e-7,
            value_tol: 1e-9,
            max_candidates: 24,
            noise_tol: 2e-8,
            face: FaceOpts::default(),
        }
    }
}

/// Optimum of one measure over the range.
#[derive(Debug, Clone, PartialEq)]
pub struct MeasureBound {
    pub kind: MeasureKind,
    pub value: f64,
    pub sense: Sense,
    /// Directions whose faces attain the optimum, in ascending angle order.
    pub angles: Vec<Direction>,
    /// A mean vector attaining the optimum.
    pub point: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport {
    pub measures: Vec<MeasureBound>,
    pub trivial: bool,
    pub corner: Option<Vec<f64>>,
    pub rect: Hyperrect,
}

impl BoundReport {
    pub fn get(&self, kind: MeasureKind) -> Option<&MeasureBound> {
        self.measures.iter().find(|m| m.kind == kind)
    }
}

/// Signed objective: the best (smallest after sign flip) vertex of a face.
/// Local refinement runs without endpoint snapping, so that boundary points
/// approaching a hyperrectangle edge are scored at their true value.
fn face_score(
    kind: MeasureKind,
    sign: f64,
    vertices: &[Vec<f64>],
    rect: &Hyperrect,
    snap: bool,
) -> Result<(f64, Vec<f64>), BoundError> {
    let mut best = (f64::INFINITY, Vec::new());
    for v in vertices {
        let s = sign * combined_with(kind, v, rect, snap)?;
        if s < best.0 {
            best = (s, v.clone());
        }
    }
    Ok(best)
}

struct Node {
    dir: Direction,
    vertices: Vec<Vec<f64>>,
    neighbors: Vec<usize>,
}

fn planar_nodes(b: &Boundary2D) -> Vec<Node> {
    let n = b.samples.len();
    b.samples
        .iter()
        .enumerate()
        .map(|(i, f)| Node {
            dir: f.dir,
            vertices: f.vertices.clone(),
            neighbors: vec![(i + n - 1) % n, (i + 1) % n],
        })
        .collect()
}

fn spatial_nodes(m: &Mesh3D) -> Vec<Node> {
    let (kk, kp) = (m.theta_steps, m.phi_steps);
    // node 0 is the north pole, then interior rows, then the south pole
    let idx = |k: usize, p: usize| -> usize {
        if k == 0 {
            0
        } else if k == kk {
            1 + (kk - 1) * kp
        } else {
            1 + (k - 1) * kp + p % kp
        }
    };
    let mut nodes = Vec::with_capacity(2 + (kk - 1) * kp);
    nodes.push(Node {
        dir: m.node(0, 0).dir,
        vertices: m.node(0, 0).vertices.clone(),
        neighbors: (0..kp).map(|p| idx(1, p)).collect(),
    });
    for k in 1..kk {
        for p in 0..kp {
            let f = m.node(k, p);
            nodes.push(Node {
                dir: f.dir,
                vertices: f.vertices.clone(),
                neighbors: vec![idx(k - 1, p), idx(k + 1, p), idx(k, p + kp - 1), idx(k, p + 1)],
            });
        }
    }
    nodes.push(Node {
        dir: m.node(kk, 0).dir,
        vertices: m.node(kk, 0).vertices.clone(),
        neighbors: (0..kp).map(|p| idx(kk - 1, p)).collect(),
    });
    nodes
}

fn canonical(dir: Direction) -> Direction {
    let two_pi = 2.0 * PI;
    match dir.theta {
        None => Direction::planar(dir.phi.rem_euclid(two_pi)),
        Some(t) => {
            let mut t = t.rem_euclid(two_pi);
            let mut p = dir.phi;
            if t > PI {
                t = two_pi - t;
                p += PI;
            }
            let p = if t == 0.0 || t == PI { 0.0 } else { p.rem_euclid(two_pi) };
            Direction::spatial(t, p)
        }
    }
}

fn dist(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).powi(2)).sum::<f64>().sqrt()
}

fn angular_distance(a: &Direction, b: &Direction) -> f64 {
    let (ea, eb) = (a.eta(), b.eta());
    let dot: f64 = ea.iter().zip(&eb).map(|(x, y)| x * y).sum();
    dot.clamp(-1.0, 1.0).acos()
}

/// Global optima of each measure over the sampled boundary, refined by local
/// search in the direction angles.
pub fn optimize_bounds<'a>(
    e: &ObservableVec,
    boundary: impl Into<BoundaryRef<'a>>,
    kinds: &[MeasureKind],
) -> Result<BoundReport, BoundError> {
    optimize_bounds_with(e, boundary.into(), kinds, &BoundOpts::default())
}

pub fn optimize_bounds_with(
    e: &ObservableVec,
    boundary: BoundaryRef<'_>,
    kinds: &[MeasureKind],
    opts: &BoundOpts,
) -> Result<BoundReport, BoundError> {
    let rect = hyperrect(e);
    for (lo, hi) in rect.lo.iter().zip(&rect.hi) {
        if !(hi - lo > DEGENERATE_WIDTH) {
            return Err(BoundError::DegenerateRange { lo: *lo, hi: *hi });
        }
    }
    let (nodes, steps) = match boundary {
        BoundaryRef::Planar(b) => {
            if e.n() != 2 {
                return Err(BoundError::ShapeMismatch {
                    boundary: 2,
                    operators: e.n(),
                });
            }
            (planar_nodes(b), vec![2.0 * PI / b.samples.len().max(1) as f64])
        }
        BoundaryRef::Spatial(m) => {
            if e.n() != 3 {
                return Err(BoundError::ShapeMismatch {
                    boundary: 3,
                    operators: e.n(),
                });
            }
            (
                spatial_nodes(m),
                vec![PI / m.theta_steps as f64, 2.0 * PI / m.phi_steps as f64],
            )
        }
    };
    if nodes.is_empty() {
        return Err(BoundError::EmptyBoundary);
    }
    let mut measures = Vec::with_capacity(kinds.len());
    for &kind in kinds {
        measures.push(optimize_one(e, &nodes, &steps, kind, &rect, opts)?);
    }
    let corner = triviality_check(boundary, &rect);
    Ok(BoundReport {
        measures,
        trivial: corner.is_some(),
        corner,
        rect,
    })
}

fn optimize_one(
    e: &ObservableVec,
    nodes: &[Node],
    steps: &[f64],
    kind: MeasureKind,
    rect: &Hyperrect,
    opts: &BoundOpts,
) -> Result<MeasureBound, BoundError> {
    let sense = kind.sense();
    let sign = if sense == Sense::Min { 1.0 } else { -1.0 };
    let scores = nodes
        .iter()
        .map(|n| face_score(kind, sign, &n.vertices, rect, true))
        .collect::<Result<Vec<_>, _>>()?;
    let best_grid = scores.iter().map(|s| s.0).fold(f64::INFINITY, f64::min);
    let flat = 1e-12 * best_grid.abs().max(1.0);
    let rise = |i: usize| {
        nodes[i]
            .neighbors
            .iter()
            .map(|&k| scores[k].0 - scores[i].0)
            .fold(0.0_f64, f64::max)
    };
    let mut order: Vec<usize> = (0..nodes.len())
        .filter(|&i| nodes[i].neighbors.iter().all(|&k| scores[i].0 <= scores[k].0 + flat))
        .filter(|&i| scores[i].0 - rise(i) <= best_grid + flat)
        .collect();
    order.sort_by(|&a, &b| scores[a].0.total_cmp(&scores[b].0).then(a.cmp(&b)));
    // one candidate per distinct grid point, preferring nodes with wider faces
    let point_tol = 1e-8 * rect.diagonal().max(1.0);
    let mut cands: Vec<usize> = Vec::new();
    for i in order {
        match cands
            .iter_mut()
            .find(|c| dist(&scores[**c].1, &scores[i].1) <= point_tol)
        {
            Some(c) => {
                if nodes[i].vertices.len() > nodes[*c].vertices.len() {
                    *c = i;
                }
            }
            None => cands.push(i),
        }
    }
    cands.truncate(opts.max_candidates.max(1));

    let eval = |dir: Direction| -> Result<(f64, Vec<f64>), BoundError> {
        let f = face(e, dir, &opts.face)?;
        face_score(kind, sign, &f.vertices, rect, false)
    };
    let refined = cands
        .par_iter()
        .map(|&i| -> Result<(Direction, f64, Vec<f64>), BoundError> {
            let node = &nodes[i];
            let (grid_score, grid_point) = scores[i].clone();
            let mut failure = None;
            let (dir, score) = match node.dir.theta {
                None => {
                    let phi0 = node.dir.phi;
                    let (phi, s) = golden_min(
                        |p| match eval(Direction::planar(p)) {
                            Ok(v) => v.0,
                            Err(err) => {
                                failure = Some(err);
                                f64::INFINITY
                            }
                        },
                        phi0 - steps[0],
                        phi0 + steps[0],
                        opts.refine_tol,
                    );
                    (Direction::planar(phi), s)
                }
                Some(theta0) => {
                    let max_step = steps[0].max(steps[1]);
                    let mut objective = |x: &[f64]| match eval(Direction::spatial(x[0], x[1])) {
                        Ok(v) => v.0,
                        Err(err) => {
                            failure = Some(err);
                            f64::INFINITY
                        }
                    };
                    let newton = newton_min_2d(
                        &mut objective,
                        [theta0, node.dir.phi],
                        NEWTON_SPACING,
                        max_step,
                        opts.refine_tol,
                        30,
                    );
                    let (x, s) = if newton.converged {
                        (newton.x.to_vec(), newton.fx)
                    } else {
                        coordinate_descent(&mut objective, &newton.x, max_step, opts.refine_tol, 8)
                    };
                    (Direction::spatial(x[0], x[1]), s)
                }
            };
            if let Some(err) = failure {
                return Err(err);
            }
            if score < grid_score - opts.noise_tol * grid_score.abs().max(1.0) {
                let (_, point) = eval(dir)?;
                Ok((canonical(dir), score, point))
            } else {
                Ok((canonical(node.dir), grid_score, grid_point))
            }
        })
        .collect::<Result<Vec<_>, _>>()?;

    let best = refined.iter().map(|r| r.1).fold(f64::INFINITY, f64::min);
    let tol = opts.value_tol * best.abs().max(1.0);
    let winners: Vec<&(Direction, f64, Vec<f64>)> = refined.iter().filter(|r| r.1 <= best + tol).collect();
    let point = refined
        .iter()
        .find(|r| r.1 == best)
        .map(|r| r.2.clone())
        .unwrap_or_default();
    let mut angles: Vec<Direction> = Vec::new();
    let mut points: Vec<&Vec<f64>> = Vec::new();
    for w in &winners {
        let same_point = points.iter().any(|p| dist(p, &w.2) <= point_tol);
        if !same_point && !angles.iter().any(|a| angular_distance(a, &w.0) < 1e-5) {
            angles.push(w.0);
            points.push(&w.2);
        }
    }
    angles.sort_by(|a, b| {
        a.theta
            .unwrap_or(0.0)
            .total_cmp(&b.theta.unwrap_or(0.0))
            .then(a.phi.total_cmp(&b.phi))
    });
    Ok(MeasureBound {
        kind,
        value: sign * best,
        sense,
        angles,
        point,
    })
}

/// A hyperrectangle corner lying on the computed boundary, if any. Such a
/// corner has zero uncertainty in every coordinate, so every bound of the
/// measures above is attained at the trivial extreme.
pub fn triviality_check(boundary: BoundaryRef<'_>, rect: &Hyperrect) -> Option<Vec<f64>> {
    let tol = 1e-6 * rect.diagonal().max(f64::MIN_POSITIVE);
    let corners = rect.corners();
    match boundary {
        BoundaryRef::Planar(b) => corners
            .into_iter()
            .find(|c| distance_to_polygon(&b.hull, [c[0], c[1]]) <= tol),
        BoundaryRef::Spatial(m) => corners.into_iter().find(|c| {
            m.vertices().any(|v| {
                let d2: f64 = v.iter().zip(c).map(|(a, b)| (a - b).powi(2)).sum();
                d2.sqrt() <= tol
            })
        }),
    }
}

/// Distance from the nearest hyperrectangle corner to the sampled boundary,
/// relative to the hyperrectangle diagonal.
pub fn corner_distance(boundary: BoundaryRef<'_>, rect: &Hyperrect) -> f64 {
    let diag = rect.diagonal().max(f64::MIN_POSITIVE);
    let corners = rect.corners();
    let d = match boundary {
        BoundaryRef::Planar(b) => corners
            .iter()
            .map(|c| distance_to_polygon(&b.hull, [c[0], c[1]]))
            .fold(f64::INFINITY, f64::min),
        BoundaryRef::Spatial(m) => corners
            .iter()
            .flat_map(|c| {
                m.vertices()
                    .map(move |v| v.iter().zip(c).map(|(a, b)| (a - b).powi(2)).sum::<f64>().sqrt())
            })
            .fold(f64::INFINITY, f64::min),
    };
    d / diag
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display_round_trip() {
        let kinds = MeasureKind::parse_list("h,u0.5,u2,umax").unwrap();
        assert_eq!(
            kinds,
            vec![
                MeasureKind::H,
                MeasureKind::U(0.5),
                MeasureKind::U(2.0),
                MeasureKind::UMax
            ]
        );
        let shown: Vec<String> = kinds.iter().map(|k| k.to_string()).collect();
        assert_eq!(shown.join(","), "h,u0.5,u2,umax");
        assert!("u-1".parse::<MeasureKind>().is_err());
        assert!("entropy".parse::<MeasureKind>().is_err());
    }

    #[test]
    fn normalization_endpoints() {
        assert_eq!(normalize_mean(0.0, 0.0, 2.0).unwrap(), (1.0, 0.0));
        assert_eq!(normalize_mean(1.0, 0.0, 2.0).unwrap(), (0.5, 0.5));
        assert!(matches!(
            normalize_mean(0.25, 0.25, 0.25),
            Err(BoundError::DegenerateRange { .. })
        ));
        assert!(matches!(
            normalize_mean(3.0, 0.0, 2.0),
            Err(BoundError::OutOfRange { .. })
        ));
        assert_eq!(normalize_mean(2.0 + 1e-12, 0.0, 2.0).unwrap(), (0.0, 1.0));
    }

    #[test]
    fn measure_values() {
        assert_eq!(measure(MeasureKind::H, 0.0, 0.0, 1.0).unwrap(), 0.0);
        assert!((measure(MeasureKind::H, 0.5, 0.0, 1.0).unwrap() - 2f64.ln()).abs() < 1e-15);
        assert!((measure(MeasureKind::U(0.5), 0.5, 0.0, 1.0).unwrap() - 2f64.sqrt()).abs() < 1e-15);
        assert_eq!(measure(MeasureKind::U(2.0), 1.0, 0.0, 1.0).unwrap(), 1.0);
        assert_eq!(measure(MeasureKind::UMax, 0.5, 0.0, 1.0).unwrap(), 0.5);
    }

    #[test]
    fn senses() {
        assert_eq!(MeasureKind::H.sense(), Sense::Min);
        assert_eq!(MeasureKind::U(0.5).sense(), Sense::Min);
        assert_eq!(MeasureKind::U(2.0).sense(), Sense::Max);
        assert_eq!(MeasureKind::UMax.sense(), Sense::Max);
    }
}
