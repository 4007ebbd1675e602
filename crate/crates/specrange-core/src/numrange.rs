//! Supporting-hyperplane sweeps of joint numerical ranges.
//!
//! For a unit direction `η̂` the largest eigenvalue `λ_M` of `η̂·E` fixes the
//! supporting hyperplane `η̂·r = λ_M`; the mean vectors of its eigenspace form
//! the face. Degenerate eigenspaces are handled by compressing the operators
//! onto the eigenspace and sweeping the compressed range inside the hyperplane.

use std::f64::consts::PI;

use rayon::prelude::*;

use crate::hull::{convex_hull_2d, extreme_points_3d};
use crate::linalg::{
    combine_matrix, eigvals_hermitian, inner, quadratic_form, top_eigenspace, CMatrix, Complex, LinalgError,
};
use crate::spin::{frame_matrix, ObservableVec};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum RangeError {
    #[error("direction has {actual} components but the operator vector has {expected}")]
    DirectionMismatch { expected: usize, actual: usize },
    #[error("operators do not commute (commutator norm {norm:e})")]
    NotCommuting { norm: f64 },
    #[error("grid too coarse: {what} = {got}, need at least {min}")]
    TooFewSteps { what: &'static str, got: usize, min: usize },
    #[error("operation needs {expected} operators, got {actual}")]
    WrongArity { expected: usize, actual: usize },
    #[error("no parts given")]
    Empty,
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Unit vector `(cosφ, sinφ)` in the plane or `(sinθcosφ, sinθsinφ, cosθ)` in space.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Direction {
    pub theta: Option<f64>,
    pub phi: f64,
}

impl Direction {
    pub fn planar(phi: f64) -> Self {
        Direction { theta: None, phi }
    }

    pub fn spatial(theta: f64, phi: f64) -> Self {
        Direction {
            theta: Some(theta),
            phi,
        }
    }

    pub fn n(&self) -> usize {
        if self.theta.is_some() {
            3
        } else {
            2
        }
    }

    pub fn eta(&self) -> Vec<f64> {
        let (sp, cp) = self.phi.sin_cos();
        match self.theta {
            None => vec![cp, sp],
            Some(t) => {
                let (st, ct) = t.sin_cos();
                vec![st * cp, st * sp, ct]
            }
        }
    }

    /// The direction `-η̂`.
    pub fn antipode(&self) -> Self {
        Direction {
            theta: self.theta.map(|t| PI - t),
            phi: (self.phi + PI).rem_euclid(2.0 * PI),
        }
    }

    /// Orthonormal basis of the complement of `η̂`.
    fn tangent_basis(&self) -> Vec<Vec<f64>> {
        match self.theta {
            None => vec![vec![-self.phi.sin(), self.phi.cos()]],
            Some(t) => {
                let r = frame_matrix(t, self.phi);
                vec![r[0].to_vec(), r[1].to_vec()]
            }
        }
    }
}

/// Controls for face extraction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FaceOpts {
    /// Relative threshold for treating eigenvalues as degenerate.
    pub deg_tol: f64,
    /// Maximum nesting of compressed sweeps inside degenerate eigenspaces.
    pub depth: usize,
    /// Number of directions swept inside a two-dimensional face.
    pub inner_steps: usize,
    /// Vertices closer than this (relative to `max(1, |λ_M|)`) are merged.
    pub dedup_tol: f64,
}

impl Default for FaceOpts {
    fn default() -> Self {
        FaceOpts {
            deg_tol: 1e-8,
            depth: 2,
            inner_steps: 64,
            dedup_tol: 1e-8,
        }
    }
}

/// The face of the range exposed in one direction.
#[derive(Debug, Clone, PartialEq)]
pub struct SupportFace {
    pub dir: Direction,
    pub lambda_max: f64,
    pub lambda_min: f64,
    pub multiplicity: usize,
    /// Gap between `λ_M` and the next eigenvalue outside the top cluster.
    pub gap: Option<f64>,
    pub eigenbasis: Vec<Vec<Complex>>,
    pub vertices: Vec<Vec<f64>>,
    pub is_point: bool,
    /// Set when the deepest compressed sweep still met a degenerate cluster
    /// whose states gave distinct mean vectors.
    pub exhausted: bool,
}

impl SupportFace {
    /// Average of the vertices; lies in the face.
    pub fn centroid(&self) -> Vec<f64> {
        let n = self.vertices[0].len();
        let k = self.vertices.len() as f64;
        (0..n)
            .map(|i| self.vertices.iter().map(|v| v[i]).sum::<f64>() / k)
            .collect()
    }
}

fn check_dir(e: &ObservableVec, dir: &Direction) -> Result<(), RangeError> {
    if dir.n() != e.n() {
        return Err(RangeError::DirectionMismatch {
            expected: e.n(),
            actual: dir.n(),
        });
    }
    Ok(())
}

/// Top eigenvalue, multiplicity and eigenspace of `η̂·E`; no vertices.
pub fn support(e: &ObservableVec, dir: Direction, deg_tol: f64) -> Result<SupportFace, RangeError> {
    check_dir(e, &dir)?;
    let m = combine_matrix(&dir.eta(), e.ops());
    let top = top_eigenspace(&m, deg_tol)?;
    Ok(SupportFace {
        dir,
        lambda_max: top.lambda_max(),
        lambda_min: top.values[0],
        multiplicity: top.multiplicity(),
        gap: top.gap(),
        eigenbasis: top.basis,
        vertices: Vec::new(),
        is_point: true,
        exhausted: false,
    })
}

fn means(ops: &[CMatrix], v: &[Complex]) -> Vec<f64> {
    ops.iter()
        .map(|a| quadratic_form(a, v).expect("dimensions agree"))
        .collect()
}

/// `V^† A V` for the orthonormal columns `basis`.
fn compress(a: &CMatrix, basis: &[Vec<Complex>]) -> CMatrix {
    let av: Vec<Vec<Complex>> = basis.iter().map(|v| a.mul_vec(v).expect("dimensions agree")).collect();
    let m = basis.len();
    let mut out = CMatrix::from_fn(m, |r, c| inner(&basis[r], &av[c]));
    // enforce exact Hermitian symmetry against roundoff
    for r in 0..m {
        out[(r, r)] = Complex::new(out[(r, r)].re, 0.0);
        for c in r + 1..m {
            let z = (out[(r, c)] + out[(c, r)].conj()) * 0.5;
            out[(r, c)] = z;
            out[(c, r)] = z.conj();
        }
    }
    out
}

fn lin_comb(w: &[f64], ops: &[CMatrix]) -> CMatrix {
    let mut acc = CMatrix::zeros(ops[0].dim());
    for (c, op) in w.iter().zip(ops) {
        if *c != 0.0 {
            acc.axpy(*c, op);
        }
    }
    acc
}

struct Sweep<'a> {
    opts: &'a FaceOpts,
    out: Vec<Vec<f64>>,
    exhausted: bool,
    dedup: f64,
}

impl Sweep<'_> {
    /// Sweeps the range of the compressed operators `b` within the subspace
    /// orthogonal to the directions already fixed; `tangent` spans that subspace.
    fn run(&mut self, b: &[CMatrix], tangent: &[Vec<f64>], level: usize) -> Result<(), RangeError> {
        let n = b.len();
        let dirs: Vec<(Vec<f64>, Vec<Vec<f64>>)> = match tangent.len() {
            0 => {
                let e0: Vec<Complex> = (0..b[0].dim())
                    .map(|i| Complex::new(if i == 0 { 1.0 } else { 0.0 }, 0.0))
                    .collect();
                self.out.push(means(b, &e0));
                return Ok(());
            }
            1 => {
                let t = &tangent[0];
                let neg: Vec<f64> = t.iter().map(|x| -x).collect();
                vec![(t.clone(), Vec::new()), (neg, Vec::new())]
            }
            _ => {
                let (u1, u2) = (&tangent[0], &tangent[1]);
                (0..self.opts.inner_steps)
                    .map(|k| {
                        let psi = 2.0 * PI * k as f64 / self.opts.inner_steps as f64;
                        let (s, c) = psi.sin_cos();
                        let w: Vec<f64> = (0..n).map(|i| c * u1[i] + s * u2[i]).collect();
                        let t: Vec<f64> = (0..n).map(|i| -s * u1[i] + c * u2[i]).collect();
                        (w, vec![t])
                    })
                    .collect()
            }
        };
        for (w, rest) in dirs {
            let m = lin_comb(&w, b);
            let top = top_eigenspace(&m, self.opts.deg_tol)?;
            if top.multiplicity() == 1 || rest.is_empty() && tangent.len() == 1 {
                self.out.push(means(b, &top.basis[0]));
            } else if level < self.opts.depth {
                let sub: Vec<CMatrix> = b.iter().map(|op| compress(op, &top.basis)).collect();
                self.run(&sub, &rest, level + 1)?;
            } else {
                let pts: Vec<Vec<f64>> = top.basis.iter().map(|v| means(b, v)).collect();
                if pts.iter().any(|p| dist(p, &pts[0]) > self.dedup) {
                    self.exhausted = true;
                }
                self.out.extend(pts);
            }
        }
        Ok(())
    }
}

fn dist(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).powi(2)).sum::<f64>().sqrt()
}

fn dedup_points(points: Vec<Vec<f64>>, tol: f64) -> Vec<Vec<f64>> {
    let mut out: Vec<Vec<f64>> = Vec::with_capacity(points.len());
    for p in points {
        if !out.iter().any(|q| dist(&p, q) <= tol) {
            out.push(p);
        }
    }
    out
}

/// The face exposed in `dir`, with its vertex set in mean-value space.
pub fn face(e: &ObservableVec, dir: Direction, opts: &FaceOpts) -> Result<SupportFace, RangeError> {
    let mut f = support(e, dir, opts.deg_tol)?;
    let mats: Vec<CMatrix> = e.ops().iter().map(|o| o.mat().clone()).collect();
    let dedup = opts.dedup_tol * f.lambda_max.abs().max(1.0);
    if f.multiplicity == 1 {
        f.vertices = vec![means(&mats, &f.eigenbasis[0])];
    } else {
        let b: Vec<CMatrix> = mats.iter().map(|a| compress(a, &f.eigenbasis)).collect();
        let mut sweep = Sweep {
            opts,
            out: Vec::new(),
            exhausted: false,
            dedup,
        };
        if opts.depth == 0 {
            let pts: Vec<Vec<f64>> = f.eigenbasis.iter().map(|v| means(&mats, v)).collect();
            sweep.exhausted = pts.iter().any(|p| dist(p, &pts[0]) > dedup);
            sweep.out = pts;
        } else {
            sweep.run(&b, &dir.tangent_basis(), 1)?;
        }
        f.exhausted = sweep.exhausted;
        f.vertices = dedup_points(sweep.out, dedup);
    }
    f.is_point = f.vertices.len() == 1;
    Ok(f)
}

/// Boundary of a planar range sampled on a uniform φ grid.
#[derive(Debug, Clone, PartialEq)]
pub struct Boundary2D {
    pub samples: Vec<SupportFace>,
    pub hull: Vec<[f64; 2]>,
}

impl Boundary2D {
    pub fn vertices(&self) -> impl Iterator<Item = &Vec<f64>> {
        self.samples.iter().flat_map(|f| f.vertices.iter())
    }
}

fn hull_of_faces(faces: &[SupportFace]) -> Vec<[f64; 2]> {
    let pts: Vec<[f64; 2]> = faces
        .iter()
        .flat_map(|f| f.vertices.iter())
        .map(|v| [v[0], v[1]])
        .collect();
    convex_hull_2d(&pts)
}

pub fn boundary2d(e: &ObservableVec, steps: usize, opts: &FaceOpts) -> Result<Boundary2D, RangeError> {
    if e.n() != 2 {
        return Err(RangeError::WrongArity {
            expected: 2,
            actual: e.n(),
        });
    }
    if steps < 8 {
        return Err(RangeError::TooFewSteps {
            what: "phi_steps",
            got: steps,
            min: 8,
        });
    }
    let samples = (0..steps)
        .into_par_iter()
        .map(|k| face(e, Direction::planar(2.0 * PI * k as f64 / steps as f64), opts))
        .collect::<Result<Vec<_>, _>>()?;
    let hull = hull_of_faces(&samples);
    Ok(Boundary2D { samples, hull })
}

/// Boundary of a spatial range on a `(K+1) × K'` grid of directions.
#[derive(Debug, Clone, PartialEq)]
pub struct Mesh3D {
    pub theta_steps: usize,
    pub phi_steps: usize,
    /// Row-major over `θ_k = kπ/K` (rows) and `φ_k' = 2πk'/K'` (columns).
    pub grid: Vec<SupportFace>,
    /// One representative point (face centroid) per distinct node.
    pub points: Vec<[f64; 3]>,
    /// Index into `points` for each grid node; pole rows share one point.
    pub node_point: Vec<usize>,
    pub triangles: Vec<[usize; 3]>,
}

impl Mesh3D {
    pub fn node(&self, k: usize, kp: usize) -> &SupportFace {
        &self.grid[k * self.phi_steps + kp]
    }

    pub fn theta(&self, k: usize) -> f64 {
        PI * k as f64 / self.theta_steps as f64
    }

    pub fn phi(&self, kp: usize) -> f64 {
        2.0 * PI * kp as f64 / self.phi_steps as f64
    }

    pub fn vertices(&self) -> impl Iterator<Item = &Vec<f64>> {
        self.distinct_faces().flat_map(|f| f.vertices.iter())
    }

    /// Faces with the duplicated pole nodes skipped.
    pub fn distinct_faces(&self) -> impl Iterator<Item = &SupportFace> {
        let last = self.theta_steps;
        self.grid.iter().enumerate().filter_map(move |(i, f)| {
            let (k, kp) = (i / self.phi_steps, i % self.phi_steps);
            ((k != 0 && k != last) || kp == 0).then_some(f)
        })
    }
}

pub fn boundary3d(
    e: &ObservableVec,
    theta_steps: usize,
    phi_steps: usize,
    opts: &FaceOpts,
) -> Result<Mesh3D, RangeError> {
    if e.n() != 3 {
        return Err(RangeError::WrongArity {
            expected: 3,
            actual: e.n(),
        });
    }
    if theta_steps < 4 {
        return Err(RangeError::TooFewSteps {
            what: "theta_steps",
            got: theta_steps,
            min: 4,
        });
    }
    if phi_steps < 8 {
        return Err(RangeError::TooFewSteps {
            what: "phi_steps",
            got: phi_steps,
            min: 8,
        });
    }
    let (kk, kp) = (theta_steps, phi_steps);
    // poles once, interior rows per node
    let mut jobs: Vec<(usize, usize)> = vec![(0, 0)];
    for k in 1..kk {
        for p in 0..kp {
            jobs.push((k, p));
        }
    }
    jobs.push((kk, 0));
    let faces = jobs
        .par_iter()
        .map(|&(k, p)| {
            let theta = PI * k as f64 / kk as f64;
            face(e, Direction::spatial(theta, 2.0 * PI * p as f64 / kp as f64), opts)
        })
        .collect::<Result<Vec<_>, _>>()?;

    let mut grid = Vec::with_capacity((kk + 1) * kp);
    let mut node_point = Vec::with_capacity((kk + 1) * kp);
    let mut points = Vec::with_capacity(faces.len());
    for (i, f) in faces.iter().enumerate() {
        let c = f.centroid();
        points.push([c[0], c[1], c[2]]);
        let (k, _) = jobs[i];
        if k == 0 || k == kk {
            for p in 0..kp {
                let mut g = f.clone();
                g.dir.phi = 2.0 * PI * p as f64 / kp as f64;
                grid.push(g);
                node_point.push(i);
            }
        } else {
            grid.push(f.clone());
            node_point.push(i);
        }
    }
    let mut triangles = Vec::new();
    for k in 0..kk {
        for p in 0..kp {
            let q = (p + 1) % kp;
            let a = node_point[k * kp + p];
            let b = node_point[(k + 1) * kp + p];
            let c = node_point[(k + 1) * kp + q];
            let d = node_point[k * kp + q];
            for t in [[a, b, c], [a, c, d]] {
                if t[0] != t[1] && t[1] != t[2] && t[0] != t[2] {
                    triangles.push(t);
                }
            }
        }
    }
    Ok(Mesh3D {
        theta_steps,
        phi_steps,
        grid,
        points,
        node_point,
        triangles,
    })
}

/// Product of the operators' spectral intervals.
#[derive(Debug, Clone, PartialEq)]
pub struct Hyperrect {
    pub lo: Vec<f64>,
    pub hi: Vec<f64>,
}

impl Hyperrect {
    pub fn n(&self) -> usize {
        self.lo.len()
    }

    pub fn corners(&self) -> Vec<Vec<f64>> {
        let n = self.n();
        (0..1usize << n)
            .map(|mask| {
                (0..n)
                    .map(|i| if mask >> i & 1 == 1 { self.hi[i] } else { self.lo[i] })
                    .collect()
            })
            .collect()
    }

    pub fn diagonal(&self) -> f64 {
        dist(&self.lo, &self.hi)
    }

    pub fn contains(&self, r: &[f64], tol: f64) -> bool {
        r.iter()
            .zip(self.lo.iter().zip(&self.hi))
            .all(|(x, (lo, hi))| *x >= lo - tol && *x <= hi + tol)
    }
}

pub fn hyperrect(e: &ObservableVec) -> Hyperrect {
    Hyperrect {
        lo: e.ops().iter().map(|o| o.eig_min()).collect(),
        hi: e.ops().iter().map(|o| o.eig_max()).collect(),
    }
}

/// Directions of a membership or gap grid: `K'` planar angles, or the
/// `(K+1) × K'` spatial grid with each pole taken once.
pub fn grid_directions(n: usize, theta_steps: usize, phi_steps: usize) -> Vec<Direction> {
    let phi = |p: usize| 2.0 * PI * p as f64 / phi_steps as f64;
    if n == 2 {
        return (0..phi_steps).map(|p| Direction::planar(phi(p))).collect();
    }
    let mut dirs = vec![Direction::spatial(0.0, 0.0)];
    for k in 1..theta_steps {
        for p in 0..phi_steps {
            dirs.push(Direction::spatial(PI * k as f64 / theta_steps as f64, phi(p)));
        }
    }
    dirs.push(Direction::spatial(PI, 0.0));
    dirs
}

/// `min over grid directions of λ_M(η̂) − η̂·r`. Negative values certify that
/// `r` lies outside the range; non-negative values are consistent with
/// membership at the grid resolution.
pub fn membership(e: &ObservableVec, r: &[f64], theta_steps: usize, phi_steps: usize) -> Result<f64, RangeError> {
    if r.len() != e.n() {
        return Err(RangeError::DirectionMismatch {
            expected: e.n(),
            actual: r.len(),
        });
    }
    let dirs = grid_directions(e.n(), theta_steps, phi_steps);
    let margins = dirs
        .par_iter()
        .map(|d| {
            let eta = d.eta();
            let values = eigvals_hermitian(&combine_matrix(&eta, e.ops()))?;
            let proj: f64 = eta.iter().zip(r).map(|(a, b)| a * b).sum();
            Ok(values[values.len() - 1] - proj)
        })
        .collect::<Result<Vec<f64>, RangeError>>()?;
    Ok(margins.into_iter().fold(f64::INFINITY, f64::min))
}

/// Top two eigenvalues of `η̂·E` over a direction grid.
#[derive(Debug, Clone, PartialEq)]
pub struct GapRow {
    pub dir: Direction,
    pub lambda1: f64,
    pub lambda2: f64,
}

pub fn gap_report(e: &ObservableVec, theta_steps: usize, phi_steps: usize) -> Result<Vec<GapRow>, RangeError> {
    grid_directions(e.n(), theta_steps, phi_steps)
        .par_iter()
        .map(|d| top_two(e, *d))
        .collect()
}

pub fn top_two(e: &ObservableVec, dir: Direction) -> Result<GapRow, RangeError> {
    check_dir(e, &dir)?;
    let values = eigvals_hermitian(&combine_matrix(&dir.eta(), e.ops()))?;
    let n = values.len();
    Ok(GapRow {
        dir,
        lambda1: values[n - 1],
        lambda2: if n > 1 { values[n - 2] } else { f64::NAN },
    })
}

/// Vertices of the range of pairwise commuting observables, a polytope spanned
/// by the mean vectors of a common eigenbasis.
pub fn commuting_polytope(e: &ObservableVec) -> Result<Vec<Vec<f64>>, RangeError> {
    let ops = e.ops();
    for a in 0..ops.len() {
        for b in a + 1..ops.len() {
            let norm = ops[a].mat().commutator(ops[b].mat())?.max_abs();
            let scale = (ops[a].mat().max_abs() * ops[b].mat().max_abs()).max(1.0);
            if norm > 1e-10 * scale {
                return Err(RangeError::NotCommuting { norm });
            }
        }
    }
    // generic coefficients separate joint eigenspaces
    const GENERIC: [f64; 3] = [1.0, 0.618_033_988_749_894_9, 0.414_213_562_373_095_1];
    let m = combine_matrix(&GENERIC[..ops.len()], ops);
    let spec = crate::linalg::eig_hermitian(&m)?;
    let mats: Vec<CMatrix> = ops.iter().map(|o| o.mat().clone()).collect();
    let pts: Vec<Vec<f64>> = (0..spec.dim()).map(|k| means(&mats, &spec.vector(k))).collect();
    Ok(match ops.len() {
        2 => {
            let p2: Vec<[f64; 2]> = pts.iter().map(|p| [p[0], p[1]]).collect();
            convex_hull_2d(&p2).into_iter().map(|p| p.to_vec()).collect()
        }
        _ => {
            let p3: Vec<[f64; 3]> = pts.iter().map(|p| [p[0], p[1], p[2]]).collect();
            extreme_points_3d(&p3, 1e-9).into_iter().map(|p| p.to_vec()).collect()
        }
    })
}

/// Range of a block-diagonal direct sum: the hull of the parts' ranges.
pub fn block_union_range(parts: &[ObservableVec], steps: usize, opts: &FaceOpts) -> Result<Boundary2D, RangeError> {
    if parts.is_empty() {
        return Err(RangeError::Empty);
    }
    let mut samples = Vec::new();
    for part in parts {
        samples.extend(boundary2d(part, steps, opts)?.samples);
    }
    let hull = hull_of_faces(&samples);
    Ok(Boundary2D { samples, hull })
}
