//! Large-spin limit surfaces over the Bloch sphere, the regions they bound,
//! and finite-spin series converging towards them.

use std::f64::consts::PI;
use std::sync::OnceLock;

use rayon::prelude::*;

use crate::linalg::{combine_matrix, eigvals_hermitian};
use crate::numrange::{face, Direction, FaceOpts, RangeError};
use crate::spin::{anticomm_vec, power_vec, HalfInt, SetKind, SpinError};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum LimitError {
    #[error("family {0} has no limit surface (expected jpow or anticomm)")]
    UnsupportedFamily(SetKind),
    #[error("gamma must be at least 1")]
    ZeroGamma,
    #[error("grid too coarse: need at least 2 mu steps and 3 nu steps")]
    GridTooSmall,
    #[error(transparent)]
    Spin(#[from] SpinError),
    #[error(transparent)]
    Range(#[from] RangeError),
}

/// The four tetrahedral unit vectors, `η̂₁ = (1,1,1)/√3` first.
pub const TETRA_SIGNS: [[f64; 3]; 4] = [[1.0, 1.0, 1.0], [-1.0, 1.0, -1.0], [-1.0, -1.0, 1.0], [1.0, -1.0, -1.0]];

/// Polar angle of `η̂₁`.
pub fn theta1() -> f64 {
    (1.0 / 3f64.sqrt()).acos()
}

/// Spherical angles of `η̂_l` for `l = 1..=4`.
pub fn tetra_direction(l: usize) -> Direction {
    let t1 = theta1();
    match l {
        1 => Direction::spatial(t1, PI / 4.0),
        2 => Direction::spatial(PI - t1, 3.0 * PI / 4.0),
        3 => Direction::spatial(t1, 5.0 * PI / 4.0),
        4 => Direction::spatial(PI - t1, 7.0 * PI / 4.0),
        _ => panic!("tetrahedral directions are numbered 1 to 4"),
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlochPoint {
    pub mu: f64,
    pub nu: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl BlochPoint {
    pub fn new(mu: f64, nu: f64) -> Self {
        let (sm, cm) = mu.sin_cos();
        let (sn, cn) = nu.sin_cos();
        BlochPoint {
            mu,
            nu,
            x: sm * cn,
            y: sm * sn,
            z: cm,
        }
    }
}

/// `μ_k = kπ/(M−1)` for `k = 0..M` (both poles included) by `ν_k' = 2πk'/N'`.
pub fn bloch_grid(mu_steps: usize, nu_steps: usize) -> Result<Vec<BlochPoint>, LimitError> {
    if mu_steps < 2 || nu_steps < 3 {
        return Err(LimitError::GridTooSmall);
    }
    let mut out = Vec::with_capacity(mu_steps * nu_steps);
    for k in 0..mu_steps {
        let mu = PI * k as f64 / (mu_steps - 1) as f64;
        for kp in 0..nu_steps {
            out.push(BlochPoint::new(mu, 2.0 * PI * kp as f64 / nu_steps as f64));
        }
    }
    Ok(out)
}

/// `sign(s)·|s|^(1/γ)`.
pub fn signed_root(s: f64, gamma: u32) -> f64 {
    s.signum() * s.abs().powf(1.0 / gamma as f64)
}

#[derive(Debug, Clone, PartialEq)]
pub struct LimitSurface {
    pub family: SetKind,
    pub gamma: u32,
    pub mu_steps: usize,
    pub nu_steps: usize,
    /// Row-major over the Bloch grid.
    pub grid: Vec<BlochPoint>,
    pub points: Vec<[f64; 3]>,
}

impl LimitSurface {
    /// Largest pointwise deviation from the surface identity.
    pub fn max_residual(&self) -> f64 {
        self.points
            .iter()
            .map(|p| surface_residual(self.family, self.gamma, p).abs())
            .fold(0.0, f64::max)
    }
}

pub fn surface_jpow(gamma: u32, mu_steps: usize, nu_steps: usize) -> Result<LimitSurface, LimitError> {
    if gamma == 0 {
        return Err(LimitError::ZeroGamma);
    }
    let grid = bloch_grid(mu_steps, nu_steps)?;
    let g = gamma as i32;
    let points = grid.iter().map(|b| [b.x.powi(g), b.y.powi(g), b.z.powi(g)]).collect();
    Ok(LimitSurface {
        family: SetKind::JPow,
        gamma,
        mu_steps,
        nu_steps,
        grid,
        points,
    })
}

/// Points `((2xz)^γ, (2yz)^γ, (2xy)^γ)`, the anticommutator means divided by
/// their largest eigenvalue in the large-spin limit.
pub fn surface_anticomm(gamma: u32, mu_steps: usize, nu_steps: usize) -> Result<LimitSurface, LimitError> {
    if gamma == 0 {
        return Err(LimitError::ZeroGamma);
    }
    let grid = bloch_grid(mu_steps, nu_steps)?;
    let g = gamma as i32;
    let points = grid
        .iter()
        .map(|b| {
            [
                (2.0 * b.x * b.z).powi(g),
                (2.0 * b.y * b.z).powi(g),
                (2.0 * b.x * b.y).powi(g),
            ]
        })
        .collect();
    Ok(LimitSurface {
        family: SetKind::Anticomm,
        gamma,
        mu_steps,
        nu_steps,
        grid,
        points,
    })
}

pub fn surface(family: SetKind, gamma: u32, mu_steps: usize, nu_steps: usize) -> Result<LimitSurface, LimitError> {
    match family {
        SetKind::J | SetKind::JPow => surface_jpow(gamma, mu_steps, nu_steps),
        SetKind::Anticomm => surface_anticomm(gamma, mu_steps, nu_steps),
        other => Err(LimitError::UnsupportedFamily(other)),
    }
}

/// Left minus right side of the implicit surface equation, with real signed
/// roots for fractional powers.
pub fn surface_residual(family: SetKind, gamma: u32, p: &[f64; 3]) -> f64 {
    let r: Vec<f64> = p.iter().map(|&v| signed_root(v, gamma)).collect();
    match family {
        SetKind::Anticomm => {
            let (a, b, c) = (r[0], r[1], r[2]);
            (a * b).powi(2) + (b * c).powi(2) + (c * a).powi(2) - 2.0 * a * b * c
        }
        _ => r.iter().map(|v| v * v).sum::<f64>() - 1.0,
    }
}

/// The j = 1 anticommutator identity: the same quartic with the cubic term's sign flipped.
pub fn roman_j1_residual(a: &[f64; 3]) -> f64 {
    let (x, y, z) = (a[0], a[1], a[2]);
    (x * y).powi(2) + (y * z).powi(2) + (z * x).powi(2) + 2.0 * x * y * z
}

pub fn octahedron_vertices() -> [[f64; 3]; 6] {
    [
        [1.0, 0.0, 0.0],
        [-1.0, 0.0, 0.0],
        [0.0, 1.0, 0.0],
        [0.0, -1.0, 0.0],
        [0.0, 0.0, 1.0],
        [0.0, 0.0, -1.0],
    ]
}

pub fn tetrahedron_vertices() -> [[f64; 3]; 4] {
    [[0.0, 0.0, 0.0], [1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]]
}

const REGION_TOL: f64 = 1e-12;

/// Bloch grid used for the sampled-hull branches of [`limit_region_contains`].
pub const SAMPLED_HULL_GRID: (usize, usize) = (90, 180);
const SUPPORT_GRID: (usize, usize) = (60, 120);

struct SampledHull {
    dirs: Vec<[f64; 3]>,
    support: Vec<f64>,
}

fn sampled_hull(gamma: u32) -> &'static SampledHull {
    static CACHE: [OnceLock<SampledHull>; 2] = [OnceLock::new(), OnceLock::new()];
    CACHE[(gamma - 1) as usize].get_or_init(|| {
        let pts = surface_anticomm(gamma, SAMPLED_HULL_GRID.0, SAMPLED_HULL_GRID.1)
            .expect("static grid")
            .points;
        let dirs: Vec<[f64; 3]> = bloch_grid(SUPPORT_GRID.0, SUPPORT_GRID.1)
            .expect("static grid")
            .iter()
            .map(|b| [b.x, b.y, b.z])
            .collect();
        let support = dirs
            .par_iter()
            .map(|d| {
                pts.iter()
                    .map(|p| d[0] * p[0] + d[1] * p[1] + d[2] * p[2])
                    .fold(f64::NEG_INFINITY, f64::max)
            })
            .collect();
        SampledHull { dirs, support }
    })
}

/// Membership in the large-spin limit region of the scaled family.
///
/// The polyhedral and power-sum branches are exact. For anticommutators with
/// `γ ≤ 2` the region is approximated by the hull of the surface sampled on
/// [`SAMPLED_HULL_GRID`], tested against its support function in a fixed set
/// of directions, so points within about `1e-3` of the boundary may be
/// misclassified.
pub fn limit_region_contains(family: SetKind, gamma: u32, p: &[f64; 3]) -> Result<bool, LimitError> {
    if gamma == 0 {
        return Err(LimitError::ZeroGamma);
    }
    let l1 = p.iter().map(|v| v.abs()).sum::<f64>();
    let sum = p.iter().sum::<f64>();
    let nonneg = p.iter().all(|&v| v >= -REGION_TOL);
    Ok(match family {
        SetKind::J | SetKind::JPow => {
            if gamma == 1 {
                p.iter().map(|v| v * v).sum::<f64>() <= 1.0 + REGION_TOL
            } else if gamma % 2 == 1 {
                l1 <= 1.0 + REGION_TOL
            } else {
                let root_sum: f64 = p.iter().map(|v| v.max(0.0).powf(2.0 / gamma as f64)).sum();
                nonneg
                    && p.iter().all(|&v| v <= 1.0 + REGION_TOL)
                    && sum <= 1.0 + REGION_TOL
                    && root_sum >= 1.0 - REGION_TOL
            }
        }
        SetKind::Anticomm => {
            if gamma >= 3 && gamma % 2 == 1 {
                l1 <= 1.0 + REGION_TOL
            } else if gamma >= 4 {
                nonneg && sum <= 1.0 + REGION_TOL
            } else {
                let hull = sampled_hull(gamma);
                hull.dirs
                    .iter()
                    .zip(&hull.support)
                    .all(|(d, h)| d[0] * p[0] + d[1] * p[1] + d[2] * p[2] <= h + 1e-9)
            }
        }
        other => return Err(LimitError::UnsupportedFamily(other)),
    })
}

/// Exponent of the tetrahedral power-sum regions; `Infinite` is the octahedron.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Vartheta {
    Finite(u32),
    Infinite,
}

/// `Σ_l (√3 η̂_l·r)^(2ϑ)` for finite ϑ, `max_l |√3 η̂_l·r|` for ϑ = ∞.
pub fn g_region_value(vartheta: Vartheta, r: &[f64; 3]) -> f64 {
    let proj = TETRA_SIGNS.map(|s| s[0] * r[0] + s[1] * r[1] + s[2] * r[2]);
    match vartheta {
        Vartheta::Finite(t) => proj.iter().map(|v| v.powi(2 * t as i32)).sum(),
        Vartheta::Infinite => proj.iter().map(|v| v.abs()).fold(0.0, f64::max),
    }
}

pub fn g_region_contains(vartheta: Vartheta, r: &[f64; 3]) -> bool {
    let v = g_region_value(vartheta, r);
    match vartheta {
        Vartheta::Finite(_) => v <= 4.0 * (1.0 + REGION_TOL),
        Vartheta::Infinite => v <= 1.0 + REGION_TOL,
    }
}

/// Finite-spin quantities whose large-spin limits are known.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Quantity {
    /// Largest eigenvalue of the first operator over the family's scale.
    Am,
    /// Smallest eigenvalue of the first operator over the family's scale.
    AmMin,
    /// Top eigenvalue of `η̂₁·E` over the family's scale.
    LmaxEta1,
    /// Second eigenvalue of `η̂₁·E` over the family's scale.
    L2Eta1,
    /// Bottom eigenvalue of `η̂₁·E` over the family's scale.
    LminEta1,
    /// First coordinate of the `η̂₁` face centroid over the first operator's largest eigenvalue.
    MeanEta1,
}

impl Quantity {
    pub fn tag(self) -> &'static str {
        match self {
            Quantity::Am => "am",
            Quantity::AmMin => "am_min",
            Quantity::LmaxEta1 => "lmax_eta1",
            Quantity::L2Eta1 => "l2_eta1",
            Quantity::LminEta1 => "lmin_eta1",
            Quantity::MeanEta1 => "mean_eta1",
        }
    }
}

impl std::str::FromStr for Quantity {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "am" => Quantity::Am,
            "am_min" | "ammin" => Quantity::AmMin,
            "lmax_eta1" => Quantity::LmaxEta1,
            "l2_eta1" => Quantity::L2Eta1,
            "lmin_eta1" => Quantity::LminEta1,
            "mean_eta1" => Quantity::MeanEta1,
            _ => return Err(format!("unknown quantity `{s}`")),
        })
    }
}

/// `j^γ` for powers, `j^(2γ)` for anticommutators.
pub fn family_scale(family: SetKind, j: HalfInt, gamma: u32) -> Result<f64, LimitError> {
    let p = match family {
        SetKind::J | SetKind::JPow => gamma,
        SetKind::Anticomm => 2 * gamma,
        other => return Err(LimitError::UnsupportedFamily(other)),
    };
    Ok(j.value().powi(p as i32))
}

/// Value of `quantity` at one spin.
pub fn quantity_at(family: SetKind, gamma: u32, j: HalfInt, quantity: Quantity) -> Result<f64, LimitError> {
    let e = match family {
        SetKind::J | SetKind::JPow => power_vec(j, gamma)?,
        SetKind::Anticomm => anticomm_vec(j, gamma)?,
        other => return Err(LimitError::UnsupportedFamily(other)),
    };
    let scale = family_scale(family, j, gamma)?;
    let eta1 = || tetra_direction(1);
    Ok(match quantity {
        Quantity::Am => e.ops()[0].eig_max() / scale,
        Quantity::AmMin => e.ops()[0].eig_min() / scale,
        Quantity::LmaxEta1 | Quantity::L2Eta1 | Quantity::LminEta1 => {
            let vals = eigvals_hermitian(&combine_matrix(&eta1().eta(), e.ops())).map_err(RangeError::from)?;
            let d = vals.len();
            let v = match quantity {
                Quantity::LmaxEta1 => vals[d - 1],
                Quantity::L2Eta1 => vals[d.saturating_sub(2)],
                _ => vals[0],
            };
            v / scale
        }
        Quantity::MeanEta1 => {
            let f = face(&e, eta1(), &FaceOpts::default())?;
            f.centroid()[0] / e.ops()[0].eig_max()
        }
    })
}

/// `(j, value)` for each spin in `j_list`, in input order.
pub fn convergence_sweep(
    family: SetKind,
    gamma: u32,
    j_list: &[HalfInt],
    quantity: Quantity,
) -> Result<Vec<(HalfInt, f64)>, LimitError> {
    j_list
        .par_iter()
        .map(|&j| quantity_at(family, gamma, j, quantity).map(|v| (j, v)))
        .collect()
}
