//! Spin operator families in the `|m>` basis ordered `m = j, j-1, ..., -j`.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use crate::linalg::{make_hermitian, matmul, CMatrix, Complex, HermObservable, LinalgError};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SpinError {
    #[error("spin quantum number must be positive, got twice-j = {0}")]
    InvalidJ(u32),
    #[error("cannot parse spin quantum number {0:?}; expected an integer or p/2")]
    Parse(String),
    #[error("power {gamma} out of range 1..={max}")]
    GammaOutOfRange { gamma: u32, max: u32 },
    #[error("operation requires kind {expected}, got {actual}")]
    WrongKind { expected: SetKind, actual: SetKind },
    #[error("no closed form available for j = {0}")]
    UnsupportedJ(HalfInt),
    #[error("closed forms exist only for the squared pair")]
    UnsupportedFamily,
    #[error("scale factor must be positive and finite, got {0}")]
    BadScale(f64),
    #[error("operator vector needs 2 or 3 operators of one dimension")]
    BadShape,
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// A non-negative half-integer stored as twice its value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfInt {
    twice: u32,
}

impl HalfInt {
    pub fn from_twice(twice: u32) -> Result<Self, SpinError> {
        if twice == 0 {
            return Err(SpinError::InvalidJ(twice));
        }
        Ok(HalfInt { twice })
    }

    pub fn twice(self) -> u32 {
        self.twice
    }

    pub fn dim(self) -> usize {
        self.twice as usize + 1
    }

    pub fn value(self) -> f64 {
        self.twice as f64 / 2.0
    }

    pub fn is_integer(self) -> bool {
        self.twice % 2 == 0
    }

    /// All values `1/2, 1, ..., twice_max/2`.
    pub fn range_from(twice_min: u32, twice_max: u32) -> Vec<HalfInt> {
        (twice_min.max(1)..=twice_max).map(|twice| HalfInt { twice }).collect()
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

impl FromStr for HalfInt {
    type Err = SpinError;

    fn from_str(s: &str) -> Result<Self, SpinError> {
        let bad = || SpinError::Parse(s.to_string());
        let s = s.trim();
        let twice = match s.split_once('/') {
            Some((num, "2")) => num.trim().parse::<u32>().map_err(|_| bad())?,
            Some((num, "1")) => num
                .trim()
                .parse::<u32>()
                .map_err(|_| bad())?
                .checked_mul(2)
                .ok_or_else(bad)?,
            Some(_) => return Err(bad()),
            None => s.parse::<u32>().map_err(|_| bad())?.checked_mul(2).ok_or_else(bad)?,
        };
        HalfInt::from_twice(twice)
    }
}

/// Which construction produced an [`ObservableVec`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SetKind {
    J,
    JPow,
    JSq2D,
    Ladder,
    Anticomm,
    Custom,
}

impl SetKind {
    pub fn tag(self) -> &'static str {
        match self {
            SetKind::J => "j",
            SetKind::JPow => "jpow",
            SetKind::JSq2D => "jsq2d",
            SetKind::Ladder => "ladder",
            SetKind::Anticomm => "anticomm",
            SetKind::Custom => "custom",
        }
    }
}

impl fmt::Display for SetKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for SetKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Ok(match s {
            "j" => SetKind::J,
            "jpow" => SetKind::JPow,
            "jsq2d" => SetKind::JSq2D,
            "ladder" => SetKind::Ladder,
            "anticomm" => SetKind::Anticomm,
            other => return Err(format!("unknown operator set {other:?}")),
        })
    }
}

/// An ordered tuple of 2 or 3 observables acting on one Hilbert space.
#[derive(Debug, Clone, PartialEq)]
pub struct ObservableVec {
    ops: Vec<HermObservable>,
    j: Option<HalfInt>,
    kind: SetKind,
    gamma: u32,
}

impl ObservableVec {
    /// Wraps arbitrary observables; used for hand-built operator sets.
    pub fn custom(ops: Vec<HermObservable>) -> Result<Self, SpinError> {
        if !(2..=3).contains(&ops.len()) || ops.iter().any(|o| o.dim() != ops[0].dim()) {
            return Err(SpinError::BadShape);
        }
        Ok(ObservableVec {
            ops,
            j: None,
            kind: SetKind::Custom,
            gamma: 1,
        })
    }

    pub fn ops(&self) -> &[HermObservable] {
        &self.ops
    }

    pub fn n(&self) -> usize {
        self.ops.len()
    }

    pub fn dim(&self) -> usize {
        self.ops[0].dim()
    }

    pub fn j(&self) -> Option<HalfInt> {
        self.j
    }

    pub fn kind(&self) -> SetKind {
        self.kind
    }

    pub fn gamma(&self) -> u32 {
        self.gamma
    }
}

/// Angular momentum components and ladder operators for one `j`.
#[derive(Debug, Clone)]
pub struct AngularMomentum {
    pub jx: HermObservable,
    pub jy: HermObservable,
    pub jz: HermObservable,
    pub jplus: CMatrix,
    pub jminus: CMatrix,
}

const I: Complex = Complex::new(0.0, 1.0);

/// `J_+^gamma`: the only non-zero entries sit on the gamma-th superdiagonal.
fn raising_power(j: HalfInt, gamma: u32) -> CMatrix {
    let d = j.dim();
    let tw = j.twice as u64;
    let g = gamma as usize;
    let mut m = CMatrix::zeros(d);
    for c in g..d {
        // column c is |m = j - c>; each step multiplies by (j - m)(j + m + 1)
        let mut prod = 1.0f64;
        for t in 0..g {
            let col = (c - t) as u64;
            prod *= (col * (tw - col + 1)) as f64;
        }
        m[(c - g, c)] = Complex::new(prod.sqrt(), 0.0);
    }
    m
}

pub fn angular_momentum(j: HalfInt) -> AngularMomentum {
    let d = j.dim();
    let jplus = raising_power(j, 1);
    let jminus = jplus.adjoint();
    let jx = CMatrix::from_fn(d, |r, c| (jplus[(r, c)] + jminus[(r, c)]) * 0.5);
    let jy = CMatrix::from_fn(d, |r, c| (jplus[(r, c)] - jminus[(r, c)]) * (-0.5 * I));
    let jz = CMatrix::from_real_diag(
        &(0..d)
            .map(|r| (j.twice as f64 - 2.0 * r as f64) / 2.0)
            .collect::<Vec<_>>(),
    );
    AngularMomentum {
        jx: make_hermitian(jx, "Jx").expect("Jx is Hermitian"),
        jy: make_hermitian(jy, "Jy").expect("Jy is Hermitian"),
        jz: make_hermitian(jz, "Jz").expect("Jz is Hermitian"),
        jplus,
        jminus,
    }
}

/// The triple `(Jx, Jy, Jz)`.
pub fn j_triple(j: HalfInt) -> ObservableVec {
    let am = angular_momentum(j);
    ObservableVec {
        ops: vec![am.jx, am.jy, am.jz],
        j: Some(j),
        kind: SetKind::J,
        gamma: 1,
    }
}

/// `(X_γ, Y_γ) = (J₊^γ + J₋^γ, i(J₊^γ − J₋^γ))`.
pub fn ladder_combo(j: HalfInt, gamma: u32) -> Result<ObservableVec, SpinError> {
    let max = j.dim() as u32;
    if gamma == 0 || gamma > max {
        return Err(SpinError::GammaOutOfRange { gamma, max });
    }
    let p = if gamma < max {
        raising_power(j, gamma)
    } else {
        CMatrix::zeros(j.dim())
    };
    let q = p.adjoint();
    let x = p.add(&q)?;
    let y = p.sub(&q)?.scale(I);
    Ok(ObservableVec {
        ops: vec![
            make_hermitian(x, &format!("X{gamma}"))?,
            make_hermitian(y, &format!("Y{gamma}"))?,
        ],
        j: Some(j),
        kind: SetKind::Ladder,
        gamma,
    })
}

fn matrix_power(a: &CMatrix, gamma: u32) -> CMatrix {
    let mut out = a.clone();
    for _ in 1..gamma {
        out = matmul(&out, a).expect("same dimension");
    }
    out
}

fn sup(gamma: u32) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    if gamma == 1 {
        return String::new();
    }
    gamma
        .to_string()
        .chars()
        .map(|c| DIGITS[c.to_digit(10).unwrap() as usize])
        .collect()
}

fn component_powers(j: HalfInt, gamma: u32) -> [CMatrix; 3] {
    let am = angular_momentum(j);
    let jz: Vec<f64> = (0..j.dim())
        .map(|r| ((j.twice as f64 - 2.0 * r as f64) / 2.0).powi(gamma as i32))
        .collect();
    [
        matrix_power(am.jx.mat(), gamma),
        matrix_power(am.jy.mat(), gamma),
        CMatrix::from_real_diag(&jz),
    ]
}

/// `(Jx^γ, Jy^γ, Jz^γ)`.
pub fn power_vec(j: HalfInt, gamma: u32) -> Result<ObservableVec, SpinError> {
    if gamma == 0 {
        return Err(SpinError::GammaOutOfRange { gamma, max: u32::MAX });
    }
    let s = sup(gamma);
    let [x, y, z] = component_powers(j, gamma);
    Ok(ObservableVec {
        ops: vec![
            make_hermitian(x, &format!("Jx{s}"))?,
            make_hermitian(y, &format!("Jy{s}"))?,
            make_hermitian(z, &format!("Jz{s}"))?,
        ],
        j: Some(j),
        kind: if gamma == 1 { SetKind::J } else { SetKind::JPow },
        gamma,
    })
}

/// `(Jx², Jy²)`.
pub fn jsq_pair(j: HalfInt) -> ObservableVec {
    let am = angular_momentum(j);
    let x = matmul(am.jx.mat(), am.jx.mat()).expect("same dimension");
    let y = matmul(am.jy.mat(), am.jy.mat()).expect("same dimension");
    ObservableVec {
        ops: vec![
            make_hermitian(x, "Jx²").expect("square of Hermitian"),
            make_hermitian(y, "Jy²").expect("square of Hermitian"),
        ],
        j: Some(j),
        kind: SetKind::JSq2D,
        gamma: 2,
    }
}

fn anticommutator(a: &CMatrix, b: &CMatrix) -> CMatrix {
    matmul(a, b).unwrap().add(&matmul(b, a).unwrap()).unwrap()
}

/// `(A₁, A₂, A₃) = ({Jx^γ, Jz^γ}, {Jy^γ, Jz^γ}, {Jx^γ, Jy^γ})`.
pub fn anticomm_vec(j: HalfInt, gamma: u32) -> Result<ObservableVec, SpinError> {
    if gamma == 0 {
        return Err(SpinError::GammaOutOfRange { gamma, max: u32::MAX });
    }
    let [x, y, z] = component_powers(j, gamma);
    Ok(ObservableVec {
        ops: vec![
            make_hermitian(anticommutator(&x, &z), &format!("A1,{gamma}"))?,
            make_hermitian(anticommutator(&y, &z), &format!("A2,{gamma}"))?,
            make_hermitian(anticommutator(&x, &y), &format!("A3,{gamma}"))?,
        ],
        j: Some(j),
        kind: SetKind::Anticomm,
        gamma,
    })
}

/// Builds the operator set selected by `kind`.
pub fn build_set(kind: SetKind, j: HalfInt, gamma: u32) -> Result<ObservableVec, SpinError> {
    match kind {
        SetKind::J => Ok(j_triple(j)),
        SetKind::JPow => power_vec(j, gamma),
        SetKind::JSq2D => Ok(jsq_pair(j)),
        SetKind::Ladder => ladder_combo(j, gamma),
        SetKind::Anticomm => anticomm_vec(j, gamma),
        SetKind::Custom => Err(SpinError::BadShape),
    }
}

/// A unit vector in the `|m>` basis.
#[derive(Debug, Clone, PartialEq)]
pub struct Ket {
    pub amplitudes: Vec<Complex>,
}

fn binomial(n: u32, k: u32) -> f64 {
    let k = k.min(n - k);
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// Spin coherent state pointing along `(θ, φ)`.
pub fn coherent_ket(j: HalfInt, theta: f64, phi: f64) -> Ket {
    let tw = j.twice;
    let (c, s) = ((theta / 2.0).cos(), (theta / 2.0).sin());
    let mut amplitudes: Vec<Complex> = (0..=tw)
        .map(|r| {
            // r indexes m = j - r, so j + m = tw - r and j - m = r
            let up = tw - r;
            let mag = binomial(tw, up).sqrt() * c.powi(up as i32) * s.powi(r as i32);
            let m = (tw as f64 - 2.0 * r as f64) / 2.0;
            Complex::from_polar(mag, -m * phi)
        })
        .collect();
    let norm = crate::linalg::vec_norm(&amplitudes);
    for a in amplitudes.iter_mut() {
        *a /= norm;
    }
    Ket { amplitudes }
}

/// Rows of the orthogonal matrix taking `(Jx, Jy, Jz)` to the frame whose third
/// axis is `η̂(θ, φ)`.
pub fn frame_matrix(theta: f64, phi: f64) -> [[f64; 3]; 3] {
    let (st, ct) = theta.sin_cos();
    let (sp, cp) = phi.sin_cos();
    [[ct * cp, ct * sp, -st], [-sp, cp, 0.0], [st * cp, st * sp, ct]]
}

pub fn rotate_frame(e: &ObservableVec, theta: f64, phi: f64) -> Result<ObservableVec, SpinError> {
    if e.kind != SetKind::J {
        return Err(SpinError::WrongKind {
            expected: SetKind::J,
            actual: e.kind,
        });
    }
    let r = frame_matrix(theta, phi);
    let labels = ["J'x", "J'y", "J'z"];
    let ops = r
        .iter()
        .zip(labels)
        .map(|(row, label)| {
            let terms: Vec<(f64, &HermObservable)> = row.iter().copied().zip(e.ops.iter()).collect();
            let mut op = crate::linalg::combine(&terms)?;
            op = op.scaled(1.0, label.to_string());
            Ok(op)
        })
        .collect::<Result<Vec<_>, SpinError>>()?;
    Ok(ObservableVec {
        ops,
        j: e.j,
        kind: SetKind::J,
        gamma: 1,
    })
}

pub fn scale_uniform(e: &ObservableVec, s: f64) -> Result<ObservableVec, SpinError> {
    if !(s > 0.0 && s.is_finite()) {
        return Err(SpinError::BadScale(s));
    }
    let ops = e
        .ops
        .iter()
        .map(|op| {
            op.scaled(
                s,
                if s == 1.0 {
                    op.label().to_string()
                } else {
                    format!("{s}*{}", op.label())
                },
            )
        })
        .collect();
    Ok(ObservableVec { ops, ..e.clone() })
}

/// Largest eigenvalue of `cosφ·Jx² + sinφ·Jy²` from its closed form, with
/// `f, g = cosφ ± sinφ`.
pub fn analytic_lambda_oracle(family: SetKind, j: HalfInt, phi: f64) -> Result<f64, SpinError> {
    if family != SetKind::JSq2D {
        return Err(SpinError::UnsupportedFamily);
    }
    let (s, c) = phi.sin_cos();
    let (f, g) = (c + s, c - s);
    let q2 = f * f + 3.0 * g * g;
    let trig = |shift: f64, p: f64, q: f64| {
        let arg = (-q / 2.0 * (27.0 / (p * p * p)).sqrt()).clamp(-1.0, 1.0);
        shift + 2.0 * (p / 3.0).sqrt() * (arg.acos() / 3.0).cos()
    };
    let value = match j.twice {
        2 => c.max(s).max(c + s),
        3 => (5.0 * f + 2.0 * q2.sqrt()) / 4.0,
        4 => 2.0 * f + q2.sqrt(),
        5 => {
            let p = 112.0 / 3.0 * q2;
            let q = 1280.0 / 27.0 * (f * f * f - 9.0 * f * g * g);
            trig(35.0 * f / 3.0, p, q) / 4.0
        }
        6 => {
            let phi = phi.rem_euclid(2.0 * PI);
            if phi <= PI / 2.0 {
                5.0 * f + (f * f + 15.0 * g * g).sqrt()
            } else if phi <= 5.0 * PI / 4.0 {
                (7.0 * f - 3.0 * g + 8f64.sqrt() * (2.0 * f * f - 3.0 * f * g + 3.0 * g * g).sqrt()) / 2.0
            } else {
                (7.0 * f + 3.0 * g + 8f64.sqrt() * (2.0 * f * f + 3.0 * f * g + 3.0 * g * g).sqrt()) / 2.0
            }
        }
        7 => {
            let p = 168.0 * q2;
            let q = 512.0 * (f * f * f - 9.0 * f * g * g);
            let u0 = 48384.0 * q2 * q2;
            let u1 =
                5971968.0 * (3.0 * f.powi(6) - 5.0 * f.powi(4) * g * g + 145.0 * f * f * g.powi(4) + 49.0 * g.powi(6));
            let arg = (u1 / (2.0 * (u0 * u0 * u0).sqrt())).clamp(-1.0, 1.0);
            let s = ((p + u0.sqrt() * (arg.acos() / 3.0).cos()) / 6.0).sqrt();
            let inner = (-4.0 * s * s + 2.0 * p - q / s).max(0.0);
            (21.0 * f + s + 0.5 * inner.sqrt()) / 4.0
        }
        8 => {
            let p = 208.0 / 3.0 * q2;
            let q = 4480.0 / 27.0 * (f * f * f - 9.0 * f * g * g);
            trig(40.0 * f / 3.0, p, q) / 2.0
        }
        _ => return Err(SpinError::UnsupportedJ(j)),
    };
    Ok(value)
}
