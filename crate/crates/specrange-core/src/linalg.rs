//! Dense complex matrices and a Hermitian eigensolver.
//!
//! The eigensolver reduces the input to a real symmetric tridiagonal matrix
//! with Householder reflectors and a diagonal phase similarity, then runs
//! implicit QL iteration with Wilkinson shifts. Eigenvectors are recovered by
//! applying the stored reflectors to the tridiagonal eigenvectors.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_complex::Complex64;

pub type Complex = Complex64;

/// Relative Hermiticity tolerance, measured against the largest entry.
pub const HERMITIAN_TOL: f64 = 1e-12;
/// Tolerance on the 2-norm of a state vector.
pub const NORM_TOL: f64 = 1e-12;
/// Residual contract of the eigensolver, relative to the Frobenius norm.
pub const RESIDUAL_TOL: f64 = 1e-10;

const ZERO: Complex = Complex::new(0.0, 0.0);
const ONE: Complex = Complex::new(1.0, 0.0);

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum LinalgError {
    #[error("matrix is not Hermitian: asymmetry {asymmetry:e} exceeds {tolerance:e}")]
    NonHermitian { asymmetry: f64, tolerance: f64 },
    #[error("non-finite entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },
    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },
    #[error("eigensolver did not converge within {iterations} QL iterations")]
    NoConvergence { iterations: usize },
    #[error("state vector is not normalized (norm {norm})")]
    NotNormalized { norm: f64 },
    #[error("matrix must have positive dimension")]
    Empty,
}

/// Square complex matrix stored row-major.
#[derive(Clone, PartialEq)]
pub struct CMatrix {
    dim: usize,
    data: Vec<Complex>,
}

impl fmt::Debug for CMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "CMatrix({}x{})", self.dim, self.dim)?;
        for r in 0..self.dim {
            let row: Vec<String> = self
                .row(r)
                .iter()
                .map(|z| format!("{:.6}{:+.6}i", z.re, z.im))
                .collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl CMatrix {
    pub fn zeros(dim: usize) -> Self {
        CMatrix {
            dim,
            data: vec![ZERO; dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = ONE;
        }
        m
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Complex) -> Self {
        let mut data = Vec::with_capacity(dim * dim);
        for r in 0..dim {
            for c in 0..dim {
                data.push(f(r, c));
            }
        }
        CMatrix { dim, data }
    }

    /// Builds a matrix from row-major entries; the length must be a perfect square.
    pub fn from_row_major(data: Vec<Complex>) -> Result<Self, LinalgError> {
        let dim = (data.len() as f64).sqrt().round() as usize;
        if dim == 0 {
            return Err(LinalgError::Empty);
        }
        if dim * dim != data.len() {
            return Err(LinalgError::DimensionMismatch {
                expected: dim * dim,
                actual: data.len(),
            });
        }
        Ok(CMatrix { dim, data })
    }

    pub fn from_real_diag(diag: &[f64]) -> Self {
        let mut m = Self::zeros(diag.len());
        for (i, &v) in diag.iter().enumerate() {
            m[(i, i)] = Complex::new(v, 0.0);
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn as_slice(&self) -> &[Complex] {
        &self.data
    }

    pub fn row(&self, r: usize) -> &[Complex] {
        &self.data[r * self.dim..(r + 1) * self.dim]
    }

    pub fn column(&self, c: usize) -> Vec<Complex> {
        (0..self.dim).map(|r| self[(r, c)]).collect()
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.dim, |r, c| self[(c, r)].conj())
    }

    pub fn scale(&self, s: Complex) -> Self {
        CMatrix {
            dim: self.dim,
            data: self.data.iter().map(|z| z * s).collect(),
        }
    }

    pub fn scale_real(&self, s: f64) -> Self {
        CMatrix {
            dim: self.dim,
            data: self.data.iter().map(|z| z * s).collect(),
        }
    }

    pub fn add(&self, other: &CMatrix) -> Result<Self, LinalgError> {
        self.check_same(other)?;
        Ok(CMatrix {
            dim: self.dim,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &CMatrix) -> Result<Self, LinalgError> {
        self.check_same(other)?;
        Ok(CMatrix {
            dim: self.dim,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        })
    }

    /// `self += s * other`, dimensions assumed equal.
    pub(crate) fn axpy(&mut self, s: f64, other: &CMatrix) {
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            *a += b * s;
        }
    }

    pub fn mul_vec(&self, v: &[Complex]) -> Result<Vec<Complex>, LinalgError> {
        if v.len() != self.dim {
            return Err(LinalgError::DimensionMismatch {
                expected: self.dim,
                actual: v.len(),
            });
        }
        Ok((0..self.dim)
            .map(|r| self.row(r).iter().zip(v).map(|(a, x)| a * x).sum())
            .collect())
    }

    pub fn trace(&self) -> Complex {
        (0..self.dim).map(|i| self[(i, i)]).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Largest entrywise deviation from Hermitian symmetry.
    pub fn hermitian_defect(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for r in 0..self.dim {
            for c in r..self.dim {
                worst = worst.max((self[(r, c)] - self[(c, r)].conj()).norm());
            }
        }
        worst
    }

    pub fn commutator(&self, other: &CMatrix) -> Result<Self, LinalgError> {
        matmul(self, other)?.sub(&matmul(other, self)?)
    }

    fn check_same(&self, other: &CMatrix) -> Result<(), LinalgError> {
        if self.dim != other.dim {
            return Err(LinalgError::DimensionMismatch {
                expected: self.dim,
                actual: other.dim,
            });
        }
        Ok(())
    }

    fn check_finite(&self) -> Result<(), LinalgError> {
        match self.data.iter().position(|z| !z.re.is_finite() || !z.im.is_finite()) {
            Some(i) => Err(LinalgError::NonFinite {
                row: i / self.dim,
                col: i % self.dim,
            }),
            None => Ok(()),
        }
    }

    fn check_hermitian(&self) -> Result<(), LinalgError> {
        let tolerance = HERMITIAN_TOL * self.max_abs();
        let asymmetry = self.hermitian_defect();
        if asymmetry > tolerance {
            return Err(LinalgError::NonHermitian { asymmetry, tolerance });
        }
        Ok(())
    }

    fn hermitian_part(&self) -> Self {
        Self::from_fn(self.dim, |r, c| (self[(r, c)] + self[(c, r)].conj()) * 0.5)
    }
}

impl Index<(usize, usize)> for CMatrix {
    type Output = Complex;
    fn index(&self, (r, c): (usize, usize)) -> &Complex {
        &self.data[r * self.dim + c]
    }
}

impl IndexMut<(usize, usize)> for CMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Complex {
        &mut self.data[r * self.dim + c]
    }
}

pub fn matmul(a: &CMatrix, b: &CMatrix) -> Result<CMatrix, LinalgError> {
    a.check_same(b)?;
    let n = a.dim;
    let mut out = CMatrix::zeros(n);
    for r in 0..n {
        let out_row = &mut out.data[r * n..(r + 1) * n];
        for k in 0..n {
            let s = a.data[r * n + k];
            if s == ZERO {
                continue;
            }
            for (o, x) in out_row.iter_mut().zip(&b.data[k * n..(k + 1) * n]) {
                *o += s * x;
            }
        }
    }
    Ok(out)
}

/// A Hermitian operator together with its extreme eigenvalues.
#[derive(Debug, Clone, PartialEq)]
pub struct HermObservable {
    mat: CMatrix,
    label: String,
    eig_min: f64,
    eig_max: f64,
}

impl HermObservable {
    pub fn mat(&self) -> &CMatrix {
        &self.mat
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn dim(&self) -> usize {
        self.mat.dim
    }

    pub fn eig_min(&self) -> f64 {
        self.eig_min
    }

    pub fn eig_max(&self) -> f64 {
        self.eig_max
    }

    pub(crate) fn scaled(&self, s: f64, label: String) -> Self {
        let (lo, hi) = if s >= 0.0 {
            (self.eig_min * s, self.eig_max * s)
        } else {
            (self.eig_max * s, self.eig_min * s)
        };
        HermObservable {
            mat: self.mat.scale_real(s),
            label,
            eig_min: lo,
            eig_max: hi,
        }
    }
}

pub fn make_hermitian(entries: CMatrix, label: &str) -> Result<HermObservable, LinalgError> {
    if entries.dim == 0 {
        return Err(LinalgError::Empty);
    }
    entries.check_finite()?;
    entries.check_hermitian()?;
    let mat = entries.hermitian_part();
    let values = eigvals_hermitian(&mat)?;
    Ok(HermObservable {
        eig_min: values[0],
        eig_max: values[values.len() - 1],
        mat,
        label: label.to_string(),
    })
}

/// Real-linear combination of observables sharing one dimension.
pub fn combine(terms: &[(f64, &HermObservable)]) -> Result<HermObservable, LinalgError> {
    let first = terms.first().ok_or(LinalgError::Empty)?;
    let dim = first.1.dim();
    let mut acc = CMatrix::zeros(dim);
    let mut parts = Vec::with_capacity(terms.len());
    for (c, op) in terms {
        if op.dim() != dim {
            return Err(LinalgError::DimensionMismatch {
                expected: dim,
                actual: op.dim(),
            });
        }
        acc.axpy(*c, &op.mat);
        parts.push(format!("{c}*{}", op.label));
    }
    make_hermitian(acc, &parts.join(" + "))
}

pub(crate) fn combine_matrix(coeffs: &[f64], ops: &[HermObservable]) -> CMatrix {
    let mut acc = CMatrix::zeros(ops[0].dim());
    for (c, op) in coeffs.iter().zip(ops) {
        if *c != 0.0 {
            acc.axpy(*c, &op.mat);
        }
    }
    acc
}

pub fn vec_norm(v: &[Complex]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

pub fn inner(a: &[Complex], b: &[Complex]) -> Complex {
    a.iter().zip(b).map(|(x, y)| x.conj() * y).sum()
}

/// `<psi|A|psi>` for a unit vector `psi`.
pub fn expectation(a: &HermObservable, psi: &[Complex]) -> Result<f64, LinalgError> {
    let norm = vec_norm(psi);
    if (norm - 1.0).abs() > NORM_TOL {
        return Err(LinalgError::NotNormalized { norm });
    }
    Ok(quadratic_form(&a.mat, psi)?)
}

pub(crate) fn quadratic_form(a: &CMatrix, psi: &[Complex]) -> Result<f64, LinalgError> {
    let av = a.mul_vec(psi)?;
    Ok(inner(psi, &av).re)
}

/// Unevaluated sum `hi + lo` carrying about 32 significant digits.
#[derive(Debug, Clone, Copy)]
struct DoubleDouble {
    hi: f64,
    lo: f64,
}

impl DoubleDouble {
    const ZERO: Self = DoubleDouble { hi: 0.0, lo: 0.0 };

    fn from_f64(x: f64) -> Self {
        DoubleDouble { hi: x, lo: 0.0 }
    }

    fn two_sum(a: f64, b: f64) -> Self {
        let s = a + b;
        let bb = s - a;
        DoubleDouble {
            hi: s,
            lo: (a - (s - bb)) + (b - bb),
        }
    }

    fn add(self, o: Self) -> Self {
        let s = Self::two_sum(self.hi, o.hi);
        Self::two_sum(s.hi, s.lo + self.lo + o.lo)
    }

    fn neg(self) -> Self {
        DoubleDouble {
            hi: -self.hi,
            lo: -self.lo,
        }
    }

    fn mul(self, o: Self) -> Self {
        let p = self.hi * o.hi;
        let e = self.hi.mul_add(o.hi, -p);
        Self::two_sum(p, e + self.hi * o.lo + self.lo * o.hi)
    }

    fn div_f64(self, d: f64) -> Self {
        let q = self.hi / d;
        let r = self.add(Self::from_f64(q).mul(Self::from_f64(d)).neg());
        Self::two_sum(q, r.hi / d)
    }

    fn to_f64(self) -> f64 {
        self.hi + self.lo
    }
}

/// Elementary symmetric functions `S_0..S_d` of the eigenvalues, by Newton's
/// identities on the power traces `tr(A^i) = Σ λ^i`.
///
/// The recursion cancels heavily for larger `d`, so both the power traces and
/// the recursion are carried in double-double arithmetic.
pub fn char_coeffs(a: &HermObservable) -> Vec<f64> {
    let d = a.dim();
    let values = eigvals_hermitian(&a.mat).expect("observable spectra are computed at construction");
    let mut powers: Vec<DoubleDouble> = values.iter().map(|&v| DoubleDouble::from_f64(v)).collect();
    let mut power_traces = Vec::with_capacity(d);
    for _ in 0..d {
        power_traces.push(powers.iter().fold(DoubleDouble::ZERO, |acc, &p| acc.add(p)));
        for (p, &v) in powers.iter_mut().zip(&values) {
            *p = p.mul(DoubleDouble::from_f64(v));
        }
    }
    let mut s = vec![DoubleDouble::from_f64(1.0)];
    for l in 1..=d {
        let mut acc = DoubleDouble::ZERO;
        for i in 1..=l {
            let term = power_traces[i - 1].mul(s[l - i]);
            acc = if i % 2 == 1 { acc.add(term) } else { acc.add(term.neg()) };
        }
        s.push(acc.div_f64(l as f64));
    }
    s.into_iter().map(DoubleDouble::to_f64).collect()
}

/// Ascending eigenvalues with orthonormal eigenvectors stored as columns.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    pub values: Vec<f64>,
    vectors: CMatrix,
}

impl Spectrum {
    pub fn dim(&self) -> usize {
        self.values.len()
    }

    pub fn vector(&self, k: usize) -> Vec<Complex> {
        self.vectors.column(k)
    }

    pub fn vectors(&self) -> &CMatrix {
        &self.vectors
    }

    pub fn max(&self) -> f64 {
        self.values[self.values.len() - 1]
    }

    pub fn min(&self) -> f64 {
        self.values[0]
    }

    /// Indices of eigenvalues within `rel_tol * max(1, |max|)` of the largest one.
    pub fn top_cluster(&self, rel_tol: f64) -> std::ops::Range<usize> {
        let n = self.values.len();
        let top = self.values[n - 1];
        let tol = rel_tol * top.abs().max(1.0);
        let start = self.values.iter().position(|&v| top - v <= tol).unwrap_or(n - 1);
        start..n
    }
}

/// Householder reduction `A = Q D T D^† Q^†` with `T` real symmetric tridiagonal.
struct Reduction {
    diag: Vec<f64>,
    off: Vec<f64>,
    reflectors: Vec<Option<Vec<Complex>>>,
    phases: Vec<Complex>,
}

impl Reduction {
    fn new(a: &CMatrix) -> Self {
        let n = a.dim;
        let mut w = a.data.clone();
        let mut reflectors = Vec::with_capacity(n.saturating_sub(2));
        let mut p = vec![ZERO; n];
        let mut q = vec![ZERO; n];
        for k in 0..n.saturating_sub(2) {
            let m = n - k - 1;
            let off = k + 1;
            let mut v: Vec<Complex> = (off..n).map(|i| w[i * n + k]).collect();
            let tail: f64 = v[1..].iter().map(|z| z.norm_sqr()).sum();
            if tail == 0.0 {
                reflectors.push(None);
                continue;
            }
            let head = v[0].norm();
            let sigma = (head * head + tail).sqrt();
            let phase = if head > 0.0 { v[0] / head } else { ONE };
            let alpha = -phase * sigma;
            v[0] -= alpha;
            let vn = vec_norm(&v);
            for z in v.iter_mut() {
                *z /= vn;
            }
            for r in 0..m {
                let row = &w[(off + r) * n + off..(off + r) * n + n];
                p[r] = row.iter().zip(&v).map(|(a, x)| a * x).sum();
            }
            let kappa = inner(&v, &p[..m]).re;
            for r in 0..m {
                q[r] = p[r] - v[r] * kappa;
            }
            for r in 0..m {
                let (vr, qr) = (v[r] * 2.0, q[r] * 2.0);
                let row = &mut w[(off + r) * n + off..(off + r) * n + n];
                for c in 0..m {
                    row[c] -= vr * q[c].conj() + qr * v[c].conj();
                }
            }
            w[off * n + k] = alpha;
            w[k * n + off] = alpha.conj();
            for i in off + 1..n {
                w[i * n + k] = ZERO;
                w[k * n + i] = ZERO;
            }
            reflectors.push(Some(v));
        }
        let diag: Vec<f64> = (0..n).map(|i| w[i * n + i].re).collect();
        let mut off = Vec::with_capacity(n.saturating_sub(1));
        let mut phases = Vec::with_capacity(n);
        phases.push(ONE);
        for k in 0..n.saturating_sub(1) {
            let e = w[(k + 1) * n + k];
            let mag = e.norm();
            let u = if mag > 0.0 { e / mag } else { ONE };
            phases.push(phases[k] * u);
            off.push(mag);
        }
        Reduction {
            diag,
            off,
            reflectors,
            phases,
        }
    }

    /// Maps an eigenvector of the real tridiagonal matrix back to the original basis.
    fn back_transform(&self, z: &[f64]) -> Vec<Complex> {
        let mut y: Vec<Complex> = z.iter().zip(&self.phases).map(|(zi, d)| d * *zi).collect();
        for (k, refl) in self.reflectors.iter().enumerate().rev() {
            if let Some(v) = refl {
                let seg = &mut y[k + 1..];
                let dot = inner(v, seg) * 2.0;
                for (yi, vi) in seg.iter_mut().zip(v) {
                    *yi -= dot * vi;
                }
            }
        }
        y
    }
}

/// Implicit QL with Wilkinson shifts on a symmetric tridiagonal matrix.
/// `e[i]` couples rows `i` and `i+1`; `e[n-1]` must be zero. When `z` is given
/// (row-major n×n, initially identity) the rotations are accumulated into it.
fn tridiagonal_ql(d: &mut [f64], e: &mut [f64], mut z: Option<&mut [f64]>) -> Result<(), LinalgError> {
    let n = d.len();
    let cap = 64 * n.max(1);
    let eps = f64::EPSILON;
    let mut total = 0usize;
    let mut f = 0.0;
    let mut tst1: f64 = 0.0;
    for l in 0..n {
        tst1 = tst1.max(d[l].abs() + e[l].abs());
        let mut m = l;
        while m < n - 1 && e[m].abs() > eps * tst1 {
            m += 1;
        }
        if m > l {
            loop {
                total += 1;
                if total > cap {
                    return Err(LinalgError::NoConvergence { iterations: total });
                }
                let g = d[l];
                let mut p = (d[l + 1] - g) / (2.0 * e[l]);
                let mut r = p.hypot(1.0);
                if p < 0.0 {
                    r = -r;
                }
                d[l] = e[l] / (p + r);
                d[l + 1] = e[l] * (p + r);
                let dl1 = d[l + 1];
                let h = g - d[l];
                for di in d.iter_mut().skip(l + 2) {
                    *di -= h;
                }
                f += h;

                p = d[m];
                let mut c = 1.0;
                let mut c2 = c;
                let mut c3 = c;
                let el1 = e[l + 1];
                let mut s = 0.0;
                let mut s2 = 0.0;
                for i in (l..m).rev() {
                    c3 = c2;
                    c2 = c;
                    s2 = s;
                    let g = c * e[i];
                    let h = c * p;
                    r = p.hypot(e[i]);
                    e[i + 1] = s * r;
                    s = e[i] / r;
                    c = p / r;
                    p = c * d[i] - s * g;
                    d[i + 1] = h + s * (c * g + s * d[i]);
                    if let Some(z) = z.as_deref_mut() {
                        for k in 0..n {
                            let row = &mut z[k * n..(k + 1) * n];
                            let h = row[i + 1];
                            row[i + 1] = s * row[i] + c * h;
                            row[i] = c * row[i] - s * h;
                        }
                    }
                }
                p = -s * s2 * c3 * el1 * e[l] / dl1;
                e[l] = s * p;
                d[l] = c * p;
                if e[l].abs() <= eps * tst1 {
                    break;
                }
            }
        }
        d[l] += f;
        e[l] = 0.0;
    }
    Ok(())
}

fn sorted_order(values: &[f64]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..values.len()).collect();
    idx.sort_by(|&a, &b| values[a].total_cmp(&values[b]).then(a.cmp(&b)));
    idx
}

fn validate(a: &CMatrix) -> Result<(), LinalgError> {
    if a.dim == 0 {
        return Err(LinalgError::Empty);
    }
    a.check_finite()?;
    a.check_hermitian()
}

/// Ascending eigenvalues only.
pub fn eigvals_hermitian(a: &CMatrix) -> Result<Vec<f64>, LinalgError> {
    validate(a)?;
    let red = Reduction::new(a);
    let mut d = red.diag.clone();
    let mut e = red.off.clone();
    e.push(0.0);
    tridiagonal_ql(&mut d, &mut e, None)?;
    d.sort_by(f64::total_cmp);
    Ok(d)
}

/// Full eigendecomposition of a Hermitian matrix.
pub fn eig_hermitian(a: &CMatrix) -> Result<Spectrum, LinalgError> {
    validate(a)?;
    let n = a.dim;
    let red = Reduction::new(a);
    let mut d = red.diag.clone();
    let mut e = red.off.clone();
    e.push(0.0);
    let mut z = vec![0.0; n * n];
    for i in 0..n {
        z[i * n + i] = 1.0;
    }
    tridiagonal_ql(&mut d, &mut e, Some(&mut z))?;
    let order = sorted_order(&d);
    let mut columns: Vec<Vec<Complex>> = order
        .iter()
        .map(|&k| {
            let zc: Vec<f64> = (0..n).map(|r| z[r * n + k]).collect();
            red.back_transform(&zc)
        })
        .collect();
    let values: Vec<f64> = order.iter().map(|&k| d[k]).collect();

    let scale = values.iter().fold(1.0f64, |m, v| m.max(v.abs()));
    let mut start = 0;
    for k in 1..=n {
        if k == n || values[k] - values[k - 1] > 1e-12 * scale {
            if k - start > 1 {
                gram_schmidt(&mut columns[start..k]);
            }
            start = k;
        }
    }
    let vectors = CMatrix::from_fn(n, |r, c| columns[c][r]);
    Ok(Spectrum { values, vectors })
}

/// Modified Gram–Schmidt in place, two passes.
pub(crate) fn gram_schmidt(vs: &mut [Vec<Complex>]) {
    for _ in 0..2 {
        for i in 0..vs.len() {
            let (done, rest) = vs.split_at_mut(i);
            let v = &mut rest[0];
            for u in done.iter() {
                let proj = inner(u, v);
                for (vi, ui) in v.iter_mut().zip(u) {
                    *vi -= proj * ui;
                }
            }
            let nv = vec_norm(v);
            if nv > 0.0 {
                for vi in v.iter_mut() {
                    *vi /= nv;
                }
            }
        }
    }
}

/// Top eigenvalue cluster of a Hermitian matrix.
#[derive(Debug, Clone)]
pub struct TopEigen {
    /// All eigenvalues, ascending.
    pub values: Vec<f64>,
    /// Orthonormal basis of the eigenspace of the top cluster.
    pub basis: Vec<Vec<Complex>>,
}

impl TopEigen {
    pub fn lambda_max(&self) -> f64 {
        self.values[self.values.len() - 1]
    }

    pub fn multiplicity(&self) -> usize {
        self.basis.len()
    }

    /// Distance from the top eigenvalue to the largest eigenvalue outside the cluster.
    pub fn gap(&self) -> Option<f64> {
        let n = self.values.len();
        let m = self.basis.len();
        (m < n).then(|| self.values[n - 1] - self.values[n - 1 - m])
    }
}

/// Eigenvalues plus eigenvectors of the cluster within `rel_tol * max(1, |λ_max|)`
/// of the largest eigenvalue. Cluster vectors come from inverse iteration on the
/// tridiagonal form; the full solver is used if the residual check fails.
pub fn top_eigenspace(a: &CMatrix, rel_tol: f64) -> Result<TopEigen, LinalgError> {
    validate(a)?;
    let n = a.dim;
    let red = Reduction::new(a);
    let mut d = red.diag.clone();
    let mut e = red.off.clone();
    e.push(0.0);
    tridiagonal_ql(&mut d, &mut e, None)?;
    d.sort_by(f64::total_cmp);
    let top = d[n - 1];
    let tol = rel_tol * top.abs().max(1.0);
    let cluster: Vec<f64> = d.iter().copied().filter(|&v| top - v <= tol).collect();

    let mut basis: Vec<Vec<f64>> = Vec::with_capacity(cluster.len());
    let tnorm = red
        .diag
        .iter()
        .map(|x| x.abs())
        .chain(red.off.iter().map(|x| 2.0 * x.abs()))
        .fold(0.0f64, f64::max)
        .max(f64::MIN_POSITIVE);
    for (c, &lambda) in cluster.iter().enumerate() {
        let mut x: Vec<f64> = (0..n)
            .map(|i| 1.0 + 0.5 * (((i * 7919 + c * 104729) % 97) as f64 / 97.0 - 0.5))
            .collect();
        for _ in 0..3 {
            x = shifted_tridiagonal_solve(&red.diag, &red.off, lambda, &x, tnorm);
            for _ in 0..2 {
                for u in &basis {
                    let proj: f64 = u.iter().zip(&x).map(|(a, b)| a * b).sum();
                    for (xi, ui) in x.iter_mut().zip(u) {
                        *xi -= proj * ui;
                    }
                }
            }
            let nx = x.iter().map(|v| v * v).sum::<f64>().sqrt();
            if !(nx > 0.0 && nx.is_finite()) {
                return top_from_full(a, d, rel_tol);
            }
            for xi in x.iter_mut() {
                *xi /= nx;
            }
        }
        basis.push(x);
    }

    let vectors: Vec<Vec<Complex>> = basis.iter().map(|z| red.back_transform(z)).collect();
    let bound = RESIDUAL_TOL * a.frobenius_norm().max(f64::MIN_POSITIVE);
    for (v, &lambda) in vectors.iter().zip(&cluster) {
        let av = a.mul_vec(v)?;
        let res = av
            .iter()
            .zip(v)
            .map(|(x, y)| (x - y * lambda).norm_sqr())
            .sum::<f64>()
            .sqrt();
        if !(res <= bound) {
            return top_from_full(a, d, rel_tol);
        }
    }
    Ok(TopEigen {
        values: d,
        basis: vectors,
    })
}

fn top_from_full(a: &CMatrix, values: Vec<f64>, rel_tol: f64) -> Result<TopEigen, LinalgError> {
    let spec = eig_hermitian(a)?;
    let basis = spec.top_cluster(rel_tol).map(|k| spec.vector(k)).collect();
    Ok(TopEigen { values, basis })
}

/// Solves `(T - sigma I) x = b` for symmetric tridiagonal `T` by LU with partial
/// pivoting; zero pivots are replaced by a tiny multiple of `tnorm`.
fn shifted_tridiagonal_solve(diag: &[f64], off: &[f64], sigma: f64, b: &[f64], tnorm: f64) -> Vec<f64> {
    let n = diag.len();
    let tiny = f64::EPSILON * tnorm;
    let mut dd: Vec<f64> = diag.iter().map(|x| x - sigma).collect();
    if n == 1 {
        let p = if dd[0].abs() < tiny { tiny } else { dd[0] };
        return vec![b[0] / p];
    }
    let mut dl = off.to_vec();
    let mut du = off.to_vec();
    let mut du2 = vec![0.0; n.saturating_sub(2)];
    let mut swapped = vec![false; n - 1];
    for i in 0..n - 1 {
        if dd[i].abs() >= dl[i].abs() {
            if dd[i] == 0.0 {
                dd[i] = tiny;
            }
            let fact = dl[i] / dd[i];
            dl[i] = fact;
            dd[i + 1] -= fact * du[i];
        } else {
            let fact = dd[i] / dl[i];
            dd[i] = dl[i];
            dl[i] = fact;
            let tmp = du[i];
            du[i] = dd[i + 1];
            dd[i + 1] = tmp - fact * dd[i + 1];
            if i + 2 < n {
                du2[i] = du[i + 1];
                du[i + 1] = -fact * du[i + 1];
            }
            swapped[i] = true;
        }
    }
    if dd[n - 1].abs() < tiny {
        dd[n - 1] = tiny;
    }
    let mut x = b.to_vec();
    for i in 0..n - 1 {
        if swapped[i] {
            let tmp = x[i];
            x[i] = x[i + 1];
            x[i + 1] = tmp - dl[i] * x[i];
        } else {
            x[i + 1] -= dl[i] * x[i];
        }
    }
    x[n - 1] /= dd[n - 1];
    x[n - 2] = (x[n - 2] - du[n - 2] * x[n - 1]) / dd[n - 2];
    for i in (0..n.saturating_sub(2)).rev() {
        x[i] = (x[i] - du[i] * x[i + 1] - du2[i] * x[i + 2]) / dd[i];
    }
    let scale = x.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    if scale > 0.0 && scale.is_finite() {
        for xi in x.iter_mut() {
            *xi /= scale;
        }
    }
    x
}
