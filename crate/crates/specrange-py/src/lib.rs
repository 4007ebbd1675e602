//! Python bindings: operator sets, range boundaries, uncertainty bounds and
//! the large-spin limit surfaces.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use specrange_core::bounds::{optimize_bounds, BoundaryRef, MeasureKind};
use specrange_core::definetti::{self, Quantity};
use specrange_core::numrange::{self, FaceOpts, SupportFace};
use specrange_core::{HalfInt, ObservableVec, SetKind};

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse_spin(s: &str) -> PyResult<HalfInt> {
    s.parse().map_err(value_err)
}

fn parse_kind(s: &str) -> PyResult<SetKind> {
    s.parse().map_err(|e: String| PyValueError::new_err(e))
}

fn parse_family(s: &str) -> PyResult<SetKind> {
    match parse_kind(s)? {
        k @ (SetKind::JPow | SetKind::Anticomm) => Ok(k),
        other => Err(PyValueError::new_err(format!("no limit surface for `{}`", other.tag()))),
    }
}

/// A spin quantum number, integer or half-integer.
#[pyclass(name = "HalfInt", frozen)]
struct PyHalfInt {
    inner: HalfInt,
}

#[pymethods]
impl PyHalfInt {
    /// Accepts `"3"`, `"3/2"` or the doubled value as an integer via `from_twice`.
    #[new]
    fn new(value: &str) -> PyResult<Self> {
        Ok(PyHalfInt {
            inner: parse_spin(value)?,
        })
    }

    #[staticmethod]
    fn from_twice(twice: u32) -> PyResult<Self> {
        HalfInt::from_twice(twice)
            .map(|inner| PyHalfInt { inner })
            .map_err(value_err)
    }

    #[getter]
    fn twice(&self) -> u32 {
        self.inner.twice()
    }

    #[getter]
    fn value(&self) -> f64 {
        self.inner.value()
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("HalfInt('{}')", self.inner)
    }
}

/// A vector of Hermitian spin observables.
#[pyclass(name = "ObservableSet", frozen)]
struct PySet {
    inner: ObservableVec,
}

#[pymethods]
impl PySet {
    /// `kind` is one of `j`, `jpow`, `jsq2d`, `ladder`, `anticomm`.
    #[new]
    #[pyo3(signature = (j, kind = "j", gamma = 1))]
    fn new(j: &str, kind: &str, gamma: u32) -> PyResult<Self> {
        let inner = specrange_core::spin::build_set(parse_kind(kind)?, parse_spin(j)?, gamma).map_err(value_err)?;
        Ok(PySet { inner })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    #[getter]
    fn j(&self) -> Option<String> {
        self.inner.j().map(|j| j.to_string())
    }

    #[getter]
    fn kind(&self) -> &'static str {
        self.inner.kind().tag()
    }

    #[getter]
    fn gamma(&self) -> u32 {
        self.inner.gamma()
    }

    #[getter]
    fn labels(&self) -> Vec<String> {
        self.inner.ops().iter().map(|o| o.label().to_string()).collect()
    }

    /// Operator matrices as nested lists of complex numbers, row-major.
    fn matrices(&self) -> Vec<Vec<Vec<num_complex::Complex64>>> {
        self.inner
            .ops()
            .iter()
            .map(|op| {
                let m = op.mat();
                (0..op.dim())
                    .map(|r| (0..op.dim()).map(|c| m[(r, c)]).collect())
                    .collect()
            })
            .collect()
    }

    /// Smallest and largest eigenvalue of each operator.
    fn spectral_box(&self) -> (Vec<f64>, Vec<f64>) {
        let r = numrange::hyperrect(&self.inner);
        (r.lo, r.hi)
    }

    fn __repr__(&self) -> String {
        format!(
            "ObservableSet(j={}, kind='{}', gamma={})",
            self.inner.j().map_or_else(|| "None".into(), |j| format!("'{j}'")),
            self.inner.kind().tag(),
            self.inner.gamma()
        )
    }
}

fn face_dict<'py>(py: Python<'py>, f: &SupportFace) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("theta", f.dir.theta)?;
    d.set_item("phi", f.dir.phi)?;
    d.set_item("lambda_max", f.lambda_max)?;
    d.set_item("multiplicity", f.multiplicity)?;
    d.set_item("vertices", f.vertices.clone())?;
    Ok(d)
}

/// Support faces along `steps` equally spaced planar directions and the hull
/// of their vertices.
#[pyfunction]
#[pyo3(signature = (set, steps = 360))]
fn boundary2d<'py>(py: Python<'py>, set: PyRef<'_, PySet>, steps: usize) -> PyResult<Bound<'py, PyDict>> {
    let b = numrange::boundary2d(&set.inner, steps, &FaceOpts::default()).map_err(value_err)?;
    let d = PyDict::new(py);
    let faces = b
        .samples
        .iter()
        .map(|f| face_dict(py, f))
        .collect::<PyResult<Vec<_>>>()?;
    d.set_item("faces", faces)?;
    d.set_item("hull", b.hull)?;
    Ok(d)
}

/// Boundary points and triangles over a `theta_steps` by `phi_steps` grid.
#[pyfunction]
#[pyo3(signature = (set, theta_steps = 24, phi_steps = 48))]
fn boundary3d<'py>(
    py: Python<'py>,
    set: PyRef<'_, PySet>,
    theta_steps: usize,
    phi_steps: usize,
) -> PyResult<Bound<'py, PyDict>> {
    let m = numrange::boundary3d(&set.inner, theta_steps, phi_steps, &FaceOpts::default()).map_err(value_err)?;
    let d = PyDict::new(py);
    let faces = m
        .distinct_faces()
        .map(|f| face_dict(py, f))
        .collect::<PyResult<Vec<_>>>()?;
    d.set_item("faces", faces)?;
    d.set_item("points", m.points.clone())?;
    d.set_item("triangles", m.triangles.clone())?;
    Ok(d)
}

/// Signed distance of `point` inside the sampled range; negative outside.
#[pyfunction]
#[pyo3(signature = (set, point, theta_steps = 24, phi_steps = 48))]
fn membership(set: PyRef<'_, PySet>, point: Vec<f64>, theta_steps: usize, phi_steps: usize) -> PyResult<f64> {
    if point.len() != set.inner.n() {
        return Err(PyValueError::new_err(format!(
            "point has {} coordinates, the set has {} operators",
            point.len(),
            set.inner.n()
        )));
    }
    numrange::membership(&set.inner, &point, theta_steps, phi_steps).map_err(value_err)
}

/// Optima of the uncertainty measures in `measures` (comma-separated `h`,
/// `u<kappa>`, `umax`) over the range of a two- or three-operator set.
#[pyfunction]
#[pyo3(signature = (set, measures = "h,u0.5,u2,umax", steps = 360, theta_steps = 24, phi_steps = 48))]
fn optimize<'py>(
    py: Python<'py>,
    set: PyRef<'_, PySet>,
    measures: &str,
    steps: usize,
    theta_steps: usize,
    phi_steps: usize,
) -> PyResult<Bound<'py, PyDict>> {
    let kinds = MeasureKind::parse_list(measures).map_err(value_err)?;
    let e = &set.inner;
    let opts = FaceOpts::default();
    let report = match e.n() {
        2 => {
            let b = numrange::boundary2d(e, steps, &opts).map_err(value_err)?;
            optimize_bounds(e, BoundaryRef::Planar(&b), &kinds)
        }
        3 => {
            let m = numrange::boundary3d(e, theta_steps, phi_steps, &opts).map_err(value_err)?;
            optimize_bounds(e, BoundaryRef::Spatial(&m), &kinds)
        }
        n => return Err(PyValueError::new_err(format!("bounds need 2 or 3 operators, got {n}"))),
    }
    .map_err(value_err)?;

    let out = PyDict::new(py);
    for m in &report.measures {
        let d = PyDict::new(py);
        d.set_item("value", m.value)?;
        d.set_item("sense", m.sense.tag())?;
        d.set_item("kappa", m.kind.kappa())?;
        let angles: Vec<(Option<f64>, f64)> = m.angles.iter().map(|a| (a.theta, a.phi)).collect();
        d.set_item("angles", angles)?;
        d.set_item("point", m.point.clone())?;
        out.set_item(m.kind.to_string(), d)?;
    }
    out.set_item("trivial", report.trivial)?;
    out.set_item("spectral_box", (report.rect.lo.clone(), report.rect.hi.clone()))?;
    Ok(out)
}

/// Points of the large-spin limit surface as `(mu, nu, (a1, a2, a3))`.
#[pyfunction]
#[pyo3(signature = (family = "jpow", gamma = 1, mu_steps = 91, nu_steps = 180))]
fn limit_surface(family: &str, gamma: u32, mu_steps: usize, nu_steps: usize) -> PyResult<Vec<(f64, f64, [f64; 3])>> {
    let s = definetti::surface(parse_family(family)?, gamma, mu_steps, nu_steps).map_err(value_err)?;
    Ok(s.grid.iter().zip(&s.points).map(|(b, p)| (b.mu, b.nu, *p)).collect())
}

/// A convergence quantity over spins `j_min..=j_max` in half steps, as
/// `(2j, value)` pairs.
#[pyfunction]
#[pyo3(signature = (family, gamma, quantity, j_min, j_max))]
fn convergence_sweep(family: &str, gamma: u32, quantity: &str, j_min: &str, j_max: &str) -> PyResult<Vec<(u32, f64)>> {
    let q: Quantity = quantity.parse().map_err(value_err)?;
    let (lo, hi) = (parse_spin(j_min)?, parse_spin(j_max)?);
    if hi.twice() < lo.twice() {
        return Err(PyValueError::new_err(format!("j_max {hi} is below j_min {lo}")));
    }
    let js = HalfInt::range_from(lo.twice(), hi.twice());
    let series = definetti::convergence_sweep(parse_family(family)?, gamma, &js, q).map_err(value_err)?;
    Ok(series.into_iter().map(|(j, v)| (j.twice(), v)).collect())
}

/// The `specrange` extension module.
#[pymodule]
pub fn specrange(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyHalfInt>()?;
    m.add_class::<PySet>()?;
    m.add_function(wrap_pyfunction!(boundary2d, m)?)?;
    m.add_function(wrap_pyfunction!(boundary3d, m)?)?;
    m.add_function(wrap_pyfunction!(membership, m)?)?;
    m.add_function(wrap_pyfunction!(optimize, m)?)?;
    m.add_function(wrap_pyfunction!(limit_surface, m)?)?;
    m.add_function(wrap_pyfunction!(convergence_sweep, m)?)?;
    Ok(())
}
