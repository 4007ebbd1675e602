//! One-dimensional and coordinate-wise local searches.

const INV_PHI: f64 = 0.618_033_988_749_894_9;

/// Golden-section search for the minimum of `f` on `[a, b]`, stopping once the
/// bracket is shorter than `tol`. Returns `(argmin, min)`.
pub fn golden_min(mut f: impl FnMut(f64) -> f64, mut a: f64, mut b: f64, tol: f64) -> (f64, f64) {
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    while (b - a).abs() > tol {
        if fc <= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = f(d);
        }
    }
    if fc <= fd {
        (c, fc)
    } else {
        (d, fd)
    }
}

/// Cyclic coordinate descent with golden-section line searches. Each bracket
/// is `±h` around the current coordinate, where `h` follows the size of the
/// last move within `[tol, max_step]`.
pub fn coordinate_descent(
    mut f: impl FnMut(&[f64]) -> f64,
    start: &[f64],
    max_step: f64,
    tol: f64,
    max_rounds: usize,
) -> (Vec<f64>, f64) {
    let mut x = start.to_vec();
    let mut fx = f(&x);
    let mut h = vec![max_step; x.len()];
    for _ in 0..max_rounds {
        let mut moved: f64 = 0.0;
        for i in 0..x.len() {
            let x0 = x[i];
            let mut y = x.clone();
            let (xi, fi) = golden_min(
                |t| {
                    y[i] = t;
                    f(&y)
                },
                x0 - h[i],
                x0 + h[i],
                tol,
            );
            if fi < fx {
                x[i] = xi;
                fx = fi;
            }
            let delta = (x[i] - x0).abs();
            moved = moved.max(delta);
            h[i] = (3.0 * delta).clamp(tol * 10.0, max_step);
        }
        if moved <= tol {
            break;
        }
    }
    (x, fx)
}

/// Outcome of [`newton_min_2d`].
pub struct NewtonResult {
    pub x: [f64; 2],
    pub fx: f64,
    /// False when the iteration stopped on an indefinite Hessian or a failed
    /// line search rather than on a short step.
    pub converged: bool,
}

/// Damped Newton iteration in two variables with central-difference
/// derivatives of spacing `h`. Steps are capped at `max_step` and halved
/// until they decrease `f`.
pub fn newton_min_2d(
    mut f: impl FnMut(&[f64]) -> f64,
    start: [f64; 2],
    h: f64,
    max_step: f64,
    tol: f64,
    max_iter: usize,
) -> NewtonResult {
    let mut x = start;
    let mut fx = f(&x);
    for _ in 0..max_iter {
        let e = |dx: f64, dy: f64| [x[0] + dx, x[1] + dy];
        let (fp0, fm0) = (f(&e(h, 0.0)), f(&e(-h, 0.0)));
        let (f0p, f0m) = (f(&e(0.0, h)), f(&e(0.0, -h)));
        let (fpp, fpm) = (f(&e(h, h)), f(&e(h, -h)));
        let (fmp, fmm) = (f(&e(-h, h)), f(&e(-h, -h)));
        let g = [(fp0 - fm0) / (2.0 * h), (f0p - f0m) / (2.0 * h)];
        let hxx = (fp0 - 2.0 * fx + fm0) / (h * h);
        let hyy = (f0p - 2.0 * fx + f0m) / (h * h);
        let hxy = (fpp - fpm - fmp + fmm) / (4.0 * h * h);
        let det = hxx * hyy - hxy * hxy;
        if !(hxx > 0.0 && det > 0.0) {
            return NewtonResult {
                x,
                fx,
                converged: false,
            };
        }
        let mut p = [-(hyy * g[0] - hxy * g[1]) / det, -(hxx * g[1] - hxy * g[0]) / det];
        let len = p[0].hypot(p[1]);
        if len > max_step {
            p = [p[0] * max_step / len, p[1] * max_step / len];
        }
        let mut accepted = false;
        for _ in 0..8 {
            let y = [x[0] + p[0], x[1] + p[1]];
            let fy = f(&y);
            if fy <= fx {
                x = y;
                fx = fy;
                accepted = true;
                break;
            }
            p = [p[0] / 2.0, p[1] / 2.0];
        }
        if !accepted {
            return NewtonResult {
                x,
                fx,
                converged: p[0].hypot(p[1]) <= tol,
            };
        }
        if p[0].hypot(p[1]) <= tol {
            return NewtonResult { x, fx, converged: true };
        }
    }
    NewtonResult {
        x,
        fx,
        converged: false,
    }
}
