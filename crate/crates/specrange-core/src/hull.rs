//! Convex hulls of small point sets.

/// Collinearity tolerance, relative to the squared extent of the point set.
pub const COLLINEAR_TOL: f64 = 1e-10;

fn cross(o: [f64; 2], a: [f64; 2], b: [f64; 2]) -> f64 {
    (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
}

fn extent2(points: &[[f64; 2]]) -> f64 {
    let mut lo = [f64::INFINITY; 2];
    let mut hi = [f64::NEG_INFINITY; 2];
    for p in points {
        for k in 0..2 {
            lo[k] = lo[k].min(p[k]);
            hi[k] = hi[k].max(p[k]);
        }
    }
    ((hi[0] - lo[0]).powi(2) + (hi[1] - lo[1]).powi(2)).sqrt().max(1.0)
}

/// Drops points within `tol` (per coordinate) of an earlier kept point.
/// Near-duplicates need not be adjacent in lexicographic order, so every kept
/// point whose abscissa is within `tol` is checked.
fn dedup_sorted(pts: &[[f64; 2]], tol: f64) -> Vec<[f64; 2]> {
    let mut kept: Vec<[f64; 2]> = Vec::with_capacity(pts.len());
    for &p in pts {
        let dup = kept
            .iter()
            .rev()
            .take_while(|q| p[0] - q[0] <= tol)
            .any(|q| (p[1] - q[1]).abs() <= tol);
        if !dup {
            kept.push(p);
        }
    }
    kept
}

/// Andrew's monotone chain. Returns the extreme points counter-clockwise,
/// starting from the lexicographically smallest; collinear points are dropped.
///
/// The chain is built with the exact orientation test; near-collinear
/// vertices are then removed in cyclic order, where the middle point of a
/// straight run is well defined even when roundoff scrambles the sort order.
pub fn convex_hull_2d(points: &[[f64; 2]]) -> Vec<[f64; 2]> {
    let mut pts: Vec<[f64; 2]> = points.to_vec();
    pts.sort_by(|a, b| a[0].total_cmp(&b[0]).then(a[1].total_cmp(&b[1])));
    let scale = extent2(&pts);
    let tol = COLLINEAR_TOL * scale * scale;
    pts = dedup_sorted(&pts, 1e-12 * scale);
    if pts.len() <= 2 {
        if pts.len() == 2 && (pts[0][0] - pts[1][0]).hypot(pts[0][1] - pts[1][1]) <= 1e-10 * scale {
            pts.truncate(1);
        }
        return pts;
    }
    let chain = |iter: &mut dyn Iterator<Item = [f64; 2]>| {
        let mut out: Vec<[f64; 2]> = Vec::new();
        for p in iter {
            while out.len() >= 2 && cross(out[out.len() - 2], out[out.len() - 1], p) <= 0.0 {
                out.pop();
            }
            out.push(p);
        }
        out.pop();
        out
    };
    let mut hull = chain(&mut pts.iter().copied());
    hull.extend(chain(&mut pts.iter().rev().copied()));
    let mut changed = true;
    while changed && hull.len() >= 3 {
        changed = false;
        let n = hull.len();
        for i in 0..n {
            let (prev, next) = (hull[(i + n - 1) % n], hull[(i + 1) % n]);
            if cross(prev, hull[i], next) <= tol {
                hull.remove(i);
                changed = true;
                break;
            }
        }
    }
    if hull.len() == 2 && (hull[0][0] - hull[1][0]).hypot(hull[0][1] - hull[1][1]) <= 1e-10 * scale {
        hull.truncate(1);
    }
    if let Some(first) = (0..hull.len()).min_by(|&a, &b| {
        hull[a][0]
            .total_cmp(&hull[b][0])
            .then(hull[a][1].total_cmp(&hull[b][1]))
    }) {
        hull.rotate_left(first);
    }
    hull
}

/// True when every consecutive turn of the closed polygon is counter-clockwise.
pub fn is_convex_ccw(poly: &[[f64; 2]]) -> bool {
    let n = poly.len();
    if n < 3 {
        return true;
    }
    let scale = extent2(poly);
    (0..n).all(|i| cross(poly[i], poly[(i + 1) % n], poly[(i + 2) % n]) > -COLLINEAR_TOL * scale * scale)
}

/// Euclidean distance from `p` to the closed convex polygon `poly` (zero inside).
pub fn distance_to_polygon(poly: &[[f64; 2]], p: [f64; 2]) -> f64 {
    match poly.len() {
        0 => f64::INFINITY,
        1 => (p[0] - poly[0][0]).hypot(p[1] - poly[0][1]),
        n => {
            let inside = n >= 3 && (0..n).all(|i| cross(poly[i], poly[(i + 1) % n], p) >= 0.0);
            if inside {
                return 0.0;
            }
            (0..n)
                .map(|i| segment_distance(poly[i], poly[(i + 1) % n], p))
                .fold(f64::INFINITY, f64::min)
        }
    }
}

fn segment_distance(a: [f64; 2], b: [f64; 2], p: [f64; 2]) -> f64 {
    let (dx, dy) = (b[0] - a[0], b[1] - a[1]);
    let len2 = dx * dx + dy * dy;
    let t = if len2 > 0.0 {
        (((p[0] - a[0]) * dx + (p[1] - a[1]) * dy) / len2).clamp(0.0, 1.0)
    } else {
        0.0
    };
    (p[0] - a[0] - t * dx).hypot(p[1] - a[1] - t * dy)
}

fn sub3(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

fn dot3(a: [f64; 3], b: [f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn cross3(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

/// Is `p` a convex combination of `pts` (at most 4 points)?
fn in_simplex(pts: &[[f64; 3]], p: [f64; 3], tol: f64) -> bool {
    match pts.len() {
        2 => {
            let d = sub3(pts[1], pts[0]);
            let len2 = dot3(d, d);
            if len2 <= tol * tol {
                return false;
            }
            let t = dot3(sub3(p, pts[0]), d) / len2;
            let q = [pts[0][0] + t * d[0], pts[0][1] + t * d[1], pts[0][2] + t * d[2]];
            (-1e-12..=1.0 + 1e-12).contains(&t) && dot3(sub3(p, q), sub3(p, q)).sqrt() <= tol
        }
        3 => {
            let (u, v, w) = (sub3(pts[1], pts[0]), sub3(pts[2], pts[0]), sub3(p, pts[0]));
            let nrm = cross3(u, v);
            let area2 = dot3(nrm, nrm);
            if area2 <= tol * tol * dot3(u, u).max(dot3(v, v)) {
                return false;
            }
            if dot3(w, nrm).abs() / area2.sqrt() > tol {
                return false;
            }
            let b1 = dot3(cross3(w, v), nrm) / area2;
            let b2 = dot3(cross3(u, w), nrm) / area2;
            b1 >= -1e-12 && b2 >= -1e-12 && b1 + b2 <= 1.0 + 1e-12
        }
        4 => {
            let (a, b, c) = (sub3(pts[1], pts[0]), sub3(pts[2], pts[0]), sub3(pts[3], pts[0]));
            let det = dot3(a, cross3(b, c));
            let scale = dot3(a, a).max(dot3(b, b)).max(dot3(c, c)).powf(1.5);
            if det.abs() <= 1e-12 * scale.max(f64::MIN_POSITIVE) {
                return false;
            }
            let w = sub3(p, pts[0]);
            let l1 = dot3(w, cross3(b, c)) / det;
            let l2 = dot3(a, cross3(w, c)) / det;
            let l3 = dot3(a, cross3(b, w)) / det;
            let eps = 1e-12;
            l1 >= -eps && l2 >= -eps && l3 >= -eps && l1 + l2 + l3 <= 1.0 + eps
        }
        _ => false,
    }
}

/// Extreme points of a small 3D point set, by exhaustive Carathéodory tests.
pub fn extreme_points_3d(points: &[[f64; 3]], tol: f64) -> Vec<[f64; 3]> {
    let mut pts: Vec<[f64; 3]> = Vec::new();
    for &p in points {
        if !pts.iter().any(|q| dot3(sub3(p, *q), sub3(p, *q)).sqrt() <= tol) {
            pts.push(p);
        }
    }
    let n = pts.len();
    let mut keep = Vec::new();
    for i in 0..n {
        let others: Vec<[f64; 3]> = (0..n).filter(|&k| k != i).map(|k| pts[k]).collect();
        let m = others.len();
        let mut inside = false;
        'search: for a in 0..m {
            for b in a + 1..m {
                if in_simplex(&[others[a], others[b]], pts[i], tol) {
                    inside = true;
                    break 'search;
                }
                for c in b + 1..m {
                    if in_simplex(&[others[a], others[b], others[c]], pts[i], tol) {
                        inside = true;
                        break 'search;
                    }
                    for d in c + 1..m {
                        if in_simplex(&[others[a], others[b], others[c], others[d]], pts[i], tol) {
                            inside = true;
                            break 'search;
                        }
                    }
                }
            }
        }
        if !inside {
            keep.push(pts[i]);
        }
    }
    keep
}
