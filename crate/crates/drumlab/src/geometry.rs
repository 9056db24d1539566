//! The domain family: disks, annuli, perturbed disks `U_n`, and the composite
//! domain joining a perturbed disk to a concentric annulus through `n` narrow
//! sector passages.
//!
//! All domains are described analytically. The boundary of `U_n` is the polar
//! graph `r = r1 (1 + cos(n^2 theta)/n)`; the composite is the set union of
//! `U_n`, the annulus `r2 < r < r3`, and the `n` sectors
//! `{0 < r < r3, |theta - 2k pi/n| < eps}`. Membership tests, tagged boundary
//! polylines (consumed by the mesh generator) and areas are provided here.

use crate::error::{Error, Result};
use std::f64::consts::PI;

/// A point in the plane with polar accessors.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl Point2 {
    pub fn new(x: f64, y: f64) -> Self {
        Point2 { x, y }
    }

    pub fn from_polar(r: f64, theta: f64) -> Self {
        Point2 {
            x: r * theta.cos(),
            y: r * theta.sin(),
        }
    }

    pub fn r(&self) -> f64 {
        self.x.hypot(self.y)
    }

    /// Polar angle in `[-pi, pi)`.
    pub fn theta(&self) -> f64 {
        let t = self.y.atan2(self.x);
        if t >= PI {
            t - 2.0 * PI
        } else {
            t
        }
    }

    pub fn dist(&self, other: Point2) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }

    /// Rotation about the origin by `angle` radians.
    pub fn rotate(&self, angle: f64) -> Point2 {
        let (s, c) = angle.sin_cos();
        Point2 {
            x: c * self.x - s * self.y,
            y: s * self.x + c * self.y,
        }
    }
}

/// Radii `0 < r1 < r2 < r3` of the inner ball and the annulus.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadiiTriple {
    pub r1: f64,
    pub r2: f64,
    pub r3: f64,
}

impl RadiiTriple {
    pub fn new(r1: f64, r2: f64, r3: f64) -> Result<Self> {
        if !(0.0 < r1 && r1 < r2 && r2 < r3) {
            return Err(Error::domain(format!(
                "radii must satisfy 0 < r1 < r2 < r3, got ({r1}, {r2}, {r3})"
            )));
        }
        Ok(RadiiTriple { r1, r2, r3 })
    }
}

/// Analytic description of a computational domain.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DomainSpec {
    Disk {
        radius: f64,
    },
    Annulus {
        inner: f64,
        outer: f64,
    },
    /// `U_n`: n-fold symmetric perturbation of the disk of radius `r1`.
    PerturbedDisk {
        r1: f64,
        n: u32,
    },
    /// `U_n ∪ A_{r2,r3} ∪ (n sector passages of angular half-width eps)`.
    Composite {
        radii: RadiiTriple,
        n: u32,
        eps: f64,
    },
}

impl DomainSpec {
    /// Checks the structural invariants of the variant.
    pub fn validate(&self) -> Result<()> {
        match *self {
            DomainSpec::Disk { radius } => {
                if !(radius > 0.0) {
                    return Err(Error::domain(format!("disk radius must be > 0, got {radius}")));
                }
            }
            DomainSpec::Annulus { inner, outer } => {
                if !(0.0 < inner && inner < outer) {
                    return Err(Error::domain(format!(
                        "annulus radii must satisfy 0 < inner < outer, got ({inner}, {outer})"
                    )));
                }
            }
            DomainSpec::PerturbedDisk { r1, n } => {
                if !(r1 > 0.0) {
                    return Err(Error::domain(format!("perturbed disk r1 must be > 0, got {r1}")));
                }
                if n < 1 {
                    return Err(Error::domain("perturbed disk requires n >= 1".to_string()));
                }
            }
            DomainSpec::Composite { radii, n, eps } => {
                RadiiTriple::new(radii.r1, radii.r2, radii.r3)?;
                if n < 1 {
                    return Err(Error::domain("composite requires n >= 1".to_string()));
                }
                // conservative bound keeping adjacent passages disjoint
                if !(eps > 0.0 && eps < PI / (2.0 * n as f64)) {
                    return Err(Error::domain(format!(
                        "composite requires 0 < eps < pi/(2n) = {}, got {eps}",
                        PI / (2.0 * n as f64)
                    )));
                }
                if !((1.0 + 1.0 / n as f64) * radii.r1 < radii.r2) {
                    return Err(Error::DegenerateGeometry(format!(
                        "U_n touches the annulus: (1 + 1/{n})*r1 = {} >= r2 = {}",
                        (1.0 + 1.0 / n as f64) * radii.r1,
                        radii.r2
                    )));
                }
            }
        }
        Ok(())
    }

    /// A radius certainly enclosing the whole domain.
    pub fn outer_radius(&self) -> f64 {
        match *self {
            DomainSpec::Disk { radius } => radius,
            DomainSpec::Annulus { outer, .. } => outer,
            DomainSpec::PerturbedDisk { r1, n } => r1 * (1.0 + 1.0 / n as f64),
            DomainSpec::Composite { radii, .. } => radii.r3,
        }
    }
}

/// Radius of the perturbed-disk boundary at polar angle `theta`:
/// `r1 (1 + cos(n^2 theta)/n)`.
pub fn perturbed_radius(r1: f64, n: u32, theta: f64) -> f64 {
    r1 * (1.0 + (n as f64 * n as f64 * theta).cos() / n as f64)
}

/// The boundary point of `U_n` at curve parameter `t` in `[-1, 1]`:
/// `(r1 (1 + cos(n^2 pi t)/n) cos(pi t), r1 (1 + cos(n^2 pi t)/n) sin(pi t))`.
pub fn perturbed_boundary(r1: f64, n: u32, t: f64) -> Result<Point2> {
    if !(-1.0..=1.0).contains(&t) {
        return Err(Error::domain(format!("parameter t must be in [-1, 1], got {t}")));
    }
    let theta = PI * t;
    Ok(Point2::from_polar(perturbed_radius(r1, n, theta), theta))
}

/// Signed angular distance from `theta` to the nearest passage axis
/// `2 k pi / n`, in `[-pi/n, pi/n)`.
fn angle_to_nearest_axis(theta: f64, n: u32) -> f64 {
    let period = 2.0 * PI / n as f64;
    let mut d = theta.rem_euclid(period);
    if d >= 0.5 * period {
        d -= period;
    }
    d
}

/// True iff `p` lies in the open set described by `spec`.
pub fn contains(spec: &DomainSpec, p: Point2) -> bool {
    let r = p.r();
    match *spec {
        DomainSpec::Disk { radius } => r < radius,
        DomainSpec::Annulus { inner, outer } => inner < r && r < outer,
        DomainSpec::PerturbedDisk { r1, n } => r < perturbed_radius(r1, n, p.theta()),
        DomainSpec::Composite { radii, n, eps } => {
            if r < perturbed_radius(radii.r1, n, p.theta()) {
                return true;
            }
            if radii.r2 < r && r < radii.r3 {
                return true;
            }
            r > 0.0 && r < radii.r3 && angle_to_nearest_axis(p.theta(), n).abs() < eps
        }
    }
}

/// Analytic curve carrying one polyline edge; used to re-project midpoints
/// exactly onto the boundary during mesh refinement.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CurveSegment {
    /// Arc of the circle `r = radius`.
    Circle { radius: f64 },
    /// Piece of the perturbed-disk graph `r = r1 (1 + cos(n^2 theta)/n)`.
    Perturbed { r1: f64, n: u32 },
    /// Straight radial segment along the fixed angle `theta`.
    Radial { theta: f64 },
    /// Straight chord through two points (polygonal boundaries).
    Chord { ax: f64, ay: f64, bx: f64, by: f64 },
}

impl CurveSegment {
    /// Projects `p` onto the curve (exact for the curve kinds used here:
    /// circles and the perturbed graph project along the ray through `p`,
    /// radial edges snap the angle).
    pub fn project(&self, p: Point2) -> Point2 {
        match *self {
            CurveSegment::Circle { radius } => {
                let r = p.r();
                if r == 0.0 {
                    Point2::new(radius, 0.0)
                } else {
                    Point2::new(p.x * radius / r, p.y * radius / r)
                }
            }
            CurveSegment::Perturbed { r1, n } => {
                let theta = p.theta();
                Point2::from_polar(perturbed_radius(r1, n, theta), theta)
            }
            CurveSegment::Radial { theta } => Point2::from_polar(p.r(), theta),
            CurveSegment::Chord { ax, ay, bx, by } => {
                let (dx, dy) = (bx - ax, by - ay);
                let len2 = (dx * dx + dy * dy).max(1e-300);
                let t = ((p.x - ax) * dx + (p.y - ay) * dy) / len2;
                Point2::new(ax + t * dx, ay + t * dy)
            }
        }
    }

    /// Distance from `p` to the analytic curve equation (zero on the curve).
    pub fn residual(&self, p: Point2) -> f64 {
        match *self {
            CurveSegment::Circle { radius } => (p.r() - radius).abs(),
            CurveSegment::Perturbed { r1, n } => {
                (p.r() - perturbed_radius(r1, n, p.theta())).abs()
            }
            CurveSegment::Radial { theta } => {
                let (s, c) = theta.sin_cos();
                // distance to the line through the origin with direction (c, s)
                (p.x * s - p.y * c).abs()
            }
            CurveSegment::Chord { .. } => self.project(p).dist(p),
        }
    }
}

/// One closed boundary component. `points[i] -> points[(i+1) % len]` is edge
/// `i`, carried by `curves[i]`. Outer components are counter-clockwise, hole
/// components clockwise.
#[derive(Debug, Clone)]
pub struct BoundaryLoop {
    pub points: Vec<Point2>,
    pub curves: Vec<CurveSegment>,
    pub is_hole: bool,
}

impl BoundaryLoop {
    /// Shoelace signed area (positive for counter-clockwise loops).
    pub fn signed_area(&self) -> f64 {
        let pts = &self.points;
        let mut a = 0.0;
        for i in 0..pts.len() {
            let p = pts[i];
            let q = pts[(i + 1) % pts.len()];
            a += p.x * q.y - q.x * p.y;
        }
        0.5 * a
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// Max total polyline vertices before we refuse to resolve a geometry.
const MAX_POLYLINE_VERTICES: usize = 4_000_000;

/// Tagged closed boundary polylines of `spec` with segment length <= `h`
/// (locally smaller near the composite passages). Vertices lie exactly on the
/// analytic boundary; sector corner points appear exactly.
pub fn boundary_polyline(spec: &DomainSpec, h: f64) -> Result<Vec<BoundaryLoop>> {
    spec.validate()?;
    if !(h > 0.0) {
        return Err(Error::domain(format!("polyline step h must be > 0, got {h}")));
    }
    let loops = match *spec {
        DomainSpec::Disk { radius } => vec![circle_loop(radius, h, false)],
        DomainSpec::Annulus { inner, outer } => vec![
            circle_loop(outer, h, false),
            circle_loop(inner, h, true),
        ],
        DomainSpec::PerturbedDisk { r1, n } => vec![perturbed_loop(r1, n, h)?],
        DomainSpec::Composite { radii, n, eps } => composite_loops(radii, n, eps, h)?,
    };
    let total: usize = loops.iter().map(|l| l.len()).sum();
    if total > MAX_POLYLINE_VERTICES {
        return Err(Error::Resolution(format!(
            "boundary polyline needs {total} vertices at h = {h}; geometry too fine to resolve"
        )));
    }
    Ok(loops)
}

fn circle_loop(radius: f64, h: f64, is_hole: bool) -> BoundaryLoop {
    let n = ((2.0 * PI * radius / h).ceil() as usize).max(16);
    let mut points = Vec::with_capacity(n);
    for i in 0..n {
        let theta = -PI + 2.0 * PI * i as f64 / n as f64;
        points.push(Point2::from_polar(radius, theta));
    }
    if is_hole {
        points.reverse();
    }
    let curves = vec![CurveSegment::Circle { radius }; n];
    BoundaryLoop {
        points,
        curves,
        is_hole,
    }
}

fn perturbed_loop(r1: f64, n: u32, h: f64) -> Result<BoundaryLoop> {
    let angles = sample_polar_piece(
        |theta| perturbed_radius(r1, n, theta),
        -PI,
        PI,
        |_| h,
        wiggle_cap(n),
    );
    let mut points: Vec<Point2> = angles
        .iter()
        .take(angles.len() - 1) // the theta = pi endpoint closes the loop
        .map(|&theta| Point2::from_polar(perturbed_radius(r1, n, theta), theta))
        .collect();
    points.dedup_by(|a, b| a.dist(*b) < 1e-14);
    let curves = vec![CurveSegment::Perturbed { r1, n }; points.len()];
    Ok(BoundaryLoop {
        points,
        curves,
        is_hole: false,
    })
}

/// Angular step cap resolving the cos(n^2 theta) oscillation (8 samples per
/// period).
fn wiggle_cap(n: u32) -> f64 {
    2.0 * PI / (8.0 * (n as f64) * (n as f64))
}

fn composite_loops(radii: RadiiTriple, n: u32, eps: f64, h: f64) -> Result<Vec<BoundaryLoop>> {
    let mut loops = vec![circle_loop(radii.r3, h, false)];
    // fine step near the passages: at least 4 segments across a passage mouth
    let h_fine = h.min(eps * radii.r2 / 4.0);
    if h_fine <= 0.0 || !h_fine.is_finite() {
        return Err(Error::Resolution(format!(
            "cannot resolve passage width with eps = {eps}"
        )));
    }
    let nf = n as f64;
    for k in 0..n {
        let theta_a = 2.0 * PI * k as f64 / nf + eps; // right edge of passage k
        let theta_b = 2.0 * PI * (k + 1) as f64 / nf - eps; // left edge of passage k+1
        debug_assert!(theta_b > theta_a);
        let mut points = Vec::new();
        let mut curves = Vec::new();

        // 1. inner side: along the U_n graph from theta_a to theta_b,
        //    graded fine near the sector corners
        let piece = regrade_polar_piece(
            |theta| perturbed_radius(radii.r1, n, theta),
            theta_a,
            theta_b,
            h,
            h_fine,
            eps,
            wiggle_cap(n),
        );
        for &theta in piece.iter().take(piece.len() - 1) {
            points.push(Point2::from_polar(
                perturbed_radius(radii.r1, n, theta),
                theta,
            ));
            curves.push(CurveSegment::Perturbed { r1: radii.r1, n });
        }

        // 2. radial segment at theta_b from the U_n graph out to r2
        let ru_b = perturbed_radius(radii.r1, n, theta_b);
        append_radial(&mut points, &mut curves, theta_b, ru_b, radii.r2, h_fine);

        // 3. arc of r = r2 from theta_b back to theta_a (clockwise); the
        //    theta_a endpoint opens the next radial piece
        let arc = regrade_polar_piece(
            |_| radii.r2,
            theta_a,
            theta_b,
            h,
            h_fine,
            eps,
            0.25 * (theta_b - theta_a),
        );
        for &theta in arc.iter().rev().take(arc.len() - 1) {
            points.push(Point2::from_polar(radii.r2, theta));
            curves.push(CurveSegment::Circle { radius: radii.r2 });
        }

        // 4. radial segment at theta_a from r2 back down to the U_n graph
        let ru_a = perturbed_radius(radii.r1, n, theta_a);
        append_radial(&mut points, &mut curves, theta_a, radii.r2, ru_a, h_fine);

        loops.push(BoundaryLoop {
            points,
            curves,
            is_hole: true,
        });
    }
    Ok(loops)
}

/// Sample angles on [theta_a, theta_b] for a polar-graph boundary piece so
/// that every chord stays below the local length target and hugs the curve
/// (sagitta at most 2% of the chord). `max_dtheta` additionally caps the
/// angular step so oscillatory graphs are resolved before the chord check
/// can be fooled by aliasing.
fn sample_polar_piece<F: Fn(f64) -> f64, T: Fn(f64) -> f64>(
    radius_at: F,
    theta_a: f64,
    theta_b: f64,
    target: T,
    max_dtheta: f64,
) -> Vec<f64> {
    let point = |theta: f64| Point2::from_polar(radius_at(theta), theta);
    let coarse = (((theta_b - theta_a) / max_dtheta).ceil().max(4.0) as usize).min(2_000_000);
    let mut out: Vec<f64> = (0..=coarse)
        .map(|i| theta_a + (theta_b - theta_a) * i as f64 / coarse as f64)
        .collect();
    let mut i = 0;
    while i + 1 < out.len() {
        let (ta, tb) = (out[i], out[i + 1]);
        let pa = point(ta);
        let pb = point(tb);
        let chord = pa.dist(pb);
        let mid_curve = point(0.5 * (ta + tb));
        let mid_chord = Point2::new(0.5 * (pa.x + pb.x), 0.5 * (pa.y + pb.y));
        let sagitta = mid_curve.dist(mid_chord);
        let too_long = chord > target(ta).min(target(tb));
        let too_curved = sagitta > 0.02 * chord;
        if (too_long || too_curved) && tb - ta > 1e-12 {
            out.insert(i + 1, 0.5 * (ta + tb));
        } else {
            i += 1;
        }
    }
    out
}

/// Grading used by the composite hole loops: fine near the sector corners.
fn regrade_polar_piece<F: Fn(f64) -> f64>(
    radius_at: F,
    theta_a: f64,
    theta_b: f64,
    h: f64,
    h_fine: f64,
    eps: f64,
    max_dtheta: f64,
) -> Vec<f64> {
    let target = move |theta: f64| {
        if (theta - theta_a).min(theta_b - theta) < 2.0 * eps {
            h_fine
        } else {
            h
        }
    };
    sample_polar_piece(radius_at, theta_a, theta_b, target, max_dtheta)
}

fn append_radial(
    points: &mut Vec<Point2>,
    curves: &mut Vec<CurveSegment>,
    theta: f64,
    r_from: f64,
    r_to: f64,
    h_fine: f64,
) {
    let len = (r_to - r_from).abs();
    let steps = ((len / h_fine).ceil() as usize).max(1);
    for i in 0..steps {
        let r = r_from + (r_to - r_from) * i as f64 / steps as f64;
        points.push(Point2::from_polar(r, theta));
        curves.push(CurveSegment::Radial { theta });
    }
    // the endpoint at r_to is the first vertex of the next piece
}

/// Area of the domain. Exact formulas for disk/annulus/perturbed disk;
/// h-refined shoelace for the composite (relative error <= 1e-6).
pub fn area(spec: &DomainSpec) -> Result<f64> {
    spec.validate()?;
    match *spec {
        DomainSpec::Disk { radius } => Ok(PI * radius * radius),
        DomainSpec::Annulus { inner, outer } => Ok(PI * (outer * outer - inner * inner)),
        DomainSpec::PerturbedDisk { r1, n } => {
            // mean of (1 + cos(n^2 t)/n)^2 over a period is 1 + 1/(2 n^2)
            let nf = n as f64;
            Ok(PI * r1 * r1 * (1.0 + 0.5 / (nf * nf)))
        }
        DomainSpec::Composite { .. } => {
            let mut h = 0.05 * spec.outer_radius();
            let mut prev = polyline_area(spec, h)?;
            for _ in 0..10 {
                h *= 0.5;
                let cur = polyline_area(spec, h)?;
                let est = (cur - prev).abs() / 3.0; // O(h^2) refinement estimate
                if est <= 0.5e-6 * cur.abs() {
                    // Richardson extrapolation of the inscribed-polygon areas
                    return Ok(cur + (cur - prev) / 3.0);
                }
                prev = cur;
            }
            Err(Error::NoConvergence {
                iterations: 10,
                context: "composite area h-refinement".to_string(),
            })
        }
    }
}

fn polyline_area(spec: &DomainSpec, h: f64) -> Result<f64> {
    Ok(boundary_polyline(spec, h)?
        .iter()
        .map(|l| l.signed_area())
        .sum())
}

/// Writes polylines as plain text: one `x y tag` line per vertex, blank line
/// between components.
pub fn write_polylines<W: std::io::Write>(loops: &[BoundaryLoop], mut w: W) -> Result<()> {
    for (i, l) in loops.iter().enumerate() {
        if i > 0 {
            writeln!(w)?;
        }
        let tag = if l.is_hole { "hole" } else { "outer" };
        for p in &l.points {
            writeln!(w, "{:.17e} {:.17e} {}", p.x, p.y, tag)?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests;
