//! Mesh quality statistics.

use super::Mesh;
use crate::geometry::{contains, perturbed_radius, DomainSpec, Point2};

/// Per-region triangle counts for composite domains, classified by centroid.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RegionCounts {
    /// Centroid inside the perturbed disk `U_n`.
    pub inner: usize,
    /// Centroid in the open annulus `r2 < r < r3`.
    pub annulus: usize,
    /// Everything else (the sector passages between `U_n` and the annulus).
    pub passages: usize,
}

#[derive(Debug, Clone)]
pub struct QualityReport {
    pub vertex_count: usize,
    pub triangle_count: usize,
    pub boundary_edge_count: usize,
    /// Minimum angle over all triangles (degrees).
    pub min_angle_deg: f64,
    /// Minimum angle excluding triangles touching an input corner vertex.
    pub min_angle_off_corners_deg: f64,
    pub max_angle_deg: f64,
    pub min_edge: f64,
    pub max_edge: f64,
    /// Histogram of edge lengths over [min_edge, max_edge] in 12 bins.
    pub edge_histogram: [usize; 12],
    pub boundary_length: f64,
    pub area: f64,
    pub regions: Option<RegionCounts>,
}

impl QualityReport {
    pub fn summary(&self) -> String {
        format!(
            "{} vertices, {} triangles, {} boundary edges; angles [{:.2}, {:.2}] deg \
             (off-corner min {:.2}); edges [{:.3e}, {:.3e}]; boundary length {:.6}; area {:.6}",
            self.vertex_count,
            self.triangle_count,
            self.boundary_edge_count,
            self.min_angle_deg,
            self.max_angle_deg,
            self.min_angle_off_corners_deg,
            self.min_edge,
            self.max_edge,
            self.boundary_length,
            self.area
        )
    }
}

/// Angle, edge and area statistics; pass the generating spec to obtain
/// per-region counts for composite domains.
pub fn quality_report(mesh: &Mesh, spec: Option<&DomainSpec>) -> QualityReport {
    let corner: Vec<bool> = {
        let mut c = vec![false; mesh.vertices.len()];
        for &v in &mesh.corner_vertices {
            c[v] = true;
        }
        c
    };
    let mut min_angle = f64::INFINITY;
    let mut min_angle_off = f64::INFINITY;
    let mut max_angle: f64 = 0.0;
    let mut min_edge = f64::INFINITY;
    let mut max_edge: f64 = 0.0;
    let mut lengths: Vec<f64> = Vec::with_capacity(mesh.triangles.len() * 3);
    for tri in &mesh.triangles {
        let pts = [
            mesh.vertices[tri[0]],
            mesh.vertices[tri[1]],
            mesh.vertices[tri[2]],
        ];
        let touches_corner = tri.iter().any(|&v| corner[v]);
        for i in 0..3 {
            let a = pts[i];
            let b = pts[(i + 1) % 3];
            let c = pts[(i + 2) % 3];
            let v1 = Point2::new(b.x - a.x, b.y - a.y);
            let v2 = Point2::new(c.x - a.x, c.y - a.y);
            let dot = v1.x * v2.x + v1.y * v2.y;
            let cross = (v1.x * v2.y - v1.y * v2.x).abs();
            let ang = cross.atan2(dot).to_degrees();
            min_angle = min_angle.min(ang);
            if !touches_corner {
                min_angle_off = min_angle_off.min(ang);
            }
            max_angle = max_angle.max(ang);
            if tri[i] < tri[(i + 1) % 3] {
                let l = a.dist(b);
                lengths.push(l);
                min_edge = min_edge.min(l);
                max_edge = max_edge.max(l);
            }
        }
    }
    let mut edge_histogram = [0usize; 12];
    if max_edge > min_edge {
        for &l in &lengths {
            let bin = (((l - min_edge) / (max_edge - min_edge)) * 12.0).floor() as usize;
            edge_histogram[bin.min(11)] += 1;
        }
    } else {
        edge_histogram[0] = lengths.len();
    }
    let regions = spec.and_then(|sp| match sp {
        DomainSpec::Composite { radii, n, .. } => {
            let mut rc = RegionCounts {
                inner: 0,
                annulus: 0,
                passages: 0,
            };
            for t in 0..mesh.triangles.len() {
                let c = mesh.centroid(t);
                let r = c.r();
                if r < perturbed_radius(radii.r1, *n, c.theta()) {
                    rc.inner += 1;
                } else if radii.r2 < r && r < radii.r3 {
                    rc.annulus += 1;
                } else {
                    rc.passages += 1;
                }
            }
            Some(rc)
        }
        _ => None,
    });
    // make sure classification matches the analytic domain when provided
    debug_assert!(spec.map_or(true, |sp| {
        (0..mesh.triangles.len()).all(|t| contains(sp, mesh.centroid(t)))
    }));
    QualityReport {
        vertex_count: mesh.vertices.len(),
        triangle_count: mesh.triangles.len(),
        boundary_edge_count: mesh.boundary_edges.len(),
        min_angle_deg: min_angle,
        min_angle_off_corners_deg: min_angle_off,
        max_angle_deg: max_angle,
        min_edge,
        max_edge,
        edge_histogram,
        boundary_length: mesh.boundary_length(),
        area: mesh.area(),
        regions,
    }
}
