//! Point location: uniform-grid bucketing of triangles with barycentric
//! membership tests.

use super::Mesh;
use crate::geometry::Point2;

pub struct TriangleLocator {
    min: Point2,
    cell: f64,
    nx: usize,
    ny: usize,
    buckets: Vec<Vec<u32>>,
}

impl TriangleLocator {
    pub fn new(mesh: &Mesh) -> Self {
        let mut min = Point2::new(f64::INFINITY, f64::INFINITY);
        let mut max = Point2::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
        for p in &mesh.vertices {
            min.x = min.x.min(p.x);
            min.y = min.y.min(p.y);
            max.x = max.x.max(p.x);
            max.y = max.y.max(p.y);
        }
        // aim at O(1) triangles per cell
        let target_cells = (mesh.triangles.len() as f64).max(1.0);
        let span = ((max.x - min.x) * (max.y - min.y)).max(1e-300);
        let cell = (span / target_cells).sqrt().max(1e-12);
        let nx = (((max.x - min.x) / cell).ceil() as usize + 1).max(1);
        let ny = (((max.y - min.y) / cell).ceil() as usize + 1).max(1);
        let mut buckets = vec![Vec::new(); nx * ny];
        for (t, tri) in mesh.triangles.iter().enumerate() {
            let (mut x0, mut y0) = (f64::INFINITY, f64::INFINITY);
            let (mut x1, mut y1) = (f64::NEG_INFINITY, f64::NEG_INFINITY);
            for &v in tri {
                let p = mesh.vertices[v];
                x0 = x0.min(p.x);
                y0 = y0.min(p.y);
                x1 = x1.max(p.x);
                y1 = y1.max(p.y);
            }
            let cx0 = (((x0 - min.x) / cell).floor() as usize).min(nx - 1);
            let cx1 = (((x1 - min.x) / cell).floor() as usize).min(nx - 1);
            let cy0 = (((y0 - min.y) / cell).floor() as usize).min(ny - 1);
            let cy1 = (((y1 - min.y) / cell).floor() as usize).min(ny - 1);
            for cx in cx0..=cx1 {
                for cy in cy0..=cy1 {
                    buckets[cy * nx + cx].push(t as u32);
                }
            }
        }
        TriangleLocator {
            min,
            cell,
            nx,
            ny,
            buckets,
        }
    }

    /// Containing triangle and barycentric coordinates of `p`, if any.
    /// Points on shared edges resolve to the first triangle in bucket order,
    /// with a small tolerance so boundary points are not lost.
    pub fn locate(&self, mesh: &Mesh, p: Point2) -> Option<(usize, [f64; 3])> {
        let cx = ((p.x - self.min.x) / self.cell).floor() as isize;
        let cy = ((p.y - self.min.y) / self.cell).floor() as isize;
        if cx < 0 || cy < 0 || cx >= self.nx as isize || cy >= self.ny as isize {
            return None;
        }
        let bucket = &self.buckets[cy as usize * self.nx + cx as usize];
        let mut best: Option<(usize, [f64; 3], f64)> = None;
        for &t in bucket {
            let tri = mesh.triangles[t as usize];
            let (a, b, c) = (
                mesh.vertices[tri[0]],
                mesh.vertices[tri[1]],
                mesh.vertices[tri[2]],
            );
            let det = (b.x - a.x) * (c.y - a.y) - (c.x - a.x) * (b.y - a.y);
            if det == 0.0 {
                continue;
            }
            let l1 = ((b.x - p.x) * (c.y - p.y) - (c.x - p.x) * (b.y - p.y)) / det;
            let l2 = ((c.x - p.x) * (a.y - p.y) - (a.x - p.x) * (c.y - p.y)) / det;
            let l3 = 1.0 - l1 - l2;
            let worst = l1.min(l2).min(l3);
            if worst >= 0.0 {
                return Some((t as usize, [l1, l2, l3]));
            }
            if best.map_or(true, |(_, _, w)| worst > w) {
                best = Some((t as usize, [l1, l2, l3], worst));
            }
        }
        // tolerate round-off for points on edges/boundary
        match best {
            Some((t, l, w)) if w >= -1e-10 => Some((t, l)),
            _ => None,
        }
    }
}
