//! Conforming triangulations of the analytic domains.
//!
//! The generator feeds the tagged boundary polylines into a constrained
//! Delaunay triangulation refined to a 25 degree angle bound and a uniform
//! area cap (so the maximum edge length stays below `2 h`). Vertices inserted
//! on constraint chords during refinement are snapped back onto the analytic
//! curves afterwards; the polylines are flat enough (sagitta at most 2% of a
//! chord) that snapping cannot invert elements. Sector corner vertices are
//! kept exactly and recorded, because the angle guarantee does not apply to
//! the one ring around a small input angle.

mod io;
mod locate;
mod quality;

pub use io::{read_mesh, write_mesh};
pub use locate::TriangleLocator;
pub use quality::{quality_report, QualityReport, RegionCounts};

use crate::error::{Error, Result};
use crate::geometry::{boundary_polyline, contains, BoundaryLoop, CurveSegment, DomainSpec, Point2};
use spade::{
    AngleLimit, ConstrainedDelaunayTriangulation, Point2 as SpadePoint, RefinementParameters,
    Triangulation,
};
use std::collections::HashMap;

/// The single boundary tag: every boundary edge carries the outer (Robin or
/// Dirichlet) condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundaryTag {
    Outer,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundaryEdge {
    pub a: usize,
    pub b: usize,
    pub tag: BoundaryTag,
}

/// A conforming triangulation with tagged boundary edges.
#[derive(Debug, Clone)]
pub struct Mesh {
    pub vertices: Vec<Point2>,
    /// Counter-clockwise vertex index triples.
    pub triangles: Vec<[usize; 3]>,
    pub boundary_edges: Vec<BoundaryEdge>,
    /// Requested sizing; edges are at most `2 h_target`.
    pub h_target: f64,
    /// Analytic curve supporting each boundary edge; `None` for meshes read
    /// back from a file.
    pub boundary_curves: Vec<Option<CurveSegment>>,
    /// Vertices at input corners (where two different curves meet); the angle
    /// guarantee is waived one ring around them.
    pub corner_vertices: Vec<usize>,
}

impl Mesh {
    pub fn triangle_area(&self, t: usize) -> f64 {
        let [a, b, c] = self.triangles[t];
        signed_area(self.vertices[a], self.vertices[b], self.vertices[c])
    }

    pub fn area(&self) -> f64 {
        (0..self.triangles.len()).map(|t| self.triangle_area(t)).sum()
    }

    pub fn centroid(&self, t: usize) -> Point2 {
        let [a, b, c] = self.triangles[t];
        Point2::new(
            (self.vertices[a].x + self.vertices[b].x + self.vertices[c].x) / 3.0,
            (self.vertices[a].y + self.vertices[b].y + self.vertices[c].y) / 3.0,
        )
    }

    pub fn boundary_length(&self) -> f64 {
        self.boundary_edges
            .iter()
            .map(|e| self.vertices[e.a].dist(self.vertices[e.b]))
            .sum()
    }

    /// Marks vertices incident to at least one boundary edge.
    pub fn boundary_vertex_flags(&self) -> Vec<bool> {
        let mut on = vec![false; self.vertices.len()];
        for e in &self.boundary_edges {
            on[e.a] = true;
            on[e.b] = true;
        }
        on
    }

    /// Structural invariants: positive areas, conformity (interior edges in
    /// exactly two triangles, boundary edges in exactly one), boundary
    /// vertices on their analytic curves when the curves are known.
    pub fn validate(&self) -> Result<()> {
        let nv = self.vertices.len();
        let mut edge_count: HashMap<(usize, usize), u8> = HashMap::new();
        for (t, tri) in self.triangles.iter().enumerate() {
            if self.triangle_area(t) <= 0.0 {
                return Err(Error::InvalidMesh(format!(
                    "triangle {t} has non-positive area {}",
                    self.triangle_area(t)
                )));
            }
            for i in 0..3 {
                let (a, b) = (tri[i], tri[(i + 1) % 3]);
                if a >= nv || b >= nv {
                    return Err(Error::InvalidMesh(format!(
                        "triangle {t} references a vertex out of range"
                    )));
                }
                *edge_count.entry(key(a, b)).or_insert(0) += 1;
            }
        }
        let boundary_set: std::collections::HashSet<(usize, usize)> =
            self.boundary_edges.iter().map(|e| key(e.a, e.b)).collect();
        for (&e, &c) in &edge_count {
            let is_boundary = boundary_set.contains(&e);
            if is_boundary && c != 1 {
                return Err(Error::InvalidMesh(format!(
                    "boundary edge {e:?} belongs to {c} triangles"
                )));
            }
            if !is_boundary && c != 2 {
                return Err(Error::InvalidMesh(format!(
                    "interior edge {e:?} belongs to {c} triangles (hanging vertex?)"
                )));
            }
        }
        for (i, e) in self.boundary_edges.iter().enumerate() {
            if let Some(curve) = self.boundary_curves.get(i).copied().flatten() {
                for v in [e.a, e.b] {
                    let res = curve.residual(self.vertices[v]);
                    if res > 1e-10 {
                        return Err(Error::InvalidMesh(format!(
                            "boundary vertex {v} off its analytic curve by {res:e}"
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

pub(crate) fn key(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

pub(crate) fn signed_area(a: Point2, b: Point2, c: Point2) -> f64 {
    0.5 * ((b.x - a.x) * (c.y - a.y) - (c.x - a.x) * (b.y - a.y))
}

/// Triangulates a domain described by a [`DomainSpec`].
pub fn triangulate(spec: &DomainSpec, h: f64) -> Result<Mesh> {
    spec.validate()?;
    if !(h > 0.0) {
        return Err(Error::domain(format!("mesh size h must be > 0, got {h}")));
    }
    let loops = boundary_polyline(spec, h)?;
    triangulate_loops(&loops, h, Some(spec))
}

/// Triangulates the region bounded by explicit closed polylines (outer loops
/// counter-clockwise, holes clockwise). Used directly for polygonal domains
/// such as squares.
pub fn triangulate_pslg(loops: &[BoundaryLoop], h: f64) -> Result<Mesh> {
    if !(h > 0.0) {
        return Err(Error::domain(format!("mesh size h must be > 0, got {h}")));
    }
    triangulate_loops(loops, h, None)
}

fn triangulate_loops(loops: &[BoundaryLoop], h: f64, spec: Option<&DomainSpec>) -> Result<Mesh> {
    let mut cdt: ConstrainedDelaunayTriangulation<SpadePoint<f64>> =
        ConstrainedDelaunayTriangulation::new();

    // input chords, for locating refinement-split vertices afterwards
    let mut seg_points: Vec<(Point2, Point2)> = Vec::new();
    let mut seg_curves: Vec<CurveSegment> = Vec::new();
    let mut corner_points: Vec<Point2> = Vec::new();
    for l in loops {
        if l.len() < 3 {
            return Err(Error::InvalidMesh(
                "boundary loop with fewer than 3 vertices".into(),
            ));
        }
        let mut hs = Vec::with_capacity(l.len());
        for (i, p) in l.points.iter().enumerate() {
            let hdl = cdt
                .insert(SpadePoint::new(p.x, p.y))
                .map_err(|e| Error::InvalidMesh(format!("vertex insertion failed: {e:?}")))?;
            hs.push(hdl);
            let prev = (i + l.len() - 1) % l.len();
            if l.curves[prev] != l.curves[i] {
                corner_points.push(*p);
            }
        }
        for i in 0..l.len() {
            let j = (i + 1) % l.len();
            seg_points.push((l.points[i], l.points[j]));
            seg_curves.push(l.curves[i]);
            if hs[i] != hs[j] {
                cdt.add_constraint(hs[i], hs[j]);
            }
        }
    }
    let n_input_vertices = cdt.num_vertices();

    let params = RefinementParameters::<f64>::new()
        .exclude_outer_faces(true)
        .with_angle_limit(AngleLimit::from_deg(25.0))
        .with_max_allowed_area(0.364 * h * h)
        .with_max_additional_vertices(6_000_000);
    let outcome = cdt.refine(params);
    if !outcome.refinement_complete && cdt.num_vertices() > 5_500_000 {
        return Err(Error::Resolution(format!(
            "refinement exhausted its vertex budget at h = {h}"
        )));
    }
    let excluded: std::collections::HashSet<_> = outcome.excluded_faces.iter().copied().collect();

    // vertex coordinates by spade handle index
    let mut coords = vec![Point2::new(f64::NAN, f64::NAN); cdt.num_vertices()];
    for v in cdt.vertices() {
        let p = v.position();
        coords[v.fix().index()] = Point2::new(p.x, p.y);
    }

    // keep inner faces (holes and the outside are excluded by spade); when a
    // spec is available require centroids inside the analytic domain as well
    let mut tris_raw: Vec<[usize; 3]> = Vec::new();
    for f in cdt.inner_faces() {
        if excluded.contains(&f.fix()) {
            continue;
        }
        let vs = f.vertices();
        let idx = [
            vs[0].fix().index(),
            vs[1].fix().index(),
            vs[2].fix().index(),
        ];
        if let Some(sp) = spec {
            let c = Point2::new(
                (coords[idx[0]].x + coords[idx[1]].x + coords[idx[2]].x) / 3.0,
                (coords[idx[0]].y + coords[idx[1]].y + coords[idx[2]].y) / 3.0,
            );
            if !contains(sp, c) {
                continue;
            }
        }
        tris_raw.push(idx);
    }
    if tris_raw.is_empty() {
        return Err(Error::DegenerateGeometry(
            "triangulation produced no interior faces".into(),
        ));
    }

    // compact vertex numbering in first-use order (deterministic)
    let mut remap: Vec<usize> = vec![usize::MAX; coords.len()];
    let mut vertices: Vec<Point2> = Vec::new();
    let mut inserted_flag: Vec<bool> = Vec::new();
    let mut triangles: Vec<[usize; 3]> = Vec::with_capacity(tris_raw.len());
    for tri in &tris_raw {
        let mut t = [0usize; 3];
        for (slot, &old) in t.iter_mut().zip(tri.iter()) {
            if remap[old] == usize::MAX {
                remap[old] = vertices.len();
                vertices.push(coords[old]);
                inserted_flag.push(old >= n_input_vertices);
            }
            *slot = remap[old];
        }
        if signed_area(vertices[t[0]], vertices[t[1]], vertices[t[2]]) < 0.0 {
            t.swap(1, 2);
        }
        triangles.push(t);
    }

    // boundary edges: undirected edges used by exactly one kept triangle
    let mut edge_count: HashMap<(usize, usize), u8> = HashMap::new();
    for tri in &triangles {
        for i in 0..3 {
            *edge_count.entry(key(tri[i], tri[(i + 1) % 3])).or_insert(0) += 1;
        }
    }
    let mut boundary_pairs: Vec<(usize, usize)> = Vec::new();
    for tri in &triangles {
        for i in 0..3 {
            let e = key(tri[i], tri[(i + 1) % 3]);
            if edge_count[&e] == 1 {
                boundary_pairs.push(e);
            }
        }
    }
    boundary_pairs.sort_unstable();
    boundary_pairs.dedup();

    // match boundary edges with input chords; snap split vertices onto the
    // analytic curves (safe: polyline sagitta <= 2% of a chord, far below
    // the minimum triangle height at a 25 degree angle bound)
    let grid = SegmentGrid::new(&seg_points, h.max(1e-12));
    let mut boundary_curves: Vec<Option<CurveSegment>> = Vec::with_capacity(boundary_pairs.len());
    let mut snapped = vec![false; vertices.len()];
    for &(a, b) in &boundary_pairs {
        let mid = Point2::new(
            0.5 * (vertices[a].x + vertices[b].x),
            0.5 * (vertices[a].y + vertices[b].y),
        );
        let curve = grid.nearest(mid).map(|s| seg_curves[s]);
        boundary_curves.push(curve);
        if let Some(c) = curve {
            for v in [a, b] {
                if inserted_flag[v] && !snapped[v] {
                    vertices[v] = c.project(vertices[v]);
                    snapped[v] = true;
                }
            }
        }
    }

    let boundary_edges: Vec<BoundaryEdge> = boundary_pairs
        .iter()
        .map(|&(a, b)| BoundaryEdge {
            a,
            b,
            tag: BoundaryTag::Outer,
        })
        .collect();

    // corner vertices after compaction (input vertices keep exact coordinates)
    let corner_set: std::collections::HashSet<(u64, u64)> = corner_points
        .iter()
        .map(|p| (p.x.to_bits(), p.y.to_bits()))
        .collect();
    let mut corner_vertices: Vec<usize> = vertices
        .iter()
        .enumerate()
        .filter(|(_, p)| corner_set.contains(&(p.x.to_bits(), p.y.to_bits())))
        .map(|(i, _)| i)
        .collect();
    corner_vertices.sort_unstable();

    let mesh = Mesh {
        vertices,
        triangles,
        boundary_edges,
        h_target: h,
        boundary_curves,
        corner_vertices,
    };
    mesh.validate()?;
    Ok(mesh)
}

/// Uniform (red) refinement: each triangle splits into four; boundary
/// midpoints are projected onto their analytic curves.
pub fn refine(mesh: &Mesh) -> Mesh {
    let mut vertices = mesh.vertices.clone();
    let mut midpoint: HashMap<(usize, usize), usize> = HashMap::new();
    let mut curve_of: HashMap<(usize, usize), CurveSegment> = HashMap::new();
    for (i, e) in mesh.boundary_edges.iter().enumerate() {
        if let Some(c) = mesh.boundary_curves.get(i).copied().flatten() {
            curve_of.insert(key(e.a, e.b), c);
        }
    }
    let mut get_mid = |a: usize, b: usize, vertices: &mut Vec<Point2>| -> usize {
        let k = key(a, b);
        if let Some(&m) = midpoint.get(&k) {
            return m;
        }
        let mut p = Point2::new(
            0.5 * (vertices[a].x + vertices[b].x),
            0.5 * (vertices[a].y + vertices[b].y),
        );
        if let Some(c) = curve_of.get(&k) {
            p = c.project(p);
        }
        let m = vertices.len();
        vertices.push(p);
        midpoint.insert(k, m);
        m
    };
    let mut triangles = Vec::with_capacity(4 * mesh.triangles.len());
    for tri in &mesh.triangles {
        let [a, b, c] = *tri;
        let ab = get_mid(a, b, &mut vertices);
        let bc = get_mid(b, c, &mut vertices);
        let ca = get_mid(c, a, &mut vertices);
        triangles.push([a, ab, ca]);
        triangles.push([b, bc, ab]);
        triangles.push([c, ca, bc]);
        triangles.push([ab, bc, ca]);
    }
    let mut boundary_edges = Vec::with_capacity(2 * mesh.boundary_edges.len());
    let mut boundary_curves = Vec::with_capacity(2 * mesh.boundary_edges.len());
    for (i, e) in mesh.boundary_edges.iter().enumerate() {
        let m = midpoint[&key(e.a, e.b)];
        boundary_edges.push(BoundaryEdge {
            a: e.a,
            b: m,
            tag: e.tag,
        });
        boundary_edges.push(BoundaryEdge {
            a: m,
            b: e.b,
            tag: e.tag,
        });
        let c = mesh.boundary_curves.get(i).copied().flatten();
        boundary_curves.push(c);
        boundary_curves.push(c);
    }
    Mesh {
        vertices,
        triangles,
        boundary_edges,
        h_target: 0.5 * mesh.h_target,
        boundary_curves,
        corner_vertices: mesh.corner_vertices.clone(),
    }
}

/// Bucketed nearest-segment lookup used to match refinement-split vertices
/// with the input constraint chords they subdivide.
struct SegmentGrid {
    segments: Vec<(Point2, Point2)>,
    cell: f64,
    min: Point2,
    nx: usize,
    ny: usize,
    buckets: Vec<Vec<u32>>,
}

impl SegmentGrid {
    fn new(segments: &[(Point2, Point2)], cell_hint: f64) -> Self {
        let mut min = Point2::new(f64::INFINITY, f64::INFINITY);
        let mut max = Point2::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
        let mut max_len = 1e-12_f64;
        for (a, b) in segments {
            for p in [a, b] {
                min.x = min.x.min(p.x);
                min.y = min.y.min(p.y);
                max.x = max.x.max(p.x);
                max.y = max.y.max(p.y);
            }
            max_len = max_len.max(a.dist(*b));
        }
        let cell = cell_hint.max(max_len);
        let nx = (((max.x - min.x) / cell).ceil() as usize + 2).max(1);
        let ny = (((max.y - min.y) / cell).ceil() as usize + 2).max(1);
        let mut buckets = vec![Vec::new(); nx * ny];
        for (i, (a, b)) in segments.iter().enumerate() {
            let (x0, x1) = (
                ((a.x.min(b.x) - min.x) / cell).floor() as usize,
                (((a.x.max(b.x) - min.x) / cell).floor() as usize).min(nx - 1),
            );
            let (y0, y1) = (
                ((a.y.min(b.y) - min.y) / cell).floor() as usize,
                (((a.y.max(b.y) - min.y) / cell).floor() as usize).min(ny - 1),
            );
            for cx in x0..=x1 {
                for cy in y0..=y1 {
                    buckets[cy * nx + cx].push(i as u32);
                }
            }
        }
        SegmentGrid {
            segments: segments.to_vec(),
            cell,
            min,
            nx,
            ny,
            buckets,
        }
    }

    fn nearest(&self, p: Point2) -> Option<usize> {
        let cx = (((p.x - self.min.x) / self.cell).floor() as isize).clamp(0, self.nx as isize - 1);
        let cy = (((p.y - self.min.y) / self.cell).floor() as isize).clamp(0, self.ny as isize - 1);
        let mut best = None;
        let mut best_d = f64::INFINITY;
        for dx in -1..=1_isize {
            for dy in -1..=1_isize {
                let (ix, iy) = (cx + dx, cy + dy);
                if ix < 0 || iy < 0 || ix >= self.nx as isize || iy >= self.ny as isize {
                    continue;
                }
                for &s in &self.buckets[iy as usize * self.nx + ix as usize] {
                    let (a, b) = self.segments[s as usize];
                    let d = point_segment_distance(p, a, b);
                    if d < best_d {
                        best_d = d;
                        best = Some(s as usize);
                    }
                }
            }
        }
        best
    }
}

pub(crate) fn point_segment_distance(p: Point2, a: Point2, b: Point2) -> f64 {
    let (dx, dy) = (b.x - a.x, b.y - a.y);
    let len2 = dx * dx + dy * dy;
    if len2 == 0.0 {
        return p.dist(a);
    }
    let t = (((p.x - a.x) * dx + (p.y - a.y) * dy) / len2).clamp(0.0, 1.0);
    p.dist(Point2::new(a.x + t * dx, a.y + t * dy))
}

/// A closed axis-aligned rectangle as a single outer loop, for polygonal
/// test domains.
pub fn rectangle_loop(x0: f64, y0: f64, x1: f64, y1: f64, h: f64) -> BoundaryLoop {
    let corners = [
        Point2::new(x0, y0),
        Point2::new(x1, y0),
        Point2::new(x1, y1),
        Point2::new(x0, y1),
    ];
    let mut points = Vec::new();
    let mut curves = Vec::new();
    for s in 0..4 {
        let a = corners[s];
        let b = corners[(s + 1) % 4];
        let chord = CurveSegment::Chord {
            ax: a.x,
            ay: a.y,
            bx: b.x,
            by: b.y,
        };
        let nseg = ((a.dist(b) / h).ceil() as usize).max(1);
        for i in 0..nseg {
            let t = i as f64 / nseg as f64;
            points.push(Point2::new(a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)));
            curves.push(chord);
        }
    }
    BoundaryLoop {
        points,
        curves,
        is_hole: false,
    }
}
