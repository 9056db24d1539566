//! Plain-text mesh format.
//!
//! ```text
//! V T B
//! x y          (V vertex lines; shortest round-trip float formatting)
//! i j k        (T triangle lines)
//! i j outer    (B boundary-edge lines)
//! ```
//!
//! The float formatting guarantees a bit-exact round trip.

use super::{BoundaryEdge, BoundaryTag, Mesh};
use crate::error::{Error, Result};
use crate::geometry::Point2;
use std::io::{BufRead, Write};

pub fn write_mesh<W: Write>(mesh: &Mesh, mut w: W) -> Result<()> {
    writeln!(
        w,
        "{} {} {}",
        mesh.vertices.len(),
        mesh.triangles.len(),
        mesh.boundary_edges.len()
    )?;
    for p in &mesh.vertices {
        writeln!(w, "{:?} {:?}", p.x, p.y)?;
    }
    for t in &mesh.triangles {
        writeln!(w, "{} {} {}", t[0], t[1], t[2])?;
    }
    for e in &mesh.boundary_edges {
        writeln!(w, "{} {} outer", e.a, e.b)?;
    }
    Ok(())
}

pub fn read_mesh<R: BufRead>(r: R) -> Result<Mesh> {
    let mut lines = r.lines();
    let header = lines
        .next()
        .ok_or_else(|| Error::InvalidMesh("empty mesh file".into()))??;
    let counts: Vec<usize> = header
        .split_whitespace()
        .map(|s| s.parse::<usize>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|e| Error::InvalidMesh(format!("bad header '{header}': {e}")))?;
    if counts.len() != 3 {
        return Err(Error::InvalidMesh(format!("header must be 'V T B', got '{header}'")));
    }
    let (nv, nt, nb) = (counts[0], counts[1], counts[2]);
    let mut vertices = Vec::with_capacity(nv);
    let mut triangles = Vec::with_capacity(nt);
    let mut boundary_edges = Vec::with_capacity(nb);
    for i in 0..nv {
        let line = lines
            .next()
            .ok_or_else(|| Error::InvalidMesh(format!("missing vertex line {i}")))??;
        let mut it = line.split_whitespace();
        let x: f64 = parse_field(it.next(), "x", i)?;
        let y: f64 = parse_field(it.next(), "y", i)?;
        vertices.push(Point2::new(x, y));
    }
    for i in 0..nt {
        let line = lines
            .next()
            .ok_or_else(|| Error::InvalidMesh(format!("missing triangle line {i}")))??;
        let mut it = line.split_whitespace();
        let a: usize = parse_field(it.next(), "i", i)?;
        let b: usize = parse_field(it.next(), "j", i)?;
        let c: usize = parse_field(it.next(), "k", i)?;
        triangles.push([a, b, c]);
    }
    for i in 0..nb {
        let line = lines
            .next()
            .ok_or_else(|| Error::InvalidMesh(format!("missing boundary line {i}")))??;
        let mut it = line.split_whitespace();
        let a: usize = parse_field(it.next(), "i", i)?;
        let b: usize = parse_field(it.next(), "j", i)?;
        let tag = it
            .next()
            .ok_or_else(|| Error::InvalidMesh(format!("missing tag on boundary line {i}")))?;
        if tag != "outer" {
            return Err(Error::InvalidMesh(format!("unknown boundary tag '{tag}'")));
        }
        boundary_edges.push(BoundaryEdge {
            a,
            b,
            tag: BoundaryTag::Outer,
        });
    }
    // sizing estimate: mean boundary edge length
    let h_target = if boundary_edges.is_empty() {
        1.0
    } else {
        boundary_edges
            .iter()
            .map(|e| vertices[e.a].dist(vertices[e.b]))
            .sum::<f64>()
            / boundary_edges.len() as f64
    };
    let nbe = boundary_edges.len();
    let mesh = Mesh {
        vertices,
        triangles,
        boundary_edges,
        h_target,
        boundary_curves: vec![None; nbe],
        corner_vertices: Vec::new(),
    };
    mesh.validate()?;
    Ok(mesh)
}

fn parse_field<T: std::str::FromStr>(field: Option<&str>, name: &str, line: usize) -> Result<T>
where
    T::Err: std::fmt::Display,
{
    field
        .ok_or_else(|| Error::InvalidMesh(format!("missing {name} on line {line}")))?
        .parse::<T>()
        .map_err(|e| Error::InvalidMesh(format!("bad {name} on line {line}: {e}")))
}
