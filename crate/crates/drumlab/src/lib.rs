//! Numerical laboratory for planar Laplace eigenproblems.
//!
//! The crate builds a family of multiply connected planar domains (a perturbed
//! disk joined to a concentric annulus through `n` narrow sector passages),
//! solves the Robin/Dirichlet eigenproblem on them with linear finite
//! elements, and measures the geometry of the second eigenfunction's nodal
//! set: whether it stays away from the boundary, how its radial levels
//! concentrate around a computable radius, and how its length behaves as the
//! number of passages grows.
//!
//! Module layout:
//!
//! * [`special`] — Bessel functions `J_m`, `Y_m` with derivatives, and a
//!   bracketed root finder. Everything analytic rests on these.
//! * [`geometry`] — domain descriptions ([`geometry::DomainSpec`]), membership
//!   tests, boundary polylines, areas.
//! * [`spectra`] — transcendental-equation spectra of disks and annuli under
//!   Dirichlet/Robin conditions, and the radii selection solve that places the
//!   annulus eigenvalue inside the disk's spectral gap.
//! * [`mesh`] — constrained Delaunay triangulation with quality refinement,
//!   boundary tags, uniform refinement, plain-text mesh I/O.
//! * [`fem`] — P1 stiffness/mass/boundary-mass assembly and a shift-invert
//!   block Lanczos solver for the generalized eigenproblem.
//! * [`nodal`] — nodal-set extraction and the derived diagnostics (radial
//!   interval, clipped length, sup-norm ratios, symmetry defect, interior
//!   verdict, mass diagnostics).
//! * [`experiments`] — orchestration: the `(n, eps(n))` sweep, beta sweeps,
//!   CSV/SVG report emission, and the TOML run configuration.
//!
//! Runnable demonstrations of each capability live under `examples/`; the
//! `drumlab` binary exposes the same entry points as subcommands.

pub mod error;
pub mod experiments;
pub mod fem;
pub mod geometry;
pub mod mesh;
pub mod nodal;
pub mod special;
pub mod spectra;

pub use error::{Error, Result};
