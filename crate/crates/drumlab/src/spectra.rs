//! Transcendental-equation spectra of disks and annuli under Dirichlet and
//! Robin boundary conditions, plus the radii selection solve that places the
//! first annulus eigenvalue exactly midway inside the spectral gap
//! `(lambda_1(B_{R1}), lambda_2(B_{R1}))` of the inner disk.
//!
//! Separation of variables reduces everything to roots in `k` (eigenvalue
//! `k^2`) of:
//!
//! * disk, Dirichlet: `J_m(kR) = 0`
//! * disk, Robin:     `k J_m'(kR) + beta J_m(kR) = 0`
//! * annulus:         2x2 determinant of the boundary rows applied to
//!   `a J_m(kr) + b Y_m(kr)` (outward normal is `-d/dr` at the inner circle).
//!
//! Roots are bracketed on a uniform `k` grid and polished by Brent's method
//! to 1e-12 in `k`, which keeps eigenvalues accurate to about 1e-10 at desk
//! scales.

use crate::error::{Error, Result};
use crate::geometry::RadiiTriple;
use crate::special::{self, find_root, Bracket};

/// Boundary condition for the Laplace eigenproblem. `Robin { beta: 0.0 }` is
/// the Neumann problem.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BoundaryCondition {
    Dirichlet,
    Robin { beta: f64 },
}

impl BoundaryCondition {
    pub fn validate(&self) -> Result<()> {
        if let BoundaryCondition::Robin { beta } = self {
            if !(*beta >= 0.0) {
                return Err(Error::domain(format!("Robin beta must be >= 0, got {beta}")));
            }
        }
        Ok(())
    }

    pub fn is_neumann(&self) -> bool {
        matches!(self, BoundaryCondition::Robin { beta } if *beta == 0.0)
    }
}

/// One eigenvalue with its separation-of-variables labels.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModalEigenvalue {
    /// The eigenvalue itself (k^2).
    pub value: f64,
    /// Angular order m of the mode.
    pub angular_order: u32,
    /// 1-based index of the radial root within its angular order.
    pub radial_index: u32,
    /// 1 for m = 0, 2 for m >= 1 (cos/sin pairs).
    pub multiplicity: u8,
}

const MAX_COUNT: usize = 50;

/// First `count` eigenvalues of the disk of radius `radius`, sorted
/// ascending, with m >= 1 modes expanded to multiplicity two.
pub fn disk_eigenvalues(
    radius: f64,
    bc: BoundaryCondition,
    count: usize,
) -> Result<Vec<ModalEigenvalue>> {
    bc.validate()?;
    if !(radius > 0.0) {
        return Err(Error::domain(format!("disk radius must be > 0, got {radius}")));
    }
    if count == 0 || count > MAX_COUNT {
        return Err(Error::domain(format!("count must be in 1..=50, got {count}")));
    }
    let char_fn = |m: u32| {
        move |k: f64| match bc {
            BoundaryCondition::Dirichlet => special::jn(m, k * radius),
            BoundaryCondition::Robin { beta } => {
                k * special::jn_deriv(m, k * radius) + beta * special::jn(m, k * radius)
            }
        }
    };
    let mut modes: Vec<ModalEigenvalue> = Vec::new();
    let mut m0_index_offset = 0;
    if bc.is_neumann() {
        // constant eigenfunction, eigenvalue zero
        modes.push(ModalEigenvalue {
            value: 0.0,
            angular_order: 0,
            radial_index: 1,
            multiplicity: 1,
        });
        m0_index_offset = 1;
    }
    let dk = 0.05 / radius;
    let kmin = 0.25 * dk;
    let m0_roots = scan_roots(&char_fn(0), kmin, dk, ScanTarget::Count(count))?;
    for (i, &k) in m0_roots.iter().enumerate() {
        modes.push(ModalEigenvalue {
            value: k * k,
            angular_order: 0,
            radial_index: (i + 1 + m0_index_offset) as u32,
            multiplicity: 1,
        });
    }
    let k_bound = m0_roots[m0_roots.len() - 1];
    let mut m = 1u32;
    while (m as f64 / radius) <= k_bound {
        let roots = scan_roots(&char_fn(m), kmin, dk, ScanTarget::UpTo(k_bound))?;
        for (i, &k) in roots.iter().enumerate() {
            let entry = ModalEigenvalue {
                value: k * k,
                angular_order: m,
                radial_index: (i + 1) as u32,
                multiplicity: 2,
            };
            modes.push(entry);
            modes.push(entry);
        }
        m += 1;
        if m > 300 {
            return Err(Error::BracketingFailure {
                context: "disk eigenvalue enumeration exceeded angular order 300".into(),
                lo: 0.0,
                hi: k_bound,
            });
        }
    }
    modes.sort_by(|a, b| a.value.total_cmp(&b.value));
    modes.truncate(count);
    Ok(modes)
}

/// First `count` eigenvalues of the annulus `inner < r < outer`.
pub fn annulus_eigenvalues(
    inner: f64,
    outer: f64,
    bc: BoundaryCondition,
    count: usize,
) -> Result<Vec<ModalEigenvalue>> {
    bc.validate()?;
    if !(0.0 < inner && inner < outer) {
        return Err(Error::domain(format!(
            "annulus radii must satisfy 0 < inner < outer, got ({inner}, {outer})"
        )));
    }
    if count == 0 || count > MAX_COUNT {
        return Err(Error::domain(format!("count must be in 1..=50, got {count}")));
    }
    let char_fn = |m: u32| move |k: f64| annulus_char(m, k, inner, outer, bc);
    let mut modes: Vec<ModalEigenvalue> = Vec::new();
    let mut m0_index_offset = 0;
    if bc.is_neumann() {
        modes.push(ModalEigenvalue {
            value: 0.0,
            angular_order: 0,
            radial_index: 1,
            multiplicity: 1,
        });
        m0_index_offset = 1;
    }
    let dk = 0.05 / outer;
    let kmin = 1e-3 / outer;
    let m0_roots = scan_roots(&char_fn(0), kmin, dk, ScanTarget::Count(count))?;
    for (i, &k) in m0_roots.iter().enumerate() {
        modes.push(ModalEigenvalue {
            value: k * k,
            angular_order: 0,
            radial_index: (i + 1 + m0_index_offset) as u32,
            multiplicity: 1,
        });
    }
    let k_bound = m0_roots[m0_roots.len() - 1];
    let mut m = 1u32;
    while (m as f64 / outer) <= k_bound {
        let roots = scan_roots(&char_fn(m), kmin, dk, ScanTarget::UpTo(k_bound))?;
        for (i, &k) in roots.iter().enumerate() {
            let entry = ModalEigenvalue {
                value: k * k,
                angular_order: m,
                radial_index: (i + 1) as u32,
                multiplicity: 2,
            };
            modes.push(entry);
            modes.push(entry);
        }
        m += 1;
        if m > 300 {
            return Err(Error::BracketingFailure {
                context: "annulus eigenvalue enumeration exceeded angular order 300".into(),
                lo: 0.0,
                hi: k_bound,
            });
        }
    }
    modes.sort_by(|a, b| a.value.total_cmp(&b.value));
    modes.truncate(count);
    Ok(modes)
}

/// Boundary determinant for the annulus, with rows normalized so that large
/// `beta` or the `Y_m` blow-up at small `k` cannot overflow.
fn annulus_char(m: u32, k: f64, inner: f64, outer: f64, bc: BoundaryCondition) -> f64 {
    let (ji, yi) = (special::jn(m, k * inner), special::yn(m, k * inner));
    let (jo, yo) = (special::jn(m, k * outer), special::yn(m, k * outer));
    let (row1, row2) = match bc {
        BoundaryCondition::Dirichlet => ((ji, yi), (jo, yo)),
        BoundaryCondition::Robin { beta } => {
            let (jpi, ypi) = (
                special::jn_deriv(m, k * inner),
                special::yn_deriv(m, k * inner),
            );
            let (jpo, ypo) = (
                special::jn_deriv(m, k * outer),
                special::yn_deriv(m, k * outer),
            );
            (
                (-k * jpi + beta * ji, -k * ypi + beta * yi),
                (k * jpo + beta * jo, k * ypo + beta * yo),
            )
        }
    };
    let s1 = row1.0.abs().max(row1.1.abs()).max(1e-300);
    let s2 = row2.0.abs().max(row2.1.abs()).max(1e-300);
    (row1.0 / s1) * (row2.1 / s2) - (row1.1 / s1) * (row2.0 / s2)
}

enum ScanTarget {
    /// Collect this many roots, scanning upward as far as needed.
    Count(usize),
    /// Collect all roots with k <= bound.
    UpTo(f64),
}

/// Walks a uniform grid in `k`, brackets sign changes and polishes each with
/// Brent's method.
fn scan_roots<F: Fn(f64) -> f64>(f: &F, kmin: f64, dk: f64, target: ScanTarget) -> Result<Vec<f64>> {
    let mut roots = Vec::new();
    let mut k_prev = kmin;
    let mut f_prev = f(k_prev);
    let mut k = kmin + dk;
    let limit = match &target {
        // generous: m=0 roots are spaced at least ~pi/R apart, i.e. ~63 grid steps
        ScanTarget::Count(c) => kmin + dk * (200 * (c + 2)) as f64,
        ScanTarget::UpTo(b) => *b * (1.0 + 1e-12) + dk,
    };
    loop {
        match &target {
            ScanTarget::Count(c) => {
                if roots.len() >= *c {
                    break;
                }
            }
            ScanTarget::UpTo(b) => {
                if k_prev > *b {
                    break;
                }
            }
        }
        if k > limit {
            match target {
                ScanTarget::Count(c) => {
                    return Err(Error::BracketingFailure {
                        context: format!(
                            "found only {} of {} roots before scan limit",
                            roots.len(),
                            c
                        ),
                        lo: kmin,
                        hi: limit,
                    });
                }
                ScanTarget::UpTo(_) => break,
            }
        }
        let f_k = f(k);
        if f_prev == 0.0 {
            roots.push(k_prev);
        } else if f_prev.signum() != f_k.signum() && f_k != 0.0 {
            let root = find_root(f, Bracket::new(k_prev, k)?, 1e-12)?;
            // keep only roots within the requested range
            let keep = match &target {
                ScanTarget::Count(_) => true,
                ScanTarget::UpTo(b) => root <= *b,
            };
            if keep {
                roots.push(root);
            }
        }
        k_prev = k;
        f_prev = f_k;
        k += dk;
    }
    Ok(roots)
}

/// First (radial, m = 0) eigenvalue of the annulus; the workhorse of the
/// nested radii solves.
pub fn annulus_first_eigenvalue(inner: f64, outer: f64, bc: BoundaryCondition) -> Result<f64> {
    if bc.is_neumann() {
        return Ok(0.0);
    }
    let f = |k: f64| annulus_char(0, k, inner, outer, bc);
    let dk = 0.05 / outer;
    let roots = scan_roots(&f, 1e-3 / outer, dk, ScanTarget::Count(1))?;
    Ok(roots[0] * roots[0])
}

/// First positive zero of `J_0`; `lambda_1` of the unit disk is its square.
pub fn j0_first_zero() -> f64 {
    // J_0 changes sign on (2, 3); Brent converges to full precision
    find_root(|x| special::jn(0, x), Bracket { lo: 2.0, hi: 3.0 }, 1e-14)
        .expect("J_0 has a zero in (2,3)")
}

/// First positive zero of `J_1`; `lambda_2` of the unit disk is its square.
pub fn j1_first_zero() -> f64 {
    find_root(|x| special::jn(1, x), Bracket { lo: 3.0, hi: 4.5 }, 1e-14)
        .expect("J_1 has a zero in (3,4.5)")
}

fn dirichlet_disk_lambda12(radius: f64) -> (f64, f64) {
    let j01 = j0_first_zero();
    let j11 = j1_first_zero();
    ((j01 / radius).powi(2), (j11 / radius).powi(2))
}

/// Diagnostics reported alongside a selected radii triple.
#[derive(Debug, Clone, Copy)]
pub struct RadiiDiagnostics {
    /// Dirichlet `lambda_1(B_{R1})`.
    pub lam1_ball: f64,
    /// Dirichlet `lambda_2(B_{R1})`.
    pub lam2_ball: f64,
    /// First annulus eigenvalue under the requested boundary condition.
    pub mu1_annulus: f64,
    /// `|pi R1^2 + pi (R3^2 - R2^2) - M| / M`.
    pub area_residual: f64,
    /// `|(lam2 - mu1) - (mu1 - lam1)| / mu1`.
    pub gap_residual: f64,
    /// Radius with `lambda_1(B_{R0}) = mu1_annulus`.
    pub r0: f64,
}

/// Selects radii `0 < R1 < R2 < R3` with total area `M` such that the first
/// annulus eigenvalue sits exactly midway in the gap
/// `(lambda_1(B_{R1}), lambda_2(B_{R1}))`.
///
/// Two nested monotone solves mirror the existence argument: first `R2` is
/// fixed so that `lambda_1(B_{R2}) = delta * mu_1(A_{R2,R3})` on the ball of
/// area `M`; then `R1` shrinks from `R2` (with `R3` growing to keep the area
/// at `M`) until the gap-equality holds.
pub fn select_radii(
    m_area: f64,
    bc: BoundaryCondition,
    delta: f64,
) -> Result<(RadiiTriple, RadiiDiagnostics)> {
    bc.validate()?;
    if !(m_area > 0.0) {
        return Err(Error::domain(format!("area M must be > 0, got {m_area}")));
    }
    if !(delta > 0.0 && delta < 1.0) {
        return Err(Error::domain(format!("delta must be in (0,1), got {delta}")));
    }
    let r3_init = (m_area / std::f64::consts::PI).sqrt();
    let j01 = j0_first_zero();
    let j11 = j1_first_zero();
    let lam1 = |r: f64| (j01 / r).powi(2);
    let lam2 = |r: f64| (j11 / r).powi(2);

    // step (a): R2 with lambda_1(B_{R2}) = delta * mu_1(A_{R2, r3_init})
    let g = |r2: f64| -> Result<f64> {
        Ok(lam1(r2) - delta * annulus_first_eigenvalue(r2, r3_init, bc)?)
    };
    let (lo_a, hi_a) = bracket_monotone(&g, 0.05 * r3_init, 0.999 * r3_init, 64, "radii step (a)")?;
    let r2 = find_root(
        |r| g(r).unwrap_or(f64::NAN),
        Bracket::new(lo_a, hi_a)?,
        1e-13 * r3_init,
    )?;

    // step (b): shrink R1 from R2, grow R3 at constant area, until the
    // annulus eigenvalue is the midpoint of the ball's spectral gap
    let r3_of = |r1: f64| (r2 * r2 + m_area / std::f64::consts::PI - r1 * r1).sqrt();
    let f_gap = |r1: f64| -> Result<f64> {
        let mu1 = annulus_first_eigenvalue(r2, r3_of(r1), bc)?;
        Ok(lam1(r1) + lam2(r1) - 2.0 * mu1)
    };
    let (lo_b, hi_b) = bracket_monotone(&f_gap, 0.02 * r2, r2 * (1.0 - 1e-9), 64, "radii step (b)")?;
    let r1 = find_root(
        |r| f_gap(r).unwrap_or(f64::NAN),
        Bracket::new(lo_b, hi_b)?,
        1e-13 * r2,
    )?;
    let r3 = r3_of(r1);
    let radii = RadiiTriple::new(r1, r2, r3)?;

    let mu1 = annulus_first_eigenvalue(r2, r3, bc)?;
    let (l1, l2) = dirichlet_disk_lambda12(r1);
    if !(l1 < mu1 && mu1 < l2) {
        return Err(Error::NoConvergence {
            iterations: 0,
            context: format!(
                "selected radii violate the gap ordering: lam1 = {l1}, mu1 = {mu1}, lam2 = {l2}"
            ),
        });
    }
    let area = std::f64::consts::PI * (r1 * r1 + r3 * r3 - r2 * r2);
    let diags = RadiiDiagnostics {
        lam1_ball: l1,
        lam2_ball: l2,
        mu1_annulus: mu1,
        area_residual: (area - m_area).abs() / m_area,
        gap_residual: ((l2 - mu1) - (mu1 - l1)).abs() / mu1,
        r0: j01 / mu1.sqrt(),
    };
    Ok((radii, diags))
}

/// Scans `[lo, hi]` for a sign change of a monotone function and returns the
/// bracketing subinterval; the scan itself is reported on failure.
fn bracket_monotone<F: Fn(f64) -> Result<f64>>(
    f: &F,
    lo: f64,
    hi: f64,
    steps: usize,
    what: &str,
) -> Result<(f64, f64)> {
    let mut prev_x = lo;
    let mut prev_f = f(lo)?;
    let mut scan = vec![(prev_x, prev_f)];
    for i in 1..=steps {
        let x = lo + (hi - lo) * i as f64 / steps as f64;
        let fx = f(x)?;
        scan.push((x, fx));
        if prev_f == 0.0 || prev_f.signum() != fx.signum() {
            return Ok((prev_x, x));
        }
        prev_x = x;
        prev_f = fx;
    }
    let head: Vec<String> = scan
        .iter()
        .step_by((steps / 8).max(1))
        .map(|(x, v)| format!("f({x:.4}) = {v:.4e}"))
        .collect();
    Err(Error::BracketingFailure {
        context: format!("{what}: no sign change; monotonicity scan: {}", head.join(", ")),
        lo,
        hi,
    })
}

/// Radius of the disk whose first Dirichlet eigenvalue equals `mu`.
pub fn radius_from_eigenvalue(mu: f64) -> Result<f64> {
    if !(mu > 0.0) {
        return Err(Error::domain(format!(
            "radius_from_eigenvalue requires mu > 0, got {mu}"
        )));
    }
    Ok(j0_first_zero() / mu.sqrt())
}
