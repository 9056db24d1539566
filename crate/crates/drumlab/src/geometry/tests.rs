use super::*;

fn composite_spec() -> DomainSpec {
    DomainSpec::Composite {
        radii: RadiiTriple::new(1.0, 2.0, 3.0).unwrap(),
        n: 8,
        eps: 0.05,
    }
}

#[test]
fn perturbed_boundary_spec_points() {
    // cos 0 = 1 twice
    let p = perturbed_boundary(1.0, 2, 0.0).unwrap();
    assert!((p.x - 1.5).abs() < 1e-15 && p.y.abs() < 1e-15);
    // t = 1, n = 2: cos 4pi = 1, cos pi = -1
    let p = perturbed_boundary(1.0, 2, 1.0).unwrap();
    assert!((p.x + 1.5).abs() < 1e-14 && p.y.abs() < 1e-12);
    // t = 1, n = 3: cos 9pi = -1 so x = -(1 - 1/3) = -2/3
    let p = perturbed_boundary(1.0, 3, 1.0).unwrap();
    assert!((p.x + 2.0 / 3.0).abs() < 1e-14 && p.y.abs() < 1e-12);
    // curve closes
    let a = perturbed_boundary(1.3, 5, -1.0).unwrap();
    let b = perturbed_boundary(1.3, 5, 1.0).unwrap();
    assert!(a.dist(b) < 1e-12);
    assert!(perturbed_boundary(1.0, 2, 1.5).is_err());
}

#[test]
fn perturbed_radius_bounds() {
    for &n in &[1u32, 2, 5, 16] {
        for i in 0..2000 {
            let t = -1.0 + 2.0 * i as f64 / 1999.0;
            let r = perturbed_boundary(0.7, n, t).unwrap().r();
            let lo = 0.7 * (1.0 - 1.0 / n as f64) - 1e-12;
            let hi = 0.7 * (1.0 + 1.0 / n as f64) + 1e-12;
            assert!(r >= lo && r <= hi, "n={n} t={t} r={r}");
        }
    }
}

#[test]
fn contains_composite_spec_examples() {
    let spec = composite_spec();
    assert!(contains(&spec, Point2::new(0.5, 0.0)));
    // between U_n and A, midway between passages
    assert!(!contains(&spec, Point2::from_polar(1.6, PI / 8.0)));
    // inside sector S_0
    assert!(contains(&spec, Point2::from_polar(1.6, 0.0)));
}

#[test]
fn contains_rotation_symmetry() {
    let spec = composite_spec();
    let (n, eps, radii) = match spec {
        DomainSpec::Composite { n, eps, radii } => (n, eps, radii),
        _ => unreachable!(),
    };
    // deterministic scattered sample; skip points too close to a boundary
    // where one rotated ulp could flip the strict inequalities
    let mut lcg = 0x2545F4914F6CDD1Du64;
    let mut next = move || {
        lcg = lcg.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        (lcg >> 11) as f64 / (1u64 << 53) as f64
    };
    let mut tested = 0;
    for _ in 0..20000 {
        let p = Point2::new(6.4 * next() - 3.2, 6.4 * next() - 3.2);
        let r = p.r();
        let margin = 1e-7;
        let near_boundary = (r - radii.r2).abs() < margin
            || (r - radii.r3).abs() < margin
            || (r - perturbed_radius(radii.r1, n, p.theta())).abs() < margin
            || (angle_to_nearest_axis(p.theta(), n).abs() - eps).abs() < margin;
        if near_boundary {
            continue;
        }
        let inside = contains(&spec, p);
        for k in 1..n {
            let q = p.rotate(2.0 * PI * k as f64 / n as f64);
            assert_eq!(contains(&spec, q), inside, "rotation symmetry at {p:?} k={k}");
        }
        tested += 1;
    }
    assert!(tested > 15000);
}

#[test]
fn disk_polyline_shape() {
    let loops = boundary_polyline(&DomainSpec::Disk { radius: 1.0 }, 0.1).unwrap();
    assert_eq!(loops.len(), 1);
    assert!(loops[0].len() >= 63);
    for p in &loops[0].points {
        assert!((p.r() - 1.0).abs() < 1e-14);
    }
    assert!(loops[0].signed_area() > 0.0);
}

#[test]
fn annulus_polyline_orientations() {
    let loops = boundary_polyline(
        &DomainSpec::Annulus {
            inner: 1.0,
            outer: 2.0,
        },
        0.1,
    )
    .unwrap();
    assert_eq!(loops.len(), 2);
    assert!(loops[0].signed_area() > 0.0);
    assert!(loops[1].signed_area() < 0.0);
}

#[test]
fn polyline_vertices_on_analytic_boundary() {
    for spec in [
        DomainSpec::PerturbedDisk { r1: 0.8, n: 6 },
        composite_spec(),
    ] {
        let loops = boundary_polyline(&spec, 0.05).unwrap();
        for l in &loops {
            let m = l.points.len();
            for i in 0..m {
                // each vertex must lie on the curve of one of its edges
                let res = l.curves[i]
                    .residual(l.points[i])
                    .min(l.curves[(i + m - 1) % m].residual(l.points[i]));
                assert!(res < 1e-12, "vertex {i} off boundary by {res:e}");
            }
        }
    }
}

#[test]
fn polyline_segment_lengths_below_target() {
    let h = 0.08;
    let loops = boundary_polyline(&composite_spec(), h).unwrap();
    for l in &loops {
        let m = l.points.len();
        for i in 0..m {
            let d = l.points[i].dist(l.points[(i + 1) % m]);
            assert!(d <= h * 1.0 + 1e-9, "edge {i} length {d}");
        }
    }
}

/// Rasterized flood-fill on a 2000^2 grid counts connected components of the
/// complement: the composite must have exactly `n` holes.
#[test]
fn composite_hole_count_matches_flood_fill_oracle() {
    let spec = composite_spec();
    let loops = boundary_polyline(&spec, 0.05).unwrap();
    assert_eq!(loops.len(), 1 + 8, "components = 1 outer + n holes");
    let holes = loops.iter().filter(|l| l.is_hole).count();
    assert_eq!(holes, 8);

    // oracle: flood fill over cell centers
    let m = 2000usize;
    let lim = 3.05_f64;
    let step = 2.0 * lim / m as f64;
    let idx = |i: usize, j: usize| i * m + j;
    let mut outside = vec![false; m * m];
    for i in 0..m {
        let x = -lim + (i as f64 + 0.5) * step;
        for j in 0..m {
            let y = -lim + (j as f64 + 0.5) * step;
            outside[idx(i, j)] = !contains(&spec, Point2::new(x, y));
        }
    }
    // union-find over outside cells; the complement uses 8-connectivity
    // (the digital-topology dual of 4-connected foreground), otherwise the
    // sub-cell corridors where a wiggle trough meets a sector edge split
    let mut parent: Vec<u32> = (0..(m * m) as u32).collect();
    fn find(parent: &mut [u32], mut a: u32) -> u32 {
        while parent[a as usize] != a {
            parent[a as usize] = parent[parent[a as usize] as usize];
            a = parent[a as usize];
        }
        a
    }
    let mut union = |parent: &mut Vec<u32>, a: usize, b: usize| {
        let (x, y) = (find(parent, a as u32), find(parent, b as u32));
        parent[x as usize] = y;
    };
    for i in 0..m {
        for j in 0..m {
            if !outside[idx(i, j)] {
                continue;
            }
            if i + 1 < m && outside[idx(i + 1, j)] {
                union(&mut parent, idx(i, j), idx(i + 1, j));
            }
            if j + 1 < m && outside[idx(i, j + 1)] {
                union(&mut parent, idx(i, j), idx(i, j + 1));
            }
            if i + 1 < m && j + 1 < m && outside[idx(i + 1, j + 1)] {
                union(&mut parent, idx(i, j), idx(i + 1, j + 1));
            }
            if i + 1 < m && j > 0 && outside[idx(i + 1, j - 1)] {
                union(&mut parent, idx(i, j), idx(i + 1, j - 1));
            }
        }
    }
    let mut roots = std::collections::HashSet::new();
    for i in 0..m {
        for j in 0..m {
            if outside[idx(i, j)] {
                roots.insert(find(&mut parent, idx(i, j) as u32));
            }
        }
    }
    // one unbounded outside component + n holes
    assert_eq!(roots.len(), 1 + 8);
}

#[test]
fn area_exact_formulas() {
    assert!((area(&DomainSpec::Disk { radius: 2.0 }).unwrap() - 4.0 * PI).abs() < 1e-12);
    assert!(
        (area(&DomainSpec::Annulus {
            inner: 1.0,
            outer: 2.0
        })
        .unwrap()
            - 3.0 * PI)
            .abs()
            < 1e-12
    );
    let a = area(&DomainSpec::PerturbedDisk { r1: 1.0, n: 4 }).unwrap();
    assert!((a - PI * (1.0 + 1.0 / 32.0)).abs() < 1e-12);
}

/// Independent oracle: high-order quadrature of (1/2) ∮ (x dy - y dx) along
/// the analytic parametrization of the U_n boundary.
#[test]
fn perturbed_area_matches_contour_quadrature() {
    let (r1, n) = (1.0, 4u32);
    // x(t) = R(t) cos(pi t), y(t) = R(t) sin(pi t), R = r1(1 + cos(n^2 pi t)/n)
    let nf = n as f64;
    let integrand = |t: f64| {
        let a = nf * nf * PI * t;
        let r = r1 * (1.0 + a.cos() / nf);
        let dr = -r1 * nf * PI * a.sin();
        // (1/2)(x y' - y x') = (1/2) r^2 theta' with theta' = pi
        // plus the dr terms cancel; integrate the full expression anyway
        let (s, c) = (PI * t).sin_cos();
        let x = r * c;
        let y = r * s;
        let xp = dr * c - r * PI * s;
        let yp = dr * s + r * PI * c;
        0.5 * (x * yp - y * xp)
    };
    // composite Simpson over [-1, 1]
    let m = 1 << 14;
    let h = 2.0 / m as f64;
    let mut s = integrand(-1.0) + integrand(1.0);
    for i in 1..m {
        let w = if i % 2 == 1 { 4.0 } else { 2.0 };
        s += w * integrand(-1.0 + i as f64 * h);
    }
    let oracle = s * h / 3.0;
    let got = area(&DomainSpec::PerturbedDisk { r1, n }).unwrap();
    assert!((got - oracle).abs() < 1e-9, "area {got} vs quadrature {oracle}");
}

#[test]
fn composite_area_decreases_to_union_limit() {
    let radii = RadiiTriple::new(1.0, 2.0, 3.0).unwrap();
    let n = 8u32;
    let limit = area(&DomainSpec::PerturbedDisk { r1: 1.0, n }).unwrap()
        + area(&DomainSpec::Annulus {
            inner: 2.0,
            outer: 3.0,
        })
        .unwrap();
    let mut prev = f64::INFINITY;
    for &eps in &[0.08, 0.04, 0.02, 0.01, 0.005] {
        let a = area(&DomainSpec::Composite { radii, n, eps }).unwrap();
        assert!(a > limit, "union area exceeds the eps -> 0 limit");
        assert!(a < prev, "area must decrease with eps");
        prev = a;
    }
    assert!((prev - limit) / limit < 0.01);
}

#[test]
fn composite_validation() {
    let radii = RadiiTriple::new(1.0, 2.0, 3.0).unwrap();
    // eps too large
    assert!(DomainSpec::Composite {
        radii,
        n: 8,
        eps: 0.3
    }
    .validate()
    .is_err());
    // U_n touches the annulus: (1 + 1/2) * 1.5 = 2.25 >= 2
    let touching = DomainSpec::Composite {
        radii: RadiiTriple::new(1.5, 2.0, 3.0).unwrap(),
        n: 2,
        eps: 0.1,
    };
    assert!(matches!(
        touching.validate(),
        Err(Error::DegenerateGeometry(_))
    ));
    assert!(RadiiTriple::new(2.0, 1.0, 3.0).is_err());
}

#[test]
fn polyline_export_format() {
    let loops = boundary_polyline(
        &DomainSpec::Annulus {
            inner: 1.0,
            outer: 2.0,
        },
        0.5,
    )
    .unwrap();
    let mut buf = Vec::new();
    write_polylines(&loops, &mut buf).unwrap();
    let text = String::from_utf8(buf).unwrap();
    let blocks: Vec<&str> = text.trim_end().split("\n\n").collect();
    assert_eq!(blocks.len(), 2);
    assert!(blocks[0].lines().all(|l| l.ends_with("outer")));
    assert!(blocks[1].lines().all(|l| l.ends_with("hole")));
}

#[cfg(test)]
mod props {
    use super::*;
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn perturbed_boundary_radius_within_band(
            r1 in 0.2f64..3.0,
            n in 1u32..20,
            t in -1.0f64..1.0,
        ) {
            let p = perturbed_boundary(r1, n, t).unwrap();
            let r = p.r();
            prop_assert!(r >= r1 * (1.0 - 1.0 / n as f64) - 1e-12);
            prop_assert!(r <= r1 * (1.0 + 1.0 / n as f64) + 1e-12);
        }

        #[test]
        fn point_polar_roundtrip(x in -10.0f64..10.0, y in -10.0f64..10.0) {
            prop_assume!(x.hypot(y) > 1e-9);
            let p = Point2::new(x, y);
            let q = Point2::from_polar(p.r(), p.theta());
            prop_assert!(p.dist(q) < 1e-12 * (1.0 + p.r()));
            prop_assert!(p.theta() >= -PI && p.theta() < PI);
        }
    }
}
