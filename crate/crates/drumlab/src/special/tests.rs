//! Tests for the Bessel evaluations and the root finder.
//!
//! Reference values come from two oracles that share no code with the
//! implementation: composite-Simpson quadrature of the integral
//! representation `J_m(x) = (1/pi) int_0^pi cos(m t - x sin t) dt`, and
//! tanh-sinh quadrature of
//! `Y_0(x) = (4/pi^2) int_0^{pi/2} cos(x cos t)(gamma + ln(2 x sin^2 t)) dt`
//! (the latter handles the endpoint log singularity).

use super::*;
use crate::special::roots::{find_root, Bracket};

/// Composite Simpson quadrature of `J_m`, doubling panels to convergence.
fn oracle_j(m: u32, x: f64) -> f64 {
    let f = |t: f64| (m as f64 * t - x * t.sin()).cos();
    let mut n = 256;
    let mut prev = simpson(&f, 0.0, PI, n) / PI;
    loop {
        n *= 2;
        let cur = simpson(&f, 0.0, PI, n) / PI;
        if (cur - prev).abs() < 1e-15 || n > 1 << 22 {
            return cur;
        }
        prev = cur;
    }
}

fn simpson<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, n: usize) -> f64 {
    let h = (b - a) / n as f64;
    let mut s = f(a) + f(b);
    for i in 1..n {
        let w = if i % 2 == 1 { 4.0 } else { 2.0 };
        s += w * f(a + i as f64 * h);
    }
    s * h / 3.0
}

/// tanh-sinh quadrature on (a, b); tolerates integrable endpoint singularities.
fn tanh_sinh<F: Fn(f64) -> f64>(f: F, a: f64, b: f64) -> f64 {
    let c = 0.5 * (b - a);
    let mid = 0.5 * (a + b);
    let h = 1.0 / 64.0;
    let mut sum = 0.0;
    for k in -1500i32..=1500 {
        let t = k as f64 * h;
        let u = std::f64::consts::FRAC_PI_2 * t.sinh();
        let x = u.tanh();
        let w = std::f64::consts::FRAC_PI_2 * t.cosh() / u.cosh().powi(2);
        let point = mid + c * x;
        if point > a && point < b {
            sum += w * f(point);
        }
    }
    sum * c * h
}

fn oracle_y0(x: f64) -> f64 {
    let g = EULER_GAMMA;
    (4.0 / (PI * PI))
        * tanh_sinh(
            |t| (x * t.cos()).cos() * (g + (2.0 * x * t.sin() * t.sin()).ln()),
            0.0,
            FRAC_PI_2,
        )
}

/// Plain bisection used to realize the "bisection on the oracle" derivations.
fn bisect_oracle<F: Fn(f64) -> f64>(f: F, mut lo: f64, mut hi: f64) -> f64 {
    let flo = f(lo);
    assert!(flo * f(hi) < 0.0, "oracle bracket must change sign");
    for _ in 0..100 {
        let mid = 0.5 * (lo + hi);
        if f(mid).signum() == flo.signum() {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

const J0_ZERO_1: f64 = 2.404825557695773;
const J1_ZERO_1: f64 = 3.831705970207512;
const J1_DERIV_ZERO_1: f64 = 1.841183781340659;
const Y0_ZERO_1: f64 = 0.893576966279167;

#[test]
fn j_at_zero_argument() {
    assert_eq!(bessel_j(0, 0.0).unwrap(), 1.0);
    assert_eq!(bessel_j(1, 0.0).unwrap(), 0.0);
    assert_eq!(bessel_j(7, 0.0).unwrap(), 0.0);
}

#[test]
fn j0_first_zero_matches_series_oracle() {
    // derivation: bisection on the independent quadrature oracle over (2, 3)
    let z = bisect_oracle(|x| oracle_j(0, x), 2.0, 3.0);
    assert!((z - J0_ZERO_1).abs() < 1e-12, "oracle zero {z}");
    assert!(bessel_j(0, J0_ZERO_1).unwrap().abs() < 1e-12);
}

#[test]
fn j_matches_quadrature_oracle_across_range() {
    // relative accuracy away from zeros, absolute (at the envelope scale) near them
    for &m in &[0u32, 1, 2, 7, 20, 50] {
        for &x in &[0.3, 2.7, 7.9, 8.1, 23.5, 61.2, 119.0, 200.0] {
            let got = bessel_j(m, x).unwrap();
            let want = oracle_j(m, x);
            let envelope = (2.0 / (PI * x)).sqrt();
            let tol = 1e-12 * want.abs().max(envelope);
            assert!(
                (got - want).abs() <= tol,
                "J_{m}({x}): got {got:e}, oracle {want:e}"
            );
        }
    }
}

#[test]
fn j_small_order_small_argument_against_oracle() {
    for &x in &[1e-8, 0.05, 0.9, 1.5, 4.2, 6.9] {
        for m in 0..=3 {
            let got = bessel_j(m, x).unwrap();
            let want = oracle_j(m, x);
            assert!(
                (got - want).abs() <= 1e-13 * want.abs().max(1.0),
                "J_{m}({x})"
            );
        }
    }
}

#[test]
fn y0_log_singularity_at_origin() {
    assert!(bessel_y(0, 1e-6).unwrap() < -8.0);
}

#[test]
fn y0_first_zero_matches_quadrature_oracle() {
    let z = bisect_oracle(oracle_y0, 0.5, 1.5);
    assert!((z - Y0_ZERO_1).abs() < 1e-10, "oracle zero {z}");
    assert!(bessel_y(0, Y0_ZERO_1).unwrap().abs() < 1e-10);
}

#[test]
fn y_matches_quadrature_oracle() {
    for &x in &[0.05, 0.6, 1.3, 4.4, 7.9, 8.1, 15.0, 40.0, 120.0] {
        let got = bessel_y(0, x).unwrap();
        let want = oracle_y0(x);
        let envelope = (2.0 / (PI * x)).sqrt();
        assert!(
            (got - want).abs() <= 1e-11 * want.abs().max(envelope),
            "Y_0({x}): got {got:e}, oracle {want:e}"
        );
        // Y_1 = -Y_0' checked by Richardson-extrapolated central differences
        if x > 0.1 {
            let h = 1e-4 * x.max(1.0);
            let d1 = (oracle_y0(x + h) - oracle_y0(x - h)) / (2.0 * h);
            let d2 = (oracle_y0(x + h / 2.0) - oracle_y0(x - h / 2.0)) / h;
            let deriv = (4.0 * d2 - d1) / 3.0;
            let got1 = bessel_y(1, x).unwrap();
            assert!(
                (got1 + deriv).abs() <= 1e-8 * got1.abs().max(envelope),
                "Y_1({x}): got {got1:e}, -Y_0' {:e}",
                -deriv
            );
        }
    }
}

#[test]
fn y_high_order_small_argument_asymptotics() {
    // Y_m(x) ~ -(1/pi) (m-1)! (2/x)^m for x -> 0
    let x = 1e-3_f64;
    for &m in &[5u32, 12, 20] {
        let mut lead = -1.0 / PI;
        for k in 1..m {
            lead *= k as f64;
        }
        lead *= (2.0 / x).powi(m as i32);
        let got = bessel_y(m, x).unwrap();
        assert!(
            ((got - lead) / lead).abs() < 1e-5,
            "Y_{m}({x}) leading asymptotic"
        );
    }
}

#[test]
fn wronskian_identity() {
    // J_{m+1} Y_m - J_m Y_{m+1} = 2/(pi x)
    for &x in &[0.5, 1.0, 5.0, 20.0, 100.0] {
        for m in 0..=2 {
            let w = bessel_j(m + 1, x).unwrap() * bessel_y(m, x).unwrap()
                - bessel_j(m, x).unwrap() * bessel_y(m + 1, x).unwrap();
            let want = 2.0 / (PI * x);
            assert!(
                (w - want).abs() < 1e-10 * want.max(1.0),
                "wronskian m={m} x={x}: {w} vs {want}"
            );
        }
    }
    // the spec's order-0 form at x = 1, tolerance 1e-11
    let x = 1.0;
    let w = bessel_j(1, x).unwrap() * bessel_y(0, x).unwrap()
        - bessel_j(0, x).unwrap() * bessel_y(1, x).unwrap();
    assert!((w - 2.0 / (PI * x)).abs() < 1e-11);
}

#[test]
fn j0_j1_zeros_interlace() {
    // first 10 zeros of J0 and J1 strictly interlace
    let zeros = |order: u32| -> Vec<f64> {
        let mut out = vec![];
        let mut lo = if order == 0 { 0.5 } else { 1.0 };
        let step = 0.25;
        let mut flo = jn(order, lo);
        let mut x = lo + step;
        while out.len() < 10 {
            let fx = jn(order, x);
            if flo.signum() != fx.signum() {
                let z = find_root(|t| jn(order, t), Bracket::new(lo, x).unwrap(), 1e-12).unwrap();
                out.push(z);
            }
            lo = x;
            flo = fx;
            x += step;
        }
        out
    };
    let z0 = zeros(0);
    let z1 = zeros(1);
    for i in 0..9 {
        assert!(z0[i] < z1[i] && z1[i] < z0[i + 1], "interlacing at {i}");
    }
}

#[test]
fn j_derivative_trivia_and_zero() {
    assert_eq!(bessel_j_deriv(0, 0.0).unwrap(), 0.0);
    // derivation: bisection on J_1' = (J_0 - J_2)/2 through the quadrature oracle
    let z = bisect_oracle(|x| 0.5 * (oracle_j(0, x) - oracle_j(2, x)), 1.5, 2.2);
    assert!((z - J1_DERIV_ZERO_1).abs() < 1e-11, "oracle zero {z}");
    assert!(bessel_j_deriv(1, J1_DERIV_ZERO_1).unwrap().abs() < 1e-10);
}

#[test]
fn derivatives_match_central_differences() {
    let h = 1e-5;
    let x = 3.7;
    for m in 0..=4u32 {
        let dj = bessel_j_deriv(m, x).unwrap();
        let fd = (bessel_j(m, x + h).unwrap() - bessel_j(m, x - h).unwrap()) / (2.0 * h);
        assert!((dj - fd).abs() < 1e-8, "J_{m}' at {x}: {dj} vs {fd}");
        let dy = bessel_y_deriv(m, x).unwrap();
        let fdy = (bessel_y(m, x + h).unwrap() - bessel_y(m, x - h).unwrap()) / (2.0 * h);
        assert!((dy - fdy).abs() < 1e-8, "Y_{m}' at {x}: {dy} vs {fdy}");
    }
}

#[test]
fn domain_errors() {
    assert!(bessel_j(0, -1.0).is_err());
    assert!(bessel_y(0, 0.0).is_err());
    assert!(bessel_y(0, -2.0).is_err());
    assert!(bessel_j(51, 1.0).is_err());
}

#[test]
fn find_root_sqrt2() {
    let r = find_root(|x| x * x - 2.0, Bracket::new(1.0, 2.0).unwrap(), 1e-12).unwrap();
    assert!((r - std::f64::consts::SQRT_2).abs() <= 1e-12);
}

#[test]
fn find_root_j0_first_zero() {
    let r = find_root(|x| jn(0, x), Bracket::new(2.0, 3.0).unwrap(), 1e-12).unwrap();
    assert!((r - J0_ZERO_1).abs() <= 1e-11);
    let r1 = find_root(|x| jn(1, x), Bracket::new(3.0, 4.5).unwrap(), 1e-12).unwrap();
    assert!((r1 - J1_ZERO_1).abs() <= 1e-11);
}

#[test]
fn find_root_linear_and_errors() {
    let r = find_root(|x| x, Bracket::new(-1.0, 2.0).unwrap(), 1e-12).unwrap();
    assert!(r.abs() <= 1e-12);
    assert!(matches!(
        find_root(|x| x * x + 1.0, Bracket::new(-1.0, 1.0).unwrap(), 1e-12),
        Err(Error::NoSignChange { .. })
    ));
    assert!(Bracket::new(2.0, 1.0).is_err());
}

#[cfg(test)]
mod props {
    use super::*;
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn root_stays_inside_bracket(a in -10.0f64..10.0, w in 0.1f64..10.0, c in -5.0f64..5.0) {
            // cubic with a root forced inside [a, a+w]
            let root = a + w * 0.37;
            let f = move |x: f64| (x - root) * ((x - c).powi(2) + 1.0);
            if f(a) * f(a + w) < 0.0 {
                let r = find_root(f, Bracket::new(a, a + w).unwrap(), 1e-10).unwrap();
                prop_assert!(r >= a && r <= a + w);
                prop_assert!((r - root).abs() < 1e-8 * (1.0 + root.abs()));
            }
        }
    }
}
