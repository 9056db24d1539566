//! Bessel functions of integer order and a bracketed scalar root finder.
//!
//! Evaluation scheme: ascending power series for `x < 8`, Chebyshev-fitted
//! modulus/phase (Hankel) form for `x >= 8` (see [`tables`]). Orders above 1
//! are reached by upward recurrence where it is stable (`Y_m` always; `J_m`
//! for `m < x`) and by Miller's normalized downward recurrence for `J_m` with
//! `m >= x`. The crossover `x = 8` keeps the worst series cancellation near
//! 1e2, i.e. about two decimal digits.

mod roots;
mod tables;

pub use roots::{find_root, Bracket};

use crate::error::{Error, Result};
use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

/// Euler-Mascheroni constant.
const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// Series/asymptotic crossover point.
const LARGE_X: f64 = 8.0;

/// Maximum supported order.
pub const MAX_ORDER: u32 = 50;

/// Bessel function of the first kind, `J_order(x)`.
///
/// Requires `x >= 0` and `order <= 50`; relative accuracy is about 1e-13 on
/// `[0, 200]` (absolute near zeros).
pub fn bessel_j(order: u32, x: f64) -> Result<f64> {
    check_order(order)?;
    if !(x >= 0.0) {
        return Err(Error::domain(format!("bessel_j requires x >= 0, got {x}")));
    }
    Ok(jn(order, x))
}

/// Bessel function of the second kind, `Y_order(x)`, for `x > 0`.
pub fn bessel_y(order: u32, x: f64) -> Result<f64> {
    check_order(order)?;
    if !(x > 0.0) {
        return Err(Error::domain(format!("bessel_y requires x > 0, got {x}")));
    }
    Ok(yn(order, x))
}

/// Derivative `J'_order(x)` via `J_0' = -J_1` and `2 J_m' = J_{m-1} - J_{m+1}`.
pub fn bessel_j_deriv(order: u32, x: f64) -> Result<f64> {
    check_order(order)?;
    if !(x >= 0.0) {
        return Err(Error::domain(format!(
            "bessel_j_deriv requires x >= 0, got {x}"
        )));
    }
    Ok(jn_deriv(order, x))
}

/// Derivative `Y'_order(x)` via `Y_0' = -Y_1` and `2 Y_m' = Y_{m-1} - Y_{m+1}`.
pub fn bessel_y_deriv(order: u32, x: f64) -> Result<f64> {
    check_order(order)?;
    if !(x > 0.0) {
        return Err(Error::domain(format!(
            "bessel_y_deriv requires x > 0, got {x}"
        )));
    }
    Ok(yn_deriv(order, x))
}

fn check_order(order: u32) -> Result<()> {
    if order > MAX_ORDER {
        return Err(Error::domain(format!(
            "order {order} exceeds supported maximum {MAX_ORDER}"
        )));
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Infallible internals (preconditions already checked by the callers above;
// used directly by the spectra module in hot loops).
// ---------------------------------------------------------------------------

pub(crate) fn jn(order: u32, x: f64) -> f64 {
    match order {
        0 => j0(x),
        1 => j1(x),
        m => jn_high(m, x),
    }
}

pub(crate) fn yn(order: u32, x: f64) -> f64 {
    match order {
        0 => y0(x),
        1 => y1(x),
        m => {
            // Upward recurrence; |Y_m| grows with m, so this is stable.
            let mut prev = y0(x);
            let mut cur = y1(x);
            for k in 1..m {
                let next = (2.0 * k as f64 / x) * cur - prev;
                prev = cur;
                cur = next;
            }
            cur
        }
    }
}

pub(crate) fn jn_deriv(order: u32, x: f64) -> f64 {
    match order {
        0 => -jn(1, x),
        m => {
            if x == 0.0 {
                // J_1'(0) = 1/2, J_m'(0) = 0 for m >= 2
                return if m == 1 { 0.5 } else { 0.0 };
            }
            0.5 * (jn(m - 1, x) - jn(m + 1, x))
        }
    }
}

pub(crate) fn yn_deriv(order: u32, x: f64) -> f64 {
    match order {
        0 => -yn(1, x),
        m => 0.5 * (yn(m - 1, x) - yn(m + 1, x)),
    }
}

fn j0(x: f64) -> f64 {
    if x < LARGE_X {
        // sum_k (-t)^k / (k!)^2, t = x^2/4
        let t = 0.25 * x * x;
        let mut term = 1.0;
        let mut sum = 1.0;
        for k in 1..60 {
            term *= -t / ((k * k) as f64);
            sum += term;
            if term.abs() < 1e-20 {
                break;
            }
        }
        sum
    } else {
        jy_large(0, x).0
    }
}

fn j1(x: f64) -> f64 {
    if x < LARGE_X {
        // (x/2) sum_k (-t)^k / (k! (k+1)!)
        let t = 0.25 * x * x;
        let mut term = 1.0;
        let mut sum = 1.0;
        for k in 1..60 {
            term *= -t / ((k * (k + 1)) as f64);
            sum += term;
            if term.abs() < 1e-20 {
                break;
            }
        }
        0.5 * x * sum
    } else {
        jy_large(1, x).0
    }
}

fn y0(x: f64) -> f64 {
    if x < LARGE_X {
        // (2/pi) [ (ln(x/2) + gamma) J_0(x) + sum_{k>=1} (-1)^{k+1} H_k t^k/(k!)^2 ]
        let t = 0.25 * x * x;
        let mut term = 1.0; // t^k/(k!)^2
        let mut h = 0.0; // harmonic number H_k
        let mut sum = 0.0;
        for k in 1..60 {
            term *= t / ((k * k) as f64);
            h += 1.0 / k as f64;
            let contrib = if k % 2 == 1 { term * h } else { -term * h };
            sum += contrib;
            if term * h < 1e-20 {
                break;
            }
        }
        (2.0 / PI) * (((0.5 * x).ln() + EULER_GAMMA) * j0(x) + sum)
    } else {
        jy_large(0, x).1
    }
}

fn y1(x: f64) -> f64 {
    if x < LARGE_X {
        // (2/pi)(ln(x/2)+gamma) J_1(x) - 2/(pi x)
        //   - (x/(2 pi)) sum_{k>=0} (H_k + H_{k+1}) (-t)^k / (k! (k+1)!)
        let t = 0.25 * x * x;
        let mut term = 1.0; // (-t)^k / (k!(k+1)!)
        let mut hk = 0.0;
        let mut hk1 = 1.0;
        let mut sum = term * (hk + hk1);
        for k in 1..60 {
            term *= -t / ((k * (k + 1)) as f64);
            hk += 1.0 / k as f64;
            hk1 += 1.0 / (k + 1) as f64;
            let contrib = term * (hk + hk1);
            sum += contrib;
            if contrib.abs() < 1e-20 {
                break;
            }
        }
        (2.0 / PI) * (((0.5 * x).ln() + EULER_GAMMA) * j1(x)) - 2.0 / (PI * x)
            - x / (2.0 * PI) * sum
    } else {
        jy_large(1, x).1
    }
}

/// Hankel modulus/phase evaluation for orders 0 and 1, `x >= 8`.
fn jy_large(order: u32, x: f64) -> (f64, f64) {
    let u = (8.0 / x) * (8.0 / x);
    let (p, xq) = match order {
        0 => (
            cheb_eval(&tables::CHEB_P0, u),
            cheb_eval(&tables::CHEB_XQ0, u),
        ),
        _ => (
            cheb_eval(&tables::CHEB_P1, u),
            cheb_eval(&tables::CHEB_XQ1, u),
        ),
    };
    let q = xq / x;
    let w = x - order as f64 * FRAC_PI_2 - FRAC_PI_4;
    let (sw, cw) = w.sin_cos();
    let amp = (2.0 / (PI * x)).sqrt();
    (amp * (p * cw - q * sw), amp * (p * sw + q * cw))
}

/// Clenshaw evaluation of a Chebyshev series on [0, 1].
fn cheb_eval(coeffs: &[f64], u: f64) -> f64 {
    let t = 2.0 * u - 1.0;
    let mut b1 = 0.0;
    let mut b2 = 0.0;
    for &c in coeffs[1..].iter().rev() {
        let next = 2.0 * t * b1 - b2 + c;
        b2 = b1;
        b1 = next;
    }
    t * b1 - b2 + coeffs[0]
}

/// `J_m` for m >= 2: upward recurrence in the oscillatory regime (m < x),
/// Miller's downward recurrence otherwise.
fn jn_high(m: u32, x: f64) -> f64 {
    if x == 0.0 {
        return 0.0;
    }
    if (m as f64) < x {
        let mut prev = j0(x);
        let mut cur = j1(x);
        for k in 1..m {
            let next = (2.0 * k as f64 / x) * cur - prev;
            prev = cur;
            cur = next;
        }
        cur
    } else {
        jn_miller(m, x)
    }
}

/// Downward recurrence normalized by `J_0 + 2 sum_{k>=1} J_{2k} = 1`.
fn jn_miller(m: u32, x: f64) -> f64 {
    let start = (m.max(x.ceil() as u32) + 40) & !1; // even start order
    let mut fp1 = 0.0_f64; // J~_{k+1}
    let mut f = 1e-300_f64; // J~_k seed
    let mut target = 0.0;
    let mut norm = 0.0;
    let mut k = start;
    loop {
        if k == m {
            target = f;
        }
        if k % 2 == 0 {
            norm += if k == 0 { f } else { 2.0 * f };
        }
        if k == 0 {
            break;
        }
        let fm1 = (2.0 * k as f64 / x) * f - fp1;
        fp1 = f;
        f = fm1;
        if f.abs() > 1e250 {
            // rescale to dodge overflow; ratios are all that matter
            fp1 /= 1e250;
            f /= 1e250;
            target /= 1e250;
            norm /= 1e250;
        }
        k -= 1;
    }
    target / norm
}

#[cfg(test)]
mod tests;
