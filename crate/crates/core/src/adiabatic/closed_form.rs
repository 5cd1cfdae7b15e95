//! Scalar root conditions for `f = 1`, used as an independent check of the
//! projected determinant.
//!
//! With `u = c·s cot(sπ/2)` and `v = c·(−4 sin(sπ/6)) / (√3 sin(sπ/2))`:
//!
//! * `F₃b = 1`: `(a₀+a₂)u + (2a₀+a₂)v/3 − a₀a₂(u² + uv − 2v²) = 1`
//! * `F₃b = 2`: `a₂(u − v) = 1`
//! * `F₃b = 3`: `a₂(u + 2v) = 1`

use std::f64::consts::{FRAC_PI_2, PI};

use super::kernel::{angular_kernel, hyperradial_prefactor, pole_weight};
use super::roots::{scan_branches, XWindow};
use crate::error::{invalid, Result};

fn check(r: f64, f3b: u32) -> Result<()> {
    if !(r > 0.0 && r.is_finite()) {
        return invalid(format!("hyperradius must be positive and finite, got {r}"));
    }
    if !(1..=3).contains(&f3b) {
        return invalid(format!("closed forms exist for F3b = 1, 2, 3; got {f3b}"));
    }
    Ok(())
}

fn combine(u: f64, v: f64, a0: f64, a2: f64, f3b: u32) -> f64 {
    match f3b {
        1 => (a0 + a2) * u + (2.0 * a0 + a2) * v / 3.0 - a0 * a2 * (u * u + u * v - 2.0 * v * v),
        2 => a2 * (u - v),
        _ => a2 * (u + 2.0 * v),
    }
}

/// Left-hand side minus one of the `F₃b` condition.
pub fn closed_form_residual_f1(x: f64, r: f64, a0: f64, a2: f64, f3b: u32) -> Result<f64> {
    check(r, f3b)?;
    let k = angular_kernel(x)?;
    let c = hyperradial_prefactor(r);
    Ok(combine(c * k.direct, c * k.exchange, a0, a2, f3b) - 1.0)
}

/// Same sign and zeros as [`closed_form_residual_f1`]. Within one unit of a
/// pole in `s` it is evaluated as `ρ²/σ² · σ²(LHS − 1)` with `σ = sin(sπ/2)`
/// and `ρ` the distance to the pole, which stays smooth through the pole
/// and avoids cancellation between the diverging terms.
fn regularized_residual(x: f64, r: f64, a0: f64, a2: f64, f3b: u32) -> Result<f64> {
    let weight = pole_weight(x);
    if weight >= 1.0 {
        return closed_form_residual_f1(x, r, a0, a2, f3b);
    }
    // reject guard-band evaluations the same way the kernel does
    angular_kernel(x)?;
    let s = x.sqrt();
    let c = hyperradial_prefactor(r);
    let sigma = (s * FRAC_PI_2).sin();
    let u = c * s * (s * FRAC_PI_2).cos();
    let v = -c * 4.0 * (s * PI / 6.0).sin() / 3f64.sqrt();
    let scaled = match f3b {
        1 => {
            (a0 + a2) * u * sigma + (2.0 * a0 + a2) * v * sigma / 3.0
                - a0 * a2 * (u * u + u * v - 2.0 * v * v)
        }
        2 => a2 * (u - v) * sigma,
        _ => a2 * (u + 2.0 * v) * sigma,
    } - sigma * sigma;
    Ok(scaled * (weight / sigma).powi(2))
}

/// Roots `x` of the closed-form condition in `window`, ascending.
pub fn closed_form_roots(r: f64, a0: f64, a2: f64, f3b: u32, window: XWindow) -> Result<Vec<f64>> {
    check(r, f3b)?;
    let roots = scan_branches(
        |x| Ok(vec![regularized_residual(x, r, a0, a2, f3b)?]),
        window,
    )?;
    Ok(roots
        .into_iter()
        .flat_map(|root| std::iter::repeat(root.x).take(root.multiplicity))
        .collect())
}
