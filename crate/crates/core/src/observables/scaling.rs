//! Log-periodic scaling functions `M`, `P`, `T` and `O`.
//!
//! All four depend on `a` through `θ = |s₀| ln(|a|/r_φ)` and are therefore
//! invariant under `a → a·e^{π/|s₀|}`.

use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::spectrum::{three_body_parameter, ShortRangeSpec};
use crate::EFIMOV_S0;

/// Below this `|sin θ|` an `η = 0` evaluation counts as sitting on a
/// resonance.
const RESONANCE_TOLERANCE: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ScalingParams {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
    /// Inelasticity, `η ≥ 0`.
    pub eta: f64,
    /// Short-range phase fixing `r_φ`.
    pub phi: f64,
    pub s0_mag: f64,
    /// Subleading exponent. The table evaluators substitute the value that
    /// belongs to the regime being evaluated.
    pub s1: f64,
    pub r_vdw: f64,
}

impl Default for ScalingParams {
    fn default() -> Self {
        Self {
            alpha: 1.0,
            beta: 1.0,
            gamma: 1.0,
            eta: 0.1,
            phi: 0.0,
            s0_mag: EFIMOV_S0,
            s1: super::S1_A2_DOMINANT,
            r_vdw: 1.0,
        }
    }
}

impl ScalingParams {
    pub fn validate(&self) -> Result<()> {
        if !(self.eta >= 0.0 && self.eta.is_finite()) {
            return invalid(format!("eta must be non-negative, got {}", self.eta));
        }
        if !(self.s0_mag > 0.0 && self.s0_mag.is_finite()) {
            return invalid(format!("|s0| must be positive, got {}", self.s0_mag));
        }
        if !(self.s1 > 0.0 && self.s1.is_finite()) {
            return invalid(format!("s1 must be positive, got {}", self.s1));
        }
        if !(self.r_vdw > 0.0 && self.r_vdw.is_finite()) {
            return invalid("r_vdW must be positive");
        }
        if ![self.alpha, self.beta, self.gamma, self.phi].iter().all(|v| v.is_finite()) {
            return invalid("alpha, beta, gamma and phi must be finite");
        }
        Ok(())
    }

    pub fn with_s1(self, s1: f64) -> Self {
        Self { s1, ..self }
    }

    /// `r_φ = r_vdW e^{−φ/|s₀|}`.
    pub fn r_phi(&self) -> f64 {
        three_body_parameter(&ShortRangeSpec {
            r_vdw: self.r_vdw,
            phi: self.phi,
            s0_mag: self.s0_mag,
        })
    }

    fn phase(&self, a: f64) -> Result<f64> {
        self.validate()?;
        if a == 0.0 || !a.is_finite() {
            return invalid(format!("scattering length must be finite and nonzero, got {a}"));
        }
        Ok(self.s0_mag * (a.abs() / self.r_phi()).ln())
    }

    /// `sin²θ + sinh²η`, refusing the `η = 0` zeros.
    fn resonance_denominator(&self, a: f64, sin: f64) -> Result<f64> {
        if self.eta == 0.0 && sin.abs() < RESONANCE_TOLERANCE {
            return Err(Error::Resonance { a });
        }
        Ok(sin * sin + self.eta.sinh().powi(2))
    }
}

/// `M(a) = α e^{−2η}[sin²θ + sinh²η]`, defined for `a > 0`.
pub fn interference_m(a: f64, params: &ScalingParams) -> Result<f64> {
    if !(a > 0.0) {
        return invalid(format!("M(a) needs a positive length, got {a}"));
    }
    let sin = params.phase(a)?.sin();
    Ok(params.alpha * (-2.0 * params.eta).exp() * (sin * sin + params.eta.sinh().powi(2)))
}

/// `P(a) = β sinh2η / [sin²θ + sinh²η]`.
pub fn resonance_p(a: f64, params: &ScalingParams) -> Result<f64> {
    let sin = params.phase(a)?.sin();
    let denominator = params.resonance_denominator(a, sin)?;
    Ok(params.beta * (2.0 * params.eta).sinh() / denominator)
}

/// `T(a) = α + β·2 sinθ cosθ / [sin²θ + sinh²η]`.
pub fn tangent_t(a: f64, params: &ScalingParams) -> Result<f64> {
    let (sin, cos) = params.phase(a)?.sin_cos();
    let denominator = params.resonance_denominator(a, sin)?;
    Ok(params.alpha + params.beta * 2.0 * sin * cos / denominator)
}

/// `O(a) = α + β e^{−2η}[sin²θ + sinh²η]`.
pub fn oscillation_o(a: f64, params: &ScalingParams) -> Result<f64> {
    let sin = params.phase(a)?.sin();
    Ok(params.alpha + params.beta * (-2.0 * params.eta).exp() * (sin * sin + params.eta.sinh().powi(2)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn params(eta: f64) -> ScalingParams {
        ScalingParams {
            eta,
            s0_mag: 1.00624,
            ..ScalingParams::default()
        }
    }

    #[test]
    fn reference_points() {
        let p = params(0.1);
        let r_phi = p.r_phi();
        let m = interference_m(r_phi, &p).unwrap();
        assert!((m - (-0.2f64).exp() * 0.1f64.sinh().powi(2)).abs() < 1e-15);

        let quarter = r_phi * (PI / (2.0 * p.s0_mag)).exp();
        let expected = 0.2f64.sinh() / (1.0 + 0.1f64.sinh().powi(2));
        assert!((resonance_p(quarter, &p).unwrap() - expected).abs() < 1e-13);
        assert!((tangent_t(quarter, &p).unwrap() - p.alpha).abs() < 1e-12);

        let p0 = params(0.0);
        assert!((interference_m(quarter, &p0).unwrap() - 1.0).abs() < 1e-13);
        assert!((oscillation_o(r_phi, &p0).unwrap() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn small_eta_peak() {
        let p = params(1e-4);
        let peak = resonance_p(p.r_phi(), &p).unwrap();
        assert!((peak * p.eta / 2.0 - 1.0).abs() < 1e-6);
    }

    #[test]
    fn tangent_antisymmetry() {
        let p = params(0.05);
        let r_phi = p.r_phi();
        let up = tangent_t(r_phi * (0.3 / p.s0_mag).exp(), &p).unwrap();
        let down = tangent_t(r_phi * (-0.3 / p.s0_mag).exp(), &p).unwrap();
        assert!((up + down - 2.0 * p.alpha).abs() < 1e-12);
    }

    #[test]
    fn resonance_poles_at_zero_eta() {
        let p = params(0.0);
        let pole = p.r_phi() * (2.0 * PI / p.s0_mag).exp();
        assert!(matches!(resonance_p(pole, &p), Err(Error::Resonance { .. })));
        assert!(matches!(tangent_t(-pole, &p), Err(Error::Resonance { .. })));
        assert!(oscillation_o(pole, &p).is_ok());
    }

    #[test]
    fn argument_checks() {
        assert!(interference_m(-1.0, &params(0.1)).is_err());
        assert!(resonance_p(0.0, &params(0.1)).is_err());
        assert!(resonance_p(1.0, &params(-0.1)).is_err());
    }
}
