//! Bound states of a single hyperradial channel.
//!
//! With `u(R) = R^{1/2} w(y)`, `y = ln R`, the radial equation
//! `−u''/(2μ) + U u = E u` becomes `w'' = [1/4 + 2μR²(U − E)] w`, which is
//! integrated with Numerov's method on a uniform `y` grid. States are found
//! by node counting and bisection in `ln(−E)`.

use serde::Serialize;

use crate::adiabatic::{adiabatic_potential, PotentialCurve};
use crate::error::{invalid, Result};
use crate::{EFIMOV_S0, THREE_BODY_REDUCED_MASS};

const MU: f64 = THREE_BODY_REDUCED_MASS;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ShortRangeSpec {
    pub r_vdw: f64,
    pub phi: f64,
    pub s0_mag: f64,
}

impl ShortRangeSpec {
    pub fn new(phi: f64, s0_mag: f64) -> Result<Self> {
        if !(s0_mag > 0.0 && s0_mag.is_finite()) {
            return invalid(format!("|s0| must be positive, got {s0_mag}"));
        }
        if !phi.is_finite() {
            return invalid("short-range phase must be finite");
        }
        Ok(Self {
            r_vdw: 1.0,
            phi,
            s0_mag,
        })
    }
}

impl Default for ShortRangeSpec {
    fn default() -> Self {
        Self {
            r_vdw: 1.0,
            phi: 0.0,
            s0_mag: EFIMOV_S0,
        }
    }
}

/// `r_φ = r_vdW e^{−φ/|s₀|}`.
pub fn three_body_parameter(spec: &ShortRangeSpec) -> f64 {
    spec.r_vdw * (-spec.phi / spec.s0_mag).exp()
}

/// Potential of one channel as a function of `R`.
#[derive(Clone, Debug, PartialEq)]
pub enum ChannelPotential {
    /// `U = (x − 1/4)/(2μR²)` with constant `x = s²`.
    PowerLaw { x: f64 },
    /// Samples `(R, x_eff)` where `x_eff = 2μR²U + 1/4`, interpolated
    /// linearly in `ln R` and held constant beyond the ends.
    Tabulated { ln_r: Vec<f64>, x_eff: Vec<f64> },
}

impl ChannelPotential {
    pub fn power_law(x: f64) -> Result<Self> {
        if !x.is_finite() {
            return invalid("channel x must be finite");
        }
        Ok(Self::PowerLaw { x })
    }

    /// Channel `index` of a computed curve; grid points where the channel
    /// was not found are skipped.
    pub fn from_curve(curve: &PotentialCurve, index: usize) -> Result<Self> {
        let channel = curve
            .channels
            .get(index)
            .ok_or_else(|| crate::Error::InvalidArgument(format!("curve has no channel {index}")))?;
        let (ln_r, x_eff): (Vec<f64>, Vec<f64>) = curve
            .r_grid
            .iter()
            .zip(&channel.points)
            .filter_map(|(&r, p)| p.map(|p| (r.ln(), p.x)))
            .unzip();
        if ln_r.len() < 2 {
            return invalid(format!("channel {index} has fewer than two points"));
        }
        Ok(Self::Tabulated { ln_r, x_eff })
    }

    /// `2μR²U + 1/4` at `ln R = y`.
    fn x_at(&self, y: f64) -> f64 {
        match self {
            Self::PowerLaw { x } => *x,
            Self::Tabulated { ln_r, x_eff } => {
                let last = ln_r.len() - 1;
                if y <= ln_r[0] {
                    return x_eff[0];
                }
                if y >= ln_r[last] {
                    return x_eff[last];
                }
                let i = ln_r.partition_point(|&v| v <= y) - 1;
                let t = (y - ln_r[i]) / (ln_r[i + 1] - ln_r[i]);
                x_eff[i] + t * (x_eff[i + 1] - x_eff[i])
            }
        }
    }

    pub fn value(&self, r: f64) -> f64 {
        adiabatic_potential(self.x_at(r.ln()), r)
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpectrumOptions {
    /// Outer hard wall; `None` means `10⁴ ×` the inner wall.
    pub outer: Option<f64>,
    pub points_per_decade: usize,
}

impl Default for SpectrumOptions {
    fn default() -> Self {
        Self {
            outer: None,
            points_per_decade: 400,
        }
    }
}

/// Outer radius large enough for `n` states of a channel with exponent
/// `|s₀|`, with two spare log-periods of margin.
pub fn outer_radius_for(inner_wall: f64, n: usize, s0_mag: f64) -> f64 {
    inner_wall * ((n as f64 + 2.0) * std::f64::consts::PI / s0_mag).exp()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundSpectrum {
    /// Negative energies, deepest first.
    pub energies: Vec<f64>,
    pub boundary: f64,
    pub outer: f64,
    pub channel: Option<usize>,
    /// Nodes of each eigenfunction inside the box.
    pub nodes: Vec<usize>,
    /// Fewer states than requested fit in the box.
    pub truncated: bool,
}

struct Grid {
    y0: f64,
    h: f64,
    steps: usize,
}

impl Grid {
    fn new(inner: f64, outer: f64, points_per_decade: usize) -> Self {
        let span = (outer / inner).ln();
        let h_target = std::f64::consts::LN_10 / points_per_decade as f64;
        let steps = (span / h_target).ceil().max(4.0) as usize;
        Self {
            y0: inner.ln(),
            h: span / steps as f64,
            steps,
        }
    }
}

/// Sign changes of the solution that vanishes at the inner wall.
fn count_nodes(potential: &ChannelPotential, grid: &Grid, energy: f64) -> usize {
    let h2 = grid.h * grid.h / 12.0;
    let q = |i: usize| {
        let y = grid.y0 + grid.h * i as f64;
        potential.x_at(y) - 2.0 * MU * energy * (2.0 * y).exp()
    };
    let (mut w_prev, mut w) = (0.0f64, 1e-10f64);
    let (mut q_prev, mut q_cur) = (q(0), q(1));
    let mut nodes = 0;
    for i in 1..grid.steps {
        let q_next = q(i + 1);
        let w_next = (2.0 * w * (1.0 + 5.0 * h2 * q_cur) - w_prev * (1.0 - h2 * q_prev))
            / (1.0 - h2 * q_next);
        if w_next == 0.0 || w_next.signum() != w.signum() {
            nodes += 1;
        }
        // in the forbidden region a growing solution cannot turn back
        if q_next > 0.0 && q_cur > 0.0 && w_next.abs() > w.abs() && w_next.signum() == w.signum() {
            break;
        }
        if w_next.abs() > 1e100 {
            w_prev = w / 1e100;
            w = w_next / 1e100;
        } else {
            w_prev = w;
            w = w_next;
        }
        q_prev = q_cur;
        q_cur = q_next;
    }
    nodes
}

/// Hard-wall bound states between `inner_wall` and the outer boundary.
pub fn bound_states(
    potential: &ChannelPotential,
    inner_wall: f64,
    n_max: usize,
    options: &SpectrumOptions,
) -> Result<BoundSpectrum> {
    if !(inner_wall > 0.0 && inner_wall.is_finite()) {
        return invalid(format!("inner wall must be positive, got {inner_wall}"));
    }
    if options.points_per_decade < 200 {
        return invalid("at least 200 grid points per decade are required");
    }
    let outer = options.outer.unwrap_or(inner_wall * 1e4);
    if !(outer > inner_wall && outer.is_finite()) {
        return invalid(format!("outer boundary {outer} must exceed the inner wall {inner_wall}"));
    }
    let grid = Grid::new(inner_wall, outer, options.points_per_decade);

    // deepest possible energy: the potential minimum on the grid
    let u_min = (0..=grid.steps)
        .map(|i| potential.value((grid.y0 + grid.h * i as f64).exp()))
        .fold(f64::INFINITY, f64::min);
    let mut spectrum = BoundSpectrum {
        energies: Vec::new(),
        boundary: inner_wall,
        outer,
        channel: None,
        nodes: Vec::new(),
        truncated: false,
    };
    if u_min >= 0.0 {
        spectrum.truncated = n_max > 0;
        return Ok(spectrum);
    }
    let deep = (-u_min).ln() + 1.0;
    let shallow = (1e-8 / (2.0 * MU * outer * outer)).ln();
    let nodes_at = |log_depth: f64| count_nodes(potential, &grid, -log_depth.exp());
    let available = nodes_at(shallow);

    for n in 0..n_max.min(available) {
        // N(ln|E|) decreases with depth; find where it drops from n+1 to n
        let (mut lo, mut hi) = (shallow, deep);
        while (hi - lo).abs() > 1e-11 {
            let mid = 0.5 * (lo + hi);
            if nodes_at(mid) > n {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        spectrum.energies.push(-(0.5 * (lo + hi)).exp());
        spectrum.nodes.push(n);
    }
    spectrum.truncated = spectrum.energies.len() < n_max;
    Ok(spectrum)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct RatioCheck {
    pub ratio: f64,
    pub deviation: f64,
}

/// `E_n/E_{n+1}` for consecutive states against `e^{2π/|s₀|}`.
pub fn geometric_ratio_check(spectrum: &BoundSpectrum, s0_mag: f64) -> Result<Vec<RatioCheck>> {
    if spectrum.energies.len() < 2 {
        return invalid("need at least two states to form a ratio");
    }
    if !(s0_mag > 0.0) {
        return invalid("|s0| must be positive");
    }
    let ideal = (2.0 * std::f64::consts::PI / s0_mag).exp();
    Ok(spectrum
        .energies
        .windows(2)
        .map(|pair| {
            let ratio = pair[0] / pair[1];
            RatioCheck {
                ratio,
                deviation: (ratio / ideal - 1.0).abs(),
            }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_body_parameter_values() {
        let spec = ShortRangeSpec::new(0.0, 1.00624).unwrap();
        assert_eq!(three_body_parameter(&spec), 1.0);
        let spec = ShortRangeSpec::new(std::f64::consts::PI, 1.00624).unwrap();
        assert!((three_body_parameter(&spec) - 0.044_064_064_928_685_5).abs() < 1e-12);
        let shifted = ShortRangeSpec::new(3.0 * std::f64::consts::PI, 1.00624).unwrap();
        let ratio = three_body_parameter(&shifted) / three_body_parameter(&spec);
        assert!((ratio - (-2.0 * std::f64::consts::PI / 1.00624).exp()).abs() < 1e-15);
        assert!(ShortRangeSpec::new(0.0, 0.0).is_err());
    }

    #[test]
    fn repulsive_channel_has_no_states() {
        let s = bound_states(&ChannelPotential::power_law(4.0).unwrap(), 1.0, 3, &SpectrumOptions::default())
            .unwrap();
        assert!(s.energies.is_empty());
        assert!(s.truncated);
    }

    #[test]
    fn tabulated_power_law_matches() {
        let ln_r: Vec<f64> = (0..10).map(|i| i as f64).collect();
        let tab = ChannelPotential::Tabulated {
            ln_r,
            x_eff: vec![-1.2; 10],
        };
        let pl = ChannelPotential::power_law(-1.2).unwrap();
        for r in [0.5, 3.0, 1e5] {
            assert!((tab.value(r) - pl.value(r)).abs() < 1e-14);
        }
    }

    #[test]
    fn two_states_give_one_ratio() {
        let s = BoundSpectrum {
            energies: vec![-515.0, -1.0],
            boundary: 1.0,
            outer: 10.0,
            channel: None,
            nodes: vec![0, 1],
            truncated: false,
        };
        let checks = geometric_ratio_check(&s, 1.00624).unwrap();
        assert_eq!(checks.len(), 1);
        assert!(checks[0].deviation < 1e-3);
    }
}
