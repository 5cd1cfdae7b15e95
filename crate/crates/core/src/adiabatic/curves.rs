//! Hyperspherical potentials `U_ν(R)` tracked over a grid of hyperradii.

use rayon::prelude::*;
use serde::Serialize;

use super::kernel::KernelContext;
use super::roots::{find_channel_roots, ChannelRoot, XWindow};
use crate::error::{invalid, Result};
use crate::spin::SpinorSpecies;
use crate::THREE_BODY_REDUCED_MASS;

/// `U = (s² − 1/4) / (2μR²)` for unit atomic mass.
pub fn adiabatic_potential(x: f64, r: f64) -> f64 {
    (x - 0.25) / (2.0 * THREE_BODY_REDUCED_MASS * r * r)
}

/// `x` of an atom-dimer channel bound by `−1/a²` at hyperradius `r`.
pub fn atom_dimer_x(r: f64, a: f64) -> f64 {
    0.25 - 2.0 * THREE_BODY_REDUCED_MASS * r * r / (a * a)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ChannelLabel {
    EfimovAttractive,
    RepulsiveFreeAtom,
    AtomDimer { f2b: u32 },
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct CurvePoint {
    pub x: f64,
    pub u: f64,
    pub residual: f64,
}

/// Stretch of hyperradii over which `x` stays constant.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Plateau {
    pub r_start: f64,
    pub r_end: f64,
    pub x: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PotentialChannel {
    /// Rank of the channel within its `F₃b` (0 = lowest `x`).
    pub index: usize,
    /// One entry per grid point; `None` where the root was not found.
    pub points: Vec<Option<CurvePoint>>,
    /// Classification from the largest hyperradius where the channel exists.
    pub label: Option<ChannelLabel>,
    pub plateaus: Vec<Plateau>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PotentialCurve {
    pub f3b: u32,
    pub m_f3b: i32,
    pub r_grid: Vec<f64>,
    pub channels: Vec<PotentialChannel>,
    /// Human-readable notes on grid points where tracking lost a channel
    /// or the root search failed.
    pub diagnostics: Vec<String>,
    /// Grid indices at which the root search returned an error.
    pub failed_points: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CurveOptions {
    pub channels: usize,
    pub x_hi: f64,
    /// Relative flatness required of a plateau over one decade in `R`.
    pub plateau_tolerance: f64,
    /// Relative distance of `U` from `−1/a²` accepted for an atom-dimer label.
    pub dimer_tolerance: f64,
}

impl Default for CurveOptions {
    fn default() -> Self {
        Self {
            channels: 3,
            x_hi: 100.0,
            plateau_tolerance: 1e-6,
            dimer_tolerance: 0.05,
        }
    }
}

pub fn potential_curves(
    species: &SpinorSpecies,
    f3b: u32,
    m_f3b: i32,
    r_grid: &[f64],
) -> Result<PotentialCurve> {
    potential_curves_with(species, f3b, m_f3b, r_grid, &CurveOptions::default())
}

pub fn potential_curves_with(
    species: &SpinorSpecies,
    f3b: u32,
    m_f3b: i32,
    r_grid: &[f64],
    options: &CurveOptions,
) -> Result<PotentialCurve> {
    if r_grid.is_empty() {
        return invalid("hyperradius grid is empty");
    }
    if r_grid.iter().any(|&r| !(r > 0.0 && r.is_finite())) {
        return invalid("hyperradii must be positive and finite");
    }
    if r_grid.windows(2).any(|w| w[1] <= w[0]) {
        return invalid("hyperradius grid must be strictly increasing");
    }
    if options.channels == 0 {
        return invalid("at least one channel must be requested");
    }
    let ctx = KernelContext::new(species, m_f3b)?;
    ctx.projector(f3b)?;

    let per_point: Vec<Result<Vec<ChannelRoot>>> = r_grid
        .par_iter()
        .map(|&r| {
            let window = XWindow::for_species(species, r, options.x_hi)?;
            find_channel_roots(r, &ctx, f3b, window, options.channels)
        })
        .collect();

    let mut diagnostics = Vec::new();
    let mut failed_points = Vec::new();
    let mut channels: Vec<PotentialChannel> = (0..options.channels)
        .map(|index| PotentialChannel {
            index,
            points: vec![None; r_grid.len()],
            label: None,
            plateaus: Vec::new(),
        })
        .collect();
    let mut previous_count = None;
    for (i, (result, &r)) in per_point.into_iter().zip(r_grid).enumerate() {
        let roots = match result {
            Ok(roots) => roots,
            Err(e) => {
                diagnostics.push(format!("R = {r}: {e}"));
                failed_points.push(i);
                continue;
            }
        };
        // expand degenerate roots so each branch gets its own channel
        let expanded = roots
            .iter()
            .flat_map(|root| std::iter::repeat(root).take(root.multiplicity))
            .take(options.channels);
        let mut count = 0;
        for (channel, root) in channels.iter_mut().zip(expanded) {
            channel.points[i] = Some(CurvePoint {
                x: root.x,
                u: adiabatic_potential(root.x, r),
                residual: root.residual,
            });
            count += 1;
        }
        if previous_count.is_some_and(|p| p != count) {
            diagnostics.push(format!(
                "R = {r}: {count} channel(s) found, {} at the previous grid point",
                previous_count.unwrap_or(0)
            ));
        }
        previous_count = Some(count);
    }

    for channel in &mut channels {
        channel.plateaus = find_plateaus(r_grid, &channel.points, options.plateau_tolerance);
        channel.label = classify(species, r_grid, &channel.points, options.dimer_tolerance);
    }

    Ok(PotentialCurve {
        f3b,
        m_f3b,
        r_grid: r_grid.to_vec(),
        channels,
        diagnostics,
        failed_points,
    })
}

fn classify(
    species: &SpinorSpecies,
    r_grid: &[f64],
    points: &[Option<CurvePoint>],
    tolerance: f64,
) -> Option<ChannelLabel> {
    let (i, last) = points
        .iter()
        .enumerate()
        .rev()
        .find_map(|(i, p)| p.map(|p| (i, p)))?;
    if last.x > 0.0 {
        return Some(ChannelLabel::RepulsiveFreeAtom);
    }
    let dimer = species
        .lengths()
        .filter(|&(_, a)| a > 0.0)
        .map(|(f2b, a)| {
            let threshold = -1.0 / (a * a);
            (f2b, ((last.u - threshold) / threshold).abs())
        })
        .min_by(|a, b| a.1.total_cmp(&b.1));
    match dimer {
        Some((f2b, deviation)) if deviation < tolerance && r_grid[i] > 0.0 => {
            Some(ChannelLabel::AtomDimer { f2b })
        }
        _ => Some(ChannelLabel::EfimovAttractive),
    }
}

/// Maximal runs of grid points spanning at least a decade in `R` over which
/// `x` varies by less than `tolerance` (relative, floored at one).
fn find_plateaus(r_grid: &[f64], points: &[Option<CurvePoint>], tolerance: f64) -> Vec<Plateau> {
    let mut out: Vec<Plateau> = Vec::new();
    let n = r_grid.len();
    let mut start = 0;
    while start < n {
        let Some(anchor) = points[start] else {
            start += 1;
            continue;
        };
        let scale = anchor.x.abs().max(1.0);
        let mut end = start;
        while end + 1 < n {
            match points[end + 1] {
                Some(p) if (p.x - anchor.x).abs() <= tolerance * scale => end += 1,
                _ => break,
            }
        }
        if r_grid[end] >= 10.0 * r_grid[start] {
            out.push(Plateau {
                r_start: r_grid[start],
                r_end: r_grid[end],
                x: anchor.x,
            });
            start = end + 1;
        } else {
            start += 1;
        }
    }
    out
}
