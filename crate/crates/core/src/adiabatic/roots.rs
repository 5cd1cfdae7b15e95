//! Real-`x` scan for zero crossings of eigenvalue branches.

use serde::Serialize;

use super::kernel::{
    hyperradial_prefactor, pole_weight, projected_root_condition, KernelContext, POLE_GUARD,
};
use crate::error::{invalid, Error, Result};
use crate::spin::SpinorSpecies;

/// A root `x = s²` of the projected condition at one hyperradius.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ChannelRoot {
    pub x: f64,
    pub r: f64,
    pub f3b: u32,
    pub m_f3b: i32,
    pub residual: f64,
    pub multiplicity: usize,
}

impl ChannelRoot {
    /// `|s|`.
    pub fn s_abs(&self) -> f64 {
        self.x.abs().sqrt()
    }

    pub fn is_imaginary(&self) -> bool {
        self.x < 0.0
    }
}

/// Closed interval of `x = s²` to search.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct XWindow {
    pub lo: f64,
    pub hi: f64,
}

impl XWindow {
    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        if !(lo.is_finite() && hi.is_finite() && lo < hi) {
            return invalid(format!("x window [{lo}, {hi}] must be finite and increasing"));
        }
        Ok(Self { lo, hi })
    }

    /// Window reaching down to twice the deepest expected atom-dimer root,
    /// `t ≈ 1/(c a)`, for the smallest positive length.
    pub fn for_species(species: &SpinorSpecies, r: f64, hi: f64) -> Result<Self> {
        let c = hyperradial_prefactor(r);
        let smallest_positive = species
            .lengths()
            .map(|(_, a)| a)
            .filter(|&a| a > 0.0)
            .fold(f64::INFINITY, f64::min);
        let lo = if smallest_positive.is_finite() {
            let t_max = 2.0 / (c * smallest_positive) + 10.0;
            -t_max * t_max
        } else {
            -100.0
        };
        Self::new(lo, hi)
    }
}

/// Roots of the `F₃b` projected condition in `window`, ascending in `x`,
/// truncated to the lowest `max_roots`.
///
/// Fewer roots than requested is a normal outcome.
pub fn find_channel_roots(
    r: f64,
    ctx: &KernelContext,
    f3b: u32,
    window: XWindow,
    max_roots: usize,
) -> Result<Vec<ChannelRoot>> {
    if max_roots == 0 {
        return invalid("max_roots must be at least 1");
    }
    ctx.projector(f3b)?;
    let found = scan_branches(|x| projected_root_condition(x, r, ctx, f3b), window)?;
    Ok(found
        .into_iter()
        .take(max_roots)
        .map(|b| ChannelRoot {
            x: b.x,
            r,
            f3b,
            m_f3b: ctx.block().m_total(),
            residual: b.residual,
            multiplicity: b.multiplicity,
        })
        .collect())
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub(crate) struct BranchRoot {
    pub x: f64,
    pub residual: f64,
    pub multiplicity: usize,
}

const NEGATIVE_GEOMETRIC: usize = 500;
const NEGATIVE_UNIFORM: usize = 300;
const POSITIVE_UNIFORM: usize = 600;
const POSITIVE_CLUSTERED: usize = 150;
const MERGE_TOLERANCE: f64 = 1e-9;
/// Below this magnitude a non-crossing local minimum is inspected for a
/// pair of nearby roots.
const TOUCH_SUSPICION: f64 = 1e-3;
const TOUCH_ZERO: f64 = 1e-12;

/// Samples in `x` covering `[lo, hi]`, where neither end is inside a pole
/// guard band.
fn segment_samples(lo: f64, hi: f64) -> Vec<f64> {
    let mut xs = vec![lo, hi];
    if lo < 0.0 {
        let t_near = (-hi.min(0.0)).sqrt();
        let t_far = (-lo).sqrt();
        let t_start = if t_near > 0.0 {
            t_near
        } else {
            1e-4f64.min(t_far * 1e-3)
        };
        let ratio = (t_far / t_start).ln();
        for i in 0..=NEGATIVE_GEOMETRIC {
            let t = t_start * (ratio * i as f64 / NEGATIVE_GEOMETRIC as f64).exp();
            xs.push(-t * t);
        }
        for i in 0..=NEGATIVE_UNIFORM {
            let t = t_near + (t_far - t_near) * i as f64 / NEGATIVE_UNIFORM as f64;
            xs.push(-t * t);
        }
    }
    if hi > 0.0 {
        let s_a = lo.max(0.0).sqrt();
        let s_b = hi.sqrt();
        let span = s_b - s_a;
        for i in 0..=POSITIVE_UNIFORM {
            let s = s_a + span * i as f64 / POSITIVE_UNIFORM as f64;
            xs.push(s * s);
        }
        // geometric clustering toward both ends, where the poles sit
        let d_min = 1e-10 * s_b.max(1.0);
        let d_max = span / 2.0;
        if d_max > d_min {
            let ratio = (d_max / d_min).ln();
            for i in 0..=POSITIVE_CLUSTERED {
                let d = d_min * (ratio * i as f64 / POSITIVE_CLUSTERED as f64).exp();
                xs.push((s_a + d).powi(2));
                xs.push((s_b - d).powi(2));
            }
        }
    }
    xs.retain(|&x| x >= lo && x <= hi);
    xs.sort_by(f64::total_cmp);
    xs.dedup();
    xs
}

/// Pole-free sub-intervals of the window.
fn segments(window: XWindow) -> Vec<(f64, f64)> {
    let guard = 2.0 * POLE_GUARD;
    let mut edges = vec![(window.lo, 0.0)];
    let mut n = 1.0f64;
    loop {
        let pole = 4.0 * n * n;
        if pole - guard >= window.hi {
            break;
        }
        if pole + guard > window.lo {
            edges.push((pole, guard));
        }
        n += 1.0;
    }
    edges.push((window.hi, 0.0));
    let mut out = Vec::new();
    for pair in edges.windows(2) {
        let (a, ga) = pair[0];
        let (b, gb) = pair[1];
        let lo = (a + ga).max(window.lo);
        let hi = (b - gb).min(window.hi);
        if lo < hi {
            out.push((lo, hi));
        }
    }
    out
}

/// Zero crossings of each sorted eigenvalue branch returned by `eval`.
pub(crate) fn scan_branches<F>(eval: F, window: XWindow) -> Result<Vec<BranchRoot>>
where
    F: Fn(f64) -> Result<Vec<f64>>,
{
    let mut raw = Vec::new();
    for (lo, hi) in segments(window) {
        let xs = segment_samples(lo, hi);
        let values = xs.iter().map(|&x| eval(x)).collect::<Result<Vec<_>>>()?;
        let branches = values.first().map_or(0, Vec::len);
        for k in 0..branches {
            let branch = |x: f64| -> Result<f64> { Ok(eval(x)?[k]) };
            for i in 0..xs.len() - 1 {
                let (va, vb) = (values[i][k], values[i + 1][k]);
                if is_negative(va) != is_negative(vb) {
                    raw.push(bisect(&branch, xs[i], xs[i + 1], va)?);
                    continue;
                }
                if i == 0 {
                    continue;
                }
                let vp = values[i - 1][k];
                let local_min = va.abs() < vp.abs() && va.abs() < vb.abs();
                if local_min && va.abs() < TOUCH_SUSPICION && is_negative(vp) == is_negative(va) {
                    raw.extend(inspect_touch(&branch, xs[i - 1], xs[i], xs[i + 1], k)?);
                }
            }
        }
    }
    Ok(merge(raw))
}

fn is_negative(v: f64) -> bool {
    v < 0.0
}

fn bisect<F>(branch: &F, mut a: f64, mut b: f64, va: f64) -> Result<(f64, f64)>
where
    F: Fn(f64) -> Result<f64>,
{
    let negative_at_a = is_negative(va);
    for _ in 0..200 {
        let mid = 0.5 * (a + b);
        if mid <= a || mid >= b {
            break;
        }
        if is_negative(branch(mid)?) == negative_at_a {
            a = mid;
        } else {
            b = mid;
        }
    }
    let x = 0.5 * (a + b);
    let residual = pole_weight(x) * branch(x)?.abs();
    Ok((x, residual))
}

/// Golden-section search for a branch that dips to zero between samples
/// without changing sign at them.
fn inspect_touch<F>(branch: &F, lo: f64, mid: f64, hi: f64, k: usize) -> Result<Vec<(f64, f64)>>
where
    F: Fn(f64) -> Result<f64>,
{
    let sign = if branch(mid)? < 0.0 { -1.0 } else { 1.0 };
    let objective = |x: f64| -> Result<f64> { Ok(sign * branch(x)?) };
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let (mut a, mut b) = (lo, hi);
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    let (mut fc, mut fd) = (objective(c)?, objective(d)?);
    let floor = 1e-13 * mid.abs().max(1.0);
    while b - a > floor {
        for (p, fp) in [(c, fc), (d, fd)] {
            if fp < 0.0 {
                let left = bisect(branch, lo, p, sign)?;
                let right = bisect(branch, p, hi, -sign)?;
                return Ok(vec![left, right]);
            }
        }
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = objective(c)?;
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = objective(d)?;
        }
    }
    let x = 0.5 * (a + b);
    let value = objective(x)?;
    if value <= TOUCH_ZERO {
        let residual = pole_weight(x) * value.abs();
        // a tangential zero counts twice
        return Ok(vec![(x, residual), (x, residual)]);
    }
    if value < 1e-9 {
        return Err(Error::UnresolvedCrossing { branch: k, x });
    }
    Ok(Vec::new())
}

fn merge(mut raw: Vec<(f64, f64)>) -> Vec<BranchRoot> {
    raw.sort_by(|a, b| a.0.total_cmp(&b.0));
    let mut out: Vec<BranchRoot> = Vec::new();
    let mut sum = 0.0;
    for (x, residual) in raw {
        if let Some(last) = out.last_mut() {
            if (x - last.x).abs() <= MERGE_TOLERANCE * last.x.abs().max(1.0) {
                sum += x;
                last.multiplicity += 1;
                last.x = sum / last.multiplicity as f64;
                last.residual = last.residual.max(residual);
                continue;
            }
        }
        sum = x;
        out.push(BranchRoot {
            x,
            residual,
            multiplicity: 1,
        });
    }
    out
}
