use std::path::Path;

use anyhow::Result;
use hyperspin::observables::{
    detect_regime, evaluate_cell, scaling_law, CellValue, Dominant, LengthRegime, RegimeDescriptor,
    ScalingParams,
};
use rayon::prelude::*;

use super::{NumericalFailure, UsageError};
use crate::cli::ObservablesArgs;
use crate::output::{emit, number, Csv};

/// Parses `lo:hi` into `points` log-spaced values of one sign.
pub fn sweep(range: &str, points: usize) -> Result<Vec<f64>> {
    let parsed = range
        .split_once(':')
        .and_then(|(lo, hi)| Some((lo.trim().parse::<f64>().ok()?, hi.trim().parse::<f64>().ok()?)));
    let Some((lo, hi)) = parsed else {
        anyhow::bail!(UsageError(format!("sweep must look like lo:hi, got {range:?}")));
    };
    if lo == 0.0 || hi == 0.0 || lo.signum() != hi.signum() || !lo.is_finite() || !hi.is_finite() {
        anyhow::bail!(UsageError(format!("sweep ends must be finite, nonzero and of one sign, got {range}")));
    }
    let last = (points - 1) as f64;
    Ok((0..points)
        .map(|i| {
            let t = i as f64 / last;
            lo.signum() * (lo.abs().ln() + t * (hi.abs() / lo.abs()).ln()).exp()
        })
        .collect())
}

/// Regime from signs and the larger length only.
fn sign_regime(f3b: u32, a0: f64, a2: f64) -> LengthRegime {
    if f3b == 1 {
        let (dominant, big, small) = if a2.abs() >= a0.abs() {
            (Dominant::A2, a2, a0)
        } else {
            (Dominant::A0, a0, a2)
        };
        LengthRegime::Hierarchy {
            dominant,
            dominant_positive: big > 0.0,
            other_positive: small > 0.0,
        }
    } else {
        LengthRegime::Single { a2_positive: a2 > 0.0 }
    }
}

enum Row {
    Cell(RegimeDescriptor, CellValue),
    Unclassified,
    Failed(String),
}

pub fn run(args: &ObservablesArgs, out: Option<&Path>) -> Result<()> {
    let points = args.points as usize;
    let lengths: Vec<(f64, f64, f64)> = match (&args.a0_sweep, &args.a2_sweep) {
        (Some(range), _) => sweep(range, points)?.into_iter().map(|a0| (a0, args.a2, a0)).collect(),
        (None, Some(range)) => sweep(range, points)?.into_iter().map(|a2| (args.a0, a2, a2)).collect(),
        (None, None) => vec![(args.a0, args.a2, args.a2)],
    };
    let s = &args.scaling;
    let params = ScalingParams {
        alpha: s.alpha,
        beta: s.beta,
        gamma: s.gamma,
        eta: s.eta,
        phi: s.phi,
        s0_mag: s.s0,
        ..ScalingParams::default()
    };
    params.validate()?;
    if !(1..=3).contains(&args.f3b) {
        anyhow::bail!(UsageError(format!("--F3b must be 1, 2 or 3, got {}", args.f3b)));
    }

    let rows: Vec<Row> = lengths
        .par_iter()
        .map(|&(a0, a2, _)| {
            let regime = if args.override_regime {
                sign_regime(args.f3b, a0, a2)
            } else {
                match detect_regime(args.f3b, a0, a2) {
                    Ok(r) => r,
                    Err(hyperspin::Error::Regime { .. }) => return Row::Unclassified,
                    Err(e) => return Row::Failed(e.to_string()),
                }
            };
            let descriptor = RegimeDescriptor {
                f3b: args.f3b,
                regime,
                observable: args.obs,
            };
            let value = if args.override_regime {
                evaluate_cell(&descriptor, a0, a2, &params, args.k)
            } else {
                scaling_law(&descriptor, a0, a2, &params, args.k)
            };
            match value {
                Ok(v) => Row::Cell(descriptor, v),
                Err(e) => Row::Failed(e.to_string()),
            }
        })
        .collect();

    let mut csv = Csv::new(&["a[r_vdW]", "value[r_vdW units]", "regime", "observable"]);
    let (mut unclassified, mut failures) = (0, Vec::new());
    for (row, &(_, _, a)) in rows.iter().zip(&lengths) {
        let (value, regime) = match row {
            Row::Cell(d, v) => {
                let value = match v {
                    CellValue::Value(v) => number(*v),
                    other => other.to_string(),
                };
                (value, format!("F3b={} {}", d.f3b, d.regime))
            }
            Row::Unclassified => {
                unclassified += 1;
                ("nan".into(), "unclassified".into())
            }
            Row::Failed(msg) => {
                failures.push(format!("a = {a}: {msg}"));
                ("nan".into(), "failed".into())
            }
        };
        csv.row([number(a), value, regime, args.obs.to_string()]);
    }
    emit(&csv.into_string(), out)?;
    if unclassified > 0 {
        eprintln!("note: {unclassified} rows outside every tabulated regime (ratio >= 100 required)");
    }
    for f in &failures {
        eprintln!("{f}");
    }
    if !failures.is_empty() {
        anyhow::bail!(NumericalFailure(format!("{} rows failed", failures.len())));
    }
    Ok(())
}
