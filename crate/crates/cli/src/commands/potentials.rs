use std::path::Path;

use anyhow::Result;
use hyperspin::adiabatic::{potential_curves_with, CurveOptions, PotentialCurve};
use hyperspin::spin::product_block;

use super::{axis, NumericalFailure, UsageError};
use crate::cli::PotentialsArgs;
use crate::output::{emit, number, Csv};

/// Failed rows tolerated before the run counts as a numerical failure.
const MAX_FAILED_FRACTION: f64 = 0.01;

pub fn grid(r_min: f64, r_max: f64, points: usize, log: bool) -> Result<Vec<f64>> {
    if !(r_min > 0.0 && r_max > r_min && r_max.is_finite()) {
        anyhow::bail!(UsageError(format!("need 0 < Rmin < Rmax, got Rmin = {r_min}, Rmax = {r_max}")));
    }
    if points < 2 {
        anyhow::bail!(UsageError("a grid needs at least 2 points".into()));
    }
    let last = (points - 1) as f64;
    let mut grid: Vec<f64> = (0..points)
        .map(|i| {
            let t = i as f64 / last;
            if log {
                (r_min.ln() + t * (r_max / r_min).ln()).exp()
            } else {
                r_min + t * (r_max - r_min)
            }
        })
        .collect();
    grid[0] = r_min;
    grid[points - 1] = r_max;
    Ok(grid)
}

pub fn run(args: &PotentialsArgs, out: Option<&Path>) -> Result<()> {
    let species = args.species.species()?;
    let r_grid = grid(args.r_min, args.r_max, args.points as usize, args.log)?;
    let spins: Vec<u32> = match args.f3b {
        Some(f3b) => vec![f3b],
        None => product_block(species.f(), args.m)?.total_spins().collect(),
    };
    let options = CurveOptions {
        channels: args.channels,
        x_hi: args.x_max,
        ..CurveOptions::default()
    };
    let curves: Vec<PotentialCurve> = spins
        .iter()
        .map(|&f3b| potential_curves_with(&species, f3b, args.m, &r_grid, &options))
        .collect::<hyperspin::Result<_>>()?;

    let mut csv = Csv::new(&[
        "R[r_vdW]",
        "F3b",
        "channel_index",
        "s_or_abs_s",
        "s_axis",
        "x",
        "U[1/(m r_vdW^2)]",
        "flag",
    ]);
    let (mut rows, mut failed) = (0usize, 0usize);
    for (i, &r) in r_grid.iter().enumerate() {
        for curve in &curves {
            let point_failed = curve.failed_points.contains(&i);
            for channel in &curve.channels {
                rows += 1;
                let fields = match channel.points[i] {
                    Some(p) => [
                        number(p.x.abs().sqrt()),
                        axis(p.x).to_string(),
                        number(p.x),
                        number(p.u),
                        "ok".to_string(),
                    ],
                    None => {
                        failed += usize::from(point_failed);
                        let flag = if point_failed { "failed" } else { "absent" };
                        [number(f64::NAN), "none".into(), number(f64::NAN), number(f64::NAN), flag.into()]
                    }
                };
                csv.row(
                    [number(r), curve.f3b.to_string(), channel.index.to_string()]
                        .into_iter()
                        .chain(fields),
                );
            }
        }
    }
    emit(&csv.into_string(), out)?;
    for curve in &curves {
        for note in &curve.diagnostics {
            eprintln!("F3b={}: {note}", curve.f3b);
        }
    }
    if failed as f64 > MAX_FAILED_FRACTION * rows as f64 {
        anyhow::bail!(NumericalFailure(format!("{failed} of {rows} rows failed")));
    }
    Ok(())
}
