use std::path::Path;

use anyhow::Result;
use hyperspin::adiabatic::{potential_curves_with, CurveOptions};
use hyperspin::spectrum::{
    bound_states, outer_radius_for, three_body_parameter, ChannelPotential, ShortRangeSpec,
    SpectrumOptions,
};
use hyperspin::EFIMOV_S0;

use super::potentials::grid;
use crate::cli::SpectrumArgs;
use crate::output::{emit, number, Csv};

pub fn run(args: &SpectrumArgs, out: Option<&Path>) -> Result<()> {
    // |s₀| of the channel sets both r_φ and the default box size
    let s0_mag = if args.f3b.is_none() && args.x < 0.0 {
        (-args.x).sqrt()
    } else {
        EFIMOV_S0
    };
    let wall = match args.wall {
        Some(w) => w,
        None => three_body_parameter(&ShortRangeSpec::new(args.phi, s0_mag)?),
    };
    let outer = args.outer.unwrap_or_else(|| outer_radius_for(wall, args.n, s0_mag));
    let potential = match args.f3b {
        None => ChannelPotential::power_law(args.x)?,
        Some(f3b) => {
            let species = args.species.species()?;
            let r_grid = grid(wall, outer, args.points as usize, true)?;
            let options = CurveOptions {
                channels: args.channel + 1,
                ..CurveOptions::default()
            };
            let curve = potential_curves_with(&species, f3b, args.m, &r_grid, &options)?;
            ChannelPotential::from_curve(&curve, args.channel)?
        }
    };
    let options = SpectrumOptions {
        outer: Some(outer),
        points_per_decade: args.points_per_decade,
    };
    let mut spectrum = bound_states(&potential, wall, args.n, &options)?;
    spectrum.channel = args.f3b.map(|_| args.channel);

    let mut csv = Csv::new(&["n", "E_n[1/(m r_vdW^2)]", "ratio_to_next"]);
    for (i, &e) in spectrum.energies.iter().enumerate() {
        let ratio = spectrum.energies.get(i + 1).map_or(f64::NAN, |next| e / next);
        csv.row([i.to_string(), number(e), number(ratio)]);
    }
    emit(&csv.into_string(), out)?;
    if spectrum.truncated {
        eprintln!(
            "warning: only {} of {} states fit between R = {} and R = {}",
            spectrum.energies.len(),
            args.n,
            wall,
            outer
        );
    }
    Ok(())
}
