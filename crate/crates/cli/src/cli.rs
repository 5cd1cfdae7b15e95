use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use hyperspin::observables::Observable;
use hyperspin::spin::SpinorSpecies;
use hyperspin::EFIMOV_S0;

#[derive(Debug, Parser)]
#[command(name = "hyperspin", version, about = "Three-body adiabatic potentials and Efimov scaling for spinor bosons")]
#[command(args_override_self = true)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Flat `key = value` file of flag defaults.
    #[arg(long, global = true, value_name = "PATH")]
    pub config: Option<PathBuf>,

    /// Worker threads (capped by HYPERSPIN_THREADS).
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    /// Output file; stdout when omitted.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Channel roots s_ν(R), or the asymptotic root-table comparison.
    Roots(RootsArgs),
    /// Adiabatic potentials U_ν(R) over a grid of hyperradii.
    Potentials(PotentialsArgs),
    /// Scattering-length scaling laws of recombination and atom-dimer observables.
    Observables(ObservablesArgs),
    /// Hard-wall Efimov spectrum of one channel.
    Spectrum(SpectrumArgs),
    /// Product and coupled spin bases of one (f, M) block, as JSON.
    Spinbasis(SpinbasisArgs),
}

#[derive(Debug, Clone, Args)]
pub struct SpeciesArgs {
    /// Hyperfine spin of the atoms.
    #[arg(long, default_value_t = 1)]
    pub f: u32,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub a0: f64,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub a2: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub a4: Option<f64>,
}

impl SpeciesArgs {
    pub fn species(&self) -> anyhow::Result<SpinorSpecies> {
        let species = match (self.f, self.a4) {
            (1, None) => SpinorSpecies::spin_one(self.a0, self.a2)?,
            (1, Some(_)) => anyhow::bail!(crate::commands::UsageError("--a4 needs --f 2".into())),
            (2, a4) => SpinorSpecies::spin_two(self.a0, self.a2, a4.unwrap_or(0.0))?,
            (f, _) => {
                let mut lengths = vec![(0, self.a0), (2, self.a2)];
                if let Some(a4) = self.a4 {
                    lengths.push((4, a4));
                }
                SpinorSpecies::new(f, &lengths)?
            }
        };
        Ok(species)
    }
}

#[derive(Debug, Clone, Args)]
pub struct RootsArgs {
    #[command(flatten)]
    pub species: SpeciesArgs,
    /// Hyperradius in r_vdW.
    #[arg(long = "R")]
    pub r: Option<f64>,
    /// Three-body spin; all allowed values when omitted.
    #[arg(long = "F3b")]
    pub f3b: Option<u32>,
    #[arg(long = "M", default_value_t = 0, allow_negative_numbers = true)]
    pub m: i32,
    /// Lowest roots reported per F3b.
    #[arg(long, default_value_t = 3)]
    pub channels: usize,
    /// Upper end of the x = s² search window.
    #[arg(long = "x-max", default_value_t = 100.0)]
    pub x_max: f64,
    /// Compare every tabulated asymptotic regime of --f with the solver.
    #[arg(long = "regime-check")]
    pub regime_check: bool,
    /// Separation of length scales used by --regime-check.
    #[arg(long, default_value_t = 1e4)]
    pub ratio: f64,
}

#[derive(Debug, Clone, Args)]
pub struct PotentialsArgs {
    #[command(flatten)]
    pub species: SpeciesArgs,
    #[arg(long = "F3b")]
    pub f3b: Option<u32>,
    #[arg(long = "M", default_value_t = 0, allow_negative_numbers = true)]
    pub m: i32,
    #[arg(long = "Rmin", default_value_t = 1.0)]
    pub r_min: f64,
    #[arg(long = "Rmax", default_value_t = 1e3)]
    pub r_max: f64,
    #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(2..))]
    pub points: u64,
    /// Logarithmic grid spacing.
    #[arg(long)]
    pub log: bool,
    #[arg(long, default_value_t = 3)]
    pub channels: usize,
    #[arg(long = "x-max", default_value_t = 100.0)]
    pub x_max: f64,
}

#[derive(Debug, Clone, Args)]
pub struct ScalingArgs {
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub alpha: f64,
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub beta: f64,
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub gamma: f64,
    /// Inelasticity parameter.
    #[arg(long, default_value_t = 0.1)]
    pub eta: f64,
    /// Short-range phase.
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub phi: f64,
    #[arg(long, default_value_t = EFIMOV_S0)]
    pub s0: f64,
}

#[derive(Debug, Clone, Args)]
pub struct ObservablesArgs {
    #[arg(long = "F3b")]
    pub f3b: u32,
    /// Observable id: K3_0, K3_2, K3d, a3b, D3_0, D3_2, Kad_0d, Kad_2d,
    /// Kad_20, Kad_02, aad_0, aad_2.
    #[arg(long)]
    pub obs: Observable,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub a0: f64,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub a2: f64,
    /// Sweep a0 log-uniformly over lo:hi (both of one sign).
    #[arg(long = "a0-sweep", allow_hyphen_values = true, conflicts_with = "a2_sweep")]
    pub a0_sweep: Option<String>,
    /// Sweep a2 log-uniformly over lo:hi (both of one sign).
    #[arg(long = "a2-sweep", allow_hyphen_values = true)]
    pub a2_sweep: Option<String>,
    #[arg(long, default_value_t = 200, value_parser = clap::value_parser!(u64).range(2..))]
    pub points: u64,
    /// Collision wavenumber k (or k_ad for atom-dimer observables).
    #[arg(long, default_value_t = 0.0)]
    pub k: f64,
    /// Classify by signs and the larger length only, skipping the ≫ test.
    #[arg(long = "override-regime")]
    pub override_regime: bool,
    #[command(flatten)]
    pub scaling: ScalingArgs,
}

#[derive(Debug, Clone, Args)]
pub struct SpectrumArgs {
    /// Constant channel x = s² of a pure power-law potential.
    #[arg(long, default_value_t = -1.01252, allow_negative_numbers = true)]
    pub x: f64,
    /// Inner hard wall; r_φ from --phi when omitted.
    #[arg(long)]
    pub wall: Option<f64>,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub phi: f64,
    /// Number of states.
    #[arg(long, default_value_t = 6)]
    pub n: usize,
    /// Outer hard wall; sized for --n states when omitted.
    #[arg(long)]
    pub outer: Option<f64>,
    #[arg(long = "points-per-decade", default_value_t = 400)]
    pub points_per_decade: usize,
    /// Use a computed potential curve of this F3b instead of --x.
    #[arg(long = "F3b")]
    pub f3b: Option<u32>,
    #[arg(long, default_value_t = 0)]
    pub channel: usize,
    #[arg(long = "M", default_value_t = 0, allow_negative_numbers = true)]
    pub m: i32,
    /// Grid points of the computed curve.
    #[arg(long, default_value_t = 400, value_parser = clap::value_parser!(u64).range(2..))]
    pub points: u64,
    #[command(flatten)]
    pub species: SpeciesArgs,
}

#[derive(Debug, Clone, Args)]
pub struct SpinbasisArgs {
    #[arg(long, default_value_t = 1)]
    pub f: u32,
    #[arg(long = "M", default_value_t = 0, allow_negative_numbers = true)]
    pub m: i32,
    #[arg(long = "F3b")]
    pub f3b: Option<u32>,
}
