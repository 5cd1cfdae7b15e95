//! Adiabatic hyperspherical potentials from the zero-range kernel.

mod closed_form;
mod curves;
mod kernel;
mod roots;
mod table;

pub use closed_form::{closed_form_residual_f1, closed_form_roots};
pub use curves::{
    adiabatic_potential, atom_dimer_x, potential_curves, potential_curves_with, ChannelLabel,
    CurveOptions, CurvePoint, Plateau, PotentialChannel, PotentialCurve,
};
pub use kernel::{
    angular_kernel, hyperradial_prefactor, kernel_matrix, nearest_pole, projected_determinant,
    projected_root_condition, reduced_root_matrix, AngularKernel, KernelContext, POLE_GUARD,
};
pub use roots::{find_channel_roots, ChannelRoot, XWindow};
pub use table::{
    asymptotic_root_table, regime_check, tabulated_regimes, AggregateComparison, CellComparison,
    ExpectedRoot, RegimeReport, RootRegime, RootTable, TABLE_TOLERANCE, TABLE_WINDOW,
};
