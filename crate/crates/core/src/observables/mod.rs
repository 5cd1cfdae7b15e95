//! Universal scaling laws of three-body observables and the mean-field
//! direct/exchange decomposition of two- and three-body lengths.

mod mean_field;
mod scaling;
mod tables;

pub use mean_field::{
    a2b_operator_consistency, a3b_operator_consistency, coupling_constants,
    pair_exchange_matrix, three_body_direct_exchange, three_body_from_direct_exchange,
    two_body_direct_exchange, two_body_from_direct_exchange, CouplingConstants,
    ThreeBodyLengthSet,
};
pub use scaling::{interference_m, oscillation_o, resonance_p, tangent_t, ScalingParams};
pub use tables::{
    atom_dimer_scaling, detect_regime, dissociation_rate, enumerate_cells, evaluate_cell,
    rate_scaling, scaling_law, CellValue, Dominant, LengthRegime, Observable, RegimeDescriptor,
    ScalingTable, REGIME_RATIO, S1_A0_DOMINANT, S1_A2_DOMINANT, S1_F3B2,
};
