//! Hyperfine spin bases for three identical spin-`f` bosons.

pub mod basis;
pub mod cg;
pub mod operators;

pub use basis::{
    product_block, symmetrize_states, three_body_coupled_states, two_body_coupled_states,
    CoupledSpinState, ProductSpinBlock, SpinorSpecies, SymmetrizedSubspace, Symmetry,
    SymmetryCombination, TwoBodyState,
};
pub use cg::{clebsch_gordan, clebsch_gordan_doubled};
pub use operators::{
    exchange_operator_matrix, pair_scattering_matrix, permutation_matrices, projector_matrix,
    transposition_matrices, ProjectorMatrix,
};
