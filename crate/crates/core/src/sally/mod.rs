//! Sally module and filtration invariants, Ratliff-Rush closures, depth
//! certificates and the classification of the Hilbert function of `I`.

mod classify;
mod closure;
mod table;

pub use classify::{
    classify, classify_with, decomposition_check, decomposition_rhs, decomposition_with,
    e1_formula_check, e1_formula_with, rank_one_c_length, rank_one_coefficients,
    rank_one_numerator, Branch, ClassificationReport, DecompositionFailure, DecompositionReport,
    E1Report, IntegralClosure, RankOneCase, Refinement,
};
pub use closure::{
    depth_probe, ratliff_rush, DepthProbe, FiltrationCheck, FiltrationHandle, DEFAULT_RR_CAP,
};
pub use table::{check_q_cap_i2, sally_table, vaz_pinto_lengths, SallyFlags, SallyTable};

/// Default bound for reduction-number searches and table lengths.
pub const DEFAULT_N_MAX: usize = 8;
