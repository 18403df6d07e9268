//! Finite-truncation evaluation of the trace/determinant relation: the
//! exp-trace/determinant identity on matrices, spectral zeta sums, both sides
//! of the relation for finite spectra, and the normalization constant.

mod matrix;
mod theorem;

pub use matrix::{
    exp_tr_det_auto, exp_tr_det_check, exp_tr_det_check_log, exp_tr_det_suite, expm, random_matrix,
    ExpTrDet, MatrixFamily, MatrixOperand, SuiteCase, DIRECT_TRACE_LIMIT, MAX_DIMENSION,
};
pub use theorem::{
    hc_relation_check, normalization_constant, normalization_constant_with, scalar_det_side, SCALAR_REAL_AXIS_MAX_IM,
    spectral_zeta, theorem_lhs, theorem_lhs_log, theorem_residual, theorem_residual_with,
    theorem_rhs, HcRecord, PhaseBranch, RhsRecord, SpectralZeta, TheoremResidual,
};
