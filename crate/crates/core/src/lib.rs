//! Upper bounds for `‖A⁻¹‖∞` when `A` is a Nekrasov matrix.
//!
//! The crate computes the Nekrasov row quantities `h_i(A)` and `z_i(A)`,
//! classifies matrices as SDD / Nekrasov / neither, evaluates the Varah
//! bound, the two classical Nekrasov bounds, their one-parameter scaled
//! variants and the closed-form optimal scaling parameter. An LU-based
//! oracle and a seeded random generator support verification.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]
#![deny(unsafe_code)]
// negated float comparisons are deliberate: they also reject NaN
#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::needless_range_loop)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod bounds;
mod error;
pub mod matrix;
pub mod nekrasov;
pub mod oracle;
#[cfg(test)]
mod test_matrices;

pub use bounds::{
    bound_baseline_diff, bound_baseline_ratio, bound_param_diff, bound_param_ratio, full_report,
    mu_sweep, optimal_mu_diff, optimal_mu_ratio, scaled_splitting_matrices, varah_bound,
    BoundReport, CaseTag, MuGrid, MuSweep, MuValue, NekrasovBounds, OptimalMu, SweepRow,
};
pub use error::{Error, Result};
pub use matrix::{
    comparison_matrix, deleted_row_sum, deleted_row_sums, triangular_split, ComparisonMatrix,
    Entries, SquareMatrix, TriangularSplit,
};
pub use nekrasov::{
    classify, compute_h_by_solve, compute_h_recursive, compute_z, compute_z_by_solve, szulc_check,
    NekrasovProfile, RowQuantities, Verdict,
};
pub use num_complex::Complex64;
pub use oracle::{
    brute_force_bound_min, exact_inverse_inf_norm, generate_nekrasov, BoundKind, ExactNorm,
    GeneratorConfig, SearchMinimum, NEAR_SINGULAR_GROWTH,
};
