//! Ground truth for verifying the bounds.
//!
//! * [`exact_inverse_inf_norm`] inverts `A` with partially pivoted LU.
//! * [`generate_nekrasov`] draws seeded random Nekrasov matrices.
//! * [`brute_force_bound_min`] minimises a scaled bound over a `μ` grid
//!   without using the closed-form optimum.

mod generate;
mod lu;
mod search;

pub use generate::{generate_nekrasov, GeneratorConfig};
pub use lu::{exact_inverse_inf_norm, ExactNorm, NEAR_SINGULAR_GROWTH};
pub use search::{brute_force_bound_min, BoundKind, SearchMinimum};
