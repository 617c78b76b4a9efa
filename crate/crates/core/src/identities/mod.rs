//! Both sides of the q-identities, exact comparison, sampling and the suite runner.
//!
//! Parameters `a, b, c, z` and `x`-free scalars are sampled rationals; `q` is
//! the only indeterminate. Every `*_check` returns a [`VerificationOutcome`]
//! whose witness, on failure, is the canonical form of `LHS - RHS`.

mod master;
pub mod outcome;
pub mod sampling;
mod suite;
mod xpoly;

pub use master::{
    grid_degree_bounds, master_args, master_check, master_first_index_check, master_first_index_grid_proof,
    master_first_index_rhs, master_rhs,
};
pub use outcome::{GridInfo, Identity, IdentitySpec, ParamTuple, VerificationOutcome, Witness, WitnessTerm};
pub use suite::{verify_suite, EntryStatus, IntRange, OutputFormat, SuiteConfig, SuiteEntry};
pub use xpoly::{
    a_coeff, dilcher_check, dilcher_lhs, pf_corollary_check, pf_corollary_sides, x_coeff_check, x_coeff_sum,
    x_poly_check, x_poly_check_mutated, x_poly_sides, x_poly_simple_pole_check, x_poly_simple_pole_sides,
    x_poly_unit_z_check,
};
