//! Right composition factors, `[a, b]`-factors and the Composition Condition.

mod composition;
mod factors;
mod primes;

pub use composition::{
    composition_condition, composition_set_basis, definite, intersection_dimension, moment_vanishing_structural,
    CompositionSubspace, CompositionWitness, MomentComponent, MomentDecomposition,
};
pub use factors::{factor_report, kth_root_candidate, right_factor_lift, w_adic_expansion, FactorReport, RightFactor};
pub use primes::{prime_factor_support, prime_power_support, PrimeSet};
