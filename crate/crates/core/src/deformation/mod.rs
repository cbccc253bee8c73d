//! The deformation complex `C(X)`, its auxiliary complexes, the chain map
//! `ρ: C(X') ⊕ C(X'') → C(X', X'')` and cohomology checks.
//!
//! `C(X)` is the shifted mapping cone of `ρ`: in each degree it is
//! `(C(X') ⊕ C(X''))^k ⊕ C(X', X'')^{k−1}`, which is what the deep
//! long-exact-sequence check exploits.

mod build;
mod checks;
mod complex;
mod layout;

pub use build::{
    build_cx, build_cx_double_prime, build_cx_double_prime_form, build_cx_form, build_cx_pair, build_cx_prime,
    build_cx_sum, build_cx_sum_form, build_rho, build_rho_form, ComplexForm,
};
pub use checks::{
    check_d1dual_injective, check_h0rho_injective, check_les_consistency, check_perfect_obstruction,
    check_rho1_surjective_on_cocycles, expected_dimension, LesReport, NodeExactness, ObstructionReport,
};
pub use complex::{cohomology, ChainComplex, ChainMap, CohomologyReport};
pub use layout::{selection, BlockMap, Layout, Summand};

#[cfg(test)]
mod tests;
