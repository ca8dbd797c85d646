//! Module-theoretic reading of the straightening expansions.

pub mod expansion;
pub mod kostka;

pub use expansion::{
    canonical_summand, expand_module, indecomposable_label, is_odd_prime, odd_prime, Flavor,
    ModuleExpansion,
};
pub use kostka::{transfer_multiplicity, KostkaTable};
