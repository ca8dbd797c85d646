//! Exact arithmetic in the quotient ring Γ^(m) of symmetric functions in two alphabets.
//!
//! Elements are sparse integer combinations of the basis `h_λ e_{mμ}`. [`ring`] holds the
//! closed-form straightening, [`oracles`] independent routes used to check it, and
//! [`rep_theory`] the reading of expansions as Grothendieck-group identities.

pub mod combinatorics;
pub mod error;
pub mod guard;
pub mod oracles;
pub mod rep_theory;
pub mod ring;
pub mod verify;

pub use combinatorics::{
    BasisKey, Composition, Dominance, Modulus, PairPartition, Partition, PartitionSequence,
};
pub use error::{GammaError, Result};
pub use guard::Guard;
pub use ring::RingElement;
