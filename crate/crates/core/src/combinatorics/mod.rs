//! Partitions, compositions and the counting functions behind the straightening rule.

pub mod counting;
pub mod dominance;
pub mod enumerate;
pub mod partition;
pub mod sequences;

pub use counting::{
    count_good_compositions, count_rearrangements, enumerate_p_i, enumerate_rearrangements,
    epsilon, good_compositions, signed_good_count,
};
pub use dominance::{dominance_compare, strictly_dominates, Dominance};
pub use enumerate::{pairs_of_total, partitions_of, partitions_with_remainder};
pub use partition::{
    union, BasisKey, Composition, Modulus, PairPartition, Partition, PartitionSequence,
};
pub use sequences::{enumerate_v, enumerate_w, enumerate_w_j, structure_constant};
