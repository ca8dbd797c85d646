//! Independent routes to the same expansions, used to cross-check [`crate::ring`].

pub mod determinant;
pub mod identities;
pub mod numeric;
pub mod recursive;

pub use determinant::{expand_e_determinant, HessenbergMatrix};
pub use identities::{
    check_classical_limit, check_count_identity, check_p_intersection, check_relation,
    count_identity_sides, d_via_w, p_intersection_sides, relation_residue,
};
pub use numeric::{
    check_specialization, evaluate_e, evaluate_element, evaluate_h, random_case, EvaluationPoint,
    SpecializationCase,
};
pub use recursive::{expand_e_recursive, expand_e_recursive_table};
