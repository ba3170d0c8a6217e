//! Finite-group computations on complete multiplication tables.
//!
//! The crate builds small finite groups (from Cayley tables, permutation
//! generators, or standard families), derives their conjugacy-class
//! structure — including the subgroup `M(G)` generated by the elements in
//! the two smallest class sizes — central and derived series, and Fitting
//! subgroups, and then machine-checks a family of statements about those
//! objects on each concrete group, reporting structured verdicts with
//! witnesses.
//!
//! Layering, bottom up:
//! - [`set`]: bitset subsets of a group's element range.
//! - [`group`]: validated multiplication tables and permutations.
//! - [`subgroup`]: generation, normal closure, centralizers, normality.
//! - [`classes`]: conjugacy classes, commutator sets, small elements, M(G).
//! - [`series`]: lower/upper central and derived series.
//! - [`fitting`]: Fitting subgroup plus a normal-subgroup-enumeration oracle.
//! - [`analysis`]: one-shot per-group precomputation for the checkers.
//! - [`theorems`]: the statement checkers and their reports.
//! - [`families`]: cyclic/dihedral/dicyclic/symmetric/alternating/
//!   elementary-abelian/extraspecial constructors and direct products.

pub mod analysis;
pub mod classes;
pub mod families;
pub mod fitting;
pub mod group;
pub mod series;
pub mod set;
pub mod subgroup;
pub mod theorems;

pub use analysis::GroupAnalysis;
pub use classes::{
    commutator_set, commutator_subgroup, conjugacy_classes, h_class, left_commutator_set,
    m_subgroup, small_elements, ClassPartition,
};
pub use fitting::{
    enumerate_normal_subgroups, fitting_oracle, fitting_subgroup, OracleCapExceeded,
    DEFAULT_ORACLE_CAP,
};
pub use group::{
    BuildError, ElementId, GroupTable, Perm, DEFAULT_MAX_ORDER, MAX_REPRESENTABLE_ORDER,
};
pub use series::{
    derived_series_and_solvability, lower_central_series, nilpotency_class, upper_central_series,
    Series, SeriesKind,
};
pub use set::ElementSet;
pub use subgroup::{
    center, center_of, centralizer, is_normal_subgroup, is_normal_subset, is_subgroup,
    normal_closure, normal_subset_violation, subgroup_generated, Subgroup,
};
pub use theorems::{
    check_conjecture_1, check_conjecture_1prime, check_corollary_b, check_equivalence,
    check_lemma_centralizer, check_prop_commutator_central, check_prop_flat, check_theorem_a,
    check_theorem_c, conjugate_rank_one, find_theorem_a_witnesses,
    find_theorem_a_witnesses_enumerating, is_flat, Hypothesis, Statement, TheoremReport, Verdict,
    ALL_VERDICTS,
};
