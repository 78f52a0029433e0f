//! Finite permutation groups and class-theoretic hypercenters.
//!
//! Groups are given by generating permutations on `0..degree`. Everything
//! above the stabilizer chain works on explicit element tables, so all
//! computations are bounded (see [`Bounds`]).

mod chain;
pub mod bounds;
pub mod chief;
pub mod cli;
pub mod corpus;
pub mod elements;
pub mod error;
pub mod formation;
pub mod group;
pub mod hypercenter;
pub mod io;
pub mod lattice;
pub mod library;
pub mod ops;
pub mod perm;

pub use bounds::Bounds;
pub use chief::{
    chief_factor, chief_series, chief_series_with, minimal_normal_subgroups, semisimple_decomposition,
    ChiefFactor, ChiefSeries, NormalSubgroups, TieBreak,
};
pub use corpus::{builtin_corpus, parse_corpus_spec, CorpusEntry};
pub use error::{Error, Result};
pub use formation::{
    is_class_central, is_class_central_with, is_nca_member, is_nilpotent, is_quasi_f, is_quasinilpotent,
    s_critical_groups, CentralityPath, ClassOfGroups,
};
pub use group::PermGroup;
pub use hypercenter::{
    compare_nca, hypercenter, hypercenter_oracle, inner_induction_hypercenter, intersection_of_class_maximal,
    upper_central_series, verify, verify_baer, verify_lemma_a, verify_remark4, verify_theorem1, Check, ClimbStep,
    HypercenterResult, VerificationReport,
};
pub use io::{emit_group_file, parse_group_file};
pub use lattice::{all_subgroups, SubgroupLattice};
pub use ops::{
    center, centralizer, commutator_subgroup, derived_subgroup, normal_closure, quotient_group,
    semidirect_product, Quotient,
};
pub use perm::Perm;
