//! Interval posets of permutations.
//!
//! The interval poset `P(w)` of a permutation `w` has the nonempty intervals
//! of `w` (value ranges occupying consecutive positions) as elements, ordered
//! by inclusion. This crate builds these posets, checks their lattice and
//! planarity properties, recognizes which abstract posets arise this way,
//! lists the permutations producing a given poset, and runs exhaustive
//! censuses of `S_n` that check all of the above against brute force.

pub mod blocks;
pub mod census;
pub mod classify;
pub mod decomp;
pub mod error;
pub mod exec;
pub mod format;
pub mod lattice;
pub mod perm;
pub mod poset;

pub use blocks::{
    adfs_words, count_generators, generators, recognize, simple_count, BlockTree, ChainKind,
    GeneratorSet, Orientation,
};
pub use census::{census, verify_identities, CensusOptions, CensusReport, Verdict, Violation};
pub use classify::{classify_permutation, classify_poset, ClassificationFlags};
pub use decomp::{has_monotone_triple_interval, substitution_decomposition, DecompositionTree};
pub use error::{Error, Result};
pub use exec::Executor;
pub use format::{to_dot, PosetFile};
pub use perm::{all_permutations, simple_permutations, Permutation, ValueInterval};
pub use poset::{CanonicalForm, CanonicalLayout, Element, IntervalPoset};
