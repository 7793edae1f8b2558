//! Finite permutation groups with exact subgroup lattices, and the
//! sigma-arithmetic (sigma-primary, sigma-central, sigma-nilpotent,
//! sigma-soluble) needed to check statements about groups factorized by
//! sigma-nilpotent subgroups.

mod chain;
pub mod corpus;
pub mod error;
pub mod factor;
pub mod group;
pub mod hall;
pub mod lattice;
pub mod perm;
pub mod sigma;
pub mod theorems;

pub use corpus::{Corpus, CorpusEntry};
pub use error::{Error, Result};
pub use group::{
    build_group, centralizer, commutator_subgroup, conjugacy_classes, core, direct_product,
    intersect, join, normal_closure, Group, DEFAULT_ELEMENT_LIMIT,
};
pub use lattice::{SubgroupLattice, DEFAULT_LATTICE_LIMIT};
pub use perm::Perm;
pub use sigma::{ClassId, SigmaPartition};
pub use theorems::{run_sweep, Report, SweepConfig, Verdict};
