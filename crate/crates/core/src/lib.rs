#![no_std]

//! Finite groups as explicit Cayley tables, and the machinery for counting
//! their cyclic subgroups.
//!
//! The central quantity is the deficiency `|G| - |C(G)|`, the group order
//! minus the number of cyclic subgroups, together with the signature: the
//! sorted multiset of cyclic subgroup orders above 2. The crate covers
//!
//! - table construction for the standard small families plus direct and
//!   semidirect products ([`construct`], [`action`]),
//! - isomorphism testing for orders up to 32 ([`iso`]),
//! - the census of cyclic subgroups and totient helpers ([`census`]),
//! - enumeration of the signatures a given deficiency allows ([`enumerate`]),
//! - exclusion rules that rule candidate signatures out ([`exclusion`]),
//! - construction recipes for every group known to realise a surviving
//!   signature ([`classify`]).
//!
//! Everything here is `no_std` with `alloc`. File formats, the bundled catalog
//! and the command line live in the `cycgroups` crate.

extern crate alloc;

pub mod action;
pub mod census;
pub mod classify;
pub mod construct;
pub mod enumerate;
mod error;
pub mod exclusion;
pub mod group;
mod hom;
pub mod iso;
pub mod perm;

pub use action::{inversion_action, semidirect_product, AutomorphismAction};
pub use census::{
    census, count_solutions, cyclic_subgroups, euler_phi, phi_inverse, CensusReport, Signature,
};
pub use construct::{
    direct_product, from_permutations, make_alternating, make_cyclic, make_dicyclic, make_dihedral,
    make_quasidihedral, make_symmetric,
};
pub use enumerate::{enumerate_candidates, expand_part, integer_partitions, CandidateRow};
pub use error::{GroupError, Result};
pub use exclusion::{apply_rules, revised_table, rule_registry, ExclusionRule, RuleId, Verdict};
pub use group::{Element, GroupTable, SubgroupSet, MAX_ORDER};
pub use hom::extend_homomorphism;
pub use iso::{is_isomorphic, ISO_MAX_ORDER};
pub use perm::Permutation;
