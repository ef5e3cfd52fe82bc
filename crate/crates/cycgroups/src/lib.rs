//! Catalog, verifier and command-line front end for cyclic-subgroup
//! deficiency computations.
//!
//! The algorithms live in [`cycgroups_core`]; this crate adds the bundled
//! catalog of all groups of order at most 24, the checks that tie the
//! classification to that catalog, a small group-expression language, and
//! text, JSON and LaTeX renderers.

pub mod catalog;
pub mod cli;
mod error;
pub mod expr;
pub mod render;
pub mod verify;

pub use catalog::{Catalog, CatalogEntry};
pub use error::{Error, Result};
pub use expr::parse_group;
pub use verify::VerificationReport;
