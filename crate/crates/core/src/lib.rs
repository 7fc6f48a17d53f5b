//! Posets of subgroup classes with equal element-order sets.
//!
//! For a finite group `G`, two subgroups are equivalent when they have the
//! same set of element orders; the classes are ordered by inclusion of those
//! sets. This crate builds that poset from explicit multiplication tables,
//! provides closed forms for dihedral and cyclic groups, and checks the
//! chain, lattice, product, forbidden-sublattice and modularity properties
//! exhaustively over ranges of groups.

pub mod arith;
pub mod cli;
pub mod error;
pub mod export;
pub mod group;
pub mod lattice;
pub mod spectrum;
pub mod subgroup;
pub mod verify;

pub use error::{Error, Result};
