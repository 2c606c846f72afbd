//! Permutation groups, subgroup lattices and σ-semipermutability checks.

pub mod arith;
pub mod classes;
pub mod corpus;
pub mod error;
pub mod group;
pub mod harness;
pub mod lattice;
pub mod perm;
pub mod sigma;

pub use error::{Error, Result};
pub use group::{Caps, Elem, Embedding, Group, Subgroup};
pub use lattice::SubgroupLattice;
pub use perm::Permutation;
