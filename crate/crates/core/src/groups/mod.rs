//! Finite groups with permutation actions.

mod group;
mod perm;

pub use group::{builtin_group, Elem, Group, GroupJson, EXHAUSTIVE_ASSOCIATIVITY_LIMIT};
pub use perm::Perm;
