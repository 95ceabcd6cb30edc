//! Exact induction machinery for finite groups.
//!
//! Everything is computed over the integers (or exact cyclotomic integers):
//! finite groups with enumerated subgroup lattices, finite G-sets, Mackey and
//! Green functors with their double-coset axioms, Dress complexes and
//! S-projectivity, character tables and Burnside rings as concrete Green
//! functors, induction-surjectivity reports (Brauer, Artin, hyperelementary),
//! and Tor/colimit computations over restricted orbit categories.

pub mod corpus;
pub mod family;
pub mod gset;
pub mod group;
pub mod linalg;

pub use family::FamilySpec;
pub use group::{FiniteGroup, GroupHom, SubgroupLattice, SubgroupRecord};
pub use gset::{GMap, GSet};
pub use linalg::{ChainComplex, FgAbelianGroup, IntMatrix};
