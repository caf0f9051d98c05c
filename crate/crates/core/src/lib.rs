//! Finite groups given by generators, their subgroup lattices, chief factors,
//! the cover-avoidance property and its variants, and fusion systems on Sylow
//! subgroups. The `verify` module checks implications between these
//! properties across a corpus of small groups.

pub mod arith;
pub mod builtin;
pub mod cap;
pub mod chief;
pub mod error;
pub mod fusion;
pub mod group;
pub mod structure;
pub mod verify;

pub use builtin::{build_group, Builtin, GroupSpec, DEFAULT_ORDER_CAP};
pub use error::{Error, Result};
pub use group::{Carrier, FiniteGroup, GroupElementRep, QuotientGroup, Subgroup};
pub use structure::{enumerate_subgroups, SubgroupLabel, SubgroupLattice, DEFAULT_LATTICE_CAP};
pub use verify::Caps;
