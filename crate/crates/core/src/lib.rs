//! Finite groups, their power and enhanced power graphs, and the diameters of
//! the non-trivial components of the graph complements.
//!
//! The crate measures those diameters by breadth-first search and, separately,
//! predicts them from group structure ([`classify`]). [`verify`] compares the
//! two over a catalog of small groups.

pub mod classify;
pub mod cli;
pub mod factor;
pub mod graphs;
pub mod group;
pub mod subgroups;
pub mod verify;

pub use fixedbitset::FixedBitSet;
pub use group::{build_group, parse_group_expr, ElementId, GroupError, GroupExpr, GroupTable};
