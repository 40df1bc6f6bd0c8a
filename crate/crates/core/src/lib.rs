//! Exact-arithmetic partition functions, flow counting, and coloring-flow
//! duality for graphs cellularly embedded in orientable surfaces.
//!
//! The crate is organized around four subsystems:
//!
//! * [`group`] — finite groups from multiplication tables, conjugacy
//!   classes, class functions, and irreducible character tables;
//! * [`graph`] — directed multigraphs with rotation systems, face tracing,
//!   genus, dual graphs, and covering verification;
//! * [`partition`] — partition functions over edge labelings, evaluated by
//!   brute force and in closed form, plus flow and Frobenius counts;
//! * [`duality`] — heights, tensions, covering construction, and the
//!   flow-to-proper-coloring pipeline.
//!
//! Flow and homomorphism counts are computed in arbitrary-precision
//! integer/rational arithmetic; floating point is confined to character
//! values and explicitly toleranced comparisons.

pub mod corpus;
pub mod duality;
pub mod graph;
pub mod group;
pub mod partition;

pub use graph::EmbeddedGraph;
pub use group::{build_group, CharacterTable, ClassFunction, FiniteGroup};
