//! Embedded-graph toolkit for 2-outerplanar graphs.
//!
//! The crate works with combinatorial embeddings (clockwise rotation systems
//! plus an outer-face marker per connected component) and provides:
//!
//! * layer decompositions and the outerplanarity index ([`layers`]),
//! * embedding-preserving surgery: vertex deletion and star contraction
//!   ([`surgery`]),
//! * block/cut-vertex and weak-dual machinery ([`blocks`]),
//! * chord augmentation up to a disk triangulation ([`augment`]),
//! * a certified partition of any 2-outerplanar graph into two induced
//!   forests, with a replayable reduction trace ([`forest2`]),
//! * extraction of an induced outerplane subgraph on at least ⌈2n/3⌉
//!   vertices, and its layer-pairing generalisation ([`outerplane`]),
//! * exact brute-force oracles for cross-checking ([`oracle`]),
//! * deterministic and seeded-random instance generators ([`gen`]).
//!
//! Everything is deterministic: iteration is over ordered maps and sets, and
//! the random generator is a fixed-algorithm PRNG seeded explicitly.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod augment;
pub mod blocks;
pub mod error;
pub mod forest2;
pub mod gen;
pub mod graph;
pub mod layers;
pub mod oracle;
pub mod outerplane;
pub mod surgery;

pub use error::{Error, Result};
pub use graph::{EmbeddedGraph, Face, OuterMark, VertexId};
pub use layers::LayerAssignment;
