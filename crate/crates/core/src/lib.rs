//! Edge-local complementation of graphs over GF(2).
//!
//! Graphs are symmetric 0/1 adjacency matrices with zero diagonal. The
//! library covers the edge-local complement `G*e`, its description as a
//! linear fractional transformation `H^A`, recognition of edge-local
//! equivalence by solving a linear system, the counting formula for
//! equivalence classes and its invariants, the global interlace polynomial,
//! and the action of local Hadamard transforms on graph states.
//!
//! Vertices are 0-based throughout the API. Text formats and the command
//! line use 1-based labels.

pub mod equivalence;
pub mod error;
pub mod gf2;
pub mod graph;
pub mod graphstate;
pub mod interlace;
pub mod invariants;
pub mod io;
pub mod lft;
pub mod orbit;

pub use equivalence::{decompose_h, elc_sequence_between, invert_via_elc, recognize_elc, ElcSequence};
pub use error::{DomainFailure, Error, Result};
pub use gf2::{BitMatrix, BitVector};
pub use graph::{Graph, GraphKind, VertexSet};
pub use interlace::{interlace_poly, InterlacePoly};
pub use invariants::{class_size, delta_count, sigma_space, Enumeration, SigmaSpace};
pub use lft::LftOp;
pub use orbit::{elc_orbit, lc_orbit, GraphOrbit, MoveKind};
