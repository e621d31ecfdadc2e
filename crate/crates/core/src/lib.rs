//! Strong neutrosophic graphs: graphs whose vertices and edges may each be
//! real or indeterminate.
//!
//! The crate covers exact arithmetic in the indeterminacy semiring
//! (`a + bI` with `I * I = I`), adjacency and incidence matrices over it, walk
//! and circuit classification, the lattice of all subgraphs, and subset
//! vertex graph constructions.
//!
//! Arithmetic is generic over the coefficient type. The aliases below fix the
//! usual choices: [`Neutro`] uses arbitrary precision and never overflows,
//! [`NeutroNum64`] uses machine words and panics on overflow.

pub mod error;
pub mod graph;
pub mod io;
pub mod matrix;
pub mod number;
pub mod subgraph;
pub mod subset;
pub mod transform;
pub mod walks;

pub use error::{Error, Result};
pub use graph::{fixtures, GraphClass, Kind, NeutroGraph, Profile};
pub use matrix::Matrix;
pub use number::{Coefficient, Indeterminate, NeutroNum, Semiring};
pub use subgraph::{Subgraph, SubgraphSpace};
pub use subset::SubsetVertexGraph;

pub use num_bigint::BigUint;

/// Arbitrary-precision neutrosophic number.
pub type Neutro = NeutroNum<BigUint>;
/// Machine-word neutrosophic number; overflow panics.
pub type NeutroNum64 = NeutroNum<u64>;
/// Matrix over [`Neutro`].
pub type NeutroMatrix = Matrix<Neutro>;
