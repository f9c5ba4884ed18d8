//! Metamour-graph algorithms: the 2-distance operator M, its iterated
//! dynamics, the construction toolbox (cycles, joins, Paley graphs,
//! generalized Petersen graphs, m-ary trees), canonical labeling and
//! isomorph-free enumeration, and desk-scale theorem checkers.

pub mod canon;
pub mod constructions;
pub mod dynamics;
pub mod error;
pub mod graph;
pub mod subgraph;
pub mod trees;
pub mod verify;
pub mod walks;

pub use canon::{canonical_form, is_isomorphic, CanonicalForm, CANONICAL_SIZE_BOUND};
pub use error::{Error, Result};
pub use graph::{CombineMode, ExtendedDistance, Graph};
pub use subgraph::subgraph_search;
