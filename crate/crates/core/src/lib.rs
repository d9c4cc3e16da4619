//! Totally-nested tri-separations of 3-connected graphs.
//!
//! A tri-separation is a mixed 3-separation (separator made of vertices and edges) in which
//! every separator vertex has two neighbours on each side. This crate enumerates them exhaustively,
//! finds the canonical set `N` of totally-nested nontrivial ones, its splitting stars and their
//! torsos, and classifies each torso as quasi 4-connected, a wheel or a thickened `K_{3,m}`.
//! The same machinery covers 2-separations and the tree of totally-nested 2-separations.
#![forbid(unsafe_code)]

pub mod budget;
pub mod connectivity;
pub mod decompose;
pub mod error;
pub mod generate;
pub mod graph;
pub mod iso;
pub mod minor;
pub mod recognize;
pub mod separation;
pub mod star;
pub mod tri;
pub mod twosep;
pub mod verify;
pub mod vset;

pub use error::{Error, Result};
pub use graph::{EditAction, Edge, Graph, MergeMap};
pub use separation::{MixedSeparation, Separator};
pub use vset::{VSet, Vertex};
