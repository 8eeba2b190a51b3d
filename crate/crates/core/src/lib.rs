//! Recognition and drawing of media: lattice embeddings of minimum
//! dimension and symmetric planar drawings.

pub mod error;
pub mod graph;
pub mod iso;
pub mod matching;
pub mod medium;
pub mod partial_cube;
pub mod projection;
pub mod semicube;
pub mod planar;
pub mod io;
pub mod families;
pub mod svg;
pub mod report;
pub mod corpus;
