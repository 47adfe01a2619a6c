//! Toolkit for small simple graphs (up to 64 vertices): exact minor and
//! topological-minor search with verifiable certificates, canonical forms,
//! vertex connectivity, planarity, vertex splits, clique sums, handle
//! additions, and classification of graphs against a few structured families.

pub mod atlas;
pub mod canon;
pub mod characterize;
pub mod codec;
pub mod connectivity;
pub mod error;
pub mod graph;
pub mod minors;
pub mod transforms;

pub use error::Error;
pub use graph::{Edge, SimpleGraph};

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
