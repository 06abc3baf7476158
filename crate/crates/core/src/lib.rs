//! Exact and parameterized algorithms for Metric Dimension and its dual,
//! Saving Landmarks.

pub mod error;
pub mod format;
pub mod generators;
pub mod graph;
pub mod reductions;
pub mod resolving;
pub mod saving;

pub use error::{Error, Result};
pub use graph::{DistanceMatrix, Graph};
