//! Exact metric dimension and edge metric dimension of small connected
//! graphs, the constructions and theorems built on them, and exhaustive
//! surveys over all small graphs.
//!
//! ```
//! use edgedim::graph::Graph;
//! use edgedim::resolver::{edge_metric_dimension, metric_dimension};
//!
//! let k3 = Graph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
//! assert_eq!(metric_dimension(&k3, false).unwrap().value, 2);
//! assert_eq!(edge_metric_dimension(&k3, false).unwrap().value, 2);
//! ```

pub mod cli;
pub mod constructions;
pub mod error;
pub mod experiments;
pub mod format;
pub mod graph;
pub mod resolver;
pub mod theorems;

pub use error::{Error, Result};
pub use graph::{DistanceMatrix, Graph};
