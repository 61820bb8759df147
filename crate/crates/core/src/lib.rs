//! Black-and-white coloring on special graph classes.
//!
//! A black-and-white coloring of a graph picks `b` black and `w` white
//! vertices with no edge between a black and a white vertex. The crate
//! recognizes cographs, threshold, difference, distance-hereditary,
//! interval, strongly chordal, split and chordal graphs, and solves the
//! problem exactly on the first five through their decompositions.
//!
//! ```
//! use bwcolor::graph::Graph;
//! use bwcolor::solvers::{solve, Route};
//!
//! let p4 = Graph::path(4);
//! let out = solve(&p4, 2, 1).unwrap();
//! assert!(out.feasible);
//! assert_eq!(out.route, Route::Difference);
//! assert!(p4.verify_coloring(&out.certificate.unwrap()).unwrap());
//! ```

mod bitset;
pub mod cli;
pub mod generators;
pub mod graph;
pub mod oracle;
pub mod recognition;
pub mod reduction;
pub mod solvers;

pub use graph::{BWProfile, Coloring, Graph};
