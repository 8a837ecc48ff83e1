//! Spanning-tree degree enumerators of graphs and their real stability.

pub mod census;
pub mod dh;
pub mod families;
pub mod graph;
pub mod par;
pub mod poly;
pub mod rational;
pub mod spanning;
pub mod stability;

pub use graph::{Graph, GraphError, Vertex, VertexSet};
pub use poly::{MultiPoly, PolyError};
pub use rational::Rational;
