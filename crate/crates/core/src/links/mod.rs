//! Plane graphs, medial link diagrams, Tait graphs, Fox and Dehn colorings,
//! 1-periodic plane graphs in the annulus, and Burau matrices of braids.
//!
//! Crossing convention: on the medial crossing of an edge, the strand
//! whose segments border the shaded (vertex) wedges counterclockwise-first
//! is over for a positive edge and under for a negative edge.

mod annular;
mod braid;
mod coloring;
mod diagram;
mod plane;

pub use annular::{boundary_coloring_count, AnnularGraph, ClosedComponentsReport};
pub use braid::{burau_laplacian, BraidWord};
pub use coloring::{graph_coloring_to_fox, link_determinant, FoxColoring};
pub use diagram::{medial_diagram, tait_graph, Crossing, LinkDiagram, Strand};
pub use plane::{edge_of, twin, PlaneGraph};
