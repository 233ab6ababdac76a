//! Knot diagrams, their colorings and the weight-sum pairing.

pub mod coloring;
pub mod local;
pub mod pd;
pub mod weight;

pub use coloring::{coloring_generators, diagram_alexander, ColoringBasis, ColoringError};
pub use pd::{BraidClosure, Crossing, DiagramError, KnotDiagram, PdCrossing};
pub use weight::{weight_gram, weight_sum};
