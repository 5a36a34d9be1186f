//! Mostar-type peripherality measures, classical centralities, graph family
//! generators with closed-form values, exhaustive extremal search, clique
//! reduction gadgets, chemical reactant graphs and random-graph experiments.

pub mod error;
pub mod extremal;
pub mod families;
pub mod graph;
pub mod measures;
pub mod mechanisms;
pub mod random;
pub mod reductions;
pub mod weighted;

pub use error::{Error, Result};
pub use graph::{
    all_pairs, bfs_distances, build_graph, edge_vertex_distance, n_closer, DistanceMatrix, Graph,
    UNREACHABLE,
};
pub use measures::{HalfInt, MeasureReport};
pub use weighted::{n_closer_weighted, VertexWeightedGraph};
