//! Exact computation for metric dimension and its variants, with fault
//! tolerance.
//!
//! The crate computes five dimension variants and their fault-tolerant
//! counterparts exactly (vertex metric, edge metric, adjacency = 1-truncated,
//! k-truncated, and local), generates the extremal families that make the
//! fault-tolerant dimensions blow up, runs the constructive procedures that
//! turn a resolving set into a fault-tolerant one, and verifies the boundary
//! characterizations and the clique/union-distinct-family equivalence by
//! exhaustive search at small orders.
//!
//! Start with [`Graph`] and [`Variant`], then:
//!
//! ```
//! use resolve_lab::{min_fault_tolerant, min_resolving, Graph, Variant};
//!
//! let p4 = Graph::path(4);
//! assert_eq!(min_resolving(&p4, Variant::VertexMetric).dimension, 1);
//! assert_eq!(min_fault_tolerant(&p4, Variant::VertexMetric).dimension, 2);
//! ```
//!
//! The `book/` directory of the repository is an mdBook walking through the
//! concepts; its code snippets compile against this crate and run with
//! `cargo test --doc`.

pub mod families;
pub mod formats;
pub mod graph;
pub mod resolve;
pub mod solver;

pub use families::{
    build_a, build_d_box, build_h, build_i, build_j, ft_construct_edge, ft_construct_metric,
    ft_construct_truncated, pendant_extend, ConstructionError, LabeledFamily, Role,
};
pub use graph::{
    enumerate_labeled_graphs, labeled_graph_count, Distance, DistanceMatrix, Graph, GraphError,
    LandmarkSet,
};
pub use resolve::{
    build_distinguish_matrix, count_within_distance, distinguishes, is_fault_tolerant,
    is_resolving, item_vector, landmark_degree_report, Certificate, DistanceVector,
    DistinguishMatrix, Item, LandmarkDegree, ResolveError, Variant,
};
pub use solver::{
    min_fault_tolerant, min_multicover, min_resolving, FtResolution, Resolution, SolveError,
};
