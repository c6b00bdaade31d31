//! Simplex graphs, partial cubes, median graphs and daisy cubes.
//!
//! Graphs are undirected and simple with vertices `0..n`. Partial cubes are
//! handled through [`LabelledPartialCube`], whose coordinates are the
//! Θ-classes. On top of that sit the pc-minor operations, the simplex-graph
//! construction and its recognition, cube and clique polynomials, and
//! abstract simplicial complexes.

pub mod asc;
pub mod cli;
pub mod cubes;
pub mod error;
pub mod families;
pub mod format;
pub mod graph;
pub mod isomorphism;
pub mod label;
pub mod limits;
pub mod median;
pub mod partial_cube;
pub mod pcminor;
pub mod polynomial;
pub mod theta;

pub use asc::{
    check_median_property, clique_complex, independence_complex, m_operator,
    realize_as_clique_complex, Realization, SimplicialComplex,
};
pub use cubes::{
    clique_polynomial, cliques, cube_polynomial, daisy_generate, is_daisy, simplex_graph,
    simplex_preimage, theorem1_report, Theorem1Report,
};
pub use error::{Error, Result};
pub use families::{cartesian_product, complement, generate, generate_labelled, Family};
pub use graph::{distance_matrix, interval, DistanceMatrix, Graph};
pub use isomorphism::are_isomorphic;
pub use label::BinaryLabel;
pub use limits::Limits;
pub use median::{
    is_convex, is_median_graph, is_median_graph_via_convexity, medians, ConvexityMethod,
};
pub use partial_cube::{LabelledPartialCube, Reduction};
pub use pcminor::{
    apply_spec, canonical_form, contract_class, crossing, crossing_graph, has_pc_minor,
    is_pc_minor_free, pc_minors, proper_pc_minors, restrict_class, MinorAction, MinorSpec,
};
pub use polynomial::Polynomial;
pub use theta::{embed, is_partial_cube, theta_class_data, theta_classes, theta_related};
