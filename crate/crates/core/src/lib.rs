//! Exact local metric and local adjacency dimensions of graphs and of
//! lexicographic products `G ∘ ℋ`.
//!
//! The crate has two independent routes to the dimension of a product:
//! exhaustive minimum-generator search on the product graph ([`solver`]),
//! and the closed form in terms of the base graph's true-twin classes and the
//! members' local adjacency dimensions ([`formula`]). [`verify`] runs both
//! and compares them.

pub mod distance;
pub mod error;
pub mod family;
pub mod formula;
pub mod graph;
pub mod graph6;
pub mod lexicographic;
pub mod named;
pub mod solver;
pub mod twins;
pub mod verify;

pub use distance::{
    components, distance_matrix, girth, is_connected, radius, DistanceMatrix, Girth, UNREACHABLE,
};
pub use error::{Error, Result};
pub use family::{
    classify, in_family_g, in_family_g_prime, in_phi, unit_adim_l_criterion, FamilyMembership,
    GWitness,
};
pub use formula::{
    adim_l_formula, decompose, dim_l_formula, dim_l_via_k1, equality_condition,
    DecompositionReport, FormulaTerms, MemberAnalysis, RepresentativeChoice,
};
pub use graph::{Graph, VertexSet, MAX_ORDER};
pub use graph6::{from_graph6, to_graph6};
pub use lexicographic::{parse_family_file, product, product_distance, Family, ProductGraph};
pub use named::{parse_graph, GraphSpec, NamedGraph};
pub use solver::{
    all_minimum_bases, dim_t, dimension, dimension_with, is_generator, DimensionResult,
    GeneratorKind, SolverConfig,
};
pub use twins::{true_twin_classes, TwinPartition};
pub use verify::{
    enumerate_labeled, enumerate_small_connected, sweep, verify_instance, Status, SweepConfig,
    SweepSummary, VerificationReport,
};
