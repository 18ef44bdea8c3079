//! Cube groups: finite groups generated by involutions whose Cayley graph is
//! a hypercube.
//!
//! A cube group is described by a [`DecoratedGraph`], one involution `j_s` of
//! the generating set per generator. This crate checks admissibility of such
//! graphs, realizes the group as signed permutation matrices, recognizes
//! hypercube Cayley graphs, computes orbit decompositions and boolean normal
//! forms, and verifies the structural statements by exhaustive enumeration at
//! small rank.
//!
//! Words are written in application order throughout: `[w1, .., wk]` is the
//! product `wk ⋯ w1`.

pub mod decomposition;
pub mod decorated;
pub mod enumerate;
pub mod error;
pub mod fixtures;
pub mod group;
pub mod hypercube;
pub mod io;
pub mod label;
pub mod par;
pub mod perm;
pub mod representation;
pub mod signed;
pub mod trajectory;

pub use decomposition::{
    decomposition_ordering, normal_form, orbit_tree, orbits, perm_image, two_orbit_check, NormalForm,
    OrbitPartition, OrbitTree,
};
pub use decorated::DecoratedGraph;
pub use enumerate::{enumerate_decorated_graphs, sweep, sweep_with, SweepOptions, SweepReport};
pub use error::{Category, Error, Result};
pub use group::{
    decorated_graph_from_group, generate_group, standard_subgroup, CubeGroup, GroupElement, GroupOracle,
    PermutationGroup, SignedPermutationGroup,
};
pub use hypercube::{is_hypercube, HypercubeCoordinates, LabeledGraph, NotHypercube};
pub use label::{GeneratorLabel, LabelSet, MAX_RANK};
pub use par::Execution;
pub use perm::Permutation;
pub use representation::{
    embed_vertex, invariant_coordinate_subspaces, is_reducible, rho_via_formula, sign_count, CubeVector,
    SignCount,
};
pub use signed::{generator_rho, word_matrix, SignedPermutation};
pub use trajectory::{
    edge_partition, holonomy, is_admissible, presentation_relators, trajectory, AdmissibilityReport,
    EdgeGroup, Relator, Trajectory, TrajectoryKind,
};
