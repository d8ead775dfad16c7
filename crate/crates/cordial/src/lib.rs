//! (2,3)-cordial labelings of oriented hypercubes and small digraphs.
//!
//! A friendly `{0,1}` vertex labeling induces an arc labeling
//! `g(uv) = f(v) - f(u)` over `{-1, 0, +1}`; a digraph is (2,3)-cordial
//! when some friendly labeling balances the three arc-label counts to
//! within one of each other. This crate provides:
//!
//! * the core values (digraphs, oriented hypercubes, labelings, lambda
//!   triples) and their symmetry operations;
//! * the doubling construction producing cordial cubes for every dimension
//!   divisible by 3;
//! * the phi agreement-count calculus and cube-of-cubes assemblies for
//!   dimensions 4, 6, and 7;
//! * brute-force and symmetry-reduced searches: the cordiality oracle,
//!   exhaustive classification of 3D orientations up to isomorphism, and
//!   (2,3)-orientability of undirected graphs;
//! * the figure fixture library and JSON/DOT serialization.

pub mod compose;
pub mod construct;
pub mod digraph;
pub mod error;
pub mod fixtures;
pub mod hypercube;
pub mod io;
pub mod labeling;
pub mod search;
pub mod symmetry;

pub use compose::{
    BijectionTable, CubeArrangement, GammaEntry, MetaArcSpec, PartialOrientedCube, PhiMatrix,
    SlotRef, VertexBijection,
};
pub use construct::DoublingMode;
pub use digraph::{Digraph, UndirectedGraph};
pub use error::{Error, Result};
pub use hypercube::{LabeledCube, OrientedHypercube};
pub use labeling::{ArcLabeling, LabeledDigraph, LambdaTriple, VertexLabeling};
pub use search::{
    ClassificationReport, ExploreReport, OrientationSearchOptions, SearchOutcome,
};
pub use symmetry::SignedPermutation;
