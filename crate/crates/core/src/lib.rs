//! Thrackle drawings on the sphere and in the plane.
//!
//! A thrackle is a drawing of a graph in which every pair of edges meets
//! exactly once, either at a shared endpoint or at a single crossing. This
//! crate verifies such drawings (straight-line drawings in the plane and
//! great-circle drawings on the sphere), recognizes the tree classes that
//! govern great-circle thrackleability, builds explicit thrackle drawings,
//! and searches numerically for great-circle embeddings of trees.
//!
//! Modules, bottom-up:
//!
//! * [`sphere`]: points, great circles, geodesic arcs and arc–arc meetings.
//! * [`graph`]: simple graphs, tree recognizers and free-tree enumeration.
//! * [`drawing`]: spherical and planar drawings, JSON documents, SVG output.
//! * [`verify`]: thrackle and general-position checks, separation predicates
//!   and the per-vertex structural audit.
//! * [`construct`]: explicit straight-line and great-circle constructions.
//! * [`search`]: penalty-driven annealing search for great-circle embeddings.

pub mod sphere;
pub mod tolerance;
pub mod graph;
pub mod plane;
pub mod drawing;
pub mod verify;
pub mod construct;
pub mod search;

pub use tolerance::Tolerances;
