//! Exact arithmetic for the quasisymmetric invariant of matroids and the
//! machinery around it: the Hopf algebra of quasisymmetric functions over
//! the integers, labelled posets and their partition enumerators, matroids
//! with their minors and catalogs, base polytope decomposition checks in the
//! quotient modulo products, and the extension to generalized permutohedra
//! and chromatic symmetric functions of graphs.
//!
//! The entry points mirror how the pieces fit together:
//!
//! - [`matroid::Matroid`] holds a validated base family; [`invariant::f`]
//!   computes its quasisymmetric invariant as a [`qsym::QSymFn`];
//! - [`poset::LabelledPoset`] underlies the enumerator route, summing
//!   fundamental basis elements over linear extensions;
//! - [`qsym::QuotientPresentation`] projects homogeneous functions modulo
//!   products, where [`decomp`] decides decomposability questions;
//! - [`genperm::GenPermGraph`] extends the invariant to vertex-edge graphs
//!   of polytopes with root-direction edges, and
//!   [`genperm::SimpleGraph::chromatic_symmetric`] specializes it to graph
//!   coloring.

pub mod decomp;
pub mod genperm;
pub mod int;
pub mod invariant;
pub mod linalg;
pub mod matroid;
pub mod poset;
pub mod qsym;

pub use int::Int;
pub use matroid::Matroid;
pub use qsym::{Composition, QSymFn};
