//! Simplicial Cartesian product of finite simple graphs.
//!
//! Graphs are read as their Whitney (clique) complexes. The product `G x H`
//! has one vertex per pair of simplices and joins two pairs when one
//! contains the other componentwise. The crate computes exact Betti
//! numbers, the tensor de Rham complex of a product, inductive dimension,
//! homotopy predicates, curvature and chromatic data.
//!
//! Only `alloc` is required. The `parallel` feature computes the ranks of
//! different grades concurrently.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod chain;
pub mod derham;
pub mod error;
pub mod graph;
pub mod homology;
pub mod linalg;
pub mod named;
pub mod product;
pub mod topology;

pub use chain::{Chain, Monomial, Term, Var};
pub use error::{Error, Result};
pub use graph::{FVector, Graph, Simplex};
pub use num_rational::BigRational;
pub use product::{graph_product, ProductGraph};
pub use topology::Tri;
