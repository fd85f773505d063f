//! Exact computational tropical geometry.

pub mod arith;
pub mod bernstein;
pub mod complexes;
pub mod error;
pub mod json;
pub mod lattice;
pub mod polyhedra;
pub mod puiseux;
pub mod subdivision;
pub mod trop;

pub use error::{Error, Result};
