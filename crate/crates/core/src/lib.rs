//! Exact and numeric tools for Lie bialgebras, their Drinfel'd doubles, and
//! the Poisson-Lie structures they induce on three-dimensional group manifolds.

pub mod algebra;
pub mod bialgebra;
pub mod catalog;
pub mod cli;
pub mod double;
pub mod error;
pub mod geometry;
pub mod linalg;
pub mod num;
pub mod poisson;
pub mod report;
pub mod suites;
pub mod tensor;

pub use error::{Error, Result};
