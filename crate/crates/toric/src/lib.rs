//! Divisorial cohomology and vanishing data for toric varieties, computed
//! with exact arithmetic.
//!
//! The entry point is a [`fan::Fan`] given by primitive rays and maximal
//! cones. From it one gets the class group, circuits, cohomology of
//! divisorial sheaves (global and with supports), nef and Mori cones,
//! Frobenius sets and arithmetic cores, and the rank-one maximal
//! Cohen–Macaulay classification of affine toric varieties.

pub mod circuits;
pub mod classgroup;
pub mod cohomology;
pub mod discriminantal;
pub mod fan;
pub mod frobenius;
pub mod homology;
pub mod lattice;
pub mod mcm;
pub mod polyhedra;
pub mod surfaces;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid fan: {}", .0.iter().map(|d| d.to_string()).collect::<Vec<_>>().join("; "))]
    InvalidFan(Vec<fan::Diagnostic>),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("fan is not simplicial")]
    NotSimplicial,
    #[error("undefined: {0}")]
    Undefined(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("computation exceeds supported scale: {0}")]
    ScaleLimit(String),
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
