//! Coxeter quotients of torus triangulations: complexes, presentations,
//! semidirect-product models and coset enumeration.

pub mod cli;
pub mod complex;
pub mod enumerate;
pub mod error;
pub mod fixtures;
pub mod model;
pub mod perm;
pub mod presentation;
pub mod report;
pub mod verify;
pub mod words;

pub use error::{Error, Result};
