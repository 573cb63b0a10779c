//! Exact computations for rank-one log del Pezzo surfaces: dual graphs and
//! Dynkin types, discrepancies, blowup lattices, cubic pencils over prime
//! fields, and numeric feasibility checks.

pub mod cli;
pub mod discrepancy;
pub mod error;
pub mod feasibility;
pub mod graphs;
pub mod linalg;
pub mod pencil;
pub mod picard;
pub mod rational;
pub mod verify;

pub use error::{LdpError, Result};
