//! Exact computation of the coloured Alexander (ADO) invariant of braid closures,
//! both as a partial quantum trace and through the Lawrence representation.

pub mod ado;
pub mod cli;
pub mod coeffring;
pub mod error;
pub mod fixtures;
pub mod hwspace;
pub mod lawrence;
pub mod linalg;
pub mod oracle;
pub mod partitions;
pub mod verma;

pub use error::{AdoError, Result};
