//! Finite MTL-algebras as operation tables, their implicative and
//! multiplicative stabilizers, claim verification, and small-model search.

pub mod algebra;
pub mod claims;
pub mod classify;
pub mod error;
pub mod fixtures;
pub mod format;
pub mod induced;
pub mod order;
pub mod report;
pub mod reported;
pub mod search;
pub mod stabilizers;
pub mod subset;

pub use algebra::{AlgebraTables, Element, FiniteMtlAlgebra, ValidationReport, Violation};
pub use error::{MtlError, Result};
pub use subset::Subset;
