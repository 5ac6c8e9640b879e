//! Uniserial modules over bound quiver algebras: normal forms, representations,
//! irreducibility criteria for radical embeddings, and Auslander-Reiten tools.

pub mod algebra;
pub mod ar;
pub mod error;
pub mod field;
pub mod frontend;
pub mod irreducibility;
pub mod linalg;
pub mod module_rep;
pub mod poly;
pub mod quiver;
pub mod uniserial;

#[cfg(test)]
pub(crate) mod fixtures;

pub use error::{Error, Result};
pub use field::{Field, Scalar};
