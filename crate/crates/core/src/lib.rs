//! Exact finite-field algebra for counting irreducible substitutions
//! `f_i(g(t))` over `F_q` and comparing the counts with wreath-product
//! predictions.

pub mod bivar;
pub mod census;
pub mod disc;
pub mod error;
pub mod field;
pub mod poly;
pub mod wreath;

pub use error::{Error, Result};
pub use field::{ArithOp, Embedding, Field, FieldElem};
pub use poly::{FactType, Poly, SplittingField};
