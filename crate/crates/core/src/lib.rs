//! Exact structure computations for finite-dimensional left Leibniz algebras.
//!
//! Everything works over the rationals or a prime field of odd characteristic,
//! with exact arithmetic throughout.

pub mod algebra;
pub mod catalog;
pub mod completeness;
pub mod derivation;
pub mod error;
pub mod holomorph;
pub mod io;
pub mod matrix;
mod modular;
pub mod radical;
pub mod report;
pub mod scalar;
pub mod subspace;

pub use algebra::{AlgebraIdeal, LeibnizAlgebra, Quotient, SeriesProfile};
pub use derivation::DerivationBasis;
pub use error::{LeibError, Result};
pub use matrix::{Matrix, Vector};
pub use radical::{Status, SuiteConfig, Verdict};
pub use scalar::{FieldSpec, Scalar};
pub use subspace::Subspace;
