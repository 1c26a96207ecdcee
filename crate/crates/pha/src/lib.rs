//! Exact arithmetic for perfect hypercomplex algebras (PHAs).
//!
//! A finite-dimensional real algebra is described here by its product
//! matrix: the `k x k^2` array whose columns are the structure constants
//! of all pairwise products of basis elements. Everything downstream —
//! structural checks, characteristic functions, basis changes, the
//! dimension-4 enumeration, and matrices over an algebra — is driven by
//! semi-tensor products of such matrices, computed over arbitrary-precision
//! rationals so results are exact.

pub mod algebra;
pub mod charfn;
pub mod cli;
pub mod error;
pub mod families;
pub mod io;
pub mod matrix;
pub mod phm;
pub mod poly;
pub mod scalar;
pub mod search4;
pub mod transform;

pub use algebra::{Algebra, CheckReport, HyperNumber, Witness};
pub use error::Error;
pub use matrix::Matrix;
pub use poly::MultiPoly;
pub use scalar::Scalar;
