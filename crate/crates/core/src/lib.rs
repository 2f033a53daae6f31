//! Exact cohomology of color Lie algebras.
//!
//! The pipeline validates a color Lie algebra given by a sign matrix and
//! structure constants, certifies that its enveloping algebra is PBW, builds
//! the Koszul-dual differential graded algebra and computes Betti numbers,
//! cocycle representatives and Poincaré series in exact arithmetic.

pub mod catalog;
pub mod color;
pub mod dga;
pub mod error;
pub mod format;
pub mod homology;
pub mod koszul;
pub mod linalg;
pub mod pbw;
pub mod scalar;
pub mod series;
pub mod table;

pub use error::{Error, Result, ScalarError};
pub use linalg::{EchelonSpan, ExactMatrix, RankKernel};
pub use scalar::{parse_scalar, Poly, Scalar, ScalarKind};
