//! Exact structure theory for finite-dimensional complex Lie algebras
//! presented by structure constants.
//!
//! All arithmetic happens in the field of Gaussian rationals, so rank and
//! membership decisions are exact and every verdict is reproducible. The
//! crate computes the classical radicals (solvable radical, nilradical),
//! the Frattini and Jacobson ideals with their iteration indices, the
//! generic superposition and convolution combinators over preradicals,
//! and the structural classifications (subsimple, Frattini-free,
//! Jacobson-free) together with verifiable witness decompositions.
//!
//! The `examples/` directory contains one runnable program per major
//! capability; `lie-radicals` is the matching command-line front end.
//!
//! ```
//! use lie_radicals::{catalog, radicals};
//!
//! let h = catalog::build("heisenberg3", &[]).unwrap();
//! let phi = radicals::frattini_ideal(&h).unwrap();
//! assert_eq!(phi, h.centre());
//! ```

#![forbid(unsafe_code)]

pub mod algebra;
pub mod catalog;
pub mod combinators;
pub mod envelope;
pub mod error;
pub mod json;
pub mod matrix;
pub mod products;
pub mod radicals;
pub mod report;
pub mod scalar;
pub mod series;
pub mod structure;
pub mod subspace;

pub use algebra::LieAlgebra;
pub use error::{Error, Result};
pub use matrix::Matrix;
pub use scalar::GaussianRational;
pub use subspace::Subspace;
