//! Complementary sequence sets and complete complementary codes (CCC)
//! through paraunitary generating matrices.
//!
//! A set of `M` sequences is complementary when the sum of their aperiodic
//! autocorrelations vanishes at every nonzero shift; a CCC is a family of
//! `M` such sets that are in addition mutually orthogonal at every shift.
//! This crate builds those objects as products of constant unitary matrices
//! and diagonal delay matrices, evaluates standard constructions in closed
//! form digit by digit, verifies the correlation conditions exactly in
//! integer constellations (Gaussian, Eisenstein, cyclotomic), and runs the
//! matched-filter correlator as a stage cascade whose per-sample cost does
//! not grow with the sequence length.
//!
//! ```
//! use pucodes::catalog::dft_matrix;
//! use pucodes::correlation::complementarity_check;
//! use pucodes::generator::{recursive_generate, DelayPlan, GeneratorSpec};
//!
//! // Three polyphase sequences of length 9 over third roots of unity.
//! let f = dft_matrix(3).into_matrix();
//! let spec = GeneratorSpec::new(
//!     vec![f.clone(), f.clone(), f],
//!     DelayPlan::Standard { pi: vec![0, 1] },
//! )?;
//! let set = recursive_generate(&spec, 0)?;
//! let report = complementarity_check(&set, 1e-9)?;
//! assert!(report.passed);
//! assert_eq!(report.constant.unwrap(), pucodes::Scalar::integer(set.kind(), 27));
//! # Ok::<(), pucodes::Error>(())
//! ```

pub mod catalog;
pub mod correlation;
pub mod correlator;
mod cyclotomic;
pub mod error;
pub mod generator;
pub mod polymatrix;
pub mod scalar;
pub mod zpoly;

pub use cyclotomic::{cyclotomic_basis, CyclotomicBasis};
pub use error::{Error, Result};
pub use scalar::{Scalar, ScalarKind};

/// Default absolute tolerance for float-kind comparisons. Exact kinds
/// ignore tolerances entirely.
pub const DEFAULT_TOL: f64 = 1e-9;

// The guide in book/ is part of the test suite: each chapter is attached
// as a doc-test-only module so `cargo test --doc` compiles and runs every
// code block in it.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/scalars.md")]
    mod scalars {}
    #[doc = include_str!("../../../book/src/polynomials.md")]
    mod polynomials {}
    #[doc = include_str!("../../../book/src/generators.md")]
    mod generators {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
    #[doc = include_str!("../../../book/src/correlator.md")]
    mod correlator {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
    #[doc = include_str!("../../../README.md")]
    mod readme {}
}
