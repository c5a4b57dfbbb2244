//! Partial transposition of multipartite density matrices and the
//! entanglement functions built on it: PPT test, negativity, logarithmic
//! negativity, and the closed-form Hilbert-Schmidt entanglement with its
//! closest-separable-state candidate.
//!
//! ```
//! use ptent::{entanglement, states, TransposeMask};
//!
//! let bell = states::bell_phi_plus();
//! let mask = TransposeMask::single(2, 1);
//! assert!((entanglement::negativity_of(&bell, &mask).unwrap() - 0.5).abs() < 1e-12);
//! let report = entanglement::hse_of(&bell, &mask, false).unwrap();
//! assert!((report.e_hs - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-12);
//! ```

pub mod cli;
pub mod density;
pub mod dims;
pub mod entanglement;
pub mod error;
pub mod matrix;
pub mod ptranspose;
pub mod spectra;
pub mod states;

pub use density::{validate_density, DensityMatrix, InvariantKind, Verdict, Violation};
pub use dims::{DimensionSpec, TransposeMask};
pub use error::{Error, Result};
pub use matrix::ComplexMatrix;
pub use num_complex::Complex64;
pub use spectra::SpectralDecomposition;
