//! Density matrices and their validity checks.

use std::fmt;

use crate::dims::DimensionSpec;
use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;
use crate::spectra;

/// Hermiticity tolerance for unit-scale inputs.
pub const EPS_HERMITIAN: f64 = 1e-10;
/// Unit-trace tolerance.
pub const EPS_TRACE: f64 = 1e-10;

/// Scale-aware tolerance for "numerically zero" eigenvalues: `d * 1e-12 * max|λ|`.
pub fn spectral_zero_tolerance(dim: usize, eigenvalues: &[f64]) -> f64 {
    let max_abs = eigenvalues.iter().fold(0.0_f64, |m, x| m.max(x.abs()));
    dim as f64 * 1e-12 * max_abs
}

/// A matrix paired with the subsystem structure it lives on.
///
/// Construction only checks that the shapes agree. Hermiticity, trace and
/// positivity are checked by [`validate_density`], because intermediate
/// objects (and candidate closest states) are allowed to violate them.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    matrix: ComplexMatrix,
    spec: DimensionSpec,
}

impl DensityMatrix {
    pub fn new(matrix: ComplexMatrix, spec: DimensionSpec) -> Result<Self> {
        if matrix.dim() != spec.total_dim() {
            return Err(Error::Dimension(format!(
                "matrix is {0}x{0} but subsystem dims {1:?} multiply to {2}",
                matrix.dim(),
                spec.dims(),
                spec.total_dim()
            )));
        }
        Ok(Self { matrix, spec })
    }

    #[inline]
    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    #[inline]
    pub fn spec(&self) -> &DimensionSpec {
        &self.spec
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    pub fn into_parts(self) -> (ComplexMatrix, DimensionSpec) {
        (self.matrix, self.spec)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InvariantKind {
    Hermitian,
    UnitTrace,
    PositiveSemidefinite,
}

impl fmt::Display for InvariantKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            InvariantKind::Hermitian => "hermitian",
            InvariantKind::UnitTrace => "unit-trace",
            InvariantKind::PositiveSemidefinite => "positive-semidefinite",
        })
    }
}

/// One violated invariant and how badly it is violated.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Violation {
    pub kind: InvariantKind,
    /// Hermitian: max |A(j,k) - conj A(k,j)|. Trace: |Tr A - 1|. PSD: -min eigenvalue.
    pub magnitude: f64,
}

/// Empty iff every requested invariant holds.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Verdict {
    pub violations: Vec<Violation>,
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn get(&self, kind: InvariantKind) -> Option<&Violation> {
        self.violations.iter().find(|v| v.kind == kind)
    }
}

/// Checks Hermiticity and unit trace, and positivity when `check_psd` is set.
///
/// The PSD check needs a Hermitian matrix; on a non-Hermitian input it is
/// skipped (the Hermitian violation is already reported).
pub fn validate_density(rho: &DensityMatrix, check_psd: bool) -> Result<Verdict> {
    let m = rho.matrix();
    if m.dim() != rho.spec().total_dim() {
        return Err(Error::Dimension("matrix/spec mismatch".into()));
    }
    let mut verdict = Verdict::default();

    let herm = m.hermitian_deviation();
    if herm > EPS_HERMITIAN {
        verdict.violations.push(Violation {
            kind: InvariantKind::Hermitian,
            magnitude: herm,
        });
    }

    let tr = m.trace();
    let tr_err = (tr - 1.0).norm();
    if tr_err > EPS_TRACE {
        verdict.violations.push(Violation {
            kind: InvariantKind::UnitTrace,
            magnitude: tr_err,
        });
    }

    if check_psd && herm <= EPS_HERMITIAN {
        let eig = spectra::eig_hermitian(m)?;
        let min = eig.eigenvalues().last().copied().unwrap_or(0.0);
        if min < -spectral_zero_tolerance(m.dim(), eig.eigenvalues()) {
            verdict.violations.push(Violation {
                kind: InvariantKind::PositiveSemidefinite,
                magnitude: -min,
            });
        }
    }
    Ok(verdict)
}
