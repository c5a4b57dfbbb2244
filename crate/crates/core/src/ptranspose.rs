//! Partial transposition maps.
//!
//! All maps here are entry permutations: no arithmetic touches the values, so
//! every identity between them (involution, composition, Hermiticity and
//! trace preservation) holds bit for bit.

use crate::dims::{DimensionSpec, TransposeMask};
use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;

/// Full transposition: `out(k, j) = in(j, k)`. Entries are moved, not conjugated.
pub fn transpose(rho: &ComplexMatrix) -> ComplexMatrix {
    let d = rho.dim();
    ComplexMatrix::from_fn(d, |r, c| rho[(c, r)])
}

fn check_dim(rho: &ComplexMatrix, expected: usize, what: &str) -> Result<()> {
    if rho.dim() != expected {
        return Err(Error::Dimension(format!(
            "{what}: matrix is {0}x{0}, subsystem dims multiply to {expected}",
            rho.dim()
        )));
    }
    Ok(())
}

/// Transposition of the first factor of a bipartite `d_a x d_b` operator.
///
/// `<k_a j_b| out |j_a k_b> = <j_a j_b| rho |k_a k_b>`.
pub fn partial_transpose_a(d_a: usize, d_b: usize, rho: &ComplexMatrix) -> Result<ComplexMatrix> {
    check_dim(rho, d_a * d_b, "partial_transpose_a")?;
    let mut out = ComplexMatrix::zeros(rho.dim());
    for ja in 0..d_a {
        for ka in 0..d_a {
            for jb in 0..d_b {
                for kb in 0..d_b {
                    out[(ka * d_b + jb, ja * d_b + kb)] = rho[(ja * d_b + jb, ka * d_b + kb)];
                }
            }
        }
    }
    Ok(out)
}

/// Transposition of the second factor of a bipartite `d_a x d_b` operator.
///
/// `<j_a k_b| out |k_a j_b> = <j_a j_b| rho |k_a k_b>`.
pub fn partial_transpose_b(d_a: usize, d_b: usize, rho: &ComplexMatrix) -> Result<ComplexMatrix> {
    check_dim(rho, d_a * d_b, "partial_transpose_b")?;
    let mut out = ComplexMatrix::zeros(rho.dim());
    for ja in 0..d_a {
        for ka in 0..d_a {
            for jb in 0..d_b {
                for kb in 0..d_b {
                    out[(ja * d_b + kb, ka * d_b + jb)] = rho[(ja * d_b + jb, ka * d_b + kb)];
                }
            }
        }
    }
    Ok(out)
}

/// Transposition of the middle factor of a tripartite `d_a x d_b x d_c` operator.
pub fn partial_transpose_3(
    d_a: usize,
    d_b: usize,
    d_c: usize,
    rho: &ComplexMatrix,
) -> Result<ComplexMatrix> {
    check_dim(rho, d_a * d_b * d_c, "partial_transpose_3")?;
    let idx = |a: usize, b: usize, c: usize| (a * d_b + b) * d_c + c;
    let mut out = ComplexMatrix::zeros(rho.dim());
    for ja in 0..d_a {
        for ka in 0..d_a {
            for jb in 0..d_b {
                for kb in 0..d_b {
                    for jc in 0..d_c {
                        for kc in 0..d_c {
                            out[(idx(ja, kb, jc), idx(ka, jb, kc))] =
                                rho[(idx(ja, jb, jc), idx(ka, kb, kc))];
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Partial transposition over every subsystem flagged in `mask`.
///
/// Single out-of-place pass: for each input entry `(r, c)` the row and column
/// digits of each flagged subsystem are swapped.
pub fn partial_transpose(
    rho: &ComplexMatrix,
    spec: &DimensionSpec,
    mask: &TransposeMask,
) -> Result<ComplexMatrix> {
    check_dim(rho, spec.total_dim(), "partial_transpose")?;
    mask.check_against(spec)?;

    let d = rho.dim();
    let nss = spec.nss();
    let strides = spec.strides();
    let flagged: Vec<usize> = (0..nss).filter(|&s| mask.flags()[s]).collect();
    if flagged.is_empty() {
        return Ok(rho.clone());
    }

    // Digits of every basis index, flattened: digits[i * nss + s].
    let mut digits = vec![0usize; d * nss];
    for (i, chunk) in digits.chunks_exact_mut(nss).enumerate() {
        spec.fill_multi_index(i, chunk);
    }

    let mut out = ComplexMatrix::zeros(d);
    for r in 0..d {
        let rd = &digits[r * nss..(r + 1) * nss];
        for c in 0..d {
            let cd = &digits[c * nss..(c + 1) * nss];
            let (mut r_out, mut c_out) = (r, c);
            for &s in &flagged {
                // swap digit s between row and column
                r_out = r_out - rd[s] * strides[s] + cd[s] * strides[s];
                c_out = c_out - cd[s] * strides[s] + rd[s] * strides[s];
            }
            out[(r_out, c_out)] = rho[(r, c)];
        }
    }
    Ok(out)
}
