//! Hermitian eigendecomposition and matrix norms.
//!
//! The eigensolver is a cyclic complex Jacobi method. Each rotation first
//! removes the phase of the pivot `a_pq` with a diagonal unitary, then
//! applies the real symmetric Jacobi rotation that annihilates it.

use num_complex::Complex64;

use crate::density::EPS_HERMITIAN;
use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;

/// Sweep budget. One sweep visits all `d(d-1)/2` pivots, so this caps the
/// work at roughly `50 d^2` rotations.
pub const MAX_SWEEPS: usize = 50;

/// Eigenvalues in descending order with their orthonormal eigenvectors.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralDecomposition {
    eigenvalues: Vec<f64>,
    eigenvectors: Vec<Vec<Complex64>>,
}

impl SpectralDecomposition {
    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    /// `eigenvectors()[j]` belongs to `eigenvalues()[j]`.
    pub fn eigenvectors(&self) -> &[Vec<Complex64>] {
        &self.eigenvectors
    }

    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }

    /// `sum_j weights[j] |v_j><v_j|`; missing weights count as zero.
    pub fn recombine(&self, weights: &[f64]) -> ComplexMatrix {
        let d = self.dim();
        let mut out = ComplexMatrix::zeros(d);
        for (w, v) in weights.iter().zip(&self.eigenvectors) {
            if *w == 0.0 {
                continue;
            }
            for r in 0..d {
                let vr = v[r] * *w;
                for c in 0..d {
                    out[(r, c)] += vr * v[c].conj();
                }
            }
        }
        out
    }

    /// `sum_j λ_j |v_j><v_j|`.
    pub fn reconstruct(&self) -> ComplexMatrix {
        self.recombine(&self.eigenvalues)
    }
}

fn off_diagonal_norm(a: &ComplexMatrix) -> f64 {
    let d = a.dim();
    let mut s = 0.0;
    for r in 0..d {
        for c in 0..d {
            if r != c {
                s += a[(r, c)].norm_sqr();
            }
        }
    }
    s.sqrt()
}

/// Diagonalises a Hermitian matrix.
///
/// Output is deterministic: eigenvalues sorted descending (stable with
/// respect to the Jacobi diagonal order), eigenvectors re-orthonormalised by
/// modified Gram-Schmidt in that order, and each eigenvector's phase fixed so
/// that its largest-magnitude component (first one on ties) is real positive.
pub fn eig_hermitian(a: &ComplexMatrix) -> Result<SpectralDecomposition> {
    let scale = a.max_abs().max(1.0);
    let herm = a.hermitian_deviation();
    if herm > EPS_HERMITIAN * scale {
        return Err(Error::Contract(format!(
            "eig_hermitian needs a Hermitian matrix (deviation {herm:e})"
        )));
    }

    let d = a.dim();
    // symmetrise exactly so rotations act on a truly Hermitian matrix
    let mut m = ComplexMatrix::from_fn(d, |r, c| {
        if r == c {
            Complex64::new(a[(r, r)].re, 0.0)
        } else {
            (a[(r, c)] + a[(c, r)].conj()) * 0.5
        }
    });
    let mut v = ComplexMatrix::identity(d);

    let frob = hs_norm(&m);
    let target = f64::EPSILON * frob;
    let mut sweeps = 0;
    loop {
        let off = off_diagonal_norm(&m);
        if off <= target || off == 0.0 {
            break;
        }
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence {
                sweeps,
                residual: off,
            });
        }
        for p in 0..d {
            for q in p + 1..d {
                rotate(&mut m, &mut v, p, q, sweeps);
            }
        }
        sweeps += 1;
    }

    let diag: Vec<f64> = (0..d).map(|j| m[(j, j)].re).collect();
    let mut order: Vec<usize> = (0..d).collect();
    // stable: ties keep the Jacobi diagonal order
    order.sort_by(|&i, &j| diag[j].total_cmp(&diag[i]));

    let mut eigenvalues = Vec::with_capacity(d);
    let mut eigenvectors: Vec<Vec<Complex64>> = Vec::with_capacity(d);
    for &k in &order {
        eigenvalues.push(diag[k]);
        let mut col: Vec<Complex64> = (0..d).map(|r| v[(r, k)]).collect();
        for prev in &eigenvectors {
            let overlap: Complex64 = prev.iter().zip(&col).map(|(p, x)| p.conj() * x).sum();
            for (x, p) in col.iter_mut().zip(prev) {
                *x -= overlap * p;
            }
        }
        let norm = col.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
        for x in col.iter_mut() {
            *x /= norm;
        }
        fix_phase(&mut col);
        eigenvectors.push(col);
    }

    Ok(SpectralDecomposition {
        eigenvalues,
        eigenvectors,
    })
}

/// Zeroes `m[(p, q)]` with `m <- V† m V` and accumulates `v <- v V`.
fn rotate(m: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize, sweep: usize) {
    let apq = m[(p, q)];
    let g = apq.norm();
    if g == 0.0 {
        return;
    }
    let app = m[(p, p)].re;
    let aqq = m[(q, q)].re;
    // after a few sweeps, pivots below the diagonal's precision are dropped
    if sweep > 3 && app.abs() + 100.0 * g == app.abs() && aqq.abs() + 100.0 * g == aqq.abs() {
        m[(p, q)] = Complex64::new(0.0, 0.0);
        m[(q, p)] = Complex64::new(0.0, 0.0);
        return;
    }

    let theta = (aqq - app) / (2.0 * g);
    let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
    let t = if theta == 0.0 { 1.0 } else { t };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;
    let phase = apq / g; // e^{iφ}
    let phase_conj = phase.conj();

    let d = m.dim();
    // columns: col_p' = c col_p - s e^{-iφ} col_q ; col_q' = s col_p + c e^{-iφ} col_q
    for k in 0..d {
        let xp = m[(k, p)];
        let xq = m[(k, q)];
        m[(k, p)] = xp * c - xq * phase_conj * s;
        m[(k, q)] = xp * s + xq * phase_conj * c;
        let yp = v[(k, p)];
        let yq = v[(k, q)];
        v[(k, p)] = yp * c - yq * phase_conj * s;
        v[(k, q)] = yp * s + yq * phase_conj * c;
    }
    // rows: row_p' = c row_p - s e^{iφ} row_q ; row_q' = s row_p + c e^{iφ} row_q
    for k in 0..d {
        let xp = m[(p, k)];
        let xq = m[(q, k)];
        m[(p, k)] = xp * c - xq * phase * s;
        m[(q, k)] = xp * s + xq * phase * c;
    }
    m[(p, p)] = Complex64::new(app - t * g, 0.0);
    m[(q, q)] = Complex64::new(aqq + t * g, 0.0);
    m[(p, q)] = Complex64::new(0.0, 0.0);
    m[(q, p)] = Complex64::new(0.0, 0.0);
}

fn fix_phase(v: &mut [Complex64]) {
    let mut best = 0;
    let mut best_norm = -1.0;
    for (i, x) in v.iter().enumerate() {
        let n = x.norm();
        if n > best_norm * (1.0 + 1e-12) {
            best = i;
            best_norm = n;
        }
    }
    if best_norm <= 0.0 {
        return;
    }
    let rot = v[best].conj() / best_norm;
    for x in v.iter_mut() {
        *x *= rot;
    }
    v[best] = Complex64::new(best_norm, 0.0);
}

/// Trace norm of a Hermitian matrix: `sum_j |λ_j|`.
pub fn trace_norm_hermitian(a: &ComplexMatrix) -> Result<f64> {
    Ok(eig_hermitian(a)?
        .eigenvalues()
        .iter()
        .map(|x| x.abs())
        .sum())
}

/// Hilbert-Schmidt (Frobenius) norm `sqrt(sum |A_jk|^2)`.
///
/// The squared moduli are summed in ascending order, so the result depends
/// only on the multiset of entries: any entry permutation (a partial
/// transpose, say) leaves it bit-for-bit unchanged.
pub fn hs_norm(a: &ComplexMatrix) -> f64 {
    let mut sq: Vec<f64> = a.as_slice().iter().map(|z| z.norm_sqr()).collect();
    sq.sort_by(f64::total_cmp);
    sq.iter().sum::<f64>().sqrt()
}
