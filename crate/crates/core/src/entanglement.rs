//! Entanglement functions built on the partial transpose.
//!
//! * PPT verdict (Peres): a negative eigenvalue of the partial transpose
//!   certifies entanglement. PPT certifies separability only when the total
//!   dimension is at most 6.
//! * Negativity `E_n = sum |negative eigenvalues|` and logarithmic
//!   negativity `E_ln = log2(2 E_n + 1)`.
//! * Hilbert-Schmidt entanglement `E_hs` in closed form from the spectrum of
//!   the partial transpose, with the candidate closest separable state
//!   `σ* = PT(Ξ)`, `Ξ` a mixture of the top eigenvectors of the partial
//!   transpose.
//! * An independent audit: the exact Euclidean projection of the PT spectrum
//!   onto the probability simplex, which lower-bounds `E_hs`.
//!
//! Functions taking `pt` expect the partial transpose itself (Hermitian, unit
//! trace); the `*_of` wrappers take a state and a mask.

use crate::density::{spectral_zero_tolerance, DensityMatrix, EPS_TRACE};
use crate::dims::{DimensionSpec, TransposeMask};
use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;
use crate::ptranspose::partial_transpose;
use crate::spectra::{eig_hermitian, SpectralDecomposition};

/// Below this, the positive part of the spectrum is treated as summing to 1
/// (no cut point).
pub const NO_CUT_TOLERANCE: f64 = 1e-9;
/// Guard on the "cumulative sum strictly exceeds 1" test so that exact ties
/// (Bell, three-qubit Werner at w = 1/2) do not flip on rounding noise.
pub const CUT_TIE_GUARD: f64 = 1e-12;
/// Allowed disagreement between the two closed forms of `E_hs`.
pub const HSE_CONSISTENCY_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PptVerdict {
    /// Negative partial transpose: the state is entangled.
    NptEntangled,
    /// Positive partial transpose: no verdict beyond total dimension 6.
    Ppt,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PptResult {
    pub min_eigenvalue: f64,
    pub verdict: PptVerdict,
}

pub fn ppt_verdict(rho: &DensityMatrix, mask: &TransposeMask) -> Result<PptResult> {
    let pt = partial_transpose(rho.matrix(), rho.spec(), mask)?;
    let eig = eig_hermitian(&pt)?;
    let eigs = eig.eigenvalues();
    let min_eigenvalue = eigs.last().copied().unwrap_or(0.0);
    let tau = spectral_zero_tolerance(pt.dim(), eigs);
    let verdict = if min_eigenvalue < -tau {
        PptVerdict::NptEntangled
    } else {
        PptVerdict::Ppt
    };
    Ok(PptResult {
        min_eigenvalue,
        verdict,
    })
}

/// Sign classification of a descending spectrum.
#[derive(Debug, Clone, PartialEq)]
pub struct EigClassification {
    /// Eigenvalues `> τ`, descending.
    pub positives: Vec<f64>,
    /// Eigenvalues `< -τ`, descending (so the most negative is last).
    pub negatives: Vec<f64>,
    pub zero_count: usize,
}

impl EigClassification {
    pub fn d_plus(&self) -> usize {
        self.positives.len()
    }

    pub fn d_minus(&self) -> usize {
        self.negatives.len()
    }

    pub fn d_zero(&self) -> usize {
        self.zero_count
    }

    pub fn positive_sum(&self) -> f64 {
        self.positives.iter().fold(0.0, |acc, x| acc + x)
    }

    pub fn negative_abs_sum(&self) -> f64 {
        self.negatives.iter().fold(0.0, |acc, x| acc + x.abs())
    }
}

/// Splits a descending list into positives (`> tau`), zeros (`|λ| <= tau`)
/// and negatives (`< -tau`).
pub fn classify_spectrum(eigs: &[f64], tau: f64) -> EigClassification {
    let mut out = EigClassification {
        positives: Vec::new(),
        negatives: Vec::new(),
        zero_count: 0,
    };
    for &x in eigs {
        if x > tau {
            out.positives.push(x);
        } else if x < -tau {
            out.negatives.push(x);
        } else {
            out.zero_count += 1;
        }
    }
    out
}

/// Where the greedy fill of descending positive eigenvalues crosses 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CutPoint {
    /// One-based index of the first positive eigenvalue whose cumulative sum
    /// exceeds 1; `d_+ + 1` when there is no such eigenvalue.
    pub d_plus_prime: usize,
    /// `1 - sum of the positives before the cut`, clamped to `[0, D_cut]`.
    pub xi: f64,
    /// True when the positives sum to at most `1 + NO_CUT_TOLERANCE`.
    pub no_cut: bool,
}

pub fn hse_cut_point(positives: &[f64]) -> Result<CutPoint> {
    if let Some(bad) = positives.iter().find(|&&x| x.is_nan() || x <= 0.0) {
        return Err(Error::Contract(format!(
            "hse_cut_point needs strictly positive eigenvalues, got {bad}"
        )));
    }
    if positives.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::Contract(
            "hse_cut_point needs a descending list".into(),
        ));
    }
    let total: f64 = positives.iter().sum();
    if total <= 1.0 + NO_CUT_TOLERANCE {
        return Ok(CutPoint {
            d_plus_prime: positives.len() + 1,
            xi: 0.0,
            no_cut: true,
        });
    }
    let mut before = 0.0;
    for (j, &x) in positives.iter().enumerate() {
        if before + x > 1.0 + CUT_TIE_GUARD {
            return Ok(CutPoint {
                d_plus_prime: j + 1,
                xi: (1.0 - before).clamp(0.0, x),
                no_cut: false,
            });
        }
        before += x;
    }
    // total > 1 + 1e-9 guarantees the loop returns
    unreachable!("cumulative sum exceeded 1 but no cut was found")
}

/// Euclidean projection of `eigs` onto the probability simplex, by
/// sort-and-threshold. Returns the distance and the projection (in input
/// order).
pub fn simplex_projection_distance(eigs: &[f64]) -> (f64, Vec<f64>) {
    if eigs.is_empty() {
        return (0.0, Vec::new());
    }
    let mut sorted = eigs.to_vec();
    sorted.sort_by(|a, b| b.total_cmp(a));
    let mut cumulative = 0.0;
    let mut threshold = 0.0;
    for (j, &u) in sorted.iter().enumerate() {
        cumulative += u;
        let t = (cumulative - 1.0) / (j + 1) as f64;
        if u - t > 0.0 {
            threshold = t;
        }
    }
    let projected: Vec<f64> = eigs.iter().map(|&x| (x - threshold).max(0.0)).collect();
    let dist = eigs
        .iter()
        .zip(&projected)
        .map(|(x, p)| (x - p) * (x - p))
        .sum::<f64>()
        .sqrt();
    (dist, projected)
}

fn check_unit_trace(pt: &ComplexMatrix, what: &str) -> Result<()> {
    let tr = pt.trace();
    if (tr - 1.0).norm() > EPS_TRACE {
        return Err(Error::Contract(format!(
            "{what} expects a unit-trace partial transpose, trace is {}{:+}i",
            tr.re, tr.im
        )));
    }
    Ok(())
}

fn classify_pt(pt: &ComplexMatrix) -> Result<(SpectralDecomposition, EigClassification)> {
    let eig = eig_hermitian(pt)?;
    let tau = spectral_zero_tolerance(pt.dim(), eig.eigenvalues());
    let class = classify_spectrum(eig.eigenvalues(), tau);
    Ok((eig, class))
}

/// `E_n`: sum of the absolute values of the negative eigenvalues of `pt`.
pub fn negativity(pt: &ComplexMatrix) -> Result<f64> {
    check_unit_trace(pt, "negativity")?;
    let (_, class) = classify_pt(pt)?;
    Ok(class.negative_abs_sum())
}

/// `E_ln = log2(2 E_n + 1)`.
pub fn log_negativity(pt: &ComplexMatrix) -> Result<f64> {
    Ok(log_negativity_from(negativity(pt)?))
}

pub fn log_negativity_from(negativity: f64) -> f64 {
    (2.0 * negativity + 1.0).log2()
}

pub fn negativity_of(rho: &DensityMatrix, mask: &TransposeMask) -> Result<f64> {
    negativity(&partial_transpose(rho.matrix(), rho.spec(), mask)?)
}

pub fn log_negativity_of(rho: &DensityMatrix, mask: &TransposeMask) -> Result<f64> {
    log_negativity(&partial_transpose(rho.matrix(), rho.spec(), mask)?)
}

/// Result of the Hilbert-Schmidt entanglement computation.
#[derive(Debug, Clone, PartialEq)]
pub struct HseReport {
    pub e_hs: f64,
    /// `E_hs` from the tail form (negatives minus discarded positives); must
    /// agree with `e_hs` within [`HSE_CONSISTENCY_TOLERANCE`].
    pub e_hs_tail_form: f64,
    pub d_plus_prime: usize,
    pub xi: f64,
    pub classification: EigClassification,
    /// Descending spectrum of the partial transpose.
    pub pt_eigenvalues: Vec<f64>,
    /// `σ* = PT(Ξ)`, when requested. For a PPT input this is the state itself.
    pub css: Option<DensityMatrix>,
    /// Smallest eigenvalue of `css`; `σ*` is not guaranteed PSD, so it is measured.
    pub css_min_eigenvalue: Option<f64>,
    /// Trace of `Ξ` (1 by construction, up to rounding).
    pub xi_mixture_trace: Option<f64>,
    /// Distance from the PT spectrum to the probability simplex.
    pub oracle_lower_bound: f64,
    /// The spectrum had negatives but its positives summed to at most
    /// `1 + NO_CUT_TOLERANCE` (possible only through rounding of the trace).
    pub trace_anomaly: bool,
}

impl HseReport {
    pub fn min_pt_eigenvalue(&self) -> f64 {
        self.pt_eigenvalues.last().copied().unwrap_or(0.0)
    }

    pub fn is_separable_branch(&self) -> bool {
        self.classification.d_minus() == 0
    }
}

/// Hilbert-Schmidt entanglement of the state whose partial transpose (over
/// `mask`) is `pt`.
///
/// With descending positive PT eigenvalues `D_j^+`, cut point `d'` and
/// remainder `ξ`:
///
/// ```text
/// E_hs^2 = (D_{d'}^+ - ξ)^2 + sum_{j>d'} (D_j^+)^2 + sum_j (D_j^-)^2
/// ```
///
/// and the closest separable state candidate is
/// `σ* = PT(sum_{j<d'} D_j^+ |R_j><R_j| + ξ |R_{d'}><R_{d'}|)`.
pub fn hse(
    pt: &ComplexMatrix,
    spec: &DimensionSpec,
    mask: &TransposeMask,
    want_css: bool,
) -> Result<HseReport> {
    if pt.dim() != spec.total_dim() {
        return Err(Error::Dimension(format!(
            "partial transpose is {0}x{0}, dims multiply to {1}",
            pt.dim(),
            spec.total_dim()
        )));
    }
    mask.check_against(spec)?;
    check_unit_trace(pt, "hse")?;
    let (eig, class) = classify_pt(pt)?;
    let pt_eigenvalues = eig.eigenvalues().to_vec();
    let d_plus = class.d_plus();

    if class.d_minus() == 0 {
        let (css, css_min_eigenvalue) = if want_css {
            let rho = partial_transpose(pt, spec, mask)?;
            let min = min_eigenvalue(&rho)?;
            (Some(DensityMatrix::new(rho, spec.clone())?), Some(min))
        } else {
            (None, None)
        };
        return Ok(HseReport {
            e_hs: 0.0,
            e_hs_tail_form: 0.0,
            d_plus_prime: d_plus + 1,
            xi: 0.0,
            classification: class,
            pt_eigenvalues,
            css,
            css_min_eigenvalue,
            xi_mixture_trace: None,
            oracle_lower_bound: 0.0,
            trace_anomaly: false,
        });
    }

    let (oracle_lower_bound, _) = simplex_projection_distance(&pt_eigenvalues);
    let positives = &class.positives;
    let neg_sq: f64 = class.negatives.iter().map(|x| x * x).sum();
    let neg_abs = class.negative_abs_sum();

    let cut = hse_cut_point(positives)?;
    let (d_plus_prime, xi, trace_anomaly) = if cut.no_cut {
        // Negatives present while the positives fit under 1: only reachable
        // through trace rounding. Put the whole shortfall on the last positive.
        let before: f64 = positives[..d_plus - 1].iter().sum();
        (d_plus, (1.0 - before).max(0.0), true)
    } else {
        (cut.d_plus_prime, cut.xi, false)
    };

    let cut_value = positives[d_plus_prime - 1];
    let tail = &positives[d_plus_prime..];
    let tail_sq: f64 = tail.iter().map(|x| x * x).sum();
    let tail_sum: f64 = tail.iter().sum();

    let e_hs = ((cut_value - xi).powi(2) + tail_sq + neg_sq).sqrt();
    let e_hs_tail_form = ((neg_abs - tail_sum).powi(2) + tail_sq + neg_sq).sqrt();
    if (e_hs - e_hs_tail_form).abs() > HSE_CONSISTENCY_TOLERANCE {
        return Err(Error::Numerical(format!(
            "E_hs closed forms disagree: {e_hs} vs {e_hs_tail_form}"
        )));
    }

    let (css, css_min_eigenvalue, xi_mixture_trace) = if want_css {
        let mut weights = vec![0.0; pt.dim()];
        weights[..d_plus_prime - 1].copy_from_slice(&positives[..d_plus_prime - 1]);
        weights[d_plus_prime - 1] = xi;
        let mixture = eig.recombine(&weights);
        let trace = mixture.trace().re;
        let sigma = partial_transpose(&mixture, spec, mask)?;
        let min = min_eigenvalue(&sigma)?;
        (
            Some(DensityMatrix::new(sigma, spec.clone())?),
            Some(min),
            Some(trace),
        )
    } else {
        (None, None, None)
    };

    Ok(HseReport {
        e_hs,
        e_hs_tail_form,
        d_plus_prime,
        xi,
        classification: class,
        pt_eigenvalues,
        css,
        css_min_eigenvalue,
        xi_mixture_trace,
        oracle_lower_bound,
        trace_anomaly,
    })
}

/// [`hse`] on a state: computes the partial transpose over `mask` first.
pub fn hse_of(rho: &DensityMatrix, mask: &TransposeMask, want_css: bool) -> Result<HseReport> {
    let pt = partial_transpose(rho.matrix(), rho.spec(), mask)?;
    hse(&pt, rho.spec(), mask, want_css)
}

fn min_eigenvalue(m: &ComplexMatrix) -> Result<f64> {
    Ok(eig_hermitian(m)?
        .eigenvalues()
        .last()
        .copied()
        .unwrap_or(0.0))
}
