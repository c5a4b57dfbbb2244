//! Test-state generators: Bell, GHZ, Werner, and seeded random states.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::density::DensityMatrix;
use crate::dims::DimensionSpec;
use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;

/// `|Φ+><Φ+|` with `|Φ+> = (|00> + |11>)/√2`.
pub fn bell_phi_plus() -> DensityMatrix {
    ghz(2).expect("two qubits is a valid GHZ size")
}

/// Projector onto `(|0...0> + |1...1>)/√2` on `n` qubits.
pub fn ghz(n: usize) -> Result<DensityMatrix> {
    if n < 2 {
        return Err(Error::Argument(format!(
            "ghz needs at least 2 qubits, got {n}"
        )));
    }
    let spec = DimensionSpec::qubits(n)?;
    let last = spec.total_dim() - 1;
    let mut m = ComplexMatrix::zeros(spec.total_dim());
    for &(r, c) in &[(0, 0), (0, last), (last, 0), (last, last)] {
        m[(r, c)] = Complex64::new(0.5, 0.0);
    }
    DensityMatrix::new(m, spec)
}

/// `w |GHZ_n><GHZ_n| + (1 - w) I / 2^n`.
///
/// Two and three qubits are the usual cases; any `n >= 2` is accepted.
pub fn werner(n: usize, w: f64) -> Result<DensityMatrix> {
    if !(0.0..=1.0).contains(&w) {
        return Err(Error::Argument(format!(
            "werner weight must lie in [0, 1], got {w}"
        )));
    }
    let g = ghz(n)?;
    let d = g.dim();
    let noise = (1.0 - w) / d as f64;
    let mut m = g.matrix().scale(w);
    for j in 0..d {
        m[(j, j)] += noise;
    }
    let (_, spec) = g.into_parts();
    DensityMatrix::new(m, spec)
}

/// `G G† / Tr(G G†)` with `G` of i.i.d. standard complex Gaussian entries,
/// drawn from a ChaCha8 stream seeded with `seed`.
pub fn random_density(spec: &DimensionSpec, seed: u64) -> DensityMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_density_with(spec, &mut rng)
}

/// Same ensemble as [`random_density`], drawing from a caller-owned RNG.
pub fn random_density_with<R: Rng + ?Sized>(spec: &DimensionSpec, rng: &mut R) -> DensityMatrix {
    let d = spec.total_dim();
    let g = random_gaussian_matrix(d, rng);
    let gg = &g * &g.adjoint();
    let tr = gg.trace().re;
    let mut m = gg.scale(1.0 / tr);
    // G G† is Hermitian analytically; make it exactly so
    for r in 0..d {
        m[(r, r)].im = 0.0;
        for c in r + 1..d {
            m[(c, r)] = m[(r, c)].conj();
        }
    }
    DensityMatrix::new(m, spec.clone()).expect("spec and matrix built from the same dimension")
}

/// Matrix of i.i.d. standard complex Gaussians.
pub fn random_gaussian_matrix<R: Rng + ?Sized>(d: usize, rng: &mut R) -> ComplexMatrix {
    ComplexMatrix::from_fn(d, |_, _| {
        Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
    })
}
