//! Test-only oracles, written independently of the library code paths.

#![allow(dead_code)]

use ptent::{Complex64, ComplexMatrix, DensityMatrix, DimensionSpec};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Arbitrary (non-Hermitian) complex matrix with uniform entries in [-1, 1).
pub fn random_matrix(d: usize, rng: &mut impl Rng) -> ComplexMatrix {
    ComplexMatrix::from_fn(d, |_, _| {
        Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
    })
}

pub fn random_hermitian(d: usize, rng: &mut impl Rng) -> ComplexMatrix {
    let a = random_matrix(d, rng);
    let mut h = ComplexMatrix::from_fn(d, |r, c| (a[(r, c)] + a[(c, r)].conj()) * 0.5);
    for j in 0..d {
        h[(j, j)].im = 0.0;
    }
    h
}

/// Bipartite left transposition, straight from the element map
/// `<k_a j_b| T_a(ρ) |j_a k_b> = <j_a j_b| ρ |k_a k_b>`.
pub fn oracle_pt_left(da: usize, db: usize, rho: &ComplexMatrix) -> ComplexMatrix {
    let mut out = ComplexMatrix::zeros(da * db);
    for ja in 0..da {
        for jb in 0..db {
            for ka in 0..da {
                for kb in 0..db {
                    out[(ka * db + jb, ja * db + kb)] = rho[(ja * db + jb, ka * db + kb)];
                }
            }
        }
    }
    out
}

/// `<j_a k_b| T_b(ρ) |k_a j_b> = <j_a j_b| ρ |k_a k_b>`.
pub fn oracle_pt_right(da: usize, db: usize, rho: &ComplexMatrix) -> ComplexMatrix {
    let mut out = ComplexMatrix::zeros(da * db);
    for ja in 0..da {
        for jb in 0..db {
            for ka in 0..da {
                for kb in 0..db {
                    out[(ja * db + kb, ka * db + jb)] = rho[(ja * db + jb, ka * db + kb)];
                }
            }
        }
    }
    out
}

/// Tripartite transposition of subsystem `which` (0, 1 or 2), sextuple loop.
pub fn oracle_pt_tri(dims: [usize; 3], which: usize, rho: &ComplexMatrix) -> ComplexMatrix {
    let [da, db, dc] = dims;
    let flat = |x: [usize; 3]| x[0] * db * dc + x[1] * dc + x[2];
    let mut out = ComplexMatrix::zeros(da * db * dc);
    for ja in 0..da {
        for jb in 0..db {
            for jc in 0..dc {
                for ka in 0..da {
                    for kb in 0..db {
                        for kc in 0..dc {
                            let mut row = [ja, jb, jc];
                            let mut col = [ka, kb, kc];
                            std::mem::swap(&mut row[which], &mut col[which]);
                            out[(flat(row), flat(col))] =
                                rho[(flat([ja, jb, jc]), flat([ka, kb, kc]))];
                        }
                    }
                }
            }
        }
    }
    out
}

/// Partial transpose over `flags` by composing single-subsystem oracles.
/// Supports 2 or 3 subsystems.
pub fn oracle_pt(dims: &[usize], flags: &[bool], rho: &ComplexMatrix) -> ComplexMatrix {
    let mut m = rho.clone();
    match dims.len() {
        2 => {
            if flags[0] {
                m = oracle_pt_left(dims[0], dims[1], &m);
            }
            if flags[1] {
                m = oracle_pt_right(dims[0], dims[1], &m);
            }
        }
        3 => {
            for (s, &flag) in flags.iter().enumerate() {
                if flag {
                    m = oracle_pt_tri([dims[0], dims[1], dims[2]], s, &m);
                }
            }
        }
        n => panic!("oracle supports 2 or 3 subsystems, got {n}"),
    }
    m
}

/// Distance from `x` to the probability simplex, computed by bisection on the
/// dual threshold τ solving `sum max(x_j - τ, 0) = 1` (no sorting).
pub fn oracle_simplex_distance(x: &[f64]) -> f64 {
    let mass = |t: f64| x.iter().map(|v| (v - t).max(0.0)).sum::<f64>();
    let hi0 = x.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let (mut lo, mut hi) = (hi0 - 1.0 - 1.0, hi0);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mass(mid) > 1.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let t = 0.5 * (lo + hi);
    x.iter()
        .map(|v| (v - (v - t).max(0.0)).powi(2))
        .sum::<f64>()
        .sqrt()
}

/// Random mixture of 1..=5 random product states on `da x db`.
pub fn random_separable(da: usize, db: usize, rng: &mut impl Rng) -> DensityMatrix {
    let terms = rng.random_range(1..=5);
    let weights: Vec<f64> = (0..terms).map(|_| rng.random_range(0.05..1.0)).collect();
    let total: f64 = weights.iter().sum();
    let sa = DimensionSpec::new(vec![da]).unwrap();
    let sb = DimensionSpec::new(vec![db]).unwrap();
    let mut m = ComplexMatrix::zeros(da * db);
    for w in weights {
        let a = ptent::states::random_density_with(&sa, rng);
        let b = ptent::states::random_density_with(&sb, rng);
        m = &m + &a.matrix().kron(b.matrix()).scale(w / total);
    }
    DensityMatrix::new(m, DimensionSpec::new(vec![da, db]).unwrap()).unwrap()
}

/// All masks over `nss` subsystems.
pub fn all_masks(nss: usize) -> Vec<Vec<bool>> {
    (0..1usize << nss)
        .map(|bits| (0..nss).map(|s| bits >> s & 1 == 1).collect())
        .collect()
}

/// Smallest w in [lo, hi] where `entangled(w)` turns true, by bisection.
pub fn bisect_threshold(mut lo: f64, mut hi: f64, entangled: impl Fn(f64) -> bool) -> f64 {
    assert!(!entangled(lo) && entangled(hi));
    for _ in 0..60 {
        let mid = 0.5 * (lo + hi);
        if entangled(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    0.5 * (lo + hi)
}
