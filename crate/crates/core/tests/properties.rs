mod common;

use std::f64::consts::SQRT_2;

use proptest::prelude::*;
use ptent::entanglement::{
    hse_cut_point, hse_of, negativity_of, ppt_verdict, simplex_projection_distance, PptVerdict,
};
use ptent::ptranspose::{partial_transpose, transpose};
use ptent::spectra::{eig_hermitian, hs_norm, trace_norm_hermitian};
use ptent::{states, ComplexMatrix, DensityMatrix, DimensionSpec, TransposeMask};

use common::*;

fn small_dims() -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(1usize..=5, 1..=5)
}

/// Bipartite or tripartite specs with total dimension at most 12.
fn state_dims() -> impl Strategy<Value = Vec<usize>> {
    prop::sample::select(vec![
        vec![2, 2],
        vec![2, 3],
        vec![3, 2],
        vec![3, 3],
        vec![2, 2, 2],
        vec![2, 3, 2],
        vec![3, 4],
        vec![2, 2, 3],
    ])
}

fn bipartite_dims() -> impl Strategy<Value = (usize, usize)> {
    (2usize..=3, 2usize..=3)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn index_maps_are_inverse(dims in small_dims()) {
        let spec = DimensionSpec::new(dims).unwrap();
        let mut prev: Option<Vec<usize>> = None;
        for flat in 0..spec.total_dim() {
            let multi = spec.multi_index(flat).unwrap();
            prop_assert_eq!(spec.flat_index(&multi).unwrap(), flat);
            // increasing flat index walks the multi-indices in lexicographic order
            if let Some(p) = &prev {
                prop_assert!(p < &multi);
            }
            prev = Some(multi);
        }
    }

    #[test]
    fn pt_involution_and_composition(dims in state_dims(), seed in any::<u64>(), bits in any::<u8>(), split in any::<u8>()) {
        let spec = DimensionSpec::new(dims.clone()).unwrap();
        let nss = dims.len();
        let m = random_matrix(spec.total_dim(), &mut rng(seed));
        let flags: Vec<bool> = (0..nss).map(|s| bits >> s & 1 == 1).collect();
        let mask = TransposeMask::new(flags.clone());
        let once = partial_transpose(&m, &spec, &mask).unwrap();
        prop_assert_eq!(&partial_transpose(&once, &spec, &mask).unwrap(), &m);

        // split the mask into two disjoint parts and compose
        let first: Vec<bool> = flags.iter().enumerate().map(|(s, &f)| f && split >> s & 1 == 1).collect();
        let second: Vec<bool> = flags.iter().zip(&first).map(|(&f, &a)| f && !a).collect();
        let composed = partial_transpose(
            &partial_transpose(&m, &spec, &TransposeMask::new(first)).unwrap(),
            &spec,
            &TransposeMask::new(second),
        ).unwrap();
        prop_assert_eq!(&composed, &once);
    }

    #[test]
    fn pt_matches_oracle(dims in state_dims(), seed in any::<u64>(), bits in any::<u8>()) {
        let spec = DimensionSpec::new(dims.clone()).unwrap();
        let flags: Vec<bool> = (0..dims.len()).map(|s| bits >> s & 1 == 1).collect();
        let m = random_matrix(spec.total_dim(), &mut rng(seed));
        prop_assert_eq!(
            partial_transpose(&m, &spec, &TransposeMask::new(flags.clone())).unwrap(),
            oracle_pt(&dims, &flags, &m)
        );
    }

    #[test]
    fn full_transpose_keeps_spectrum(d in 1usize..=10, seed in any::<u64>()) {
        let h = random_hermitian(d, &mut rng(seed));
        let a = eig_hermitian(&h).unwrap();
        let b = eig_hermitian(&transpose(&h)).unwrap();
        for (x, y) in a.eigenvalues().iter().zip(b.eigenvalues()) {
            prop_assert!((x - y).abs() <= 1e-10);
        }
    }

    #[test]
    fn hs_norm_is_unitarily_invariant(d in 1usize..=8, seed in any::<u64>()) {
        let mut r = rng(seed);
        let a = random_matrix(d, &mut r);
        let basis = eig_hermitian(&random_hermitian(d, &mut r)).unwrap();
        let u = ComplexMatrix::from_fn(d, |row, col| basis.eigenvectors()[col][row]);
        let rotated = &(&u * &a) * &u.adjoint();
        prop_assert!((hs_norm(&rotated) - hs_norm(&a)).abs() <= 1e-9);
    }

    #[test]
    fn trace_norm_dominates_trace(d in 1usize..=8, seed in any::<u64>(), psd in any::<bool>()) {
        let mut r = rng(seed);
        let h = if psd {
            let g = random_matrix(d, &mut r);
            &g * &g.adjoint()
        } else {
            random_hermitian(d, &mut r)
        };
        let tn = trace_norm_hermitian(&h).unwrap();
        let tr = h.trace().re.abs();
        prop_assert!(tn >= tr - 1e-12);
        let eigs = eig_hermitian(&h).unwrap();
        let definite = eigs.eigenvalues().iter().all(|&x| x >= -1e-12)
            || eigs.eigenvalues().iter().all(|&x| x <= 1e-12);
        prop_assert_eq!((tn - tr).abs() <= 1e-10 * tn.max(1.0), definite);
    }

    #[test]
    fn pt_spectrum_sums_to_one(dims in state_dims(), seed in any::<u64>(), bits in any::<u8>()) {
        let spec = DimensionSpec::new(dims.clone()).unwrap();
        let rho = states::random_density(&spec, seed);
        let mask = TransposeMask::new((0..dims.len()).map(|s| bits >> s & 1 == 1).collect());
        let pt = partial_transpose(rho.matrix(), &spec, &mask).unwrap();
        let sum: f64 = eig_hermitian(&pt).unwrap().eigenvalues().iter().sum();
        prop_assert!((sum - 1.0).abs() <= 1e-10);
    }

    #[test]
    fn negativity_zero_iff_ppt((da, db) in bipartite_dims(), seed in any::<u64>(), which in 0usize..2) {
        let spec = DimensionSpec::new(vec![da, db]).unwrap();
        let rho = states::random_density(&spec, seed);
        let mask = TransposeMask::single(2, which);
        let en = negativity_of(&rho, &mask).unwrap();
        prop_assert!(en >= 0.0);
        let verdict = ppt_verdict(&rho, &mask).unwrap().verdict;
        prop_assert_eq!(en == 0.0, verdict == PptVerdict::Ppt);
    }

    #[test]
    fn css_distance_identity_and_mixture_trace((da, db) in bipartite_dims(), seed in any::<u64>(), which in 0usize..2) {
        let spec = DimensionSpec::new(vec![da, db]).unwrap();
        let rho = states::random_density(&spec, seed);
        let r = hse_of(&rho, &TransposeMask::single(2, which), true).unwrap();
        let css = r.css.as_ref().unwrap();
        prop_assert!((hs_norm(&(rho.matrix() - css.matrix())) - r.e_hs).abs() <= 1e-9);
        if let Some(t) = r.xi_mixture_trace {
            prop_assert!((t - 1.0).abs() <= 1e-9);
        }
        prop_assert!(r.e_hs >= r.oracle_lower_bound - 1e-9);
        prop_assert_eq!(r.e_hs == 0.0, r.classification.d_minus() == 0);
        let counts = r.classification.d_plus() + r.classification.d_minus() + r.classification.d_zero();
        prop_assert_eq!(counts, da * db);
        prop_assert!((r.classification.positive_sum() - r.classification.negative_abs_sum() - 1.0).abs() <= 1e-9);
    }

    #[test]
    fn simplex_projection_matches_bisection_oracle(raw in prop::collection::vec(-1.0f64..1.0, 1..12)) {
        // shift to sum 1
        let shift = (1.0 - raw.iter().sum::<f64>()) / raw.len() as f64;
        let x: Vec<f64> = raw.iter().map(|v| v + shift).collect();
        let (dist, proj) = simplex_projection_distance(&x);
        prop_assert!((dist - oracle_simplex_distance(&x)).abs() <= 1e-9);
        prop_assert!(proj.iter().all(|&p| p >= 0.0));
        prop_assert!((proj.iter().sum::<f64>() - 1.0).abs() <= 1e-12);
    }

    #[test]
    fn cut_point_bounds(raw in prop::collection::vec(0.01f64..1.0, 1..10)) {
        let mut pos = raw;
        pos.sort_by(|a, b| b.total_cmp(a));
        let c = hse_cut_point(&pos).unwrap();
        let total: f64 = pos.iter().sum();
        if c.no_cut {
            prop_assert!(total <= 1.0 + 1e-9);
            prop_assert_eq!(c.d_plus_prime, pos.len() + 1);
        } else {
            let k = c.d_plus_prime - 1;
            let before: f64 = pos[..k].iter().sum();
            prop_assert!(before <= 1.0 + 1e-12);
            prop_assert!(before + pos[k] > 1.0);
            prop_assert!(c.xi >= 0.0 && c.xi <= pos[k]);
        }
    }
}

#[test]
fn npt_states_have_positive_hse() {
    let mut checked = 0;
    for (da, db) in [(2, 2), (2, 3), (3, 2)] {
        let spec = DimensionSpec::new(vec![da, db]).unwrap();
        for seed in 0..200 {
            let rho = states::random_density(&spec, 5000 + seed);
            let mask = TransposeMask::single(2, 1);
            if negativity_of(&rho, &mask).unwrap() > 0.0 {
                assert!(hse_of(&rho, &mask, false).unwrap().e_hs > 0.0);
                checked += 1;
            }
        }
    }
    assert!(checked > 100);
}

#[test]
fn rana_bound_on_two_qubits() {
    let spec = DimensionSpec::new(vec![2, 2]).unwrap();
    for seed in 0..1000 {
        let rho = states::random_density(&spec, seed);
        let pt = partial_transpose(rho.matrix(), &spec, &TransposeMask::single(2, 1)).unwrap();
        for &x in eig_hermitian(&pt).unwrap().eigenvalues() {
            assert!((-0.5 - 1e-9..=1.0 + 1e-9).contains(&x), "seed {seed}: {x}");
        }
    }
}

#[test]
fn werner_two_qubit_hse_is_linear() {
    for i in 4..=10 {
        let w = i as f64 / 10.0;
        let rho = states::werner(2, w).unwrap();
        let r = hse_of(&rho, &TransposeMask::single(2, 0), false).unwrap();
        assert!(
            (r.e_hs - SQRT_2 * (3.0 * w - 1.0) / 4.0).abs() <= 1e-9,
            "w={w}"
        );
    }
}

#[test]
fn three_qubit_werner_threshold_for_each_qubit() {
    for which in 0..3 {
        let t = bisect_threshold(0.0, 1.0, |w| {
            let rho = states::werner(3, w).unwrap();
            ppt_verdict(&rho, &TransposeMask::single(3, which))
                .unwrap()
                .verdict
                == PptVerdict::NptEntangled
        });
        assert!((t - 0.2).abs() <= 1e-6, "qubit {which}: {t}");
    }
}

#[test]
fn generators_pass_validation() {
    for n in 2..=4 {
        assert!(ptent::validate_density(&states::ghz(n).unwrap(), true)
            .unwrap()
            .is_valid());
    }
    let mut r = rng(3);
    for _ in 0..50 {
        let rho: DensityMatrix = random_separable(2, 3, &mut r);
        assert!(ptent::validate_density(&rho, true).unwrap().is_valid());
    }
}
