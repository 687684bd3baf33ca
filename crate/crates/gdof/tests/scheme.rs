use gdof::channel::{rng_from_seed, sample_channel, sorted_eigen_psd, CMatrix, C64};
use gdof::scheme::{
    achievable_bound_values, beam_decomposition, hk_covariances, outer_bound_values, tin_rates, GapConstants,
    SnrPoint,
};
use gdof::verify::{median, theorem1_slopes, theorem1_trial_slopes, VerifyOptions};
use gdof_core::rational::to_f64;
use gdof_core::region::{bound_rhs, Bound7Form};
use gdof_core::{rat, tin_gdof, AntennaConfig, ExponentProfile};
use proptest::prelude::*;
use rand::Rng;

fn example1() -> (AntennaConfig, ExponentProfile) {
    (
        AntennaConfig::new(3, 3, 2, 2).unwrap(),
        ExponentProfile::symmetric(rat(3, 5)).unwrap(),
    )
}

fn slope(lo: f64, hi: f64) -> f64 {
    1.0 / (1e9f64.log2() - 1e6f64.log2()) * (hi - lo)
}

#[test]
fn power_noise_floor_and_null_space_over_100_draws() {
    let (cfg, exp) = example1();
    let snr = SnrPoint::new(1e6).unwrap();
    for seed in 0..100 {
        let ch = sample_channel(&cfg, seed);
        let (c1, c2) = hk_covariances(&ch, &exp, snr);
        for (user, c) in [(1, &c1), (2, &c2)] {
            let tr = (c.k_u.trace() + c.k_w.trace()).re;
            assert!((tr - 1.0).abs() <= 1e-12, "seed {seed} user {user}: trace {tr}");
            let j = 3 - user;
            let h = ch.h(user, j);
            let received = h * &c.k_u * h.adjoint() * C64::new(snr.rho_ij(&exp, user, j), 0.0);
            let top = sorted_eigen_psd(&received).0[0];
            assert!(top <= 1.0 / cfg.tx(user) as f64 + 1e-12, "seed {seed} user {user}: {top}");
        }
        let beams = beam_decomposition(&ch, &exp, snr, 1);
        assert_eq!(beams.directions.ncols() - beams.r_values.len(), 1);
        let leak = (ch.h12.clone() * beams.direction(2)).norm();
        assert!(leak <= 1e-9, "seed {seed}: {leak}");
        let rebuilt = beams.private_covariance() + beams.public_covariance();
        let scaled_identity = CMatrix::identity(3, 3) * C64::new(1.0 / 3.0, 0.0);
        assert!((rebuilt - scaled_identity).norm() <= 1e-10);
    }
}

#[test]
fn no_null_space_when_tx_fits_rx() {
    let cfg = AntennaConfig::new(2, 3, 2, 3).unwrap();
    let exp = ExponentProfile::symmetric(rat(1, 2)).unwrap();
    let ch = sample_channel(&cfg, 4);
    let beams = beam_decomposition(&ch, &exp, SnrPoint::new(1e6).unwrap(), 1);
    assert_eq!(beams.r_values.len(), beams.directions.ncols());
}

#[test]
fn private_covariance_eigenvalues_near_unit_snr() {
    let cfg = AntennaConfig::new(3, 3, 2, 2).unwrap();
    let exp = ExponentProfile::new(rat(1, 1), rat(0, 1), rat(1, 1), rat(1, 1)).unwrap();
    let ch = sample_channel(&cfg, 12);
    let (c1, _) = hk_covariances(&ch, &exp, SnrPoint::new(1.0 + 1e-12).unwrap());
    let (lambda, _) = sorted_eigen_psd(&(ch.h12.adjoint() * &ch.h12));
    let mut expected: Vec<f64> = lambda.iter().map(|l| 1.0 / (3.0 * (1.0 + l))).collect();
    expected.sort_by(f64::total_cmp);
    let mut got = sorted_eigen_psd(&c1.k_u).0;
    got.sort_by(f64::total_cmp);
    for (g, e) in got.iter().zip(&expected) {
        assert!((g - e).abs() < 1e-9, "{got:?} vs {expected:?}");
    }
}

#[test]
fn sampled_entries_have_unit_power() {
    let cfg = AntennaConfig::new(1, 1, 1, 1).unwrap();
    let mean: f64 = (0..1000u64).map(|s| sample_channel(&cfg, s).h11[(0, 0)].norm_sqr()).sum::<f64>() / 1000.0;
    assert!((mean - 1.0).abs() < 0.1, "{mean}");
}

#[test]
fn bound3_slope_matches_exact_rhs() {
    let (cfg, exp) = example1();
    let predicted = to_f64(&bound_rhs(&cfg, &exp, Bound7Form::Derived)[2]);
    assert_eq!(predicted, 3.8);
    let mut slopes: Vec<f64> = (0..5)
        .map(|seed| {
            let ch = sample_channel(&cfg, seed);
            let lo = outer_bound_values(&ch, &exp, SnrPoint::new(1e6).unwrap()).unwrap();
            let hi = outer_bound_values(&ch, &exp, SnrPoint::new(1e9).unwrap()).unwrap();
            slope(lo.i_b(3), hi.i_b(3))
        })
        .collect();
    let m = median(&mut slopes);
    assert!((m - predicted).abs() <= 0.05, "{m}");
}

#[test]
fn single_user_slope_over_random_configs() {
    let mut rng = rng_from_seed(2024);
    for trial in 0..10u64 {
        let c: Vec<u32> = (0..4).map(|_| rng.random_range(1..=4)).collect();
        let cfg = AntennaConfig::new(c[0], c[1], c[2], c[3]).unwrap();
        let a = |rng: &mut rand_chacha::ChaCha8Rng| rat(rng.random_range(0..=8), 4);
        let exp = ExponentProfile::new(rat(1, 1), a(&mut rng), a(&mut rng), a(&mut rng)).unwrap();
        let ch = sample_channel(&cfg, trial);
        let lo = outer_bound_values(&ch, &exp, SnrPoint::new(1e6).unwrap()).unwrap();
        let hi = outer_bound_values(&ch, &exp, SnrPoint::new(1e9).unwrap()).unwrap();
        let s = slope(lo.i_b(1), hi.i_b(1));
        let want = c[0].min(c[1]) as f64;
        assert!((s - want).abs() <= 0.05, "{c:?}: {s}");
    }
}

#[test]
fn gaps_shift_values_but_not_slopes() {
    let (cfg, exp) = example1();
    let ch = sample_channel(&cfg, 1);
    let (lo, hi) = (SnrPoint::new(1e6).unwrap(), SnrPoint::new(1e9).unwrap());
    let outer_lo = outer_bound_values(&ch, &exp, lo).unwrap();
    let outer_hi = outer_bound_values(&ch, &exp, hi).unwrap();
    assert_eq!(achievable_bound_values(&ch, &exp, lo, GapConstants::zero()).unwrap().values, outer_lo.values);
    let three = GapConstants { n1: 3.0, n2: 3.0 };
    let shifted = achievable_bound_values(&ch, &exp, lo, three).unwrap();
    for (k, m) in three.multiples().iter().enumerate() {
        assert!((outer_lo.values[k] - shifted.values[k] - m).abs() < 1e-9);
    }
    for gaps in [GapConstants::for_config(&cfg), GapConstants { n1: 0.5, n2: 4.25 }] {
        let a = achievable_bound_values(&ch, &exp, lo, gaps).unwrap();
        let b = achievable_bound_values(&ch, &exp, hi, gaps).unwrap();
        for k in 0..7 {
            let outer = slope(outer_lo.values[k], outer_hi.values[k]);
            assert!((slope(a.values[k], b.values[k]) - outer).abs() < 1e-9, "bound {}", k + 1);
        }
    }
    assert!(achievable_bound_values(&ch, &exp, lo, GapConstants { n1: -1.0, n2: 0.0 }).is_err());
}

#[test]
fn tin_slope_matches_tin_gdof() {
    let cfg = AntennaConfig::new(3, 2, 3, 2).unwrap();
    let alpha = rat(2, 5);
    let predicted = to_f64(&tin_gdof(3, 2, &alpha));
    assert!((predicted - 1.2).abs() < 1e-15);
    let mut slopes: Vec<f64> = (0..5)
        .map(|seed| {
            let ch = sample_channel(&cfg, seed);
            let lo = tin_rates(&ch, &alpha, SnrPoint::new(1e6).unwrap()).unwrap();
            let hi = tin_rates(&ch, &alpha, SnrPoint::new(1e9).unwrap()).unwrap();
            slope(lo.0, hi.0)
        })
        .collect();
    let m = median(&mut slopes);
    assert!((m - predicted).abs() <= 0.05, "{slopes:?}");
}

#[test]
fn tin_without_interference_is_single_user() {
    let cfg = AntennaConfig::new(2, 2, 2, 2).unwrap();
    let mut ch = sample_channel(&cfg, 3);
    ch.h21 = CMatrix::zeros(2, 2);
    let snr = SnrPoint::new(1e3).unwrap();
    let (r1, _) = tin_rates(&ch, &rat(1, 2), snr).unwrap();
    let exp = ExponentProfile::symmetric(rat(1, 2)).unwrap();
    let single = outer_bound_values(&ch, &exp, snr).unwrap().i_b(1);
    assert!((r1 - single).abs() < 1e-9);
    let asym = sample_channel(&AntennaConfig::new(3, 2, 2, 2).unwrap(), 0);
    assert!(tin_rates(&asym, &rat(1, 2), snr).is_err());
}

#[test]
fn median_error_does_not_grow_with_rho_hi() {
    let (cfg, exp) = example1();
    let predicted = theorem1_slopes(&cfg, &exp, Bound7Form::Derived);
    let errors = |rho_hi: f64| -> Vec<f64> {
        let opts = VerifyOptions { rho_hi, ..Default::default() };
        let per_trial = theorem1_trial_slopes(&cfg, &exp, &opts).unwrap();
        (0..7)
            .map(|k| {
                let mut col: Vec<f64> = per_trial.iter().map(|s| (s[k] - to_f64(&predicted[k])).abs()).collect();
                median(&mut col)
            })
            .collect()
    };
    let (near, far) = (errors(1e9), errors(1e12));
    for k in 0..7 {
        assert!(far[k] <= near[k] + 1e-6, "bound {}: {} -> {}", k + 1, near[k], far[k]);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn achievable_never_exceeds_outer(seed in 0u64..1000, n1 in 0.0f64..20.0, n2 in 0.0f64..20.0, e in 0i64..6) {
        let cfg = AntennaConfig::new(2, 3, 3, 2).unwrap();
        let exp = ExponentProfile::symmetric(rat(e, 4)).unwrap();
        let ch = sample_channel(&cfg, seed);
        let snr = SnrPoint::new(1e4).unwrap();
        let outer = outer_bound_values(&ch, &exp, snr).unwrap();
        let inner = achievable_bound_values(&ch, &exp, snr, GapConstants { n1, n2 }).unwrap();
        for k in 0..7 {
            prop_assert!(inner.values[k] <= outer.values[k]);
            prop_assert!(inner.values[k] >= 0.0);
        }
    }
}
