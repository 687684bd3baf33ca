//! Finite-difference slope checks of the exact GDoF formulas against
//! log-det evaluations on random channels.
//!
//! Every slope is taken between two SNR values on the same channel draw, so
//! the channel-dependent constant terms cancel.

use gdof_core::rational::to_f64;
use gdof_core::region::{bound_rhs, Bound7Form};
use gdof_core::{f_mac, g_mac, AntennaConfig, ExponentProfile, Rational, WeightedTerm};
use serde::Serialize;

use crate::channel::{gaussian_matrix, log2_det_identity_plus_factors, rng_from_seed, sample_channel, CMatrix, C64};
use crate::error::{GdofError, Result};
use crate::scheme::{outer_bound_values, SnrPoint};

pub const DEFAULT_TOLERANCE: f64 = 0.05;
pub const DEFAULT_RHO: (f64, f64) = (1e6, 1e9);
pub const DEFAULT_TRIALS: usize = 5;

/// `(e(hi) - e(lo)) / (log2 hi - log2 lo)`.
pub fn slope_estimate<F>(evaluator: F, rho_lo: f64, rho_hi: f64) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
{
    if !(rho_lo > 1.0 && rho_hi > rho_lo && rho_hi.is_finite()) {
        return Err(GdofError::InvalidRhoPair(rho_lo, rho_hi));
    }
    let lo = evaluator(rho_lo)?;
    let hi = evaluator(rho_hi)?;
    if !(lo.is_finite() && hi.is_finite()) {
        return Err(GdofError::NonFiniteEvaluation);
    }
    Ok((hi - lo) / (rho_hi.log2() - rho_lo.log2()))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerifyOptions {
    pub trials: usize,
    pub seed: u64,
    pub rho_lo: f64,
    pub rho_hi: f64,
    pub tolerance: f64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            trials: DEFAULT_TRIALS,
            seed: 0,
            rho_lo: DEFAULT_RHO.0,
            rho_hi: DEFAULT_RHO.1,
            tolerance: DEFAULT_TOLERANCE,
        }
    }
}

impl VerifyOptions {
    fn trial_seed(&self, trial: usize) -> u64 {
        self.seed ^ trial as u64
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SlopeReport {
    pub label: String,
    #[serde(serialize_with = "crate::io::serialize_rational")]
    pub predicted: Rational,
    pub estimated: f64,
    pub rho_pair: (f64, f64),
    pub abs_error: f64,
    pub pass: bool,
}

impl SlopeReport {
    pub fn new(label: String, predicted: Rational, estimated: f64, opts: &VerifyOptions) -> Self {
        let abs_error = (estimated - to_f64(&predicted)).abs();
        Self {
            label,
            predicted,
            estimated,
            rho_pair: (opts.rho_lo, opts.rho_hi),
            abs_error,
            pass: abs_error <= opts.tolerance,
        }
    }
}

/// `log2 det(I_u + sum_i rho^a_i H_i H_i^H)` with fresh Gaussian `H_i`.
fn mac_slope(u: u32, terms: &[&WeightedTerm], seed: u64, opts: &VerifyOptions) -> Result<f64> {
    let mut rng = rng_from_seed(seed);
    let blocks: Vec<(f64, CMatrix)> = terms
        .iter()
        .map(|t| (to_f64(&t.exponent), gaussian_matrix(u as usize, t.width as usize, &mut rng)))
        .collect();
    slope_estimate(
        |rho| {
            let factors: Vec<CMatrix> = blocks
                .iter()
                .map(|(a, h)| h * C64::new(rho.powf(*a).sqrt(), 0.0))
                .collect();
            log2_det_identity_plus_factors(&factors)
        },
        opts.rho_lo,
        opts.rho_hi,
    )
}

fn mac_reports(u: u32, terms: &[&WeightedTerm], predicted: Rational, label: &str, opts: &VerifyOptions) -> Result<Vec<SlopeReport>> {
    (0..opts.trials)
        .map(|t| {
            let est = mac_slope(u, terms, opts.trial_seed(t), opts)?;
            Ok(SlopeReport::new(format!("{label} trial {t}"), predicted.clone(), est, opts))
        })
        .collect()
}

/// One report per trial for the two-block MAC slope.
pub fn verify_f_approx(u: u32, t1: &WeightedTerm, t2: &WeightedTerm, opts: &VerifyOptions) -> Result<Vec<SlopeReport>> {
    mac_reports(u, &[t1, t2], f_mac(u, t1, t2), "f", opts)
}

/// One report per trial for the three-block MAC slope.
pub fn verify_g_approx(
    u: u32,
    t1: &WeightedTerm,
    t2: &WeightedTerm,
    t3: &WeightedTerm,
    opts: &VerifyOptions,
) -> Result<Vec<SlopeReport>> {
    mac_reports(u, &[t1, t2, t3], g_mac(u, t1, t2, t3), "g", opts)
}

/// Slope predictions of the seven outer bounds per `log rho`. Only the
/// single-user bound of user 2 needs rescaling, since its GDoF is counted
/// per `log rho^a22`.
pub fn theorem1_slopes(cfg: &AntennaConfig, exp: &ExponentProfile, form: Bound7Form) -> [Rational; 7] {
    let mut rhs = bound_rhs(cfg, exp, form);
    rhs[1] = &rhs[1] * exp.a22();
    rhs
}

pub fn median(values: &mut [f64]) -> f64 {
    values.sort_by(f64::total_cmp);
    let n = values.len();
    if n == 0 {
        return f64::NAN;
    }
    if n % 2 == 1 {
        values[n / 2]
    } else {
        (values[n / 2 - 1] + values[n / 2]) / 2.0
    }
}

/// Per-trial slopes of all seven outer bounds, `[trial][bound]`.
pub fn theorem1_trial_slopes(cfg: &AntennaConfig, exp: &ExponentProfile, opts: &VerifyOptions) -> Result<Vec<[f64; 7]>> {
    let lo = SnrPoint::new(opts.rho_lo)?;
    let hi = SnrPoint::new(opts.rho_hi)?;
    if opts.rho_hi <= opts.rho_lo {
        return Err(GdofError::InvalidRhoPair(opts.rho_lo, opts.rho_hi));
    }
    let dlog = opts.rho_hi.log2() - opts.rho_lo.log2();
    (0..opts.trials)
        .map(|t| {
            let ch = sample_channel(cfg, opts.trial_seed(t));
            let a = outer_bound_values(&ch, exp, lo)?;
            let b = outer_bound_values(&ch, exp, hi)?;
            Ok(std::array::from_fn(|k| (b.values[k] - a.values[k]) / dlog))
        })
        .collect()
}

/// One report per bound; the estimate is the median slope over trials.
pub fn verify_theorem1(
    cfg: &AntennaConfig,
    exp: &ExponentProfile,
    opts: &VerifyOptions,
    form: Bound7Form,
) -> Result<Vec<SlopeReport>> {
    let per_trial = theorem1_trial_slopes(cfg, exp, opts)?;
    let predicted = theorem1_slopes(cfg, exp, form);
    Ok(predicted
        .into_iter()
        .enumerate()
        .map(|(k, p)| {
            let mut col: Vec<f64> = per_trial.iter().map(|s| s[k]).collect();
            SlopeReport::new(format!("bound {}", k + 1), p, median(&mut col), opts)
        })
        .collect())
}
