//! Han-Kobayashi power split and the finite-SNR rate bounds it is scored
//! against.
//!
//! Each user sends a private message whose covariance
//! `K_iu = (1/M_i) (I + rho^a_ij H_ij^H H_ij)^-1` reaches the other receiver
//! at or below the noise floor, and a public message carrying the rest of
//! the power, `K_iw = I/M_i - K_iu`.

use gdof_core::rational::to_f64;
use gdof_core::{AntennaConfig, ExponentProfile, Rational};

use crate::channel::{hermitian_part, log2_det_identity_plus_factors, sorted_eigen_psd, CMatrix, ChannelInstance, C64};
use crate::error::{GdofError, Result};

/// Nominal SNR `rho > 1`; link `ij` is received at `rho^a_ij`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SnrPoint {
    rho: f64,
}

impl SnrPoint {
    pub fn new(rho: f64) -> Result<Self> {
        if !rho.is_finite() || rho <= 1.0 {
            return Err(GdofError::InvalidSnr(rho));
        }
        Ok(Self { rho })
    }

    pub fn rho(&self) -> f64 {
        self.rho
    }

    pub fn level(&self, exponent: &Rational) -> f64 {
        self.rho.powf(to_f64(exponent))
    }

    pub fn rho_ij(&self, exp: &ExponentProfile, i: usize, j: usize) -> f64 {
        self.level(exp.get(i, j))
    }
}

/// Private (`k_u`) and public (`k_w`) transmit covariances of one user.
#[derive(Debug, Clone, PartialEq)]
pub struct CovariancePair {
    pub k_u: CMatrix,
    pub k_w: CMatrix,
}

/// Eigen-directions of `H_ij^H H_ij` (strongest first) and the per-direction
/// powers of the private and public streams.
#[derive(Debug, Clone, PartialEq)]
pub struct BeamDecomposition {
    /// Columns are the orthonormal directions `U_ij^[k]`.
    pub directions: CMatrix,
    /// `1/r_k` on the first `m_ij` directions, `1/M_i` on the null space.
    pub private_powers: Vec<f64>,
    /// `1/M_i - 1/r_k`, one per non-null direction.
    pub public_powers: Vec<f64>,
    /// Nonzero singular values of `H_ij`.
    pub singular_values: Vec<f64>,
    /// `r_k = M_i (1 + rho^a_ij lambda_k)`.
    pub r_values: Vec<f64>,
}

impl BeamDecomposition {
    pub fn direction(&self, k: usize) -> CMatrix {
        CMatrix::from_column_slice(self.directions.nrows(), 1, self.directions.column(k).as_slice())
    }

    fn weighted_sum(&self, powers: &[f64]) -> CMatrix {
        let n = self.directions.nrows();
        let mut out = CMatrix::zeros(n, n);
        for (k, p) in powers.iter().enumerate() {
            let u = self.direction(k);
            out += &u * u.adjoint() * C64::new(*p, 0.0);
        }
        hermitian_part(&out)
    }

    /// `sum_k private_powers[k] u_k u_k^H`.
    pub fn private_covariance(&self) -> CMatrix {
        self.weighted_sum(&self.private_powers)
    }

    /// Hermitian square root of [`Self::private_covariance`].
    pub fn private_covariance_sqrt(&self) -> CMatrix {
        let roots: Vec<f64> = self.private_powers.iter().map(|p| p.sqrt()).collect();
        self.weighted_sum(&roots)
    }

    /// `sum_k public_powers[k] u_k u_k^H`.
    pub fn public_covariance(&self) -> CMatrix {
        self.weighted_sum(&self.public_powers)
    }
}

fn other(user: usize) -> usize {
    if user == 1 {
        2
    } else {
        1
    }
}

/// Beams of `user` (1 or 2), shaped by its cross link toward the other
/// receiver.
pub fn beam_decomposition(
    ch: &ChannelInstance,
    exp: &ExponentProfile,
    snr: SnrPoint,
    user: usize,
) -> BeamDecomposition {
    let j = other(user);
    let h = ch.h(user, j);
    let m = ch.cfg.tx(user) as f64;
    let rank = ch.cfg.rank(user, j) as usize;
    let level = snr.rho_ij(exp, user, j);
    let (lambda, directions) = sorted_eigen_psd(&(h.adjoint() * h));
    let r_values: Vec<f64> = lambda[..rank].iter().map(|l| m * (1.0 + level * l)).collect();
    let mut private_powers: Vec<f64> = r_values.iter().map(|r| 1.0 / r).collect();
    private_powers.resize(lambda.len(), 1.0 / m);
    let public_powers = r_values.iter().map(|r| 1.0 / m - 1.0 / r).collect();
    BeamDecomposition {
        directions,
        private_powers,
        public_powers,
        singular_values: lambda[..rank].iter().map(|l| l.sqrt()).collect(),
        r_values,
    }
}

/// Covariances of users 1 and 2.
pub fn hk_covariances(
    ch: &ChannelInstance,
    exp: &ExponentProfile,
    snr: SnrPoint,
) -> (CovariancePair, CovariancePair) {
    let pair = |user: usize| {
        let m = ch.cfg.tx(user) as usize;
        let beams = beam_decomposition(ch, exp, snr, user);
        let k_u = beams.private_covariance();
        let k_w = hermitian_part(&(CMatrix::identity(m, m) * C64::new(1.0 / m as f64, 0.0) - &k_u));
        CovariancePair { k_u, k_w }
    };
    (pair(1), pair(2))
}

/// Per-bit gap constants subtracted from the outer bounds to get the
/// achievable ones.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GapConstants {
    pub n1: f64,
    pub n2: f64,
}

impl GapConstants {
    pub fn zero() -> Self {
        Self { n1: 0.0, n2: 0.0 }
    }

    /// `n_i = N_i log2(max(M1, M2))`.
    pub fn for_config(cfg: &AntennaConfig) -> Self {
        let l = (cfg.m1().max(cfg.m2()) as f64).log2();
        Self {
            n1: cfg.n1() as f64 * l,
            n2: cfg.n2() as f64 * l,
        }
    }

    /// Amount removed from each of the seven bounds.
    pub fn multiples(&self) -> [f64; 7] {
        let (a, b) = (self.n1, self.n2);
        [a, b, a + b, a + b, a + b, 2.0 * a + b, a + 2.0 * b]
    }
}

/// The seven rate bounds in bits: `R1`, `R2`, three on `R1 + R2`,
/// `2R1 + R2`, `R1 + 2R2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundValues {
    pub values: [f64; 7],
    pub gaps: GapConstants,
}

impl BoundValues {
    /// Bound `k`, counted from 1.
    pub fn i_b(&self, k: usize) -> f64 {
        self.values[k - 1]
    }
}

fn scaled(h: &CMatrix, level: f64) -> CMatrix {
    h * C64::new(level.sqrt(), 0.0)
}

/// Outer-bound right-hand sides with `K_i = M_i K_iu`.
///
/// Every log-det is evaluated from its square-root factors so the result
/// stays accurate when `rho^a` approaches `1e18`.
pub fn outer_bound_values(ch: &ChannelInstance, exp: &ExponentProfile, snr: SnrPoint) -> Result<BoundValues> {
    let root = |user: usize| {
        let m = ch.cfg.tx(user) as f64;
        beam_decomposition(ch, exp, snr, user).private_covariance_sqrt() * C64::new(m.sqrt(), 0.0)
    };
    let (s1, s2) = (root(1), root(2));
    let r = |i, j| snr.rho_ij(exp, i, j);
    let ld = log2_det_identity_plus_factors;

    let d11 = scaled(&ch.h11, r(1, 1));
    let d22 = scaled(&ch.h22, r(2, 2));
    let c12 = scaled(&ch.h12, r(1, 2));
    let c21 = scaled(&ch.h21, r(2, 1));
    let p11 = &d11 * &s1;
    let p22 = &d22 * &s2;

    let single1 = ld(std::slice::from_ref(&d11))?;
    let single2 = ld(std::slice::from_ref(&d22))?;
    let rx2_all = ld(&[c12.clone(), d22])?;
    let rx1_all = ld(&[c21.clone(), d11])?;
    let rx1_private = ld(std::slice::from_ref(&p11))?;
    let rx2_private = ld(std::slice::from_ref(&p22))?;
    let rx1_mixed = ld(&[c21, p11])?;
    let rx2_mixed = ld(&[c12, p22])?;

    let values = [
        single1,
        single2,
        rx2_all + rx1_private,
        rx1_all + rx2_private,
        rx1_mixed + rx2_mixed,
        rx1_all + rx1_private + rx2_mixed,
        rx2_all + rx2_private + rx1_mixed,
    ];
    if let Some(k) = values.iter().position(|v| !v.is_finite()) {
        return Err(GdofError::NonFinite(k + 1));
    }
    Ok(BoundValues {
        values,
        gaps: GapConstants::zero(),
    })
}

/// Achievable right-hand sides: the outer bounds less their gap multiples,
/// floored at zero.
pub fn achievable_bound_values(
    ch: &ChannelInstance,
    exp: &ExponentProfile,
    snr: SnrPoint,
    gaps: GapConstants,
) -> Result<BoundValues> {
    if !(gaps.n1 >= 0.0 && gaps.n2 >= 0.0) {
        return Err(GdofError::Invalid("gap constants must be nonnegative".into()));
    }
    let outer = outer_bound_values(ch, exp, snr)?;
    let mut values = outer.values;
    for (v, g) in values.iter_mut().zip(gaps.multiples()) {
        *v = (*v - g).max(0.0);
    }
    Ok(BoundValues { values, gaps })
}

/// Rates of both users when each receiver treats interference as noise, on a
/// symmetric `(M, N, M, N)` channel with cross exponent `alpha`.
pub fn tin_rates(ch: &ChannelInstance, alpha: &Rational, snr: SnrPoint) -> Result<(f64, f64)> {
    let c = ch.cfg;
    if c.m1() != c.m2() || c.n1() != c.n2() {
        return Err(GdofError::NotSymmetric);
    }
    let cross = snr.level(alpha);
    let rho = snr.rho();
    let rate = |direct: &CMatrix, interf: &CMatrix| -> Result<f64> {
        let noise = scaled(interf, cross);
        let ld = log2_det_identity_plus_factors;
        Ok(ld(&[noise.clone(), scaled(direct, rho)])? - ld(&[noise])?)
    };
    let r1 = rate(&ch.h11, &ch.h21)?;
    let r2 = rate(&ch.h22, &ch.h12)?;
    if !(r1.is_finite() && r2.is_finite()) {
        return Err(GdofError::NonFiniteEvaluation);
    }
    Ok((r1, r2))
}
