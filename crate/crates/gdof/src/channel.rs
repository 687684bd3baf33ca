//! Random channel realizations and the small dense linear algebra used to
//! evaluate log-det rate expressions on them.

use gdof_core::AntennaConfig;
use nalgebra::{Complex, DMatrix};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::error::{GdofError, Result};

pub type C64 = Complex<f64>;
pub type CMatrix = DMatrix<C64>;

/// Singular values at or below this count as zero for rank checks.
pub const RANK_THRESHOLD: f64 = 1e-9;

/// Unit-variance circularly symmetric complex Gaussian matrix.
pub fn gaussian_matrix<R: Rng + ?Sized>(rows: usize, cols: usize, rng: &mut R) -> CMatrix {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    CMatrix::from_fn(rows, cols, |_, _| {
        let re: f64 = rng.sample(StandardNormal);
        let im: f64 = rng.sample(StandardNormal);
        C64::new(re * s, im * s)
    })
}

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn is_full_rank(m: &CMatrix) -> bool {
    if m.is_empty() {
        return true;
    }
    let sv = m.clone().singular_values();
    sv.len() == m.nrows().min(m.ncols()) && sv.iter().all(|s| *s > RANK_THRESHOLD)
}

/// The four channel matrices of one interference-channel realization.
///
/// `h_ij` maps Tx i to Rx j, so it is `N_j x M_i`.
#[derive(Debug, Clone, PartialEq)]
pub struct ChannelInstance {
    pub cfg: AntennaConfig,
    pub h11: CMatrix,
    pub h12: CMatrix,
    pub h21: CMatrix,
    pub h22: CMatrix,
    /// Seed that produced these matrices.
    pub seed: u64,
}

impl ChannelInstance {
    /// Wraps explicit matrices after checking their shapes. No rank check.
    pub fn from_matrices(
        cfg: AntennaConfig,
        h11: CMatrix,
        h12: CMatrix,
        h21: CMatrix,
        h22: CMatrix,
    ) -> Result<Self> {
        let shape = |i: usize, j: usize| (cfg.rx(j) as usize, cfg.tx(i) as usize);
        for (name, m, (r, c)) in [
            ("h11", &h11, shape(1, 1)),
            ("h12", &h12, shape(1, 2)),
            ("h21", &h21, shape(2, 1)),
            ("h22", &h22, shape(2, 2)),
        ] {
            if m.shape() != (r, c) {
                return Err(GdofError::Shape {
                    name,
                    expected: (r, c),
                    found: m.shape(),
                });
            }
        }
        Ok(Self {
            cfg,
            h11,
            h12,
            h21,
            h22,
            seed: 0,
        })
    }

    /// Link from Tx i to Rx j.
    pub fn h(&self, i: usize, j: usize) -> &CMatrix {
        match (i, j) {
            (1, 1) => &self.h11,
            (1, 2) => &self.h12,
            (2, 1) => &self.h21,
            _ => &self.h22,
        }
    }

    fn all_full_rank(&self) -> bool {
        [&self.h11, &self.h12, &self.h21, &self.h22]
            .into_iter()
            .all(is_full_rank)
    }
}

fn draw(cfg: &AntennaConfig, seed: u64) -> ChannelInstance {
    let mut rng = rng_from_seed(seed);
    let dims = |i: usize, j: usize| (cfg.rx(j) as usize, cfg.tx(i) as usize);
    let mut next = |(r, c): (usize, usize)| gaussian_matrix(r, c, &mut rng);
    let h11 = next(dims(1, 1));
    let h12 = next(dims(1, 2));
    let h21 = next(dims(2, 1));
    let h22 = next(dims(2, 2));
    ChannelInstance {
        cfg: *cfg,
        h11,
        h12,
        h21,
        h22,
        seed,
    }
}

/// I.i.d. unit-variance complex Gaussian channel, deterministic in `seed`.
///
/// A rank-deficient draw (probability zero) is replaced by the draw for the
/// next seed, with a warning.
pub fn sample_channel(cfg: &AntennaConfig, seed: u64) -> ChannelInstance {
    let mut s = seed;
    loop {
        let ch = draw(cfg, s);
        if ch.all_full_rank() {
            return ch;
        }
        log::warn!("channel for seed {s} is rank deficient; resampling");
        s = s.wrapping_add(1);
    }
}

/// `(A + A^H) / 2`.
pub fn hermitian_part(a: &CMatrix) -> CMatrix {
    (a + a.adjoint()) * C64::new(0.5, 0.0)
}

/// `log2 det(I + A)` for Hermitian positive-semidefinite `A`, via Cholesky.
pub fn log2_det_identity_plus(a: &CMatrix) -> Result<f64> {
    let n = a.nrows();
    if n == 0 {
        return Ok(0.0);
    }
    let m = hermitian_part(&(CMatrix::identity(n, n) + a));
    let chol = m.cholesky().ok_or(GdofError::NotPositiveDefinite)?;
    let l = chol.l_dirty();
    Ok((0..n).map(|i| 2.0 * l[(i, i)].re.log2()).sum())
}

/// `log2 det(I + G G^H)` for `G = [g_1 g_2 ..]`, from the singular values
/// of `G`. Preferred over forming the Gram matrix when `G` carries large SNR
/// factors, since the small eigenvalues of `G G^H` would drown in rounding.
pub fn log2_det_identity_plus_factors(blocks: &[CMatrix]) -> Result<f64> {
    let Some(first) = blocks.first() else {
        return Ok(0.0);
    };
    let rows = first.nrows();
    if let Some(b) = blocks.iter().find(|b| b.nrows() != rows) {
        return Err(GdofError::Shape {
            name: "factor",
            expected: (rows, b.ncols()),
            found: b.shape(),
        });
    }
    let cols: usize = blocks.iter().map(|b| b.ncols()).sum();
    if rows == 0 || cols == 0 {
        return Ok(0.0);
    }
    let mut g = CMatrix::zeros(rows, cols);
    let mut at = 0;
    for b in blocks {
        g.view_mut((0, at), b.shape()).copy_from(b);
        at += b.ncols();
    }
    let total: f64 = g.singular_values().iter().map(|s| (s * s).ln_1p()).sum();
    if total.is_finite() {
        Ok(total / std::f64::consts::LN_2)
    } else {
        Err(GdofError::NonFiniteEvaluation)
    }
}

/// Eigenpairs of the Hermitian matrix `a`, eigenvalues in decreasing order
/// and clamped at zero.
pub fn sorted_eigen_psd(a: &CMatrix) -> (Vec<f64>, CMatrix) {
    let eig = hermitian_part(a).symmetric_eigen();
    let n = a.nrows();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&x, &y| eig.eigenvalues[y].total_cmp(&eig.eigenvalues[x]));
    let values = order.iter().map(|&k| eig.eigenvalues[k].max(0.0)).collect();
    let vectors = CMatrix::from_fn(n, n, |r, c| eig.eigenvectors[(r, order[c])]);
    (values, vectors)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sampling_is_deterministic_and_shaped() {
        let cfg = AntennaConfig::new(3, 3, 2, 2).unwrap();
        let a = sample_channel(&cfg, 42);
        let b = sample_channel(&cfg, 42);
        assert_eq!(a, b);
        assert_eq!(a.h12.shape(), (2, 3));
        assert_eq!(a.h21.shape(), (3, 2));
        assert_ne!(a, sample_channel(&cfg, 43));
    }

    #[test]
    fn log_det_of_scalar() {
        let a = CMatrix::from_element(1, 1, C64::new(3.0, 0.0));
        assert!((log2_det_identity_plus(&a).unwrap() - 2.0).abs() < 1e-12);
        let z = CMatrix::zeros(0, 0);
        assert_eq!(log2_det_identity_plus(&z).unwrap(), 0.0);
    }

    #[test]
    fn factor_form_matches_gram_form() {
        let mut rng = rng_from_seed(6);
        let a = gaussian_matrix(3, 2, &mut rng);
        let b = gaussian_matrix(3, 4, &mut rng) * C64::new(10.0, 0.0);
        let gram = &a * a.adjoint() + &b * b.adjoint();
        let direct = log2_det_identity_plus(&gram).unwrap();
        let factored = log2_det_identity_plus_factors(&[a, b]).unwrap();
        assert!((direct - factored).abs() < 1e-10);
        assert_eq!(log2_det_identity_plus_factors(&[]).unwrap(), 0.0);
    }

    #[test]
    fn factor_form_survives_huge_scale() {
        let mut rng = rng_from_seed(9);
        let h = gaussian_matrix(4, 2, &mut rng);
        let rho = 1e18f64;
        let big = log2_det_identity_plus_factors(&[&h * C64::new(rho.sqrt(), 0.0)]).unwrap();
        let (lambda, _) = sorted_eigen_psd(&(h.adjoint() * &h));
        let exact: f64 = lambda.iter().map(|l| (1.0 + rho * l).log2()).sum();
        assert!((big - exact).abs() < 1e-9, "{big} vs {exact}");
    }

    #[test]
    fn eigen_order_is_descending() {
        let mut rng = rng_from_seed(1);
        let h = gaussian_matrix(2, 4, &mut rng);
        let (vals, vecs) = sorted_eigen_psd(&(h.adjoint() * &h));
        assert!(vals.windows(2).all(|w| w[0] >= w[1]));
        assert_eq!(vals[2], vals[2].max(0.0));
        let unitary = vecs.adjoint() * &vecs;
        assert!((unitary - CMatrix::identity(4, 4)).norm() < 1e-12);
    }

    #[test]
    fn shape_mismatch_is_rejected() {
        let cfg = AntennaConfig::new(2, 2, 1, 1).unwrap();
        let ch = sample_channel(&cfg, 0);
        let bad = ChannelInstance::from_matrices(cfg, ch.h11.clone(), ch.h21.clone(), ch.h12.clone(), ch.h22);
        assert!(matches!(bad, Err(GdofError::Shape { name: "h12", .. })));
    }
}
