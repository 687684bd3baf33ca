//! Finite-SNR companion to `gdof-core`: random channels, the
//! Han-Kobayashi power split, log-det rate bounds, Monte Carlo slope
//! verification, JSON/CSV formats and the `gdof` command-line tool.

pub mod channel;
pub mod cli;
pub mod error;
pub mod io;
pub mod scheme;
pub mod verify;

pub use channel::{sample_channel, ChannelInstance};
pub use error::{GdofError, Result};
pub use scheme::{
    achievable_bound_values, beam_decomposition, hk_covariances, outer_bound_values, tin_rates,
    BeamDecomposition, BoundValues, CovariancePair, GapConstants, SnrPoint,
};
pub use verify::{slope_estimate, verify_f_approx, verify_g_approx, verify_theorem1, SlopeReport, VerifyOptions};
