//! Exact generalized degrees of freedom (GDoF) of the two-user MIMO Gaussian
//! interference channel.
//!
//! Everything here is rational arithmetic over small polytopes: the MAC
//! sum-GDoF functions `f` and `g`, the seven-family GDoF region, its
//! private/public split region and projection, and closed-form special cases.
//!
//! ```
//! use gdof_core::{gdof_region, rat, AntennaConfig, ExponentProfile};
//!
//! let cfg = AntennaConfig::new(3, 3, 2, 2).unwrap();
//! let exp = ExponentProfile::symmetric(rat(3, 5)).unwrap();
//! let region = gdof_region(&cfg, &exp);
//! assert!(region.has_vertex(&[rat(9, 5), rat(8, 5)]));
//! ```

#![no_std]

extern crate alloc;

pub mod curve;
pub mod error;
pub mod mac;
pub mod model;
pub mod polytope;
pub mod rational;
pub mod region;
pub mod special;

pub use curve::PiecewiseLinearCurve;
pub use error::{Error, Result};
pub use mac::{f_mac, g_mac, mac_sum_gdof};
pub use model::{AntennaConfig, ExponentProfile, SplitTuple, WeightedTerm};
pub use polytope::{
    enumerate_vertices_2d, find_split, project_split_region, region_equal, sup_linear, Halfspace,
    Point2, Region2, SplitRegion,
};
pub use rational::{int, parse_rational, rat, Rational};
pub use region::{
    bound_rhs, gdof_bounds, gdof_region, gdof_region_with, reciprocal, split_region, split_rhs,
    symmetric_curve, symmetric_gdof, Bound7Form,
};
pub use special::{
    dof_region, dof_region_raw, insight_curve, mac_gdof_region, siso_region,
    symmetric_closed_form, tin_gdof, tin_gdof_region, InsightCurve, MacConfig,
};
