//! Closed-form special cases: single-antenna links, all-unit exponents,
//! the two-user MAC, treating interference as noise, and the symmetric
//! GDoF curves.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::curve::PiecewiseLinearCurve;
use crate::error::{Error, Result};
use crate::mac::f_mac;
use crate::model::{AntennaConfig, ExponentProfile, WeightedTerm};
use crate::polytope::{Halfspace, Region2};
use crate::rational::{int, max, min, pos, rat, Rational};

fn region(rows: Vec<Halfspace>) -> Region2 {
    Region2::from_halfspaces(rows).expect("box constraints keep the region bounded")
}

fn u(n: u32) -> Rational {
    int(n.into())
}

/// GDoF region with one antenna at every node.
pub fn siso_region(exp: &ExponentProfile) -> Region2 {
    let (a12, a21, a22) = (exp.a12(), exp.a21(), exp.a22());
    let one = int(1);
    let b12 = pos(&(&one - a12));
    let b21 = pos(&(a22 - a21));
    let rx2_all = max(a22, a12);
    let rx1_all = max(&one, a21);
    let rx1_mixed = max(a21, &b12);
    let rx2_mixed = max(a12, &b21);
    let two_a22 = a22 * int(2);
    region(alloc::vec![
        Halfspace::new2(int(1), int(0), int(1)),
        Halfspace::new2(int(0), int(1), int(1)),
        Halfspace::new2(int(1), a22.clone(), &rx2_all + &b12),
        Halfspace::new2(int(1), a22.clone(), &rx1_all + &b21),
        Halfspace::new2(int(1), a22.clone(), &rx1_mixed + &rx2_mixed),
        Halfspace::new2(int(2), a22.clone(), &rx1_all + &b12 + &rx2_mixed),
        Halfspace::new2(int(1), two_a22, rx2_all + rx1_mixed + b21),
    ])
}

/// DoF region (all exponents one), reduced to its three essential bounds.
pub fn dof_region(cfg: &AntennaConfig) -> Region2 {
    let (m1, n1, m2, n2) = (cfg.m1(), cfg.n1(), cfg.m2(), cfg.n2());
    let sum = (m1 + m2).min(n1 + n2).min(m1.max(n2)).min(m2.max(n1));
    region(alloc::vec![
        Halfspace::new2(int(1), int(0), u(m1.min(n1))),
        Halfspace::new2(int(0), int(1), u(m2.min(n2))),
        Halfspace::new2(int(1), int(1), u(sum)),
    ])
}

/// DoF region from all seven bounds before any simplification.
pub fn dof_region_raw(cfg: &AntennaConfig) -> Region2 {
    let (m1, n1, m2, n2) = (cfg.m1(), cfg.n1(), cfg.m2(), cfg.n2());
    let p = |a: u32, b: u32| a.saturating_sub(b);
    let rx2_all = n2.min(m1 + m2);
    let rx1_all = n1.min(m1 + m2);
    let rx1_private = n1.min(p(m1, n2));
    let rx2_private = n2.min(p(m2, n1));
    let rx1_mixed = n1.min(m2) + p(n1, m2).min(p(m1, n2));
    let rx2_mixed = n2.min(m1) + p(n2, m1).min(p(m2, n1));
    region(alloc::vec![
        Halfspace::new2(int(1), int(0), u(m1.min(n1))),
        Halfspace::new2(int(0), int(1), u(m2.min(n2))),
        Halfspace::new2(int(1), int(1), u(rx2_all + rx1_private)),
        Halfspace::new2(int(1), int(1), u(rx1_all + rx2_private)),
        Halfspace::new2(int(1), int(1), u(rx1_mixed + rx2_mixed)),
        Halfspace::new2(int(2), int(1), u(rx1_all + rx1_private + rx2_mixed)),
        Halfspace::new2(int(1), int(2), u(rx2_all + rx2_private + rx1_mixed)),
    ])
}

/// Two transmitters with `m1`, `m2` antennas and one `n`-antenna receiver;
/// user 2 is received at `rho^alpha`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MacConfig {
    m1: u32,
    m2: u32,
    n: u32,
    alpha: Rational,
}

impl MacConfig {
    pub fn new(m1: u32, m2: u32, n: u32, alpha: Rational) -> Result<Self> {
        if m1 == 0 || m2 == 0 || n == 0 {
            return Err(Error::ZeroAntennas);
        }
        if alpha < int(0) {
            return Err(Error::NegativeExponent(alpha));
        }
        Ok(Self { m1, m2, n, alpha })
    }

    pub fn m1(&self) -> u32 {
        self.m1
    }
    pub fn m2(&self) -> u32 {
        self.m2
    }
    pub fn n(&self) -> u32 {
        self.n
    }
    pub fn alpha(&self) -> &Rational {
        &self.alpha
    }
}

/// GDoF region of the two-user MAC, both rates normalized by `log rho`.
pub fn mac_gdof_region(mac: &MacConfig) -> Region2 {
    let sum = f_mac(
        mac.n,
        &WeightedTerm::new(mac.alpha.clone(), mac.m2),
        &WeightedTerm::new(int(1), mac.m1),
    );
    region(alloc::vec![
        Halfspace::new2(int(1), int(0), u(mac.m1.min(mac.n))),
        Halfspace::new2(int(0), int(1), u(mac.m2.min(mac.n)) * &mac.alpha),
        Halfspace::new2(int(1), int(1), sum),
    ])
}

/// Per-user GDoF when each receiver treats interference as noise on the
/// symmetric `(m, n, m, n)` channel with cross exponent `alpha`.
pub fn tin_gdof(m: u32, n: u32, alpha: &Rational) -> Rational {
    let total = f_mac(
        n,
        &WeightedTerm::new(alpha.clone(), m),
        &WeightedTerm::new(int(1), m),
    );
    total - u(m.min(n)) * alpha
}

/// `n * (1 - alpha)`: agrees with [`tin_gdof`] when `m >= n` and
/// `alpha <= 1`.
pub fn tin_closed_form(n: u32, alpha: &Rational) -> Rational {
    u(n) * (int(1) - alpha)
}

pub fn tin_gdof_region(m: u32, n: u32, alpha: &Rational) -> Result<Region2> {
    if m == 0 || n == 0 {
        return Err(Error::ZeroAntennas);
    }
    if *alpha < int(0) {
        return Err(Error::NegativeExponent(alpha.clone()));
    }
    let d = pos(&tin_gdof(m, n, alpha));
    Ok(region(alloc::vec![
        Halfspace::new2(int(1), int(0), d.clone()),
        Halfspace::new2(int(0), int(1), d),
    ]))
}

/// Symmetric GDoF of the `(m, n, m, n)` channel under `[1, alpha, alpha, 1]`
/// from the four-piece closed form in the smaller and larger antenna counts.
pub fn symmetric_closed_form(m: u32, n: u32, alpha: &Rational) -> Rational {
    let (small, large) = (u(m.min(n)), u(m.max(n)));
    let slope = &small * int(2) - &large;
    let d = if *alpha < rat(1, 2) {
        &small - &slope * alpha
    } else if *alpha <= rat(2, 3) {
        &large - &small + &slope * alpha
    } else if *alpha <= int(1) {
        &small - alpha * &slope / int(2)
    } else {
        &large / int(2) + &small / int(2) * (alpha - int(1))
    };
    min(&small, &d)
}

/// Interference level from which each user of the `(m, n, m, n)` channel,
/// `m >= n`, gets its full single-user GDoF `n`.
pub fn single_user_threshold(m: u32, n: u32) -> Rational {
    int(3) - rat(m.into(), n.into())
}

/// Named symmetric-GDoF curves.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum InsightCurve {
    /// Closed-form curve of the `(m, n, m, n)` channel with `m >= n`.
    WCurveMgeN,
    /// The `(1, 1, 2, 1)` channel: `1 - alpha/2`, then `alpha/2`, then 1.
    VCurve1121,
    /// Per-user GDoF of treating interference as noise on `(m, n, m, n)`.
    TinOverlay,
}

impl InsightCurve {
    pub const ALL: [InsightCurve; 3] = [
        InsightCurve::WCurveMgeN,
        InsightCurve::VCurve1121,
        InsightCurve::TinOverlay,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            InsightCurve::WCurveMgeN => "w-curve-MgeN",
            InsightCurve::VCurve1121 => "v-curve-1121",
            InsightCurve::TinOverlay => "tin-overlay",
        }
    }
}

impl fmt::Display for InsightCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for InsightCurve {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or(Error::UnknownCurve)
    }
}

fn v_curve_1121(alpha: &Rational) -> Rational {
    if *alpha <= int(1) {
        int(1) - alpha / int(2)
    } else if *alpha <= int(2) {
        alpha / int(2)
    } else {
        int(1)
    }
}

/// Samples a named curve. `m` and `n` are ignored by [`InsightCurve::VCurve1121`].
pub fn insight_curve(
    curve: InsightCurve,
    m: u32,
    n: u32,
    sweep: &[Rational],
) -> Result<PiecewiseLinearCurve> {
    if sweep.iter().any(|a| *a < int(0)) {
        return Err(Error::InvalidCurveParams("alpha must be nonnegative"));
    }
    let value: &dyn Fn(&Rational) -> Rational = match curve {
        InsightCurve::VCurve1121 => &v_curve_1121,
        InsightCurve::WCurveMgeN => {
            if m == 0 || n == 0 {
                return Err(Error::ZeroAntennas);
            }
            if m < n {
                return Err(Error::InvalidCurveParams("w-curve-MgeN needs m >= n"));
            }
            &move |a: &Rational| symmetric_closed_form(m, n, a)
        }
        InsightCurve::TinOverlay => {
            if m == 0 || n == 0 {
                return Err(Error::ZeroAntennas);
            }
            &move |a: &Rational| pos(&tin_gdof(m, n, a))
        }
    };
    Ok(PiecewiseLinearCurve::new(
        sweep.iter().map(|a| (a.clone(), value(a))).collect(),
    ))
}
