//! The GDoF region of the two-user MIMO interference channel and the
//! private/public split region that realizes it.
//!
//! Coordinates: `d1` is normalized by `log rho`, `d2` by `log rho^a22`, so the
//! sum bounds read `d1 + a22*d2 <= ...`.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::curve::PiecewiseLinearCurve;
use crate::error::Result;
use crate::mac::{f_mac, g_mac};
use crate::model::{AntennaConfig, ExponentProfile, WeightedTerm};
use crate::polytope::{sup_linear, Halfspace, Region2, SplitRegion};
use crate::rational::{int, Rational};

/// Which expression to use for the first term of the `d1 + 2*a22*d2` bound.
///
/// `Derived` is the receiver-2 MAC term `f(N2, (a12, M1), (a22, M2))`, the
/// slope of the corresponding log-det outer bound. `AsPrinted` is the
/// transposed form `f(M2, (a21, N1), (a22, N2))` that appears in some
/// statements of the result; it is kept for comparison only.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Bound7Form {
    #[default]
    Derived,
    AsPrinted,
}

fn w(exponent: &Rational, width: u32) -> WeightedTerm {
    WeightedTerm::new(exponent.clone(), width)
}

/// The MAC building blocks shared by the outer bounds and the split region.
struct Terms {
    /// `f(N2, (a12, M1), (a22, M2))`: everything at Rx2.
    f31: Rational,
    /// `f(N1, (a21, M2), (1, M1))`: everything at Rx1.
    f41: Rational,
    /// `f(N1, (b12, m12), (1, (M1-N2)^+))`: user 1's private part at Rx1.
    f32: Rational,
    /// `f(N2, (b21, m21), (a22, (M2-N1)^+))`: user 2's private part at Rx2.
    f42: Rational,
    /// `g(N1, (a21, M2), (b12, m12), (1, (M1-N2)^+))`.
    g1: Rational,
    /// `g(N2, (a12, M1), (b21, m21), (a22, (M2-N1)^+))`.
    g2: Rational,
}

impl Terms {
    fn new(cfg: &AntennaConfig, exp: &ExponentProfile) -> Self {
        let (m1, n1, m2, n2) = (cfg.m1(), cfg.n1(), cfg.m2(), cfg.n2());
        let (a11, a12, a21, a22) = (exp.a11(), exp.a12(), exp.a21(), exp.a22());
        let (b12, b21) = (exp.beta(1, 2), exp.beta(2, 1));
        let (m12, m21) = (cfg.rank(1, 2), cfg.rank(2, 1));
        let (null12, null21) = (cfg.null_dim(1, 2), cfg.null_dim(2, 1));
        Self {
            f31: f_mac(n2, &w(a12, m1), &w(a22, m2)),
            f41: f_mac(n1, &w(a21, m2), &w(a11, m1)),
            f32: f_mac(n1, &w(&b12, m12), &w(a11, null12)),
            f42: f_mac(n2, &w(&b21, m21), &w(a22, null21)),
            g1: g_mac(n1, &w(a21, m2), &w(&b12, m12), &w(a11, null12)),
            g2: g_mac(n2, &w(a12, m1), &w(&b21, m21), &w(a22, null21)),
        }
    }
}

/// Right-hand sides of the seven bound families, in order:
/// `d1`, `d2`, three bounds on `d1 + a22*d2`, `2*d1 + a22*d2`, `d1 + 2*a22*d2`.
pub fn bound_rhs(cfg: &AntennaConfig, exp: &ExponentProfile, form: Bound7Form) -> [Rational; 7] {
    let t = Terms::new(cfg, exp);
    let first7 = match form {
        Bound7Form::Derived => t.f31.clone(),
        Bound7Form::AsPrinted => f_mac(
            cfg.m2(),
            &w(exp.a21(), cfg.n1()),
            &w(exp.a22(), cfg.n2()),
        ),
    };
    [
        int(cfg.rank(1, 1).into()),
        int(cfg.rank(2, 2).into()),
        &t.f31 + &t.f32,
        &t.f41 + &t.f42,
        &t.g1 + &t.g2,
        &t.f41 + &t.f32 + &t.g2,
        first7 + &t.f42 + &t.g1,
    ]
}

/// Coefficients `(c1, c2)` of the seven bound families.
pub fn bound_coefficients(exp: &ExponentProfile) -> [[Rational; 2]; 7] {
    let a = exp.a22().clone();
    let two_a = &a * int(2);
    [
        [int(1), int(0)],
        [int(0), int(1)],
        [int(1), a.clone()],
        [int(1), a.clone()],
        [int(1), a.clone()],
        [int(2), a],
        [int(1), two_a],
    ]
}

pub fn gdof_bounds(cfg: &AntennaConfig, exp: &ExponentProfile, form: Bound7Form) -> Vec<Halfspace> {
    bound_coefficients(exp)
        .into_iter()
        .zip(bound_rhs(cfg, exp, form))
        .map(|([c1, c2], rhs)| Halfspace::new2(c1, c2, rhs))
        .collect()
}

/// The GDoF region in `(d1, d2)`.
pub fn gdof_region(cfg: &AntennaConfig, exp: &ExponentProfile) -> Region2 {
    gdof_region_with(cfg, exp, Bound7Form::Derived)
}

pub fn gdof_region_with(cfg: &AntennaConfig, exp: &ExponentProfile, form: Bound7Form) -> Region2 {
    Region2::from_halfspaces(gdof_bounds(cfg, exp, form))
        .expect("single-user bounds keep the region bounded")
}

/// Right-hand sides of the split constraints, receiver 1 block then receiver 2
/// block, each in the row order of [`split_region`].
pub fn split_rhs(cfg: &AntennaConfig, exp: &ExponentProfile) -> ([Rational; 7], [Rational; 7]) {
    let t = Terms::new(cfg, exp);
    let (m1, n1, m2, n2) = (cfg.m1(), cfg.n1(), cfg.m2(), cfg.n2());
    let (a11, a12, a21, a22) = (exp.a11(), exp.a12(), exp.a21(), exp.a22());
    let i = |n: u32| int(n.into());
    let g1 = [
        t.f32.clone(),
        i(n1.min(m1).min(n2)),
        i(n1.min(m2)) * a21,
        i(m1.min(n1)),
        t.g1.clone(),
        f_mac(n1, &w(a21, m2), &w(a11, cfg.rank(1, 2))),
        t.f41.clone(),
    ];
    let g2 = [
        t.f42.clone(),
        i(n2.min(m2).min(n1)),
        i(n2.min(m1)) * a12,
        i(m2.min(n2)),
        t.g2.clone(),
        f_mac(n2, &w(a12, m1), &w(a22, cfg.rank(2, 1))),
        t.f31.clone(),
    ];
    (g1, g2)
}

/// The split region over `(d1p, d1c, d2p, d2c)`.
///
/// Receiver 1 rows, in order: `d1p`, `d1c`, `a22*d2c`, `d1p + d1c`,
/// `d1p + a22*d2c`, `d1c + a22*d2c`, `d1p + d1c + a22*d2c`.
/// Receiver 2 rows mirror them: `a22*d2p`, `d2c`, `d1c`, `d2p + d2c`,
/// `a22*d2p + d1c`, `a22*d2c + d1c`, `a22*(d2p + d2c) + d1c`.
pub fn split_region(cfg: &AntennaConfig, exp: &ExponentProfile) -> SplitRegion {
    let (g1, g2) = split_rhs(cfg, exp);
    let a = exp.a22().clone();
    let (o, z) = (Rational::one(), Rational::zero());
    let rows1 = [
        [o.clone(), z.clone(), z.clone(), z.clone()],
        [z.clone(), o.clone(), z.clone(), z.clone()],
        [z.clone(), z.clone(), z.clone(), a.clone()],
        [o.clone(), o.clone(), z.clone(), z.clone()],
        [o.clone(), z.clone(), z.clone(), a.clone()],
        [z.clone(), o.clone(), z.clone(), a.clone()],
        [o.clone(), o.clone(), z.clone(), a.clone()],
    ];
    let rows2 = [
        [z.clone(), z.clone(), a.clone(), z.clone()],
        [z.clone(), z.clone(), z.clone(), o.clone()],
        [z.clone(), o.clone(), z.clone(), z.clone()],
        [z.clone(), z.clone(), o.clone(), o.clone()],
        [z.clone(), o.clone(), a.clone(), z.clone()],
        [z.clone(), o.clone(), z.clone(), a.clone()],
        [z.clone(), o.clone(), a.clone(), a],
    ];
    let halfspaces = rows1
        .into_iter()
        .zip(g1)
        .chain(rows2.into_iter().zip(g2))
        .map(|(c, rhs)| Halfspace::new(vec![c[0].clone(), c[1].clone(), c[2].clone(), c[3].clone()], rhs))
        .collect();
    SplitRegion::new(halfspaces).expect("all rows have four coefficients")
}

/// Half the largest achievable `d1 + d2`.
pub fn symmetric_gdof(cfg: &AntennaConfig, exp: &ExponentProfile) -> Rational {
    let region = gdof_region(cfg, exp);
    let one = Rational::one();
    sup_linear(&region, (&one, &one)).expect("region contains the origin") / int(2)
}

/// `(alpha, d_s(alpha))` under `[1, alpha, alpha, 1]` for each sweep value.
pub fn symmetric_curve(cfg: &AntennaConfig, sweep: &[Rational]) -> Result<PiecewiseLinearCurve> {
    let mut points = Vec::with_capacity(sweep.len());
    for alpha in sweep {
        let exp = ExponentProfile::symmetric(alpha.clone())?;
        points.push((alpha.clone(), symmetric_gdof(cfg, &exp)));
    }
    Ok(PiecewiseLinearCurve::new(points))
}

/// The channel with transmitters and receivers exchanged; it has the same
/// GDoF region.
pub fn reciprocal(cfg: &AntennaConfig, exp: &ExponentProfile) -> (AntennaConfig, ExponentProfile) {
    (cfg.reciprocal(), exp.reciprocal())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::{find_split, project_split_region, region_equal};
    use crate::rational::rat;

    fn ex1() -> (AntennaConfig, ExponentProfile) {
        (
            AntennaConfig::new(3, 3, 2, 2).unwrap(),
            ExponentProfile::symmetric(rat(3, 5)).unwrap(),
        )
    }

    fn ex2() -> (AntennaConfig, ExponentProfile) {
        (
            AntennaConfig::new(3, 3, 2, 2).unwrap(),
            ExponentProfile::new(int(1), rat(1, 4), rat(5, 4), int(1)).unwrap(),
        )
    }

    fn pt(a: Rational, b: Rational) -> [Rational; 2] {
        [a, b]
    }

    #[test]
    fn example_one_bounds_and_vertices() {
        let (cfg, exp) = ex1();
        let rhs = bound_rhs(&cfg, &exp, Bound7Form::Derived);
        assert_eq!(
            rhs,
            [int(3), int(2), rat(19, 5), rat(19, 5), rat(17, 5), int(6), int(5)]
        );
        let r = gdof_region(&cfg, &exp);
        assert_eq!(
            r.vertices(),
            &[
                pt(int(0), int(0)),
                pt(int(3), int(0)),
                pt(rat(13, 5), rat(4, 5)),
                pt(rat(9, 5), rat(8, 5)),
                pt(int(1), int(2)),
                pt(int(0), int(2)),
            ]
        );
    }

    #[test]
    fn example_two_region() {
        let (cfg, exp) = ex2();
        let r = gdof_region(&cfg, &exp);
        assert!(r.has_vertex(&pt(rat(3, 2), int(2))));
        assert!(r.has_vertex(&pt(int(3), rat(1, 2))));
        assert!(r.contains(&pt(rat(9, 4), rat(5, 4))));
    }

    #[test]
    fn no_cross_links_gives_a_box() {
        let cfg = AntennaConfig::new(1, 1, 1, 1).unwrap();
        let exp = ExponentProfile::new(int(1), int(0), int(0), int(1)).unwrap();
        let square = Region2::from_halfspaces(vec![
            Halfspace::new2(int(1), int(0), int(1)),
            Halfspace::new2(int(0), int(1), int(1)),
        ])
        .unwrap();
        assert!(region_equal(&gdof_region(&cfg, &exp), &square));
    }

    #[test]
    fn printed_seventh_bound_differs_on_an_asymmetric_channel() {
        let cfg = AntennaConfig::new(1, 1, 2, 1).unwrap();
        let exp = ExponentProfile::unit();
        assert_eq!(bound_rhs(&cfg, &exp, Bound7Form::Derived)[6], int(3));
        assert_eq!(bound_rhs(&cfg, &exp, Bound7Form::AsPrinted)[6], int(4));
    }

    #[test]
    fn split_tables() {
        let (cfg, exp) = ex1();
        let (g1, g2) = split_rhs(&cfg, &exp);
        assert_eq!(
            g1,
            [rat(9, 5), int(2), rat(6, 5), int(3), rat(11, 5), rat(13, 5), int(3)]
        );
        assert_eq!(
            g2,
            [rat(4, 5), int(2), rat(6, 5), int(2), rat(6, 5), int(2), int(2)]
        );
        let (cfg, exp) = ex2();
        let (g1, g2) = split_rhs(&cfg, &exp);
        assert_eq!(
            g1,
            [rat(5, 2), int(2), rat(5, 2), int(3), rat(7, 2), rat(7, 2), rat(7, 2)]
        );
        assert_eq!(
            g2,
            [int(0), int(2), rat(1, 2), int(2), rat(1, 2), int(2), int(2)]
        );
    }

    #[test]
    fn split_kills_public_cross_budget_without_interference() {
        let cfg = AntennaConfig::new(1, 1, 1, 1).unwrap();
        let exp = ExponentProfile::new(int(1), int(0), int(0), int(1)).unwrap();
        let (g1, _) = split_rhs(&cfg, &exp);
        assert_eq!(&g1[..3], &[int(1), int(1), int(0)]);
    }

    #[test]
    fn projection_matches_region_on_both_examples() {
        for (cfg, exp) in [ex1(), ex2()] {
            let proj = project_split_region(&split_region(&cfg, &exp)).unwrap();
            assert!(region_equal(&proj, &gdof_region(&cfg, &exp)));
        }
    }

    #[test]
    fn example_one_split_witnesses() {
        let (cfg, exp) = ex1();
        let split = split_region(&cfg, &exp);
        for (d1, d2) in [(int(1), int(2)), (rat(9, 5), rat(8, 5)), (rat(13, 5), rat(4, 5))] {
            let t = find_split(&split, &d1, &d2).unwrap();
            assert_eq!((t.d1(), t.d2()), (d1, d2));
        }
    }

    #[test]
    fn symmetric_values() {
        let half = rat(1, 2);
        let e = ExponentProfile::symmetric(half).unwrap();
        let a = AntennaConfig::new(2, 3, 2, 3).unwrap();
        let b = AntennaConfig::new(3, 2, 3, 2).unwrap();
        assert_eq!(symmetric_gdof(&a, &e), rat(3, 2));
        assert_eq!(symmetric_gdof(&b, &e), rat(3, 2));
        let siso = AntennaConfig::new(1, 1, 1, 1).unwrap();
        assert_eq!(
            symmetric_gdof(&siso, &ExponentProfile::symmetric(int(2)).unwrap()),
            int(1)
        );
    }

    #[test]
    fn symmetric_curve_samples() {
        let cfg = AntennaConfig::new(3, 2, 3, 2).unwrap();
        let sweep = [int(0), rat(1, 2), rat(2, 3), int(1), rat(3, 2)];
        let c = symmetric_curve(&cfg, &sweep).unwrap();
        let ys: Vec<Rational> = c.points().iter().map(|p| p.1.clone()).collect();
        assert_eq!(ys, vec![int(2), rat(3, 2), rat(5, 3), rat(3, 2), int(2)]);
        let narrow = AntennaConfig::new(2, 1, 2, 1).unwrap();
        assert_eq!(symmetric_gdof(&narrow, &ExponentProfile::unit()), int(1));
        assert!(symmetric_curve(&cfg, &[]).unwrap().is_empty());
        assert!(symmetric_curve(&cfg, &[int(-1)]).is_err());
    }

    #[test]
    fn reciprocal_example() {
        let cfg = AntennaConfig::new(3, 2, 2, 3).unwrap();
        let exp = ExponentProfile::new(int(1), rat(2, 5), rat(7, 10), int(1)).unwrap();
        let (rc, re) = reciprocal(&cfg, &exp);
        assert_eq!(rc, AntennaConfig::new(2, 3, 3, 2).unwrap());
        assert_eq!(re, ExponentProfile::new(int(1), rat(7, 10), rat(2, 5), int(1)).unwrap());
        let sym = ExponentProfile::symmetric(rat(2, 5)).unwrap();
        let (rc, re) = reciprocal(&cfg, &sym);
        assert!(region_equal(&gdof_region(&cfg, &sym), &gdof_region(&rc, &re)));
    }
}
