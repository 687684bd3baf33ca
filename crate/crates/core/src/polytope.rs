//! Exact rational polyhedra in two and four variables.
//!
//! Every region lives inside the nonnegative orthant; the orthant constraints
//! are implicit and never stored in a half-space list. Vertex enumeration is
//! the pairwise-intersection method, linear maximization is done over the
//! enumerated vertices, and the 4-to-2 projection is Fourier-Motzkin
//! elimination with Imbert's history-size pruning.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::model::SplitTuple;
use crate::rational::Rational;

/// A point `(d1, d2)`.
pub type Point2 = [Rational; 2];

/// The constraint `coefficients · x <= rhs`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Halfspace {
    pub coefficients: Vec<Rational>,
    pub rhs: Rational,
}

impl Halfspace {
    pub fn new(coefficients: Vec<Rational>, rhs: Rational) -> Self {
        assert!(!coefficients.is_empty(), "half-space needs at least one coefficient");
        Self { coefficients, rhs }
    }

    /// `c1 * x + c2 * y <= rhs`.
    pub fn new2(c1: Rational, c2: Rational, rhs: Rational) -> Self {
        Self::new(vec![c1, c2], rhs)
    }

    pub fn dim(&self) -> usize {
        self.coefficients.len()
    }

    /// All coefficients are zero, so the row reads `0 <= rhs`.
    pub fn is_vacuous(&self) -> bool {
        self.coefficients.iter().all(Zero::is_zero)
    }

    pub fn lhs(&self, x: &[Rational]) -> Rational {
        self.coefficients
            .iter()
            .zip(x)
            .fold(Rational::zero(), |acc, (c, v)| acc + c * v)
    }

    pub fn contains(&self, x: &[Rational]) -> bool {
        self.lhs(x) <= self.rhs
    }

    pub fn is_tight(&self, x: &[Rational]) -> bool {
        self.lhs(x) == self.rhs
    }

    /// Scaled so the first nonzero coefficient has magnitude one.
    fn normalized(&self) -> Halfspace {
        match self.coefficients.iter().find(|c| !c.is_zero()) {
            None => self.clone(),
            Some(lead) => {
                let s = lead.abs();
                Halfspace {
                    coefficients: self.coefficients.iter().map(|c| c / &s).collect(),
                    rhs: &self.rhs / &s,
                }
            }
        }
    }

    fn is_orthant_row(&self) -> bool {
        let n = self.normalized();
        n.rhs.is_zero()
            && n.coefficients.iter().filter(|c| !c.is_zero()).count() == 1
            && n.coefficients.iter().any(|c| *c == -Rational::one())
    }
}

fn check_dim(halfspaces: &[Halfspace], expected: usize) -> Result<()> {
    for h in halfspaces {
        if h.dim() != expected {
            return Err(Error::DimensionMismatch {
                expected,
                found: h.dim(),
            });
        }
    }
    Ok(())
}

fn in_orthant(x: &[Rational]) -> bool {
    x.iter().all(|v| !v.is_negative())
}

fn cross(o: &Point2, a: &Point2, b: &Point2) -> Rational {
    (&a[0] - &o[0]) * (&b[1] - &o[1]) - (&a[1] - &o[1]) * (&b[0] - &o[0])
}

/// Sorts a convex point set counterclockwise starting at its
/// lexicographically smallest point.
fn sort_ccw(mut pts: Vec<Point2>) -> Vec<Point2> {
    pts.sort();
    pts.dedup();
    if pts.len() <= 2 {
        return pts;
    }
    let origin = pts[0].clone();
    let mut rest = pts.split_off(1);
    rest.sort_by(|a, b| {
        let c = cross(&origin, a, b);
        if c.is_positive() {
            Ordering::Less
        } else if c.is_negative() {
            Ordering::Greater
        } else {
            let da = (&a[0] - &origin[0]).abs() + (&a[1] - &origin[1]).abs();
            let db = (&b[0] - &origin[0]).abs() + (&b[1] - &origin[1]).abs();
            da.cmp(&db)
        }
    });
    pts.extend(rest);
    pts
}

/// All extreme points of `{x >= 0 : h·x <= rhs for every h}` in two variables,
/// counterclockwise from the lexicographically smallest vertex.
///
/// An infeasible system yields an empty list.
pub fn enumerate_vertices_2d(halfspaces: &[Halfspace]) -> Result<Vec<Point2>> {
    check_dim(halfspaces, 2)?;
    if halfspaces.iter().any(|h| h.is_vacuous() && h.rhs.is_negative()) {
        return Ok(Vec::new());
    }
    let mut rows: Vec<Halfspace> = halfspaces
        .iter()
        .filter(|h| !h.is_vacuous())
        .cloned()
        .collect();
    rows.push(Halfspace::new2(-Rational::one(), Rational::zero(), Rational::zero()));
    rows.push(Halfspace::new2(Rational::zero(), -Rational::one(), Rational::zero()));

    let mut found = Vec::new();
    for i in 0..rows.len() {
        for j in (i + 1)..rows.len() {
            let (a, b) = (&rows[i], &rows[j]);
            let det = &a.coefficients[0] * &b.coefficients[1] - &a.coefficients[1] * &b.coefficients[0];
            if det.is_zero() {
                continue;
            }
            let x = (&a.rhs * &b.coefficients[1] - &b.rhs * &a.coefficients[1]) / &det;
            let y = (&a.coefficients[0] * &b.rhs - &b.coefficients[0] * &a.rhs) / &det;
            let p = [x, y];
            if rows.iter().all(|h| h.contains(&p)) {
                found.push(p);
            }
        }
    }
    if found.is_empty() {
        return Ok(found);
    }
    if has_recession_direction(&rows) {
        return Err(Error::Unbounded);
    }
    Ok(sort_ccw(found))
}

/// Whether some nonzero `d >= 0` has `h·d <= 0` for every row. Extreme rays
/// of that cone lie on an axis or on some row's boundary line.
fn has_recession_direction(rows: &[Halfspace]) -> bool {
    let one = Rational::one();
    let zero = Rational::zero();
    let mut candidates: Vec<Point2> = vec![[one.clone(), zero.clone()], [zero.clone(), one]];
    for h in rows {
        let (c1, c2) = (&h.coefficients[0], &h.coefficients[1]);
        candidates.push([c2.clone(), -c1.clone()]);
        candidates.push([-c2.clone(), c1.clone()]);
    }
    candidates
        .into_iter()
        .filter(|d| in_orthant(d) && !(d[0].is_zero() && d[1].is_zero()))
        .any(|d| rows.iter().all(|h| !h.lhs(&d).is_positive()))
}

/// A bounded polygon in `(d1, d2)`: half-spaces plus their canonical vertex list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Region2 {
    halfspaces: Vec<Halfspace>,
    vertices: Vec<Point2>,
}

impl Region2 {
    pub fn from_halfspaces(halfspaces: Vec<Halfspace>) -> Result<Self> {
        let vertices = enumerate_vertices_2d(&halfspaces)?;
        Ok(Self {
            halfspaces,
            vertices,
        })
    }

    pub fn halfspaces(&self) -> &[Halfspace] {
        &self.halfspaces
    }

    /// Counterclockwise from the lexicographically smallest vertex.
    pub fn vertices(&self) -> &[Point2] {
        &self.vertices
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, p: &Point2) -> bool {
        in_orthant(p) && self.halfspaces.iter().all(|h| h.contains(p))
    }

    pub fn has_vertex(&self, p: &Point2) -> bool {
        self.vertices.iter().any(|v| v == p)
    }

    /// Same polygon described by its facet-defining rows only.
    pub fn without_redundant_rows(&self) -> Region2 {
        let full = self.vertices.len() >= 3;
        let mut kept: Vec<Halfspace> = Vec::new();
        for h in &self.halfspaces {
            if h.is_vacuous() && !h.rhs.is_negative() {
                continue;
            }
            let tight = self.vertices.iter().filter(|v| h.is_tight(&v[..])).count();
            let needed = if self.vertices.is_empty() {
                true
            } else if full {
                tight >= 2
            } else {
                tight >= 1
            };
            if !needed || h.is_orthant_row() {
                continue;
            }
            let n = h.normalized();
            if !kept.iter().any(|k| k.normalized() == n) {
                kept.push(h.clone());
            }
        }
        Region2 {
            halfspaces: kept,
            vertices: self.vertices.clone(),
        }
    }
}

/// Maximum of `w1*d1 + w2*d2` over the region; attained at a vertex.
pub fn sup_linear(region: &Region2, weights: (&Rational, &Rational)) -> Result<Rational> {
    region
        .vertices
        .iter()
        .map(|v| weights.0 * &v[0] + weights.1 * &v[1])
        .max()
        .ok_or(Error::EmptyRegion)
}

/// Identical canonical vertex lists.
pub fn region_equal(a: &Region2, b: &Region2) -> bool {
    a.vertices == b.vertices
}

/// Constraint system over `(d1p, d1c, d2p, d2c)`, intersected with the
/// nonnegative orthant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitRegion {
    halfspaces: Vec<Halfspace>,
}

impl SplitRegion {
    pub fn new(halfspaces: Vec<Halfspace>) -> Result<Self> {
        check_dim(&halfspaces, 4)?;
        Ok(Self { halfspaces })
    }

    pub fn halfspaces(&self) -> &[Halfspace] {
        &self.halfspaces
    }

    pub fn contains(&self, t: &SplitTuple) -> bool {
        let x = t.to_vec();
        in_orthant(&x) && self.halfspaces.iter().all(|h| h.contains(&x))
    }
}

/// A row produced during elimination, tagged with the original rows it was
/// combined from.
#[derive(Clone)]
struct TrackedRow {
    row: Halfspace,
    history: u128,
}

fn eliminate(rows: Vec<TrackedRow>, var: usize, eliminated: u32, prune: bool) -> Vec<TrackedRow> {
    let (mut zero, mut pos, mut neg) = (Vec::new(), Vec::new(), Vec::new());
    for r in rows {
        let c = &r.row.coefficients[var];
        if c.is_positive() {
            pos.push(r);
        } else if c.is_negative() {
            neg.push(r);
        } else {
            zero.push(r);
        }
    }
    let mut out = zero;
    for p in &pos {
        for n in &neg {
            let wp = -&n.row.coefficients[var];
            let wn = p.row.coefficients[var].clone();
            let history = p.history | n.history;
            // Imbert: a combination of more than k+1 originals after k
            // eliminations is implied by the others.
            if prune && history.count_ones() > eliminated + 1 {
                continue;
            }
            let coefficients = p
                .row
                .coefficients
                .iter()
                .zip(&n.row.coefficients)
                .map(|(a, b)| a * &wp + b * &wn)
                .collect();
            let rhs = &p.row.rhs * &wp + &n.row.rhs * &wn;
            out.push(TrackedRow {
                row: Halfspace { coefficients, rhs },
                history,
            });
        }
    }
    dedup_rows(out)
}

/// Drops trivially true rows and keeps the tightest of parallel duplicates.
fn dedup_rows(rows: Vec<TrackedRow>) -> Vec<TrackedRow> {
    let mut out: Vec<TrackedRow> = Vec::new();
    for r in rows {
        if r.row.is_vacuous() && !r.row.rhs.is_negative() {
            continue;
        }
        let n = r.row.normalized();
        match out
            .iter_mut()
            .find(|k| k.row.normalized().coefficients == n.coefficients)
        {
            Some(k) => {
                if n.rhs < k.row.normalized().rhs {
                    *k = r;
                }
            }
            None => out.push(r),
        }
    }
    out
}

/// Projects a split region onto `(d1, d2) = (d1p + d1c, d2p + d2c)`.
pub fn project_split_region(split: &SplitRegion) -> Result<Region2> {
    let z = Rational::zero;
    let one = Rational::one;
    // substitute d1c = d1 - d1p, d2c = d2 - d2p; variable order (d1, d2, d1p, d2p)
    let mut rows: Vec<Halfspace> = split
        .halfspaces
        .iter()
        .map(|h| {
            let c = &h.coefficients;
            Halfspace::new(
                vec![c[1].clone(), c[3].clone(), &c[0] - &c[1], &c[2] - &c[3]],
                h.rhs.clone(),
            )
        })
        .collect();
    // d1p >= 0, d2p >= 0, d1c >= 0, d2c >= 0
    rows.push(Halfspace::new(vec![z(), z(), -one(), z()], z()));
    rows.push(Halfspace::new(vec![z(), z(), z(), -one()], z()));
    rows.push(Halfspace::new(vec![-one(), z(), one(), z()], z()));
    rows.push(Halfspace::new(vec![z(), -one(), z(), one()], z()));

    let prune = rows.len() <= 128;
    let tracked: Vec<TrackedRow> = rows
        .into_iter()
        .enumerate()
        .map(|(i, row)| TrackedRow {
            row,
            history: if prune { 1u128 << i } else { 0 },
        })
        .collect();
    let tracked = dedup_rows(tracked);
    let tracked = eliminate(tracked, 3, 1, prune);
    let tracked = eliminate(tracked, 2, 2, prune);

    let planar: Vec<Halfspace> = tracked
        .into_iter()
        .map(|t| Halfspace::new2(t.row.coefficients[0].clone(), t.row.coefficients[1].clone(), t.row.rhs))
        .collect();
    Ok(Region2::from_halfspaces(planar)?.without_redundant_rows())
}

/// A split of `(d1, d2)` into private and public parts inside `split`, or
/// `None` when no such split exists.
///
/// Among the vertices of the feasible set in `(d1p, d2p)` the
/// lexicographically largest is returned.
pub fn find_split(split: &SplitRegion, d1: &Rational, d2: &Rational) -> Option<SplitTuple> {
    if d1.is_negative() || d2.is_negative() {
        return None;
    }
    let mut rows: Vec<Halfspace> = split
        .halfspaces
        .iter()
        .map(|h| {
            let c = &h.coefficients;
            Halfspace::new2(
                &c[0] - &c[1],
                &c[2] - &c[3],
                &h.rhs - &c[1] * d1 - &c[3] * d2,
            )
        })
        .collect();
    rows.push(Halfspace::new2(Rational::one(), Rational::zero(), d1.clone()));
    rows.push(Halfspace::new2(Rational::zero(), Rational::one(), d2.clone()));
    let best = enumerate_vertices_2d(&rows).ok()?.into_iter().max()?;
    let [d1p, d2p] = best;
    let t = SplitTuple::new(d1p.clone(), d1 - &d1p, d2p.clone(), d2 - &d2p);
    debug_assert!(split.contains(&t));
    Some(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn unit_square() -> Vec<Halfspace> {
        vec![
            Halfspace::new2(int(1), int(0), int(1)),
            Halfspace::new2(int(0), int(1), int(1)),
        ]
    }

    #[test]
    fn unit_square_vertices_are_ccw() {
        let v = enumerate_vertices_2d(&unit_square()).unwrap();
        assert_eq!(
            v,
            vec![
                [int(0), int(0)],
                [int(1), int(0)],
                [int(1), int(1)],
                [int(0), int(1)]
            ]
        );
    }

    #[test]
    fn unbounded_and_infeasible_systems() {
        let strip = vec![Halfspace::new2(int(1), int(0), int(1))];
        assert_eq!(enumerate_vertices_2d(&strip), Err(Error::Unbounded));
        let wedge = vec![Halfspace::new2(int(1), int(-1), int(0))];
        assert_eq!(enumerate_vertices_2d(&wedge), Err(Error::Unbounded));
        let empty = vec![Halfspace::new2(int(1), int(1), int(-1))];
        assert!(enumerate_vertices_2d(&empty).unwrap().is_empty());
        let vacuous_false = vec![Halfspace::new2(int(0), int(0), int(-1))];
        assert!(enumerate_vertices_2d(&vacuous_false).unwrap().is_empty());
        let mismatch = vec![Halfspace::new(vec![int(1)], int(1))];
        assert!(matches!(
            enumerate_vertices_2d(&mismatch),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn degenerate_vertices_are_deduplicated() {
        // three lines through (1, 1)
        let mut hs = unit_square();
        hs.push(Halfspace::new2(int(1), int(1), int(2)));
        let v = enumerate_vertices_2d(&hs).unwrap();
        assert_eq!(v.len(), 4);
    }

    #[test]
    fn sup_linear_examples() {
        let sq = Region2::from_halfspaces(unit_square()).unwrap();
        assert_eq!(sup_linear(&sq, (&int(2), &int(3))).unwrap(), int(5));
        assert_eq!(sup_linear(&sq, (&int(0), &int(0))).unwrap(), int(0));
        let empty =
            Region2::from_halfspaces(vec![Halfspace::new2(int(1), int(1), int(-1))]).unwrap();
        assert_eq!(sup_linear(&empty, (&int(1), &int(1))), Err(Error::EmptyRegion));
    }

    #[test]
    fn region_equality_ignores_redundant_rows() {
        let sq = Region2::from_halfspaces(unit_square()).unwrap();
        let mut hs = unit_square();
        hs.push(Halfspace::new2(int(1), int(1), int(5)));
        let sq2 = Region2::from_halfspaces(hs).unwrap();
        assert!(region_equal(&sq, &sq2));
        assert_eq!(sq2.without_redundant_rows().halfspaces().len(), 2);
        let tri =
            Region2::from_halfspaces(vec![Halfspace::new2(int(1), int(1), int(1))]).unwrap();
        assert!(!region_equal(&sq, &tri));
    }

    #[test]
    fn projection_of_a_single_sum_constraint() {
        let z = Rational::zero;
        let split = SplitRegion::new(vec![
            Halfspace::new(vec![int(1), int(1), z(), z()], int(1)),
            Halfspace::new(vec![z(), z(), int(1), z()], int(1)),
            Halfspace::new(vec![z(), z(), z(), int(1)], int(1)),
        ])
        .unwrap();
        let proj = project_split_region(&split).unwrap();
        let square = Region2::from_halfspaces(vec![
            Halfspace::new2(int(1), int(0), int(1)),
            Halfspace::new2(int(0), int(1), int(2)),
        ])
        .unwrap();
        assert!(region_equal(&proj, &square));
        assert_eq!(proj.halfspaces().len(), 2);
    }

    #[test]
    fn find_split_prefers_private_parts() {
        let z = Rational::zero;
        let split = SplitRegion::new(vec![
            Halfspace::new(vec![int(1), z(), z(), z()], rat(1, 2)),
            Halfspace::new(vec![z(), int(1), z(), z()], int(1)),
            Halfspace::new(vec![z(), z(), int(1), z()], int(1)),
            Halfspace::new(vec![z(), z(), z(), int(1)], int(1)),
        ])
        .unwrap();
        let t = find_split(&split, &int(1), &int(1)).unwrap();
        assert_eq!(t, SplitTuple::new(rat(1, 2), rat(1, 2), int(1), int(0)));
        assert!(find_split(&split, &int(10), &int(10)).is_none());
        assert!(find_split(&split, &int(-1), &int(0)).is_none());
    }
}
