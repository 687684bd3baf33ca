//! Sampled piecewise-linear functions of one rational variable.

use alloc::vec::Vec;

use crate::rational::Rational;

/// Points `(x, y)` sorted by `x`, joined by straight segments.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PiecewiseLinearCurve {
    points: Vec<(Rational, Rational)>,
}

impl PiecewiseLinearCurve {
    /// Sorts by `x`. When an `x` repeats, the first sample wins.
    pub fn new(mut points: Vec<(Rational, Rational)>) -> Self {
        points.sort_by(|a, b| a.0.cmp(&b.0));
        points.dedup_by(|later, earlier| later.0 == earlier.0);
        Self { points }
    }

    pub fn points(&self) -> &[(Rational, Rational)] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Exact linear interpolation; `None` outside the sampled range.
    pub fn eval(&self, x: &Rational) -> Option<Rational> {
        let idx = self.points.partition_point(|p| p.0 < *x);
        let hi = self.points.get(idx)?;
        if hi.0 == *x {
            return Some(hi.1.clone());
        }
        let lo = self.points.get(idx.checked_sub(1)?)?;
        let t = (x - &lo.0) / (&hi.0 - &lo.0);
        Some(&lo.1 + t * (&hi.1 - &lo.1))
    }

    /// Interior samples where the slope changes, plus both endpoints.
    pub fn breakpoints(&self) -> Vec<(Rational, Rational)> {
        let n = self.points.len();
        if n <= 2 {
            return self.points.clone();
        }
        let slope = |a: &(Rational, Rational), b: &(Rational, Rational)| (&b.1 - &a.1) / (&b.0 - &a.0);
        let mut out = Vec::new();
        out.push(self.points[0].clone());
        for w in self.points.windows(3) {
            if slope(&w[0], &w[1]) != slope(&w[1], &w[2]) {
                out.push(w[1].clone());
            }
        }
        out.push(self.points[n - 1].clone());
        out
    }
}
