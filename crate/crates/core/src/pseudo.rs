//! Monotone non-increasing pseudo-functions on [0,1].
//!
//! A pseudo-function is a non-increasing relation that may contain vertical
//! segments; it describes discontinuity loci and min/max switch curves.
//! Between stored columns the relation is interpolated linearly.

use crate::error::CoreError;

/// One column of the relation: at `x` the relation covers [y_low, y_high].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PseudoPoint {
    pub x: f64,
    pub y_low: f64,
    pub y_high: f64,
}

#[derive(Clone, Debug, PartialEq, Default)]
pub struct PseudoFunction {
    points: Vec<PseudoPoint>,
}

impl PseudoFunction {
    /// Build from (x, y) samples of an ordinary non-increasing function.
    pub fn from_points(samples: Vec<(f64, f64)>) -> Result<Self, CoreError> {
        let points = samples
            .into_iter()
            .map(|(x, y)| PseudoPoint {
                x,
                y_low: y,
                y_high: y,
            })
            .collect();
        Self::from_columns(points)
    }

    /// Build from columns; columns must be sorted by x and non-increasing.
    pub fn from_columns(points: Vec<PseudoPoint>) -> Result<Self, CoreError> {
        for p in &points {
            if p.y_low > p.y_high + 1e-12 {
                return Err(CoreError::BoundaryNotDecreasing);
            }
        }
        for w in points.windows(2) {
            if w[1].x < w[0].x || w[1].y_high > w[0].y_low + 1e-9 {
                return Err(CoreError::BoundaryNotDecreasing);
            }
        }
        Ok(PseudoFunction { points })
    }

    /// Diagnostic constructor: no invariant checks. Used for measured loci
    /// which are reported as-is.
    pub fn from_columns_unchecked(points: Vec<PseudoPoint>) -> Self {
        PseudoFunction { points }
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[PseudoPoint] {
        &self.points
    }

    /// The relation's value interval at x, linearly interpolated between
    /// columns and clamped to the end columns outside their span.
    pub fn value(&self, x: f64) -> (f64, f64) {
        assert!(!self.points.is_empty(), "value() on an empty relation");
        let pts = &self.points;
        if x <= pts[0].x {
            return (pts[0].y_low, pts[0].y_high);
        }
        if x >= pts[pts.len() - 1].x {
            let p = pts[pts.len() - 1];
            return (p.y_low, p.y_high);
        }
        let i = pts.partition_point(|p| p.x < x);
        let (lo, hi) = (pts[i - 1], pts[i]);
        if (x - hi.x).abs() == 0.0 {
            return (hi.y_low, hi.y_high);
        }
        if hi.x == lo.x {
            return (hi.y_low.min(lo.y_low), hi.y_high.max(lo.y_high));
        }
        // between columns the relation descends from lo.y_low to hi.y_high
        let t = (x - lo.x) / (hi.x - lo.x);
        let y = lo.y_low + t * (hi.y_high - lo.y_low);
        (y, y)
    }

    pub fn value_mid(&self, x: f64) -> f64 {
        let (lo, hi) = self.value(x);
        0.5 * (lo + hi)
    }

    /// True when the relation is an ordinary strictly decreasing function:
    /// no vertical segment taller than `tol` and no flat run wider than
    /// `FLAT_SPAN` with essentially no descent.
    pub fn strictly_decreasing(&self, tol: f64) -> bool {
        const FLAT_SPAN: f64 = 0.02;
        const FLAT_EPS: f64 = 1e-6;
        if self.points.len() < 2 {
            return false;
        }
        for p in &self.points {
            if p.y_high - p.y_low > tol {
                return false;
            }
        }
        for w in self.points.windows(2) {
            if w[1].y_high > w[0].y_low + tol {
                return false; // not even non-increasing
            }
        }
        // flat runs: any span wider than FLAT_SPAN must actually descend
        let n = self.points.len();
        for i in 0..n {
            for j in (i + 1)..n {
                let dx = self.points[j].x - self.points[i].x;
                if dx < FLAT_SPAN {
                    continue;
                }
                if self.points[i].y_low - self.points[j].y_high <= FLAT_EPS {
                    return false;
                }
                break; // descent confirmed at the first wide-enough span
            }
        }
        true
    }
}
