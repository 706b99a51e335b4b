//! Piecewise-linear rescaling between the unit interval and a summand frame.
//!
//! The map carries [0, e] onto [c, a], the point e onto v and [e, 1] onto
//! [b, d], with 0 <= c <= a <= b <= d <= 1 and v in [a, b]. Degenerate pieces
//! (c = a, b = d, e = 0 or e = 1) are allowed; the corresponding side is then
//! a single point.

use crate::error::CoreError;

const EPS: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ScaleMap {
    pub c: f64,
    pub a: f64,
    pub b: f64,
    pub d: f64,
    pub v: f64,
    pub e: f64,
}

impl ScaleMap {
    pub fn new(c: f64, a: f64, b: f64, d: f64, v: f64, e: f64) -> Result<Self, CoreError> {
        let ordered = 0.0 <= c && c <= a + EPS && a <= b + EPS && b <= d + EPS && d <= 1.0 + EPS;
        if !ordered {
            return Err(CoreError::InvalidScaleMap(format!(
                "need 0 <= c <= a <= b <= d <= 1, got c={c}, a={a}, b={b}, d={d}"
            )));
        }
        if v < a - EPS || v > b + EPS {
            return Err(CoreError::InvalidScaleMap(format!(
                "v={v} must lie in [a, b] = [{a}, {b}]"
            )));
        }
        if !(0.0..=1.0).contains(&e) {
            return Err(CoreError::InvalidScaleMap(format!(
                "e={e} must lie in [0,1]"
            )));
        }
        Ok(ScaleMap { c, a, b, d, v, e })
    }

    /// Identity frame for a given neutral element: v and e coincide and both
    /// linear pieces are trivial.
    pub fn identity(e: f64) -> Self {
        ScaleMap {
            c: 0.0,
            a: e,
            b: e,
            d: 1.0,
            v: e,
            e,
        }
    }

    pub fn forward(&self, x: f64) -> f64 {
        debug_assert!((-EPS..=1.0 + EPS).contains(&x));
        let x = x.clamp(0.0, 1.0);
        if x == self.e {
            self.v
        } else if x < self.e {
            // e > 0 here since x in [0, e)
            self.c + (self.a - self.c) * (x / self.e)
        } else {
            self.b + (self.d - self.b) * (x - self.e) / (1.0 - self.e)
        }
    }

    /// Strict inverse: defined on [c, a], {v} and [b, d]; by convention
    /// inverse(v) = e. Values in the open gaps are a domain error.
    pub fn inverse(&self, y: f64) -> Result<f64, CoreError> {
        if (y - self.v).abs() <= EPS {
            return Ok(self.e);
        }
        if y >= self.c - EPS && y <= self.a + EPS && self.a > self.c {
            return Ok(self.e * (y.clamp(self.c, self.a) - self.c) / (self.a - self.c));
        }
        if y >= self.b - EPS && y <= self.d + EPS && self.d > self.b {
            return Ok(
                self.e + (1.0 - self.e) * (y.clamp(self.b, self.d) - self.b) / (self.d - self.b)
            );
        }
        Err(CoreError::ScaleInverseDomain(y))
    }

    /// Tolerant inverse used when mapping operator outputs back: values within
    /// `slack` of the image are clamped onto it, anything else snaps to the
    /// nearest of the three image components.
    pub fn inverse_clamped(&self, y: f64, slack: f64) -> f64 {
        if (y - self.v).abs() <= slack {
            return self.e;
        }
        if self.a > self.c && y >= self.c - slack && y <= self.a + slack {
            return self.e * (y.clamp(self.c, self.a) - self.c) / (self.a - self.c);
        }
        if self.d > self.b && y >= self.b - slack && y <= self.d + slack {
            return self.e
                + (1.0 - self.e) * (y.clamp(self.b, self.d) - self.b) / (self.d - self.b);
        }
        // value strayed into a gap: pick the nearest image point
        let mut best = (f64::INFINITY, self.e);
        let mut consider = |dist: f64, x: f64| {
            if dist < best.0 {
                best = (dist, x);
            }
        };
        consider((y - self.v).abs(), self.e);
        if self.a > self.c {
            consider((y - self.c.max(self.a.min(y))).abs(), {
                let yy = y.clamp(self.c, self.a);
                self.e * (yy - self.c) / (self.a - self.c)
            });
        }
        if self.d > self.b {
            consider((y - self.b.max(self.d.min(y))).abs(), {
                let yy = y.clamp(self.b, self.d);
                self.e + (1.0 - self.e) * (yy - self.b) / (self.d - self.b)
            });
        }
        best.1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn frame() -> ScaleMap {
        ScaleMap::new(0.0, 0.25, 0.75, 1.0, 0.75, 0.5).unwrap()
    }

    #[test]
    fn forward_values() {
        let m = frame();
        // linear [0, 1/2] -> [0, 1/4]
        assert_eq!(m.forward(0.25), 0.125);
        // e maps to v by definition
        assert_eq!(m.forward(0.5), 0.75);
        assert_eq!(m.forward(1.0), 1.0);
        assert_eq!(m.forward(0.0), 0.0);
    }

    #[test]
    fn inverse_values() {
        let m = frame();
        // linear [3/4, 1] -> [1/2, 1]
        assert_eq!(m.inverse(0.875).unwrap(), 0.75);
        assert_eq!(m.inverse(0.75).unwrap(), 0.5);
        assert!(m.inverse(0.5).is_err());
    }

    #[test]
    fn round_trip_off_the_gap() {
        let m = frame();
        for i in 0..=1000 {
            let x = i as f64 / 1000.0;
            let y = m.forward(x);
            let back = if (y - m.v).abs() <= 1e-12 && x != m.e {
                // v may coincide with a; skip the convention point
                continue;
            } else {
                m.inverse(y).unwrap()
            };
            assert!((back - x).abs() <= 1e-12, "x = {x}, back = {back}");
        }
    }

    #[test]
    fn degenerate_low_piece() {
        // e = 0: only the upper piece carries mass
        let m = ScaleMap::new(0.0, 0.0, 0.5, 1.0, 0.0, 0.0).unwrap();
        assert_eq!(m.forward(0.0), 0.0);
        assert_eq!(m.forward(1.0), 1.0);
        assert_eq!(m.forward(0.5), 0.75);
        assert_eq!(m.inverse(0.75).unwrap(), 0.5);
    }

    #[test]
    fn rejects_bad_order() {
        assert!(ScaleMap::new(0.5, 0.2, 0.6, 1.0, 0.3, 0.5).is_err());
        assert!(ScaleMap::new(0.0, 0.2, 0.6, 1.0, 0.9, 0.5).is_err());
    }
}
