//! Additive generators for t-norms, t-conorms and uninorms.
//!
//! A t-norm generator is continuous, strictly decreasing with g(1) = 0; a
//! t-conorm generator is continuous, strictly increasing with g(0) = 0; a
//! uninorm generator is continuous, strictly increasing with g(0) = -inf,
//! g(1) = +inf and a unique interior zero, the neutral element.

use crate::error::CoreError;
use crate::ext::ExtendedReal;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GeneratorKind {
    Tnorm,
    Tconorm,
    Uninorm,
}

impl GeneratorKind {
    pub fn name(self) -> &'static str {
        match self {
            GeneratorKind::Tnorm => "t-norm",
            GeneratorKind::Tconorm => "t-conorm",
            GeneratorKind::Uninorm => "uninorm",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum GeneratorFamily {
    /// t(x) = -ln x, generates the product t-norm.
    ProductT,
    /// t(x) = 1 - x, generates the Lukasiewicz t-norm.
    LukasiewiczT,
    /// c(x) = -ln(1 - x), generates the probabilistic sum.
    ProbSumC,
    /// c(x) = x, generates the bounded sum.
    LukasiewiczC,
    /// f(x) = ln(x / (1 - x)); neutral element 1/2.
    LogRatio,
    /// f(x) = ln(2x) on [0, 1/2], -ln(2 - 2x) on (1/2, 1]; neutral element 1/2.
    SplitLog,
    /// A base family precomposed with the increasing piecewise-linear
    /// bijection of [0,1] through (0,0), (knot_x, knot_y), (1,1).
    Composed {
        knot_x: f64,
        knot_y: f64,
        base: Box<GeneratorFamily>,
    },
}

#[derive(Clone, Debug, PartialEq)]
pub struct GeneratorSpec {
    family: GeneratorFamily,
}

impl GeneratorSpec {
    pub fn new(family: GeneratorFamily) -> Self {
        GeneratorSpec { family }
    }

    pub fn product_t() -> Self {
        Self::new(GeneratorFamily::ProductT)
    }
    pub fn lukasiewicz_t() -> Self {
        Self::new(GeneratorFamily::LukasiewiczT)
    }
    pub fn probsum_c() -> Self {
        Self::new(GeneratorFamily::ProbSumC)
    }
    pub fn lukasiewicz_c() -> Self {
        Self::new(GeneratorFamily::LukasiewiczC)
    }
    pub fn logratio() -> Self {
        Self::new(GeneratorFamily::LogRatio)
    }
    pub fn splitlog() -> Self {
        Self::new(GeneratorFamily::SplitLog)
    }

    /// Precompose with the two-piece linear bijection through (knot_x, knot_y).
    pub fn composed(self, knot_x: f64, knot_y: f64) -> Result<Self, CoreError> {
        if !(0.0 < knot_x && knot_x < 1.0) {
            return Err(CoreError::OutOfDomain(knot_x));
        }
        if !(0.0 < knot_y && knot_y < 1.0) {
            return Err(CoreError::OutOfDomain(knot_y));
        }
        Ok(Self::new(GeneratorFamily::Composed {
            knot_x,
            knot_y,
            base: Box::new(self.family),
        }))
    }

    pub fn family(&self) -> &GeneratorFamily {
        &self.family
    }

    pub fn kind(&self) -> GeneratorKind {
        fn kind_of(f: &GeneratorFamily) -> GeneratorKind {
            match f {
                GeneratorFamily::ProductT | GeneratorFamily::LukasiewiczT => GeneratorKind::Tnorm,
                GeneratorFamily::ProbSumC | GeneratorFamily::LukasiewiczC => GeneratorKind::Tconorm,
                GeneratorFamily::LogRatio | GeneratorFamily::SplitLog => GeneratorKind::Uninorm,
                GeneratorFamily::Composed { base, .. } => kind_of(base),
            }
        }
        kind_of(&self.family)
    }

    /// Generator value at x. Infinities are returned symbolically.
    pub fn eval(&self, x: f64) -> Result<ExtendedReal, CoreError> {
        if !(0.0..=1.0).contains(&x) {
            return Err(CoreError::OutOfDomain(x));
        }
        Ok(eval_family(&self.family, x))
    }

    /// Clamped inverse, total on the extended reals. Values beyond the
    /// generator range map to the corresponding endpoint of [0,1].
    pub fn pseudo_inverse(&self, s: ExtendedReal) -> f64 {
        pinv_family(&self.family, s)
    }

    /// The interior zero of a uninorm generator.
    pub fn neutral(&self) -> Option<f64> {
        match self.kind() {
            GeneratorKind::Tnorm | GeneratorKind::Tconorm => None,
            GeneratorKind::Uninorm => Some(neutral_of(&self.family)),
        }
    }
}

fn eval_family(f: &GeneratorFamily, x: f64) -> ExtendedReal {
    use ExtendedReal::*;
    match f {
        GeneratorFamily::ProductT => {
            if x == 0.0 {
                PosInf
            } else {
                Finite(-x.ln())
            }
        }
        GeneratorFamily::LukasiewiczT => Finite(1.0 - x),
        GeneratorFamily::ProbSumC => {
            if x == 1.0 {
                PosInf
            } else {
                Finite(-(1.0 - x).ln())
            }
        }
        GeneratorFamily::LukasiewiczC => Finite(x),
        GeneratorFamily::LogRatio => {
            if x == 0.0 {
                NegInf
            } else if x == 1.0 {
                PosInf
            } else {
                Finite((x / (1.0 - x)).ln())
            }
        }
        GeneratorFamily::SplitLog => {
            if x == 0.0 {
                NegInf
            } else if x == 1.0 {
                PosInf
            } else if x <= 0.5 {
                Finite((2.0 * x).ln())
            } else {
                Finite(-(2.0 - 2.0 * x).ln())
            }
        }
        GeneratorFamily::Composed {
            knot_x,
            knot_y,
            base,
        } => eval_family(base, knot_forward(*knot_x, *knot_y, x)),
    }
}

fn pinv_family(f: &GeneratorFamily, s: ExtendedReal) -> f64 {
    use ExtendedReal::*;
    let clamp = |v: f64| v.clamp(0.0, 1.0);
    match f {
        GeneratorFamily::ProductT => match s {
            NegInf => 1.0,
            PosInf => 0.0,
            Finite(s) => clamp((-s).exp()),
        },
        GeneratorFamily::LukasiewiczT => match s {
            NegInf => 1.0,
            PosInf => 0.0,
            Finite(s) => clamp(1.0 - s),
        },
        GeneratorFamily::ProbSumC => match s {
            NegInf => 0.0,
            PosInf => 1.0,
            Finite(s) => clamp(1.0 - (-s).exp()),
        },
        GeneratorFamily::LukasiewiczC => match s {
            NegInf => 0.0,
            PosInf => 1.0,
            Finite(s) => clamp(s),
        },
        GeneratorFamily::LogRatio => match s {
            NegInf => 0.0,
            PosInf => 1.0,
            // logistic inverse, stable at both tails
            Finite(s) => {
                if s >= 0.0 {
                    1.0 / (1.0 + (-s).exp())
                } else {
                    let t = s.exp();
                    t / (1.0 + t)
                }
            }
        },
        GeneratorFamily::SplitLog => match s {
            NegInf => 0.0,
            PosInf => 1.0,
            Finite(s) => {
                if s <= 0.0 {
                    0.5 * s.exp()
                } else {
                    1.0 - 0.5 * (-s).exp()
                }
            }
        },
        GeneratorFamily::Composed {
            knot_x,
            knot_y,
            base,
        } => knot_inverse(*knot_x, *knot_y, pinv_family(base, s)),
    }
}

fn neutral_of(f: &GeneratorFamily) -> f64 {
    match f {
        GeneratorFamily::LogRatio | GeneratorFamily::SplitLog => 0.5,
        GeneratorFamily::Composed {
            knot_x,
            knot_y,
            base,
        } => knot_inverse(*knot_x, *knot_y, neutral_of(base)),
        _ => unreachable!("neutral_of is only called for uninorm generators"),
    }
}

fn knot_forward(kx: f64, ky: f64, x: f64) -> f64 {
    if x <= kx {
        ky * x / kx
    } else {
        ky + (x - kx) * (1.0 - ky) / (1.0 - kx)
    }
}

fn knot_inverse(kx: f64, ky: f64, y: f64) -> f64 {
    if y <= ky {
        kx * y / ky
    } else {
        kx + (y - ky) * (1.0 - kx) / (1.0 - ky)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ExtendedReal::*;

    #[test]
    fn product_t_endpoints() {
        let g = GeneratorSpec::product_t();
        assert_eq!(g.eval(1.0).unwrap(), Finite(0.0));
        assert_eq!(g.eval(0.0).unwrap(), PosInf);
        assert_eq!(g.pseudo_inverse(PosInf), 0.0);
    }

    #[test]
    fn logratio_endpoints_and_zero() {
        let g = GeneratorSpec::logratio();
        assert_eq!(g.eval(0.0).unwrap(), NegInf);
        assert_eq!(g.eval(1.0).unwrap(), PosInf);
        // solve ln(x/(1-x)) = 0
        assert_eq!(g.pseudo_inverse(Finite(0.0)), 0.5);
        assert_eq!(g.neutral(), Some(0.5));
    }

    #[test]
    fn splitlog_zero_at_half() {
        let g = GeneratorSpec::splitlog();
        // ln(2 * 0.5) = ln 1 = 0
        assert_eq!(g.eval(0.5).unwrap(), Finite(0.0));
        assert_eq!(g.neutral(), Some(0.5));
    }

    #[test]
    fn lukasiewicz_t_clamps_large_values() {
        let g = GeneratorSpec::lukasiewicz_t();
        // pseudo-inverse of t(x) = 1 - x clamps s > 1 to 0
        assert_eq!(g.pseudo_inverse(Finite(1.7)), 0.0);
        assert_eq!(g.pseudo_inverse(Finite(-0.3)), 1.0);
    }

    #[test]
    fn domain_is_checked() {
        assert!(GeneratorSpec::product_t().eval(1.5).is_err());
        assert!(GeneratorSpec::product_t().eval(-0.1).is_err());
    }

    #[test]
    fn round_trip_all_families() {
        let gens = [
            GeneratorSpec::product_t(),
            GeneratorSpec::lukasiewicz_t(),
            GeneratorSpec::probsum_c(),
            GeneratorSpec::lukasiewicz_c(),
            GeneratorSpec::logratio(),
            GeneratorSpec::splitlog(),
            GeneratorSpec::logratio().composed(0.3, 0.6).unwrap(),
            GeneratorSpec::splitlog().composed(0.7, 0.4).unwrap(),
        ];
        for g in &gens {
            for i in 0..=1000 {
                let x = i as f64 / 1000.0;
                let back = g.pseudo_inverse(g.eval(x).unwrap());
                assert!(
                    (back - x).abs() <= 1e-12,
                    "{:?} at x = {x}: got {back}",
                    g.family()
                );
            }
        }
    }

    #[test]
    fn composed_neutral_moves_with_the_knot() {
        let g = GeneratorSpec::logratio().composed(0.3, 0.6).unwrap();
        let e = g.neutral().unwrap();
        assert!((0.0..=1.0).contains(&e));
        match g.eval(e).unwrap() {
            Finite(v) => assert!(v.abs() <= 1e-12),
            other => panic!("expected finite zero, got {other}"),
        }
    }
}
