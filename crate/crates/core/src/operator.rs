//! Evaluable binary operators on the unit square.
//!
//! An `Operator` is an immutable variant tree: generated t-norms and
//! t-conorms, their ordinal sums, representable uninorms, min/max composites,
//! s-internal uninorms and ordinal sums of uninorms. Evaluation is pure and
//! reentrant; nothing is mutated after construction.

use crate::error::CoreError;
use crate::ext::ExtendedReal;
use crate::generator::{GeneratorKind, GeneratorSpec};
use crate::ordinal::{self, OrdinalSumUninormSpec};
use crate::pseudo::PseudoFunction;
use crate::scale::ScaleMap;

/// Resolution of the NEG_INF + POS_INF clash at the corners (0,1), (1,0).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AnnihilatorMode {
    Conjunctive,
    Disjunctive,
}

impl AnnihilatorMode {
    pub fn corner_value(self) -> f64 {
        match self {
            AnnihilatorMode::Conjunctive => 0.0,
            AnnihilatorMode::Disjunctive => 1.0,
        }
    }
}

/// A t-norm (t-conorm) summand acting on [lo, hi).
#[derive(Clone, Debug)]
pub struct ScaledSummand {
    pub lo: f64,
    pub hi: f64,
    pub op: Operator,
}

#[derive(Clone, Debug)]
pub enum OperatorKind {
    Min,
    Max,
    GeneratedTnorm(GeneratorSpec),
    GeneratedTconorm(GeneratorSpec),
    OrdinalSumTnorm(Vec<ScaledSummand>),
    OrdinalSumTconorm(Vec<ScaledSummand>),
    Representable {
        gen: GeneratorSpec,
        mode: AnnihilatorMode,
    },
    UMin {
        tnorm: Box<Operator>,
        tconorm: Box<Operator>,
        e: f64,
    },
    UMax {
        tnorm: Box<Operator>,
        tconorm: Box<Operator>,
        e: f64,
    },
    SInternal {
        boundary: PseudoFunction,
    },
    OrdinalSumUninorm {
        spec: OrdinalSumUninormSpec,
        scales: Vec<ScaleMap>,
    },
    /// Rescaled restriction of `inner` to [lo, hi]^2, as an operator on [0,1]^2.
    Restricted {
        inner: Box<Operator>,
        lo: f64,
        hi: f64,
    },
    /// Inverse frame transformation of `inner`: the normalized summand living
    /// on a frame of `inner`, pulled back onto [0,1]^2.
    Rescaled {
        inner: Box<Operator>,
        map: ScaleMap,
    },
}

#[derive(Clone, Debug)]
pub struct Operator {
    kind: OperatorKind,
    neutral: f64,
}

impl Operator {
    pub(crate) fn from_parts(kind: OperatorKind, neutral: f64) -> Self {
        Operator { kind, neutral }
    }

    pub fn min() -> Self {
        Operator {
            kind: OperatorKind::Min,
            neutral: 1.0,
        }
    }

    pub fn max() -> Self {
        Operator {
            kind: OperatorKind::Max,
            neutral: 0.0,
        }
    }

    pub fn tnorm_from_generator(gen: GeneratorSpec) -> Result<Self, CoreError> {
        expect_kind(&gen, GeneratorKind::Tnorm)?;
        Ok(Operator {
            kind: OperatorKind::GeneratedTnorm(gen),
            neutral: 1.0,
        })
    }

    pub fn tconorm_from_generator(gen: GeneratorSpec) -> Result<Self, CoreError> {
        expect_kind(&gen, GeneratorKind::Tconorm)?;
        Ok(Operator {
            kind: OperatorKind::GeneratedTconorm(gen),
            neutral: 0.0,
        })
    }

    pub fn ordinal_sum_tnorm(summands: Vec<(f64, f64, Operator)>) -> Result<Self, CoreError> {
        let summands = check_scaled_summands(summands, 1.0)?;
        Ok(Operator {
            kind: OperatorKind::OrdinalSumTnorm(summands),
            neutral: 1.0,
        })
    }

    pub fn ordinal_sum_tconorm(summands: Vec<(f64, f64, Operator)>) -> Result<Self, CoreError> {
        let summands = check_scaled_summands(summands, 0.0)?;
        Ok(Operator {
            kind: OperatorKind::OrdinalSumTconorm(summands),
            neutral: 0.0,
        })
    }

    pub fn representable_uninorm(
        gen: GeneratorSpec,
        mode: AnnihilatorMode,
    ) -> Result<Self, CoreError> {
        expect_kind(&gen, GeneratorKind::Uninorm)?;
        let neutral = gen.neutral().expect("uninorm generator has a neutral");
        Ok(Operator {
            kind: OperatorKind::Representable { gen, mode },
            neutral,
        })
    }

    pub fn u_min(tnorm: Operator, tconorm: Operator, e: f64) -> Result<Self, CoreError> {
        check_composite_parts(&tnorm, &tconorm, e)?;
        Ok(Operator {
            kind: OperatorKind::UMin {
                tnorm: Box::new(tnorm),
                tconorm: Box::new(tconorm),
                e,
            },
            neutral: e,
        })
    }

    pub fn u_max(tnorm: Operator, tconorm: Operator, e: f64) -> Result<Self, CoreError> {
        check_composite_parts(&tnorm, &tconorm, e)?;
        Ok(Operator {
            kind: OperatorKind::UMax {
                tnorm: Box::new(tnorm),
                tconorm: Box::new(tconorm),
                e,
            },
            neutral: e,
        })
    }

    pub fn s_internal(boundary: PseudoFunction) -> Result<Self, CoreError> {
        if boundary.is_empty() || !boundary.strictly_decreasing(1e-9) {
            return Err(CoreError::BoundaryNotDecreasing);
        }
        let (y0, _) = boundary.value(0.0);
        let (_, y1) = boundary.value(1.0);
        if (y0 - 1.0).abs() > 1e-9 || y1.abs() > 1e-9 {
            return Err(CoreError::BoundaryNotDecreasing);
        }
        // neutral element is the fixed point of the switch curve
        let neutral = bisect_fixed_point(&boundary);
        Ok(Operator {
            kind: OperatorKind::SInternal { boundary },
            neutral,
        })
    }

    pub fn ordinal_sum_uninorm(spec: OrdinalSumUninormSpec) -> Result<Self, CoreError> {
        ordinal::build_ordinal_sum(spec)
    }

    pub(crate) fn restricted(inner: Operator, lo: f64, hi: f64, neutral: f64) -> Self {
        debug_assert!(hi > lo);
        Operator {
            kind: OperatorKind::Restricted {
                inner: Box::new(inner),
                lo,
                hi,
            },
            neutral,
        }
    }

    pub(crate) fn rescaled(inner: Operator, map: ScaleMap) -> Self {
        Operator {
            kind: OperatorKind::Rescaled {
                inner: Box::new(inner),
                map,
            },
            neutral: map.e,
        }
    }

    pub fn kind(&self) -> &OperatorKind {
        &self.kind
    }

    pub fn neutral(&self) -> f64 {
        self.neutral
    }

    pub fn is_tnorm(&self) -> bool {
        self.neutral == 1.0
    }

    pub fn is_tconorm(&self) -> bool {
        self.neutral == 0.0
    }

    pub fn is_proper_uninorm(&self) -> bool {
        self.neutral > 0.0 && self.neutral < 1.0
    }

    /// The annihilator U(1,0), always 0 or 1 for a uninorm.
    pub fn annihilator(&self) -> f64 {
        self.eval(1.0, 0.0)
    }

    pub fn is_disjunctive(&self) -> bool {
        self.annihilator() > 0.5
    }

    pub fn eval(&self, x: f64, y: f64) -> f64 {
        debug_assert!((-1e-9..=1.0 + 1e-9).contains(&x), "x = {x} outside [0,1]");
        debug_assert!((-1e-9..=1.0 + 1e-9).contains(&y), "y = {y} outside [0,1]");
        let x = x.clamp(0.0, 1.0);
        let y = y.clamp(0.0, 1.0);
        match &self.kind {
            OperatorKind::Min => x.min(y),
            OperatorKind::Max => x.max(y),
            OperatorKind::GeneratedTnorm(gen) | OperatorKind::GeneratedTconorm(gen) => {
                // t^{-1}(min(t(0), t(x) + t(y))): the pseudo-inverse clamps,
                // so the explicit min is subsumed. Same-sign generator values
                // never clash.
                let s = gen
                    .eval(x)
                    .and_then(|gx| gen.eval(y).and_then(|gy| gx.checked_add(gy)))
                    .expect("t-norm/t-conorm generator values never clash");
                gen.pseudo_inverse(s)
            }
            OperatorKind::OrdinalSumTnorm(summands) => {
                for s in summands {
                    if x >= s.lo && x < s.hi && y >= s.lo && y < s.hi {
                        let w = s.hi - s.lo;
                        return s.lo + w * s.op.eval((x - s.lo) / w, (y - s.lo) / w);
                    }
                }
                x.min(y)
            }
            OperatorKind::OrdinalSumTconorm(summands) => {
                for s in summands {
                    if x > s.lo && x <= s.hi && y > s.lo && y <= s.hi {
                        let w = s.hi - s.lo;
                        return s.lo + w * s.op.eval((x - s.lo) / w, (y - s.lo) / w);
                    }
                }
                x.max(y)
            }
            OperatorKind::Representable { gen, mode } => {
                let gx = gen.eval(x).expect("domain checked");
                let gy = gen.eval(y).expect("domain checked");
                match (gx, gy) {
                    (ExtendedReal::NegInf, ExtendedReal::PosInf)
                    | (ExtendedReal::PosInf, ExtendedReal::NegInf) => mode.corner_value(),
                    _ => {
                        let s = gx.checked_add(gy).expect("clash handled above");
                        if let (Some(a), Some(b), ExtendedReal::Finite(sum)) =
                            (gx.as_f64(), gy.as_f64(), s)
                        {
                            // a rounding-level sum means the point sits on the
                            // U = e curve; snap to the neutral so downstream
                            // frame maps land on the designated side
                            if sum.abs() <= 8.0 * f64::EPSILON * (1.0 + a.abs() + b.abs()) {
                                return self.neutral;
                            }
                        }
                        gen.pseudo_inverse(s)
                    }
                }
            }
            OperatorKind::UMin { tnorm, tconorm, e } => {
                let e = *e;
                if x <= e && y <= e && e > 0.0 {
                    e * tnorm.eval(x / e, y / e)
                } else if x >= e && y >= e && e < 1.0 {
                    e + (1.0 - e) * tconorm.eval((x - e) / (1.0 - e), (y - e) / (1.0 - e))
                } else if e == 0.0 && x == 0.0 && y == 0.0 {
                    0.0
                } else if e == 1.0 && x == 1.0 && y == 1.0 {
                    1.0
                } else {
                    x.min(y)
                }
            }
            OperatorKind::UMax { tnorm, tconorm, e } => {
                let e = *e;
                if x <= e && y <= e && e > 0.0 {
                    e * tnorm.eval(x / e, y / e)
                } else if x >= e && y >= e && e < 1.0 {
                    e + (1.0 - e) * tconorm.eval((x - e) / (1.0 - e), (y - e) / (1.0 - e))
                } else if e == 0.0 && x == 0.0 && y == 0.0 {
                    0.0
                } else if e == 1.0 && x == 1.0 && y == 1.0 {
                    1.0
                } else {
                    x.max(y)
                }
            }
            OperatorKind::SInternal { boundary } => {
                // consult the curve at the smaller argument so that the
                // rounded comparison is identical for (x, y) and (y, x)
                let (p, q) = (x.min(y), x.max(y));
                if q > boundary.value_mid(p) {
                    q
                } else {
                    // below the curve, and ties on it: conjunctive-leaning
                    p
                }
            }
            OperatorKind::OrdinalSumUninorm { spec, scales } => {
                ordinal::eval_ordinal_sum(spec, scales, x, y)
            }
            OperatorKind::Restricted { inner, lo, hi } => {
                let w = hi - lo;
                ((inner.eval(lo + w * x, lo + w * y) - lo) / w).clamp(0.0, 1.0)
            }
            OperatorKind::Rescaled { inner, map } => {
                let value = inner.eval(map.forward(x), map.forward(y));
                map.inverse_clamped(value, 1e-9)
            }
        }
    }
}

fn expect_kind(gen: &GeneratorSpec, expected: GeneratorKind) -> Result<(), CoreError> {
    if gen.kind() == expected {
        Ok(())
    } else {
        Err(CoreError::GeneratorKind {
            expected: expected.name(),
            found: gen.kind().name(),
        })
    }
}

fn check_composite_parts(tnorm: &Operator, tconorm: &Operator, e: f64) -> Result<(), CoreError> {
    if !tnorm.is_tnorm() {
        return Err(CoreError::OperatorKind(
            "expected a t-norm (neutral 1)".into(),
        ));
    }
    if !tconorm.is_tconorm() {
        return Err(CoreError::OperatorKind(
            "expected a t-conorm (neutral 0)".into(),
        ));
    }
    if !(0.0..=1.0).contains(&e) {
        return Err(CoreError::OutOfDomain(e));
    }
    Ok(())
}

fn check_scaled_summands(
    summands: Vec<(f64, f64, Operator)>,
    expected_neutral: f64,
) -> Result<Vec<ScaledSummand>, CoreError> {
    let mut out: Vec<ScaledSummand> = summands
        .into_iter()
        .map(|(lo, hi, op)| ScaledSummand { lo, hi, op })
        .collect();
    out.sort_by(|p, q| p.lo.total_cmp(&q.lo));
    for s in &out {
        if !(0.0 <= s.lo && s.lo < s.hi && s.hi <= 1.0) {
            return Err(CoreError::BadSummandIntervals(format!(
                "({}, {}) is not a non-empty open subinterval of [0,1]",
                s.lo, s.hi
            )));
        }
        if s.op.neutral() != expected_neutral {
            return Err(CoreError::OperatorKind(format!(
                "summand on ({}, {}) has neutral {}, expected {}",
                s.lo,
                s.hi,
                s.op.neutral(),
                expected_neutral
            )));
        }
    }
    for w in out.windows(2) {
        if w[1].lo < w[0].hi {
            return Err(CoreError::BadSummandIntervals(format!(
                "({}, {}) overlaps ({}, {})",
                w[0].lo, w[0].hi, w[1].lo, w[1].hi
            )));
        }
    }
    Ok(out)
}

fn bisect_fixed_point(boundary: &PseudoFunction) -> f64 {
    // v(0) = 1 > 0 and v(1) = 0 < 1; v decreasing, so v(x) - x crosses zero once
    let (mut lo, mut hi) = (0.0_f64, 1.0_f64);
    for _ in 0..100 {
        let mid = 0.5 * (lo + hi);
        if boundary.value_mid(mid) > mid {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}
