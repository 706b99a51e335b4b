//! Recovery of an ordinal sum representation from a black-box uninorm.
//!
//! The pipeline: verify the operator lies in the continuous-underlying class
//! with zero/one boundary rows, detect the idempotent set, carve the
//! non-idempotent gaps into anti-comonotone frame pairs using the equilibrium
//! curve, extract and classify each normalized summand, and measure the
//! recomposition error against the original operator.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::analysis::{classify, equilibrium_curve, idempotent_set, jump_locus};
use crate::error::CoreError;
use crate::operator::{Operator, OperatorKind};
use crate::ordinal::{OrdinalSumUninormSpec, SummandSpec};
use crate::scale::ScaleMap;

/// A recovered summand frame: lower interval [a, b], upper interval [c, d],
/// and how far the equilibrium curve deviated from mapping one onto the
/// other.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SummandFrame {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
    pub pairing_residual: f64,
}

impl SummandFrame {
    pub fn width(&self) -> f64 {
        (self.b - self.a) + (self.d - self.c)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SummandClass {
    /// continuous on the open square, Archimedean on both sides
    Representable,
    /// internal with a continuous strictly decreasing switch curve
    SInternal,
    /// internal without a strict switch curve, or otherwise unrecognized
    Other,
}

#[derive(Clone, Debug)]
pub struct DecompositionResult {
    pub e: f64,
    pub frames: Vec<SummandFrame>,
    pub classes: Vec<SummandClass>,
    /// each summand rescaled to the unit square
    pub normalized_ops: Vec<Operator>,
    /// max |U - recomposed| over the comparison grid; NaN when refused
    pub recomposition_error: f64,
    /// non-empty iff the operator fell outside the decomposable class
    pub diagnostics: Vec<String>,
}

impl DecompositionResult {
    pub fn refused(&self) -> bool {
        !self.diagnostics.is_empty()
    }
}

const PAIRING_TOL: f64 = 1e-4;

pub fn decompose(op: &Operator, resolution: usize) -> Result<DecompositionResult, CoreError> {
    let resolution = resolution.max(256);
    let e = op.neutral();
    let mut diagnostics = Vec::new();

    if !op.is_proper_uninorm() {
        diagnostics.push(format!("not_proper: neutral element {e} is not in (0,1)"));
    }

    let flags = classify(op, 128, 1e-6);
    if !diagnostics.is_empty() {
        return Ok(refusal(e, diagnostics));
    }
    if !flags.in_n {
        diagnostics.push("not_in_N: boundary rows are not constant zero/one".into());
    }
    if !flags.in_u {
        diagnostics.push("not_in_U: an underlying operator is discontinuous".into());
    }
    if !diagnostics.is_empty() {
        return Ok(refusal(e, diagnostics));
    }

    // discontinuities must sit on a strictly decreasing relation through
    // (e, e); a jump off any such relation cannot come from an ordinal sum
    let locus = jump_locus(op, resolution, 1e-3);
    if !locus.is_empty() {
        let pts = locus.points();
        for w in pts.windows(2) {
            if w[1].y_high > w[0].y_low + 1e-3 {
                diagnostics.push(format!(
                    "jump_locus_not_decreasing: columns at x = {} and x = {}",
                    w[0].x, w[1].x
                ));
                break;
            }
        }
    }
    if !diagnostics.is_empty() {
        return Ok(refusal(e, diagnostics));
    }

    let idem = idempotent_set(op, resolution, 1e-9);
    let lower_gaps = gap_intervals(&idem, 0.0, e);
    let upper_gaps = gap_intervals(&idem, e, 1.0);
    let mut frames = pair_intervals(op, &lower_gaps, &upper_gaps, resolution)?;
    snap_frames(&mut frames, e);

    let mut classes = Vec::with_capacity(frames.len());
    let mut normalized_ops = Vec::with_capacity(frames.len());
    for frame in &frames {
        let summand = extract_summand(op, frame)?;
        classes.push(classify_summand(&summand));
        normalized_ops.push(summand);
    }

    let mut result = DecompositionResult {
        e,
        frames,
        classes,
        normalized_ops,
        recomposition_error: f64::NAN,
        diagnostics,
    };
    let rebuilt = recompose(&result)?;
    result.recomposition_error = comparison_error(op, &rebuilt);
    Ok(result)
}

fn refusal(e: f64, diagnostics: Vec<String>) -> DecompositionResult {
    DecompositionResult {
        e,
        frames: Vec::new(),
        classes: Vec::new(),
        normalized_ops: Vec::new(),
        recomposition_error: f64::NAN,
        diagnostics,
    }
}

/// Weld measured frame endpoints onto 0, e and 1. Endpoint detection is
/// accurate to ~1e-9; without the weld, corner evaluations of the extracted
/// summands land just inside the true frame, on the discontinuity.
fn snap_frames(frames: &mut [SummandFrame], e: f64) {
    const SNAP: f64 = 1e-6;
    let snap = |x: &mut f64| {
        for target in [0.0, e, 1.0] {
            if (*x - target).abs() <= SNAP {
                *x = target;
            }
        }
    };
    for f in frames {
        snap(&mut f.a);
        snap(&mut f.b);
        snap(&mut f.c);
        snap(&mut f.d);
    }
}

/// Open maximal subintervals of [lo, hi] not covered by the idempotent set.
pub fn gap_intervals(
    idem: &crate::analysis::IdempotentReport,
    lo: f64,
    hi: f64,
) -> Vec<(f64, f64)> {
    const MIN_GAP: f64 = 1e-6;
    let mut cover: Vec<(f64, f64)> = idem
        .intervals
        .iter()
        .filter(|&&(a, b)| b >= lo - 1e-12 && a <= hi + 1e-12)
        .map(|&(a, b)| (a.max(lo), b.min(hi)))
        .collect();
    cover.sort_by(|p, q| p.0.total_cmp(&q.0));
    let mut gaps = Vec::new();
    let mut cursor = lo;
    for (a, b) in cover {
        if a - cursor > MIN_GAP {
            gaps.push((cursor, a));
        }
        cursor = cursor.max(b);
    }
    if hi - cursor > MIN_GAP {
        gaps.push((cursor, hi));
    }
    gaps
}

/// Match lower gaps in [0, e] with upper gaps in [e, 1] through the
/// equilibrium curve r: a lower gap (a, b) pairs with the upper gap that
/// contains r evaluated inside it. One-sided summands get a collapsed
/// opposite interval at the curve's value.
pub fn pair_intervals(
    op: &Operator,
    lower_gaps: &[(f64, f64)],
    upper_gaps: &[(f64, f64)],
    resolution: usize,
) -> Result<Vec<SummandFrame>, CoreError> {
    let r = equilibrium_curve(op, resolution.max(1024));
    let mut used_upper = vec![false; upper_gaps.len()];
    let mut frames = Vec::new();

    for &(a, b) in lower_gaps {
        let probe = r.value_mid(0.5 * (a + b));
        let hit = upper_gaps.iter().enumerate().position(|(j, &(c, d))| {
            !used_upper[j] && probe >= c - PAIRING_TOL && probe <= d + PAIRING_TOL
        });
        match hit {
            Some(j) => {
                used_upper[j] = true;
                let (c, d) = upper_gaps[j];
                let inset = 1e-3 * (b - a);
                let residual = (r.value_mid(a + inset) - d)
                    .abs()
                    .max((r.value_mid(b - inset) - c).abs());
                frames.push(SummandFrame {
                    a,
                    b,
                    c,
                    d,
                    pairing_residual: residual,
                });
            }
            None => {
                // t-norm-like summand: the upper side is a single point
                let c = probe.clamp(op.neutral(), 1.0);
                if upper_gaps
                    .iter()
                    .any(|&(lo, hi)| c > lo + PAIRING_TOL && c < hi - PAIRING_TOL)
                {
                    let (lo, hi) = *upper_gaps
                        .iter()
                        .find(|&&(lo, hi)| c > lo && c < hi)
                        .unwrap();
                    return Err(CoreError::UnpairedInterval {
                        lo: a,
                        hi: b,
                        r_lo: lo,
                        r_hi: hi,
                    });
                }
                frames.push(SummandFrame {
                    a,
                    b,
                    c,
                    d: c,
                    pairing_residual: 0.0,
                });
            }
        }
    }
    for (j, &(c, d)) in upper_gaps.iter().enumerate() {
        if used_upper[j] {
            continue;
        }
        // t-conorm-like summand: the lower side collapses
        let probe = r.value_mid(0.5 * (c + d)).clamp(0.0, op.neutral());
        if lower_gaps
            .iter()
            .any(|&(lo, hi)| probe > lo + PAIRING_TOL && probe < hi - PAIRING_TOL)
        {
            return Err(CoreError::UnpairedInterval {
                lo: c,
                hi: d,
                r_lo: probe,
                r_hi: probe,
            });
        }
        frames.push(SummandFrame {
            a: probe,
            b: probe,
            c,
            d,
            pairing_residual: 0.0,
        });
    }
    frames.sort_by(|p, q| p.a.total_cmp(&q.a).then(q.c.total_cmp(&p.c)));
    Ok(frames)
}

/// Rescale the operator's restriction to a frame square onto the unit
/// square. Fails when the frame is degenerate or the restriction leaks
/// outside the frame.
pub fn extract_summand(op: &Operator, frame: &SummandFrame) -> Result<Operator, CoreError> {
    let SummandFrame { a, b, c, d, .. } = *frame;
    let width = (b - a) + (d - c);
    if width <= 1e-9 {
        return Err(CoreError::DegenerateFrame { a, b, c, d });
    }
    // The value at the exact frame corner only shows up on the measure-zero
    // equilibrium curve, and measured endpoints cannot hit the corner to the
    // last bit; clamp the probe into [b, c] and weld it onto whichever
    // endpoint it approaches.
    let v_probe = op.eval(b, c).clamp(b, c);
    let v = if v_probe - b <= 1e-9 {
        b
    } else if c - v_probe <= 1e-9 {
        c
    } else {
        v_probe
    };
    let e_norm = (b - a) / width;
    let map = ScaleMap::new(a, b, c, d, v, e_norm)?;

    // closure check: values on the frame square must stay in the frame
    const CLOSURE_TOL: f64 = 1e-6;
    let n = 32;
    let samples: Vec<f64> = (0..=n)
        .flat_map(|i| {
            let t = i as f64 / n as f64;
            [a + (b - a) * t, c + (d - c) * t]
        })
        .collect();
    for &x in &samples {
        for &y in &samples {
            let value = op.eval(x, y);
            let inside = (value >= a - CLOSURE_TOL && value <= b + CLOSURE_TOL)
                || (value >= c - CLOSURE_TOL && value <= d + CLOSURE_TOL)
                || (value - v).abs() <= CLOSURE_TOL;
            if !inside {
                return Err(CoreError::ClosureViolation {
                    a,
                    b,
                    c,
                    d,
                    x,
                    y,
                    value,
                });
            }
        }
    }
    Ok(Operator::rescaled(op.clone(), map))
}

/// Classify a normalized summand by its discontinuity structure.
pub fn classify_summand(summand: &Operator) -> SummandClass {
    let flags = classify(summand, 96, 1e-6);
    if flags.internal {
        return if flags.s_internal {
            SummandClass::SInternal
        } else {
            SummandClass::Other
        };
    }
    // representable: continuous except possibly along the equilibrium curve
    // through the corners, with Archimedean underlying operators
    let locus = jump_locus(summand, 128, 1e-3);
    let corners_only = locus
        .points()
        .iter()
        .all(|p| p.x <= 1.0 / 64.0 || p.x >= 1.0 - 1.0 / 64.0);
    if corners_only && flags.in_u {
        let idem = idempotent_set(summand, 256, 1e-9);
        let archimedean = idem.intervals.iter().all(|&(lo, hi)| hi - lo <= 1e-6);
        if archimedean {
            return SummandClass::Representable;
        }
    }
    SummandClass::Other
}

/// Rebuild the operator from a decomposition. Refuses when the result
/// carries diagnostics.
pub fn recompose(result: &DecompositionResult) -> Result<Operator, CoreError> {
    if result.refused() {
        return Err(CoreError::Refused(result.diagnostics.join("; ")));
    }
    let mut summands = Vec::with_capacity(result.frames.len());
    for (frame, op) in result.frames.iter().zip(&result.normalized_ops) {
        let mut s = SummandSpec::new(frame.a, frame.b, frame.c, frame.d, op.clone());
        if let OperatorKind::Rescaled { map, .. } = op.kind() {
            s = s.with_v(map.v);
        }
        summands.push(s);
    }
    Operator::ordinal_sum_uninorm(OrdinalSumUninormSpec::new(result.e, summands))
}

/// Max |p - q| over a uniform 101x101 grid plus 100 fixed random points.
fn comparison_error(p: &Operator, q: &Operator) -> f64 {
    let mut worst = 0.0_f64;
    for i in 0..=100 {
        for j in 0..=100 {
            let (x, y) = (i as f64 / 100.0, j as f64 / 100.0);
            worst = worst.max((p.eval(x, y) - q.eval(x, y)).abs());
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..100 {
        let x: f64 = rng.gen();
        let y: f64 = rng.gen();
        worst = worst.max((p.eval(x, y) - q.eval(x, y)).abs());
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generator::GeneratorSpec;
    use crate::operator::AnnihilatorMode;

    fn two_summand_spec() -> OrdinalSumUninormSpec {
        let u1 = Operator::representable_uninorm(
            GeneratorSpec::splitlog(),
            AnnihilatorMode::Disjunctive,
        )
        .unwrap();
        let u2 = Operator::representable_uninorm(
            GeneratorSpec::logratio(),
            AnnihilatorMode::Conjunctive,
        )
        .unwrap();
        // the interior boundary 0.255 stays off the 101-point comparison
        // grid; the value exactly at a frame corner depends on the corner
        // mode of the inner summand, which endpoint measurement cannot pin
        // to the last bit
        OrdinalSumUninormSpec::new(
            0.5,
            vec![
                SummandSpec::new(0.0, 0.255, 0.76, 1.0, u1),
                SummandSpec::new(0.255, 0.5, 0.5, 0.76, u2),
            ],
        )
    }

    #[test]
    fn round_trip_two_summands() {
        let op = Operator::ordinal_sum_uninorm(two_summand_spec()).unwrap();
        let result = decompose(&op, 512).unwrap();
        assert!(!result.refused(), "{:?}", result.diagnostics);
        assert_eq!(result.frames.len(), 2);
        let f = &result.frames[0];
        assert!((f.a - 0.0).abs() <= 1e-4 && (f.b - 0.255).abs() <= 1e-4);
        assert!((f.c - 0.76).abs() <= 1e-4 && (f.d - 1.0).abs() <= 1e-4);
        let g = &result.frames[1];
        assert!((g.a - 0.255).abs() <= 1e-4 && (g.b - 0.5).abs() <= 1e-4);
        assert!((g.c - 0.5).abs() <= 1e-4 && (g.d - 0.76).abs() <= 1e-4);
        assert!(result
            .classes
            .iter()
            .all(|c| *c == SummandClass::Representable));
        assert!(
            result.recomposition_error <= 1e-6,
            "recomposition error {}",
            result.recomposition_error
        );
    }

    #[test]
    fn representable_is_one_frame() {
        let op = Operator::representable_uninorm(
            GeneratorSpec::logratio(),
            AnnihilatorMode::Conjunctive,
        )
        .unwrap();
        let result = decompose(&op, 512).unwrap();
        assert!(!result.refused(), "{:?}", result.diagnostics);
        assert_eq!(result.frames.len(), 1);
        let f = &result.frames[0];
        assert!(f.a.abs() <= 1e-6 && (f.b - 0.5).abs() <= 1e-4);
        assert!((f.c - 0.5).abs() <= 1e-4 && (f.d - 1.0).abs() <= 1e-6);
        assert_eq!(result.classes[0], SummandClass::Representable);
        assert!(result.recomposition_error <= 1e-6);
    }

    #[test]
    fn umin_composite_is_refused() {
        let t = Operator::tnorm_from_generator(GeneratorSpec::product_t()).unwrap();
        let c = Operator::tconorm_from_generator(GeneratorSpec::probsum_c()).unwrap();
        let umin = Operator::u_min(t, c, 0.5).unwrap();
        let result = decompose(&umin, 512).unwrap();
        assert!(result.refused());
        assert!(result.diagnostics.iter().any(|d| d.starts_with("not_in_N")));
        assert!(recompose(&result).is_err());
    }

    #[test]
    fn degenerate_frame_is_an_error() {
        let op = Operator::min();
        let frame = SummandFrame {
            a: 0.3,
            b: 0.3,
            c: 0.7,
            d: 0.7,
            pairing_residual: 0.0,
        };
        assert!(matches!(
            extract_summand(&op, &frame),
            Err(CoreError::DegenerateFrame { .. })
        ));
    }
}
