use thiserror::Error;

/// Errors raised by construction and evaluation in this crate.
#[derive(Debug, Error)]
pub enum CoreError {
    #[error("adding opposite infinities requires an explicit annihilator policy")]
    OppositeInfinities,

    #[error("argument {0} lies outside [0,1]")]
    OutOfDomain(f64),

    #[error("generator kind mismatch: expected a {expected} generator, got a {found} generator")]
    GeneratorKind {
        expected: &'static str,
        found: &'static str,
    },

    #[error("scale inverse undefined at {0}: value falls in the image gap")]
    ScaleInverseDomain(f64),

    #[error("invalid scale map: {0}")]
    InvalidScaleMap(String),

    #[error("ordinal sum summand intervals must be open, non-empty and pairwise disjoint: {0}")]
    BadSummandIntervals(String),

    #[error("operator has the wrong kind: {0}")]
    OperatorKind(String),

    #[error("invalid ordinal sum spec:\n{0}")]
    InvalidSpec(String),

    #[error(
        "boundary curve must be continuous, strictly decreasing with endpoints (0,1) and (1,0)"
    )]
    BoundaryNotDecreasing,

    #[error("cannot resolve the scale value v at boundary b = {0}: no successor summand and no override")]
    UnresolvedBoundary(f64),

    #[error("neutral element {0} is not interior; operator already is a t-norm or t-conorm")]
    NotProper(f64),

    #[error("summand frame ({a}, {b}, {c}, {d}) is degenerate on one side")]
    DegenerateFrame { a: f64, b: f64, c: f64, d: f64 },

    #[error("interval ({lo}, {hi}) cannot be paired: r maps its endpoints to ({r_hi}, {r_lo}) but no matching interval exists")]
    UnpairedInterval {
        lo: f64,
        hi: f64,
        r_lo: f64,
        r_hi: f64,
    },

    #[error("frame ({a}, {b}, {c}, {d}) is not closed under the operator: U({x}, {y}) = {value}")]
    ClosureViolation {
        a: f64,
        b: f64,
        c: f64,
        d: f64,
        x: f64,
        y: f64,
        value: f64,
    },

    #[error("decomposition result carries diagnostics and cannot be recomposed: {0}")]
    Refused(String),
}
