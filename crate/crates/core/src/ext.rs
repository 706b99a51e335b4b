//! Extended reals [-inf, inf] used as generator codomain.
//!
//! Infinities are symbolic, never floating-point overflow artifacts. The only
//! undefined operation is `NEG_INF + POS_INF`; callers that have an annihilator
//! policy resolve that clash themselves before adding.

use std::fmt;

use crate::error::CoreError;

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum ExtendedReal {
    NegInf,
    Finite(f64),
    PosInf,
}

impl ExtendedReal {
    pub fn finite(v: f64) -> Self {
        debug_assert!(v.is_finite(), "use the symbolic infinities");
        ExtendedReal::Finite(v)
    }

    pub fn is_finite(self) -> bool {
        matches!(self, ExtendedReal::Finite(_))
    }

    pub fn as_f64(self) -> Option<f64> {
        match self {
            ExtendedReal::Finite(v) => Some(v),
            _ => None,
        }
    }

    /// Total addition except for opposite infinities.
    pub fn checked_add(self, other: ExtendedReal) -> Result<ExtendedReal, CoreError> {
        use ExtendedReal::*;
        match (self, other) {
            (NegInf, PosInf) | (PosInf, NegInf) => Err(CoreError::OppositeInfinities),
            (NegInf, _) | (_, NegInf) => Ok(NegInf),
            (PosInf, _) | (_, PosInf) => Ok(PosInf),
            (Finite(a), Finite(b)) => Ok(ExtendedReal::finite(a + b)),
        }
    }
}

impl std::ops::Neg for ExtendedReal {
    type Output = ExtendedReal;

    fn neg(self) -> ExtendedReal {
        use ExtendedReal::*;
        match self {
            NegInf => PosInf,
            PosInf => NegInf,
            Finite(v) => Finite(-v),
        }
    }
}

impl From<f64> for ExtendedReal {
    fn from(v: f64) -> Self {
        ExtendedReal::finite(v)
    }
}

impl fmt::Display for ExtendedReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedReal::NegInf => write!(f, "-inf"),
            ExtendedReal::PosInf => write!(f, "+inf"),
            ExtendedReal::Finite(v) => write!(f, "{v}"),
        }
    }
}

impl PartialOrd for ExtendedReal {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        use std::cmp::Ordering::*;
        use ExtendedReal::*;
        match (self, other) {
            (NegInf, NegInf) | (PosInf, PosInf) => Some(Equal),
            (NegInf, _) | (_, PosInf) => Some(Less),
            (_, NegInf) | (PosInf, _) => Some(Greater),
            (Finite(a), Finite(b)) => a.partial_cmp(b),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn opposite_infinities_are_an_error() {
        assert!(ExtendedReal::NegInf
            .checked_add(ExtendedReal::PosInf)
            .is_err());
        assert!(ExtendedReal::PosInf
            .checked_add(ExtendedReal::NegInf)
            .is_err());
    }

    #[test]
    fn same_sign_infinities_absorb() {
        use ExtendedReal::*;
        assert_eq!(NegInf.checked_add(Finite(3.0)).unwrap(), NegInf);
        assert_eq!(PosInf.checked_add(PosInf).unwrap(), PosInf);
        assert_eq!(Finite(1.5).checked_add(Finite(-0.5)).unwrap(), Finite(1.0));
    }

    #[test]
    fn ordering() {
        use ExtendedReal::*;
        assert!(NegInf < Finite(-1e300));
        assert!(Finite(1e300) < PosInf);
        assert!(NegInf < PosInf);
    }
}
