use std::fmt;

use serde::{Serialize, Serializer};

/// An integer extended by `±∞`, used for `indeg`, `end` and `v`.
///
/// The derived ordering puts `NegInf < Finite(_) < PosInf`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtInt {
    NegInf,
    Finite(i64),
    PosInf,
}

impl ExtInt {
    pub fn finite(self) -> Option<i64> {
        match self {
            ExtInt::Finite(v) => Some(v),
            _ => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, ExtInt::Finite(_))
    }

    /// Adds a finite offset; infinities absorb it.
    pub fn offset(self, h: i64) -> ExtInt {
        match self {
            ExtInt::Finite(v) => ExtInt::Finite(v + h),
            other => other,
        }
    }
}

impl From<i64> for ExtInt {
    fn from(v: i64) -> Self {
        ExtInt::Finite(v)
    }
}

impl fmt::Display for ExtInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtInt::NegInf => f.write_str("-inf"),
            ExtInt::Finite(v) => write!(f, "{v}"),
            ExtInt::PosInf => f.write_str("inf"),
        }
    }
}

impl Serialize for ExtInt {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            ExtInt::Finite(v) => s.serialize_i64(*v),
            ExtInt::PosInf => s.serialize_str("inf"),
            ExtInt::NegInf => s.serialize_str("-inf"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ordering_and_sentinels() {
        assert!(ExtInt::NegInf < ExtInt::Finite(i64::MIN));
        assert!(ExtInt::Finite(i64::MAX) < ExtInt::PosInf);
        assert_eq!(ExtInt::PosInf.to_string(), "inf");
        assert_eq!(ExtInt::NegInf.to_string(), "-inf");
        assert_eq!(serde_json::to_string(&ExtInt::Finite(7)).unwrap(), "7");
        assert_eq!(serde_json::to_string(&ExtInt::PosInf).unwrap(), "\"inf\"");
        assert_eq!(ExtInt::PosInf.offset(3), ExtInt::PosInf);
    }
}
