//! Integers extended with a single `∞` element.
//!
//! Limit facts range over `ℤ ∪ {∞}`, where `∞` stands for "every integer
//! holds" regardless of whether the predicate keeps minimal or maximal
//! bounds. Arithmetic and comparisons are extended by `k < ∞`,
//! `∞ + k = ∞` and `∞ − k = ∞` for every integer `k`. There is no `−∞`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;

use num::BigInt;

/// An arbitrary-precision integer or the absorbing element `∞`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ExtendedInt {
    Finite(BigInt),
    Infinity,
}

impl ExtendedInt {
    pub fn finite(value: impl Into<BigInt>) -> Self {
        ExtendedInt::Finite(value.into())
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, ExtendedInt::Infinity)
    }

    pub fn as_finite(&self) -> Option<&BigInt> {
        match self {
            ExtendedInt::Finite(v) => Some(v),
            ExtendedInt::Infinity => None,
        }
    }

    pub fn is_positive(&self) -> bool {
        match self {
            ExtendedInt::Finite(v) => *v > BigInt::from(0),
            ExtendedInt::Infinity => true,
        }
    }
}

impl PartialOrd for ExtendedInt {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtendedInt {
    fn cmp(&self, other: &Self) -> Ordering {
        use ExtendedInt::*;
        match (self, other) {
            (Finite(a), Finite(b)) => a.cmp(b),
            (Finite(_), Infinity) => Ordering::Less,
            (Infinity, Finite(_)) => Ordering::Greater,
            (Infinity, Infinity) => Ordering::Equal,
        }
    }
}

impl Add<&ExtendedInt> for &ExtendedInt {
    type Output = ExtendedInt;

    fn add(self, rhs: &ExtendedInt) -> ExtendedInt {
        use ExtendedInt::*;
        match (self, rhs) {
            (Finite(a), Finite(b)) => Finite(a + b),
            _ => Infinity,
        }
    }
}

impl From<BigInt> for ExtendedInt {
    fn from(value: BigInt) -> Self {
        ExtendedInt::Finite(value)
    }
}

impl From<i64> for ExtendedInt {
    fn from(value: i64) -> Self {
        ExtendedInt::Finite(BigInt::from(value))
    }
}

impl fmt::Display for ExtendedInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedInt::Finite(v) => write!(f, "{}", v),
            ExtendedInt::Infinity => write!(f, "inf"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finite_below_infinity() {
        let big = ExtendedInt::finite(BigInt::from(10).pow(30));
        assert!(big < ExtendedInt::Infinity);
        assert!(ExtendedInt::finite(-5) < ExtendedInt::finite(3));
    }

    #[test]
    fn infinity_absorbs_addition() {
        let inf = ExtendedInt::Infinity;
        let k = ExtendedInt::finite(-7);
        assert_eq!(&inf + &k, ExtendedInt::Infinity);
        assert_eq!(&k + &inf, ExtendedInt::Infinity);
        assert_eq!(
            &ExtendedInt::finite(2) + &ExtendedInt::finite(3),
            ExtendedInt::finite(5)
        );
    }

    #[test]
    fn displays_inf_token() {
        assert_eq!(ExtendedInt::Infinity.to_string(), "inf");
        assert_eq!(ExtendedInt::finite(-12).to_string(), "-12");
    }
}
