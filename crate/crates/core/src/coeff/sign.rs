//! Signs in the ordered field of Puiseux series, and the `deg_min` valuation.

use std::fmt;
use std::ops::{Mul, Neg};

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Sign {
    Positive,
    Zero,
    Negative,
    Indeterminate,
}

impl Sign {
    pub fn of(r: &Rational) -> Sign {
        if r.is_zero() {
            Sign::Zero
        } else if r.is_positive() {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }

    pub fn of_i64(n: i64) -> Sign {
        match n.signum() {
            1 => Sign::Positive,
            -1 => Sign::Negative,
            _ => Sign::Zero,
        }
    }

    pub fn is_determinate(self) -> bool {
        self != Sign::Indeterminate
    }

    /// `+1`, `0` or `-1`; `None` when indeterminate.
    pub fn as_i8(self) -> Option<i8> {
        match self {
            Sign::Positive => Some(1),
            Sign::Zero => Some(0),
            Sign::Negative => Some(-1),
            Sign::Indeterminate => None,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Positive => '+',
            Sign::Zero => '0',
            Sign::Negative => '-',
            Sign::Indeterminate => '?',
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        match (self, rhs) {
            (Sign::Zero, _) | (_, Sign::Zero) => Sign::Zero,
            (Sign::Indeterminate, _) | (_, Sign::Indeterminate) => Sign::Indeterminate,
            (a, b) if a == b => Sign::Positive,
            _ => Sign::Negative,
        }
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
            s => s,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Sign::Positive => "POSITIVE",
            Sign::Zero => "ZERO",
            Sign::Negative => "NEGATIVE",
            Sign::Indeterminate => "INDETERMINATE",
        };
        f.write_str(s)
    }
}

/// Value of `deg_min`: the smallest exponent of `t` carrying a nonzero coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DegMin {
    Finite(Rational),
    Infinity,
    Indeterminate,
}

impl DegMin {
    pub fn finite(&self) -> Option<&Rational> {
        match self {
            DegMin::Finite(q) => Some(q),
            _ => None,
        }
    }
}

impl fmt::Display for DegMin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DegMin::Finite(q) => write!(f, "{q}"),
            DegMin::Infinity => f.write_str("INFINITY"),
            DegMin::Indeterminate => f.write_str("INDETERMINATE"),
        }
    }
}

/// Elements of the ordered field carrying the lowest-term machinery.
pub trait Valued {
    fn deg_min(&self) -> DegMin;

    /// The coefficient of the lowest term; `Some(0)` for zero and `None` when
    /// truncation hides it.
    fn lowest_coeff(&self) -> Option<Rational>;

    fn sign_in_e(&self) -> Sign {
        match self.lowest_coeff() {
            Some(c) => Sign::of(&c),
            None => Sign::Indeterminate,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sign_algebra() {
        assert_eq!(Sign::Negative * Sign::Negative, Sign::Positive);
        assert_eq!(Sign::Zero * Sign::Indeterminate, Sign::Zero);
        assert_eq!(Sign::Positive * Sign::Indeterminate, Sign::Indeterminate);
        assert_eq!(-Sign::Negative, Sign::Positive);
        assert_eq!(-Sign::Indeterminate, Sign::Indeterminate);
    }
}
