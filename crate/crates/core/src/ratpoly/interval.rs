use std::fmt;

use num_traits::{One, Zero};

use super::rational::Rational;
use crate::error::{Error, Result};

/// An integration path `[a, b]` with rational endpoints, `a != b`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Interval {
    a: Rational,
    b: Rational,
}

impl Interval {
    pub fn new(a: Rational, b: Rational) -> Result<Self> {
        if a == b {
            return Err(Error::DegenerateInterval(a.to_string()));
        }
        Ok(Self { a, b })
    }

    /// `[0, 1]`, the normalization used for all Chebyshev work.
    pub fn unit() -> Self {
        Self {
            a: Rational::zero(),
            b: Rational::one(),
        }
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.a, self.b)
    }
}
