//! Exact rational values and slopes.

use num_rational::Ratio;
use num_traits::Zero;
use serde::{Serialize, Serializer};
use std::fmt;

/// Exact rational number.
pub type Rational = Ratio<i64>;

/// Builds `p/q` in lowest terms.
pub fn rat(p: i64, q: i64) -> Rational {
    Ratio::new(p, q)
}

/// Renders as `"p/q"`, or `"p"` when integral.
pub fn fmt_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Serde adapter writing rationals as `"p/q"` strings.
pub fn serialize_rational<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&fmt_rational(r))
}

/// Point of the extended rational line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Slope {
    Finite(Rational),
    Infinity,
}

impl Slope {
    /// Builds `p/q` projectively; `q = 0` is infinity.
    pub fn from_pair(p: i64, q: i64) -> Slope {
        if q.is_zero() {
            Slope::Infinity
        } else {
            Slope::Finite(Ratio::new(p, q))
        }
    }

    /// True for integers and infinity.
    pub fn is_integral_or_infinite(&self) -> bool {
        match self {
            Slope::Finite(r) => r.is_integer(),
            Slope::Infinity => true,
        }
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Slope::Finite(r) => f.write_str(&fmt_rational(r)),
            Slope::Infinity => f.write_str("inf"),
        }
    }
}

impl Serialize for Slope {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}
