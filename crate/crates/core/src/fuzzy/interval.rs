use std::fmt;
use std::ops::{Add, Sub};

use crate::error::{ensure, Result};

/// Closed real interval `[lo, hi]` with `lo <= hi`.
///
/// Addition and subtraction are always defined. Multiplication and division
/// are only defined for strictly positive operands; outside that regime they
/// return a domain error rather than an extended result.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    lo: f64,
    hi: f64,
}

impl Interval {
    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        ensure(
            lo.is_finite() && hi.is_finite(),
            "finite interval endpoints",
            || format!("[{lo}, {hi}]"),
        )?;
        ensure(lo <= hi, "lo <= hi", || format!("[{lo}, {hi}]"))?;
        Ok(Interval { lo, hi })
    }

    /// Degenerate interval `[x, x]`.
    pub fn point(x: f64) -> Self {
        Interval { lo: x, hi: x }
    }

    pub(crate) fn from_ordered(lo: f64, hi: f64) -> Self {
        debug_assert!(lo <= hi, "[{lo}, {hi}]");
        Interval { lo, hi }
    }

    #[inline]
    pub fn lo(&self) -> f64 {
        self.lo
    }

    #[inline]
    pub fn hi(&self) -> f64 {
        self.hi
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    /// Signed distance of the interval to the origin, the mean of its endpoints.
    pub fn signed_distance(&self) -> f64 {
        0.5 * (self.lo + self.hi)
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }

    pub fn is_subset_of(&self, other: &Interval) -> bool {
        other.lo <= self.lo && self.hi <= other.hi
    }

    /// `k·[a, b]`; the endpoints swap for negative `k` and `k = 0` gives `[0, 0]`.
    pub fn scale(&self, k: f64) -> Interval {
        if k > 0.0 {
            Interval::from_ordered(k * self.lo, k * self.hi)
        } else if k < 0.0 {
            Interval::from_ordered(k * self.hi, k * self.lo)
        } else {
            Interval::point(0.0)
        }
    }

    /// `[a, b]·[c, d] = [ac, bd]`, defined for `a > 0` and `c > 0`.
    pub fn mul(&self, rhs: &Interval) -> Result<Interval> {
        self.require_positive(rhs, "interval multiplication")?;
        Ok(Interval::from_ordered(self.lo * rhs.lo, self.hi * rhs.hi))
    }

    /// `[a, b]÷[c, d] = [a/d, b/c]`, defined for `a > 0` and `c > 0`.
    pub fn div(&self, rhs: &Interval) -> Result<Interval> {
        self.require_positive(rhs, "interval division")?;
        Ok(Interval::from_ordered(self.lo / rhs.hi, self.hi / rhs.lo))
    }

    fn require_positive(&self, rhs: &Interval, op: &str) -> Result<()> {
        ensure(
            self.lo > 0.0 && rhs.lo > 0.0,
            "positive operands (a > 0, c > 0)",
            || format!("{op} of {self} and {rhs}"),
        )
    }
}

impl Add for Interval {
    type Output = Interval;

    fn add(self, rhs: Interval) -> Interval {
        Interval::from_ordered(self.lo + rhs.lo, self.hi + rhs.hi)
    }
}

impl Sub for Interval {
    type Output = Interval;

    /// `[a, b] - [c, d] = [a - d, b - c]`.
    fn sub(self, rhs: Interval) -> Interval {
        Interval::from_ordered(self.lo - rhs.hi, self.hi - rhs.lo)
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}
