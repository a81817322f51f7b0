use std::fmt;

use crate::error::{ensure, Result};

/// Membership level α in `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct AlphaLevel(f64);

impl AlphaLevel {
    pub const ZERO: AlphaLevel = AlphaLevel(0.0);
    pub const ONE: AlphaLevel = AlphaLevel(1.0);

    pub fn new(alpha: f64) -> Result<Self> {
        ensure((0.0..=1.0).contains(&alpha), "0 <= alpha <= 1", || {
            format!("alpha = {alpha}")
        })?;
        Ok(AlphaLevel(alpha))
    }

    /// Caller guarantees `alpha` lies in `[0, 1]`.
    pub(crate) fn new_unchecked(alpha: f64) -> Self {
        debug_assert!((0.0..=1.0).contains(&alpha));
        AlphaLevel(alpha)
    }

    #[inline]
    pub fn value(self) -> f64 {
        self.0
    }
}

impl fmt::Display for AlphaLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "α={}", self.0)
    }
}
