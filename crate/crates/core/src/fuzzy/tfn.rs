use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::{AlphaLevel, Interval};
use crate::error::{ensure, Result};

/// Triangular fuzzy number `(β₁, β₂, β₃)`.
///
/// Membership rises linearly from 0 at `β₁` to 1 at the peak `β₂` and falls
/// back to 0 at `β₃`. Ties between the three points are accepted; a number
/// with `β₁ = β₂ = β₃` is the crisp fuzzy point at that value, and any tie
/// marks the number as [degenerate](Self::is_degenerate).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "[f64; 3]", into = "[f64; 3]")]
pub struct TriangularFuzzyNumber {
    beta1: f64,
    beta2: f64,
    beta3: f64,
}

impl TriangularFuzzyNumber {
    pub fn new(beta1: f64, beta2: f64, beta3: f64) -> Result<Self> {
        ensure(
            beta1.is_finite() && beta2.is_finite() && beta3.is_finite(),
            "finite triangular fuzzy number",
            || format!("({beta1}, {beta2}, {beta3})"),
        )?;
        ensure(
            beta1 <= beta2 && beta2 <= beta3,
            "beta1 <= beta2 <= beta3",
            || format!("({beta1}, {beta2}, {beta3})"),
        )?;
        Ok(TriangularFuzzyNumber {
            beta1,
            beta2,
            beta3,
        })
    }

    /// The fuzzy point `b̃`: membership 1 at `b` and 0 everywhere else.
    pub fn fuzzy_point(b: f64) -> Self {
        TriangularFuzzyNumber {
            beta1: b,
            beta2: b,
            beta3: b,
        }
    }

    /// `(center - left, center, center + right)`.
    pub fn from_spreads(center: f64, left: f64, right: f64) -> Result<Self> {
        Self::new(center - left, center, center + right)
    }

    pub fn beta1(&self) -> f64 {
        self.beta1
    }

    pub fn beta2(&self) -> f64 {
        self.beta2
    }

    pub fn beta3(&self) -> f64 {
        self.beta3
    }

    /// True unless `β₁ < β₂ < β₃` holds strictly.
    pub fn is_degenerate(&self) -> bool {
        !(self.beta1 < self.beta2 && self.beta2 < self.beta3)
    }

    pub fn is_fuzzy_point(&self) -> bool {
        self.beta1 == self.beta3
    }

    pub fn membership(&self, y: f64) -> f64 {
        let TriangularFuzzyNumber {
            beta1,
            beta2,
            beta3,
        } = *self;
        if y < beta1 || y > beta3 {
            0.0
        } else if y == beta2 {
            1.0
        } else if y < beta2 {
            (y - beta1) / (beta2 - beta1)
        } else {
            (beta3 - y) / (beta3 - beta2)
        }
    }

    /// Left endpoint of the α-cut, `β₁ + (β₂ − β₁)α`.
    pub fn lower_at(&self, alpha: AlphaLevel) -> f64 {
        (self.beta1 + (self.beta2 - self.beta1) * alpha.value()).min(self.beta2)
    }

    /// Right endpoint of the α-cut, `β₃ − (β₃ − β₂)α`.
    pub fn upper_at(&self, alpha: AlphaLevel) -> f64 {
        (self.beta3 - (self.beta3 - self.beta2) * alpha.value()).max(self.beta2)
    }

    pub fn alpha_cut(&self, alpha: AlphaLevel) -> Interval {
        Interval::from_ordered(self.lower_at(alpha), self.upper_at(alpha))
    }

    /// Closed-form signed distance to the origin, `(β₁ + 2β₂ + β₃) / 4`.
    pub fn signed_distance(&self) -> f64 {
        0.25 * (self.beta1 + 2.0 * self.beta2 + self.beta3)
    }

    /// `k(·)B̃`. Negative `k` mirrors the number; `k = 0` yields the fuzzy point `0̃`.
    pub fn scale(&self, k: f64) -> Self {
        if k > 0.0 {
            TriangularFuzzyNumber {
                beta1: k * self.beta1,
                beta2: k * self.beta2,
                beta3: k * self.beta3,
            }
        } else if k < 0.0 {
            TriangularFuzzyNumber {
                beta1: k * self.beta3,
                beta2: k * self.beta2,
                beta3: k * self.beta1,
            }
        } else {
            Self::fuzzy_point(0.0)
        }
    }
}

impl Add for TriangularFuzzyNumber {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        TriangularFuzzyNumber {
            beta1: self.beta1 + rhs.beta1,
            beta2: self.beta2 + rhs.beta2,
            beta3: self.beta3 + rhs.beta3,
        }
    }
}

impl Sub for TriangularFuzzyNumber {
    type Output = Self;

    /// Cut-wise `[a, b] − [c, d] = [a − d, b − c]`, so the outer points cross over.
    fn sub(self, rhs: Self) -> Self {
        TriangularFuzzyNumber {
            beta1: self.beta1 - rhs.beta3,
            beta2: self.beta2 - rhs.beta2,
            beta3: self.beta3 - rhs.beta1,
        }
    }
}

impl Neg for TriangularFuzzyNumber {
    type Output = Self;

    fn neg(self) -> Self {
        self.scale(-1.0)
    }
}

impl TryFrom<[f64; 3]> for TriangularFuzzyNumber {
    type Error = crate::Error;

    fn try_from([b1, b2, b3]: [f64; 3]) -> Result<Self> {
        Self::new(b1, b2, b3)
    }
}

impl From<TriangularFuzzyNumber> for [f64; 3] {
    fn from(t: TriangularFuzzyNumber) -> Self {
        [t.beta1, t.beta2, t.beta3]
    }
}

impl fmt::Display for TriangularFuzzyNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.beta1, self.beta2, self.beta3)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn tfn(a: f64, b: f64, c: f64) -> TriangularFuzzyNumber {
        TriangularFuzzyNumber::new(a, b, c).unwrap()
    }

    fn alpha(a: f64) -> AlphaLevel {
        AlphaLevel::new(a).unwrap()
    }

    #[test]
    fn membership_shape() {
        let b = tfn(1.0, 2.0, 4.0);
        assert_eq!(b.membership(3.0), 0.5);
        assert_eq!(b.membership(2.0), 1.0);
        assert_eq!(b.membership(5.0), 0.0);
        assert_eq!(b.membership(0.5), 0.0);
        assert_eq!(b.membership(1.5), 0.5);
        assert_eq!(b.membership(1.0), 0.0);
        assert_eq!(b.membership(4.0), 0.0);
    }

    #[test]
    fn fuzzy_point_membership() {
        let p = TriangularFuzzyNumber::fuzzy_point(5.0);
        assert!(p.is_degenerate() && p.is_fuzzy_point());
        assert_eq!(p.membership(5.0), 1.0);
        assert_eq!(p.membership(5.0 + 1e-9), 0.0);
        assert_eq!(p.signed_distance(), 5.0);
        assert_eq!(p.alpha_cut(alpha(0.3)), Interval::point(5.0));
    }

    #[test]
    fn half_degenerate_membership() {
        let b = tfn(1.0, 1.0, 3.0);
        assert!(b.is_degenerate() && !b.is_fuzzy_point());
        assert_eq!(b.membership(1.0), 1.0);
        assert_eq!(b.membership(2.0), 0.5);
    }

    #[test]
    fn rejects_unordered() {
        assert!(TriangularFuzzyNumber::new(2.0, 1.0, 3.0).is_err());
        assert!(TriangularFuzzyNumber::new(1.0, 3.0, 2.0).is_err());
        assert!(TriangularFuzzyNumber::new(f64::NAN, 1.0, 2.0).is_err());
        assert!(!tfn(1.0, 2.0, 3.0).is_degenerate());
    }

    #[test]
    fn alpha_cuts() {
        let b = tfn(500.0, 600.0, 700.0);
        assert_eq!(
            b.alpha_cut(AlphaLevel::ZERO),
            Interval::new(500.0, 700.0).unwrap()
        );
        assert_eq!(b.alpha_cut(AlphaLevel::ONE), Interval::point(600.0));
        assert_eq!(
            b.alpha_cut(alpha(0.5)),
            Interval::new(550.0, 650.0).unwrap()
        );
    }

    #[test]
    fn addition() {
        assert_eq!(
            tfn(500.0, 600.0, 700.0) + tfn(9.0, 10.0, 11.0),
            tfn(509.0, 610.0, 711.0)
        );
        assert_eq!(tfn(0.0, 0.0, 0.0) + tfn(1.0, 2.0, 3.0), tfn(1.0, 2.0, 3.0));
        assert_eq!(tfn(1.0, 2.0, 3.0) + tfn(4.0, 5.0, 6.0), tfn(5.0, 7.0, 9.0));
    }

    #[test]
    fn subtraction_and_scaling() {
        assert_eq!(tfn(4.0, 5.0, 6.0) - tfn(1.0, 2.0, 4.0), tfn(0.0, 3.0, 5.0));
        assert_eq!(tfn(1.0, 2.0, 4.0).scale(-2.0), tfn(-8.0, -4.0, -2.0));
        assert_eq!(
            tfn(1.0, 2.0, 4.0).scale(0.0),
            TriangularFuzzyNumber::fuzzy_point(0.0)
        );
        assert_eq!(-tfn(1.0, 2.0, 4.0), tfn(-4.0, -2.0, -1.0));
    }

    #[test]
    fn signed_distance_closed_form() {
        assert_eq!(tfn(500.0, 600.0, 700.0).signed_distance(), 600.0);
        assert_eq!(tfn(1.0, 2.0, 3.0).signed_distance(), 2.0);
        assert_eq!(tfn(1.0, 2.0, 4.0).signed_distance(), 2.25);
    }

    #[test]
    fn serde_as_triple() {
        let b = tfn(1.0, 2.0, 4.0);
        let s = serde_json::to_string(&b).unwrap();
        assert_eq!(s, "[1.0,2.0,4.0]");
        assert_eq!(
            serde_json::from_str::<TriangularFuzzyNumber>(&s).unwrap(),
            b
        );
        assert!(serde_json::from_str::<TriangularFuzzyNumber>("[3.0,2.0,1.0]").is_err());
    }

    fn any_tfn() -> impl Strategy<Value = TriangularFuzzyNumber> {
        (-1e4..1e4f64, 0.0..1e3f64, 0.0..1e3f64).prop_map(|(m, l, r)| tfn(m - l, m, m + r))
    }

    proptest! {
        #[test]
        fn membership_in_unit_range(b in any_tfn(), y in -2e4..2e4f64) {
            let mu = b.membership(y);
            prop_assert!((0.0..=1.0).contains(&mu));
        }

        #[test]
        fn cuts_are_nested(b in any_tfn(), a1 in 0.0..=1.0f64, a2 in 0.0..=1.0f64) {
            let (lo, hi) = if a1 <= a2 { (a1, a2) } else { (a2, a1) };
            prop_assert!(b.alpha_cut(alpha(hi)).is_subset_of(&b.alpha_cut(alpha(lo))));
        }

        #[test]
        fn cut_endpoints_have_membership_alpha(b in any_tfn(), a in 0.0..=1.0f64) {
            prop_assume!(b.beta2() - b.beta1() > 1.0 && b.beta3() - b.beta2() > 1.0);
            let cut = b.alpha_cut(alpha(a));
            prop_assert!((b.membership(cut.lo()) - a).abs() < 1e-9);
            prop_assert!((b.membership(cut.hi()) - a).abs() < 1e-9);
        }
    }
}
