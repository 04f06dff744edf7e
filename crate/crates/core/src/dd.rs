//! Double-double arithmetic (~31 significant decimal digits).
//!
//! The orthonormal-basis construction runs classical Gram–Schmidt in the
//! monomial/moment coordinate system, where the intermediate cancellation
//! grows like the condition number of the exponential-weight moment matrix.
//! In plain `f64` the orthogonality residual floors near `7e-7` at six basis
//! functions — far above the `1e-10` bound the basis must satisfy — so the
//! coefficients are computed here in unevaluated double-`f64` sums and only
//! rounded to the target scalar at the end.
//!
//! The representation is the classical (hi, lo) pair with `|lo| <= ulp(hi)/2`;
//! the algorithms are the error-free transformations of Dekker and Knuth,
//! with products using a fused multiply-add.

use std::ops::{Add, Div, Mul, Neg, Sub};

/// A double-double value `hi + lo` with non-overlapping components.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Dd {
    /// Leading component (the correctly rounded value).
    pub hi: f64,
    /// Trailing error component.
    pub lo: f64,
}

/// Error-free sum of two doubles, no magnitude assumption (Knuth).
#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    (s, err)
}

/// Error-free sum assuming `|a| >= |b|` (Dekker).
#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let err = b - (s - a);
    (s, err)
}

/// Error-free product via fused multiply-add.
#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let err = a.mul_add(b, -p);
    (p, err)
}

impl Dd {
    /// Zero.
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    /// One.
    pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };
    /// e² to double-double precision; the moment recurrence of the basis
    /// construction is exact given this one transcendental constant.
    pub const E2: Dd = Dd {
        hi: 7.38905609893065,
        lo: 2.27230427460575e-16,
    };

    /// Renormalize a dominant/trailing pair into canonical form.
    #[inline]
    fn renorm(hi: f64, lo: f64) -> Dd {
        let (s, e) = quick_two_sum(hi, lo);
        Dd { hi: s, lo: e }
    }

    /// Round to the nearest `f64`.
    #[inline]
    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    /// Square root by one dd-precision Newton correction of the `f64` root.
    pub fn sqrt(self) -> Dd {
        if self.hi == 0.0 {
            return Dd::ZERO;
        }
        debug_assert!(self.hi > 0.0, "sqrt of negative double-double");
        let y0 = self.hi.sqrt();
        let y = Dd::from(y0);
        // y + (self - y^2) / (2 y0): the correction is already O(eps^2).
        let r = self - y * y;
        y + Dd::renorm(r.hi / (2.0 * y0), r.lo / (2.0 * y0))
    }

    /// Absolute value.
    pub fn abs(self) -> Dd {
        if self.hi < 0.0 || (self.hi == 0.0 && self.lo < 0.0) {
            -self
        } else {
            self
        }
    }
}

impl From<f64> for Dd {
    fn from(v: f64) -> Self {
        Dd { hi: v, lo: 0.0 }
    }
}

impl Add for Dd {
    type Output = Dd;
    fn add(self, rhs: Dd) -> Dd {
        let (s, e) = two_sum(self.hi, rhs.hi);
        Dd::renorm(s, e + self.lo + rhs.lo)
    }
}

impl Sub for Dd {
    type Output = Dd;
    fn sub(self, rhs: Dd) -> Dd {
        self + (-rhs)
    }
}

impl Neg for Dd {
    type Output = Dd;
    fn neg(self) -> Dd {
        Dd {
            hi: -self.hi,
            lo: -self.lo,
        }
    }
}

impl Mul for Dd {
    type Output = Dd;
    fn mul(self, rhs: Dd) -> Dd {
        let (p, e) = two_prod(self.hi, rhs.hi);
        Dd::renorm(p, e + self.hi * rhs.lo + self.lo * rhs.hi)
    }
}

impl Mul<f64> for Dd {
    type Output = Dd;
    fn mul(self, rhs: f64) -> Dd {
        let (p, e) = two_prod(self.hi, rhs);
        Dd::renorm(p, e + self.lo * rhs)
    }
}

impl Div for Dd {
    type Output = Dd;
    fn div(self, rhs: Dd) -> Dd {
        // Long division with two refinement steps (QD-library scheme):
        // each step removes one f64's worth of residual.
        let q1 = self.hi / rhs.hi;
        let r1 = self - rhs * Dd::from(q1);
        let q2 = r1.hi / rhs.hi;
        let r2 = r1 - rhs * Dd::from(q2);
        let q3 = r2.hi / rhs.hi;
        Dd::renorm(q1, q2) + Dd::from(q3)
    }
}

impl Div<f64> for Dd {
    type Output = Dd;
    fn div(self, rhs: f64) -> Dd {
        self / Dd::from(rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// A trailing bit far below f64 precision survives a dd round trip.
    #[test]
    fn keeps_sub_epsilon_tail() {
        let tiny = (2.0f64).powi(-80);
        let x = Dd::ONE + Dd::from(tiny);
        let back = x - Dd::ONE;
        assert_eq!(back.to_f64(), tiny);
    }

    /// (1 + 2^-30)^2 = 1 + 2^-29 + 2^-60, all three terms recoverable.
    #[test]
    fn squares_exactly() {
        let x = Dd::ONE + Dd::from((2.0f64).powi(-30));
        let sq = x * x;
        let expect_tail = (2.0f64).powi(-29) + (2.0f64).powi(-60);
        let tail = sq - Dd::ONE;
        assert!((tail.to_f64() - expect_tail).abs() < 1e-25);
    }

    /// Division round-trips: (x / y) * y == x to ~1e-30.
    #[test]
    fn division_round_trips() {
        let x = Dd::from(std::f64::consts::PI);
        let y = Dd::from(3.0) + Dd::from(1e-20);
        let z = (x / y) * y - x;
        assert!(z.to_f64().abs() < 1e-29, "residual {}", z.to_f64());
    }

    /// sqrt(2)^2 - 2 vanishes to dd precision.
    #[test]
    fn sqrt_newton_converges() {
        let two = Dd::from(2.0);
        let r = two.sqrt() * two.sqrt() - two;
        assert!(r.to_f64().abs() < 1e-30, "residual {}", r.to_f64());
    }

    /// The embedded e^2 constant matches f64's best value and carries a tail.
    #[test]
    fn e_squared_constant_is_consistent() {
        let e2_f64 = std::f64::consts::E * std::f64::consts::E;
        assert!((Dd::E2.hi - e2_f64).abs() <= 4.0 * f64::EPSILON * e2_f64);
        assert!(Dd::E2.lo.abs() < f64::EPSILON * Dd::E2.hi);
        // hi must be the nearest f64 to e^2, so |lo| <= ulp(hi)/2.
        assert!(Dd::E2.lo.abs() <= 0.5 * Dd::E2.hi * f64::EPSILON);
    }
}
