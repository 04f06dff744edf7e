//! Generic scalar abstraction.
//!
//! Every numerical routine in this crate is generic over a floating-point
//! scalar [`Real`] so the same code instantiates at `f32` and `f64`.
//! Tolerance-grade computations (the acceptance thresholds, the basis
//! orthogonality bounds) are stated for `f64`; the `f32` instantiation is
//! provided for callers that trade precision for footprint, with
//! construction-time guards that scale with the type's epsilon.

use num_complex::Complex;
use num_traits::{Float, FloatConst, FromPrimitive, NumAssign, ToPrimitive};

/// Floating-point scalar usable throughout the crate.
///
/// The supertraits cover arithmetic (`Float`, `NumAssign`), the math
/// constants (`FloatConst`), and lossless-enough conversion from the `f64`
/// literals in which defaults and tabulated quadrature nodes are stated.
pub trait Real:
    Float
    + FloatConst
    + FromPrimitive
    + ToPrimitive
    + NumAssign
    + std::iter::Sum
    + std::fmt::Debug
    + std::fmt::Display
    + std::fmt::LowerExp
    + Send
    + Sync
    + 'static
{
    /// Convert an `f64` constant into `Self`, rounding once.
    ///
    /// Panics only if the target type cannot represent the value at all,
    /// which cannot happen for finite inputs at `f32`/`f64`.
    fn of(v: f64) -> Self {
        Self::from_f64(v).expect("finite f64 converts to any Real")
    }

    /// Lossy view of `self` as `f64` (exact for `f32` and `f64`).
    fn as_f64(self) -> f64 {
        self.to_f64().expect("Real converts to f64")
    }
}

impl Real for f32 {}
impl Real for f64 {}

/// Complex number over the crate scalar.
pub type Cplx<T> = Complex<T>;

/// Shorthand constructor for a complex value.
#[inline]
pub fn cplx<T: Real>(re: T, im: T) -> Cplx<T> {
    Complex::new(re, im)
}

/// The imaginary unit.
#[inline]
pub fn i<T: Real>() -> Cplx<T> {
    Complex::new(T::zero(), T::one())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conversion_round_trips_at_f64() {
        let x = <f64 as Real>::of(0.123_456_789_012_345_6);
        assert_eq!(x, 0.123_456_789_012_345_6);
        assert_eq!(x.as_f64(), 0.123_456_789_012_345_6);
    }

    #[test]
    fn imaginary_unit_squares_to_minus_one() {
        let unit = i::<f64>();
        let sq = unit * unit;
        assert_eq!(sq, cplx(-1.0, 0.0));
    }

    #[test]
    fn f32_instantiation_compiles_and_converts() {
        let x = <f32 as Real>::of(1.5);
        assert_eq!(x, 1.5f32);
    }
}
