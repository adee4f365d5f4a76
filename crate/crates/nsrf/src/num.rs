//! Scalar abstraction for the plain (non-tape) numeric kernels.
//!
//! Geometry, analytic SDFs, image metrics and mesh extraction are written
//! against this trait so they work at f32 or f64; the differentiable
//! pipeline instantiates everything at [`crate::Scalar`] (f64).

use num_traits::{Float, FromPrimitive};

/// Floating-point scalar: f32 or f64.
pub trait Real:
    Float + FromPrimitive + std::ops::AddAssign + std::ops::MulAssign + std::fmt::Debug + Send + Sync
{
    /// Lossless-enough conversion from an f64 literal.
    fn of(v: f64) -> Self {
        Self::from_f64(v).expect("f64 literal representable")
    }

    fn pi() -> Self {
        Self::of(std::f64::consts::PI)
    }
}

impl Real for f32 {}
impl Real for f64 {}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn literal_conversion_both_widths() {
        assert_eq!(f64::of(0.5), 0.5);
        assert_eq!(f32::of(0.5), 0.5f32);
        assert!((f32::pi() - std::f32::consts::PI).abs() == 0.0);
    }
}
