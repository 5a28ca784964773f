//! Scalar abstraction: every numeric routine in this crate is generic over
//! [`Real`], which in practice means `f32` or `f64`.

use std::fmt::{Debug, Display};

use num_traits::{Float, FromPrimitive};

/// Floating-point scalar used throughout the crate.
pub trait Real: Float + FromPrimitive + Debug + Display + Send + Sync + 'static {
    /// Converts an `f64` constant, panicking only if the target type cannot
    /// represent any finite approximation of it (never for f32/f64).
    fn of(v: f64) -> Self {
        Self::from_f64(v).expect("constant not representable")
    }

    /// Converts a node/index count.
    fn of_usize(v: usize) -> Self {
        Self::from_usize(v).expect("count not representable")
    }
}

impl Real for f32 {}
impl Real for f64 {}
