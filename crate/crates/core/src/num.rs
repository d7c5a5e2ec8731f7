//! Scalar abstraction for the floating-point analysis layer.
//!
//! Exact quantities (counts, margins, scaled discrepancies) stay in integer
//! or rational form elsewhere in the crate; everything that genuinely lives
//! in the reals (probability bounds, thresholds, log-space estimates) is
//! generic over this trait so it can run in `f32` or `f64`.

use std::fmt::{Debug, Display};

use num_traits::{Float, FromPrimitive};

pub trait Real: Float + FromPrimitive + Debug + Display + Copy {
    fn from_u64_exactish(v: u64) -> Self {
        Self::from_u64(v).expect("u64 representable")
    }
    fn from_f64_lossy(v: f64) -> Self {
        Self::from_f64(v).expect("f64 representable")
    }
}

impl Real for f32 {}
impl Real for f64 {}
