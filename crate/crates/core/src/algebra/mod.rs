//! Exact scalars in ℚ(√5) and the small dense linear algebra built on them.

mod matrix;
mod scalar;

pub use matrix::{dot, in_span, Matrix, SpanTester, Vector};
pub use scalar::Scalar;
