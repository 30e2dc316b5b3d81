//! Bounded-height tableau sequences, arc diagrams with open arcs, and walks in
//! Weyl chambers and the quadrant, in exact arithmetic.
//!
//! The counting kernels are generic over [`scalar::Count`], the series code
//! over [`scalar::Ring`] and [`scalar::Field`]. The aliases below are the
//! instantiations used by the verification suites and the command line.

pub mod arcs;
pub mod chen;
pub mod error;
pub mod gentree;
pub mod involution;
pub mod partition;
pub mod scalar;
pub mod sequence;
pub mod series;
pub mod tableau;
pub mod verify;
pub mod walks;

pub use error::{Error, Result};

/// Exact nonnegative counts.
pub type BigCount = num_bigint::BigUint;
/// Exact rationals, the coefficient field of the series.
pub type Rational = num_rational::BigRational;
pub type RationalSeries = series::PowerSeries<Rational>;
/// Floating-point series, for quick numeric inspection only.
pub type FloatSeries = series::PowerSeries<f64>;
